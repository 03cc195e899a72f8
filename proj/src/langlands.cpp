#include "dps/langlands.hpp"

#include <algorithm>

namespace dps {

HalfInt e_of_delta(const Segment& s) { return midpoint(s.lo, s.hi); }

LanglandsData normalize_langlands(LanglandsData d) {
    for (const auto& s : d.deltas) {
        if (s.kind != SegKind::Delta) throw NotLanglandsError("Langlands data needs delta segments: " + render(s));
        if (e_of_delta(s) >= HalfInt(0))
            throw NotLanglandsError("non-negative exponent e = " + e_of_delta(s).str() + " for " + render(s));
    }
    std::stable_sort(d.deltas.begin(), d.deltas.end(), [](const Segment& x, const Segment& y) {
        auto ex = e_of_delta(x), ey = e_of_delta(y);
        if (ex != ey) return ex < ey;
        if (x.rho != y.rho) return x.rho < y.rho;
        if (x.lo != y.lo) return x.lo < y.lo;
        return x.hi < y.hi;
    });
    return d;
}

GWord standard_word_of(const LanglandsData& d) { return GWord{GLWord(d.deltas), d.tempered}; }

GWord standard_word_of(const SPBuilder& b) {
    if (b.x < b.alpha || !b.x.same_class(b.alpha))
        throw ParameterError("need x >= alpha with x - alpha integral (x=" + b.x.str() + ", alpha=" + b.alpha.str() + ")");
    std::vector<Segment> f;
    for (HalfInt e = b.alpha; e <= b.x; e += 1)
        f.push_back(Segment::cusp(b.rho, b.kind == SPBuilder::Kind::DeltaSp ? e : -e));
    return GWord{GLWord(std::move(f)), CuspidalAtom{b.sigma}};
}

Flag leading_jacquet_term(const LanglandsData& d) {
    Flag f{{}, d.tempered};
    for (const auto& s : d.deltas)
        for (HalfInt e = s.hi; e >= s.lo; e -= 1) f.seq.push_back({s.rho, e});
    if (auto t = std::get_if<TemperedAtom>(&d.tempered)) {
        if (!t->flag) throw OpaqueAtomError("atom " + render(d.tempered) + " has no registered flag");
        f.seq.insert(f.seq.end(), t->flag->begin(), t->flag->end());
        f.atom = CuspidalAtom{t->sigma};
    }
    return f;
}

std::string render(const LanglandsData& d) {
    std::string out = "L(";
    bool first = true;
    for (const auto& s : d.deltas) {
        if (!first) out += ", ";
        out += render(s);
        first = false;
    }
    return out + "; " + render(d.tempered) + ")";
}

namespace atoms {

namespace {

std::vector<Cusp> run(const CuspidalGL& r, HalfInt from, HalfInt to) {
    std::vector<Cusp> out;
    if (from <= to)
        for (HalfInt e = from; e <= to; e += 1) out.push_back({r, e});
    else
        for (HalfInt e = from; e >= to; e -= 1) out.push_back({r, e});
    return out;
}

const char* lattice(HalfInt a) { return a.is_integer() ? "Z" : "Z+1/2"; }

}  // namespace

GAtom cuspidal(const std::string& sigma) { return CuspidalAtom{sigma}; }

TemperedAtom tau_pm(int index, const CuspidalGL& rho0, const std::string& sigma) {
    TemperedAtom t;
    t.id = index > 0 ? "tau_1" : "tau_-1";
    t.params = {{"rho0", rho0.name()}};
    t.sigma = sigma;
    t.origin = "summand of rho0 |x| sigma, reducibility exponent 0";
    t.side_condition = index > 0 ? "labelled +1 of the two tempered summands" : "labelled -1 of the two tempered summands";
    t.support = {{rho0, 0}};
    t.flag = std::vector<Cusp>{{rho0, 0}};
    return t;
}

GAtom tau1(const CuspidalGL& rho0, HalfInt a, const std::string& sigma) {
    if (!a.is_integer()) return CuspidalAtom{sigma};
    TemperedAtom t;
    t.id = "tau(1)";
    t.params = {{"rho0", rho0.name()}};
    t.sigma = sigma;
    t.origin = "rho0 |x| sigma (irreducible, a integral)";
    t.support = {{rho0, 0}};
    t.flag = std::vector<Cusp>{{rho0, 0}};
    return t;
}

TemperedAtom tau2(const CuspidalGL& rho0, HalfInt beta, HalfInt a, const std::string& sigma) {
    TemperedAtom t;
    t.id = "tau(2)";
    t.params = {{"rho0", rho0.name()}, {"beta", beta.str()}, {"a", lattice(a)}};
    t.sigma = sigma;
    if (a.is_integer()) {
        t.origin = "subrepresentation of rho0 |x| tau', tau' strongly positive in nu^1 rho0 x ... x nu^beta rho0 |x| sigma";
        t.side_condition = "no constituent nu^1 rho0 (x) pi in the Jacquet module";
        t.support = run(rho0, 1, beta);
        t.support.insert(t.support.begin(), Cusp{rho0, 0});
    } else {
        t.origin = "strongly positive subrepresentation of nu^1/2 rho0 x ... x nu^beta rho0 |x| sigma";
        t.support = run(rho0, HalfInt::half(), beta);
        t.flag = t.support;
    }
    return t;
}

TemperedAtom tau_rho_sigma(const CuspidalGL& rho, const std::string& sigma) {
    TemperedAtom t;
    t.id = "tau(rho,sigma)";
    t.params = {{"rho", rho.name()}};
    t.sigma = sigma;
    t.origin = "tempered subrepresentation of d([-1/2,1/2;rho]) |x| sigma";
    t.side_condition = "not a subrepresentation of nu^1/2 rho x nu^1/2 rho |x| sigma";
    t.support = {{rho, HalfInt::half()}, {rho, HalfInt::half()}};
    t.flag = std::vector<Cusp>{{rho, HalfInt::half()}, {rho, -HalfInt::half()}};
    return t;
}

TemperedAtom sigma_sp(const CuspidalGL& rho, HalfInt lo, HalfInt top, const std::string& sigma) {
    if (top < lo || !lo.same_class(top)) throw ParameterError("sigma_sp needs lo <= top on one lattice");
    TemperedAtom t;
    t.id = "sigma_sp";
    t.params = {{"rho", rho.name()}, {"lo", lo.str()}, {"top", top.str()}};
    t.sigma = sigma;
    t.origin = "strongly positive subrepresentation of nu^lo rho x ... x nu^top rho |x| sigma";
    t.support = run(rho, lo, top);
    t.flag = t.support;
    return t;
}

GAtom delta_sp(const CuspidalGL& rho, HalfInt alpha, HalfInt x, const std::string& sigma) {
    if (x == alpha - 1) return CuspidalAtom{sigma};
    if (x < alpha || !x.same_class(alpha)) throw ParameterError("delta(rho,x;sigma) needs x >= alpha, x - alpha integral");
    TemperedAtom t;
    t.id = "delta";
    t.params = {{"rho", rho.name()}, {"alpha", alpha.str()}, {"x", x.str()}};
    t.sigma = sigma;
    t.origin = "strongly positive subrepresentation of nu^x rho x ... x nu^alpha rho |x| sigma";
    t.support = run(rho, alpha, x);
    t.flag = run(rho, x, alpha);
    return t;
}

TemperedAtom sigma_ds(int index, const std::string& side_condition, const std::vector<Cusp>& support,
                      const std::string& sigma) {
    TemperedAtom t;
    t.id = "sigma_ds(" + std::to_string(index) + ")";
    t.sigma = sigma;
    t.origin = "discrete series subrepresentation";
    t.side_condition = side_condition;
    t.support = support;
    return t;
}

}  // namespace atoms

}  // namespace dps
