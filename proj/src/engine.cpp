#include "dps/engine.hpp"

#include <algorithm>

namespace dps {

Segment Segment::make(SegKind k, CuspidalGL r, HalfInt lo, HalfInt hi) {
    if (!lo.same_class(hi) || hi < lo)
        throw InvariantError("malformed segment [" + lo.str() + "," + hi.str() + "]");
    if (lo == hi) k = SegKind::Delta;
    return Segment{k, std::move(r), lo, hi};
}

std::optional<Segment> Segment::make_or_empty(SegKind k, CuspidalGL r, HalfInt lo, HalfInt hi) {
    if (!lo.same_class(hi)) throw InvariantError("segment endpoints differ by a non-integer");
    if (hi < lo) return std::nullopt;
    return make(k, std::move(r), lo, hi);
}

GLWord::GLWord(std::vector<Segment> f) : factors_(std::move(f)) {
    std::sort(factors_.begin(), factors_.end());
}

std::int64_t GLWord::degree() const {
    std::int64_t d = 0;
    for (const auto& s : factors_) d += s.length();
    return d;
}

GLWord GLWord::operator*(const GLWord& o) const {
    GLWord out;
    out.factors_.reserve(factors_.size() + o.factors_.size());
    std::merge(factors_.begin(), factors_.end(), o.factors_.begin(), o.factors_.end(),
               std::back_inserter(out.factors_));
    return out;
}

GLWord& GLWord::operator*=(const GLWord& o) { return *this = *this * o; }

bool is_cuspidal(const GAtom& a) { return std::holds_alternative<CuspidalAtom>(a); }

const std::string& base_sigma(const GAtom& a) {
    if (auto c = std::get_if<CuspidalAtom>(&a)) return c->label;
    return std::get<TemperedAtom>(a).sigma;
}

GWord rtimes(const GLWord& x, const GWord& w) { return GWord{x * w.gl, w.atom}; }

FormalSum<GLWord> operator*(const FormalSum<GLWord>& x, const FormalSum<GLWord>& y) {
    FormalSum<GLWord> out;
    for (const auto& [u, c] : x)
        for (const auto& [v, d] : y) out.add(u * v, c * d);
    return out;
}

FormalSum<GWord> operator*(const FormalSum<GLWord>& x, const FormalSum<GWord>& y) {
    FormalSum<GWord> out;
    for (const auto& [u, c] : x)
        for (const auto& [w, d] : y) out.add(rtimes(u, w), c * d);
    return out;
}

FormalSum<GLWord> expand_cuspidal_product(const Segment& s) {
    if (s.length() != 2)
        throw Unsupported("expand_cuspidal_product needs a length-two segment, got length " +
                          std::to_string(s.length()));
    FormalSum<GLWord> out;
    out.add(GLWord::of(Segment::delta(s.rho, s.lo, s.hi)), 1);
    out.add(GLWord::of(Segment::zeta(s.rho, s.lo, s.hi)), 1);
    return out;
}

std::string render(HalfInt h) { return h.str(); }

std::string render(const Cusp& c) { return "nu^" + c.e.str() + " " + c.rho.name(); }

std::string render(const Segment& s) {
    if (s.is_cuspidal()) return render(Cusp{s.rho, s.lo});
    std::string k = s.kind == SegKind::Delta ? "d" : "z";
    return k + "([" + s.lo.str() + "," + s.hi.str() + ";" + s.rho.name() + "])";
}

std::string render(const GLWord& w) {
    if (w.empty()) return "1";
    std::string out;
    for (const auto& s : w.factors()) {
        if (!out.empty()) out += " x ";
        out += render(s);
    }
    return out;
}

std::string render(const GAtom& a) {
    if (auto c = std::get_if<CuspidalAtom>(&a)) return c->label;
    const auto& t = std::get<TemperedAtom>(a);
    std::string out = t.id + "(";
    bool first = true;
    for (const auto& [k, v] : t.params) {
        if (!first) out += ",";
        out += k + "=" + v;
        first = false;
    }
    return out + ";" + t.sigma + ")";
}

std::string render(const GWord& w) {
    if (w.gl.empty()) return render(w.atom);
    return render(w.gl) + " |x| " + render(w.atom);
}

std::string render(const GLTensor& t) { return render(t.left) + " ⊗ " + render(t.right); }

std::string render(const MuTerm& t) { return render(t.left) + " ⊗ " + render(t.right); }

std::string render(const Flag& f) {
    std::string out;
    for (const auto& c : f.seq) out += render(c) + " ⊗ ";
    return out + render(f.atom);
}

std::string render_coef(const Coef& c) { return c.str(); }

}  // namespace dps
