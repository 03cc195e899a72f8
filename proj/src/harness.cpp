#include "dps/harness.hpp"

#include "dps/aubert.hpp"
#include "dps/classical_mu.hpp"
#include "dps/gl_hopf.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace dps {

std::string to_string(ClaimKind k) {
    switch (k) {
        case ClaimKind::MultiplicityEq: return "multiplicity-eq";
        case ClaimKind::MultiplicityAbsence: return "multiplicity-absence";
        case ClaimKind::LeadingTermPresent: return "leading-term-present";
        case ClaimKind::DualPairing: return "dual-pairing";
        case ClaimKind::HypothesisCheck: return "hypothesis-check";
    }
    return "?";
}

std::string to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::Pass: return "pass";
        case ClaimStatus::Fail: return "fail";
        case ClaimStatus::Assumed: return "assumed";
    }
    return "?";
}

CuspidalGL cast_rho(GroupFamily f) {
    return {"rho", f == GroupFamily::GSpinOdd ? Duality::EssSelfDual : Duality::SelfDual, false};
}

CuspidalGL cast_rho0(GroupFamily f, RhoMode m) {
    switch (m) {
        case RhoMode::Same: return cast_rho(f);
        case RhoMode::DistinctSelfDual:
            return {"rho0", f == GroupFamily::GSpinOdd ? Duality::EssSelfDual : Duality::SelfDual, false};
        case RhoMode::DistinctGeneric: return {"rho1", Duality::Generic, false};
    }
    throw std::logic_error("bad rho mode");
}

namespace {

const HalfInt kHalf = HalfInt::half();

CuspidalGL rho_of(GroupFamily f) { return cast_rho(f); }
CuspidalGL rho0_of(GroupFamily f) { return cast_rho0(f, RhoMode::DistinctSelfDual); }

std::vector<Segment> cusps(const CuspidalGL& r, HalfInt from, HalfInt to) {
    std::vector<Segment> out;
    for (HalfInt e = from; e <= to; e += 1) out.push_back(Segment::cusp(r, e));
    return out;
}

GWord word(std::vector<Segment> f, GAtom atom = CuspidalAtom{"sigma"}) { return GWord{GLWord(std::move(f)), std::move(atom)}; }

ClaimOutcome compare(const Coef& expected, const Coef& actual) {
    ClaimOutcome o;
    o.expected = expected.str();
    o.actual = actual.str();
    o.status = expected == actual ? ClaimStatus::Pass : ClaimStatus::Fail;
    if (o.status == ClaimStatus::Fail) o.diff = "expected " + o.expected + ", computed " + o.actual;
    return o;
}

ClaimOutcome at_least_one(const Coef& actual) {
    ClaimOutcome o;
    o.expected = ">=1";
    o.actual = actual.str();
    o.status = actual >= 1 ? ClaimStatus::Pass : ClaimStatus::Fail;
    if (o.status == ClaimStatus::Fail) o.diff = "pattern missing";
    return o;
}

// total multiplicity of terms nu^e r (x) (anything) with e in [lo,hi]
Coef single_cusp_left(const FormalSum<MuTerm>& mu, const CuspidalGL& r, HalfInt lo, HalfInt hi) {
    Coef total = 0;
    for (HalfInt e = lo; e <= hi; e += 1) total += total_with_left(mu, GLWord::of(Segment::cusp(r, e)));
    return total;
}

// m*-fold vs closed form on d(seg) |x| sigma
ClaimOutcome structural_oracle(const Segment& s, const DualCtx& ctx) {
    auto fold = mu_star_word(word({s}), ctx);
    auto closed = mu_star_delta_rtimes(s, mu_star_atom(CuspidalAtom{"sigma"}, ctx), ctx);
    ClaimOutcome o;
    o.expected = std::to_string(closed.size()) + " terms (closed form)";
    o.actual = std::to_string(fold.size()) + " terms (fold)";
    o.status = fold == closed ? ClaimStatus::Pass : ClaimStatus::Fail;
    if (o.status == ClaimStatus::Fail) o.diff = "fold - closed = " + render(fold - closed);
    return o;
}

std::vector<DPSParams> sample_tuples(GroupFamily fam, std::size_t n, unsigned seed) {
    GridSpec g = GridSpec::acceptance();
    g.families = {fam};
    g.modes = {RhoMode::Same, RhoMode::DistinctSelfDual};
    auto all = grid(g);
    std::mt19937 rng(seed);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min(n, all.size()));
    return all;
}

ClaimOutcome dual_pairing(GroupFamily fam, unsigned seed) {
    std::size_t ok = 0;
    const auto tuples = sample_tuples(fam, 10, seed);
    ClaimOutcome o;
    for (const auto& raw : tuples) {
        const auto p = normalize_params(raw).p;
        const auto ctx = p.ctx();
        if (aubert_standard(dps_word(p), ctx).word == dual_side(p))
            ++ok;
        else if (o.diff.empty())
            o.diff = "mismatch at " + p.str();
    }
    o.expected = std::to_string(tuples.size());
    o.actual = std::to_string(ok);
    o.status = ok == tuples.size() ? ClaimStatus::Pass : ClaimStatus::Fail;
    return o;
}

ClaimOutcome leading_term_of_case(const DPSParams& p, std::size_t index) {
    auto v = classify(p);
    if (v.irreducible || index >= v.factors.size()) {
        ClaimOutcome o;
        o.diff = "case " + v.case_id + " has no factor " + std::to_string(index);
        return o;
    }
    const auto np = normalize_params(p).p;
    return at_least_one(flag_multiplicity(dps_word(np), leading_jacquet_term(v.factors[index]), p.ctx()));
}

DPSParams tuple(GroupFamily fam, bool same, HalfInt alpha, HalfInt beta, HalfInt a, HalfInt b, HalfInt x) {
    DPSParams p;
    p.family = fam;
    p.rho = rho_of(fam);
    p.rho0 = same ? p.rho : rho0_of(fam);
    p.same = same;
    p.alpha = alpha;
    p.beta = same ? alpha : beta;
    p.a = a;
    p.b = b;
    p.x = x;
    return p;
}

std::vector<Claim> build_registry() {
    using K = ClaimKind;
    using F = GroupFamily;
    std::vector<Claim> r;
    auto add = [&](Claim c) { r.push_back(std::move(c)); };

    // Reducible beta = 0 case: d([a,b];rho0) (x) sigma occurs twice in the standard module.
    auto mult_two = [](F fam, HalfInt a, HalfInt b) {
        return [=] {
            const auto r0 = rho0_of(fam);
            const DualCtx ctx = DualCtx::for_family(fam);
            const Segment s = Segment::delta(r0, a, b);
            auto m = mult_of_constituent(word({s}), MuTerm{GLWord::of(s), word({})}, ctx, MatchMode::Constituent);
            return compare(2, m.value);
        };
    };
    const std::string two_cit = "beta = 0, a <= 0, -a < b: d([a,b];rho0) (x) sigma in mu*(d([a,b];rho0) |x| sigma), multiplicity two";
    const std::string two_down =
        "counted as a constituent of the left GL factor (a product of deltas tiling [a,b]) against sigma on the right";
    add({"c01", two_cit, K::MultiplicityEq, F::SoOdd, "(a,b) = (0,2)", two_down, {}, mult_two(F::SoOdd, 0, 2)});
    add({"c02", two_cit, K::MultiplicityEq, F::SpEven, "(a,b) = (-1,2)", two_down, {}, mult_two(F::SpEven, -1, 2)});
    add({"c03", two_cit + " (GSpin form, twisted contragredient)", K::MultiplicityEq, F::GSpinOdd, "(a,b) = (-1,3)",
         two_down, {}, mult_two(F::GSpinOdd, -1, 3)});

    // Hypothesis of the Aubert-dual embedding lemma for the DPS: mu*(zeta(rho,x;sigma) word)
    // has no nu^i rho0 (x) pi for i in [-b,-a] when rho0 is not rho.
    auto no_rho0 = [](F fam, HalfInt alpha, HalfInt x, HalfInt a, HalfInt b) {
        return [=] {
            const DualCtx ctx = DualCtx::for_family(fam);
            auto mu = mu_star_word(word(cusps(rho_of(fam), -x, -alpha)), ctx);
            return compare(0, single_cusp_left(mu, rho0_of(fam), -b, -a));
        };
    };
    const std::string hyp_cit =
        "embedding lemma for duals of zeta(c,d) |x| pi1: mu*(pi1) has no nu^i rho1 (x) pi2 for i in [c,d]";
    add({"c04", hyp_cit, K::HypothesisCheck, F::SoOdd, "pi1 = nu^-3 rho x nu^-2 rho x nu^-1 rho |x| sigma, rho1 = rho0, [c,d] = [-2,0]",
         "checked on the cuspidal standard word containing zeta(rho,x;sigma)", {}, no_rho0(F::SoOdd, 1, 3, 0, 2)});

    add({"c05",
         "beta = 0, -a < b: mu*(L(d([-b+1,-a];rho0); sigma)) has no nu^b rho0 (x) pi'",
         K::MultiplicityAbsence, F::SoOdd, "(a,b) = (-1,3)", "checked on the standard module d([-b+1,-a];rho0) |x| sigma", {},
         [] {
             const auto r0 = rho0_of(F::SoOdd);
             auto mu = mu_star_word(word({Segment::delta(r0, -2, 1)}), DualCtx::for_family(F::SoOdd));
             return compare(0, single_cusp_left(mu, r0, 3, 3));
         }});
    add({"c06", "beta = 0, -a = b: mu*(L(d([a-1,-a];rho0); sigma)) has no nu^{-a-1} rho0 (x) pi'",
         K::MultiplicityAbsence, F::SpEven, "a = -2", "checked on the standard module d([a-1,-a];rho0) |x| sigma", {},
         [] {
             const auto r0 = rho0_of(F::SpEven);
             auto mu = mu_star_word(word({Segment::delta(r0, -3, 2)}), DualCtx::for_family(F::SpEven));
             return compare(0, single_cusp_left(mu, r0, 1, 1));
         }});
    add({"c07", "a >= 1, rho0 = rho, dual computation: mu*(d([-b,-a];rho) |x| delta(rho,x-1;sigma)) has no nu^x rho (x) pi2",
         K::MultiplicityAbsence, F::SoOdd, "alpha = 1, (a,b,x) = (1,2,4)",
         "standard module with the registered Jacquet module of delta(rho,x-1;sigma)", {}, [] {
             const auto r = rho_of(F::SoOdd);
             auto w = word({Segment::delta(r, -2, -1)}, atoms::delta_sp(r, 1, 3, "sigma"));
             auto mu = mu_star_word(w, DualCtx::for_family(F::SoOdd));
             return compare(0, single_cusp_left(mu, r, 4, 4));
         }});

    // Unique nu^{x+1} rho on the left, standard word of delta(rho,x;sigma).
    add({"c08",
         "a >= 1, rho0 = rho, x < b: nu^{x+1} rho (x) pi in mu*(d([a,x+1];rho) |x| delta(rho,x;sigma)) is unique, multiplicity one",
         K::MultiplicityEq, F::SoOdd, "(alpha,a,x) = (2,2,3); engine total vs direct (i,j) enumeration of the closed form",
         "delta(rho,x;sigma) replaced by its cuspidal standard word nu^x rho x ... x nu^alpha rho |x| sigma", {}, [] {
             const auto r = rho_of(F::SoOdd);
             const HalfInt alpha = 2, a = 2, x = 3;
             std::vector<Segment> f = cusps(r, alpha, x);
             f.push_back(Segment::delta(r, a, x + 1));
             auto mu = mu_star_word(word(f), DualCtx::for_family(F::SoOdd));
             const Coef engine = total_with_left(mu, GLWord::of(Segment::cusp(r, x + 1)));
             // Direct count: (i,j) with d([-i,-a]) x d([j+1,x+1]) = nu^{x+1}; the cuspidal
             // factors of the standard word contribute their unique empty-left term.
             Coef pairs = 0;
             const HalfInt k = -a, l = x + 1;
             for (HalfInt i = -k - 1; i <= l; i += 1)
                 for (HalfInt j = i; j <= l; j += 1) {
                     GLWord left = GLWord::of(Segment::make_or_empty(SegKind::Delta, r, -i, k)) *
                                   GLWord::of(Segment::make_or_empty(SegKind::Delta, r, j + 1, l));
                     if (left == GLWord::of(Segment::cusp(r, x + 1))) ++pairs;
                 }
             auto o = compare(pairs, engine);
             if (o.status == ClaimStatus::Pass && engine != 1) {
                 o.status = ClaimStatus::Fail;
                 o.diff = "enumeration agrees but count is " + engine.str() + ", not 1";
             }
             return o;
         }});
    add({"c09",
         "a >= 1, rho0 = rho, x < b: the nu^{x+1} rho term is nu^{x+1} rho (x) d([a,x];rho) |x| delta(rho,x;sigma)",
         K::MultiplicityEq, F::SoOdd, "(alpha,a,x) = (2,2,3), registered Jacquet module of delta(rho,x;sigma)", "", {}, [] {
             const auto r = rho_of(F::SoOdd);
             auto dsp = atoms::delta_sp(r, 2, 3, "sigma");
             auto mu = mu_star_word(word({Segment::delta(r, 2, 4)}, dsp), DualCtx::for_family(F::SoOdd));
             const GLWord left = GLWord::of(Segment::cusp(r, 4));
             auto o = compare(1, total_with_left(mu, left));
             if (o.status == ClaimStatus::Pass && mu.coefficient(MuTerm{left, word({Segment::delta(r, 2, 3)}, dsp)}) != 1) {
                 o.status = ClaimStatus::Fail;
                 o.diff = "unique term has the wrong right-hand side";
             }
             return o;
         }});
    add({"c10",
         "embedding lemma proof: nu^-c rho1 (x) ... (x) nu^-d rho1 (x) pi1 occurs once in the Jacquet module of d([-d,-c];rho1) |x| pi1",
         K::LeadingTermPresent, F::SoOdd, "(c,d) = (1,3), pi1 = sigma", "", {}, [] {
             const auto r = rho0_of(F::SoOdd);
             Flag f{{{r, -1}, {r, -2}, {r, -3}}, CuspidalAtom{"sigma"}};
             return compare(1, flag_multiplicity(word({Segment::delta(r, -3, -1)}), f, DualCtx::for_family(F::SoOdd)));
         }});
    add({"c11", "a >= 1, rho0 = rho, b <= x: mu*(d([-b+1,-a];rho) |x| delta(rho,b-1;sigma)) has no nu^b rho (x) pi",
         K::MultiplicityAbsence, F::SpEven, "alpha = 1, (a,b) = (1,3)",
         "standard module with the registered Jacquet module of delta(rho,b-1;sigma)", {}, [] {
             const auto r = rho_of(F::SpEven);
             auto w = word({Segment::delta(r, -2, -1)}, atoms::delta_sp(r, 1, 2, "sigma"));
             return compare(0, single_cusp_left(mu_star_word(w, DualCtx::for_family(F::SpEven)), r, 3, 3));
         }});
    add({"c12",
         "a <= 0, rho0 = rho: nu^{-a+1} rho x nu^{-a+1} rho (x) pi' in mu*(d([a,-a+1];rho) |x| delta(rho,-a+1;sigma)) is unique, multiplicity one",
         K::MultiplicityEq, F::SoOdd, "alpha = 1, a = -1", "registered Jacquet module of delta(rho,-a+1;sigma)", {}, [] {
             const auto r = rho_of(F::SoOdd);
             auto w = word({Segment::delta(r, -1, 2)}, atoms::delta_sp(r, 1, 2, "sigma"));
             auto mu = mu_star_word(w, DualCtx::for_family(F::SoOdd));
             return compare(1, total_with_left(mu, GLWord({Segment::cusp(r, 2), Segment::cusp(r, 2)})));
         }});

    // Odd GSpin: the two Jacquet patterns separating the discrete series subrepresentations.
    auto gspin_pattern = [](F fam, HalfInt alpha, HalfInt a, HalfInt b, HalfInt x) {
        return [=] {
            const auto r = rho_of(fam);
            auto w = word({Segment::delta(r, a, b)}, atoms::delta_sp(r, alpha, x, "sigma"));
            MuTerm pat{GLWord::of(Segment::delta(r, -b, x)), word({}, atoms::delta_sp(r, alpha, -a, "sigma"))};
            return compare(1, mult_of_constituent(w, pat, DualCtx::for_family(fam), MatchMode::Constituent).value);
        };
    };
    const std::string ds_cit =
        "odd GSpin, a <= 0, rho0 = rho: d([-b,x];rho) (x) delta(rho,-a;sigma) occurs once in mu*(d([a,b];rho) |x| delta(rho,x;sigma))";
    add({"c13", ds_cit, K::MultiplicityEq, F::GSpinOdd, "alpha = 1, (a,b,x) = (-1,2,3)",
         "constituent count of d([-b,x]) in the GL block", {}, gspin_pattern(F::GSpinOdd, 1, -1, 2, 3)});
    add({"c14",
         "odd GSpin, a <= 0, rho0 = rho, alpha >= 2: d([-alpha+2,-a];rho) (x) sigma_sp occurs once in mu*(d([a,b];rho) |x| delta(rho,x;sigma))",
         K::MultiplicityEq, F::GSpinOdd, "needs the Jacquet module of the strongly positive sigma_sp", "",
         std::string("Jacquet modules of strongly positive discrete series (imported classification)"), {}});
    add({"c15", ds_cit + " (classical analogue)", K::MultiplicityEq, F::SoOdd, "alpha = 1, (a,b,x) = (-1,2,3)",
         "constituent count of d([-b,x]) in the GL block", {}, gspin_pattern(F::SoOdd, 1, -1, 2, 3)});
    add({"c16", "Aubert dual of the degenerate principal series word is the generalized principal series word",
         K::DualPairing, F::SoOdd, "10 shuffled grid tuples, seed 11", "", {}, [] { return dual_pairing(F::SoOdd, 11); }});
    add({"c17", "Aubert dual pairing, odd GSpin (twisted contragredient on the GL block)", K::DualPairing, F::GSpinOdd,
         "10 shuffled grid tuples, seed 17", "", {}, [] { return dual_pairing(F::GSpinOdd, 17); }});
    add({"c18", "zeta(rho,x;sigma) is the unique subrepresentation of nu^-x rho x ... x nu^-alpha rho |x| sigma",
         K::LeadingTermPresent, F::SoOdd, "alpha = 3/2, x = 7/2: ascending flag nu^-x ... nu^-alpha (x) sigma", "", {}, [] {
             const auto r = rho_of(F::SoOdd);
             const HalfInt alpha = HalfInt::from_twice(3), x = HalfInt::from_twice(7);
             Flag f{{}, CuspidalAtom{"sigma"}};
             for (HalfInt e = -x; e <= -alpha; e += 1) f.seq.push_back({r, e});
             return at_least_one(flag_multiplicity(word(cusps(r, -x, -alpha)), f, DualCtx::for_family(F::SoOdd)));
         }});
    add({"c19", "delta(rho,x;sigma) is the unique subrepresentation of nu^x rho x ... x nu^alpha rho |x| sigma",
         K::LeadingTermPresent, F::SpEven, "alpha = 1/2, x = 5/2: descending flag", "", {}, [] {
             const auto r = rho_of(F::SpEven);
             const HalfInt alpha = kHalf, x = HalfInt::from_twice(5);
             auto dsp = std::get<TemperedAtom>(atoms::delta_sp(r, alpha, x, "sigma"));
             Flag f{*dsp.flag, CuspidalAtom{"sigma"}};
             return at_least_one(flag_multiplicity(word(cusps(r, alpha, x)), f, DualCtx::for_family(F::SpEven)));
         }});
    add({"c20", "a <= 0, rho0 = rho, alpha >= 2: mu*(sigma_sp) has no nu^alpha rho (x) pi", K::MultiplicityAbsence,
         F::SoOdd, "sigma_sp strongly positive with support above alpha-2", "",
         std::string("Jacquet modules of strongly positive discrete series (imported classification)"), {}});
    add({"c21", hyp_cit, K::HypothesisCheck, F::SpEven, "pi1 = nu^-5/2 rho x nu^-3/2 rho |x| sigma, [c,d] = [-3/2,-1/2]",
         "checked on the cuspidal standard word containing zeta(rho,x;sigma)", {},
         no_rho0(F::SpEven, HalfInt::from_twice(3), HalfInt::from_twice(5), kHalf, HalfInt::from_twice(3))});
    add({"c22", "the dual of a cuspidal word is a subrepresentation of the word with negated exponents",
         K::DualPairing, F::SoOdd, "hat(alternating sum on nu^2 rho |x| sigma) = nu^-2 rho |x| sigma", "", {}, [] {
             const auto r = rho_of(F::SoOdd);
             auto got = hat_normalize(aubert_bruteforce(word({Segment::cusp(r, 2)}), DualCtx::for_family(F::SoOdd)));
             FormalSum<GWord> want(word({Segment::cusp(r, -2)}));
             ClaimOutcome o;
             o.expected = render(want);
             o.actual = render(got);
             o.status = got == want ? ClaimStatus::Pass : ClaimStatus::Fail;
             if (o.status == ClaimStatus::Fail) o.diff = "got " + o.actual;
             return o;
         }});
    add({"c23", hyp_cit + " (odd GSpin)", K::HypothesisCheck, F::GSpinOdd,
         "pi1 = nu^-2 rho x nu^-1 rho |x| sigma, [c,d] = [-3,-1]", "checked on the cuspidal standard word", {},
         no_rho0(F::GSpinOdd, 1, 2, 1, 3)});
    add({"c24", "structural formula, odd GSpin form: closed double sum equals the generic Hopf fold",
         K::HypothesisCheck, F::GSpinOdd, "d([-1,2];rho) |x| sigma, rho essentially self-dual", "", {}, [] {
             return structural_oracle(Segment::delta(rho_of(F::GSpinOdd), -1, 2), DualCtx::for_family(F::GSpinOdd));
         }});
    add({"c25", "a >= 1, rho0 = rho, a <= alpha-1 <= b < x: leading Jacquet term of the first factor",
         K::LeadingTermPresent, F::SpEven, "alpha = 2, (a,b,x) = (1,2,4)", "flag multiplicity in the DPS standard word", {},
         [] { return leading_term_of_case(tuple(F::SpEven, true, 2, 2, 1, 2, 4), 0); }});
    add({"c26", "a >= 1, rho0 = rho, a <= alpha-1 <= b < x: leading Jacquet term of the second factor",
         K::LeadingTermPresent, F::SpEven, "alpha = 2, (a,b,x) = (1,2,4)", "flag multiplicity in the DPS standard word", {},
         [] { return leading_term_of_case(tuple(F::SpEven, true, 2, 2, 1, 2, 4), 1); }});
    add({"c27", "a <= 0, rho0 = rho, alpha-1 <= -a < x < b: leading Jacquet term of the tau(1) factor",
         K::LeadingTermPresent, F::GSpinOdd, "alpha = 3/2, (a,b,x) = (-1/2,7/2,5/2)", "flag multiplicity in the DPS standard word", {},
         [] {
             const HalfInt al = HalfInt::from_twice(3);
             return leading_term_of_case(tuple(F::GSpinOdd, true, al, al, -kHalf, HalfInt::from_twice(7), HalfInt::from_twice(5)), 0);
         }});
    add({"c28", "structural formula: mu*(rho |x| sigma) contains rho (x) sigma twice for self-dual rho",
         K::MultiplicityEq, F::SoOdd, "k = l = 0", "", {}, [] {
             const auto r = rho_of(F::SoOdd);
             auto mu = mu_star_word(word({Segment::cusp(r, 0)}), DualCtx::for_family(F::SoOdd));
             return compare(2, mu.coefficient(MuTerm{GLWord::of(Segment::cusp(r, 0)), word({})}));
         }});
    return r;
}

}  // namespace

const std::vector<Claim>& claim_registry() {
    static const std::vector<Claim> reg = build_registry();
    return reg;
}

ClaimOutcome verify_claim(const Claim& c) {
    if (c.imported) {
        ClaimOutcome o;
        o.status = ClaimStatus::Assumed;
        o.expected = "imported";
        o.actual = "not computed: " + *c.imported;
        return o;
    }
    if (!c.check) throw std::logic_error("claim " + c.id + " has neither a check nor an import");
    try {
        return c.check();
    } catch (const std::exception& e) {
        ClaimOutcome o;
        o.status = ClaimStatus::Fail;
        o.diff = std::string("exception: ") + e.what();
        return o;
    }
}

const std::vector<ImportedFact>& imported_facts() {
    static const std::vector<ImportedFact> facts = {
        {"f01", "classification of strongly positive discrete series",
         "mu*(delta(rho,x;sigma)) = sum over t from alpha-1 to x of d([t+1,x];rho) (x) delta(rho,t;sigma)"},
        {"f02", "classification of strongly positive discrete series",
         "Jacquet modules of sigma_sp and tau(2) for non-integral a"},
        {"f03", "Jacquet-module uniqueness for rho0 |x| tau' (integral a)",
         "tau(2) is the unique subrepresentation of rho0 |x| tau' with no nu rho0 (x) pi in its Jacquet module"},
        {"f04", "Aubert duals of strongly positive discrete series",
         "duals of the tempered atoms are taken as given, not computed"},
        {"f05", "discrete series subrepresentations of d([a,b];rho) |x| delta(rho,x;sigma), odd GSpin",
         "there are exactly two, sigma_ds(1) and sigma_ds(2)"},
    };
    return facts;
}

namespace {

std::pair<CuspidalGL, HalfInt> fold_key(const CuspidalGL& r, HalfInt e, const DualCtx& ctx) {
    if (e > HalfInt(0)) return {r, e};
    if (e < HalfInt(0)) return {ctx.dual(r), -e};
    return {std::min(r, ctx.dual(r)), e};
}

void add_segment(Support& s, const Segment& g, const DualCtx& ctx) {
    for (HalfInt e = g.lo; e <= g.hi; e += 1) ++s[fold_key(g.rho, e, ctx)];
}

void add_atom(Support& s, const GAtom& a, const DualCtx& ctx) {
    if (auto t = std::get_if<TemperedAtom>(&a))
        for (const auto& c : t->support) ++s[fold_key(c.rho, c.e, ctx)];
}

}  // namespace

Support folded_support(const GWord& w, const DualCtx& ctx) {
    Support s;
    for (const auto& g : w.gl.factors()) add_segment(s, g, ctx);
    add_atom(s, w.atom, ctx);
    return s;
}

Support folded_support(const LanglandsData& d, const DualCtx& ctx) {
    Support s;
    for (const auto& g : d.deltas) add_segment(s, g, ctx);
    add_atom(s, d.tempered, ctx);
    return s;
}

FactorListReport verify_factor_list(const DPSParams& p) { return verify_factor_list(p, classify(p)); }

FactorListReport verify_factor_list(const DPSParams& p, const Verdict& v) {
    FactorListReport r;
    r.params = p;
    r.verdict = v;
    const auto np = normalize_params(p).p;
    const DualCtx ctx = p.ctx();
    const GWord dps = dps_word(np);
    const Support target = folded_support(dps, ctx);

    r.size_ok = v.length() >= 1 && v.length() <= 4 && (v.irreducible || !v.factors.empty());
    if (!r.size_ok) r.problems.push_back("verdict length " + std::to_string(v.length()));

    r.distinct = true;
    for (std::size_t i = 0; i < v.factors.size(); ++i)
        for (std::size_t j = i + 1; j < v.factors.size(); ++j)
            if (v.factors[i] == v.factors[j]) {
                r.distinct = false;
                r.problems.push_back("factors " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
            }

    r.balanced = true;
    r.leading_ok = true;
    for (const auto& d : v.factors) {
        FactorCheck fc;
        fc.factor = render(d);
        fc.balanced = folded_support(d, ctx) == target;
        if (!fc.balanced) {
            r.balanced = false;
            r.problems.push_back("support mismatch: " + fc.factor);
        }
        std::optional<Flag> flag;
        try {
            flag = leading_jacquet_term(d);
        } catch (const OpaqueAtomError&) {
        }
        if (flag) {
            fc.flag_registered = true;
            fc.leading_mult = flag_multiplicity(dps, *flag, ctx);
            if (fc.leading_mult < 1) {
                r.leading_ok = false;
                r.problems.push_back("leading term absent: " + fc.factor);
            }
        }
        r.factors.push_back(std::move(fc));
    }
    return r;
}

GridSpec GridSpec::acceptance() {
    GridSpec g;
    for (int t = 1; t <= 5; ++t) g.alphas.push_back(HalfInt::from_twice(t));
    for (int t = 0; t <= 5; ++t) g.betas.push_back(HalfInt::from_twice(t));
    return g;
}

GridSpec GridSpec::small() {
    GridSpec g;
    g.families = {GroupFamily::SoOdd};
    g.alphas = {HalfInt::half(), 1, HalfInt::from_twice(3), 2};
    g.betas = {0, HalfInt::half(), 1};
    g.a_min = -2;
    g.a_max = 2;
    g.b_max = 3;
    g.x_steps = 2;
    return g;
}

GridSpec parse_grid(const std::string& name) {
    if (name == "default" || name == "acceptance") return GridSpec::acceptance();
    if (name == "small") return GridSpec::small();
    throw std::invalid_argument("unknown grid '" + name + "' (expected default or small)");
}

std::vector<DPSParams> grid(const GridSpec& g) {
    std::vector<DPSParams> out;
    for (auto fam : g.families)
        for (auto mode : g.modes)
            for (auto alpha : g.alphas) {
                std::vector<HalfInt> betas = mode == RhoMode::Same ? std::vector<HalfInt>{alpha} : g.betas;
                for (auto beta : betas)
                    for (HalfInt a = g.a_min; a <= g.a_max; a += HalfInt::half())
                        for (HalfInt b = a; b <= g.b_max; b += 1)
                            for (int k = 0; k <= g.x_steps; ++k) {
                                DPSParams p;
                                p.family = fam;
                                p.rho = cast_rho(fam);
                                p.rho0 = cast_rho0(fam, mode);
                                p.same = mode == RhoMode::Same;
                                p.alpha = alpha;
                                p.beta = beta;
                                p.a = a;
                                p.b = b;
                                p.x = alpha + k;
                                out.push_back(p);
                            }
            }
    return out;
}

}  // namespace dps
