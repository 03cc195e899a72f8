#include "dps/classifier.hpp"

#include <functional>

namespace dps {

std::string DPSParams::str() const {
    return "family=" + to_string(family) + " rho=" + rho.name() + " rho0=" + rho0.name() +
           (same ? " same" : " distinct") + " alpha=" + alpha.str() + " beta=" + beta.str() + " a=" + a.str() +
           " b=" + b.str() + " x=" + x.str();
}

void validate_params(const DPSParams& p) {
    auto fail = [&](const std::string& why) { throw ParameterError(why + " (" + p.str() + ")"); };
    const DualCtx ctx = p.ctx();
    if (p.alpha <= HalfInt(0)) fail("alpha must be positive");
    if (p.beta < HalfInt(0)) fail("beta must be non-negative");
    if (p.x < p.alpha || !p.x.same_class(p.alpha)) fail("need x >= alpha and x - alpha integral");
    if (!p.a.same_class(p.b)) fail("b - a must be an integer");
    if (p.b < p.a) fail("need b >= a");
    if (ctx.dual(p.rho) != p.rho) fail("rho must be (essentially) self-contragredient");
    if (p.same) {
        if (p.rho0 != p.rho) fail("same=true needs rho0 = rho");
        if (p.beta != p.alpha) fail("same=true needs beta = alpha");
    } else if (p.rho0.label == p.rho.label) {
        fail("distinct mode needs rho0 different from rho");
    }
}

NormalizedParams normalize_params(const DPSParams& in) {
    validate_params(in);
    NormalizedParams np{in, false, false, {}};
    const DualCtx ctx = in.ctx();
    if (-np.p.a > np.p.b) {
        HalfInt a = np.p.a;
        np.p.a = -np.p.b;
        np.p.b = -a;
        np.p.rho0 = ctx.dual(np.p.rho0);
        np.swapped = true;
    }
    if (ctx.dual(np.p.rho0) != np.p.rho0) {
        np.early_irreducible = true;
        np.reason = "rho0 not (essentially) self-contragredient";
    } else if (!np.p.a.same_class(np.p.beta)) {
        np.early_irreducible = true;
        np.reason = np.p.same ? "a - alpha not integral" : "a - beta not integral";
    }
    return np;
}

namespace {

// Factor-list generators. All ranges step by 1 and are empty when from > to.
class FL {
public:
    FL& s(const CuspidalGL& r, HalfInt from, HalfInt to, int mult = 1) {
        check(from, to);
        for (HalfInt e = from; e <= to; e += 1)
            for (int k = 0; k < mult; ++k) d_.push_back(Segment::cusp(r, e));
        return *this;
    }
    FL& ds(const CuspidalGL& r, HalfInt from, HalfInt to) {
        check(from, to);
        for (HalfInt t = from; t <= to; t += 1) d_.push_back(Segment::delta(r, t, t + 1));
        return *this;
    }
    // d([t,t+1]), nu^{t+1}
    FL& ch1(const CuspidalGL& r, HalfInt from, HalfInt to) {
        check(from, to);
        for (HalfInt t = from; t <= to; t += 1) {
            d_.push_back(Segment::delta(r, t, t + 1));
            d_.push_back(Segment::cusp(r, t + 1));
        }
        return *this;
    }
    // nu^t, d([t,t+1])
    FL& ch2(const CuspidalGL& r, HalfInt from, HalfInt to) {
        check(from, to);
        for (HalfInt t = from; t <= to; t += 1) {
            d_.push_back(Segment::cusp(r, t));
            d_.push_back(Segment::delta(r, t, t + 1));
        }
        return *this;
    }
    FL& d3s(const CuspidalGL& r, HalfInt from, HalfInt to) {
        check(from, to);
        for (HalfInt t = from; t <= to; t += 1) d_.push_back(Segment::delta(r, t, t + 2));
        return *this;
    }
    FL& seg(const CuspidalGL& r, HalfInt lo, HalfInt hi) {
        d_.push_back(Segment::delta(r, lo, hi));
        return *this;
    }
    LanglandsData on(GAtom atom) const { return normalize_langlands(LanglandsData{d_, std::move(atom)}); }

private:
    static void check(HalfInt from, HalfInt to) {
        if (!from.same_class(to)) throw InvariantError("factor range crosses lattices: " + from.str() + ".." + to.str());
    }
    std::vector<Segment> d_;
};

struct Ctx {
    CuspidalGL rho, rho0;
    HalfInt A, B, a, b, x, c, cb;
    std::string sigma;

    explicit Ctx(const DPSParams& p)
        : rho(p.rho), rho0(p.rho0), A(p.alpha), B(p.beta), a(p.a), b(p.b), x(p.x),
          c(HalfInt(p.alpha.ceil()) - p.alpha - 1), cb(HalfInt(p.beta.ceil()) - p.beta - 1), sigma(p.sigma) {}

    // zeta(rho,x;sigma) block
    FL rx() const { return std::move(FL().s(rho, -x, -A)); }
    GAtom sig() const { return atoms::cuspidal(sigma); }
    GAtom t1() const { return atoms::tau1(rho0, a, sigma); }
    GAtom t2() const { return atoms::tau2(rho0, B, a, sigma); }
    GAtom trs() const { return atoms::tau_rho_sigma(rho, sigma); }
};

const HalfInt kHalf = HalfInt::half();
const HalfInt kThreeHalves = HalfInt::from_twice(3);
const HalfInt kFiveHalves = HalfInt::from_twice(5);

// The alpha-dependent tail shared by several same-rho lists, after a prefix that
// ends just below nu^{a-1}: d([a-1,a]), nu^a, ..., then the closing block.
LanglandsData tail_ch1(const Ctx& k, FL f) {
    if (k.A >= kThreeHalves) return f.ch1(k.rho, k.a - 1, -k.A).s(k.rho, -k.A + 2, k.c, 2).on(k.t1());
    if (k.A == HalfInt(1)) return f.ch1(k.rho, k.a - 1, -2).seg(k.rho, -1, 0).on(k.sig());
    return f.ch1(k.rho, k.a - 1, -kFiveHalves).seg(k.rho, -kThreeHalves, -kHalf).on(k.trs());
}

// nu^{a-1}, d([a-1,a]), ... variant
LanglandsData tail_ch2(const Ctx& k, FL f) {
    if (k.A >= kThreeHalves)
        return f.ch2(k.rho, k.a - 1, -k.A).s(k.rho, -k.A + 1, -k.A + 1).s(k.rho, -k.A + 2, k.c, 2).on(k.t1());
    if (k.A == HalfInt(1)) return f.ch2(k.rho, k.a - 1, -1).on(k.sig());
    return f.ch2(k.rho, k.a - 1, -kThreeHalves).on(k.trs());
}

// d([a-2,a]), ... variant
LanglandsData tail_d3(const Ctx& k, FL f) {
    if (k.A >= kThreeHalves) return f.d3s(k.rho, k.a - 2, -k.A - 1).s(k.rho, -k.A + 2, k.c).on(k.t2());
    if (k.A == HalfInt(1)) return f.d3s(k.rho, k.a - 2, -2).on(atoms::delta_sp(k.rho, k.A, 1, k.sigma));
    return f.d3s(k.rho, k.a - 2, -kThreeHalves).on(k.sig());
}

using Guard = std::function<bool(const NormalizedParams&)>;
using Build = std::function<std::vector<LanglandsData>(const Ctx&)>;

struct Entry {
    std::string id;
    std::string citation;
    std::string guard_text;
    Guard guard;
    Build build;  // empty for irreducible entries
};

bool live(const NormalizedParams& np) { return !np.early_irreducible; }
bool beta0(const NormalizedParams& np) { return live(np) && np.p.beta == HalfInt(0); }
bool sec4(const NormalizedParams& np) { return live(np) && np.p.beta > HalfInt(0) && np.p.a >= HalfInt(1); }
bool sec5(const NormalizedParams& np) { return live(np) && np.p.beta > HalfInt(0) && np.p.a <= HalfInt(0); }
bool sec6(const NormalizedParams& np) { return live(np) && np.p.beta > HalfInt(0) && np.p.a == kHalf; }

const std::vector<Entry>& entries() {
    static const std::vector<Entry> table = [] {
        std::vector<Entry> t;
        auto add = [&](std::string id, std::string cit, std::string gt, Guard g, Build b = {}) {
            t.push_back(Entry{std::move(id), std::move(cit), std::move(gt), std::move(g), std::move(b)});
        };

        add("early.rho0-not-selfdual", "irreducible unless rho0 is (essentially) self-contragredient",
            "dual(rho0) != rho0",
            [](const NormalizedParams& np) { return np.early_irreducible && np.reason.starts_with("rho0"); });
        add("early.off-lattice", "irreducible if a - beta is not an integer", "a - beta not in Z",
            [](const NormalizedParams& np) { return np.early_irreducible && !np.reason.starts_with("rho0"); });

        // beta = 0
        add("beta0.irreducible", "beta = 0: irreducible if and only if a >= 1", "beta=0, a>=1",
            [](const NormalizedParams& np) { return beta0(np) && np.p.a >= HalfInt(1); });
        add("beta0.three", "beta = 0, a <= 0, -a < b: rho0 |x| sigma = tau_1 + tau_-1", "beta=0, a<=0, -a<b",
            [](const NormalizedParams& np) { return beta0(np) && np.p.a <= HalfInt(0) && -np.p.a < np.p.b; },
            [](const Ctx& k) {
                auto f = [&] { return std::move(k.rx().s(k.rho0, -k.b, k.a - 1).s(k.rho0, k.a, -1, 2)); };
                return std::vector<LanglandsData>{
                    f().on(atoms::tau_pm(1, k.rho0, k.sigma)),
                    f().on(atoms::tau_pm(-1, k.rho0, k.sigma)),
                    k.rx().s(k.rho0, -k.b, k.a - 2).ds(k.rho0, k.a - 1, -1).on(k.sig())};
            });
        add("beta0.two", "beta = 0, a <= 0, -a = b: rho0 |x| sigma = tau_1 + tau_-1", "beta=0, a<=0, -a=b",
            [](const NormalizedParams& np) { return beta0(np) && np.p.a <= HalfInt(0) && -np.p.a == np.p.b; },
            [](const Ctx& k) {
                auto f = [&] { return std::move(k.rx().s(k.rho0, k.a, -1, 2)); };
                return std::vector<LanglandsData>{f().on(atoms::tau_pm(1, k.rho0, k.sigma)),
                                                  f().on(atoms::tau_pm(-1, k.rho0, k.sigma))};
            });

        // a >= 1, rho0 = rho
        auto r41 = [](const DPSParams& p) { return p.a <= p.alpha - 1 && p.alpha - 1 <= p.b && p.b < p.x; };
        auto r42 = [](const DPSParams& p) { return p.a <= p.x + 1 && p.x < p.b; };
        add("a>=1.same.irreducible",
            "a >= 1, rho0 = rho: reduces iff a <= alpha-1 <= b < x or (a <= x+1 and x < b)", "neither window",
            [=](const NormalizedParams& np) { return sec4(np) && np.p.same && !r41(np.p) && !r42(np.p); });
        add("a>=1.same.lower-window", "a >= 1, rho0 = rho, a <= alpha-1 <= b < x: two factors",
            "a<=alpha-1<=b<x", [=](const NormalizedParams& np) { return sec4(np) && np.p.same && r41(np.p); },
            [](const Ctx& k) {
                return std::vector<LanglandsData>{
                    FL().s(k.rho, -k.x, -k.b - 1).s(k.rho, -k.b, -k.A, 2).s(k.rho, -k.A + 1, -k.a).on(k.sig()),
                    FL().s(k.rho, -k.x, -k.b - 2).ds(k.rho, -k.b - 1, -k.A).s(k.rho, -k.A + 2, -k.a).on(k.sig())};
            });
        add("a>=1.same.upper-window.a>alpha", "a >= 1, rho0 = rho, a <= x+1, x < b, a > alpha: two factors",
            "a<=x+1, x<b, a>alpha",
            [=](const NormalizedParams& np) { return sec4(np) && np.p.same && r42(np.p) && np.p.a > np.p.alpha; },
            [](const Ctx& k) {
                return std::vector<LanglandsData>{
                    FL().s(k.rho, -k.b, -k.x - 1).s(k.rho, -k.x, -k.a, 2).s(k.rho, -k.a + 1, -k.A).on(k.sig()),
                    FL().s(k.rho, -k.b, -k.x - 2).ds(k.rho, -k.x - 1, -k.a).s(k.rho, -k.a + 2, -k.A).on(k.sig())};
            });
        add("a>=1.same.upper-window.a<=alpha",
            "a >= 1, rho0 = rho, a <= x+1, x < b, a <= alpha: two factors, strongly positive sigma_sp",
            "a<=x+1, x<b, a<=alpha",
            [=](const NormalizedParams& np) { return sec4(np) && np.p.same && r42(np.p) && np.p.a <= np.p.alpha; },
            [](const Ctx& k) {
                return std::vector<LanglandsData>{
                    FL().s(k.rho, -k.b, -k.x - 1).s(k.rho, -k.x, -k.A, 2).s(k.rho, -k.A + 1, -k.a).on(k.sig()),
                    FL().s(k.rho, -k.b, -k.x - 2)
                        .ds(k.rho, -k.x - 1, -k.A - 1)
                        .on(atoms::sigma_sp(k.rho, k.a, k.A, k.sigma))};
            });

        // a >= 1, rho0 != rho
        add("a>=1.distinct.irreducible", "a >= 1, rho0 != rho: irreducible iff a > beta or b < beta",
            "a>beta or b<beta",
            [](const NormalizedParams& np) {
                return sec4(np) && !np.p.same && (np.p.a > np.p.beta || np.p.b < np.p.beta);
            });
        add("a>=1.distinct.reducible", "a >= 1, rho0 != rho, a <= beta <= b: two factors", "a<=beta<=b",
            [](const NormalizedParams& np) {
                return sec4(np) && !np.p.same && !(np.p.a > np.p.beta || np.p.b < np.p.beta);
            },
            [](const Ctx& k) {
                return std::vector<LanglandsData>{
                    k.rx().s(k.rho0, -k.b, -k.a).on(k.sig()),
                    k.rx().s(k.rho0, -k.b, -k.B - 1).on(atoms::sigma_sp(k.rho0, k.a, k.B, k.sigma))};
            });

        // a <= 0, rho0 = rho, -a = b
        add("a<=0.same.symmetric.irreducible",
            "a <= 0, rho0 = rho, -a = b: irreducible iff -a <= alpha-2 or -a = x", "-a<=alpha-2 or -a=x",
            [](const NormalizedParams& np) {
                const auto& p = np.p;
                return sec5(np) && p.same && -p.a == p.b && (-p.a <= p.alpha - 2 || -p.a == p.x);
            });
        add("a<=0.same.symmetric.middle", "a <= 0, rho0 = rho, -a = b, alpha-2 < -a < x: two factors",
            "alpha-2<-a<x",
            [](const NormalizedParams& np) {
                const auto& p = np.p;
                return sec5(np) && p.same && -p.a == p.b && p.alpha - 2 < -p.a && -p.a < p.x;
            },
            [](const Ctx& k) {
                return std::vector<LanglandsData>{
                    FL().s(k.rho, -k.x, k.a - 1).s(k.rho, k.a, -k.A, 3).s(k.rho, -k.A + 1, k.c, 2).on(k.t1()),
                    tail_ch1(k, std::move(FL().s(k.rho, -k.x, k.a - 2)))};
            });
        add("a<=0.same.symmetric.beyond-x", "a <= 0, rho0 = rho, -a = b > x: two factors", "-a>x",
            [](const NormalizedParams& np) {
                const auto& p = np.p;
                return sec5(np) && p.same && -p.a == p.b && -p.a > p.x;
            },
            [](const Ctx& k) {
                return std::vector<LanglandsData>{
                    FL().s(k.rho, k.a, -k.x - 1, 2).s(k.rho, -k.x, -k.A, 3).s(k.rho, -k.A + 1, k.c, 2).on(k.t1()),
                    FL().s(k.rho, k.a, -k.x - 2, 2).ch2(k.rho, -k.x - 1, -k.A - 1).s(k.rho, -k.A, k.c).on(k.t2())};
            });

        // a <= 0, rho0 = rho, -a < b
        auto s5 = [](const NormalizedParams& np) { return sec5(np) && np.p.same && -np.p.a < np.p.b; };
        add("a<=0.same.irreducible", "a <= 0, rho0 = rho, -a < b: irreducible iff b < alpha-1 or (-a < alpha-1 and b = x)",
            "b<alpha-1 or (-a<alpha-1 and b=x)",
            [=](const NormalizedParams& np) {
                const auto& p = np.p;
                return s5(np) && (p.b < p.alpha - 1 || (-p.a < p.alpha - 1 && p.b == p.x));
            });
        add("a<=0.same.beyond-x", "a <= 0, rho0 = rho, -a > x: three factors", "-a>x",
            [=](const NormalizedParams& np) { return s5(np) && -np.p.a > np.p.x; },
            [](const Ctx& k) {
                return std::vector<LanglandsData>{
                    FL().s(k.rho, -k.b, k.a - 1)
                        .s(k.rho, k.a, -k.x - 1, 2)
                        .s(k.rho, -k.x, -k.A, 3)
                        .s(k.rho, -k.A + 1, k.c, 2)
                        .on(k.t1()),
                    FL().s(k.rho, -k.b, k.a - 1)
                        .s(k.rho, k.a, -k.x - 2, 2)
                        .ch2(k.rho, -k.x - 1, -k.A - 1)
                        .s(k.rho, -k.A, k.c)
                        .on(k.t2()),
                    FL().s(k.rho, -k.b, k.a - 2)
                        .ds(k.rho, k.a - 1, -k.x - 2)
                        .ch1(k.rho, -k.x - 1, -k.A - 1)
                        .s(k.rho, -k.A + 1, k.c)
                        .on(k.t2())};
            });
        add("a<=0.same.b-below-x", "a <= 0, rho0 = rho, alpha-1 <= -a < b < x: three factors", "alpha-1<=-a<b<x",
            [=](const NormalizedParams& np) {
                const auto& p = np.p;
                return s5(np) && p.alpha - 1 <= -p.a && p.b < p.x;
            },
            [](const Ctx& k) {
                return std::vector<LanglandsData>{
                    FL().s(k.rho, -k.x, -k.b - 1)
                        .s(k.rho, -k.b, k.a - 1, 2)
                        .s(k.rho, k.a, -k.A, 3)
                        .s(k.rho, -k.A + 1, k.c, 2)
                        .on(k.t1()),
                    tail_ch1(k, std::move(FL().s(k.rho, -k.x, -k.b - 2).ds(k.rho, -k.b - 1, k.a - 2))),
                    tail_ch2(k, std::move(FL().s(k.rho, -k.x, -k.b - 1).s(k.rho, -k.b, k.a - 2, 2)))};
            });
        add("a<=0.same.x-below-b", "a <= 0, rho0 = rho, alpha-1 <= -a < x < b: four factors", "alpha-1<=-a<x<b",
            [=](const NormalizedParams& np) {
                const auto& p = np.p;
                return s5(np) && p.alpha - 1 <= -p.a && -p.a < p.x && p.x < p.b;
            },
            [](const Ctx& k) {
                return std::vector<LanglandsData>{
                    FL().s(k.rho, -k.b, -k.x - 1)
                        .s(k.rho, -k.x, k.a - 1, 2)
                        .s(k.rho, k.a, -k.A, 3)
                        .s(k.rho, -k.A + 1, k.c, 2)
                        .on(k.t1()),
                    FL().s(k.rho, -k.b, -k.x - 2)
                        .ds(k.rho, -k.x - 1, k.a - 2)
                        .ch1(k.rho, k.a - 1, -k.A - 1)
                        .s(k.rho, -k.A + 1, k.c)
                        .on(k.t2()),
                    tail_ch2(k, std::move(FL().s(k.rho, -k.b, -k.x - 1).s(k.rho, -k.x, k.a - 2, 2))),
                    tail_d3(k, std::move(FL().s(k.rho, -k.b, -k.x - 2).ds(k.rho, -k.x - 1, k.a - 3)))};
            });
        add("a<=0.same.b-equals-x", "a <= 0, rho0 = rho, alpha-1 <= -a < x, b = x: two factors", "alpha-1<=-a<x=b",
            [=](const NormalizedParams& np) {
                const auto& p = np.p;
                return s5(np) && p.alpha - 1 <= -p.a && -p.a < p.x && p.b == p.x;
            },
            [](const Ctx& k) {
                return std::vector<LanglandsData>{
                    FL().s(k.rho, -k.b, k.a - 1, 2).s(k.rho, k.a, -k.A, 3).s(k.rho, -k.A + 1, k.c, 2).on(k.t1()),
                    tail_ch2(k, std::move(FL().s(k.rho, -k.b, k.a - 2, 2)))};
            });
        add("a<=0.same.small-a.b-below-x", "a <= 0, rho0 = rho, -a <= alpha-2, alpha-1 <= b < x: two factors",
            "-a<=alpha-2, alpha-1<=b<x",
            [=](const NormalizedParams& np) {
                const auto& p = np.p;
                return s5(np) && -p.a < p.alpha - 1 && p.alpha - 1 <= p.b && p.b < p.x;
            },
            [](const Ctx& k) {
                return std::vector<LanglandsData>{
                    FL().s(k.rho, -k.x, -k.b - 1)
                        .s(k.rho, -k.b, -k.A, 2)
                        .s(k.rho, -k.A + 1, k.a - 1)
                        .s(k.rho, k.a, k.c, 2)
                        .on(k.t1()),
                    FL().s(k.rho, -k.x, -k.b - 2)
                        .ds(k.rho, -k.b - 1, -k.A)
                        .s(k.rho, -k.A + 2, k.a - 1)
                        .s(k.rho, k.a, k.c, 2)
                        .on(k.t1())};
            });
        add("a<=0.same.small-a.x-below-b", "a <= 0, rho0 = rho, -a < alpha-1, x < b: two factors",
            "-a<alpha-1, x<b",
            [=](const NormalizedParams& np) {
                const auto& p = np.p;
                return s5(np) && -p.a < p.alpha - 1 && p.x < p.b;
            },
            [](const Ctx& k) {
                return std::vector<LanglandsData>{
                    FL().s(k.rho, -k.b, -k.x - 2).ds(k.rho, -k.x - 1, -k.A - 1).s(k.rho, k.a, k.c).on(k.t2()),
                    FL().s(k.rho, -k.b, -k.x - 1)
                        .s(k.rho, -k.x, -k.A, 2)
                        .s(k.rho, -k.A + 1, k.a - 1)
                        .s(k.rho, k.a, k.c, 2)
                        .on(k.t1())};
            });
        add("a<=0.same.a-equals-minus-x", "a <= 0, rho0 = rho, -a = x < b: two factors", "-a=x<b",
            [=](const NormalizedParams& np) { return s5(np) && -np.p.a == np.p.x; },
            [](const Ctx& k) {
                return std::vector<LanglandsData>{
                    FL().s(k.rho, -k.b, k.a - 2).ch1(k.rho, k.a - 1, -k.A - 1).s(k.rho, -k.A + 1, k.c).on(k.t2()),
                    FL().s(k.rho, -k.b, k.a - 1).s(k.rho, k.a, -k.A, 3).s(k.rho, -k.A + 1, k.c, 2).on(k.t1())};
            });

        // a <= 0, rho0 != rho
        auto d5 = [](const NormalizedParams& np) { return sec5(np) && !np.p.same; };
        add("a<=0.distinct.irreducible", "a <= 0, rho0 != rho: irreducible iff b < beta", "b<beta",
            [=](const NormalizedParams& np) { return d5(np) && np.p.b < np.p.beta; });
        add("a<=0.distinct.symmetric", "a <= 0, rho0 != rho, b >= beta, -a = b: two factors", "-a=b>=beta",
            [=](const NormalizedParams& np) { return d5(np) && np.p.b >= np.p.beta && -np.p.a == np.p.b; },
            [](const Ctx& k) {
                return std::vector<LanglandsData>{
                    k.rx().s(k.rho0, -k.b, k.cb, 2).on(k.t1()),
                    k.rx().s(k.rho0, -k.b, -k.B - 1, 2).s(k.rho0, -k.B, k.cb).on(k.t2())};
            });
        add("a<=0.distinct.beta-below-a", "a <= 0, rho0 != rho, beta <= -a < b: three factors", "beta<=-a<b",
            [=](const NormalizedParams& np) { return d5(np) && np.p.beta <= -np.p.a && -np.p.a < np.p.b; },
            [](const Ctx& k) {
                return std::vector<LanglandsData>{
                    k.rx().s(k.rho0, -k.b, k.a - 1).s(k.rho0, k.a, k.cb, 2).on(k.t1()),
                    k.rx().s(k.rho0, -k.b, k.a - 1).s(k.rho0, k.a, -k.B - 1, 2).s(k.rho0, -k.B, k.cb).on(k.t2()),
                    k.rx()
                        .s(k.rho0, -k.b, k.a - 2)
                        .ds(k.rho0, k.a - 1, -k.B - 1)
                        .s(k.rho0, -k.B + 1, k.cb)
                        .on(k.t2())};
            });
        add("a<=0.distinct.b-equals-beta", "a <= 0, rho0 != rho, -a < beta = b: two factors", "-a<beta=b",
            [=](const NormalizedParams& np) { return d5(np) && -np.p.a < np.p.beta && np.p.b == np.p.beta; },
            [](const Ctx& k) {
                return std::vector<LanglandsData>{k.rx().s(k.rho0, -k.b, k.a - 1).s(k.rho0, k.a, k.cb, 2).on(k.t1()),
                                                  k.rx().s(k.rho0, k.a, k.cb).on(k.t2())};
            });
        add("a<=0.distinct.beta-inside", "a <= 0, rho0 != rho, -a < beta < b: two factors", "-a<beta<b",
            [=](const NormalizedParams& np) { return d5(np) && -np.p.a < np.p.beta && np.p.beta < np.p.b; },
            [](const Ctx& k) {
                return std::vector<LanglandsData>{
                    k.rx().s(k.rho0, -k.b, k.a - 1).s(k.rho0, k.a, k.cb, 2).on(k.t1()),
                    k.rx().s(k.rho0, -k.b, -k.B - 1).s(k.rho0, k.a, k.cb).on(k.t2())};
            });

        // a = 1/2, rho0 = rho
        auto s6 = [](const NormalizedParams& np) { return sec6(np) && np.p.same; };
        add("a=1/2.same.irreducible", "a = 1/2, rho0 = rho: irreducible iff (alpha > 1/2 and b = x) or b < alpha-1",
            "(alpha>1/2, b=x) or b<alpha-1",
            [=](const NormalizedParams& np) {
                const auto& p = np.p;
                return s6(np) && ((p.alpha > kHalf && p.b == p.x) || p.b < p.alpha - 1);
            });
        add("a=1/2.same.x-below-b", "a = 1/2, rho0 = rho, alpha > 1/2, x < b: two factors", "alpha>1/2, x<b",
            [=](const NormalizedParams& np) { return s6(np) && np.p.alpha > kHalf && np.p.x < np.p.b; },
            [](const Ctx& k) {
                return std::vector<LanglandsData>{
                    FL().s(k.rho, -k.b, -k.x - 2).ds(k.rho, -k.x - 1, -k.A - 1).on(k.t2()),
                    FL().s(k.rho, -k.b, -k.x - 1).s(k.rho, -k.x, -k.A, 2).s(k.rho, -k.A + 1, -kHalf).on(k.sig())};
            });
        add("a=1/2.same.b-below-x", "a = 1/2, rho0 = rho, alpha > 1/2, alpha-1 <= b < x: two factors",
            "alpha>1/2, alpha-1<=b<x",
            [=](const NormalizedParams& np) {
                const auto& p = np.p;
                return s6(np) && p.alpha > kHalf && p.alpha - 1 <= p.b && p.b < p.x;
            },
            [](const Ctx& k) {
                return std::vector<LanglandsData>{
                    FL().s(k.rho, -k.x, -k.b - 1).s(k.rho, -k.b, -k.A, 2).s(k.rho, -k.A + 1, -kHalf).on(k.sig()),
                    FL().s(k.rho, -k.x, -k.b - 2).ds(k.rho, -k.b - 1, -k.A).s(k.rho, -k.A + 2, -kHalf).on(k.sig())};
            });
        add("a=1/2.same.alpha-half.x-below-b", "a = 1/2, rho0 = rho, alpha = 1/2, x < b: four factors",
            "alpha=1/2, x<b",
            [=](const NormalizedParams& np) { return s6(np) && np.p.alpha == kHalf && np.p.x < np.p.b; },
            [](const Ctx& k) {
                return std::vector<LanglandsData>{
                    FL().s(k.rho, -k.b, -k.x - 1).s(k.rho, -k.x, -kHalf, 2).on(k.sig()),
                    FL().s(k.rho, -k.b, -k.x - 2)
                        .ds(k.rho, -k.x - 1, -kFiveHalves)
                        .seg(k.rho, -kThreeHalves, kHalf)
                        .on(k.sig()),
                    FL().s(k.rho, -k.b, -k.x - 2)
                        .ds(k.rho, -k.x - 1, -kThreeHalves)
                        .on(atoms::delta_sp(k.rho, k.A, kHalf, k.sigma)),
                    FL().s(k.rho, -k.b, -k.x - 1).s(k.rho, -k.x, -kThreeHalves, 2).on(k.trs())};
            });
        add("a=1/2.same.alpha-half.b-upto-x", "a = 1/2, rho0 = rho, alpha = 1/2, b <= x: two factors",
            "alpha=1/2, b<=x",
            [=](const NormalizedParams& np) { return s6(np) && np.p.alpha == kHalf && np.p.b <= np.p.x; },
            [](const Ctx& k) {
                return std::vector<LanglandsData>{
                    FL().s(k.rho, -k.x, -k.b - 1).s(k.rho, -k.b, -kThreeHalves, 2).on(k.trs()),
                    FL().s(k.rho, -k.x, -k.b - 1).s(k.rho, -k.b, -kHalf, 2).on(k.sig())};
            });

        // a = 1/2, rho0 != rho
        add("a=1/2.distinct.irreducible", "a = 1/2, rho0 != rho: irreducible iff b < beta", "b<beta",
            [](const NormalizedParams& np) { return sec6(np) && !np.p.same && np.p.b < np.p.beta; });
        add("a=1/2.distinct.reducible", "a = 1/2, rho0 != rho, b >= beta: two factors", "b>=beta",
            [](const NormalizedParams& np) { return sec6(np) && !np.p.same && np.p.b >= np.p.beta; },
            [](const Ctx& k) {
                return std::vector<LanglandsData>{k.rx().s(k.rho0, -k.b, -kHalf).on(k.sig()),
                                                  k.rx().s(k.rho0, -k.b, -k.B - 1).on(k.t2())};
            });
        return t;
    }();
    return table;
}

}  // namespace

int matching_cases(const NormalizedParams& np) {
    int n = 0;
    for (const auto& e : entries())
        if (e.guard(np)) ++n;
    return n;
}

const std::vector<CaseInfo>& case_table() {
    static const std::vector<CaseInfo> info = [] {
        std::vector<CaseInfo> v;
        for (const auto& e : entries()) v.push_back({e.id, e.citation});
        return v;
    }();
    return info;
}

Verdict classify(const DPSParams& raw) {
    const NormalizedParams np = normalize_params(raw);
    const Entry* hit = nullptr;
    for (const auto& e : entries()) {
        if (!e.guard(np)) continue;
        if (hit) throw InvariantError("cases " + hit->id + " and " + e.id + " both match " + np.p.str());
        hit = &e;
    }
    if (!hit) throw InvariantError("no case matches " + np.p.str());
    Verdict v;
    v.case_id = hit->id;
    v.citation = hit->citation;
    v.guard = hit->guard_text;
    if (!hit->build) {
        v.irreducible = true;
        return v;
    }
    v.factors = hit->build(Ctx(np.p));
    return v;
}

GWord dps_word(const DPSParams& p) {
    std::vector<Segment> f{Segment::zeta(p.rho0, -p.b, -p.a)};
    for (HalfInt e = p.alpha; e <= p.x; e += 1) f.push_back(Segment::cusp(p.rho, -e));
    return GWord{GLWord(std::move(f)), CuspidalAtom{p.sigma}};
}

GWord dual_side(const DPSParams& p) {
    const DualCtx ctx = p.ctx();
    std::vector<Segment> f{Segment::delta(ctx.dual(p.rho0), p.a, p.b)};
    for (HalfInt e = p.alpha; e <= p.x; e += 1) f.push_back(Segment::cusp(ctx.dual(p.rho), e));
    return GWord{GLWord(std::move(f)), CuspidalAtom{p.sigma}};
}

}  // namespace dps
