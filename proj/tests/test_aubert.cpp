#include "support.hpp"

#include "dps/aubert.hpp"
#include "dps/classifier.hpp"

#include <doctest.h>

using namespace dps;
using namespace dps::test;

TEST_SUITE("aubert") {
    TEST_CASE("factorwise dual of the degenerate principal series word") {
        const auto r = selfdual(), r0 = selfdual("rho0");
        const HalfInt a = 1, b = 2, x = 4, alpha = 2;
        std::vector<Segment> f{Segment::zeta(r0, -b, -a)};
        for (HalfInt e = alpha; e <= x; e += 1) f.push_back(nu(r, -e));
        std::vector<Segment> g{Segment::delta(r0, a, b)};
        for (HalfInt e = alpha; e <= x; e += 1) g.push_back(nu(r, e));
        const SignedWord d = aubert_standard(gw(f), classical);
        CHECK(d.sign == 1);
        CHECK(d.word == gw(g));
    }

    TEST_CASE("cuspidal word goes to the negated exponent") {
        const auto g = generic();
        const SignedWord d = aubert_standard(gw({nu(g, 2)}), classical);
        CHECK(d.word == gw({nu(classical.dual(g), -2)}));
        const auto e = essdual();
        CHECK(aubert_standard(gw({nu(e, 1)}), gspin).word == gw({nu(e, -1)}));
    }

    TEST_CASE("involution at word level") {
        const auto r = selfdual(), g = generic();
        for (const GWord& x : {gw({Segment::delta(r, -1, 2), nu(g, 1)}), gw({Segment::zeta(g, h(-3), h(1))}), gw({})}) {
            const SignedWord d = aubert_standard(x, classical);
            const SignedWord dd = aubert_standard(d.word, classical);
            CHECK(dd.word == x);
            CHECK(d.sign * dd.sign == 1);
        }
    }

    TEST_CASE("cuspidal sigma alone") {
        CHECK(aubert_bruteforce(gw({}), classical) == FormalSum<GWord>(gw({})));
        CHECK(aubert_standard(gw({}), classical).word == gw({}));
    }

    TEST_CASE("rank one by brute force") {
        const auto r = selfdual();
        for (int a : {0, 1, 3}) {
            auto bf = aubert_bruteforce(gw({nu(r, a)}), classical);
            CHECK(bf.size() == 1);
            const SignedWord st = aubert_standard(gw({nu(r, a)}), classical);
            CHECK(hat_normalize(bf) == FormalSum<GWord>(st.word));
        }
    }

    TEST_CASE("brute force twice is the identity") {
        const auto r = selfdual(), g = generic();
        for (const GWord& x : {gw({nu(r, 1), nu(r, 2)}), gw({nu(g, -1), nu(r, 0), nu(r, 1)})}) {
            auto once = aubert_bruteforce(x, classical);
            CHECK(aubert_bruteforce(once, classical) == FormalSum<GWord>(x));
        }
    }

    TEST_CASE("brute force contracts") {
        const auto r = selfdual();
        CHECK_THROWS_AS(aubert_bruteforce(gw({Segment::delta(r, 0, 1)}), classical), Unsupported);
        CHECK_THROWS_AS(aubert_bruteforce(gw({nu(r, 0), nu(r, 1), nu(r, 2), nu(r, 3), nu(r, 4)}), classical), Unsupported);
        CHECK_THROWS_AS(aubert_bruteforce(gw({}, atoms::tau_pm(1, r, "sigma")), classical), OpaqueAtomError);
        CHECK_THROWS_AS(aubert_standard(gw({}, atoms::tau_pm(1, r, "sigma")), classical), OpaqueAtomError);
    }

    TEST_CASE("hat normalization") {
        const auto r = selfdual();
        const GWord w1 = gw({nu(r, 1)}), w2 = gw({nu(r, 2)});
        CHECK(hat_normalize(FormalSum<GWord>(w1, -1)) == FormalSum<GWord>(w1));
        FormalSum<GWord> both(w1);
        both.add(w2, 1);
        CHECK(hat_normalize(both) == both);
        FormalSum<GWord> mixed(w1);
        mixed.add(w2, -1);
        CHECK_THROWS_AS(hat_normalize(mixed), InvariantError);
    }

    TEST_CASE("zeta as deltas") {
        const auto r = selfdual();
        auto two = zeta_as_deltas(Segment::zeta(r, 0, 1));
        CHECK(two.size() == 2);
        CHECK(two.coefficient(GLWord::of(nu(r, 0)) * GLWord::of(nu(r, 1))) == 1);
        CHECK(two.coefficient(GLWord::of(Segment::delta(r, 0, 1))) == -1);
        auto three = zeta_as_deltas(Segment::zeta(r, 0, 2));
        CHECK(three.size() == 4);
        CHECK(three.coefficient(GLWord::of(Segment::delta(r, 0, 2))) == 1);
    }

    TEST_CASE("normal form identifies contragredient factors") {
        const auto r = selfdual(), g = generic();
        auto nf = [](const GWord& x, const DualCtx& c) { return grothendieck_normal_form(FormalSum<GWord>(x), c); };
        CHECK(nf(gw({nu(r, -2)}), classical) == nf(gw({nu(r, 2)}), classical));
        CHECK(nf(gw({nu(g, -1)}), classical) == nf(gw({nu(classical.dual(g), 1)}), classical));
        CHECK(nf(gw({nu(g, 0)}), classical) == nf(gw({nu(classical.dual(g), 0)}), classical));
        CHECK(nf(gw({Segment::delta(r, -2, 0)}), classical) == nf(gw({Segment::delta(r, 0, 2)}), classical));
        CHECK_FALSE(nf(gw({Segment::delta(r, 0, 1)}), classical) == nf(gw({Segment::zeta(r, 0, 1)}), classical));
    }

    TEST_CASE("brute force with segments matches the factorwise dual") {
        const auto r = selfdual(), r0 = selfdual("rho0"), g = generic();
        for (const DualCtx& c : {classical, gspin}) {
            const auto rr = c.twisted() ? essdual() : r;
            const auto rr0 = c.twisted() ? essdual("rho0") : r0;
            for (const GWord& x : {gw({Segment::zeta(rr0, -2, -1)}), gw({Segment::delta(rr, -1, 2)}),
                                   gw({nu(rr, 1), Segment::zeta(rr0, 0, 2)}), gw({Segment::zeta(g, -1, 1)})}) {
                const SignedWord st = aubert_standard(x, c);
                CHECK(grothendieck_normal_form(aubert_bruteforce_segments(x, c), c) ==
                      grothendieck_normal_form(FormalSum<GWord>(st.word, st.sign), c));
            }
        }
    }
}
