#include "support.hpp"

#include "dps/classical_mu.hpp"
#include "dps/gl_hopf.hpp"

#include <doctest.h>

using namespace dps;
using namespace dps::test;

namespace {

MuTerm mt(GLWord l, GWord r) { return MuTerm{std::move(l), std::move(r)}; }
GLWord w(const Segment& s) { return GLWord::of(s); }

}  // namespace

TEST_SUITE("classical-mu") {
    TEST_CASE("cuspidal atoms") {
        CHECK(mu_star_atom(sigma(), classical) == FormalSum<MuTerm>(mt(GLWord(), gw({}))));
        const GAtom s2 = CuspidalAtom{"sigma2"};
        CHECK(mu_star_atom(s2, classical) == FormalSum<MuTerm>(mt(GLWord(), gw({}, s2))));
        CHECK(mu_star_word(gw({}), classical).size() == 1);
    }

    TEST_CASE("opaque atom") {
        const GAtom tau = atoms::tau_pm(1, selfdual("rho0"), "sigma");
        CHECK_THROWS_AS(mu_star_atom(tau, classical), OpaqueAtomError);
        CHECK_THROWS_AS(mu_star_word(gw({}, tau), classical), OpaqueAtomError);
    }

    TEST_CASE("self-dual cuspidal merges two terms") {
        const auto r = selfdual();
        auto m = mu_star_word(gw({nu(r, 0)}), classical);
        CHECK(m.size() == 2);
        CHECK(m.coefficient(mt(GLWord(), gw({nu(r, 0)}))) == 1);
        CHECK(m.coefficient(mt(w(nu(r, 0)), gw({}))) == 2);
    }

    TEST_CASE("generic cuspidal gives three terms") {
        const auto g = generic();
        const HalfInt a = h(3);
        auto m = mu_star_word(gw({nu(g, a)}), classical);
        CHECK(m.size() == 3);
        CHECK(m.coefficient(mt(GLWord(), gw({nu(g, a)}))) == 1);
        CHECK(m.coefficient(mt(w(nu(g, a)), gw({}))) == 1);
        CHECK(m.coefficient(mt(w(nu(classical.dual(g), -a)), gw({}))) == 1);
    }

    TEST_CASE("twisted contragredient in GSpin") {
        const auto e = essdual();
        auto m = mu_star_word(gw({nu(e, 1)}), gspin);
        CHECK(m.coefficient(mt(w(nu(e, -1)), gw({}))) == 1);
        CHECK(m.coefficient(mt(w(nu(e, 1)), gw({}))) == 1);
    }

    TEST_CASE("closed form rejects malformed segments") {
        Segment bad;
        bad.rho = selfdual();
        bad.lo = 2;
        bad.hi = 1;
        CHECK_THROWS_AS(mu_star_delta_rtimes(bad, mu_star_word(gw({}), classical), classical), InvariantError);
        bad.lo = h(1);
        CHECK_THROWS_AS(mu_star_delta_rtimes(bad, mu_star_word(gw({}), classical), classical), InvariantError);
    }

    TEST_CASE("closed form equals the fold") {
        const auto r = selfdual(), g = generic();
        for (const Segment& s : {Segment::delta(r, -1, 2), Segment::delta(g, h(-1), h(3)), Segment::delta(r, 0, 0)}) {
            for (const GWord& target : {gw({}), gw({nu(r, 1)}), gw({Segment::zeta(g, 0, 1)})}) {
                CHECK(mu_star_delta_rtimes(s, mu_star_word(target, classical), classical) ==
                      mu_star_word(rtimes(w(s), target), classical));
            }
        }
    }

    TEST_CASE("fold order does not matter") {
        const auto r = selfdual(), g = generic();
        const GWord x = gw({Segment::delta(r, -1, 1), nu(g, 2), Segment::zeta(r, 0, 1)});
        const std::vector<std::size_t> rev{2, 1, 0}, mid{1, 0, 2};
        const auto base = mu_star_word(x, classical);
        CHECK(mu_star_word(x, classical, &rev) == base);
        CHECK(mu_star_word(x, classical, &mid) == base);
        const std::vector<std::size_t> wrong{0, 1};
        CHECK_THROWS(mu_star_word(x, classical, &wrong));
    }

    TEST_CASE("minimal Jacquet module of a rank-one word") {
        const auto r = selfdual();
        const HalfInt a = 3;
        auto j = jacquet_minimal(gw({nu(r, a)}), classical);
        CHECK(j.size() == 2);
        CHECK(j.coefficient(Flag{{{r, a}}, sigma()}) == 1);
        CHECK(j.coefficient(Flag{{{r, -a}}, sigma()}) == 1);
    }

    TEST_CASE("two routes to the minimal Jacquet module agree") {
        const auto r = selfdual(), r0 = selfdual("rho0"), g = generic();
        for (const GWord& x : {gw({Segment::delta(r, -1, 2)}), gw({Segment::zeta(r0, -2, -1), nu(r, -3), nu(r, -2)}),
                               gw({nu(g, 1), Segment::delta(r, h(1), h(3))}), gw({})}) {
            CHECK(jacquet_minimal(x, classical) == jacquet_minimal_via_mu(x, classical));
            CHECK(jacquet_minimal(x, gspin) == jacquet_minimal_via_mu(x, gspin));
        }
    }

    TEST_CASE("flag multiplicity agrees with the full expansion") {
        const auto r = selfdual(), r0 = selfdual("rho0");
        const GWord x = gw({Segment::zeta(r0, -2, 0), nu(r, -2), nu(r, -1)});
        for (const auto& [f, c] : jacquet_minimal(x, classical)) CHECK(flag_multiplicity(x, f, classical) == c);
        CHECK(flag_multiplicity(x, Flag{{{r, 9}}, sigma()}, classical) == 0);
    }

    TEST_CASE("multiplicity of d([a,b]) (x) sigma") {
        const auto r0 = selfdual("rho0");
        auto mult = [&](int a, int b) {
            const Segment s = Segment::delta(r0, a, b);
            auto res = mult_of_constituent(gw({s}), mt(w(s), gw({})), classical, MatchMode::Constituent);
            CHECK_FALSE(res.degree_mismatch);
            return res.value;
        };
        // segments through zero pick up the contragredient split as well
        CHECK(mult(0, 2) == 2);
        CHECK(mult(-1, 2) == 2);
        CHECK(mult(-1, 3) == 2);
        // for 0 < a only the trivial split survives
        CHECK(mult(1, 2) == 1);
        CHECK(mult(2, 4) == 1);
    }

    TEST_CASE("counit multiplicity and degree mismatch") {
        const auto r = selfdual();
        const GWord x = gw({Segment::delta(r, -1, 2), nu(r, 3)});
        CHECK(mult_of_constituent(x, mt(GLWord(), x), classical).value == 1);
        auto res = mult_of_constituent(x, mt(w(nu(r, 1)), gw({})), classical);
        CHECK(res.degree_mismatch);
        CHECK(res.value == 0);
        CHECK(mult_of_flag(x, Flag{{{r, 1}}, sigma()}, classical).degree_mismatch);
    }

    TEST_CASE("delta constituents of a product") {
        const auto r = selfdual();
        CHECK(delta_constituent_mult(w(Segment::delta(r, -2, 1)) * w(Segment::delta(r, 2, 3)), Segment::delta(r, -2, 3)) == 1);
        CHECK(delta_constituent_mult(w(Segment::delta(r, -2, 1)) * w(Segment::delta(r, 3, 4)), Segment::delta(r, -2, 4)) == 0);
        CHECK(delta_constituent_mult(w(Segment::delta(r, 0, 2)), Segment::delta(r, 0, 2)) == 1);
    }

    TEST_CASE("degree-one restrictions") {
        const auto r = selfdual();
        auto terms = r1(gw({Segment::delta(r, 1, 2)}), classical);
        // d([1,2]) |x| sigma: nu^2 and nu^-1 can be split off
        std::multiset<HalfInt> firsts;
        for (const auto& t : terms) firsts.insert(t.first.e);
        CHECK(firsts == std::multiset<HalfInt>{HalfInt(-1), HalfInt(2)});
    }

    TEST_CASE("rank counts tempered support") {
        const auto r = selfdual();
        CHECK(rank(gw({nu(r, 1)})) == 1);
        CHECK(rank(gw({Segment::delta(r, 0, 2)}, atoms::delta_sp(r, 1, 3, "sigma"))) == 6);
    }
}
