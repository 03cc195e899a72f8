#include "support.hpp"

#include "dps/classifier.hpp"
#include "dps/harness.hpp"

#include <doctest.h>

#include <set>

using namespace dps;
using namespace dps::test;

namespace {

DPSParams same(GroupFamily f, HalfInt alpha, HalfInt a, HalfInt b, HalfInt x) {
    DPSParams p;
    p.family = f;
    p.rho = p.rho0 = cast_rho(f);
    p.same = true;
    p.alpha = p.beta = alpha;
    p.a = a;
    p.b = b;
    p.x = x;
    return p;
}

DPSParams distinct(GroupFamily f, HalfInt alpha, HalfInt beta, HalfInt a, HalfInt b, HalfInt x,
                   RhoMode m = RhoMode::DistinctSelfDual) {
    DPSParams p = same(f, alpha, a, b, x);
    p.same = false;
    p.rho0 = cast_rho0(f, m);
    p.beta = beta;
    return p;
}

}  // namespace

TEST_SUITE("dps-classifier") {
    TEST_CASE("swap to -a <= b") {
        auto n = normalize_params(distinct(GroupFamily::SoOdd, 1, 1, -3, 1, 2));
        CHECK(n.swapped);
        CHECK(n.p.a == HalfInt(-1));
        CHECK(n.p.b == HalfInt(3));
        CHECK_FALSE(normalize_params(distinct(GroupFamily::SoOdd, 1, 1, -1, 3, 2)).swapped);
    }

    TEST_CASE("early irreducible shortcuts") {
        auto g = normalize_params(distinct(GroupFamily::SoOdd, 1, 0, 1, 2, 2, RhoMode::DistinctGeneric));
        CHECK(g.early_irreducible);
        CHECK(classify(distinct(GroupFamily::SoOdd, 1, 0, 1, 2, 2, RhoMode::DistinctGeneric)).irreducible);
        auto off = normalize_params(distinct(GroupFamily::SoOdd, 1, 1, h(3), h(5), 2));
        CHECK(off.early_irreducible);
        CHECK(classify(distinct(GroupFamily::SoOdd, 1, 1, h(3), h(5), 2)).case_id == "early.off-lattice");
    }

    TEST_CASE("beta = 0 and a >= 1 is irreducible") {
        const HalfInt alpha = 1;
        const Verdict v = classify(distinct(GroupFamily::SoOdd, alpha, 0, 1, 3, alpha + 2));
        CHECK(v.irreducible);
        CHECK(v.length() == 1);
        CHECK(v.factors.empty());
    }

    TEST_CASE("two factors for a <= alpha-1 <= b < x") {
        const auto r = cast_rho(GroupFamily::SpEven);
        const Verdict v = classify(same(GroupFamily::SpEven, 2, 1, 2, 4));
        REQUIRE(v.factors.size() == 2);
        const LanglandsData f1{{nu(r, -4), nu(r, -3), nu(r, -2), nu(r, -2), nu(r, -1)}, sigma()};
        const LanglandsData f2{{nu(r, -4), Segment::delta(r, -3, -2), Segment::delta(r, -2, -1)}, sigma()};
        CHECK(std::set<LanglandsData>(v.factors.begin(), v.factors.end()) ==
              std::set<LanglandsData>{normalize_langlands(f1), normalize_langlands(f2)});
    }

    TEST_CASE("distinct, b < beta is irreducible") {
        CHECK(classify(distinct(GroupFamily::SpEven, 1, 2, 0, 1, 2)).irreducible);
        CHECK(classify(distinct(GroupFamily::SpEven, 1, 2, 1, 1, 3)).irreducible);
    }

    TEST_CASE("GSpin has the classical verdict shape") {
        GridSpec g = GridSpec::small();
        for (const auto& p : grid(g)) {
            DPSParams q = p;
            q.family = GroupFamily::GSpinOdd;
            q.rho = cast_rho(q.family);
            q.rho0 = p.same ? q.rho : cast_rho0(q.family, p.rho0.duality == Duality::Generic ? RhoMode::DistinctGeneric
                                                                                           : RhoMode::DistinctSelfDual);
            const Verdict a = classify(p), b = classify(q);
            CHECK(a.case_id == b.case_id);
            CHECK(a.length() == b.length());
        }
    }

    TEST_CASE("degenerate and generalized principal series words") {
        const auto r = cast_rho(GroupFamily::SoOdd), r0 = cast_rho0(GroupFamily::SoOdd, RhoMode::DistinctSelfDual);
        const DPSParams p = distinct(GroupFamily::SoOdd, 2, 1, 1, 2, 4);
        CHECK(dual_side(p) == gw({Segment::delta(r0, 1, 2), nu(r, 4), nu(r, 3), nu(r, 2)}));
        CHECK(dps_word(p) == gw({Segment::zeta(r0, -2, -1), nu(r, -4), nu(r, -3), nu(r, -2)}));
    }

    TEST_CASE("parameter validation") {
        CHECK_THROWS_AS(validate_params(same(GroupFamily::SoOdd, 2, 1, 2, 1)), ParameterError);   // x < alpha
        CHECK_THROWS_AS(validate_params(same(GroupFamily::SoOdd, 2, 2, 1, 4)), ParameterError);   // b < a
        CHECK_THROWS_AS(validate_params(same(GroupFamily::SoOdd, 0, 1, 2, 4)), ParameterError);   // alpha = 0
        CHECK_THROWS_AS(validate_params(same(GroupFamily::SoOdd, 2, 1, h(5), 4)), ParameterError);  // b - a off-lattice
        CHECK_THROWS_AS(validate_params(same(GroupFamily::SoOdd, 2, 1, 2, h(9))), ParameterError);  // x - alpha off-lattice
        DPSParams p = same(GroupFamily::SoOdd, 2, 1, 2, 4);
        p.beta = 1;
        CHECK_THROWS_AS(validate_params(p), ParameterError);
        CHECK_NOTHROW(validate_params(same(GroupFamily::SoOdd, 2, 1, 2, 4)));
    }

    TEST_CASE("case table") {
        std::set<std::string> ids;
        for (const auto& c : case_table()) {
            CHECK(ids.insert(c.id).second);
            CHECK_FALSE(c.citation.empty());
        }
        CHECK(ids.size() >= 30);
    }

    TEST_CASE("every case is reachable on the acceptance grid and exactly one fires") {
        std::set<std::string> hit;
        for (const auto& p : grid(GridSpec::acceptance())) {
            CHECK(matching_cases(normalize_params(p)) == 1);
            hit.insert(classify(p).case_id);
        }
        for (const auto& c : case_table()) CHECK_MESSAGE(hit.count(c.id), c.id);
    }
}
