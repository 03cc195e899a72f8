#include "support.hpp"

#include "dps/config.hpp"

#include <doctest.h>

using namespace dps;
using namespace dps::test;

TEST_SUITE("core-symbols") {
    TEST_CASE("ceil and arithmetic") {
        CHECK(HalfInt::half().ceil() == 1);
        CHECK(h(-3).ceil() == -1);
        CHECK(h(3) + h(-1) == HalfInt(1));
        CHECK(h(-3).floor() == -2);
        CHECK(HalfInt(2).ceil() == 2);
    }

    TEST_CASE("str and parse") {
        for (std::int64_t t = -9; t <= 9; ++t) CHECK(HalfInt::parse(h(t).str()) == h(t));
        CHECK(HalfInt::parse("3/2") == h(3));
        CHECK(HalfInt::parse("-1/2") == h(-1));
        CHECK(HalfInt::parse("+4") == HalfInt(4));
        CHECK(HalfInt::parse("4/1") == HalfInt(4));
        for (const char* bad : {"", "1/3", "x", "1/", "/2", "1.5", "--1"}) CHECK_THROWS_AS(HalfInt::parse(bad), std::invalid_argument);
    }

    TEST_CASE("midpoint") {
        CHECK(midpoint(HalfInt(-2), HalfInt(-1)) == h(-3));
        CHECK(midpoint(HalfInt(-1), HalfInt(1)) == HalfInt(0));
    }

    TEST_CASE("contragredient of symbols") {
        CHECK(dual_symbol(selfdual(), false) == selfdual());
        const CuspidalGL g = generic("rho1");
        const CuspidalGL gd = dual_symbol(g, false);
        CHECK(gd != g);
        CHECK(gd.name() == "rho1~");
        CHECK(dual_symbol(gd, false) == g);
        CHECK(dual_symbol(essdual(), true) == essdual());
        CHECK(contragredient_symbol(essdual(), GroupFamily::GSpinOdd, std::string("omega")) == essdual());
        CHECK_THROWS_AS(contragredient_symbol(selfdual(), GroupFamily::SoOdd, std::string("omega")), ConfigError);
        CHECK_THROWS_AS(DualCtx(GroupFamily::SpEven, std::string("omega")), ConfigError);
        CHECK(DualCtx::for_family(GroupFamily::GSpinOdd).twisted());
        CHECK_FALSE(DualCtx::for_family(GroupFamily::SpEven).twisted());
    }

    TEST_CASE("family and duality names") {
        CHECK(parse_family("so") == GroupFamily::SoOdd);
        CHECK(parse_family("sp-even") == GroupFamily::SpEven);
        CHECK(parse_family("gspin") == GroupFamily::GSpinOdd);
        CHECK_THROWS(parse_family("gl"));
        for (auto d : {Duality::SelfDual, Duality::EssSelfDual, Duality::Generic}) CHECK(parse_duality(to_string(d)) == d);
        for (auto f : {GroupFamily::SpEven, GroupFamily::SoOdd, GroupFamily::GSpinOdd}) CHECK(parse_family(to_string(f)) == f);
    }
}

TEST_SUITE("config") {
    TEST_CASE("built-in profiles") {
        const Config c = profile("classical");
        CHECK(c.family == GroupFamily::SoOdd);
        CHECK(c.sigma.reducibility_of("rho") == HalfInt(2));
        CHECK(c.sigma.reducibility_of("rho0") == HalfInt(1));
        CHECK(c.symbol("rho1").duality == Duality::Generic);
        CHECK_FALSE(c.ctx().twisted());

        const Config g = profile("gspin");
        CHECK(g.family == GroupFamily::GSpinOdd);
        CHECK(g.ctx().twisted());
        CHECK(g.symbol("rho").duality == Duality::EssSelfDual);
        CHECK_THROWS_AS(profile("gl"), ConfigError);
    }

    TEST_CASE("render round trip") {
        for (const char* name : {"classical", "gspin"}) {
            const Config c = profile(name);
            const Config d = parse_config(render(c));
            CHECK(render(d) == render(c));
        }
    }

    TEST_CASE("comments and whitespace") {
        const Config c = parse_config("# cast\n family = sp-even  \n\nsigma = s # trailing\ngl.r.duality = selfdual\ngl.r.reducibility = 1/2\n");
        CHECK(c.family == GroupFamily::SpEven);
        CHECK(c.sigma.label == "s");
        CHECK(c.sigma.reducibility_of("r") == HalfInt::half());
    }

    TEST_CASE("errors carry line numbers") {
        auto msg = [](const std::string& text) {
            try {
                parse_config(text);
            } catch (const ConfigError& e) {
                return std::string(e.what());
            }
            return std::string();
        };
        CHECK(msg("family = so-odd\nnonsense\n").starts_with("line 2:"));
        CHECK(msg("family = so-odd\nfamily = sp-even\n").starts_with("line 2:"));
        CHECK(msg("family = so-odd\ncolour = red\n").starts_with("line 2:"));
        CHECK(msg("family = so-odd\ngl.r.reducibility = 1/3\n").starts_with("line 2:"));
        CHECK(msg("family = so-odd\ngl.r.duality = sometimes\n").starts_with("line 2:"));
        CHECK(msg("family = so-odd\nomega = w\n") != "");
        CHECK(msg("family = gspin-odd\nomega = w\ngl.r.duality = selfdual\n").find("ess-selfdual") != std::string::npos);
        CHECK(msg("family = so-odd\ngl.r.duality = ess-selfdual\n").find("gspin") != std::string::npos);
        CHECK(msg("family = so-odd\ngl.r.reducibility = -1\n") != "");
    }

    TEST_CASE("undeclared symbol lookup") {
        CHECK_THROWS_AS(profile("classical").symbol("pi"), ConfigError);
    }
}
