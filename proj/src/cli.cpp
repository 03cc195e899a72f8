#include "dps/cli.hpp"

#include "dps/aubert.hpp"
#include "dps/classical_mu.hpp"
#include "dps/classifier.hpp"
#include "dps/config.hpp"
#include "dps/expr.hpp"
#include "dps/gl_hopf.hpp"
#include "dps/harness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <optional>
#include <set>

namespace dps {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    bool json_out = false;
    std::string config_path;
    std::string profile_name = "classical";

    std::string expr;
    bool bruteforce = false;
    std::size_t max_degree = 6;

    std::string family, rho = "rho", rho0 = "rho0";
    std::string alpha, beta, a, b, x;
    bool same = false, distinct = false;

    std::string grid;
    std::vector<std::string> claims;
};

Config load(const Options& o) { return o.config_path.empty() ? profile(o.profile_name) : load_config(o.config_path); }

json envelope(const std::string& command, json params, json verdict, json factors, json citations) {
    return json{{"schema", kSchemaId},       {"command", command}, {"params", std::move(params)},
                {"verdict", std::move(verdict)}, {"factors", std::move(factors)}, {"citations", std::move(citations)}};
}

void emit_terms(std::ostream& out, const json& factors) {
    if (factors.empty()) out << "  0\n";
    for (const auto& f : factors) out << "  " << f["coefficient"].get<std::string>() << "\t" << f["text"].get<std::string>() << "\n";
}

template <class B>
json term_list(const FormalSum<B>& s) {
    json out = json::array();
    for (const auto& [t, c] : s) out.push_back({{"coefficient", c.str()}, {"text", render(t)}});
    return out;
}

json term_list(const FormalSum<GLTensor>& s) {
    json out = json::array();
    for (const auto& [t, c] : s)
        out.push_back({{"coefficient", c.str()}, {"text", render(t)}, {"left", render(t.left)}, {"right", render(t.right)}});
    return out;
}

json term_list(const FormalSum<MuTerm>& s) {
    json out = json::array();
    for (const auto& [t, c] : s)
        out.push_back({{"coefficient", c.str()}, {"text", render(t)}, {"left", render(t.left)}, {"right", render(t.right)}});
    return out;
}

json config_params(const Config& c, const Options& o) {
    return {{"family", to_string(c.family)},
            {"config", o.config_path.empty() ? "profile:" + o.profile_name : o.config_path}};
}

int cmd_m_star(const Options& o, std::ostream& out) {
    Config cfg = load(o);
    Expr e = parse_expr(o.expr);
    if (is_g_valued(e)) throw UsageError("m-star takes a GL expression (no '|x|')");
    GLWord w = lower_gl(e, cfg.symbols());
    auto sum = m_star_word(w);
    json params = config_params(cfg, o);
    params["expr"] = render(e);
    json j = envelope("m-star", params, {{"status", "ok"}, {"terms", sum.size()}}, term_list(sum),
                      json::array({"GL comultiplication: m*(d([a,b])) = sum over i of d([i+1,b]) (x) d([a,i])"}));
    if (o.json_out)
        out << j.dump(2) << "\n";
    else {
        out << "m*(" << render(w) << ") =\n";
        emit_terms(out, j["factors"]);
    }
    return 0;
}

int cmd_mu_star(const Options& o, std::ostream& out) {
    Config cfg = load(o);
    Expr e = parse_expr(o.expr);
    GWord w = lower_g(e, cfg.symbols());
    auto sum = mu_star_word(w, cfg.ctx());
    json params = config_params(cfg, o);
    params["expr"] = render(e);
    json j = envelope("mu-star", params, {{"status", "ok"}, {"terms", sum.size()}}, term_list(sum),
                      json::array({"classical comultiplication mu* = (m (x) 1) o (~ (x) m*) o s o m* on the GL block"}));
    if (o.json_out)
        out << j.dump(2) << "\n";
    else {
        out << "mu*(" << render(w) << ") =\n";
        emit_terms(out, j["factors"]);
    }
    return 0;
}

int cmd_aubert(const Options& o, std::ostream& out) {
    Config cfg = load(o);
    const DualCtx ctx = cfg.ctx();
    Expr e = parse_expr(o.expr);
    GWord w = lower_g(e, cfg.symbols());
    const SignedWord st = aubert_standard(w, ctx);
    json params = config_params(cfg, o);
    params["expr"] = render(e);
    params["bruteforce"] = o.bruteforce;
    json citations = json::array({"Aubert involution: factorwise dual takes each GL factor to the contragredient of its "
                                  "Zelevinsky dual and keeps the cuspidal atom"});

    if (!o.bruteforce) {
        FormalSum<GWord> s(st.word, st.sign);
        json j = envelope("aubert", params, {{"status", "ok"}, {"sign", st.sign}}, term_list(s), citations);
        if (o.json_out)
            out << j.dump(2) << "\n";
        else
            out << "D(" << render(w) << ") = " << (st.sign < 0 ? "-" : "") << render(st.word) << "\n";
        return 0;
    }

    const auto bf = grothendieck_normal_form(aubert_bruteforce_segments(w, ctx, o.max_degree), ctx);
    const auto fw = grothendieck_normal_form(FormalSum<GWord>(st.word, st.sign), ctx);
    const bool matches = bf == fw;
    std::optional<FormalSum<GWord>> hat;
    try {
        hat = hat_normalize(bf);
    } catch (const InvariantError&) {
    }
    citations.push_back("brute force: alternating sum over standard Levi subgroups of induced Jacquet modules");
    json verdict = {{"status", matches ? "ok" : "mismatch"},
                    {"matches_factorwise", matches},
                    {"hat_normalized", hat.has_value()},
                    {"sign", st.sign}};
    json j = envelope("aubert", params, verdict, term_list(hat ? *hat : bf), citations);
    if (o.json_out) {
        out << j.dump(2) << "\n";
    } else {
        out << (hat ? "hat(D(" : "D(") << render(w) << (hat ? ")) =\n" : ") =\n");
        emit_terms(out, j["factors"]);
        out << "factorwise dual: " << (st.sign < 0 ? "-" : "") << render(st.word) << "\n"
            << "matches factorwise dual: " << (matches ? "yes" : "NO") << "\n";
    }
    return matches ? 0 : 2;
}

HalfInt half(const std::string& flag, const std::string& v) {
    try {
        return HalfInt::parse(v);
    } catch (const std::invalid_argument&) {
        throw UsageError("--" + flag + ": malformed half-integer '" + v + "'");
    }
}

int cmd_dps(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.same == o.distinct) throw UsageError("dps needs exactly one of --same / --distinct");
    Config cfg = load(o);
    if (!o.family.empty()) {
        const GroupFamily f = parse_family(o.family);
        if (f != cfg.family) {
            if (!o.config_path.empty()) throw UsageError("--family " + o.family + " conflicts with the config family");
            const bool twisted = f == GroupFamily::GSpinOdd;
            if (twisted != cfg.ctx().twisted()) cfg = profile(twisted ? "gspin" : "classical");
            cfg.family = cfg.sigma.family = f;
            cfg.validate();
        }
    }

    DPSParams p;
    p.family = cfg.family;
    p.sigma = cfg.sigma.label;
    p.same = o.same;
    p.rho = cfg.symbol(o.rho);
    p.rho0 = o.same ? p.rho : cfg.symbol(o.rho0);
    p.alpha = o.alpha.empty() ? cfg.sigma.reducibility_of(p.rho.label) : half("alpha", o.alpha);
    if (o.same) {
        if (!o.beta.empty() && half("beta", o.beta) != p.alpha)
            err << "note: --beta ignored with --same (beta = alpha = " << p.alpha.str() << ")\n";
        p.beta = p.alpha;
    } else if (!o.beta.empty()) {
        p.beta = half("beta", o.beta);
    } else {
        auto it = cfg.sigma.reducibility.find(p.rho0.label);
        p.beta = it == cfg.sigma.reducibility.end() ? HalfInt(0) : it->second;
    }
    p.a = half("a", o.a);
    p.b = half("b", o.b);
    p.x = half("x", o.x);

    const Verdict v = classify(p);
    const FactorListReport rep = verify_factor_list(p, v);

    json params = {{"family", to_string(p.family)}, {"rho", p.rho.name()}, {"rho0", p.rho0.name()},
                   {"same", p.same},                {"alpha", p.alpha.str()}, {"beta", p.beta.str()},
                   {"a", p.a.str()},                {"b", p.b.str()},         {"x", p.x.str()},
                   {"sigma", p.sigma}};
    json factors = json::array();
    if (v.irreducible) {
        factors.push_back({{"text", render(dps_word(normalize_params(p).p))}, {"irreducible_word", true}});
    } else {
        for (const auto& f : v.factors)
            factors.push_back({{"text", render(f)},
                               {"standard_word", render(standard_word_of(f))},
                               {"leading_term", render(leading_jacquet_term(f))}});
    }
    json checks = {{"size_ok", rep.size_ok},
                   {"distinct", rep.distinct},
                   {"balanced", rep.balanced},
                   {"leading_ok", rep.leading_ok},
                   {"problems", rep.problems}};
    json verdict = {{"status", v.irreducible ? "irreducible" : "reducible"},
                    {"irreducible", v.irreducible},
                    {"length", v.length()},
                    {"case_id", v.case_id},
                    {"checks", checks}};
    json citations = json::array({v.citation, "guard: " + v.guard});
    const int code = rep.ok() ? 0 : 2;

    if (o.json_out) {
        out << envelope("dps", params, verdict, factors, citations).dump(2) << "\n";
        return code;
    }
    out << "params: " << p.str() << "\n"
        << "case:   " << v.case_id << "\n"
        << "guard:  " << v.guard << "\n"
        << "source: " << v.citation << "\n";
    if (v.irreducible) {
        out << "verdict: irreducible\n";
    } else {
        out << "verdict: reducible, length " << v.length() << "\n";
        for (std::size_t i = 0; i < v.factors.size(); ++i) out << "  " << i + 1 << ". " << render(v.factors[i]) << "\n";
    }
    out << "checks: " << (rep.ok() ? "ok" : "FAILED") << "\n";
    for (const auto& pr : rep.problems) out << "  " << pr << "\n";
    return code;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const bool run_grid = !o.grid.empty() || o.claims.empty();
    const std::string grid_name = o.grid.empty() ? "default" : o.grid;

    std::vector<const Claim*> selected;
    const auto& reg = claim_registry();
    if (o.claims.empty()) {
        for (const auto& c : reg) selected.push_back(&c);
    } else {
        for (const auto& id : o.claims) {
            auto it = std::find_if(reg.begin(), reg.end(), [&](const Claim& c) { return c.id == id; });
            if (it == reg.end()) throw UsageError("unknown claim id '" + id + "'");
            selected.push_back(&*it);
        }
    }

    json factors = json::array(), citations = json::array();
    int pass = 0, fail = 0, assumed = 0;
    for (const Claim* c : selected) {
        const ClaimOutcome r = verify_claim(*c);
        (r.status == ClaimStatus::Pass ? pass : r.status == ClaimStatus::Fail ? fail : assumed)++;
        factors.push_back({{"text", c->id},
                           {"status", to_string(r.status)},
                           {"kind", to_string(c->kind)},
                           {"family", to_string(c->family)},
                           {"statement", c->statement},
                           {"expected", r.expected},
                           {"actual", r.actual},
                           {"diff", r.diff}});
        citations.push_back(c->id + ": " + c->citation);
    }
    for (const auto& f : imported_facts()) citations.push_back(f.id + " (imported): " + f.source + ": " + f.statement);

    json grid_report = nullptr;
    std::size_t tuples = 0, bad = 0;
    std::vector<std::string> examples;
    if (run_grid) {
        const auto t0 = std::chrono::steady_clock::now();
        for (const auto& p : grid(parse_grid(grid_name))) {
            ++tuples;
            try {
                const auto rep = verify_factor_list(p);
                if (!rep.ok()) {
                    ++bad;
                    if (examples.size() < 5) examples.push_back(p.str() + ": " + rep.problems.front());
                }
            } catch (const std::exception& e) {
                ++bad;
                if (examples.size() < 5) examples.push_back(p.str() + ": " + e.what());
            }
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        grid_report = {{"name", grid_name}, {"tuples", tuples}, {"failures", bad}, {"seconds", secs}, {"examples", examples}};
    }

    const bool ok = fail == 0 && bad == 0;
    json params = {{"grid", run_grid ? json(grid_name) : json(nullptr)}, {"claims", o.claims}};
    json verdict = {{"status", ok ? "pass" : "fail"},
                    {"claims", {{"pass", pass}, {"fail", fail}, {"assumed", assumed}}},
                    {"grid", grid_report}};
    if (o.json_out) {
        out << envelope("verify", params, verdict, factors, citations).dump(2) << "\n";
    } else {
        for (const auto& f : factors) {
            out << f["text"].get<std::string>() << "  " << f["status"].get<std::string>();
            if (f["status"] == "fail") out << "  (" << f["diff"].get<std::string>() << ")";
            out << "\n";
        }
        out << "claims: " << pass << " pass, " << fail << " fail, " << assumed << " assumed\n";
        if (run_grid) {
            out << "grid " << grid_name << ": " << tuples << " tuples, " << bad << " failures\n";
            for (const auto& ex : examples) out << "  " << ex << "\n";
        }
        out << (ok ? "PASS" : "FAIL") << "\n";
    }
    return ok ? 0 : 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"dpscalc: Jacquet-module calculus and reducibility of degenerate principal series"};
    app.name("dpscalc");
    app.require_subcommand(1);
    app.add_flag("--json", o.json_out, "emit JSON (schema dpscalc/1)");
    auto* cfg_opt = app.add_option("--config", o.config_path, "key-value config document");
    app.add_option("--profile", o.profile_name, "built-in profile: classical | gspin")
        ->check(CLI::IsMember({"classical", "gspin"}))
        ->excludes(cfg_opt);

    auto* m = app.add_subcommand("m-star", "GL comultiplication of a GL expression");
    m->add_option("expr", o.expr)->required();
    auto* mu = app.add_subcommand("mu-star", "classical comultiplication of a G expression");
    mu->add_option("expr", o.expr)->required();
    auto* au = app.add_subcommand("aubert", "Aubert dual of a G expression");
    au->add_option("expr", o.expr)->required();
    au->add_flag("--bruteforce", o.bruteforce, "evaluate the alternating sum and compare with the factorwise dual");
    au->add_option("--max-degree", o.max_degree, "GL degree bound for --bruteforce")->capture_default_str();

    auto* d = app.add_subcommand("dps", "reducibility and composition factors");
    d->add_option("--family", o.family, "sp-even | so-odd | gspin-odd");
    d->add_option("--rho", o.rho)->capture_default_str();
    d->add_option("--rho0", o.rho0)->capture_default_str();
    d->add_option("--alpha", o.alpha, "reducibility exponent of rho (default: from config)");
    d->add_option("--beta", o.beta, "reducibility exponent of rho0 (default: from config)");
    d->add_option("--a", o.a)->required();
    d->add_option("--b", o.b)->required();
    d->add_option("--x", o.x)->required();
    auto* fs = d->add_flag("--same", o.same, "rho0 = rho");
    auto* fd = d->add_flag("--distinct", o.distinct, "rho0 != rho");
    fs->excludes(fd);

    auto* v = app.add_subcommand("verify", "claim registry and grid checks");
    v->add_option("--grid", o.grid, "default (= acceptance) | acceptance | small")->check(CLI::IsMember({"default", "acceptance", "small"}));
    v->add_option("--claims", o.claims, "comma-separated claim ids")->delimiter(',');

    for (auto* s : {m, mu, au, d, v}) s->fallthrough();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (m->parsed()) return cmd_m_star(o, out);
        if (mu->parsed()) return cmd_mu_star(o, out);
        if (au->parsed()) return cmd_aubert(o, out);
        if (d->parsed()) return cmd_dps(o, out, err);
        return cmd_verify(o, out);
    } catch (const SyntaxError& e) {
        err << "syntax error at " << e.what() << "\n";
        return 1;
    } catch (const InvariantError& e) {
        err << "verification failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        // config, parameter, unsupported-input and usage errors
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace dps
