/* sl2cv — exact computation of SL2 character-variety components and
 * weak-integrality verdicts for the two-syllable one-relator groups
 * <a, b | a^{n1} b^{m1} a^{n2} b^{m2}>.
 *
 * Subcommands:
 *   cheb n [m] [--gcd]            power-expansion polynomials and identities
 *   components n1 m1 n2 m2        component dimensions and intersection graph
 *   integrality (n1 m1 n2 m2 | --gamma ell k)
 *                                 isolated points, valuations, verdict
 *   verify [--ideals] [--cheb N] [--oracle N]
 *                                 certificate suites (bare: all of them)
 *
 * Global flags: --json, --max-order N, --max-gb-steps N, --seed S.  JSON is
 * the canonical output; the plain tables are rendered from the same report
 * object.  Exit codes: 0 success, 1 verification failure, 2 invalid input,
 * 3 resource limit exceeded.
 */

#include <CLI11.hpp>

#include "sl2cv/json_out.hpp"
#include "sl2cv/verify.hpp"

#include <cstdio>
#include <exception>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace {

using sl2cv::ordered_json;

struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Largest root-of-unity order the classifier may enumerate for this
// presentation; used as the --max-order admission check.
long long required_order(const sl2cv::GroupPresentation& p) {
    const auto al = [](long long v) { return v < 0 ? -v : v; };
    const auto mx = [](long long a, long long b) { return a > b ? a : b; };
    long long b = 2 * mx(al(p.s()), al(p.t()));
    b = mx(b, 2 * std::lcm(al(p.n1), al(p.n2)));
    b = mx(b, 2 * std::lcm(al(p.m1), al(p.m2)));
    b = mx(b, 4 * mx(al(p.n1), al(p.m1)));
    return mx(b, 4);
}

void check_order_budget(const sl2cv::GroupPresentation& p, const sl2cv::RunConfig& cfg) {
    const long long need = required_order(p);
    if (need > static_cast<long long>(cfg.max_order))
        throw ResourceLimit("presentation needs root-of-unity orders up to " +
                            std::to_string(need) + "; raise --max-order (current " +
                            std::to_string(cfg.max_order) + ")");
}

sl2cv::GroupPresentation presentation_of(const std::vector<long long>& e) {
    if (e.size() != 4) throw CLI::ValidationError("expected four exponents n1 m1 n2 m2");
    for (long long v : e)
        if (v == 0) throw CLI::ValidationError("exponents must be nonzero");
    return {e[0], e[1], e[2], e[3]};
}

// ===== table renderings (reading only from the JSON report) =====

std::string cyclo_human(const ordered_json& j) {
    const unsigned long cond = j.at("conductor").get<unsigned long>();
    const auto& coeffs = j.at("coeffs");
    if (cond == 1) return coeffs.empty() ? std::string("0") : coeffs.at(0).get<std::string>();
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out += ", ";
        out += coeffs.at(i).get<std::string>();
    }
    out += "] in Q(zeta_" + std::to_string(cond) + ")";
    return out;
}

std::string root_human(const ordered_json& j) {
    return "zeta_" + std::to_string(j.at("order").get<unsigned long>()) + "^" +
           std::to_string(j.at("exponent").get<unsigned long>());
}

std::string presentation_human(const ordered_json& j) {
    const auto e = [&](const char* k) { return j.at(k).get<long long>(); };
    return "<a, b | a^" + std::to_string(e("n1")) + " b^" + std::to_string(e("m1")) + " a^" +
           std::to_string(e("n2")) + " b^" + std::to_string(e("m2")) + ">";
}

void render_cheb(const ordered_json& j) {
    const auto line = [](long long idx, const std::string& c, const std::string& d) {
        std::printf("c_%lld = %s, d_%lld = %s\n", idx, c.c_str(), idx, d.c_str());
    };
    line(j.at("n").get<long long>(), j.at("c").get<std::string>(), j.at("d").get<std::string>());
    if (j.contains("m")) {
        line(j.at("m").get<long long>(), j.at("c_m").get<std::string>(),
             j.at("d_m").get<std::string>());
        std::printf("identities: det %s, product %s, composition %s\n",
                    j.at("det_identity").get<bool>() ? "ok" : "FAIL",
                    j.at("product_identity").get<bool>() ? "ok" : "FAIL",
                    j.at("compose_identity").get<bool>() ? "ok" : "FAIL");
    } else {
        std::printf("identities: det %s\n", j.at("det_identity").get<bool>() ? "ok" : "FAIL");
    }
    if (j.contains("gcd"))
        std::printf("gcd = c_%lld = %s%s\n", j.at("gcd_index").get<long long>(),
                    j.at("gcd").get<std::string>().c_str(),
                    j.at("gcd_is_c_of_index").get<bool>() ? "" : "  (MISMATCH)");
}

void render_piece(const ordered_json& pc) {
    std::printf("    piece: dim %d", pc.at("dim").get<int>());
    if (!pc.at("x").is_null())
        std::printf(", lambda = %s, x = %s", root_human(pc.at("zeta_a")).c_str(),
                    cyclo_human(pc.at("x")).c_str());
    else
        std::printf(", x free");
    if (!pc.at("y").is_null())
        std::printf(", mu = %s, y = %s", root_human(pc.at("zeta_b")).c_str(),
                    cyclo_human(pc.at("y")).c_str());
    else
        std::printf(", y free");
    if (!pc.at("z").is_null())
        std::printf(", z = %s", cyclo_human(pc.at("z")).c_str());
    else
        std::printf(", z free");
    std::printf(", orbit size %lld, red %s\n", pc.at("orbit_size").get<long long>(),
                pc.at("red_nonzero").get<bool>() ? "nonzero" : "zero");
}

void render_components(const ordered_json& j) {
    std::printf("presentation %s\n", presentation_human(j.at("presentation")).c_str());
    for (const auto& c : j.at("components")) {
        std::printf("component %2d: dim %s", c.at("id").get<int>(),
                    c.at("dim").get<std::string>().c_str());
        if (c.at("dim").get<std::string>() != "empty")
            std::printf(", %d orbit(s), gen.irr %s", c.at("orbit_count").get<int>(),
                        c.at("gen_irr").get<bool>() ? "yes" : "no");
        std::printf("\n");
        for (const auto& pc : c.at("points")) render_piece(pc);
    }
    const auto& g = j.at("graph");
    std::printf("graph nodes:");
    for (const auto& n : g.at("nodes")) std::printf(" %d", n.get<int>());
    std::printf("\ngraph edges:");
    if (g.at("edges").empty()) std::printf(" none");
    for (const auto& e : g.at("edges"))
        std::printf(" (%d,%d)", e.at(0).get<int>(), e.at(1).get<int>());
    std::printf("\n");
}

void render_integrality(const ordered_json& j) {
    std::printf("presentation %s\n", presentation_human(j.at("presentation")).c_str());
    std::printf("component dims:");
    for (const auto& c : j.at("components"))
        std::printf(" %d:%s", c.at("id").get<int>(), c.at("dim").get<std::string>().c_str());
    std::printf("\n");

    for (const auto& pt : j.at("points")) {
        std::printf("point (component %d): lambda = %s, mu = %s\n", pt.at("component").get<int>(),
                    root_human(pt.at("zeta_a")).c_str(), root_human(pt.at("zeta_b")).c_str());
        std::printf("  x = %s\n  y = %s\n  z = %s\n", cyclo_human(pt.at("x")).c_str(),
                    cyclo_human(pt.at("y")).c_str(), cyclo_human(pt.at("z")).c_str());
        std::printf("  orbit size %lld, z %s\n", pt.at("orbit_size").get<long long>(),
                    pt.at("z_integral").get<bool>() ? "integral" : "non-integral");
    }

    for (const auto& ev : j.at("valuations")) {
        std::printf("prime %s: %s\n", ev.at("prime").get<std::string>().c_str(),
                    ev.at("fails").get<bool>() ? "fails (no integral point)"
                                               : "integral point exists");
        const auto& reports = ev.at("reports");
        for (std::size_t i = 0; i < reports.size(); ++i) {
            std::printf("  point %zu slopes:", i);
            for (const auto& s : reports.at(i).at("slopes"))
                std::printf(" %s", s.get<std::string>().c_str());
            std::printf("  (integral somewhere: %s)\n",
                        reports.at(i).at("integral_somewhere").get<bool>() ? "yes" : "no");
        }
    }

    if (j.contains("gamma_census")) {
        std::printf("census:\n");
        for (const auto& r : j.at("gamma_census"))
            std::printf(
                "  component %d, order %lu (index %lu), orbit size %lld, nu-hat %s, norm %s\n",
                r.at("component").get<int>(), r.at("order").get<unsigned long>(),
                r.at("index").get<unsigned long>(), r.at("orbit_size").get<long long>(),
                r.at("value").get<std::string>().c_str(), r.at("norm").get<std::string>().c_str());
    }

    const auto& v = j.at("verdict");
    if (!v.at("conditions_met").get<bool>()) {
        std::printf("verdict: structural conditions not met; blocking components:");
        for (const auto& b : v.at("blocking_components")) std::printf(" %d", b.get<int>());
        std::printf("\n");
        return;
    }
    const auto& failing = v.at("failing_primes");
    if (failing.empty()) {
        std::printf("verdict: weakly integral at every prime\n");
    } else {
        std::printf("verdict: weak integrality fails exactly at {");
        for (std::size_t i = 0; i < failing.size(); ++i)
            std::printf("%s%s", i ? ", " : "", failing.at(i).get<std::string>().c_str());
        std::printf("}\n");
    }
}

// ===== subcommand drivers =====

int finish(const ordered_json& j, const sl2cv::RunConfig& cfg,
           void (*render)(const ordered_json&), bool ok) {
    if (cfg.json)
        std::fputs(sl2cv::json_dump(j).c_str(), stdout);
    else
        render(j);
    return ok ? 0 : 1;
}

int cmd_cheb(long long n, std::optional<long long> m, bool with_gcd,
             const sl2cv::RunConfig& cfg) {
    const ordered_json j = sl2cv::cheb_report_json(n, m, with_gcd);
    bool ok = j.at("det_identity").get<bool>();
    if (j.contains("m"))
        ok = ok && j.at("product_identity").get<bool>() && j.at("compose_identity").get<bool>();
    if (j.contains("gcd")) ok = ok && j.at("gcd_is_c_of_index").get<bool>();
    return finish(j, cfg, render_cheb, ok);
}

int cmd_components(const sl2cv::GroupPresentation& p, const sl2cv::RunConfig& cfg) {
    check_order_budget(p, cfg);
    return finish(sl2cv::components_report_json(p, cfg), cfg, render_components, true);
}

int cmd_integrality(const sl2cv::GroupPresentation& p,
                    std::optional<std::pair<unsigned long, unsigned long>> gamma,
                    const sl2cv::RunConfig& cfg) {
    check_order_budget(p, cfg);
    return finish(sl2cv::integrality_report_json(p, cfg, gamma), cfg, render_integrality, true);
}

int cmd_verify(bool ideals, std::optional<long long> cheb_bound, std::optional<int> oracle_words,
               const sl2cv::RunConfig& cfg) {
    const bool all = !ideals && !cheb_bound && !oracle_words;

    std::vector<sl2cv::VerifyResult> results;
    if (cheb_bound || all) {
        const long long b = cheb_bound ? *cheb_bound : 40;
        results.push_back(sl2cv::verify_cheb(b, b < 24 ? b : 24));
    }
    if (oracle_words || all)
        results.push_back(sl2cv::verify_oracle(oracle_words ? *oracle_words : 200, cfg.seed));
    if (ideals || all) {
        sl2cv::GroebnerOptions opts;
        opts.max_steps = cfg.max_gb_steps;
        results.push_back(sl2cv::verify_ideals(opts));
    }

    bool ok = true;
    ordered_json j;
    j["command"] = "verify";
    j["config"] = sl2cv::config_json(cfg);
    ordered_json suites = ordered_json::array();
    for (const sl2cv::VerifyResult& r : results) {
        ok = ok && r.pass;
        ordered_json s;
        s["name"] = r.name;
        s["pass"] = r.pass;
        s["checks"] = r.checks;
        s["notes"] = r.notes;
        if (!r.pass) s["detail"] = r.detail;
        suites.push_back(std::move(s));
    }
    j["suites"] = std::move(suites);
    j["pass"] = ok;

    if (cfg.json) {
        std::fputs(sl2cv::json_dump(j).c_str(), stdout);
    } else {
        for (const auto& s : j.at("suites")) {
            for (const auto& note : s.at("notes"))
                std::printf("  note: %s\n", note.get<std::string>().c_str());
            if (s.at("pass").get<bool>())
                std::printf("%s: PASS (%lld checks)\n", s.at("name").get<std::string>().c_str(),
                            s.at("checks").get<long long>());
            else
                std::printf("%s: FAIL — %s\n", s.at("name").get<std::string>().c_str(),
                            s.at("detail").get<std::string>().c_str());
        }
        std::printf("verify: %s\n", ok ? "PASS" : "FAIL");
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact SL2 character-variety components and weak integrality"};
    app.require_subcommand(1);

    sl2cv::RunConfig cfg;
    app.add_flag("--json", cfg.json, "emit the canonical JSON report");
    app.add_option("--max-order", cfg.max_order, "root-of-unity order budget")
        ->capture_default_str();
    app.add_option("--max-gb-steps", cfg.max_gb_steps, "S-polynomial reduction budget")
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed for randomized verification suites")
        ->capture_default_str();

    // cheb
    auto* cheb = app.add_subcommand("cheb", "power-expansion polynomials c_n, d_n");
    long long cheb_n = 0;
    std::optional<long long> cheb_m;
    bool cheb_gcd_flag = false;
    cheb->add_option("n", cheb_n, "first index")->required();
    cheb->add_option("m", cheb_m, "second index (enables identity checks)");
    cheb->add_flag("--gcd", cheb_gcd_flag, "also print gcd(c_n, c_m)");

    // components
    auto* comps = app.add_subcommand("components", "component dimensions and intersections");
    std::vector<long long> comp_exps;
    comps->add_option("exponents", comp_exps, "n1 m1 n2 m2")->expected(4);

    // integrality
    auto* integ = app.add_subcommand("integrality", "isolated points and valuation verdict");
    std::vector<long long> integ_exps;
    std::vector<unsigned long> gamma_lk;
    auto* integ_exp_opt = integ->add_option("exponents", integ_exps, "n1 m1 n2 m2")->expected(4);
    auto* gamma_opt = integ->add_option("--gamma", gamma_lk, "prime-power pair: ell k")
                          ->expected(2)
                          ->excludes(integ_exp_opt);

    // verify
    auto* verify = app.add_subcommand("verify", "certificate suites");
    bool v_ideals = false;
    std::optional<long long> v_cheb;
    std::optional<int> v_oracle;
    verify->add_flag("--ideals", v_ideals, "membership and intersection certificates");
    verify->add_option("--cheb", v_cheb, "polynomial identity suite up to this index");
    verify->add_option("--oracle", v_oracle, "trace-expansion suite with this many words");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // parse problems are invalid input; --help is success
    }

    try {
        if (cheb->parsed()) {
            if (cheb_gcd_flag && !cheb_m) throw CLI::ValidationError("--gcd needs two indices");
            return cmd_cheb(cheb_n, cheb_m, cheb_gcd_flag, cfg);
        }
        if (comps->parsed()) return cmd_components(presentation_of(comp_exps), cfg);
        if (integ->parsed()) {
            if (gamma_opt->count()) {
                const auto p = sl2cv::gamma_presentation(gamma_lk[0], gamma_lk[1]);
                return cmd_integrality(p, std::make_pair(gamma_lk[0], gamma_lk[1]), cfg);
            }
            if (integ_exps.empty())
                throw CLI::ValidationError("integrality needs four exponents or --gamma ell k");
            return cmd_integrality(presentation_of(integ_exps), std::nullopt, cfg);
        }
        if (verify->parsed()) return cmd_verify(v_ideals, v_cheb, v_oracle, cfg);
    } catch (const ResourceLimit& e) {
        std::fprintf(stderr, "resource limit: %s\n", e.what());
        return 3;
    } catch (const sl2cv::GroebnerLimit& e) {
        std::fprintf(stderr, "resource limit: %s\n", e.what());
        return 3;
    } catch (const CLI::Error& e) {
        std::fprintf(stderr, "invalid input: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "invalid input: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
