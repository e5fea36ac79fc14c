/*
 * Deterministic JSON reports for the command-line surface.
 *
 * JSON is the canonical output format; the plain-text tables printed by
 * the CLI are rendered from the same data.  Keys are emitted in
 * insertion order and all numbers that could overflow a machine word
 * (big integers, exact rationals) are serialized as decimal-free
 * strings, so identical configuration yields byte-identical output.
 */
#ifndef SL2CV_JSON_OUT_HPP_
#define SL2CV_JSON_OUT_HPP_

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sl2cv/cheb.hpp"
#include "sl2cv/classifier.hpp"
#include "sl2cv/integrality.hpp"

namespace sl2cv {

using ordered_json = nlohmann::ordered_json;

// Options shared by every subcommand and recorded in every report.
struct RunConfig {
    bool json = false;              // machine output instead of the table rendering
    unsigned long max_order = 1024; // root-of-unity order cap for enumerations
    std::size_t max_gb_steps = 50000;  // S-polynomial reduction budget
    unsigned long seed = 402213;  // seed for randomized verification suites
};

inline ordered_json config_json(const RunConfig& cfg) {
    ordered_json j;
    j["max_order"] = cfg.max_order;
    j["max_gb_steps"] = cfg.max_gb_steps;
    j["seed"] = cfg.seed;
    return j;
}

// {"conductor": N, "coeffs": ["p/q", ...]} with the element reduced to
// its minimal conductor first
inline ordered_json cyclo_json(const CycloElt& v) {
    const CycloElt r = v.reduce();
    ordered_json j;
    j["conductor"] = r.conductor();
    ordered_json coeffs = ordered_json::array();
    for (const mpq_class& c : r.coeffs()) coeffs.push_back(q_to_string(c));
    j["coeffs"] = std::move(coeffs);
    return j;
}

inline ordered_json root_json(const RootOfUnity& w) {
    ordered_json j;
    j["order"] = w.order();
    j["exponent"] = w.exponent();
    return j;
}

inline ordered_json presentation_json(const GroupPresentation& p) {
    ordered_json j;
    j["n1"] = p.n1;
    j["m1"] = p.m1;
    j["n2"] = p.n2;
    j["m2"] = p.m2;
    return j;
}

inline ordered_json piece_json(const ComponentPiece& pc) {
    ordered_json j;
    j["dim"] = pc.dim;
    if (pc.x_fixed) {
        j["zeta_a"] = root_json(pc.lambda);
        j["x"] = cyclo_json(pc.x);
    } else {
        j["x"] = nullptr;
    }
    if (pc.y_fixed) {
        j["zeta_b"] = root_json(pc.mu);
        j["y"] = cyclo_json(pc.y);
    } else {
        j["y"] = nullptr;
    }
    if (pc.z_fixed)
        j["z"] = cyclo_json(pc.z);
    else
        j["z"] = nullptr;
    j["orbit_size"] = pc.orbit_size;
    j["red_nonzero"] = pc.red_nonzero;
    return j;
}

// {"id": i, "dim": "empty|0|1|2", "points": [...], "gen_irr": bool,
//  "orbit_count": int}
inline ordered_json component_json(const ComponentReport& r) {
    ordered_json j;
    j["id"] = r.id;
    j["dim"] = to_string(r.dim);
    ordered_json pieces = ordered_json::array();
    for (const ComponentPiece& pc : r.pieces) pieces.push_back(piece_json(pc));
    j["points"] = std::move(pieces);
    j["gen_irr"] = r.gen_irr_nonempty;
    j["orbit_count"] = r.orbit_count;
    return j;
}

inline ordered_json graph_json(const IntersectionGraph& g) {
    ordered_json j;
    j["nodes"] = g.nodes;
    ordered_json edges = ordered_json::array();
    for (const auto& [a, b] : g.edges) edges.push_back(ordered_json::array({a, b}));
    j["edges"] = std::move(edges);
    return j;
}

inline ordered_json point_json(int component, const M9Point& pt) {
    ordered_json j;
    j["component"] = component;
    j["zeta_a"] = root_json(pt.zeta_2s);
    j["zeta_b"] = root_json(pt.zeta_t);
    j["x"] = cyclo_json(pt.x);
    j["y"] = cyclo_json(pt.y);
    j["z"] = cyclo_json(pt.z);
    j["orbit_size"] = pt.orbit_size;
    j["z_integral"] = pt.z_integral;
    return j;
}

// ===== subcommand reports =====

inline ordered_json cheb_report_json(long long n, std::optional<long long> m, bool with_gcd) {
    ordered_json j;
    j["command"] = "cheb";
    j["n"] = n;
    const ChebPair pn = cheb_pair(n);
    j["c"] = poly_human(pn.c);
    j["d"] = poly_human(pn.d);
    // determinant identity c^2 + t c d + d^2 = 1
    const IntPoly det =
        pn.c * pn.c + IntPoly::t() * pn.c * pn.d + pn.d * pn.d;
    j["det_identity"] = det == IntPoly::one();
    if (m) {
        j["m"] = *m;
        const ChebPair pm = cheb_pair(*m);
        j["c_m"] = poly_human(pm.c);
        j["d_m"] = poly_human(pm.d);
        j["product_identity"] = cheb_product(n, *m).pass;
        j["compose_identity"] = cheb_compose(n, *m).pass;
        if (with_gcd) {
            const long long g = std::gcd(n < 0 ? -n : n, *m < 0 ? -*m : *m);
            const IntPoly gp = cheb_gcd(n, *m);
            j["gcd_index"] = g;
            j["gcd"] = poly_human(gp);
            j["gcd_is_c_of_index"] = gp == cheb_pair(g).c;
        }
    }
    return j;
}

inline ordered_json components_report_json(const GroupPresentation& p, const RunConfig& cfg) {
    ordered_json j;
    j["command"] = "components";
    j["config"] = config_json(cfg);
    j["presentation"] = presentation_json(p);
    ordered_json comps = ordered_json::array();
    for (const ComponentReport& r : classify_all(p)) comps.push_back(component_json(r));
    j["components"] = std::move(comps);
    j["graph"] = graph_json(intersection_graph(p));
    return j;
}

inline ordered_json valuation_report_json(const ValuationReport& r) {
    ordered_json j;
    ordered_json slopes = ordered_json::array();
    for (const mpq_class& s : r.slopes) slopes.push_back(q_to_string(s));
    j["slopes"] = std::move(slopes);
    j["integral_somewhere"] = r.is_integral_somewhere;
    j["integral_everywhere"] = r.is_integral_everywhere;
    return j;
}

inline ordered_json integrality_report_json(const GroupPresentation& p, const RunConfig& cfg,
                                            std::optional<std::pair<unsigned long, unsigned long>>
                                                gamma = std::nullopt) {
    ordered_json j;
    j["command"] = "integrality";
    j["config"] = config_json(cfg);
    if (gamma) {
        j["gamma"] = ordered_json::array({gamma->first, gamma->second});
    }
    j["presentation"] = presentation_json(p);

    ordered_json comps = ordered_json::array();
    for (const ComponentReport& r : classify_all(p)) comps.push_back(component_json(r));
    j["components"] = std::move(comps);

    const WeakIntegralityVerdict v = weak_integrality(p);
    ordered_json points = ordered_json::array();
    for (std::size_t i = 0; i < v.points.size(); ++i)
        points.push_back(point_json(v.point_component[i], v.points[i]));
    j["points"] = std::move(points);

    ordered_json primes = ordered_json::array();
    for (const PrimeEvidence& ev : v.primes) {
        ordered_json row;
        row["prime"] = ev.prime.get_str();
        row["fails"] = ev.fails;
        row["witness"] = ev.witness;
        ordered_json reports = ordered_json::array();
        for (const ValuationReport& r : ev.reports) reports.push_back(valuation_report_json(r));
        row["reports"] = std::move(reports);
        primes.push_back(std::move(row));
    }
    j["valuations"] = std::move(primes);

    ordered_json verdict;
    verdict["conditions_met"] = v.conditions_met;
    verdict["blocking_components"] = v.blocking_components;
    ordered_json failing = ordered_json::array();
    for (const mpz_class& q : v.failing_primes) failing.push_back(q.get_str());
    verdict["failing_primes"] = std::move(failing);
    ordered_json checked = ordered_json::array();
    for (const mpz_class& q : v.integral_primes_checked) checked.push_back(q.get_str());
    verdict["integral_primes_checked"] = std::move(checked);
    j["verdict"] = std::move(verdict);

    if (gamma) {
        ordered_json census = ordered_json::array();
        for (const GammaValuationRow& row : gamma_valuations(gamma->first, gamma->second)) {
            ordered_json r;
            r["component"] = row.component;
            r["order"] = row.order;
            r["index"] = row.index;
            r["orbit_size"] = row.orbit_size;
            r["value"] = q_to_string(row.value);
            r["norm"] = q_to_string(row.norm);
            census.push_back(std::move(r));
        }
        j["gamma_census"] = std::move(census);
    }
    return j;
}

// Canonical rendering: two-space indent and a trailing newline.
inline std::string json_dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace sl2cv

#endif  // SL2CV_JSON_OUT_HPP_
