#ifndef SL2CV_FIXTURES_HPP_
#define SL2CV_FIXTURES_HPP_

/*
 * Transcribed generator tables: the ten prime components of the universal
 * relation ideal, the sixteen pairwise intersection ideals that are
 * nonempty, and the intersection graph itself.  Everything downstream
 * (decomposition certificates, the component classifier) checks against
 * these fixed lists, so they are kept as plain strings, parsed once.
 */

#include "sl2cv/groebner.hpp"
#include "sl2cv/mpoly.hpp"
#include "sl2cv/trace_algebra.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sl2cv {

inline IdealData universal_ideal() { return IdealData(relation_ideal_symbolic()); }

namespace detail {

inline std::vector<MPoly> parse_gens(const std::vector<const char*>& texts) {
    std::vector<MPoly> out;
    out.reserve(texts.size());
    for (const char* t : texts) out.push_back(MPoly::parse(t));
    return out;
}

}  // namespace detail

// Generators of the prime component wp_i, i = 1..10, exactly as tabulated.
inline IdealData component_ideal(int i) {
    static const char* det_n1 = "gn1^2 + x*gn1*dn1 + dn1^2 - 1";
    static const char* det_m1 = "gm1^2 + y*gm1*dm1 + dm1^2 - 1";
    static const char* z_gen =
        "z*gn1*gm1 + x*gn1*dm1 + y*dn1*gm1 + 2*dn1*dm1";
    static const std::vector<std::vector<const char*>> tables = {
        {"gn1", "gn2", "dn1 + 1", "dn2 + 1", "gm1 + gm2", "y*gm1 + dm1 - dm2", det_m1},
        {"gn1", "gn2", "dn1 + 1", "dn2 - 1", "gm1 - gm2", "y*gm1 + dm1 + dm2", det_m1},
        {"gn1", "gn2", "dn1 - 1", "dn2 - 1", "gm1 + gm2", "y*gm1 + dm1 - dm2", det_m1},
        {"gn1", "gn2", "dn1 - 1", "dn2 + 1", "gm1 - gm2", "y*gm1 + dm1 + dm2", det_m1},
        {"gm1", "gm2", "dm1 + 1", "dm2 + 1", "gn1 + gn2", "x*gn1 + dn1 - dn2", det_n1},
        {"gm1", "gm2", "dm1 + 1", "dm2 - 1", "gn1 - gn2", "x*gn1 + dn1 + dn2", det_n1},
        {"gm1", "gm2", "dm1 - 1", "dm2 - 1", "gn1 + gn2", "x*gn1 + dn1 - dn2", det_n1},
        {"gm1", "gm2", "dm1 - 1", "dm2 + 1", "gn1 - gn2", "x*gn1 + dn1 + dn2", det_n1},
        {"gn1 + gn2", "dn1 + dn2", "gm1 - gm2", "dm1 - dm2", z_gen, det_n1, det_m1},
        {"gn1 - gn2", "dn1 - dn2", "gm1 + gm2", "dm1 + dm2", z_gen, det_n1, det_m1},
    };
    if (i < 1 || i > 10) throw std::out_of_range("component_ideal: index must be 1..10");
    return IdealData(detail::parse_gens(tables[static_cast<std::size_t>(i - 1)]));
}

// Edges of the intersection graph: the unordered pairs {i, j} with
// V(wp_i) meeting V(wp_j).
inline const std::vector<std::pair<int, int>>& figure_edges() {
    static const std::vector<std::pair<int, int>> edges = {
        {1, 5}, {1, 7}, {3, 5}, {3, 7}, {2, 6}, {2, 8}, {4, 6}, {4, 8},
        {2, 9}, {4, 9}, {5, 9}, {7, 9}, {1, 10}, {3, 10}, {6, 10}, {8, 10}};
    return edges;
}

inline bool figure_has_edge(int i, int j) {
    if (i > j) std::swap(i, j);
    const auto& e = figure_edges();
    return std::find(e.begin(), e.end(), std::make_pair(i, j)) != e.end();
}

// All unordered pairs absent from the graph; every one of them has
// 1 in wp_i + wp_j.
inline std::vector<std::pair<int, int>> absent_pairs() {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= 10; ++i)
        for (int j = i + 1; j <= 10; ++j)
            if (!figure_has_edge(i, j)) out.emplace_back(i, j);
    return out;
}

// The tabulated ideal of wp_i + wp_j for the sixteen graph edges;
// nullopt for the pairs whose intersection is empty.
inline std::optional<IdealData> intersection_ideal(int i, int j) {
    if (i == j) throw std::invalid_argument("intersection_ideal: need i != j");
    if (i < 1 || i > 10 || j < 1 || j > 10)
        throw std::out_of_range("intersection_ideal: indices must be 1..10");
    if (i > j) std::swap(i, j);
    static const char* det_n1 = "gn1^2 + x*gn1*dn1 + dn1^2 - 1";
    static const char* det_m1 = "gm1^2 + y*gm1*dm1 + dm1^2 - 1";
    static const std::map<std::pair<int, int>, std::vector<const char*>> tables = {
        {{1, 5}, {"gn1", "gn2", "dn1 + 1", "dn2 + 1", "gm1", "gm2", "dm1 + 1", "dm2 + 1"}},
        {{1, 7}, {"gn1", "gn2", "dn1 + 1", "dn2 + 1", "gm1", "gm2", "dm1 - 1", "dm2 - 1"}},
        {{3, 5}, {"gn1", "gn2", "dn1 - 1", "dn2 - 1", "gm1", "gm2", "dm1 + 1", "dm2 + 1"}},
        {{3, 7}, {"gn1", "gn2", "dn1 - 1", "dn2 - 1", "gm1", "gm2", "dm1 - 1", "dm2 - 1"}},
        {{2, 6}, {"gn1", "gn2", "dn1 + 1", "dn2 - 1", "gm1", "gm2", "dm1 + 1", "dm2 - 1"}},
        {{2, 8}, {"gn1", "gn2", "dn1 + 1", "dn2 - 1", "gm1", "gm2", "dm1 - 1", "dm2 + 1"}},
        {{4, 6}, {"gn1", "gn2", "dn1 - 1", "dn2 + 1", "gm1", "gm2", "dm1 + 1", "dm2 - 1"}},
        {{4, 8}, {"gn1", "gn2", "dn1 - 1", "dn2 + 1", "gm1", "gm2", "dm1 - 1", "dm2 + 1"}},
        {{2, 9},
         {"gn1", "gn2", "dn1 + 1", "dn2 - 1", "gm1 - gm2", "dm1 - dm2", "y*gm1 + 2*dm1",
          det_m1}},
        {{4, 9},
         {"gn1", "gn2", "dn1 - 1", "dn2 + 1", "gm1 - gm2", "dm1 - dm2", "y*gm1 + 2*dm1",
          det_m1}},
        {{5, 9},
         {"gn1 + gn2", "dn1 + dn2", "gm1", "gm2", "dm1 + 1", "dm2 + 1", "x*gn1 + 2*dn1",
          det_n1}},
        {{7, 9},
         {"gn1 + gn2", "dn1 + dn2", "gm1", "gm2", "dm1 - 1", "dm2 - 1", "x*gn1 + 2*dn1",
          det_n1}},
        {{1, 10},
         {"gn1", "gn2", "dn1 + 1", "dn2 + 1", "gm1 + gm2", "dm1 + dm2", "y*gm1 + 2*dm1",
          det_m1}},
        {{3, 10},
         {"gn1", "gn2", "dn1 - 1", "dn2 - 1", "gm1 + gm2", "dm1 + dm2", "y*gm1 + 2*dm1",
          det_m1}},
        {{6, 10},
         {"gn1 - gn2", "dn1 - dn2", "gm1", "gm2", "dm1 + 1", "dm2 - 1", "x*gn1 + 2*dn1",
          det_n1}},
        {{8, 10},
         {"gn1 - gn2", "dn1 - dn2", "gm1", "gm2", "dm1 - 1", "dm2 + 1", "x*gn1 + 2*dn1",
          det_n1}},
    };
    const auto it = tables.find({i, j});
    if (it == tables.end()) return std::nullopt;
    return IdealData(detail::parse_gens(it->second));
}

// phi-specialization of a component's generators into Z[x,y,z]; generators
// that vanish identically (the determinant relations) are dropped.
inline std::vector<MPoly> component_ideal_specialized(int i, const GroupPresentation& pr) {
    std::vector<MPoly> out;
    const IdealData wp = component_ideal(i);
    for (const MPoly& g : wp.generators()) {
        MPoly s = specialize_placeholders(g, pr);
        if (!s.is_zero()) out.push_back(std::move(s));
    }
    return out;
}

}  // namespace sl2cv

#endif  // SL2CV_FIXTURES_HPP_
