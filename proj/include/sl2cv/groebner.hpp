#ifndef SL2CV_GROEBNER_HPP_
#define SL2CV_GROEBNER_HPP_

/*
 * Buchberger's algorithm over Q with the grevlex order from mpoly.hpp.
 *
 * Pairs are processed smallest-lcm first; pairs with coprime leading
 * monomials are skipped.  The output basis is reduced and monic, so it is
 * canonical for the ideal and usable for membership certificates via
 * normal forms.  All loops are guarded by a configurable step budget;
 * exceeding it throws GroebnerLimit (mapped to a resource-limit exit by
 * the CLI).
 */

#include "sl2cv/mpoly.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sl2cv {

struct GroebnerLimit : std::runtime_error {
    explicit GroebnerLimit(const std::string& what) : std::runtime_error(what) {}
};

struct GroebnerOptions {
    std::size_t max_steps = 50000;  // S-polynomial reductions
};

// Remainder of p on division by the list B (full reduction of every term).
inline MPoly normal_form(MPoly p, const std::vector<MPoly>& B) {
    MPoly rem;
    while (!p.is_zero()) {
        const Monomial& lm = p.leading_monomial();
        const mpq_class lc = p.leading_coeff();
        bool reduced = false;
        for (const auto& g : B) {
            if (g.is_zero()) continue;
            const Monomial& glm = g.leading_monomial();
            if (!mono_divides(glm, lm)) continue;
            MPoly q;
            q.add_term(mono_div(lm, glm), lc / g.leading_coeff());
            p = p - q * g;
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(lm, lc);
            MPoly lead;
            lead.add_term(lm, lc);
            p = p - lead;
        }
    }
    return rem;
}

inline MPoly s_poly(const MPoly& f, const MPoly& g) {
    const Monomial l = mono_lcm(f.leading_monomial(), g.leading_monomial());
    MPoly a, b;
    a.add_term(mono_div(l, f.leading_monomial()), mpq_class(1) / f.leading_coeff());
    b.add_term(mono_div(l, g.leading_monomial()), mpq_class(1) / g.leading_coeff());
    return a * f - b * g;
}

inline std::vector<MPoly> groebner_basis(const std::vector<MPoly>& gens,
                                         const GroebnerOptions& opts = {}) {
    std::vector<MPoly> G;
    for (const auto& g : gens)
        if (!g.is_zero()) G.push_back(g);
    if (G.empty()) return G;

    struct PairEntry {
        Monomial lcm;
        std::size_t i, j;
        bool operator<(const PairEntry& o) const {
            if (lcm != o.lcm) return grevlex_greater(o.lcm, lcm);  // smaller lcm first
            if (i != o.i) return i < o.i;
            return j < o.j;
        }
    };
    std::set<PairEntry> pairs;
    auto push_pairs = [&](std::size_t k) {
        for (std::size_t i = 0; i < k; ++i) {
            const Monomial l = mono_lcm(G[i].leading_monomial(), G[k].leading_monomial());
            // first Buchberger criterion: coprime leading monomials reduce to zero
            if (l == mono_mul(G[i].leading_monomial(), G[k].leading_monomial())) continue;
            pairs.insert({l, i, k});
        }
    };
    for (std::size_t k = 1; k < G.size(); ++k) push_pairs(k);

    std::size_t steps = 0;
    while (!pairs.empty()) {
        if (++steps > opts.max_steps)
            throw GroebnerLimit("groebner_basis: step budget exceeded");
        const PairEntry e = *pairs.begin();
        pairs.erase(pairs.begin());
        const MPoly r = normal_form(s_poly(G[e.i], G[e.j]), G);
        if (r.is_zero()) continue;
        G.push_back(r);
        push_pairs(G.size() - 1);
    }

    // inter-reduce and normalize
    for (;;) {
        bool changed = false;
        for (std::size_t i = 0; i < G.size(); ++i) {
            std::vector<MPoly> others;
            others.reserve(G.size() - 1);
            for (std::size_t j = 0; j < G.size(); ++j)
                if (j != i) others.push_back(G[j]);
            MPoly r = normal_form(G[i], others);
            if (r != G[i]) {
                changed = true;
                G[i] = std::move(r);
            }
        }
        G.erase(std::remove_if(G.begin(), G.end(), [](const MPoly& p) { return p.is_zero(); }),
                G.end());
        if (!changed) break;
    }
    for (auto& g : G) g = g * (mpq_class(1) / g.leading_coeff());
    std::sort(G.begin(), G.end(), [](const MPoly& a, const MPoly& b) {
        return grevlex_greater(a.leading_monomial(), b.leading_monomial());
    });
    return G;
}

// Ideal with generator list and a cached reduced basis.
class IdealData {
public:
    IdealData() = default;
    explicit IdealData(std::vector<MPoly> gens) : gens_(std::move(gens)) {}

    const std::vector<MPoly>& generators() const { return gens_; }

    const std::vector<MPoly>& groebner(const GroebnerOptions& opts = {}) const {
        if (!gb_) gb_ = groebner_basis(gens_, opts);
        return *gb_;
    }

    bool member(const MPoly& p, const GroebnerOptions& opts = {}) const {
        return normal_form(p, groebner(opts)).is_zero();
    }

    // 1 is in the ideal, i.e. the variety is empty.
    bool is_trivial(const GroebnerOptions& opts = {}) const {
        return member(MPoly::one(), opts);
    }

    IdealData sum(const IdealData& o) const {
        std::vector<MPoly> g = gens_;
        g.insert(g.end(), o.gens_.begin(), o.gens_.end());
        return IdealData(std::move(g));
    }

private:
    std::vector<MPoly> gens_;
    mutable std::optional<std::vector<MPoly>> gb_;
};

}  // namespace sl2cv

#endif  // SL2CV_GROEBNER_HPP_
