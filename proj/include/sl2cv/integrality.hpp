/*
 * Integrality analysis of the zero-dimensional end components.
 *
 * The two end components of the character variety carry finitely many
 * isolated points whose coordinates are cyclotomic numbers.  This header
 * extracts those points together with p-adic valuation data for every
 * prime dividing a coordinate denominator, and decides "weak
 * integrality": whether, for each prime p, some surviving point has all
 * its Galois-conjugate z-values p-integral.  A prime at which every
 * point is uniformly non-integral is a certified failure.
 *
 * The one-relator family  < a, b | a^{q(q-1)} b a^{-q} b^{-2} >  with
 * q = ell^k (ell prime) is built in: gamma_presentation constructs the
 * presentation and gamma_valuations computes its full census of point
 * orbits, checking the common ell-adic valuation of z three independent
 * ways (Newton slopes of the minimal polynomial, the Galois norm
 * quotient, and a closed form) and certifying that the norm is, up to
 * sign, a power of ell — which settles integrality at all other primes
 * at once.
 */
#ifndef SL2CV_INTEGRALITY_HPP_
#define SL2CV_INTEGRALITY_HPP_

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sl2cv/classifier.hpp"
#include "sl2cv/cyclo.hpp"
#include "sl2cv/trace_algebra.hpp"

namespace sl2cv {

// ===== isolated end-component points =====

// One Galois orbit of isolated points on an end component.  For
// component 9 the first eigenvalue class has order dividing 2s
// (s = n1 - n2) and the second order dividing t (t = m1 - m2);
// component 10 swaps the two roles (order dividing s, resp. 2t).
// Neither root is ever +1 or -1.
struct M9Point {
    RootOfUnity zeta_2s{1, 0};  // eigenvalue class of the first generator
    RootOfUnity zeta_t{1, 0};   // eigenvalue class of the second generator
    CycloElt x, y, z;
    long long orbit_size = 1;
    bool z_integral = false;
    // one entry per prime dividing a denominator of z
    std::map<mpz_class, ValuationReport> valuations;
};

namespace detail {

inline M9Point end_point_of_piece(const ComponentPiece& pc) {
    if (pc.dim != 0)
        throw std::logic_error("end_point_of_piece: piece is not a point");
    M9Point pt;
    pt.zeta_2s = pc.lambda;
    pt.zeta_t = pc.mu;
    pt.x = pc.x;
    pt.y = pc.y;
    pt.z = pc.z;
    pt.orbit_size = pc.orbit_size;
    pt.z_integral = pc.z_integral;
    if (pt.zeta_2s.order() <= 2 || pt.zeta_t.order() <= 2)
        throw std::logic_error("end_point_of_piece: eigenvalue class must not be a square root of 1");
    for (const mpz_class& q : pc.z.denominator_primes())
        pt.valuations.emplace(q, pc.z.valuations_above(q));
    if (pt.z_integral != pt.valuations.empty())
        throw std::logic_error("end_point_of_piece: integrality flag contradicts denominator content");
    return pt;
}

inline void check_eigenvalue_orders(const M9Point& pt, long long first_mod,
                                    long long second_mod) {
    const auto divides_order = [](const RootOfUnity& w, long long m) {
        return m != 0 && (abs_ll(m) % static_cast<long long>(w.order())) == 0;
    };
    if (!divides_order(pt.zeta_2s, first_mod) || !divides_order(pt.zeta_t, second_mod))
        throw std::logic_error("end points: eigenvalue order does not divide its power condition");
}

inline std::vector<M9Point> end_points(const GroupPresentation& p, int comp) {
    const ComponentReport rep = classify(p, comp);
    std::vector<M9Point> out;
    for (const ComponentPiece& pc : rep.pieces) {
        if (pc.dim != 0) continue;
        M9Point pt = end_point_of_piece(pc);
        if (comp == 9)
            check_eigenvalue_orders(pt, 2 * p.s(), p.t());
        else
            check_eigenvalue_orders(pt, p.s(), 2 * p.t());
        out.push_back(std::move(pt));
    }
    return out;
}

}  // namespace detail

// Isolated points of component 9 (first power condition has sign -1,
// second sign +1).  Pairs with a vanishing z coefficient are not points
// of this kind; they belong to the z-line pieces reported by classify.
inline std::vector<M9Point> m9_points(const GroupPresentation& p) {
    const long long s = p.s(), t = p.t();
    if (s == 0 || s == 1 || s == -1)
        throw std::invalid_argument("m9_points: s = n1 - n2 must lie outside {0, +1, -1}");
    if (t == 0 || t == 1 || t == -1 || t == 2 || t == -2)
        throw std::invalid_argument("m9_points: t = m1 - m2 must lie outside {0, +1, -1, +2, -2}");
    return detail::end_points(p, 9);
}

// Isolated points of component 10 (signs swapped: +1 on the first
// generator, -1 on the second).
inline std::vector<M9Point> m10_points(const GroupPresentation& p) {
    const long long s = p.s(), t = p.t();
    if (s == 0 || s == 1 || s == -1 || s == 2 || s == -2)
        throw std::invalid_argument("m10_points: s = n1 - n2 must lie outside {0, +1, -1, +2, -2}");
    if (t == 0 || t == 1 || t == -1)
        throw std::invalid_argument("m10_points: t = m1 - m2 must lie outside {0, +1, -1}");
    return detail::end_points(p, 10);
}

// ===== weak integrality =====

// Valuation evidence for one candidate prime, across all surviving
// points (same order as WeakIntegralityVerdict::points).
struct PrimeEvidence {
    mpz_class prime;
    bool fails = false;  // every point has all conjugate valuations of z negative
    std::vector<ValuationReport> reports;
    int witness = -1;  // when !fails: index of a point integral above the prime
};

struct WeakIntegralityVerdict {
    // true when every middle component is empty and neither end
    // component carries a positive-dimensional locus; otherwise the
    // variety contains curves of irreducible characters with integral
    // coordinates and no prime can fail.
    bool conditions_met = false;
    std::vector<int> blocking_components;  // nonempty middles / positive-dimensional ends
    std::vector<M9Point> points;           // isolated points surviving in the
                                           // generically irreducible part
    std::vector<int> point_component;      // 9 or 10, parallel to points
    std::vector<PrimeEvidence> primes;     // one row per candidate prime
    std::vector<mpz_class> failing_primes;
    std::vector<mpz_class> integral_primes_checked;
};

// Decide, for every prime at once, whether some point of the
// generically irreducible part stays p-adically integral.  Candidate
// primes are read off the denominators of the minimal polynomials of
// the z coordinates; all other primes are integral because x and y are
// sums of roots of unity and z has no other denominator.
inline WeakIntegralityVerdict weak_integrality(const GroupPresentation& p) {
    WeakIntegralityVerdict v;
    const std::array<ComponentReport, 10> reports = classify_all(p);
    for (int i = 1; i <= 8; ++i)
        if (!reports[static_cast<std::size_t>(i - 1)].pieces.empty())
            v.blocking_components.push_back(i);
    for (int i : {9, 10})
        for (const ComponentPiece& pc : reports[static_cast<std::size_t>(i - 1)].pieces)
            if (pc.dim >= 1) {
                v.blocking_components.push_back(i);
                break;
            }
    v.conditions_met = v.blocking_components.empty();
    if (!v.conditions_met) return v;

    for (int i : {9, 10})
        for (const ComponentPiece& pc : reports[static_cast<std::size_t>(i - 1)].pieces) {
            if (pc.dim != 0 || !pc.red_nonzero) continue;
            v.points.push_back(detail::end_point_of_piece(pc));
            v.point_component.push_back(i);
        }

    std::set<mpz_class> candidates;
    for (const M9Point& pt : v.points)
        for (const auto& entry : pt.valuations) candidates.insert(entry.first);

    for (const mpz_class& q : candidates) {
        PrimeEvidence ev;
        ev.prime = q;
        ev.fails = true;
        for (std::size_t j = 0; j < v.points.size(); ++j) {
            ValuationReport r = v.points[j].z.valuations_above(q);
            bool some_nonneg = false;
            for (const mpq_class& sl : r.slopes) some_nonneg = some_nonneg || sl >= 0;
            if (some_nonneg != r.is_integral_somewhere)
                throw std::logic_error("weak_integrality: valuation report flag disagrees with slopes");
            if (some_nonneg && ev.witness < 0) {
                ev.witness = static_cast<int>(j);
                ev.fails = false;
            }
            ev.reports.push_back(std::move(r));
        }
        if (ev.fails)
            v.failing_primes.push_back(q);
        else
            v.integral_primes_checked.push_back(q);
        v.primes.push_back(std::move(ev));
    }
    return v;
}

// ===== the power-twist family =====

// The presentation < a, b | a^{q(q-1)} b a^{-q} b^{-2} > with q = ell^k.
// Here s = q^2 and t = 3, so both end components meet the preconditions
// of the point extractors whenever ell^k >= 2.
inline GroupPresentation gamma_presentation(unsigned long ell, unsigned long k) {
    if (!is_prime(ell))
        throw std::invalid_argument("gamma_presentation: ell must be prime");
    if (k == 0) throw std::invalid_argument("gamma_presentation: k must be at least 1");
    long long q = 1;
    for (unsigned long i = 0; i < k; ++i) {
        q *= static_cast<long long>(ell);
        if (q > 2000000)
            throw std::invalid_argument("gamma_presentation: ell^k is too large");
    }
    GroupPresentation p;
    p.n1 = q * (q - 1);
    p.m1 = 1;
    p.n2 = -q;
    p.m2 = -2;
    return p;
}

// One Galois orbit of points in the power-twist census.
struct GammaValuationRow {
    int component = 9;        // 9 or 10
    unsigned long order = 1;  // order of the first eigenvalue class
    unsigned long index = 0;  // ell-adic valuation of that order
    long long orbit_size = 1;
    mpq_class value;  // common ell-adic valuation of the conjugates of z
    mpq_class norm;   // full Galois norm of z; +- a power of ell
};

namespace detail {

// n is +- a power of q (q^0 = 1 included)
inline bool is_prime_power_up_to_sign(const mpz_class& n, const mpz_class& q) {
    if (n == 0) return false;
    mpz_class rest;
    mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), q.get_mpz_t());
    return rest == 1 || rest == -1;
}

// (1 - 2^k) / 2^(i-2) for ell = 2, (1 - ell^k) / (ell^(i-1) (ell - 1))
// for odd ell.
inline mpq_class gamma_closed_form(unsigned long ell, unsigned long k, unsigned long i) {
    mpz_class lk = 1, li = 1;
    for (unsigned long j = 0; j < k; ++j) lk *= ell;
    const unsigned long down = ell == 2 ? 2 : 1;
    for (unsigned long j = down; j < i; ++j) li *= ell;
    if (ell != 2) li *= ell - 1;
    mpq_class out{mpz_class(1 - lk)};
    out /= mpq_class(li);
    return out;
}

}  // namespace detail

// Census of all point orbits of the two end components of the
// power-twist presentation, with the common ell-adic valuation of z
// computed three independent ways and cross-checked.  Rows are sorted
// by (component, order).
inline std::vector<GammaValuationRow> gamma_valuations(unsigned long ell, unsigned long k) {
    const GroupPresentation p = gamma_presentation(ell, k);
    const mpz_class L(static_cast<unsigned long>(ell));
    std::vector<GammaValuationRow> rows;

    for (int comp : {9, 10}) {
        const std::vector<M9Point> pts = comp == 9 ? m9_points(p) : m10_points(p);
        for (const M9Point& pt : pts) {
            GammaValuationRow row;
            row.component = comp;
            row.order = pt.zeta_2s.order();
            unsigned long rest = row.order;
            while (rest % ell == 0) {
                rest /= ell;
                ++row.index;
            }
            row.orbit_size = pt.orbit_size;

            // census shape: component 9 pairs the -1 condition with the
            // first generator, so its orders carry one extra factor of 2
            // when ell is odd (and absorb it into the index when ell = 2)
            const unsigned long want_rest = (comp == 9 && ell != 2) ? 2 : 1;
            if (rest != want_rest)
                throw std::logic_error("gamma_valuations: unexpected prime-to-ell part of an order");
            const unsigned long lo = ell == 2 ? (comp == 9 ? 2 * k + 1 : k + 2) : k + 1;
            const unsigned long hi = ell == 2 ? (comp == 9 ? 2 * k + 1 : 2 * k) : 2 * k;
            if (row.index < lo || row.index > hi)
                throw std::logic_error("gamma_valuations: order index outside the admissible range");
            if (row.orbit_size != static_cast<long long>(euler_phi(row.order) / 2))
                throw std::logic_error("gamma_valuations: unexpected orbit size");
            const CycloElt want_y =
                comp == 9 ? -CycloElt::one() : CycloElt::one();
            if (pt.y != want_y)
                throw std::logic_error("gamma_valuations: unexpected second trace");

            // route 1: Newton slopes of the minimal polynomial of z,
            // which must all agree
            const ValuationReport vr = pt.z.valuations_above(L);
            if (vr.slopes.empty())
                throw std::logic_error("gamma_valuations: no conjugate valuations");
            for (const mpq_class& sl : vr.slopes)
                if (sl != vr.slopes.front())
                    throw std::logic_error("gamma_valuations: conjugate valuations differ");
            row.value = vr.slopes.front();

            // route 2: the Galois norm.  It must be +- a power of ell,
            // which certifies integrality at every other prime at once.
            const CycloElt zr = pt.z.reduce();
            unsigned long cond = zr.conductor();
            if (cond % 4 == 2) cond /= 2;
            row.norm = zr.norm_to_Q();
            if (!detail::is_prime_power_up_to_sign(row.norm.get_num(), L) ||
                !detail::is_prime_power_up_to_sign(row.norm.get_den(), L))
                throw std::logic_error("gamma_valuations: norm is not a power of ell up to sign");
            const long nv = p_valuation(mpz_class(row.norm.get_num()), L) -
                            p_valuation(mpz_class(row.norm.get_den()), L);
            mpq_class by_norm{mpz_class(nv)};
            by_norm /= mpq_class(mpz_class(euler_phi(cond)));
            if (by_norm != row.value)
                throw std::logic_error("gamma_valuations: norm route disagrees with Newton slopes");

            // route 3: the closed form, which must land strictly
            // between -1 and 0
            const mpq_class closed = detail::gamma_closed_form(ell, k, row.index);
            if (closed != row.value)
                throw std::logic_error("gamma_valuations: closed form disagrees");
            if (!(row.value > -1 && row.value < 0))
                throw std::logic_error("gamma_valuations: valuation outside (-1, 0)");
            if (pt.valuations.size() != 1 || pt.valuations.begin()->first != L)
                throw std::logic_error("gamma_valuations: denominator support is not exactly {ell}");

            rows.push_back(std::move(row));
        }
    }

    // every admissible index is hit exactly once per side that carries it
    const std::size_t want_rows = ell == 2 ? k : 2 * k;
    if (rows.size() != want_rows)
        throw std::logic_error("gamma_valuations: wrong number of orbits");
    std::set<std::pair<int, unsigned long>> seen;
    for (const GammaValuationRow& row : rows)
        if (!seen.insert({row.component, row.index}).second)
            throw std::logic_error("gamma_valuations: duplicate order index on one component");
    if (ell == 2) {
        std::set<unsigned long> all;
        for (const GammaValuationRow& row : rows) all.insert(row.index);
        if (all.size() != rows.size())
            throw std::logic_error("gamma_valuations: duplicate order index");
        for (unsigned long i = k + 2; i <= 2 * k + 1; ++i)
            if (all.find(i) == all.end())
                throw std::logic_error("gamma_valuations: missing order index");
    } else {
        for (int comp : {9, 10})
            for (unsigned long i = k + 1; i <= 2 * k; ++i)
                if (seen.find({comp, i}) == seen.end())
                    throw std::logic_error("gamma_valuations: missing order index");
    }

    std::sort(rows.begin(), rows.end(),
              [](const GammaValuationRow& a, const GammaValuationRow& b) {
                  return a.component != b.component ? a.component < b.component
                                                    : a.order < b.order;
              });
    return rows;
}

}  // namespace sl2cv

#endif  // SL2CV_INTEGRALITY_HPP_
