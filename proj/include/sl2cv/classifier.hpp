#ifndef SL2CV_CLASSIFIER_HPP_
#define SL2CV_CLASSIFIER_HPP_

/*
 * Emptiness, dimension and explicit points of the candidate components
 * wp_1..wp_10 over Q, together with the intersection graph of their
 * generically irreducible parts.
 *
 * Dimension is decided by a closed-form case analysis in terms of
 * condition C, the solvability criterion for a pair of simultaneous
 * nontrivial power conditions A^{n_i} =_{nt} s_i I.  Zero-dimensional
 * loci are enumerated exactly: the traces are sums zeta + zeta^{-1} of
 * roots of unity, z is solved from the single generator linear in z,
 * and points are grouped into Q-Galois orbits.
 *
 * Everything is cross-checked internally.  Condition C is evaluated by
 * two independent routes, power-system witnesses are re-verified against
 * the c/d polynomials, z is computed both from the linear generator and
 * from the eigenvalue product formula, and the dimension verdict must
 * match the shape of the enumerated pieces.  Any disagreement throws.
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cheb.hpp"
#include "cyclo.hpp"
#include "fixtures.hpp"
#include "trace_algebra.hpp"

namespace sl2cv {

// ===== power conditions =====

// A^exponent =_{nt} sign * I, that is: c_n(tr A) = 0 and d_n(tr A) = sign
// with A itself non-scalar.
struct NontrivialPowerCondition {
    long long exponent = 0;
    int sign = 1;
};

namespace detail {

inline void require_sign(int s, const char* who) {
    if (s != 1 && s != -1)
        throw std::invalid_argument(std::string(who) + ": sign must be +1 or -1");
}

inline long long abs_ll(long long v) { return v < 0 ? -v : v; }

inline int parity_sign(long long v) { return v % 2 == 0 ? 1 : -1; }

inline int two_adic_valuation(long long v) {
    long long a = abs_ll(v);
    int r = 0;
    while (a % 2 == 0) {
        a /= 2;
        ++r;
    }
    return r;
}

}  // namespace detail

// Whether a single power condition has a solution.  A zero exponent follows
// the =_{nt} conventions: vacuous for +I, unsatisfiable for -I.
inline bool power_condition_solvable(long long n, int sign) {
    detail::require_sign(sign, "power_condition_solvable");
    if (n == 0) return sign == 1;
    const long long a = detail::abs_ll(n);
    return sign == -1 ? a >= 2 : a >= 3;
}

// All trace solutions of a single condition with nonzero exponent: the
// eigenvalues are zeta_{2|n|}^k with 0 < k < |n| and (-1)^k = sign.  Each
// root r returned stands for the trace r + r^{-1}; since 2k < 2|n| these
// are canonical class representatives, so equal traces compare equal.
inline std::vector<RootOfUnity> power_condition_solutions(long long n, int sign) {
    detail::require_sign(sign, "power_condition_solutions");
    if (n == 0)
        throw std::invalid_argument("power_condition_solutions: exponent must be nonzero");
    const long long a = detail::abs_ll(n);
    std::vector<RootOfUnity> out;
    for (long long k = (sign == -1) ? 1 : 2; k < a; k += 2) out.emplace_back(2 * a, k);
    return out;
}

// Solvability of the simultaneous system c_{n_i}(x) = 0, d_{n_i}(x) = s_i
// for nonzero exponents, computed from the definition via g = gcd(n1, n2)
// and again from the 2-adic restatement.  The two routes must agree.
inline bool condition_C(long long n1, long long n2, int s1, int s2) {
    detail::require_sign(s1, "condition_C");
    detail::require_sign(s2, "condition_C");
    if (n1 == 0 || n2 == 0)
        throw std::invalid_argument("condition_C: exponents must be nonzero");

    const long long g = std::gcd(n1, n2);
    const bool by_definition =
        (g > 1 && s1 == detail::parity_sign(n1 / g) && s2 == detail::parity_sign(n2 / g)) ||
        (g > 2 && s1 == 1 && s2 == 1);

    bool by_valuation;
    if (s1 == 1 && s2 == 1) {
        by_valuation = g > 2;
    } else if (s1 == -1 && s2 == 1) {
        by_valuation = g > 1 && detail::two_adic_valuation(n1) < detail::two_adic_valuation(n2);
    } else if (s1 == 1 && s2 == -1) {
        by_valuation = g > 1 && detail::two_adic_valuation(n1) > detail::two_adic_valuation(n2);
    } else {
        by_valuation = g > 1 && detail::two_adic_valuation(n1) == detail::two_adic_valuation(n2);
    }

    if (by_definition != by_valuation)
        throw std::logic_error("condition_C: definition and 2-adic restatement disagree");
    return by_definition;
}

// condition_C extended to zero exponents through the =_{nt} conventions;
// the value is the solvability of the simultaneous system.
inline bool condition_C_general(long long n1, long long n2, int s1, int s2) {
    detail::require_sign(s1, "condition_C_general");
    detail::require_sign(s2, "condition_C_general");
    if (n1 == 0 && n2 == 0) return s1 == 1 && s2 == 1;
    if (n1 == 0) return s1 == 1 && power_condition_solvable(n2, s2);
    if (n2 == 0) return s2 == 1 && power_condition_solvable(n1, s1);
    return condition_C(n1, n2, s1, s2);
}

struct PowerSystemSolutions {
    bool solvable = false;
    std::vector<RootOfUnity> witnesses;  // one eigenvalue per solution trace
};

// Complete solution set of a pair of power conditions with nonzero
// exponents.  Route one intersects the two single-condition solution sets;
// route two lists the closed-form witnesses zeta_{2g}^j whose power signs
// match.  Both routes must agree with each other and with condition_C,
// and every witness is re-verified by exact c/d evaluation.
inline PowerSystemSolutions solve_power_system(const NontrivialPowerCondition& c1,
                                               const NontrivialPowerCondition& c2) {
    if (c1.exponent == 0 || c2.exponent == 0)
        throw std::invalid_argument("solve_power_system: exponents must be nonzero");
    detail::require_sign(c1.sign, "solve_power_system");
    detail::require_sign(c2.sign, "solve_power_system");

    const auto sols1 = power_condition_solutions(c1.exponent, c1.sign);
    const auto sols2 = power_condition_solutions(c2.exponent, c2.sign);
    const std::set<RootOfUnity> in2(sols2.begin(), sols2.end());
    std::vector<RootOfUnity> common;
    for (const auto& r : sols1)
        if (in2.count(r)) common.push_back(r);

    const long long g = std::gcd(c1.exponent, c2.exponent);
    std::vector<RootOfUnity> closed;
    for (long long j = 1; j < g; ++j) {
        if (detail::parity_sign(j * (c1.exponent / g)) != c1.sign) continue;
        if (detail::parity_sign(j * (c2.exponent / g)) != c2.sign) continue;
        closed.emplace_back(2 * g, j);
    }

    std::sort(common.begin(), common.end());
    std::sort(closed.begin(), closed.end());
    if (common != closed)
        throw std::logic_error("solve_power_system: witness routes disagree");
    if (condition_C(c1.exponent, c2.exponent, c1.sign, c2.sign) != !common.empty())
        throw std::logic_error("solve_power_system: solvability disagrees with condition C");

    for (const auto& r : common) {
        const CycloElt x = CycloElt::trace_of_root(r);
        for (const auto& c : {c1, c2}) {
            const ChebPair cd = cheb_pair(c.exponent);
            if (!cd.c.eval<CycloElt>(x).is_zero() ||
                cd.d.eval<CycloElt>(x) != CycloElt(mpq_class(c.sign)))
                throw std::logic_error("solve_power_system: witness fails c/d evaluation");
        }
    }
    return {!common.empty(), std::move(common)};
}

// ===== dimensions =====

enum class ComponentDim { empty, dim0, dim1, dim2 };

inline std::string to_string(ComponentDim d) {
    switch (d) {
        case ComponentDim::empty: return "empty";
        case ComponentDim::dim0: return "0";
        case ComponentDim::dim1: return "1";
        case ComponentDim::dim2: return "2";
    }
    return "?";
}

namespace detail {

inline bool divides(long long a, long long b) { return a == 0 ? b == 0 : b % a == 0; }

// wp_1..wp_8.  e1, e2 carry the paired power conditions with signs s1, s2;
// `sum` is the exponent of the remaining single condition, whose sign is
// +1 for components 1, 3, 5, 7 and -1 for 2, 4, 6, 8.
inline ComponentDim dim_mid(long long e1, long long e2, int s1, int s2, long long sum,
                            int sum_sign) {
    const bool c = condition_C(e1, e2, s1, s2);
    if (sum_sign == 1) {
        if (!c || sum == 1 || sum == -1 || sum == 2 || sum == -2) return ComponentDim::empty;
        if (sum == 0) return ComponentDim::dim2;
        return ComponentDim::dim1;
    }
    if (!c || sum == 0 || sum == 1 || sum == -1) return ComponentDim::empty;
    return ComponentDim::dim1;
}

inline ComponentDim dim_nine(const GroupPresentation& p) {
    const long long s = p.s(), t = p.t();
    const bool empty_basic = s == 0 || s == 1 || s == -1 || t == 1 || t == -1 || t == 2 ||
                             t == -2;
    const bool forced_a = divides(s, p.n1) && !condition_C_general(p.m1 + p.m2, t, -1, 1);
    const bool forced_b = divides(t, 2 * p.m1) && !condition_C_general(p.n1 + p.n2, s, 1, -1);
    if (empty_basic || forced_a || forced_b) return ComponentDim::empty;
    const bool one =
        p.m1 == p.m2 ||
        ((condition_C(p.n1, p.n2, -1, 1) || condition_C(p.n1, p.n2, 1, -1)) &&
         condition_C_general(p.m1 + p.m2, t, -1, 1)) ||
        ((condition_C(p.m1, p.m2, 1, 1) || condition_C(p.m1, p.m2, -1, -1)) &&
         condition_C_general(p.n1 + p.n2, s, 1, -1));
    return one ? ComponentDim::dim1 : ComponentDim::dim0;
}

inline ComponentDim dim_ten(const GroupPresentation& p) {
    const long long s = p.s(), t = p.t();
    const bool empty_basic = t == 0 || t == 1 || t == -1 || s == 1 || s == -1 || s == 2 ||
                             s == -2;
    const bool forced_b = divides(t, p.m1) && !condition_C_general(p.n1 + p.n2, s, -1, 1);
    const bool forced_a = divides(s, 2 * p.n1) && !condition_C_general(p.m1 + p.m2, t, 1, -1);
    if (empty_basic || forced_b || forced_a) return ComponentDim::empty;
    const bool one =
        p.n1 == p.n2 ||
        ((condition_C(p.m1, p.m2, -1, 1) || condition_C(p.m1, p.m2, 1, -1)) &&
         condition_C_general(p.n1 + p.n2, s, -1, 1)) ||
        ((condition_C(p.n1, p.n2, 1, 1) || condition_C(p.n1, p.n2, -1, -1)) &&
         condition_C_general(p.m1 + p.m2, t, 1, -1));
    return one ? ComponentDim::dim1 : ComponentDim::dim0;
}

}  // namespace detail

// ===== Galois orbits of trace pairs =====

namespace detail {

// representative of the trace class {r, r^{-1}}: the smaller exponent
inline RootOfUnity trace_class_rep(const RootOfUnity& r) {
    return 2 * r.exponent() > r.order() ? r.inverse() : r;
}

using PairKey = std::array<unsigned long, 4>;

inline PairKey pair_key(const RootOfUnity& a, const RootOfUnity& b) {
    return {a.order(), a.exponent(), b.order(), b.exponent()};
}

struct PairOrbit {
    RootOfUnity lam{1, 0}, mu{1, 0};  // member with the smallest key
    std::vector<std::pair<RootOfUnity, RootOfUnity>> members;

    long long size() const { return static_cast<long long>(members.size()); }
};

// Q-Galois orbit of a simultaneous pair of trace classes; sigma_j acts as
// (lam, mu) -> (lam^j, mu^j) for j prime to the lcm of the orders.
inline PairOrbit pair_orbit(const RootOfUnity& lam0, const RootOfUnity& mu0) {
    const unsigned long big = std::lcm(lam0.order(), mu0.order());
    std::set<PairKey> seen;
    PairOrbit orb;
    orb.lam = trace_class_rep(lam0);
    orb.mu = trace_class_rep(mu0);
    for (unsigned long j = 1; j <= big; ++j) {
        if (std::gcd(j, big) != 1) continue;
        const RootOfUnity a = trace_class_rep(lam0.pow(static_cast<long long>(j)));
        const RootOfUnity b = trace_class_rep(mu0.pow(static_cast<long long>(j)));
        if (!seen.insert(pair_key(a, b)).second) continue;
        orb.members.emplace_back(a, b);
        if (pair_key(a, b) < pair_key(orb.lam, orb.mu)) {
            orb.lam = a;
            orb.mu = b;
        }
    }
    return orb;
}

}  // namespace detail

// ===== z on the end components =====

namespace detail {

inline CycloElt root_power_diff(const RootOfUnity& r, long long e) {
    return CycloElt::root(r.pow(e)) - CycloElt::root(r.pow(-e));
}

}  // namespace detail

// The two-term eigenvalue formula for z on components 9 and 10, where lam
// and mu are eigenvalues of A and B.  Requires lam^{2 n1} != 1 and
// mu^{2 m1} != 1; it is symmetric in the two factor roles.
inline CycloElt z_of_point(const RootOfUnity& lam, long long n1, const RootOfUnity& mu,
                           long long m1) {
    const CycloElt da = detail::root_power_diff(lam, n1);
    const CycloElt db = detail::root_power_diff(mu, m1);
    if (da.is_zero() || db.is_zero())
        throw std::domain_error("z_of_point: the z coefficient vanishes");
    return (detail::root_power_diff(lam, n1 + 1) / da) *
               (detail::root_power_diff(mu, m1 - 1) / db) +
           (detail::root_power_diff(mu, m1 + 1) / db) *
               (detail::root_power_diff(lam, n1 - 1) / da);
}

// ===== component reports =====

// One Q-irreducible piece.  dim 0: x, y, z all fixed.  dim 1 with z_fixed
// false and both traces fixed: a z-line.  dim 1 with a free trace: z is
// determined by the free trace but not constant.  dim 2: one free trace
// and free z.
struct ComponentPiece {
    int dim = 0;
    bool x_fixed = false, y_fixed = false, z_fixed = false;
    RootOfUnity lambda{1, 0};  // eigenvalue class of A when x is fixed
    RootOfUnity mu{1, 0};      // eigenvalue class of B when y is fixed
    CycloElt x, y, z;
    long long orbit_size = 1;
    bool z_integral = false;  // only meaningful when z_fixed
    bool red_nonzero = false;
};

struct ComponentReport {
    int id = 0;
    ComponentDim dim = ComponentDim::empty;
    bool star = false;  // the (*) condition; meaningful for ids 9 and 10
    std::vector<ComponentPiece> pieces;
    long long point_count = 0;  // geometric points across dim-0 pieces
    long long orbit_count = 0;  // = pieces.size()
    bool in_gen_irr = false;        // every piece certified generically irreducible
    bool gen_irr_nonempty = false;  // at least one piece certified
};

namespace detail {

inline void require_nonzero_exponents(const GroupPresentation& p, const char* who) {
    if (p.n1 == 0 || p.m1 == 0 || p.n2 == 0 || p.m2 == 0)
        throw std::invalid_argument(std::string(who) +
                                    ": presentation exponents must be nonzero");
}

inline int var_degree(const MPoly& g, Var v) {
    int d = 0;
    for (const auto& term : g.terms()) d = std::max(d, static_cast<int>(term.first[v]));
    return d;
}

inline bool uses_only(const MPoly& g, bool allow_x, bool allow_y, bool allow_z) {
    for (const auto& term : g.terms()) {
        const Monomial& m = term.first;
        for (int v = 0; v < kNumVars; ++v) {
            if (m[v] == 0) continue;
            if (v == VX && allow_x) continue;
            if (v == VY && allow_y) continue;
            if (v == VZ && allow_z) continue;
            return false;
        }
    }
    return true;
}

inline CycloElt cheb_c_val(long long n, const CycloElt& x) {
    return cheb_pair(n).c.eval<CycloElt>(x);
}

inline CycloElt cheb_d_val(long long n, const CycloElt& x) {
    return cheb_pair(n).d.eval<CycloElt>(x);
}

inline CycloElt red_value(const CycloElt& x, const CycloElt& y, const CycloElt& z) {
    static const MPoly red = red_poly();
    return red.eval_xyz(x, y, z);
}

inline ComponentDim piece_shape_dim(const std::vector<ComponentPiece>& pieces) {
    if (pieces.empty()) return ComponentDim::empty;
    int m = 0;
    for (const auto& pc : pieces) m = std::max(m, pc.dim);
    if (m == 0) return ComponentDim::dim0;
    return m == 1 ? ComponentDim::dim1 : ComponentDim::dim2;
}

// the trace coordinate of B^m vanishes: mu^{2m} = -1
inline std::vector<RootOfUnity> power_trace_zero_solutions(long long m) {
    const long long a = abs_ll(m);
    std::vector<RootOfUnity> out;
    for (long long j = 1; j < 2 * a; j += 2) out.emplace_back(4 * a, j);
    return out;
}

struct MidShape {
    long long e1 = 0, e2 = 0;  // the paired power conditions
    int s1 = 1, s2 = 1;
    long long sum = 0;  // exponent of the remaining condition
    int sum_sign = 1;
    bool paired_on_a = true;  // paired conditions constrain A for 1..4, B for 5..8
};

inline MidShape mid_shape(const GroupPresentation& p, int i) {
    switch (i) {
        case 1: return {p.n1, p.n2, -1, -1, p.m1 + p.m2, 1, true};
        case 2: return {p.n1, p.n2, -1, 1, p.m1 + p.m2, -1, true};
        case 3: return {p.n1, p.n2, 1, 1, p.m1 + p.m2, 1, true};
        case 4: return {p.n1, p.n2, 1, -1, p.m1 + p.m2, -1, true};
        case 5: return {p.m1, p.m2, -1, -1, p.n1 + p.n2, 1, false};
        case 6: return {p.m1, p.m2, -1, 1, p.n1 + p.n2, -1, false};
        case 7: return {p.m1, p.m2, 1, 1, p.n1 + p.n2, 1, false};
        case 8: return {p.m1, p.m2, 1, -1, p.n1 + p.n2, -1, false};
        default: throw std::out_of_range("mid_shape: component id must be 1..8");
    }
}

// Components 1..8: two power conditions on one generator, one on the
// other.  All generators of the specialized ideal are univariate in x or
// in y, so pieces are products of finite trace sets with free coordinates.
inline ComponentReport classify_mid(const GroupPresentation& p, int i) {
    const MidShape sh = mid_shape(p, i);
    ComponentReport rep;
    rep.id = i;
    rep.dim = dim_mid(sh.e1, sh.e2, sh.s1, sh.s2, sh.sum, sh.sum_sign);
    if (rep.dim == ComponentDim::empty) return rep;

    const auto paired = solve_power_system({sh.e1, sh.s1}, {sh.e2, sh.s2});
    const bool sum_free = sh.sum == 0;
    std::vector<RootOfUnity> sum_side;
    if (sum_free)
        sum_side.emplace_back(1, 0);  // placeholder; the trace is free
    else
        sum_side = power_condition_solutions(sh.sum, sh.sum_sign);

    std::map<PairKey, PairOrbit> orbits;
    for (const auto& w : paired.witnesses) {
        for (const auto& u : sum_side) {
            const RootOfUnity a = sh.paired_on_a ? w : u;
            const RootOfUnity b = sh.paired_on_a ? u : w;
            const PairOrbit orb = pair_orbit(a, b);
            orbits.emplace(pair_key(orb.lam, orb.mu), orb);
        }
    }

    for (const auto& entry : orbits) {
        const PairOrbit& orb = entry.second;
        ComponentPiece pc;
        pc.dim = sum_free ? 2 : 1;
        pc.x_fixed = sh.paired_on_a || !sum_free;
        pc.y_fixed = !sh.paired_on_a || !sum_free;
        pc.z_fixed = false;
        pc.lambda = orb.lam;
        pc.mu = orb.mu;
        if (pc.x_fixed) pc.x = CycloElt::trace_of_root(orb.lam);
        if (pc.y_fixed) pc.y = CycloElt::trace_of_root(orb.mu);
        pc.orbit_size = orb.size();
        pc.red_nonzero = true;  // z is free on the piece and red is monic in z
        rep.pieces.push_back(std::move(pc));
    }

    // verify every surviving generator against the pieces; for these
    // components each generator is univariate in x or in y
    const auto gens = component_ideal_specialized(i, p);
    for (const MPoly& g : gens) {
        const bool px = uses_only(g, true, false, false);
        const bool py = uses_only(g, false, true, false);
        if (!px && !py)
            throw std::logic_error("classify: unexpected generator shape in a mid component");
        for (const ComponentPiece& pc : rep.pieces) {
            if ((px && !pc.x_fixed) || (py && !pc.y_fixed))
                throw std::logic_error("classify: a free trace meets a surviving generator");
            const CycloElt v = g.eval_xyz(pc.x_fixed ? pc.x : CycloElt::zero(),
                                          pc.y_fixed ? pc.y : CycloElt::zero(),
                                          CycloElt::zero());
            if (!v.is_zero())
                throw std::logic_error("classify: a piece fails a specialized generator");
        }
    }

    rep.orbit_count = static_cast<long long>(rep.pieces.size());
    rep.in_gen_irr = true;
    rep.gen_irr_nonempty = true;
    if (piece_shape_dim(rep.pieces) != rep.dim)
        throw std::logic_error("classify: piece shape disagrees with the dimension verdict");
    return rep;
}

// Components 9 and 10: power conditions on A^{n1-n2} and B^{m1-m2} plus
// the trace condition tr(A^{n1} B^{m1}) = 0, whose specialized form is the
// single generator linear in z.
inline ComponentReport classify_end(const GroupPresentation& p, int i) {
    const long long s = p.s(), t = p.t();
    ComponentReport rep;
    rep.id = i;
    rep.star = (i == 9) ? p.m1 != p.m2 : p.n1 != p.n2;
    rep.dim = (i == 9) ? dim_nine(p) : dim_ten(p);
    if (rep.dim == ComponentDim::empty) return rep;

    const int a_sign = (i == 9) ? -1 : 1;
    const int b_sign = (i == 9) ? 1 : -1;
    const bool x_free = s == 0;  // vacuous A condition (only reachable for id 10)
    const bool y_free = t == 0;  // vacuous B condition (only reachable for id 9)
    if ((x_free && i == 9) || (y_free && i == 10) || (x_free && y_free))
        throw std::logic_error("classify: vacuous condition on a nonempty end component");

    const std::vector<RootOfUnity> lams =
        x_free ? std::vector<RootOfUnity>{} : power_condition_solutions(s, a_sign);
    const std::vector<RootOfUnity> mus =
        y_free ? std::vector<RootOfUnity>{} : power_condition_solutions(t, b_sign);

    const auto gens = component_ideal_specialized(i, p);
    int z_gens = 0;
    for (const MPoly& g : gens) {
        if (var_degree(g, VZ) == 0) continue;
        ++z_gens;
        if (var_degree(g, VZ) != 1)
            throw std::logic_error("classify: generator of higher degree in z");
    }
    if (z_gens != 1) throw std::logic_error("classify: expected one generator linear in z");

    const auto verify_point = [&](const CycloElt& x, const CycloElt& y, const CycloElt& z) {
        for (const MPoly& g : gens)
            if (!g.eval_xyz(x, y, z).is_zero())
                throw std::logic_error("classify: a point fails a specialized generator");
    };
    // a z-line: every generator must vanish for all z, and each has z-degree
    // at most one, so two samples suffice
    const auto verify_line = [&](const CycloElt& x, const CycloElt& y) {
        verify_point(x, y, CycloElt::zero());
        verify_point(x, y, CycloElt::one());
    };

    const auto make_point = [&](const PairOrbit& orb, const CycloElt& x, const CycloElt& y,
                                const CycloElt& z) {
        ComponentPiece pc;
        pc.dim = 0;
        pc.x_fixed = pc.y_fixed = pc.z_fixed = true;
        pc.lambda = orb.lam;
        pc.mu = orb.mu;
        pc.x = x;
        pc.y = y;
        pc.z = z;
        pc.orbit_size = orb.size();
        pc.z_integral = z.is_algebraic_integer();
        pc.red_nonzero = !red_value(x, y, z).is_zero();
        if (!pc.z_integral && !pc.red_nonzero)
            throw std::logic_error("classify: non-integral z on a piece with red = 0");
        rep.pieces.push_back(std::move(pc));
    };

    const auto make_z_line = [&](const PairOrbit& orb, const CycloElt& x, const CycloElt& y) {
        ComponentPiece pc;
        pc.dim = 1;
        pc.x_fixed = pc.y_fixed = true;
        pc.z_fixed = false;
        pc.lambda = orb.lam;
        pc.mu = orb.mu;
        pc.x = x;
        pc.y = y;
        pc.orbit_size = orb.size();
        pc.red_nonzero = true;  // red is monic of degree 2 in z
        rep.pieces.push_back(std::move(pc));
    };

    if (!x_free && !y_free) {
        std::map<PairKey, PairOrbit> orbits;
        for (const auto& la : lams)
            for (const auto& mu : mus) {
                const PairOrbit orb = pair_orbit(la, mu);
                orbits.emplace(pair_key(orb.lam, orb.mu), orb);
            }
        for (const auto& entry : orbits) {
            const PairOrbit& orb = entry.second;
            const CycloElt x = CycloElt::trace_of_root(orb.lam);
            const CycloElt y = CycloElt::trace_of_root(orb.mu);
            const CycloElt cn1 = cheb_c_val(p.n1, x), dn1 = cheb_d_val(p.n1, x);
            const CycloElt cm1 = cheb_c_val(p.m1, y), dm1 = cheb_d_val(p.m1, y);
            const CycloElt a = cn1 * cm1;
            const CycloElt r = x * cn1 * dm1 + y * dn1 * cm1 +
                               CycloElt(mpq_class(2)) * dn1 * dm1;
            if (!a.is_zero()) {
                const CycloElt z = -(r / a);
                if (z != z_of_point(orb.lam, p.n1, orb.mu, p.m1))
                    throw std::logic_error("classify: the two z routes disagree");
                verify_point(x, y, z);
                make_point(orb, x, y, z);
            } else if (r.is_zero()) {
                verify_line(x, y);
                make_z_line(orb, x, y);
            }
        }
    } else {
        // one vacuous condition: a free trace.  Split the constrained side
        // by vanishing of its c coefficient in the z generator; each branch
        // membership is Galois-invariant.
        const long long fixed_exp = y_free ? p.n1 : p.m1;
        const long long free_exp = y_free ? p.m1 : p.n1;
        const auto& fixed_side = y_free ? lams : mus;

        std::map<PairKey, PairOrbit> generic, degenerate;
        for (const auto& w : fixed_side) {
            const CycloElt tr = CycloElt::trace_of_root(w);
            const bool degen = cheb_c_val(fixed_exp, tr).is_zero();
            if (!degen) {
                const PairOrbit orb = y_free ? pair_orbit(w, RootOfUnity(1, 0))
                                             : pair_orbit(RootOfUnity(1, 0), w);
                generic.emplace(pair_key(orb.lam, orb.mu), orb);
            } else {
                // the z generator collapses to a multiple of the trace of
                // the free generator's power, so the free trace is pinned
                // and z becomes free
                for (const auto& u : power_trace_zero_solutions(free_exp)) {
                    const RootOfUnity a = y_free ? w : u;
                    const RootOfUnity b = y_free ? u : w;
                    const PairOrbit orb = pair_orbit(a, b);
                    degenerate.emplace(pair_key(orb.lam, orb.mu), orb);
                }
            }
        }

        for (const auto& entry : degenerate) {
            const PairOrbit& orb = entry.second;
            const CycloElt x = CycloElt::trace_of_root(orb.lam);
            const CycloElt y = CycloElt::trace_of_root(orb.mu);
            verify_line(x, y);
            make_z_line(orb, x, y);
        }

        for (const auto& entry : generic) {
            const PairOrbit& orb = entry.second;
            ComponentPiece pc;
            pc.dim = 1;
            pc.x_fixed = y_free;
            pc.y_fixed = !y_free;
            pc.z_fixed = false;
            pc.lambda = orb.lam;
            pc.mu = orb.mu;
            if (pc.x_fixed) pc.x = CycloElt::trace_of_root(orb.lam);
            if (pc.y_fixed) pc.y = CycloElt::trace_of_root(orb.mu);
            pc.orbit_size = orb.size();

            // certify red not identically zero on the curve by exact
            // sampling: red(x, y, z(y)) a(y)^2 is a polynomial of degree at
            // most 2 |free_exp| + 2 in the free trace
            const CycloElt fixed_tr = y_free ? pc.x : pc.y;
            const CycloElt cf = cheb_c_val(fixed_exp, fixed_tr);
            const CycloElt df = cheb_d_val(fixed_exp, fixed_tr);
            bool nonzero = false;
            long long tried = 0;
            const long long needed = 2 * abs_ll(free_exp) + 3;
            for (long long v = 2; tried < needed; ++v) {
                const CycloElt w{mpq_class(z_of(v))};
                const CycloElt cw = cheb_c_val(free_exp, w);
                const CycloElt dw = cheb_d_val(free_exp, w);
                const CycloElt a = cf * cw;
                if (a.is_zero()) continue;
                ++tried;
                const CycloElt x = y_free ? fixed_tr : w;
                const CycloElt y = y_free ? w : fixed_tr;
                const CycloElt r = y_free ? x * cf * dw + y * df * cw +
                                                CycloElt(mpq_class(2)) * df * dw
                                          : x * cw * df + y * dw * cf +
                                                CycloElt(mpq_class(2)) * dw * df;
                const CycloElt z = -(r / a);
                verify_point(x, y, z);
                if (!red_value(x, y, z).is_zero()) {
                    nonzero = true;
                    break;
                }
            }
            pc.red_nonzero = nonzero;
            rep.pieces.push_back(std::move(pc));
        }
    }

    rep.orbit_count = static_cast<long long>(rep.pieces.size());
    for (const auto& pc : rep.pieces)
        if (pc.dim == 0) rep.point_count += pc.orbit_size;
    bool all = !rep.pieces.empty(), any = false;
    for (const auto& pc : rep.pieces) {
        all = all && pc.red_nonzero;
        any = any || pc.red_nonzero;
    }
    rep.in_gen_irr = all;
    rep.gen_irr_nonempty = any;
    if (piece_shape_dim(rep.pieces) != rep.dim)
        throw std::logic_error("classify: piece shape disagrees with the dimension verdict");
    return rep;
}

}  // namespace detail

inline ComponentReport classify(const GroupPresentation& p, int i) {
    detail::require_nonzero_exponents(p, "classify");
    if (i < 1 || i > 10) throw std::out_of_range("classify: component id must be 1..10");
    return i <= 8 ? detail::classify_mid(p, i) : detail::classify_end(p, i);
}

inline std::array<ComponentReport, 10> classify_all(const GroupPresentation& p) {
    std::array<ComponentReport, 10> out;
    for (int i = 1; i <= 10; ++i) out[static_cast<std::size_t>(i - 1)] = classify(p, i);
    return out;
}

// ===== intersection graph =====

namespace detail {

inline QPoly to_qpoly(const MPoly& g, Var v) {
    std::vector<mpq_class> co(static_cast<std::size_t>(var_degree(g, v)) + 1, mpq_class(0));
    for (const auto& term : g.terms()) co[term.first[v]] = term.second;
    return QPoly(std::move(co));
}

inline QPoly qpoly_derivative(const QPoly& f) {
    const auto& c = f.coeffs();
    std::vector<mpq_class> d;
    for (std::size_t i = 1; i < c.size(); ++i)
        d.push_back(c[i] * mpq_class(static_cast<unsigned long>(i)));
    return QPoly(std::move(d));
}

inline QPoly squarefree_part(const QPoly& f) {
    const QPoly g = QPoly::gcd(f, qpoly_derivative(f));
    auto qr = f.divmod(g);
    if (!qr.second.is_zero())
        throw std::logic_error("squarefree_part: gcd does not divide");
    return qr.first.monic();
}

// All trace solutions of a family of univariate generators, each solution
// given as a root-of-unity class with its trace.  The degree of the
// squarefree gcd certifies completeness: if the located classes do not
// account for the full degree, some root is not a root-of-unity trace and
// we refuse to answer.
inline std::vector<std::pair<RootOfUnity, CycloElt>> trace_roots(
    const std::vector<QPoly>& gs) {
    QPoly g = gs.at(0);
    for (std::size_t k = 1; k < gs.size(); ++k) g = QPoly::gcd(g, gs[k]);
    if (g.is_zero()) throw std::logic_error("trace_roots: zero generator family");
    if (g.degree() == 0) return {};

    const QPoly sf = squarefree_part(g);
    const IntPoly zf = sf.primitive_integer();
    const long d = sf.degree();
    long found = 0;
    std::vector<std::pair<RootOfUnity, CycloElt>> out;
    for (unsigned long o = 1; found < d; ++o) {
        if (o > static_cast<unsigned long>(8 * d * d + 8))
            throw std::logic_error("trace_roots: a root is not a root-of-unity trace");
        const unsigned long phi = euler_phi(o);
        const long cls_deg = (o <= 2) ? 1 : static_cast<long>(phi / 2);
        if (cls_deg > d) continue;
        const RootOfUnity rep(o, o == 1 ? 0 : 1);
        const CycloElt tr = CycloElt::trace_of_root(rep);
        if (!zf.eval<CycloElt>(tr).is_zero()) continue;
        // conjugate-closed: all classes of order o are roots together
        if (o <= 2) {
            out.emplace_back(rep, tr);
        } else {
            for (unsigned long k = 1; 2 * k <= o; ++k) {
                if (std::gcd(k, o) != 1) continue;
                const RootOfUnity r(o, static_cast<long long>(k));
                out.emplace_back(r, CycloElt::trace_of_root(r));
            }
        }
        found += cls_deg;
    }
    if (found != d) throw std::logic_error("trace_roots: inconsistent root count");
    return out;
}

// Does a specialized ideal admit a point whose traces are sums of roots of
// unity?  Generators must involve x alone, y alone, or be linear in z.
inline bool specialized_has_cyclotomic_point(const std::vector<MPoly>& gens) {
    std::vector<QPoly> xg, yg;
    std::vector<MPoly> zg;
    for (const MPoly& g : gens) {
        if (g.is_zero()) continue;
        if (g.is_constant()) return false;  // the unit ideal
        if (var_degree(g, VZ) > 0) {
            if (var_degree(g, VZ) != 1 || !uses_only(g, true, true, true))
                throw std::logic_error(
                    "specialized_has_cyclotomic_point: unsupported z generator");
            zg.push_back(g);
        } else if (uses_only(g, true, false, false)) {
            xg.push_back(to_qpoly(g, VX));
        } else if (uses_only(g, false, true, false)) {
            yg.push_back(to_qpoly(g, VY));
        } else {
            throw std::logic_error(
                "specialized_has_cyclotomic_point: unexpected generator shape");
        }
    }
    if (xg.empty() && yg.empty() && zg.empty()) return true;
    if (xg.empty() || yg.empty())
        throw std::logic_error(
            "specialized_has_cyclotomic_point: a free trace with residual generators");

    const auto xs = trace_roots(xg);
    const auto ys = trace_roots(yg);
    for (const auto& xr : xs) {
        for (const auto& yr : ys) {
            // all z generators must admit a common z over this trace pair
            bool ok = true;
            bool pinned = false;
            CycloElt zval;
            for (const MPoly& g : zg) {
                const CycloElt r = g.eval_xyz(xr.second, yr.second, CycloElt::zero());
                const CycloElt a =
                    g.eval_xyz(xr.second, yr.second, CycloElt::one()) - r;
                if (a.is_zero()) {
                    if (!r.is_zero()) {
                        ok = false;
                        break;
                    }
                } else {
                    const CycloElt z = -(r / a);
                    if (pinned && z != zval) {
                        ok = false;
                        break;
                    }
                    pinned = true;
                    zval = z;
                }
            }
            if (ok) return true;
        }
    }
    return false;
}

}  // namespace detail

struct IntersectionGraph {
    std::vector<int> nodes;                  // ids with nonempty generically irreducible part
    std::vector<std::pair<int, int>> edges;  // pairs meeting in a cyclotomic point
};

// Nodes are the components with a nonempty generically irreducible part;
// edges are the node pairs whose specialized intersection ideal has a
// cyclotomic point.  Only the sixteen pairs whose universal intersection
// ideal is nontrivial can produce an edge, so the result is a subgraph of
// the maximum intersection graph by construction.
inline IntersectionGraph intersection_graph(const GroupPresentation& p) {
    detail::require_nonzero_exponents(p, "intersection_graph");
    IntersectionGraph g;
    std::array<bool, 11> is_node{};
    for (int i = 1; i <= 10; ++i) {
        if (classify(p, i).gen_irr_nonempty) {
            is_node[static_cast<std::size_t>(i)] = true;
            g.nodes.push_back(i);
        }
    }
    for (const auto& e : figure_edges()) {
        if (!is_node[static_cast<std::size_t>(e.first)] ||
            !is_node[static_cast<std::size_t>(e.second)])
            continue;
        const std::optional<IdealData> ideal = intersection_ideal(e.first, e.second);
        if (!ideal) throw std::logic_error("intersection_graph: missing intersection ideal");
        std::vector<MPoly> gens;
        for (const MPoly& gen : ideal->generators()) {
            MPoly s = specialize_placeholders(gen, p);
            if (!s.is_zero()) gens.push_back(std::move(s));
        }
        if (detail::specialized_has_cyclotomic_point(gens)) g.edges.push_back(e);
    }
    for (const auto& e : g.edges)
        if (!figure_has_edge(e.first, e.second))
            throw std::logic_error("intersection_graph: edge outside the maximum graph");
    return g;
}

}  // namespace sl2cv

#endif  // SL2CV_CLASSIFIER_HPP_
