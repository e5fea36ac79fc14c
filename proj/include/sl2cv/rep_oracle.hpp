#ifndef SL2CV_REP_ORACLE_HPP_
#define SL2CV_REP_ORACLE_HPP_

/*
 * Brute-force oracle: explicit 2x2 representations with cyclotomic entries.
 * Given trace coordinates it builds the standard lift
 *   A = [[lambda, 1], [0, lambda^-1]],  B = [[mu, 0], [kappa, mu^-1]],
 * kappa = z - lambda mu - (lambda mu)^-1, verifies group relations by exact
 * matrix arithmetic, and enumerates relation-satisfying trace triples over
 * bounded root-of-unity orders.  Everything here is independent of the
 * symbolic classifier so the two can be played against each other.
 */

#include "sl2cv/cheb.hpp"
#include "sl2cv/cyclo.hpp"
#include "sl2cv/fixtures.hpp"
#include "sl2cv/trace_algebra.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace sl2cv {

// ----- exact 2x2 matrices -----

struct Mat2 {
    CycloElt a, b, c, d;  // [[a, b], [c, d]]

    static Mat2 identity() { return {CycloElt::one(), {}, {}, CycloElt::one()}; }

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    bool operator==(const Mat2& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
    CycloElt det() const { return a * d - b * c; }
    CycloElt trace() const { return a + d; }
    // valid only when det = 1
    Mat2 inverse_det1() const { return {d, -b, -c, a}; }
    bool is_identity() const {
        return b.is_zero() && c.is_zero() && (a - CycloElt::one()).is_zero() &&
               (d - CycloElt::one()).is_zero();
    }
};

inline Mat2 mat_pow(Mat2 m, long long e) {
    if (e < 0) {
        m = m.inverse_det1();
        e = -e;
    }
    Mat2 acc = Mat2::identity();
    while (e > 0) {
        if (e & 1) acc = acc * m;
        m = m * m;
        e >>= 1;
    }
    return acc;
}

// ----- representations -----

struct SL2Rep {
    Mat2 A, B;
};

inline SL2Rep build_rep(const CycloElt& lambda, const CycloElt& mu, const CycloElt& z) {
    if (lambda.is_zero() || mu.is_zero())
        throw std::invalid_argument("build_rep: lambda and mu must be invertible");
    const CycloElt li = lambda.inverse(), mi = mu.inverse();
    const CycloElt kappa = z - lambda * mu - li * mi;
    SL2Rep r;
    r.A = {lambda, CycloElt::one(), CycloElt::zero(), li};
    r.B = {mu, CycloElt::zero(), kappa, mi};
    return r;
}

inline Mat2 rep_word_matrix(const SL2Rep& r, const Word& w) {
    Mat2 m = Mat2::identity();
    for (const auto& [letter, e] : w.syllables)
        m = m * mat_pow(letter == 'a' ? r.A : r.B, e);
    return m;
}

inline bool check_word(const SL2Rep& r, const Word& w) {
    return rep_word_matrix(r, w).is_identity();
}

inline CycloElt rep_trace_of_word(const SL2Rep& r, const Word& w) {
    return rep_word_matrix(r, w).trace();
}

// ----- reducibility -----

// The eigenlines of M = [[a,b],[c,d]] are the zeros of the binary quadratic
// Q_M(v1, v2) = c v1^2 + (d - a) v1 v2 - b v2^2.  Two matrices share an
// eigenline over the algebraic closure iff the resultant of their Q-forms
// vanishes (a zero form means a scalar matrix, which shares a line with
// anything).
inline bool has_common_eigenline(const Mat2& M, const Mat2& N) {
    const CycloElt a1 = M.c, b1 = M.d - M.a, c1 = -M.b;
    const CycloElt a2 = N.c, b2 = N.d - N.a, c2 = -N.b;
    if ((a1.is_zero() && b1.is_zero() && c1.is_zero()) ||
        (a2.is_zero() && b2.is_zero() && c2.is_zero()))
        return true;
    const CycloElt ac = a1 * c2 - a2 * c1;
    const CycloElt res = ac * ac - (a1 * b2 - a2 * b1) * (b1 * c2 - b2 * c1);
    return res.is_zero();
}

// ----- exhaustive point enumeration -----

struct OraclePoint {
    RootOfUnity lambda{1, 0}, mu{1, 0};
    CycloElt x, y, z;
    bool z_solved = false;          // z from the linear trace condition vs sampled
    std::vector<int> components;    // i with every specialized wp_i generator zero
};

namespace detail {

// c_n / d_n at the trace of a root of unity, covering lambda = +-1.
inline CycloElt cheb_c_at(long long n, const RootOfUnity& lam) {
    if (lam.order() <= 2)
        return CycloElt(cheb_at_pm2(n, lam.order() == 1 ? 1 : -1).first);
    return cheb_c_at_trace(n, lam);
}

inline CycloElt cheb_d_at(long long n, const RootOfUnity& lam) {
    if (lam.order() <= 2)
        return CycloElt(cheb_at_pm2(n, lam.order() == 1 ? 1 : -1).second);
    return cheb_d_at_trace(n, lam);
}

// one representative per root-of-unity trace with order <= bound
inline std::vector<std::pair<RootOfUnity, CycloElt>> trace_candidates(long long bound) {
    std::vector<std::pair<RootOfUnity, CycloElt>> out;
    for (long long o = 1; o <= bound; ++o) {
        for (long long k = (o == 1) ? 0 : 1; k <= o / 2; ++k) {
            if (o > 1 && std::gcd(k, o) != 1) continue;
            const RootOfUnity r(o, k);
            out.emplace_back(r, CycloElt::trace_of_root(r));
            if (o <= 2) break;
        }
    }
    return out;
}

}  // namespace detail

// Exhaustive sweep over pairs of roots of unity with order <= order_bound.
// For each trace pair the linear coefficient-match condition determines z
// (or z is sampled when the condition degenerates); triples passing an exact
// matrix check of the relation are kept and tagged by the components whose
// specialized generators they annihilate.  Pairs violating the universal
// consequences c_{n1}^2 = c_{n2}^2 (and the m-side twin) or the z-free
// coefficient matches are skipped: no taggable point lives there.
inline std::vector<OraclePoint> enumerate_points(
    const GroupPresentation& pr, long long order_bound,
    const std::vector<mpq_class>& z_samples = {mpq_class(0), mpq_class(1), mpq_class(-2),
                                               mpq_class(5, 2)}) {
    if (order_bound < 1) throw std::invalid_argument("enumerate_points: bound must be >= 1");

    std::vector<std::vector<MPoly>> spec(11);
    for (int i = 1; i <= 10; ++i) spec[static_cast<std::size_t>(i)] = component_ideal_specialized(i, pr);

    struct Side {
        RootOfUnity root{1, 0};
        CycloElt tr, c1, d1, c2, d2;
    };
    auto survivors = [&](long long e1, long long e2) {
        std::vector<Side> out;
        for (const auto& [r, tr] : detail::trace_candidates(order_bound)) {
            Side s;
            s.root = r;
            s.tr = tr;
            s.c1 = detail::cheb_c_at(e1, r);
            s.d1 = detail::cheb_d_at(e1, r);
            s.c2 = detail::cheb_c_at(e2, r);
            s.d2 = detail::cheb_d_at(e2, r);
            if (!(s.c1 * s.c1 - s.c2 * s.c2).is_zero()) continue;
            out.push_back(std::move(s));
        }
        return out;
    };
    const std::vector<Side> a_side = survivors(pr.n1, pr.n2);
    const std::vector<Side> b_side = survivors(pr.m1, pr.m2);

    const Word rel = pr.relation_word();
    std::map<std::tuple<std::string, std::string, std::string>, OraclePoint> found;

    for (const Side& sa : a_side) {
        for (const Side& sb : b_side) {
            // z-free coefficient matches
            if (!(sa.c1 * sb.d1 + sa.c2 * sb.d2).is_zero()) continue;
            if (!(sa.d1 * sb.c1 + sa.d2 * sb.c2).is_zero()) continue;
            if (!(sa.c1 * sb.c1 + sa.c2 * sb.c2).is_zero()) continue;

            const CycloElt zcoeff = sa.c1 * sb.c1;
            const CycloElt rest = sa.tr * sa.c1 * sb.d1 + sb.tr * sa.d1 * sb.c1 +
                                  sa.d1 * sb.d1 - sa.d2 * sb.d2;
            std::vector<std::pair<CycloElt, bool>> z_cands;
            if (!zcoeff.is_zero()) {
                z_cands.emplace_back(-(rest * zcoeff.inverse()), true);
            } else {
                if (!rest.is_zero()) continue;  // linear condition unsatisfiable
                for (const mpq_class& q : z_samples) z_cands.emplace_back(CycloElt(q), false);
            }

            const CycloElt lambda = CycloElt::root(sa.root), mu = CycloElt::root(sb.root);
            for (auto& [z, solved] : z_cands) {
                const SL2Rep rep = build_rep(lambda, mu, z);
                if (!check_word(rep, rel)) continue;
                OraclePoint p;
                p.lambda = sa.root;
                p.mu = sb.root;
                p.x = sa.tr;
                p.y = sb.tr;
                p.z = z;
                p.z_solved = solved;
                for (int i = 1; i <= 10; ++i) {
                    bool all_zero = true;
                    for (const MPoly& g : spec[static_cast<std::size_t>(i)])
                        if (!g.eval_xyz(p.x, p.y, p.z).is_zero()) {
                            all_zero = false;
                            break;
                        }
                    if (all_zero) p.components.push_back(i);
                }
                auto key = std::make_tuple(p.x.to_key(), p.y.to_key(), p.z.to_key());
                found.emplace(std::move(key), std::move(p));
            }
        }
    }

    std::vector<OraclePoint> out;
    out.reserve(found.size());
    for (auto& [k, p] : found) out.push_back(std::move(p));
    return out;
}

}  // namespace sl2cv

#endif  // SL2CV_REP_ORACLE_HPP_
