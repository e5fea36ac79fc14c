#ifndef SL2CV_CHEB_HPP_
#define SL2CV_CHEB_HPP_

/*
 * Trace polynomials of matrix powers.
 *
 * For M in SL2 with trace t one has M^n = c_n(t) M + d_n(t) I, where
 *
 *   c_0 = 0, d_0 = 1,   c_{n+1} = t c_n + d_n,   d_{n+1} = -c_n,
 *
 * extended to negative n by c_{-n} = -c_n and d_{-n} = t c_n + d_n.
 * Equivalently c_n(x) = U_{n-1}(x/2) and t c_n + 2 d_n = 2 T_n(x/2) in
 * classical Chebyshev notation.  The pair satisfies
 *
 *   c_n^2 + t c_n d_n + d_n^2 = 1                          (det relation)
 *   c_{n+m} = t c_n c_m + c_n d_m + d_n c_m                (product)
 *   d_{n+m} = d_n d_m - c_n c_m
 *   c_{nm} = c_m(tau_n) c_n,  d_{nm} = c_m(tau_n) d_n + d_m(tau_n),
 *
 * with tau_n = t c_n + 2 d_n the trace of M^n.
 */

#include "sl2cv/upoly.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sl2cv {

struct ChebPair {
    long long n = 0;
    IntPoly c, d;
};

// Fast doubling via the product formulas; O(log n) polynomial products.
inline ChebPair cheb_pair(long long n) {
    const unsigned long long a = n < 0 ? -static_cast<unsigned long long>(n)
                                       : static_cast<unsigned long long>(n);
    const IntPoly t = IntPoly::t();
    IntPoly c = IntPoly::zero(), d = IntPoly::one();
    if (a != 0) {
        int hi = 63;
        while (!((a >> hi) & 1ULL)) --hi;
        for (int i = hi; i >= 0; --i) {
            if (i != hi) {
                // (c,d) at k  ->  (c,d) at 2k
                IntPoly c2 = c * (t * c + d * mpz_class(2));
                IntPoly d2 = d * d - c * c;
                c = std::move(c2);
                d = std::move(d2);
            }
            if ((a >> i) & 1ULL) {
                IntPoly c1 = t * c + d;
                IntPoly d1 = -c;
                c = std::move(c1);
                d = std::move(d1);
            }
        }
    }
    if (n < 0) {
        IntPoly dm = t * c + d;
        c = -c;
        d = std::move(dm);
    }
    return {n, std::move(c), std::move(d)};
}

// Incremental table of (c_N, d_N) for N = 0..limit, built with the one-step
// recurrence only.  Serves as an oracle independent of the doubling route.
class ChebTable {
public:
    explicit ChebTable(std::size_t limit) {
        c_.reserve(limit + 1);
        d_.reserve(limit + 1);
        c_.push_back(IntPoly::zero());
        d_.push_back(IntPoly::one());
        const IntPoly t = IntPoly::t();
        for (std::size_t n = 0; n < limit; ++n) {
            c_.push_back(t * c_[n] + d_[n]);
            d_.push_back(-c_[n]);
        }
    }

    std::size_t limit() const { return c_.size() - 1; }

    const IntPoly& c(std::size_t n) const { return c_.at(n); }
    const IntPoly& d(std::size_t n) const { return d_.at(n); }

    IntPoly c_signed(long long n) const {
        if (n >= 0) return c(static_cast<std::size_t>(n));
        return -c(static_cast<std::size_t>(-n));
    }

    IntPoly d_signed(long long n) const {
        if (n >= 0) return d(static_cast<std::size_t>(n));
        const std::size_t a = static_cast<std::size_t>(-n);
        return IntPoly::t() * c(a) + d(a);
    }

private:
    std::vector<IntPoly> c_, d_;
};

// tau_n = t c_n + 2 d_n, the trace of M^n as a polynomial in t = tr M.
inline IntPoly cheb_tau(const ChebPair& p) {
    return IntPoly::t() * p.c + p.d * mpz_class(2);
}

inline IntPoly cheb_tau(long long n) { return cheb_tau(cheb_pair(n)); }

// Closed forms at t = 2 and t = -2:
//   c_n(2) = n, d_n(2) = 1 - n;  c_n(-2) = (-1)^{n-1} n, d_n(-2) = (-1)^{n+1}(n-1).
inline std::pair<mpz_class, mpz_class> cheb_at_pm2(long long n, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("cheb_at_pm2: sign must be +1 or -1");
    const mpz_class nz = z_of(n);
    if (sign == 1) return {nz, 1 - nz};
    const bool n_odd = (n % 2) != 0;
    return {n_odd ? nz : -nz, n_odd ? mpz_class(nz - 1) : mpz_class(1 - nz)};
}

struct ChebIdentityReport {
    bool pass = false;
    IntPoly lhs_c, rhs_c, lhs_d, rhs_d;
};

// Checks c_{n+m} = t c_n c_m + c_n d_m + d_n c_m and
//        d_{n+m} = d_n d_m - c_n c_m.
inline ChebIdentityReport cheb_product(long long n, long long m) {
    const ChebPair pn = cheb_pair(n), pm = cheb_pair(m), ps = cheb_pair(n + m);
    ChebIdentityReport r;
    r.lhs_c = ps.c;
    r.lhs_d = ps.d;
    r.rhs_c = IntPoly::t() * pn.c * pm.c + pn.c * pm.d + pn.d * pm.c;
    r.rhs_d = pn.d * pm.d - pn.c * pm.c;
    r.pass = (r.lhs_c == r.rhs_c) && (r.lhs_d == r.rhs_d);
    return r;
}

// Checks c_{nm} = c_m(tau_n) c_n and d_{nm} = c_m(tau_n) d_n + d_m(tau_n).
// A passing c-identity also certifies the exact divisibility c_n | c_{nm}
// with quotient c_m(tau_n).
inline ChebIdentityReport cheb_compose(long long n, long long m) {
    const ChebPair pn = cheb_pair(n), pm = cheb_pair(m), pnm = cheb_pair(n * m);
    const IntPoly tau = cheb_tau(pn);
    const IntPoly cm_tau = pm.c.eval<IntPoly>(tau);
    const IntPoly dm_tau = pm.d.eval<IntPoly>(tau);
    ChebIdentityReport r;
    r.lhs_c = pnm.c;
    r.lhs_d = pnm.d;
    r.rhs_c = cm_tau * pn.c;
    r.rhs_d = cm_tau * pn.d + dm_tau;
    r.pass = (r.lhs_c == r.rhs_c) && (r.lhs_d == r.rhs_d);
    return r;
}

// Monic gcd of c_n and c_m over Q, returned with integer coefficients.
// By the composition identity it equals c_{gcd(n,m)}.
inline IntPoly cheb_gcd(long long n, long long m) {
    if (n == 0 && m == 0) throw std::invalid_argument("cheb_gcd: gcd(c_0, c_0) undefined");
    const QPoly g = QPoly::gcd(QPoly(cheb_pair(n).c), QPoly(cheb_pair(m).c));
    return g.primitive_integer();
}

// Symbolic description of one root of c_n: the trace value
// zeta_{2n}^k + zeta_{2n}^{-k}, i.e. 2 cos(k pi / n).
struct RootTrace {
    long long two_n = 0;
    long long k = 0;
};

// The n-1 simple roots of c_n (n nonzero), k = 1..|n|-1.
inline std::vector<RootTrace> cheb_root_traces(long long n) {
    if (n == 0) throw std::invalid_argument("cheb_root_traces: c_0 is the zero polynomial");
    const long long a = n < 0 ? -n : n;
    std::vector<RootTrace> out;
    out.reserve(static_cast<std::size_t>(a - 1));
    for (long long k = 1; k < a; ++k) out.push_back({2 * a, k});
    return out;
}

// Human-readable rendering with variable name `var`, highest degree first,
// e.g. "t^2-1", "-t", "0".
inline std::string poly_human(const IntPoly& p, const std::string& var = "t") {
    if (p.is_zero()) return "0";
    std::string out;
    for (long i = p.degree(); i >= 0; --i) {
        const mpz_class a = p.coeff(static_cast<std::size_t>(i));
        if (a == 0) continue;
        mpz_class mag = abs(a);
        if (a < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        if (i == 0) {
            out += mag.get_str();
        } else {
            if (mag != 1) out += mag.get_str();
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace sl2cv

#endif  // SL2CV_CHEB_HPP_
