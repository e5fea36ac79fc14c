#ifndef SL2CV_CYCLO_HPP_
#define SL2CV_CYCLO_HPP_

/*
 * Exact arithmetic in cyclotomic fields.
 *
 * A CycloElt is stored as a rational vector in the power basis
 * 1, z, ..., z^{phi(N)-1} of Q(zeta_N) where z = zeta_N and N is the
 * element's conductor.  Stored conductors are always 1, odd, or divisible
 * by 4 (Q(zeta_{2m}) = Q(zeta_m) for odd m, with zeta_{2m} = -zeta_m^{(m+1)/2}).
 * Arithmetic lifts operands to the compositum; reduce() descends to the
 * minimal conductor and is applied at construction and serialization
 * boundaries.
 *
 * Galois action, minimal polynomials, norms and Newton-polygon valuations
 * are provided on top of the basic ring operations.
 */

#include "sl2cv/upoly.hpp"

#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sl2cv {

// ----- small number theory helpers -----

inline std::vector<std::pair<unsigned long, int>> factorize(unsigned long n) {
    std::vector<std::pair<unsigned long, int>> f;
    for (unsigned long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

inline bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
        if (n % p == 0) return false;
    return true;
}

inline unsigned long euler_phi(unsigned long n) {
    unsigned long r = n;
    for (const auto& [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

// Exponent of p in z (z nonzero).
inline long p_valuation(const mpz_class& z, const mpz_class& p) {
    if (z == 0) throw std::domain_error("p_valuation: zero argument");
    mpz_class rest;
    return static_cast<long>(
        mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t()));
}

// Prime factors of z > 0.
inline std::vector<mpz_class> prime_factors(mpz_class z) {
    std::vector<mpz_class> out;
    if (z < 0) z = -z;
    if (z <= 1) return out;
    for (unsigned long p = 2; p <= 1000000 && mpz_class(p) * p <= z; p += (p == 2 ? 1 : 2)) {
        if (z % p == 0) {
            out.emplace_back(p);
            while (z % p == 0) z /= p;
        }
    }
    if (z > 1) {
        if (!mpz_probab_prime_p(z.get_mpz_t(), 40))
            throw std::runtime_error("prime_factors: cofactor too large to factor");
        out.push_back(z);
    }
    return out;
}

// ----- cyclotomic polynomials -----

// Phi_N, computed by exact division of X^N - 1 by the proper-divisor factors.
inline const IntPoly& cyclotomic_poly(unsigned long N) {
    static std::map<unsigned long, IntPoly> cache;
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    if (N == 0) throw std::invalid_argument("cyclotomic_poly: N must be positive");
    IntPoly num = IntPoly::monomial(1, N) - IntPoly::one();
    IntPoly den = IntPoly::one();
    for (unsigned long d = 1; d < N; ++d)
        if (N % d == 0) den = den * cyclotomic_poly(d);
    auto q = num.divide_exact(den);
    if (!q) throw std::logic_error("cyclotomic_poly: division failed");
    return cache.emplace(N, std::move(*q)).first->second;
}

namespace detail {

// Per-conductor tables: Phi_N and X^i mod Phi_N for i = 0..N-1.
struct CondTables {
    QPoly phi;
    std::vector<std::vector<mpq_class>> xpow;  // each row has length phi(N)
};

inline const CondTables& cond_tables(unsigned long N) {
    static std::map<unsigned long, CondTables> cache;
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    CondTables t;
    t.phi = QPoly(cyclotomic_poly(N));
    const std::size_t deg = static_cast<std::size_t>(t.phi.degree());
    std::vector<mpq_class> cur(deg, mpq_class(0));
    cur[0] = 1;
    t.xpow.reserve(N);
    for (unsigned long i = 0; i < N; ++i) {
        t.xpow.push_back(cur);
        // multiply by X, reduce by the monic phi if the top appears
        mpq_class top = cur[deg - 1];
        for (std::size_t j = deg - 1; j > 0; --j) cur[j] = cur[j - 1];
        cur[0] = 0;
        if (top != 0)
            for (std::size_t j = 0; j < deg; ++j) cur[j] -= top * t.phi.coeff(j);
    }
    return cache.emplace(N, std::move(t)).first->second;
}

}  // namespace detail

// A root of unity in canonical form zeta_order^exponent with
// gcd(exponent, order) = 1, so order() is the exact multiplicative order.
class RootOfUnity {
public:
    RootOfUnity() = default;  // the value 1

    RootOfUnity(long long order, long long k) {
        if (order <= 0) throw std::invalid_argument("RootOfUnity: order must be positive");
        long long r = k % order;
        if (r < 0) r += order;
        if (r == 0) {
            ord_ = 1;
            exp_ = 0;
        } else {
            const unsigned long g = std::gcd(static_cast<unsigned long>(r),
                                             static_cast<unsigned long>(order));
            ord_ = static_cast<unsigned long>(order) / g;
            exp_ = static_cast<unsigned long>(r) / g;
        }
    }

    unsigned long order() const { return ord_; }
    unsigned long exponent() const { return exp_; }

    bool is_one() const { return ord_ == 1; }
    bool is_minus_one() const { return ord_ == 2; }
    bool is_pm_one() const { return ord_ <= 2; }

    RootOfUnity pow(long long e) const {
        return RootOfUnity(static_cast<long long>(ord_),
                           static_cast<long long>(exp_ % ord_) * (e % static_cast<long long>(ord_)));
    }

    RootOfUnity inverse() const { return pow(-1); }

    bool operator==(const RootOfUnity& o) const { return ord_ == o.ord_ && exp_ == o.exp_; }
    bool operator!=(const RootOfUnity& o) const { return !(*this == o); }
    bool operator<(const RootOfUnity& o) const {
        return ord_ != o.ord_ ? ord_ < o.ord_ : exp_ < o.exp_;
    }

    std::string to_string() const {
        if (ord_ == 1) return "1";
        if (ord_ == 2) return "-1";
        std::ostringstream os;
        os << "zeta_" << ord_ << "^" << exp_;
        return os.str();
    }

private:
    unsigned long ord_ = 1;
    unsigned long exp_ = 0;
};

struct ValuationReport {
    mpz_class prime;
    std::vector<mpq_class> slopes;  // valuations of the conjugate roots, ascending
    bool is_integral_somewhere = false;
    bool is_integral_everywhere = false;
};

class CycloElt {
public:
    CycloElt() : cond_(1), co_(1, mpq_class(0)) {}

    explicit CycloElt(const mpq_class& v) : cond_(1), co_(1, v) { co_[0].canonicalize(); }
    explicit CycloElt(const mpz_class& v) : cond_(1), co_(1, mpq_class(v)) {}

    // zeta_order^k, at its minimal conductor.
    static CycloElt root(long long order, long long k) { return root(RootOfUnity(order, k)); }

    static CycloElt root(const RootOfUnity& r) {
        unsigned long C = r.order();
        unsigned long e = r.exponent();
        bool negate = false;
        if (C % 4 == 2) {
            // zeta_{2m} = -zeta_m^{(m+1)/2} for odd m
            C /= 2;
            negate = (e % 2) != 0;
            e = static_cast<unsigned long>(
                (static_cast<unsigned long long>(e) * ((C + 1) / 2)) % C);
        }
        const auto& t = detail::cond_tables(C);
        CycloElt out;
        out.cond_ = C;
        out.co_ = t.xpow[e % C];
        if (negate)
            for (auto& v : out.co_) v = -v;
        return out;
    }

    // zeta + zeta^{-1}
    static CycloElt trace_of_root(const RootOfUnity& r) {
        return root(r) + root(r.inverse());
    }

    static CycloElt zero() { return CycloElt(); }
    static CycloElt one() { return CycloElt(mpq_class(1)); }

    unsigned long conductor() const { return cond_; }
    const std::vector<mpq_class>& coeffs() const { return co_; }

    bool is_zero() const {
        for (const auto& v : co_)
            if (v != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (std::size_t i = 1; i < co_.size(); ++i)
            if (co_[i] != 0) return false;
        return true;
    }

    // Rational value; requires is_rational() (true in particular after
    // reduce() brought the conductor down to 1).
    mpq_class rational_value() const {
        if (!is_rational())
            throw std::domain_error("CycloElt: not rational");
        return co_[0];
    }

    CycloElt operator-() const {
        CycloElt r = *this;
        for (auto& v : r.co_) v = -v;
        return r;
    }

    CycloElt operator+(const CycloElt& o) const {
        auto [a, b] = lift_common(*this, o);
        for (std::size_t i = 0; i < a.co_.size(); ++i) a.co_[i] += b.co_[i];
        return a;
    }

    CycloElt operator-(const CycloElt& o) const { return *this + (-o); }

    CycloElt operator*(const CycloElt& o) const {
        auto [a, b] = lift_common(*this, o);
        const auto& t = detail::cond_tables(a.cond_);
        const std::size_t deg = a.co_.size();
        std::vector<mpq_class> conv(2 * deg - 1, mpq_class(0));
        for (std::size_t i = 0; i < deg; ++i) {
            if (a.co_[i] == 0) continue;
            for (std::size_t j = 0; j < deg; ++j) {
                if (b.co_[j] == 0) continue;
                conv[i + j] += a.co_[i] * b.co_[j];
            }
        }
        CycloElt r;
        r.cond_ = a.cond_;
        r.co_.assign(deg, mpq_class(0));
        for (std::size_t i = 0; i < conv.size(); ++i) {
            if (conv[i] == 0) continue;
            if (i < deg) {
                r.co_[i] += conv[i];
            } else {
                const auto& row = t.xpow[i % a.cond_];
                for (std::size_t j = 0; j < deg; ++j) r.co_[j] += conv[i] * row[j];
            }
        }
        return r;
    }

    CycloElt operator*(const mpq_class& s) const {
        CycloElt r = *this;
        for (auto& v : r.co_) v *= s;
        return r;
    }

    CycloElt inverse() const {
        if (is_zero()) throw std::domain_error("CycloElt: division by zero");
        const auto& t = detail::cond_tables(cond_);
        auto [g, u, v] = QPoly::xgcd(QPoly(std::vector<mpq_class>(co_)), t.phi);
        (void)v;
        if (g.degree() != 0)
            throw std::logic_error("CycloElt: gcd with cyclotomic polynomial not 1");
        u = u.divmod(t.phi).second;
        CycloElt r;
        r.cond_ = cond_;
        r.co_.assign(co_.size(), mpq_class(0));
        for (std::size_t i = 0; i < u.coeffs().size(); ++i)
            r.co_[i] = u.coeff(i);
        return r;
    }

    CycloElt operator/(const CycloElt& o) const { return *this * o.inverse(); }

    bool operator==(const CycloElt& o) const {
        auto [a, b] = lift_common(*this, o);
        return a.co_ == b.co_;
    }
    bool operator!=(const CycloElt& o) const { return !(*this == o); }

    // Image under sigma_j : zeta_N -> zeta_N^j, for gcd(j, N) = 1.
    CycloElt galois(unsigned long j) const {
        j %= cond_;
        if (std::gcd(j, cond_) != 1)
            throw std::invalid_argument("CycloElt: galois exponent not coprime to conductor");
        const auto& t = detail::cond_tables(cond_);
        CycloElt r;
        r.cond_ = cond_;
        r.co_.assign(co_.size(), mpq_class(0));
        for (std::size_t i = 0; i < co_.size(); ++i) {
            if (co_[i] == 0) continue;
            const auto& row = t.xpow[(i * static_cast<unsigned long long>(j)) % cond_];
            for (std::size_t k = 0; k < r.co_.size(); ++k) r.co_[k] += co_[i] * row[k];
        }
        return r;
    }

    CycloElt conj() const { return cond_ == 1 ? *this : galois(cond_ - 1); }

    // Re-express at conductor M (a multiple of the current one, normalized).
    CycloElt lift_to(unsigned long M) const {
        if (M % cond_ != 0)
            throw std::invalid_argument("CycloElt: lift target is not a multiple of the conductor");
        if (M == cond_) return *this;
        const auto& t = detail::cond_tables(M);
        const unsigned long step = M / cond_;
        CycloElt r;
        r.cond_ = M;
        r.co_.assign(t.xpow[0].size(), mpq_class(0));
        for (std::size_t i = 0; i < co_.size(); ++i) {
            if (co_[i] == 0) continue;
            const auto& row = t.xpow[(i * static_cast<unsigned long long>(step)) % M];
            for (std::size_t k = 0; k < r.co_.size(); ++k) r.co_[k] += co_[i] * row[k];
        }
        return r;
    }

    // Descend to the minimal conductor.
    CycloElt reduce() const {
        CycloElt cur = *this;
        bool changed = true;
        while (changed && cur.cond_ > 1) {
            changed = false;
            for (const auto& [p, e] : factorize(cur.cond_)) {
                (void)e;
                unsigned long M = cur.cond_ / p;
                if (M % 4 == 2) M /= 2;
                if (M == cur.cond_) continue;
                if (auto down = cur.try_descend(M)) {
                    cur = std::move(*down);
                    changed = true;
                    break;
                }
            }
        }
        return cur;
    }

    // Product of all Galois conjugates over Q(zeta_N); N = 0 means the
    // element's own conductor.  The result is rational.
    mpq_class norm_to_Q(unsigned long ambient = 0) const {
        unsigned long N = ambient == 0 ? cond_ : ambient;
        if (N % 4 == 2) N /= 2;
        if (N % cond_ != 0)
            throw std::invalid_argument("CycloElt: ambient field does not contain the element");
        const CycloElt lifted = lift_to(N);
        CycloElt acc = CycloElt::one();
        for (unsigned long j = 1; j <= N; ++j) {
            if (std::gcd(j, N) != 1) continue;
            acc = acc * lifted.galois(j);
        }
        const CycloElt red = acc.reduce();
        if (red.conductor() != 1)
            throw std::logic_error("CycloElt: norm is not rational");
        return red.rational_value();
    }

    // Minimal polynomial over Q: product of (X - r) over the distinct
    // Galois conjugates r.  Monic; rational coefficients.
    QPoly min_poly() const {
        std::vector<CycloElt> orbit;
        for (unsigned long j = 1; j <= cond_; ++j) {
            if (std::gcd(j, cond_) != 1) continue;
            CycloElt img = galois(j);
            bool seen = false;
            for (const auto& r : orbit)
                if (r == img) { seen = true; break; }
            if (!seen) orbit.push_back(std::move(img));
        }
        std::vector<CycloElt> poly{CycloElt::one()};
        for (const auto& r : orbit) {
            std::vector<CycloElt> next(poly.size() + 1);
            for (std::size_t i = 0; i < poly.size(); ++i) {
                next[i + 1] = next[i + 1] + poly[i];
                next[i] = next[i] - r * poly[i];
            }
            poly = std::move(next);
        }
        std::vector<mpq_class> out;
        out.reserve(poly.size());
        for (auto& c : poly) {
            const CycloElt red = c.reduce();
            if (red.conductor() != 1)
                throw std::logic_error("CycloElt: minimal polynomial coefficient not rational");
            out.push_back(red.rational_value());
        }
        return QPoly(std::move(out));
    }

    bool is_algebraic_integer() const { return min_poly().all_integer(); }

    // Newton polygon of the (primitive integer) minimal polynomial at p.
    // The reported slopes are the valuations of the conjugate roots, i.e.
    // the negated slopes of the lower hull, sorted ascending.
    ValuationReport valuations_above(const mpz_class& p) const {
        if (is_zero()) throw std::domain_error("CycloElt: valuations of zero");
        const IntPoly P = min_poly().primitive_integer();
        std::vector<std::pair<long, mpq_class>> pts;  // (degree, valuation)
        for (long i = 0; i <= P.degree(); ++i) {
            const mpz_class a = P.coeff(static_cast<std::size_t>(i));
            if (a != 0) pts.emplace_back(i, mpq_class(p_valuation(a, p)));
        }
        // lower convex hull, left to right
        std::vector<std::pair<long, mpq_class>> hull;
        for (const auto& pt : pts) {
            while (hull.size() >= 2) {
                const auto& a = hull[hull.size() - 2];
                const auto& b = hull[hull.size() - 1];
                // keep b only if it is strictly below segment a--pt
                const mpq_class lhs = (b.second - a.second) * (pt.first - a.first);
                const mpq_class rhs = (pt.second - a.second) * (b.first - a.first);
                if (lhs < rhs) break;
                hull.pop_back();
            }
            hull.push_back(pt);
        }
        ValuationReport rep;
        rep.prime = p;
        for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
            const mpq_class slope = (hull[s + 1].second - hull[s].second) /
                                    mpq_class(hull[s + 1].first - hull[s].first);
            const long mult = hull[s + 1].first - hull[s].first;
            for (long i = 0; i < mult; ++i) rep.slopes.push_back(-slope);
        }
        std::sort(rep.slopes.begin(), rep.slopes.end());
        rep.is_integral_somewhere = !rep.slopes.empty() && rep.slopes.back() >= 0;
        rep.is_integral_everywhere = !rep.slopes.empty() && rep.slopes.front() >= 0;
        return rep;
    }

    // Primes that can carry a negative valuation: those dividing a
    // denominator of the minimal polynomial.
    std::vector<mpz_class> denominator_primes() const {
        const QPoly mp = min_poly();
        mpz_class l = 1;
        for (const auto& c : mp.coeffs())
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
        return prime_factors(l);
    }

    // Stable text key (reduced form), usable for dedup containers.
    std::string to_key() const {
        const CycloElt r = reduce();
        std::ostringstream os;
        os << r.cond_ << ":";
        for (std::size_t i = 0; i < r.co_.size(); ++i) {
            if (i) os << ",";
            os << q_to_string(r.co_[i]);
        }
        return os.str();
    }

private:
    static std::pair<CycloElt, CycloElt> lift_common(const CycloElt& a, const CycloElt& b) {
        const unsigned long L = std::lcm(a.cond_, b.cond_);
        return {a.lift_to(L), b.lift_to(L)};
    }

    // Descend to conductor M if the element lies in Q(zeta_M); M | cond_.
    std::optional<CycloElt> try_descend(unsigned long M) const {
        if (cond_ % M != 0) return std::nullopt;
        // invariance under the subgroup fixing Q(zeta_M): j = 1 mod M
        for (unsigned long j = 1 + M; j < cond_; j += M) {
            if (std::gcd(j, cond_) != 1) continue;
            if (!(galois(j) == *this)) return std::nullopt;
        }
        // solve for coordinates in the embedded power basis of zeta_M
        const auto& t = detail::cond_tables(cond_);
        const std::size_t rows = co_.size();
        const std::size_t cols = static_cast<std::size_t>(euler_phi(M));
        const unsigned long step = cond_ / M;
        std::vector<std::vector<mpq_class>> A(rows, std::vector<mpq_class>(cols + 1, mpq_class(0)));
        for (std::size_t i = 0; i < cols; ++i) {
            const auto& row = t.xpow[(i * static_cast<unsigned long long>(step)) % cond_];
            for (std::size_t r = 0; r < rows; ++r) A[r][i] = row[r];
        }
        for (std::size_t r = 0; r < rows; ++r) A[r][cols] = co_[r];
        // Gaussian elimination
        std::size_t rank = 0;
        std::vector<long> pivot_col(rows, -1);
        for (std::size_t c = 0; c < cols && rank < rows; ++c) {
            std::size_t pr = rank;
            while (pr < rows && A[pr][c] == 0) ++pr;
            if (pr == rows) continue;
            std::swap(A[pr], A[rank]);
            const mpq_class inv = 1 / A[rank][c];
            for (std::size_t k = c; k <= cols; ++k) A[rank][k] *= inv;
            for (std::size_t r = 0; r < rows; ++r) {
                if (r == rank || A[r][c] == 0) continue;
                const mpq_class f = A[r][c];
                for (std::size_t k = c; k <= cols; ++k) A[r][k] -= f * A[rank][k];
            }
            pivot_col[rank] = static_cast<long>(c);
            ++rank;
        }
        for (std::size_t r = rank; r < rows; ++r)
            if (A[r][cols] != 0) throw std::logic_error("CycloElt: inconsistent descent system");
        CycloElt out;
        out.cond_ = M;
        out.co_.assign(cols, mpq_class(0));
        for (std::size_t r = 0; r < rank; ++r)
            out.co_[static_cast<std::size_t>(pivot_col[r])] = A[r][cols];
        return out;
    }

    unsigned long cond_;
    std::vector<mpq_class> co_;
};

inline CycloElt operator*(const mpq_class& s, const CycloElt& a) { return a * s; }

// c_n and d_n evaluated at x = lambda + lambda^{-1} by the eigenvalue
// formula c_n(x) = sum_{i=0}^{n-1} lambda^{n-1-2i} (lambda not +-1), with
// c_{-n} = -c_n and d_n = -c_{n-1}.  Exponent arithmetic only; this does
// not touch the polynomial route.
inline CycloElt cheb_c_at_trace(long long n, const RootOfUnity& lambda) {
    if (lambda.is_pm_one())
        throw std::invalid_argument("cheb_c_at_trace: lambda must not be +-1");
    const bool neg = n < 0;
    const long long a = neg ? -n : n;
    const unsigned long N = lambda.order();
    std::vector<long> mult(N, 0);
    for (long long i = 0; i < a; ++i) {
        long long e = (a - 1 - 2 * i) % static_cast<long long>(N);
        if (e < 0) e += N;
        mult[static_cast<std::size_t>(e)] += 1;
    }
    CycloElt acc;
    for (unsigned long e = 0; e < N; ++e) {
        if (!mult[e]) continue;
        acc = acc + CycloElt::root(lambda.pow(e)) * mpq_class(mult[e]);
    }
    if (neg) acc = -acc;
    return acc.reduce();
}

inline CycloElt cheb_d_at_trace(long long n, const RootOfUnity& lambda) {
    return -cheb_c_at_trace(n - 1, lambda);
}

}  // namespace sl2cv

#endif  // SL2CV_CYCLO_HPP_
