#ifndef SL2CV_UPOLY_HPP_
#define SL2CV_UPOLY_HPP_

/*
 * Dense univariate polynomials over Z and over Q.
 *
 * Coefficients are stored in ascending degree order with no trailing
 * zeros, so the zero polynomial has an empty coefficient vector and
 * degree() returns -1 for it.  The text format used throughout the
 * project is the comma-separated ascending coefficient list, e.g.
 * "-1,0,1" for t^2 - 1.
 */

#include <gmpxx.h>

#include <algorithm>
#include <cstdlib>
#include <initializer_list>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sl2cv {

// gmpxx has no long long constructor; go through long or a string.
inline mpz_class z_of(long long v) {
    if (v >= std::numeric_limits<long>::min() && v <= std::numeric_limits<long>::max())
        return mpz_class(static_cast<long>(v));
    return mpz_class(std::to_string(v));
}

class IntPoly {
public:
    IntPoly() = default;

    explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

    explicit IntPoly(const mpz_class& v) {
        if (v != 0) c_.push_back(v);
    }

    IntPoly(std::initializer_list<long> coeffs) {
        c_.reserve(coeffs.size());
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static IntPoly zero() { return IntPoly{}; }
    static IntPoly one() { return IntPoly{1}; }
    static IntPoly constant(const mpz_class& v) {
        IntPoly p;
        if (v != 0) p.c_.push_back(v);
        return p;
    }
    // The monomial a*t^k.
    static IntPoly monomial(const mpz_class& a, std::size_t k) {
        IntPoly p;
        if (a != 0) {
            p.c_.assign(k + 1, mpz_class(0));
            p.c_[k] = a;
        }
        return p;
    }
    static IntPoly t() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    const std::vector<mpz_class>& coeffs() const { return c_; }

    mpz_class coeff(std::size_t i) const {
        return i < c_.size() ? c_[i] : mpz_class(0);
    }

    mpz_class leading() const {
        if (c_.empty()) throw std::domain_error("IntPoly: leading coefficient of zero");
        return c_.back();
    }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    IntPoly operator-() const {
        IntPoly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    IntPoly operator+(const IntPoly& o) const {
        IntPoly r;
        r.c_.resize(std::max(c_.size(), o.c_.size()), mpz_class(0));
        for (std::size_t i = 0; i < r.c_.size(); ++i) {
            if (i < c_.size()) r.c_[i] += c_[i];
            if (i < o.c_.size()) r.c_[i] += o.c_[i];
        }
        r.trim();
        return r;
    }

    IntPoly operator-(const IntPoly& o) const { return *this + (-o); }

    IntPoly operator*(const IntPoly& o) const {
        if (is_zero() || o.is_zero()) return zero();
        IntPoly r;
        r.c_.assign(c_.size() + o.c_.size() - 1, mpz_class(0));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r.c_[i + j] += c_[i] * o.c_[j];
        }
        r.trim();
        return r;
    }

    IntPoly operator*(const mpz_class& s) const {
        if (s == 0) return zero();
        IntPoly r = *this;
        for (auto& v : r.c_) v *= s;
        return r;
    }

    // Multiply by t^k.
    IntPoly shift(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        IntPoly r;
        r.c_.assign(k, mpz_class(0));
        r.c_.insert(r.c_.end(), c_.begin(), c_.end());
        return r;
    }

    IntPoly derivative() const {
        IntPoly r;
        for (std::size_t i = 1; i < c_.size(); ++i) r.c_.push_back(mpz_class(i) * c_[i]);
        r.trim();
        return r;
    }

    // Horner evaluation in any commutative ring R constructible from mpz_class.
    template <class R>
    R eval(const R& x) const {
        R acc = R(mpz_class(0));
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + R(c_[i]);
        return acc;
    }

    mpz_class eval_z(const mpz_class& x) const {
        mpz_class acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    mpq_class eval_q(const mpq_class& x) const {
        mpq_class acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + mpq_class(c_[i]);
        return acc;
    }

    // Quotient of an exact division, or nullopt if o does not divide *this
    // over Z.  Works for any nonzero divisor; intermediate division of the
    // leading coefficients must stay integral at each step.
    std::optional<IntPoly> divide_exact(const IntPoly& o) const {
        if (o.is_zero()) throw std::domain_error("IntPoly: division by zero");
        if (is_zero()) return zero();
        if (degree() < o.degree()) return std::nullopt;
        std::vector<mpz_class> rem = c_;
        std::vector<mpz_class> quo(c_.size() - o.c_.size() + 1, mpz_class(0));
        const mpz_class& lead = o.c_.back();
        for (std::size_t i = quo.size(); i-- > 0;) {
            mpz_class top = rem[i + o.c_.size() - 1];
            if (top == 0) continue;
            mpz_class q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
            if (r != 0) return std::nullopt;
            quo[i] = q;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                rem[i + j] -= q * o.c_[j];
        }
        for (const auto& v : rem)
            if (v != 0) return std::nullopt;
        return IntPoly(std::move(quo));
    }

    mpz_class content() const {
        mpz_class g = 0;
        for (const auto& v : c_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
            if (g == 1) break;
        }
        return g;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) os << ",";
            os << c_[i].get_str();
        }
        return os.str();
    }

    static IntPoly parse(const std::string& text) {
        std::vector<mpz_class> coeffs;
        std::string tok;
        std::istringstream is(text);
        while (std::getline(is, tok, ',')) {
            const auto b = tok.find_first_not_of(" \t");
            const auto e = tok.find_last_not_of(" \t");
            if (b == std::string::npos) throw std::invalid_argument("IntPoly: empty coefficient");
            coeffs.emplace_back(tok.substr(b, e - b + 1));
        }
        return IntPoly(std::move(coeffs));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<mpz_class> c_;
};

inline IntPoly operator*(const mpz_class& s, const IntPoly& p) { return p * s; }

class QPoly {
public:
    QPoly() = default;

    explicit QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
        for (auto& v : c_) v.canonicalize();
        trim();
    }

    explicit QPoly(const IntPoly& p) {
        c_.reserve(p.coeffs().size());
        for (const auto& v : p.coeffs()) c_.emplace_back(v);
    }

    explicit QPoly(const mpz_class& v) {
        if (v != 0) c_.emplace_back(v);
    }

    static QPoly zero() { return QPoly{}; }
    static QPoly one() { return QPoly(std::vector<mpq_class>{1}); }
    static QPoly monomial(const mpq_class& a, std::size_t k) {
        QPoly p;
        if (a != 0) {
            p.c_.assign(k + 1, mpq_class(0));
            p.c_[k] = a;
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    mpq_class coeff(std::size_t i) const {
        return i < c_.size() ? c_[i] : mpq_class(0);
    }

    mpq_class leading() const {
        if (c_.empty()) throw std::domain_error("QPoly: leading coefficient of zero");
        return c_.back();
    }

    bool operator==(const QPoly& o) const { return c_ == o.c_; }
    bool operator!=(const QPoly& o) const { return c_ != o.c_; }

    QPoly operator-() const {
        QPoly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    QPoly operator+(const QPoly& o) const {
        QPoly r;
        r.c_.resize(std::max(c_.size(), o.c_.size()), mpq_class(0));
        for (std::size_t i = 0; i < r.c_.size(); ++i) {
            if (i < c_.size()) r.c_[i] += c_[i];
            if (i < o.c_.size()) r.c_[i] += o.c_[i];
        }
        r.trim();
        return r;
    }

    QPoly operator-(const QPoly& o) const { return *this + (-o); }

    QPoly operator*(const QPoly& o) const {
        if (is_zero() || o.is_zero()) return zero();
        QPoly r;
        r.c_.assign(c_.size() + o.c_.size() - 1, mpq_class(0));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r.c_[i + j] += c_[i] * o.c_[j];
        }
        r.trim();
        return r;
    }

    QPoly operator*(const mpq_class& s) const {
        if (s == 0) return zero();
        QPoly r = *this;
        for (auto& v : r.c_) v *= s;
        return r;
    }

    mpq_class eval(const mpq_class& x) const {
        mpq_class acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    QPoly monic() const {
        if (is_zero()) throw std::domain_error("QPoly: monic of zero");
        return *this * (mpq_class(1) / leading());
    }

    // Euclidean division: *this = q * o + r with deg r < deg o.
    std::pair<QPoly, QPoly> divmod(const QPoly& o) const {
        if (o.is_zero()) throw std::domain_error("QPoly: division by zero");
        QPoly r = *this;
        QPoly q;
        const long od = o.degree();
        while (!r.is_zero() && r.degree() >= od) {
            const mpq_class f = r.leading() / o.leading();
            const std::size_t k = static_cast<std::size_t>(r.degree() - od);
            q = q + monomial(f, k);
            r = r - o * monomial(f, k);
        }
        return {q, r};
    }

    static QPoly gcd(QPoly a, QPoly b) {
        while (!b.is_zero()) {
            QPoly r = a.divmod(b).second;
            a = std::move(b);
            b = std::move(r);
        }
        if (a.is_zero()) return a;
        return a.monic();
    }

    // Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic or zero.
    static std::tuple<QPoly, QPoly, QPoly> xgcd(const QPoly& a, const QPoly& b) {
        QPoly r0 = a, r1 = b;
        QPoly u0 = one(), u1 = zero();
        QPoly v0 = zero(), v1 = one();
        while (!r1.is_zero()) {
            auto [q, r] = r0.divmod(r1);
            QPoly u2 = u0 - q * u1;
            QPoly v2 = v0 - q * v1;
            r0 = std::move(r1); r1 = std::move(r);
            u0 = std::move(u1); u1 = std::move(u2);
            v0 = std::move(v1); v1 = std::move(v2);
        }
        if (r0.is_zero()) return {r0, u0, v0};
        const mpq_class s = mpq_class(1) / r0.leading();
        return {r0 * s, u0 * s, v0 * s};
    }

    // Least common denominator of the coefficients.
    mpz_class denominator_lcm() const {
        mpz_class l = 1;
        for (const auto& v : c_)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
        return l;
    }

    // Primitive integer polynomial with positive leading coefficient that is
    // a rational multiple of *this.
    IntPoly primitive_integer() const {
        if (is_zero()) return IntPoly::zero();
        const mpz_class l = denominator_lcm();
        std::vector<mpz_class> w;
        w.reserve(c_.size());
        for (const auto& v : c_) {
            mpq_class s = v * mpq_class(l);
            s.canonicalize();
            w.push_back(s.get_num());
        }
        IntPoly p{std::move(w)};
        const mpz_class g = p.content();
        if (g > 1) p = *p.divide_exact(IntPoly::constant(g));
        if (p.leading() < 0) p = -p;
        return p;
    }

    bool all_integer() const {
        for (const auto& v : c_)
            if (v.get_den() != 1) return false;
        return true;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<mpq_class> c_;
};

inline QPoly operator*(const mpq_class& s, const QPoly& p) { return p * s; }

// Formats a rational without spaces, "3" or "-3/4".
inline std::string q_to_string(const mpq_class& v) {
    mpq_class w = v;
    w.canonicalize();
    return w.get_str();
}

inline mpq_class q_parse(const std::string& s) {
    mpq_class v(s);
    v.canonicalize();
    return v;
}

}  // namespace sl2cv

#endif  // SL2CV_UPOLY_HPP_
