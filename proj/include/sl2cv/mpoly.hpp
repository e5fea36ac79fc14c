#ifndef SL2CV_MPOLY_HPP_
#define SL2CV_MPOLY_HPP_

/*
 * Multivariate polynomials over Q in the eleven fixed variables
 *
 *   x, y, z, gn1, dn1, gm1, dm1, gn2, dn2, gm2, dm2
 *
 * ordered grevlex with x highest.  x, y, z are the trace coordinates
 * (tr A, tr B, tr AB); the gn/dn/gm/dm pairs are placeholders for the
 * c/d trace polynomials of the four powers appearing in the group
 * relation.  Terms are kept in a map sorted descending, so begin() is
 * the leading term.
 */

#include "sl2cv/cyclo.hpp"
#include "sl2cv/upoly.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sl2cv {

enum Var : int {
    VX = 0, VY, VZ,
    VGN1, VDN1, VGM1, VDM1,
    VGN2, VDN2, VGM2, VDM2,
};

constexpr int kNumVars = 11;

inline const char* var_name(int v) {
    static const char* names[kNumVars] = {"x",   "y",   "z",   "gn1", "dn1", "gm1",
                                          "dm1", "gn2", "dn2", "gm2", "dm2"};
    if (v < 0 || v >= kNumVars) throw std::out_of_range("var_name");
    return names[v];
}

using Monomial = std::array<std::uint8_t, kNumVars>;

inline int total_degree(const Monomial& m) {
    int d = 0;
    for (auto e : m) d += e;
    return d;
}

// true if a > b in graded reverse lexicographic order
inline bool grevlex_greater(const Monomial& a, const Monomial& b) {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    for (int i = kNumVars - 1; i >= 0; --i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grevlex_greater(a, b);
    }
};

inline Monomial mono_one() {
    Monomial m{};
    return m;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kNumVars; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (int i = 0; i < kNumVars; ++i) {
        const int s = a[i] + b[i];
        if (s > 255) throw std::overflow_error("Monomial: exponent overflow");
        m[i] = static_cast<std::uint8_t>(s);
    }
    return m;
}

// b / a, requires mono_divides(a, b)
inline Monomial mono_div(const Monomial& b, const Monomial& a) {
    Monomial m;
    for (int i = 0; i < kNumVars; ++i) m[i] = static_cast<std::uint8_t>(b[i] - a[i]);
    return m;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (int i = 0; i < kNumVars; ++i) m[i] = std::max(a[i], b[i]);
    return m;
}

class MPoly {
public:
    using TermMap = std::map<Monomial, mpq_class, GrevlexGreater>;

    MPoly() = default;

    static MPoly zero() { return MPoly(); }
    static MPoly one() { return constant(mpq_class(1)); }

    static MPoly constant(const mpq_class& q) {
        MPoly p;
        if (q != 0) p.terms_[mono_one()] = q;
        return p;
    }

    static MPoly var(Var v, int exp = 1) {
        if (exp < 0 || exp > 255) throw std::invalid_argument("MPoly::var: bad exponent");
        MPoly p;
        if (exp == 0) return one();
        Monomial m{};
        m[static_cast<int>(v)] = static_cast<std::uint8_t>(exp);
        p.terms_[m] = 1;
        return p;
    }

    // Univariate polynomial placed into variable v.
    static MPoly from_intpoly(const IntPoly& q, Var v) {
        MPoly p;
        for (long i = 0; i <= q.degree(); ++i) {
            const mpz_class c = q.coeff(static_cast<std::size_t>(i));
            if (c == 0) continue;
            if (i > 255) throw std::overflow_error("MPoly::from_intpoly: degree too high");
            Monomial m{};
            m[static_cast<int>(v)] = static_cast<std::uint8_t>(i);
            p.terms_[m] = mpq_class(c);
        }
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == mono_one());
    }

    mpq_class constant_value() const {
        if (terms_.empty()) return 0;
        if (!is_constant()) throw std::domain_error("MPoly: not constant");
        return terms_.begin()->second;
    }

    const Monomial& leading_monomial() const {
        if (terms_.empty()) throw std::domain_error("MPoly: leading term of zero");
        return terms_.begin()->first;
    }

    const mpq_class& leading_coeff() const {
        if (terms_.empty()) throw std::domain_error("MPoly: leading term of zero");
        return terms_.begin()->second;
    }

    int degree() const {
        if (terms_.empty()) return -1;
        return total_degree(terms_.begin()->first);
    }

    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return terms_ != o.terms_; }

    MPoly operator-() const {
        MPoly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    MPoly operator+(const MPoly& o) const {
        MPoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }

    MPoly operator-(const MPoly& o) const {
        MPoly r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }

    MPoly operator*(const MPoly& o) const {
        MPoly r;
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : o.terms_) r.add_term(mono_mul(m1, m2), c1 * c2);
        return r;
    }

    MPoly operator*(const mpq_class& s) const {
        if (s == 0) return zero();
        MPoly r = *this;
        for (auto& [m, c] : r.terms_) c *= s;
        return r;
    }

    MPoly pow(int e) const {
        if (e < 0) throw std::invalid_argument("MPoly::pow: negative exponent");
        MPoly acc = one();
        for (int i = 0; i < e; ++i) acc = acc * *this;
        return acc;
    }

    void add_term(const Monomial& m, const mpq_class& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // Simultaneous substitution of polynomials for a subset of variables.
    // Entries left empty keep their variable.
    MPoly substitute(const std::array<const MPoly*, kNumVars>& sub) const {
        MPoly out;
        std::map<std::pair<int, int>, MPoly> pow_cache;
        auto power = [&](int v, int e) -> const MPoly& {
            auto key = std::make_pair(v, e);
            auto it = pow_cache.find(key);
            if (it == pow_cache.end())
                it = pow_cache.emplace(key, sub[v]->pow(e)).first;
            return it->second;
        };
        for (const auto& [m, c] : terms_) {
            MPoly term = constant(c);
            Monomial rest{};
            for (int v = 0; v < kNumVars; ++v) {
                if (!m[v]) continue;
                if (sub[v])
                    term = term * power(v, m[v]);
                else
                    rest[v] = m[v];
            }
            MPoly shell;
            shell.terms_[rest] = 1;
            out = out + term * shell;
        }
        return out;
    }

    // Evaluation at cyclotomic trace coordinates; requires that only
    // x, y, z occur.
    CycloElt eval_xyz(const CycloElt& x, const CycloElt& y, const CycloElt& z) const {
        CycloElt acc;
        std::map<std::pair<int, int>, CycloElt> pow_cache;
        auto power = [&](const CycloElt& b, int v, int e) -> const CycloElt& {
            auto key = std::make_pair(v, e);
            auto it = pow_cache.find(key);
            if (it == pow_cache.end()) {
                CycloElt p = CycloElt::one();
                for (int i = 0; i < e; ++i) p = p * b;
                it = pow_cache.emplace(key, std::move(p)).first;
            }
            return it->second;
        };
        for (const auto& [m, c] : terms_) {
            for (int v = 3; v < kNumVars; ++v)
                if (m[v]) throw std::domain_error("MPoly::eval_xyz: non-trace variable present");
            CycloElt t = CycloElt(mpq_class(c));
            if (m[VX]) t = t * power(x, VX, m[VX]);
            if (m[VY]) t = t * power(y, VY, m[VY]);
            if (m[VZ]) t = t * power(z, VZ, m[VZ]);
            acc = acc + t;
        }
        return acc;
    }

    // Canonical rendering, grevlex-descending terms.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            mpq_class mag = c < 0 ? mpq_class(-c) : c;
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            const bool is_const = (m == mono_one());
            if (mag != 1 || is_const) {
                os << q_to_string(mag);
                if (!is_const) os << "*";
            }
            bool started = false;
            for (int v = 0; v < kNumVars; ++v) {
                if (!m[v]) continue;
                if (started) os << "*";
                os << var_name(v);
                if (m[v] > 1) os << "^" << static_cast<int>(m[v]);
                started = true;
            }
        }
        return os.str();
    }

    static MPoly parse(const std::string& text);

private:
    TermMap terms_;
};

inline MPoly operator*(const mpq_class& s, const MPoly& p) { return p * s; }

namespace detail {

class MPolyParser {
public:
    explicit MPolyParser(const std::string& s) : s_(s) {}

    MPoly run() {
        MPoly r = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return r;
    }

private:
    MPoly expr() {
        skip_ws();
        bool neg = false;
        while (peek() == '+' || peek() == '-') {
            if (get() == '-') neg = !neg;
            skip_ws();
        }
        MPoly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            const char c = peek();
            if (c != '+' && c != '-') break;
            get();
            skip_ws();
            bool n2 = (c == '-');
            while (peek() == '+' || peek() == '-') {
                if (get() == '-') n2 = !n2;
                skip_ws();
            }
            MPoly t = term();
            acc = n2 ? acc - t : acc + t;
        }
        return acc;
    }

    MPoly term() {
        MPoly acc = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                get();
                skip_ws();
                acc = acc * factor();
            } else {
                break;
            }
        }
        return acc;
    }

    MPoly factor() {
        skip_ws();
        const char c = peek();
        MPoly base;
        if (c == '(') {
            get();
            base = expr();
            skip_ws();
            if (get() != ')') fail("expected )");
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            base = MPoly::constant(rational());
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            base = MPoly::var(variable());
        } else {
            fail("unexpected character");
        }
        skip_ws();
        if (peek() == '^') {
            get();
            skip_ws();
            base = base.pow(static_cast<int>(integer()));
        }
        return base;
    }

    mpq_class rational() {
        const std::size_t b = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string num = s_.substr(b, pos_ - b);
        skip_ws();
        if (peek() == '/') {
            // lookahead: denominator must be a digit for this to be a fraction
            std::size_t save = pos_;
            get();
            skip_ws();
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                const std::size_t d = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    ++pos_;
                num += "/" + s_.substr(d, pos_ - d);
            } else {
                pos_ = save;
            }
        }
        mpq_class v(num);
        v.canonicalize();
        return v;
    }

    long integer() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
        const std::size_t b = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return std::stol(s_.substr(b, pos_ - b));
    }

    Var variable() {
        const std::size_t b = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        const std::string name = s_.substr(b, pos_ - b);
        for (int v = 0; v < kNumVars; ++v)
            if (name == var_name(v)) return static_cast<Var>(v);
        fail("unknown variable '" + name + "'");
        return VX;  // unreachable
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("MPoly::parse: " + what + " at position " +
                                    std::to_string(pos_) + " in \"" + s_ + "\"");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline MPoly MPoly::parse(const std::string& text) { return detail::MPolyParser(text).run(); }

}  // namespace sl2cv

#endif  // SL2CV_MPOLY_HPP_
