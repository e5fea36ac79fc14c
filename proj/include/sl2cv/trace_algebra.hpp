#ifndef SL2CV_TRACE_ALGEBRA_HPP_
#define SL2CV_TRACE_ALGEBRA_HPP_

/*
 * The rank-4 trace algebra of the free group on a, b over Z[x, y, z],
 * with basis 1, a, b, ab and (x, y, z) = (tr a, tr b, tr ab).
 *
 * Products of basis elements follow from the SL2 identities
 *   A^2 = x A - 1,   AB + BA = x B + y A + (z - xy),
 * e.g. ba = (z - xy) 1 + y a + x b - ab.  Words expand through the
 * power rule g^n = c_n(tr g) g + d_n(tr g).
 *
 * For the one-relator groups < a, b | a^{n1} b^{m1} a^{n2} b^{m2} > the
 * relation a^{n2} b^{m2} = b^{-m1} a^{-n1} is expanded here both
 * concretely (trace polynomials of the actual exponents, giving the
 * ideal in x, y, z) and symbolically (gn/dn/gm/dm placeholder variables,
 * giving the universal relation ideal).
 */

#include "sl2cv/cheb.hpp"
#include "sl2cv/mpoly.hpp"

#include <array>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sl2cv {

// ----- words in the free group on a, b -----

struct Word {
    // letter ('a' or 'b'), nonzero exponent; letters alternate
    std::vector<std::pair<char, long long>> syllables;

    static Word parse(const std::string& text) {
        Word w;
        std::size_t i = 0;
        auto skip_ws = [&] {
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        };
        skip_ws();
        while (i < text.size()) {
            const char letter = text[i];
            if (letter != 'a' && letter != 'b')
                throw std::invalid_argument("Word::parse: expected 'a' or 'b' in \"" + text + "\"");
            ++i;
            long long e = 1;
            skip_ws();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_ws();
                bool neg = false;
                if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = (text[i++] == '-');
                if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                    throw std::invalid_argument("Word::parse: expected exponent in \"" + text + "\"");
                e = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    e = 10 * e + (text[i++] - '0');
                if (neg) e = -e;
            }
            w.syllables.emplace_back(letter, e);
            skip_ws();
        }
        return w.normalized();
    }

    // Merge adjacent equal letters, drop zero exponents.
    Word normalized() const {
        Word w;
        for (const auto& [letter, e] : syllables) {
            if (e == 0) continue;
            if (!w.syllables.empty() && w.syllables.back().first == letter) {
                w.syllables.back().second += e;
                if (w.syllables.back().second == 0) w.syllables.pop_back();
            } else {
                w.syllables.emplace_back(letter, e);
            }
        }
        // merging can create new adjacencies
        for (bool merged = true; merged;) {
            merged = false;
            Word v;
            for (const auto& [letter, e] : w.syllables) {
                if (!v.syllables.empty() && v.syllables.back().first == letter) {
                    v.syllables.back().second += e;
                    if (v.syllables.back().second == 0) v.syllables.pop_back();
                    merged = true;
                } else {
                    v.syllables.emplace_back(letter, e);
                }
            }
            w = std::move(v);
        }
        return w;
    }

    Word inverse() const {
        Word w;
        for (auto it = syllables.rbegin(); it != syllables.rend(); ++it)
            w.syllables.emplace_back(it->first, -it->second);
        return w;
    }

    bool empty() const { return syllables.empty(); }

    std::string to_string() const {
        if (syllables.empty()) return "e";
        std::ostringstream os;
        bool first = true;
        for (const auto& [letter, e] : syllables) {
            if (!first) os << " ";
            first = false;
            os << letter;
            if (e != 1) os << "^" << e;
        }
        return os.str();
    }
};

// ----- trace vectors -----

struct TraceVector {
    MPoly c1, ca, cb, cab;

    bool operator==(const TraceVector& o) const {
        return c1 == o.c1 && ca == o.ca && cb == o.cb && cab == o.cab;
    }
    bool operator!=(const TraceVector& o) const { return !(*this == o); }
};

inline TraceVector h_one() { return {MPoly::one(), {}, {}, {}}; }

namespace detail {

// Products of the basis elements 1, a, b, ab, each expanded back into the
// basis.  Row i, column j is (component of 1, a, b, ab) of e_i * e_j.
inline const std::array<std::array<std::array<MPoly, 4>, 4>, 4>& h_table() {
    static const auto table = [] {
        std::array<std::array<std::array<MPoly, 4>, 4>, 4> t;
        const MPoly one = MPoly::one();
        const MPoly x = MPoly::var(VX), y = MPoly::var(VY), z = MPoly::var(VZ);
        auto set = [&](int i, int j, MPoly v0, MPoly v1, MPoly v2, MPoly v3) {
            t[i][j] = {std::move(v0), std::move(v1), std::move(v2), std::move(v3)};
        };
        for (int j = 0; j < 4; ++j) {
            for (int k = 0; k < 4; ++k) {
                t[0][j][k] = (j == k) ? one : MPoly::zero();
                t[j][0][k] = (j == k) ? one : MPoly::zero();
            }
        }
        set(1, 1, -one, x, {}, {});             // a  * a
        set(1, 2, {}, {}, {}, one);             // a  * b
        set(1, 3, {}, {}, -one, x);             // a  * ab
        set(2, 1, z - x * y, y, x, -one);       // b  * a
        set(2, 2, -one, {}, y, {});             // b  * b
        set(2, 3, -x, one, z, {});              // b  * ab
        set(3, 1, -y, z, one, {});              // ab * a
        set(3, 2, {}, -one, {}, y);             // ab * b
        set(3, 3, -one, {}, {}, z);             // ab * ab
        return t;
    }();
    return table;
}

}  // namespace detail

inline TraceVector h_mult(const TraceVector& u, const TraceVector& v) {
    const auto& T = detail::h_table();
    const MPoly* uc[4] = {&u.c1, &u.ca, &u.cb, &u.cab};
    const MPoly* vc[4] = {&v.c1, &v.ca, &v.cb, &v.cab};
    std::array<MPoly, 4> out;
    for (int i = 0; i < 4; ++i) {
        if (uc[i]->is_zero()) continue;
        for (int j = 0; j < 4; ++j) {
            if (vc[j]->is_zero()) continue;
            const MPoly f = (*uc[i]) * (*vc[j]);
            for (int k = 0; k < 4; ++k) {
                if (T[i][j][k].is_zero()) continue;
                out[k] = out[k] + f * T[i][j][k];
            }
        }
    }
    return {std::move(out[0]), std::move(out[1]), std::move(out[2]), std::move(out[3])};
}

// g^n as a trace vector: c_n(tr g) g + d_n(tr g).
inline TraceVector power_vector(char letter, long long n) {
    const ChebPair p = cheb_pair(n);
    const Var tvar = (letter == 'a') ? VX : VY;
    TraceVector v;
    v.c1 = MPoly::from_intpoly(p.d, tvar);
    const MPoly c = MPoly::from_intpoly(p.c, tvar);
    if (letter == 'a')
        v.ca = c;
    else if (letter == 'b')
        v.cb = c;
    else
        throw std::invalid_argument("power_vector: letter must be 'a' or 'b'");
    return v;
}

inline TraceVector expand_word(const Word& w) {
    TraceVector acc = h_one();
    for (const auto& [letter, e] : w.normalized().syllables)
        acc = h_mult(acc, power_vector(letter, e));
    return acc;
}

// tr(v) = 2 c1 + x ca + y cb + z cab
inline MPoly trace_of(const TraceVector& v) {
    return v.c1 * mpq_class(2) + MPoly::var(VX) * v.ca + MPoly::var(VY) * v.cb +
           MPoly::var(VZ) * v.cab;
}

inline MPoly trace_of_word(const Word& w) { return trace_of(expand_word(w)); }

// x^2 + y^2 + z^2 - xyz - 4; nonzero iff the traces belong to an
// absolutely irreducible representation.
inline MPoly red_poly() {
    return MPoly::parse("x^2 + y^2 + z^2 - x*y*z - 4");
}

// ----- the one-relator presentations -----

struct GroupPresentation {
    long long n1 = 0, m1 = 0, n2 = 0, m2 = 0;

    long long s() const { return n1 - n2; }
    long long t() const { return m1 - m2; }

    Word relation_word() const {
        Word w;
        w.syllables = {{'a', n1}, {'b', m1}, {'a', n2}, {'b', m2}};
        return w.normalized();
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "<a,b | ";
        const std::pair<char, long long> syl[4] = {{'a', n1}, {'b', m1}, {'a', n2}, {'b', m2}};
        for (int i = 0; i < 4; ++i) {
            if (i) os << " ";
            os << syl[i].first;
            if (syl[i].second != 1) os << "^" << syl[i].second;
        }
        os << ">";
        return os.str();
    }
};

// The universal relation ideal in Z[x,y,z][gn1,dn1,gm1,dm1,gn2,dn2,gm2,dm2]:
// coefficient match of a^{n2} b^{m2} = b^{-m1} a^{-n1} plus the determinant
// relations of the four placeholder pairs.
inline std::vector<MPoly> relation_ideal_symbolic() {
    static const char* gens[] = {
        "x*gn1*dm1 + y*dn1*gm1 + z*gn1*gm1 + dn1*dm1 - dn2*dm2",
        "gn1*dm1 + gn2*dm2",
        "dn1*gm1 + dn2*gm2",
        "gn1*gm1 + gn2*gm2",
        "gn1^2 + x*gn1*dn1 + dn1^2 - 1",
        "gn2^2 + x*gn2*dn2 + dn2^2 - 1",
        "gm1^2 + y*gm1*dm1 + dm1^2 - 1",
        "gm2^2 + y*gm2*dm2 + dm2^2 - 1",
    };
    std::vector<MPoly> out;
    out.reserve(8);
    for (const char* g : gens) out.push_back(MPoly::parse(g));
    return out;
}

// Specialization gn_i -> c_{n_i}(x), dn_i -> d_{n_i}(x), gm_i -> c_{m_i}(y),
// dm_i -> d_{m_i}(y).
inline MPoly specialize_placeholders(const MPoly& p, const GroupPresentation& pr) {
    const MPoly cn1 = MPoly::from_intpoly(cheb_pair(pr.n1).c, VX);
    const MPoly dn1 = MPoly::from_intpoly(cheb_pair(pr.n1).d, VX);
    const MPoly cn2 = MPoly::from_intpoly(cheb_pair(pr.n2).c, VX);
    const MPoly dn2 = MPoly::from_intpoly(cheb_pair(pr.n2).d, VX);
    const MPoly cm1 = MPoly::from_intpoly(cheb_pair(pr.m1).c, VY);
    const MPoly dm1 = MPoly::from_intpoly(cheb_pair(pr.m1).d, VY);
    const MPoly cm2 = MPoly::from_intpoly(cheb_pair(pr.m2).c, VY);
    const MPoly dm2 = MPoly::from_intpoly(cheb_pair(pr.m2).d, VY);
    std::array<const MPoly*, kNumVars> sub{};
    sub[VGN1] = &cn1;
    sub[VDN1] = &dn1;
    sub[VGM1] = &cm1;
    sub[VDM1] = &dm1;
    sub[VGN2] = &cn2;
    sub[VDN2] = &dn2;
    sub[VGM2] = &cm2;
    sub[VDM2] = &dm2;
    return p.substitute(sub);
}

// The concrete relation ideal in Z[x,y,z]: the four coefficient-match
// generators with the actual trace polynomials plugged in.  (The four
// determinant generators specialize to zero.)
inline std::vector<MPoly> relation_ideal_concrete(const GroupPresentation& pr) {
    const auto sym = relation_ideal_symbolic();
    std::vector<MPoly> out;
    out.reserve(4);
    for (int i = 0; i < 4; ++i) out.push_back(specialize_placeholders(sym[i], pr));
    return out;
}

}  // namespace sl2cv

#endif  // SL2CV_TRACE_ALGEBRA_HPP_
