#include <catch2/catch_amalgamated.hpp>

#include "sl2cv/trace_algebra.hpp"

#include <array>
#include <random>
#include <vector>

using namespace sl2cv;

// ===== exact-rational matrix oracle =====

namespace {

struct QMat {
    mpq_class a, b, c, d;

    static QMat identity() { return {1, 0, 0, 1}; }

    QMat operator*(const QMat& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    bool operator==(const QMat& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
    mpq_class det() const { return a * d - b * c; }
    mpq_class trace() const { return a + d; }
    QMat inverse_det1() const { return {d, -b, -c, a}; }
    QMat scaled(const mpq_class& s) const { return {a * s, b * s, c * s, d * s}; }
    QMat plus(const QMat& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
};

QMat qmat_pow(QMat m, long long e) {
    if (e < 0) {
        m = m.inverse_det1();
        e = -e;
    }
    QMat acc = QMat::identity();
    while (e > 0) {
        if (e & 1) acc = acc * m;
        m = m * m;
        e >>= 1;
    }
    return acc;
}

QMat random_sl2(std::mt19937& rng) {
    static const mpq_class pool[] = {mpq_class(1),  mpq_class(-1), mpq_class(2),
                                     mpq_class(1, 2), mpq_class(-3, 2), mpq_class(3),
                                     mpq_class(-2, 3)};
    std::uniform_int_distribution<int> pick(0, 6);
    std::uniform_int_distribution<int> side(0, 1);
    std::uniform_int_distribution<int> len(3, 5);
    QMat m = QMat::identity();
    const int k = len(rng);
    for (int i = 0; i < k; ++i) {
        const mpq_class r = pool[pick(rng)];
        const QMat e = side(rng) ? QMat{1, r, 0, 1} : QMat{1, 0, r, 1};
        m = m * e;
    }
    return m;
}

Word random_word(std::mt19937& rng, int max_syllables) {
    std::uniform_int_distribution<int> nsyl(1, max_syllables);
    std::uniform_int_distribution<int> expo(1, 4);
    std::uniform_int_distribution<int> sign(0, 1);
    std::uniform_int_distribution<int> start(0, 1);
    Word w;
    char letter = start(rng) ? 'a' : 'b';
    const int k = nsyl(rng);
    for (int i = 0; i < k; ++i) {
        long long e = expo(rng);
        if (sign(rng)) e = -e;
        w.syllables.emplace_back(letter, e);
        letter = (letter == 'a') ? 'b' : 'a';
    }
    return w;
}

mpq_class eval_xyz_q(const MPoly& p, const mpq_class& x, const mpq_class& y,
                     const mpq_class& z) {
    const MPoly cx = MPoly::constant(x), cy = MPoly::constant(y), cz = MPoly::constant(z);
    std::array<const MPoly*, kNumVars> sub{};
    sub[VX] = &cx;
    sub[VY] = &cy;
    sub[VZ] = &cz;
    const MPoly r = p.substitute(sub);
    REQUIRE(r.is_constant());
    return r.constant_value();
}

QMat word_matrix(const Word& w, const QMat& A, const QMat& B) {
    QMat m = QMat::identity();
    for (const auto& [letter, e] : w.syllables)
        m = m * qmat_pow(letter == 'a' ? A : B, e);
    return m;
}

}  // namespace

// ===== basis multiplication table =====

TEST_CASE("basis products expand as frozen", "[trace]") {
    const TraceVector a{{}, MPoly::one(), {}, {}};
    const TraceVector b{{}, {}, MPoly::one(), {}};
    const TraceVector ab{{}, {}, {}, MPoly::one()};
    const MPoly x = MPoly::var(VX), y = MPoly::var(VY), z = MPoly::var(VZ);

    SECTION("a*a = -1 + x a") {
        const TraceVector p = h_mult(a, a);
        CHECK(p.c1 == -MPoly::one());
        CHECK(p.ca == x);
        CHECK(p.cb.is_zero());
        CHECK(p.cab.is_zero());
    }
    SECTION("a*b = ab") { CHECK(h_mult(a, b) == ab); }
    SECTION("b*a = (z-xy) + y a + x b - ab") {
        const TraceVector p = h_mult(b, a);
        CHECK(p.c1 == z - x * y);
        CHECK(p.ca == y);
        CHECK(p.cb == x);
        CHECK(p.cab == -MPoly::one());
    }
    SECTION("ab*ab = -1 + z ab") {
        const TraceVector p = h_mult(ab, ab);
        CHECK(p.c1 == -MPoly::one());
        CHECK(p.ca.is_zero());
        CHECK(p.cb.is_zero());
        CHECK(p.cab == z);
    }
    SECTION("identity is neutral") {
        CHECK(h_mult(h_one(), b) == b);
        CHECK(h_mult(ab, h_one()) == ab);
    }
}

TEST_CASE("basis multiplication is associative", "[trace]") {
    std::array<TraceVector, 4> e;
    e[0] = h_one();
    e[1] = TraceVector{{}, MPoly::one(), {}, {}};
    e[2] = TraceVector{{}, {}, MPoly::one(), {}};
    e[3] = TraceVector{{}, {}, {}, MPoly::one()};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) {
                const TraceVector lhs = h_mult(h_mult(e[i], e[j]), e[k]);
                const TraceVector rhs = h_mult(e[i], h_mult(e[j], e[k]));
                REQUIRE(lhs == rhs);
            }
}

// ===== words =====

TEST_CASE("word parsing and normalization", "[trace]") {
    const Word w = Word::parse("a^2 b^-1 a^3");
    REQUIRE(w.syllables.size() == 3);
    CHECK(w.syllables[0] == std::make_pair('a', 2LL));
    CHECK(w.syllables[1] == std::make_pair('b', -1LL));
    CHECK(w.syllables[2] == std::make_pair('a', 3LL));
    CHECK(w.to_string() == "a^2 b^-1 a^3");

    CHECK(Word::parse("a^2b^-3").to_string() == "a^2 b^-3");
    CHECK(Word::parse("a^2 a^-2 b").to_string() == "b");
    CHECK(Word::parse("a b^0 a").to_string() == "a^2");
    CHECK(Word::parse("").empty());
    CHECK(Word::parse("a b").inverse().to_string() == "b^-1 a^-1");
    CHECK_THROWS_AS(Word::parse("a c"), std::invalid_argument);
    CHECK_THROWS_AS(Word::parse("a^"), std::invalid_argument);
}

TEST_CASE("power vectors match trace polynomials", "[trace]") {
    const TraceVector v = expand_word(Word::parse("a^-3"));
    CHECK(v.c1 == MPoly::parse("x^3 - 2*x"));
    CHECK(v.ca == MPoly::parse("1 - x^2"));
    CHECK(v.cb.is_zero());
    CHECK(v.cab.is_zero());

    const TraceVector u = expand_word(Word::parse("b^4"));
    CHECK(u.c1 == MPoly::parse("1 - y^2"));
    CHECK(u.cb == MPoly::parse("y^3 - 2*y"));
}

TEST_CASE("frozen traces of short words", "[trace]") {
    CHECK(trace_of_word(Word::parse("")) == MPoly::constant(2));
    CHECK(trace_of_word(Word::parse("a")) == MPoly::var(VX));
    CHECK(trace_of_word(Word::parse("b")) == MPoly::var(VY));
    CHECK(trace_of_word(Word::parse("a b")) == MPoly::var(VZ));
    // cyclic invariance
    CHECK(trace_of_word(Word::parse("b a")) == MPoly::var(VZ));
    // tr(ab) + tr(ab^-1) = xy
    CHECK(trace_of_word(Word::parse("a b^-1")) == MPoly::parse("x*y - z"));
    // commutator trace
    CHECK(trace_of_word(Word::parse("a b a^-1 b^-1")) == red_poly() + MPoly::constant(2));
}

TEST_CASE("trace is invariant under inversion of the word", "[trace]") {
    std::mt19937 rng(20260816);
    for (int i = 0; i < 40; ++i) {
        const Word w = random_word(rng, 5);
        REQUIRE(trace_of_word(w) == trace_of_word(w.inverse()));
    }
}

// ===== matrix oracle =====

TEST_CASE("word expansion matches exact matrix arithmetic", "[trace]") {
    std::mt19937 rng(424242);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const QMat A = random_sl2(rng);
        const QMat B = random_sl2(rng);
        REQUIRE(A.det() == 1);
        REQUIRE(B.det() == 1);
        const mpq_class x = A.trace(), y = B.trace(), z = (A * B).trace();

        const Word w = random_word(rng, 8);
        const TraceVector v = expand_word(w);
        const QMat direct = word_matrix(w, A, B);

        // full vector identity: M_w = c1 I + ca A + cb B + cab AB
        const QMat recon = QMat::identity()
                               .scaled(eval_xyz_q(v.c1, x, y, z))
                               .plus(A.scaled(eval_xyz_q(v.ca, x, y, z)))
                               .plus(B.scaled(eval_xyz_q(v.cb, x, y, z)))
                               .plus((A * B).scaled(eval_xyz_q(v.cab, x, y, z)));
        REQUIRE(recon == direct);
        REQUIRE(eval_xyz_q(trace_of(v), x, y, z) == direct.trace());
        ++checked;
    }
    REQUIRE(checked == 60);
}

// ===== relation ideals =====

TEST_CASE("symbolic relation ideal matches the algebra expansion", "[trace]") {
    const auto sym = relation_ideal_symbolic();
    REQUIRE(sym.size() == 8);

    const MPoly x = MPoly::var(VX), y = MPoly::var(VY);
    const MPoly gn1 = MPoly::var(VGN1), dn1 = MPoly::var(VDN1);
    const MPoly gm1 = MPoly::var(VGM1), dm1 = MPoly::var(VDM1);
    const MPoly gn2 = MPoly::var(VGN2), dn2 = MPoly::var(VDN2);
    const MPoly gm2 = MPoly::var(VGM2), dm2 = MPoly::var(VDM2);

    // a^{n2}, b^{m2} with placeholder coefficients
    const TraceVector an2{dn2, gn2, {}, {}};
    const TraceVector bm2{dm2, {}, gm2, {}};
    // b^{-m1}, a^{-n1}: g^{-1} of g = gm b + dm is -gm b + (y gm + dm)
    const TraceVector bm1_inv{y * gm1 + dm1, {}, -gm1, {}};
    const TraceVector an1_inv{x * gn1 + dn1, -gn1, {}, {}};

    const TraceVector l = h_mult(an2, bm2);
    const TraceVector r = h_mult(bm1_inv, an1_inv);

    CHECK(l.c1 - r.c1 == -sym[0]);
    CHECK(l.ca - r.ca == sym[1]);
    CHECK(l.cb - r.cb == sym[2]);
    CHECK(l.cab - r.cab == sym[3]);
}

TEST_CASE("concrete relation ideal agrees with direct word expansion", "[trace]") {
    const GroupPresentation cases[] = {
        {2, 3, -1, 4}, {3, 1, -2, -2}, {4, 2, 4, 2}, {2, 1, -2, -2}, {5, -3, 2, 1}};
    for (const auto& pr : cases) {
        INFO(pr.to_string());
        const auto gens = relation_ideal_concrete(pr);
        REQUIRE(gens.size() == 4);

        const TraceVector l = h_mult(power_vector('a', pr.n2), power_vector('b', pr.m2));
        const TraceVector r = h_mult(power_vector('b', -pr.m1), power_vector('a', -pr.n1));
        CHECK(gens[0] == r.c1 - l.c1);
        CHECK(gens[1] == l.ca - r.ca);
        CHECK(gens[2] == l.cb - r.cb);
        CHECK(gens[3] == l.cab - r.cab);

        // determinant generators vanish under specialization
        const auto sym = relation_ideal_symbolic();
        for (int i = 4; i < 8; ++i)
            CHECK(specialize_placeholders(sym[i], pr).is_zero());
    }
}

TEST_CASE("relation ideal vanishes on relation-satisfying pairs", "[trace]") {
    SECTION("freely trivial relation word vanishes identically") {
        const GroupPresentation pr{2, 0, -2, 0};
        REQUIRE(pr.relation_word().empty());
        for (const auto& g : relation_ideal_concrete(pr)) CHECK(g.is_zero());
    }
    SECTION("A^2 central makes a^2 b^3 a^-2 b^-3 hold for every B") {
        const GroupPresentation pr{2, 3, -2, -3};
        const auto gens = relation_ideal_concrete(pr);
        const QMat A{0, 1, -1, 0};  // A^2 = -I
        std::mt19937 rng(7);
        int irreducible_pairs = 0;
        for (int trial = 0; trial < 20; ++trial) {
            const QMat B = random_sl2(rng);
            const mpq_class x = A.trace(), y = B.trace(), z = (A * B).trace();
            // coefficient matching needs 1, A, B, AB independent
            if (eval_xyz_q(red_poly(), x, y, z) == 0) continue;
            ++irreducible_pairs;
            REQUIRE(word_matrix(pr.relation_word(), A, B) == QMat::identity());
            for (const auto& g : gens) REQUIRE(eval_xyz_q(g, x, y, z) == 0);
        }
        REQUIRE(irreducible_pairs >= 15);
    }
    SECTION("generic pairs do not satisfy the commutator relation") {
        const GroupPresentation pr{2, 3, -2, -3};
        const auto gens = relation_ideal_concrete(pr);
        std::mt19937 rng(11);
        const QMat A = random_sl2(rng), B = random_sl2(rng);
        const mpq_class x = A.trace(), y = B.trace(), z = (A * B).trace();
        bool all_zero = true;
        for (const auto& g : gens)
            if (eval_xyz_q(g, x, y, z) != 0) all_zero = false;
        CHECK_FALSE(all_zero);
    }
}

TEST_CASE("presentation helpers", "[trace]") {
    const GroupPresentation pr{7, 1, -2, -2};
    CHECK(pr.s() == 9);
    CHECK(pr.t() == 3);
    CHECK(pr.relation_word().to_string() == "a^7 b a^-2 b^-2");
    CHECK(pr.to_string() == "<a,b | a^7 b a^-2 b^-2>");
}
