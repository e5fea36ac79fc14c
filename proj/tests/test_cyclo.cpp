#include "sl2cv/cheb.hpp"
#include "sl2cv/cyclo.hpp"
#include "sl2cv/upoly.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace sl2cv;

static CycloElt cpow(const CycloElt& a, int k) {
    CycloElt r = CycloElt::one();
    for (int i = 0; i < k; ++i) r = r * a;
    return r;
}

TEST_CASE("cyclotomic polynomials", "[cyclo]") {
    CHECK(cyclotomic_poly(1) == IntPoly::parse("-1,1"));
    CHECK(cyclotomic_poly(2) == IntPoly::parse("1,1"));
    CHECK(cyclotomic_poly(3) == IntPoly::parse("1,1,1"));
    CHECK(cyclotomic_poly(4) == IntPoly::parse("1,0,1"));
    CHECK(cyclotomic_poly(6) == IntPoly::parse("1,-1,1"));
    CHECK(cyclotomic_poly(8) == IntPoly::parse("1,0,0,0,1"));
    CHECK(cyclotomic_poly(9) == IntPoly::parse("1,0,0,1,0,0,1"));
    CHECK(cyclotomic_poly(12) == IntPoly::parse("1,0,-1,0,1"));
    for (unsigned long n : {5ul, 7ul, 16ul, 15ul, 24ul, 81ul, 100ul}) {
        CAPTURE(n);
        CHECK(static_cast<unsigned long>(cyclotomic_poly(n).degree()) == euler_phi(n));
        CHECK(cyclotomic_poly(n).leading() == 1);
    }
    // first index with a coefficient outside {-1,0,1}
    CHECK(cyclotomic_poly(105).coeff(7) == -2);
}

TEST_CASE("number theory helpers", "[cyclo]") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(162) == 54);
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK(p_valuation(mpz_class(48), mpz_class(2)) == 4);
    const auto pf = prime_factors(mpz_class(360));
    REQUIRE(pf.size() == 3);
    CHECK(pf[0] == 2);
    CHECK(pf[1] == 3);
    CHECK(pf[2] == 5);
}

TEST_CASE("root of unity canonical form", "[cyclo]") {
    const RootOfUnity a(12, 8);
    CHECK(a.order() == 3);
    CHECK(a.exponent() == 2);
    const RootOfUnity b(7, -3);
    CHECK(b.order() == 7);
    CHECK(b.exponent() == 4);
    CHECK(RootOfUnity(5, 0).is_one());
    CHECK(RootOfUnity(6, 3).is_minus_one());
    CHECK(RootOfUnity(8, 3).pow(2) == RootOfUnity(4, 3));
    CHECK(RootOfUnity(8, 3).pow(-1) == RootOfUnity(8, 5));
    CHECK(RootOfUnity(8, 3).inverse().pow(3) == RootOfUnity(8, 7));
    CHECK(RootOfUnity(8, 3).pow(3) == RootOfUnity(8, 1));
}

TEST_CASE("roots of unity as field elements", "[cyclo]") {
    const CycloElt z6 = CycloElt::root(6, 1);
    CHECK(z6.conductor() == 3);  // Q(zeta_6) = Q(zeta_3)
    CHECK(cpow(z6, 6) == CycloElt::one());
    CHECK(cpow(z6, 3) == -CycloElt::one());
    CHECK(cpow(z6, 2) == CycloElt::root(3, 1));
    CHECK(CycloElt::trace_of_root(RootOfUnity(6, 1)) == CycloElt::one());

    const CycloElt i = CycloElt::root(4, 1);
    CHECK(i * i == -CycloElt::one());
    CHECK((CycloElt::one() + i) * (CycloElt::one() - i) == CycloElt(mpq_class(2)));

    // zeta_15^5 = zeta_3 via plain multiplication
    const CycloElt z15 = CycloElt::root(15, 1);
    CHECK(cpow(z15, 5) == CycloElt::root(3, 1));
}

TEST_CASE("quadratic irrationals from traces", "[cyclo]") {
    const CycloElt r2 = CycloElt::trace_of_root(RootOfUnity(8, 1));
    CHECK(r2 * r2 == CycloElt(mpq_class(2)));
    CHECK(r2.conductor() == 8);  // real subfield: no smaller cyclotomic conductor
    CHECK(r2.reduce().conductor() == 8);

    const CycloElt r3 = CycloElt::trace_of_root(RootOfUnity(12, 1));
    CHECK(r3 * r3 == CycloElt(mpq_class(3)));

    const CycloElt golden = CycloElt::trace_of_root(RootOfUnity(5, 1));
    // x^2 + x - 1 = 0 for zeta_5 + zeta_5^-1
    CHECK(golden * golden + golden - CycloElt::one() == CycloElt::zero());
    CHECK(golden.min_poly() == QPoly(IntPoly::parse("-1,1,1")));
}

TEST_CASE("reduce finds minimal conductors", "[cyclo]") {
    CHECK((CycloElt::root(8, 1) * CycloElt::root(8, 1)).reduce().conductor() == 4);
    CHECK(cpow(CycloElt::root(12, 1), 3).reduce().conductor() == 4);
    CHECK((CycloElt::root(7, 1) * CycloElt::root(7, 6)).reduce().conductor() == 1);
    const CycloElt q = CycloElt::root(5, 2) * mpq_class(0) + CycloElt(mpq_class(7, 3));
    CHECK(q.reduce().conductor() == 1);
    CHECK(q.reduce().rational_value() == mpq_class(7, 3));
}

TEST_CASE("field arithmetic round trips", "[cyclo]") {
    const CycloElt a = CycloElt::root(3, 1) + CycloElt::root(5, 2) * mpq_class(3, 7);
    const CycloElt b = CycloElt::root(15, 11) - CycloElt(mpq_class(2));
    CHECK(!a.is_zero());
    CHECK((a * b) / b == a);
    CHECK(a * a.inverse() == CycloElt::one());
    CHECK(a - a == CycloElt::zero());
    CHECK_THROWS_AS(CycloElt::zero().inverse(), std::domain_error);
}

TEST_CASE("galois action", "[cyclo]") {
    const CycloElt z8 = CycloElt::root(8, 1);
    CHECK(z8.galois(3) == CycloElt::root(8, 3));
    CHECK(z8.galois(5) == CycloElt::root(8, 5));
    CHECK(CycloElt::root(4, 1).conj() == CycloElt::root(4, 3));
    const CycloElt r2 = CycloElt::trace_of_root(RootOfUnity(8, 1));
    CHECK(r2.galois(3) == -r2);
    CHECK(r2.galois(7) == r2);
    CHECK_THROWS_AS(z8.galois(2), std::invalid_argument);
}

TEST_CASE("minimal polynomials", "[cyclo]") {
    CHECK(CycloElt(mpq_class(5)).min_poly() == QPoly(IntPoly::parse("-5,1")));
    CHECK(CycloElt::root(5, 1).min_poly() == QPoly(cyclotomic_poly(5)));
    CHECK(CycloElt::root(4, 1).min_poly() == QPoly(IntPoly::parse("1,0,1")));
    const CycloElt r2 = CycloElt::trace_of_root(RootOfUnity(8, 1));
    CHECK(r2.min_poly() == QPoly(IntPoly::parse("-2,0,1")));
    CHECK((r2 * mpq_class(1, 2)).min_poly() ==
          QPoly(std::vector<mpq_class>{mpq_class(-1, 2), 0, 1}));
    CHECK(CycloElt::zero().min_poly() == QPoly(IntPoly::parse("0,1")));
}

TEST_CASE("norms", "[cyclo]") {
    CHECK(CycloElt(mpq_class(5)).norm_to_Q(12) == 625);  // degree-4 ambient field
    CHECK(CycloElt(mpq_class(2)).norm_to_Q(5) == 16);
    CHECK(CycloElt::root(5, 1).norm_to_Q() == 1);
    CHECK((CycloElt::one() - CycloElt::root(5, 1)).norm_to_Q() == 5);
    CHECK((CycloElt::one() - CycloElt::root(9, 1)).norm_to_Q() == 3);
    const CycloElt r2 = CycloElt::trace_of_root(RootOfUnity(8, 1));
    CHECK(r2.norm_to_Q() == 4);
    CHECK(r2.norm_to_Q(8) == 4);
    // ambient 2*m normalizes to m
    CHECK(CycloElt::root(9, 1).norm_to_Q(18) == 1);
    CHECK_THROWS_AS(CycloElt::root(4, 1).norm_to_Q(6), std::invalid_argument);
}

TEST_CASE("algebraic integer detection", "[cyclo]") {
    CHECK(CycloElt(mpq_class(7)).is_algebraic_integer());
    CHECK(CycloElt::root(8, 1).is_algebraic_integer());
    CHECK(CycloElt::trace_of_root(RootOfUnity(8, 1)).is_algebraic_integer());
    CHECK_FALSE(CycloElt(mpq_class(1, 2)).is_algebraic_integer());
    CHECK_FALSE((CycloElt::trace_of_root(RootOfUnity(8, 1)) * mpq_class(1, 2))
                    .is_algebraic_integer());
}

TEST_CASE("newton polygon valuations", "[cyclo]") {
    // 1/sqrt(2): minimal polynomial 2X^2 - 1
    const CycloElt inv_r2 =
        CycloElt::trace_of_root(RootOfUnity(8, 1)).inverse();
    const auto rep2 = inv_r2.valuations_above(mpz_class(2));
    REQUIRE(rep2.slopes.size() == 2);
    CHECK(rep2.slopes[0] == mpq_class(-1, 2));
    CHECK(rep2.slopes[1] == mpq_class(-1, 2));
    CHECK_FALSE(rep2.is_integral_somewhere);
    CHECK_FALSE(rep2.is_integral_everywhere);

    const auto rep3 = CycloElt(mpq_class(3)).valuations_above(mpz_class(3));
    REQUIRE(rep3.slopes.size() == 1);
    CHECK(rep3.slopes[0] == 1);
    CHECK(rep3.is_integral_everywhere);

    const auto repthird = CycloElt(mpq_class(1, 3)).valuations_above(mpz_class(3));
    CHECK(repthird.slopes == std::vector<mpq_class>{mpq_class(-1)});

    const auto repr2 = CycloElt::trace_of_root(RootOfUnity(8, 1))
                           .valuations_above(mpz_class(2));
    CHECK(repr2.slopes == std::vector<mpq_class>{mpq_class(1, 2), mpq_class(1, 2)});
    CHECK(repr2.is_integral_everywhere);

    // golden-ratio trace is a unit above 5
    const auto rep5 = CycloElt::trace_of_root(RootOfUnity(5, 1)).valuations_above(mpz_class(5));
    CHECK(rep5.slopes == std::vector<mpq_class>{mpq_class(0), mpq_class(0)});

    // 3/sqrt(2): integral above 3, not above 2
    const CycloElt mixed = CycloElt(mpq_class(3)) * inv_r2;
    CHECK(mixed.valuations_above(mpz_class(2)).slopes ==
          std::vector<mpq_class>{mpq_class(-1, 2), mpq_class(-1, 2)});
    CHECK(mixed.valuations_above(mpz_class(3)).slopes ==
          std::vector<mpq_class>{mpq_class(1), mpq_class(1)});
    CHECK(mixed.valuations_above(mpz_class(3)).is_integral_everywhere);
}

TEST_CASE("denominator primes", "[cyclo]") {
    const auto dp = CycloElt(mpq_class(1, 6)).denominator_primes();
    REQUIRE(dp.size() == 2);
    CHECK(dp[0] == 2);
    CHECK(dp[1] == 3);
    const auto dp2 = (CycloElt::trace_of_root(RootOfUnity(8, 1)) * mpq_class(1, 2))
                         .denominator_primes();
    REQUIRE(dp2.size() == 1);
    CHECK(dp2[0] == 2);
    CHECK(CycloElt::root(7, 1).denominator_primes().empty());
}

TEST_CASE("trace evaluation agrees with the polynomial route", "[cyclo]") {
    const RootOfUnity lambdas[] = {RootOfUnity(5, 1), RootOfUnity(8, 3), RootOfUnity(12, 5),
                                   RootOfUnity(7, 2), RootOfUnity(9, 1)};
    for (const auto& lam : lambdas) {
        const CycloElt x = CycloElt::trace_of_root(lam);
        for (long long n : {-7LL, -2LL, -1LL, 0LL, 1LL, 2LL, 3LL, 5LL, 8LL, 13LL}) {
            CAPTURE(lam.to_string(), n);
            const ChebPair p = cheb_pair(n);
            CHECK(cheb_c_at_trace(n, lam) == p.c.eval<CycloElt>(x));
            CHECK(cheb_d_at_trace(n, lam) == p.d.eval<CycloElt>(x));
        }
    }
    CHECK_THROWS_AS(cheb_c_at_trace(3, RootOfUnity(2, 1)), std::invalid_argument);
}

TEST_CASE("roots of c_n vanish exactly", "[cyclo]") {
    for (long long n : {2LL, 3LL, 4LL, 5LL, 6LL, 9LL}) {
        for (const auto& rt : cheb_root_traces(n)) {
            CAPTURE(n, rt.k);
            CHECK(cheb_c_at_trace(n, RootOfUnity(rt.two_n, rt.k)).is_zero());
        }
    }
}

TEST_CASE("stable keys", "[cyclo]") {
    CHECK(CycloElt(mpq_class(1, 2)).to_key() == "1:1/2");
    CHECK(CycloElt::root(8, 1).to_key() == CycloElt::root(16, 2).to_key());
    CHECK(CycloElt::root(8, 1).to_key() != CycloElt::root(8, 3).to_key());
}
