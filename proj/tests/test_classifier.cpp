/*
 * Tests for the component classifier: condition C, power-system solving,
 * dimension verdicts, exact point enumeration and the intersection graph.
 * Emptiness and zero-dimensional point sets are checked against the
 * independent matrix-based enumeration oracle.
 */

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "sl2cv/classifier.hpp"
#include "sl2cv/rep_oracle.hpp"

using namespace sl2cv;

namespace {

// Exhaustive solvability of the pair of power conditions by integer
// exponent arithmetic: lambda = zeta_{2L}^j satisfies lambda^{2n} = 1 and
// lambda^n = s exactly when 2L | 2nj and nj = (s == 1 ? 0 : L) mod 2L.
bool solvable_by_search(long long n1, long long n2, int s1, int s2) {
    const long long big = std::lcm(std::abs(n1), std::abs(n2));
    for (long long j = 1; j < 2 * big; ++j) {
        if (j == big) continue;  // lambda = -1 is scalar
        bool ok = true;
        for (const auto& [n, s] : {std::pair{n1, s1}, std::pair{n2, s2}}) {
            const long long r = ((j * n) % (2 * big) + 2 * big) % (2 * big);
            if (r != (s == 1 ? 0 : big)) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

std::tuple<std::string, std::string, std::string> point_key(const CycloElt& x,
                                                            const CycloElt& y,
                                                            const CycloElt& z) {
    return {x.to_key(), y.to_key(), z.to_key()};
}

// All geometric points of a dim-0 piece: walk the orbit members and solve
// z over each conjugate trace pair.
std::vector<std::tuple<std::string, std::string, std::string>> expand_piece(
    const GroupPresentation& p, const ComponentPiece& pc) {
    std::vector<std::tuple<std::string, std::string, std::string>> out;
    const auto orb = detail::pair_orbit(pc.lambda, pc.mu);
    for (const auto& [la, mu] : orb.members) {
        const CycloElt x = CycloElt::trace_of_root(la);
        const CycloElt y = CycloElt::trace_of_root(mu);
        const CycloElt a = detail::cheb_c_val(p.n1, x) * detail::cheb_c_val(p.m1, y);
        const CycloElt r = x * detail::cheb_c_val(p.n1, x) * detail::cheb_d_val(p.m1, y) +
                           y * detail::cheb_d_val(p.n1, x) * detail::cheb_c_val(p.m1, y) +
                           CycloElt(mpq_class(2)) * detail::cheb_d_val(p.n1, x) *
                               detail::cheb_d_val(p.m1, y);
        REQUIRE(!a.is_zero());
        out.push_back(point_key(x, y, -(r / a)));
    }
    return out;
}

long long oracle_bound(const GroupPresentation& p) {
    const auto mx = [](long long a, long long b) { return a > b ? a : b; };
    long long b = 2 * mx(std::abs(p.s()), std::abs(p.t()));
    b = mx(b, 2 * (std::abs(p.n1) + std::abs(p.n2)));
    b = mx(b, 2 * (std::abs(p.m1) + std::abs(p.m2)));
    b = mx(b, 4 * mx(std::abs(p.n1), std::abs(p.m1)));
    return mx(b, 4);
}

}  // namespace

TEST_CASE("condition C on sample systems", "[classifier]") {
    CHECK_FALSE(condition_C(4, 6, 1, 1));   // gcd 2 is not > 2
    CHECK(condition_C(3, 6, -1, 1));
    CHECK(condition_C(2, 2, -1, -1));
    CHECK(condition_C(4, 6, 1, -1));  // 4/2 even, 6/2 odd
    CHECK_FALSE(condition_C(4, 6, -1, 1));
    CHECK(condition_C(6, 9, 1, -1));
    CHECK(condition_C(3, 3, -1, -1));
    CHECK(condition_C(6, 9, -1, 1) == false);  // nu_2(6) > nu_2(9)

    CHECK_THROWS_AS(condition_C(0, 3, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(condition_C(3, 0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(condition_C(3, 3, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(condition_C(3, 3, 1, 2), std::invalid_argument);
}

TEST_CASE("condition C agrees with exhaustive root search", "[classifier]") {
    for (long long n1 = -10; n1 <= 10; ++n1) {
        if (n1 == 0) continue;
        for (long long n2 = -10; n2 <= 10; ++n2) {
            if (n2 == 0) continue;
            for (int s1 : {1, -1}) {
                for (int s2 : {1, -1}) {
                    // condition_C also cross-checks its two routes internally
                    CHECK(condition_C(n1, n2, s1, s2) == solvable_by_search(n1, n2, s1, s2));
                }
            }
        }
    }
}

TEST_CASE("single power conditions", "[classifier]") {
    CHECK(power_condition_solvable(0, 1));
    CHECK_FALSE(power_condition_solvable(0, -1));
    CHECK_FALSE(power_condition_solvable(1, 1));
    CHECK_FALSE(power_condition_solvable(-1, -1));
    CHECK(power_condition_solvable(2, -1));
    CHECK_FALSE(power_condition_solvable(2, 1));
    CHECK_FALSE(power_condition_solvable(-2, 1));
    CHECK(power_condition_solvable(3, 1));
    CHECK(power_condition_solvable(-5, -1));

    SECTION("solution lists match solvability and verify against c and d") {
        for (long long n = -12; n <= 12; ++n) {
            if (n == 0) continue;
            for (int s : {1, -1}) {
                const auto sols = power_condition_solutions(n, s);
                CHECK(sols.empty() == !power_condition_solvable(n, s));
                for (const auto& r : sols) {
                    const CycloElt x = CycloElt::trace_of_root(r);
                    CHECK(cheb_pair(n).c.eval<CycloElt>(x).is_zero());
                    CHECK(cheb_pair(n).d.eval<CycloElt>(x) == CycloElt(mpq_class(s)));
                }
            }
        }
    }

    SECTION("explicit small lists") {
        const auto s4m = power_condition_solutions(4, -1);  // zeta_8, zeta_8^3
        REQUIRE(s4m.size() == 2);
        CHECK(s4m[0].order() == 8);
        CHECK(s4m[1].order() == 8);
        const auto s4p = power_condition_solutions(4, 1);  // zeta_4
        REQUIRE(s4p.size() == 1);
        CHECK(s4p[0].order() == 4);
        const auto s3p = power_condition_solutions(3, 1);  // zeta_3, trace -1
        REQUIRE(s3p.size() == 1);
        CHECK(CycloElt::trace_of_root(s3p[0]) == CycloElt(mpq_class(-1)));
    }
}

TEST_CASE("condition C with zero exponents", "[classifier]") {
    CHECK(condition_C_general(0, 0, 1, 1));
    CHECK_FALSE(condition_C_general(0, 0, -1, 1));
    CHECK(condition_C_general(0, 4, 1, -1));
    CHECK_FALSE(condition_C_general(0, 4, -1, -1));
    CHECK(condition_C_general(0, 4, 1, 1));  // zeta_4 gives c_4 = 0, d_4 = 1
    CHECK_FALSE(condition_C_general(0, 2, 1, 1));
    CHECK(condition_C_general(0, 3, 1, 1));
    CHECK(condition_C_general(5, 0, -1, 1));
    CHECK(condition_C_general(4, 4, 1, 1) == condition_C(4, 4, 1, 1));
}

TEST_CASE("power system solving", "[classifier]") {
    SECTION("x = 0 solves the pair of -I conditions at exponent 2") {
        const auto r = solve_power_system({2, -1}, {2, -1});
        REQUIRE(r.solvable);
        REQUIRE(r.witnesses.size() == 1);
        CHECK(CycloElt::trace_of_root(r.witnesses[0]).is_zero());
    }
    SECTION("exponents 2 and 4 with +I signs have no common solution") {
        const auto r = solve_power_system({2, 1}, {4, 1});
        CHECK_FALSE(r.solvable);
        CHECK(r.witnesses.empty());
    }
    SECTION("x = -1 solves exponents 3 and 6 with +I signs") {
        const auto r = solve_power_system({3, 1}, {6, 1});
        REQUIRE(r.solvable);
        REQUIRE(r.witnesses.size() == 1);
        CHECK(CycloElt::trace_of_root(r.witnesses[0]) == CycloElt(mpq_class(-1)));
    }
    SECTION("negative exponents give the same witnesses") {
        const auto a = solve_power_system({6, -1}, {-9, -1});
        const auto b = solve_power_system({-6, -1}, {9, -1});
        CHECK(a.solvable == b.solvable);
        CHECK(a.witnesses == b.witnesses);
    }
    CHECK_THROWS_AS(solve_power_system({0, 1}, {2, -1}), std::invalid_argument);
}

TEST_CASE("power system witness counts match the closed form", "[classifier]") {
    for (long long n1 = 2; n1 <= 9; ++n1) {
        for (long long n2 = 2; n2 <= 9; ++n2) {
            for (int s1 : {1, -1}) {
                for (int s2 : {1, -1}) {
                    const auto r = solve_power_system({n1, s1}, {n2, s2});
                    const long long g = std::gcd(n1, n2);
                    long long expect = 0;
                    for (long long j = 1; j < g; ++j)
                        if ((j * (n1 / g)) % 2 == (s1 == 1 ? 0 : 1) &&
                            (j * (n2 / g)) % 2 == (s2 == 1 ? 0 : 1))
                            ++expect;
                    CHECK(static_cast<long long>(r.witnesses.size()) == expect);
                    CHECK(r.solvable == condition_C(n1, n2, s1, s2));
                }
            }
        }
    }
}

TEST_CASE("classifier rejects bad input", "[classifier]") {
    const GroupPresentation p{2, 1, -2, -2};
    CHECK_THROWS_AS(classify(p, 0), std::out_of_range);
    CHECK_THROWS_AS(classify(p, 11), std::out_of_range);
    CHECK_THROWS_AS(classify({0, 1, -2, -2}, 1), std::invalid_argument);
    CHECK_THROWS_AS(classify({2, 1, -2, 0}, 9), std::invalid_argument);
}

TEST_CASE("classification of the order-two example group", "[classifier]") {
    const GroupPresentation p{2, 1, -2, -2};

    SECTION("the mid components are all empty") {
        for (int i = 1; i <= 8; ++i) {
            const ComponentReport r = classify(p, i);
            CHECK(r.dim == ComponentDim::empty);
            CHECK(r.pieces.empty());
            CHECK_FALSE(r.gen_irr_nonempty);
        }
    }

    SECTION("component 9 is one Galois orbit of two points") {
        const ComponentReport r = classify(p, 9);
        CHECK(r.dim == ComponentDim::dim0);
        CHECK(r.star);
        REQUIRE(r.orbit_count == 1);
        CHECK(r.point_count == 2);
        const ComponentPiece& pc = r.pieces.at(0);
        CHECK(pc.dim == 0);
        CHECK(pc.lambda.order() == 8);  // ord rho(a) = 8
        CHECK(pc.mu.order() == 3);
        CHECK(pc.y == CycloElt(mpq_class(-1)));
        CHECK(pc.x * pc.x == CycloElt(mpq_class(2)));  // x = +-sqrt(2)
        CHECK(pc.x * pc.z == pc.y);                    // z = -1/sqrt(2) alongside x = sqrt(2)
        CHECK_FALSE(pc.z_integral);
        CHECK(pc.red_nonzero);
        CHECK(r.in_gen_irr);
        CHECK(r.gen_irr_nonempty);
    }

    SECTION("component 10 is empty") {
        const ComponentReport r = classify(p, 10);
        CHECK(r.dim == ComponentDim::empty);
        CHECK(r.pieces.empty());
    }
}

TEST_CASE("classification of the commutator example group", "[classifier]") {
    const GroupPresentation p{2, 3, -2, -3};

    const auto all = classify_all(p);
    CHECK(all[0].dim == ComponentDim::dim2);  // component 1
    CHECK(all[1].dim == ComponentDim::empty);
    CHECK(all[2].dim == ComponentDim::empty);
    CHECK(all[3].dim == ComponentDim::empty);
    CHECK(all[4].dim == ComponentDim::dim2);  // component 5
    CHECK(all[5].dim == ComponentDim::empty);
    CHECK(all[6].dim == ComponentDim::dim2);  // component 7
    CHECK(all[7].dim == ComponentDim::empty);
    CHECK(all[8].dim == ComponentDim::dim1);  // component 9
    CHECK(all[9].dim == ComponentDim::dim1);  // component 10

    SECTION("component 1 pins x to zero with y and z free") {
        const ComponentReport& r = all[0];
        REQUIRE(r.orbit_count == 1);
        const ComponentPiece& pc = r.pieces.at(0);
        CHECK(pc.dim == 2);
        CHECK(pc.x_fixed);
        CHECK_FALSE(pc.y_fixed);
        CHECK_FALSE(pc.z_fixed);
        CHECK(pc.x.is_zero());
    }

    SECTION("components 5 and 7 pin y to +1 and -1") {
        REQUIRE(all[4].orbit_count == 1);
        REQUIRE(all[6].orbit_count == 1);
        CHECK(all[4].pieces.at(0).y == CycloElt(mpq_class(1)));
        CHECK(all[6].pieces.at(0).y == CycloElt(mpq_class(-1)));
        CHECK_FALSE(all[4].pieces.at(0).x_fixed);
        CHECK_FALSE(all[6].pieces.at(0).x_fixed);
    }

    SECTION("components 9 and 10 are unions of z-lines") {
        CHECK(all[8].star);
        CHECK(all[9].star);
        CHECK(all[8].orbit_count == 2);
        CHECK(all[9].orbit_count == 2);
        for (const auto& pc : all[8].pieces) {
            CHECK(pc.dim == 1);
            CHECK(pc.x_fixed);
            CHECK(pc.y_fixed);
            CHECK_FALSE(pc.z_fixed);
            CHECK(pc.x * pc.x == CycloElt(mpq_class(2)));
            CHECK(pc.y * pc.y == CycloElt::one());
        }
        // one orbit with y = 0 and one with y^2 = 3, both over x = 0
        std::multiset<long long> sizes;
        for (const auto& pc : all[9].pieces) {
            CHECK(pc.dim == 1);
            CHECK(pc.x.is_zero());
            sizes.insert(pc.orbit_size);
        }
        CHECK(sizes == std::multiset<long long>{1, 2});
    }

    SECTION("every nonempty component is generically irreducible") {
        for (const auto& r : all)
            if (r.dim != ComponentDim::empty) {
                CHECK(r.in_gen_irr);
                CHECK(r.gen_irr_nonempty);
            }
    }
}

TEST_CASE("classification of the order-three example group", "[classifier]") {
    const GroupPresentation p{6, 1, -3, -2};

    for (int i = 1; i <= 8; ++i) CHECK(classify(p, i).dim == ComponentDim::empty);

    const ComponentReport r9 = classify(p, 9);
    CHECK(r9.dim == ComponentDim::dim0);
    REQUIRE(r9.orbit_count == 1);
    CHECK(r9.point_count == 3);
    CHECK(r9.pieces.at(0).lambda.order() == 18);
    CHECK(r9.pieces.at(0).y == CycloElt(mpq_class(-1)));
    CHECK_FALSE(r9.pieces.at(0).z_integral);

    const ComponentReport r10 = classify(p, 10);
    CHECK(r10.dim == ComponentDim::dim0);
    REQUIRE(r10.orbit_count == 1);
    CHECK(r10.point_count == 3);
    CHECK(r10.pieces.at(0).lambda.order() == 9);
    CHECK(r10.pieces.at(0).y == CycloElt(mpq_class(1)));
    CHECK_FALSE(r10.pieces.at(0).z_integral);
}

TEST_CASE("classifier agrees with the matrix enumeration oracle", "[classifier][oracle]") {
    std::mt19937 rng(402213);
    std::uniform_int_distribution<int> pick(-4, 4);
    const auto draw = [&]() {
        int v = 0;
        while (v == 0) v = pick(rng);
        return static_cast<long long>(v);
    };

    std::vector<GroupPresentation> sample = {{2, 1, -2, -2}, {6, 1, -3, -2}, {2, 3, -2, -3}};
    while (sample.size() < 12) sample.push_back({draw(), draw(), draw(), draw()});

    for (const GroupPresentation& p : sample) {
        INFO("presentation (" << p.n1 << ", " << p.m1 << ", " << p.n2 << ", " << p.m2 << ")");
        const auto reports = classify_all(p);
        const auto points = enumerate_points(p, oracle_bound(p));

        std::array<bool, 11> oracle_nonempty{};
        for (const OraclePoint& q : points)
            for (int i : q.components) oracle_nonempty[static_cast<std::size_t>(i)] = true;

        for (int i = 1; i <= 10; ++i) {
            const ComponentReport& r = reports[static_cast<std::size_t>(i - 1)];
            INFO("component " << i);
            CHECK((r.dim != ComponentDim::empty) ==
                  oracle_nonempty[static_cast<std::size_t>(i)]);

            if (i >= 9 && r.dim == ComponentDim::dim0) {
                std::set<std::tuple<std::string, std::string, std::string>> expect;
                for (const auto& pc : r.pieces)
                    for (const auto& key : expand_piece(p, pc)) expect.insert(key);
                std::set<std::tuple<std::string, std::string, std::string>> got;
                for (const OraclePoint& q : points) {
                    if (!q.z_solved) continue;
                    if (std::find(q.components.begin(), q.components.end(), i) ==
                        q.components.end())
                        continue;
                    got.insert(point_key(q.x, q.y, q.z));
                }
                CHECK(expect == got);
            }
        }
    }
}

TEST_CASE("intersection graphs of the example groups", "[classifier][graph]") {
    SECTION("order-two group: a single node") {
        const IntersectionGraph g = intersection_graph({2, 1, -2, -2});
        CHECK(g.nodes == std::vector<int>{9});
        CHECK(g.edges.empty());
    }

    SECTION("order-three group: two isolated end components") {
        const IntersectionGraph g = intersection_graph({6, 1, -3, -2});
        CHECK(g.nodes == std::vector<int>{9, 10});
        CHECK(g.edges.empty());
    }

    SECTION("commutator group: five nodes with five meetings") {
        const IntersectionGraph g = intersection_graph({2, 3, -2, -3});
        CHECK(g.nodes == std::vector<int>{1, 5, 7, 9, 10});
        const std::vector<std::pair<int, int>> expect = {
            {1, 5}, {1, 7}, {5, 9}, {7, 9}, {1, 10}};
        CHECK(g.edges == expect);
        for (const auto& e : g.edges) CHECK(figure_has_edge(e.first, e.second));
    }
}
