#include <catch2/catch_amalgamated.hpp>

#include "sl2cv/fixtures.hpp"

#include <set>

using namespace sl2cv;

// ===== component tables =====

TEST_CASE("component generator lists are as tabulated", "[fixtures]") {
    for (int i = 1; i <= 10; ++i) {
        INFO("component " << i);
        CHECK(component_ideal(i).generators().size() == 7);
    }
    const auto p1 = component_ideal(1).generators();
    CHECK(p1[0] == MPoly::parse("gn1"));
    CHECK(p1[1] == MPoly::parse("gn2"));
    CHECK(p1[2] == MPoly::parse("dn1 + 1"));
    CHECK(p1[3] == MPoly::parse("dn2 + 1"));
    CHECK(p1[4] == MPoly::parse("gm1 + gm2"));
    CHECK(p1[5] == MPoly::parse("y*gm1 + dm1 - dm2"));
    CHECK(p1[6] == MPoly::parse("gm1^2 + y*gm1*dm1 + dm1^2 - 1"));

    const auto p9 = component_ideal(9).generators();
    CHECK(p9[4] == MPoly::parse("z*gn1*gm1 + x*gn1*dm1 + y*dn1*gm1 + 2*dn1*dm1"));
    const auto p10 = component_ideal(10).generators();
    CHECK(p10[0] == MPoly::parse("gn1 - gn2"));
    CHECK(p10[4] == p9[4]);

    CHECK_THROWS_AS(component_ideal(0), std::out_of_range);
    CHECK_THROWS_AS(component_ideal(11), std::out_of_range);
}

// ===== intersection graph =====

TEST_CASE("intersection graph shape", "[fixtures]") {
    CHECK(figure_edges().size() == 16);
    CHECK(figure_has_edge(1, 5));
    CHECK(figure_has_edge(5, 1));
    CHECK(figure_has_edge(8, 10));
    CHECK_FALSE(figure_has_edge(1, 2));
    CHECK_FALSE(figure_has_edge(9, 10));
    CHECK_FALSE(figure_has_edge(1, 9));

    const auto absent = absent_pairs();
    CHECK(absent.size() == 45 - 16);
    int absent_low = 0;
    for (const auto& [i, j] : absent)
        if (j <= 8) ++absent_low;
    CHECK(absent_low == 20);

    // every edge touches {9,10} or pairs an n-type (1..4) with an m-type (5..8)
    for (const auto& [i, j] : figure_edges()) {
        REQUIRE(i < j);
        if (j <= 8) {
            CHECK(i <= 4);
            CHECK(j >= 5);
        }
    }
}

TEST_CASE("intersection ideals are as tabulated", "[fixtures]") {
    const auto q15 = intersection_ideal(1, 5);
    REQUIRE(q15.has_value());
    REQUIRE(q15->generators().size() == 8);
    CHECK(q15->generators()[0] == MPoly::parse("gn1"));
    CHECK(q15->generators()[7] == MPoly::parse("dm2 + 1"));

    const auto q29 = intersection_ideal(2, 9);
    REQUIRE(q29.has_value());
    REQUIRE(q29->generators().size() == 8);
    CHECK(q29->generators()[6] == MPoly::parse("y*gm1 + 2*dm1"));

    // symmetric lookup
    const auto q92 = intersection_ideal(9, 2);
    REQUIRE(q92.has_value());
    CHECK(q92->generators() == q29->generators());

    CHECK_FALSE(intersection_ideal(9, 10).has_value());
    CHECK_FALSE(intersection_ideal(1, 2).has_value());
    CHECK_THROWS_AS(intersection_ideal(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(intersection_ideal(0, 5), std::out_of_range);
}

// ===== membership smoke tests (full sweep lives in the verification suite) =====

TEST_CASE("universal ideal sits inside sample components", "[fixtures]") {
    const auto I = universal_ideal();
    REQUIRE(I.generators().size() == 8);
    for (int i : {1, 6, 9, 10}) {
        INFO("component " << i);
        const IdealData wp = component_ideal(i);
        for (const MPoly& g : I.generators()) REQUIRE(wp.member(g));
    }
    // red is not a universal relation
    CHECK_FALSE(component_ideal(9).member(red_poly()));
}

TEST_CASE("two-way membership for sample intersection pairs", "[fixtures]") {
    for (const auto& [i, j] : {std::pair{1, 5}, std::pair{2, 9}, std::pair{6, 10}}) {
        INFO("pair (" << i << "," << j << ")");
        const IdealData wpi = component_ideal(i), wpj = component_ideal(j);
        const IdealData sum = wpi.sum(wpj);
        const auto printed = intersection_ideal(i, j);
        REQUIRE(printed.has_value());
        for (const MPoly& g : printed->generators()) REQUIRE(sum.member(g));
        for (const MPoly& g : wpi.generators()) REQUIRE(printed->member(g));
        for (const MPoly& g : wpj.generators()) REQUIRE(printed->member(g));
    }
}

TEST_CASE("sample absent pairs have trivial sum", "[fixtures]") {
    for (const auto& [i, j] : {std::pair{1, 2}, std::pair{5, 6}, std::pair{9, 10},
                               std::pair{1, 9}, std::pair{5, 10}}) {
        INFO("pair (" << i << "," << j << ")");
        CHECK(component_ideal(i).sum(component_ideal(j)).is_trivial());
    }
}

// ===== the universal square relations =====

TEST_CASE("square-difference relations and the explicit combination", "[fixtures]") {
    const MPoly g2 = MPoly::parse("gn1*dm1 + gn2*dm2");
    const MPoly g3 = MPoly::parse("dn1*gm1 + dn2*gm2");
    const MPoly g4 = MPoly::parse("gn1*gm1 + gn2*gm2");
    const MPoly det_m1 = MPoly::parse("gm1^2 + y*gm1*dm1 + dm1^2 - 1");
    const MPoly det_m2 = MPoly::parse("gm2^2 + y*gm2*dm2 + dm2^2 - 1");
    const MPoly det_n1 = MPoly::parse("gn1^2 + x*gn1*dn1 + dn1^2 - 1");
    const MPoly det_n2 = MPoly::parse("gn2^2 + x*gn2*dn2 + dn2^2 - 1");
    const MPoly target_n = MPoly::parse("gn1^2 - gn2^2");
    const MPoly target_m = MPoly::parse("gm1^2 - gm2^2");

    SECTION("printed combination differs from the target by a generator multiple") {
        const MPoly printed = MPoly::parse("gn1*dm1 - gn2*dm2 - y*gn2*dm2") * g2 +
                              MPoly::parse("gn1*gm1 - gn2*gm2 + y*gn1*dm1") * g4 -
                              MPoly::parse("gn1^2") * det_m1 +
                              MPoly::parse("gn2^2") * det_m2;
        const MPoly residual = printed - target_n;
        CHECK(residual == MPoly::parse("y*gn2") * MPoly::parse("gm2 - dm2") * g2);
        CHECK_FALSE(residual.is_zero());
    }
    SECTION("corrected first factor gives exact equality") {
        const MPoly corrected = MPoly::parse("gn1*dm1 - gn2*dm2 - y*gn2*gm2") * g2 +
                                MPoly::parse("gn1*gm1 - gn2*gm2 + y*gn1*dm1") * g4 -
                                MPoly::parse("gn1^2") * det_m1 +
                                MPoly::parse("gn2^2") * det_m2;
        CHECK(corrected == target_n);
    }
    SECTION("the n <-> m, x <-> y mirror") {
        const MPoly corrected = MPoly::parse("gm1*dn1 - gm2*dn2 - x*gm2*gn2") * g3 +
                                MPoly::parse("gm1*gn1 - gm2*gn2 + x*gm1*dn1") * g4 -
                                MPoly::parse("gm1^2") * det_n1 +
                                MPoly::parse("gm2^2") * det_n2;
        CHECK(corrected == target_m);
    }
    SECTION("membership via the lemma's own subideal") {
        const IdealData sub_n({g2, g4, det_m1, det_m2});
        CHECK(sub_n.member(target_n));
        const IdealData sub_m({g3, g4, det_n1, det_n2});
        CHECK(sub_m.member(target_m));
    }
    SECTION("membership in the full universal ideal") {
        const auto I = universal_ideal();
        CHECK(I.member(target_n));
        CHECK(I.member(target_m));
    }
}

// ===== specialization =====

TEST_CASE("specialized components for the (2,1,-2,-2) presentation", "[fixtures]") {
    const GroupPresentation pr{2, 1, -2, -2};

    const auto s9 = component_ideal_specialized(9, pr);
    // gn1 + gn2 |-> x - x = 0 is dropped; determinants drop too
    REQUIRE(s9.size() == 4);
    CHECK(s9[0] == MPoly::parse("x^2 - 2"));
    CHECK(s9[1] == MPoly::parse("1 + y"));
    CHECK(s9[2] == MPoly::parse("1 - y^2"));
    CHECK(s9[3] == MPoly::parse("x*z - y"));

    const auto s10 = component_ideal_specialized(10, pr);
    REQUIRE(s10.size() == 5);
    CHECK(s10[0] == MPoly::parse("2*x"));
    CHECK(s10[1] == MPoly::parse("-x^2"));
    CHECK(s10[2] == MPoly::parse("1 - y"));
    CHECK(s10[3] == MPoly::parse("y^2 - 1"));
    CHECK(s10[4] == MPoly::parse("x*z - y"));
    CHECK(IdealData(s10).is_trivial());
}
