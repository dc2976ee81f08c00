#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hoc/finite.hpp"

using namespace hoc;

TEST_CASE("builtin groups validate") {
    for (auto* gp : {new FiniteGroup(cyclic_group(2)), new FiniteGroup(cyclic_group(3)),
                     new FiniteGroup(symmetric_3()), new FiniteGroup(alternating_5())}) {
        CHECK_NOTHROW(validate_group(*gp));
        delete gp;
    }
}

TEST_CASE("validate_group rejects broken tables") {
    FiniteGroup gp = cyclic_group(3);
    gp.cayley[1][2] = 1; // no longer a latin square / associative
    CHECK_THROWS_AS(validate_group(gp), input_error);

    FiniteGroup gp2 = cyclic_group(4);
    gp2.sigma = {0, 1}; // {0,1} is not closed in Z/4
    CHECK_THROWS_AS(validate_group(gp2), input_error);
}

TEST_CASE("element_matrices detects inconsistent generator images") {
    FiniteGroup s3 = symmetric_3();
    auto rep = regular_rep(s3, Rat(1));
    // swap two generator matrices so the images no longer satisfy the relations
    REQUIRE(rep.action.size() >= 2);
    std::swap(rep.action[0], rep.action[1]);
    CHECK_THROWS_AS(element_matrices(s3, rep, Rat(1)), input_error);
}

TEST_CASE("regular module over F_2 for Z/2") {
    FiniteGroup z2 = cyclic_group(2);
    auto rep = regular_rep(z2, Fp(1, 2));
    std::vector<std::size_t> dims;
    for (int q = 1; q <= 3; ++q) dims.push_back(hq0(z2, rep, q, Fp(1, 2)).dim());
    CHECK(dims == std::vector<std::size_t>{1, 2, 2});
}

TEST_CASE("characteristic zero towers stabilize at once") {
    for (FiniteGroup gp : {symmetric_3(), cyclic_group(3)}) {
        auto rep = regular_rep(gp, Rat(1));
        auto report = stabilization_report(gp, rep, 4, Rat(1));
        CHECK(report.verdict == TowerVerdict::Stable);
        for (std::size_t d : report.dims) CHECK(d == report.dims[0]);
    }
}

TEST_CASE("two routes to the fixed tower agree") {
    for (FiniteGroup gp : {cyclic_group(2), cyclic_group(3), symmetric_3()}) {
        auto rat = regular_rep(gp, Rat(1));
        for (int q = 1; q <= 3; ++q)
            CHECK(hq0(gp, rat, q, Rat(1)).dim() ==
                  hq0_annihilator(gp, rat, q, Rat(1)).dim());
        for (std::uint32_t p : {2u, 3u}) {
            auto modp = regular_rep(gp, Fp(1, p));
            for (int q = 1; q <= 3; ++q)
                CHECK(hq0(gp, modp, q, Fp(1, p)).dim() ==
                      hq0_annihilator(gp, modp, q, Fp(1, p)).dim());
        }
    }
}

TEST_CASE("modular growth for Z/3 over F_3") {
    FiniteGroup z3 = cyclic_group(3);
    auto rep = regular_rep(z3, Fp(1, 3));
    auto report = stabilization_report(z3, rep, 3, Fp(1, 3));
    CHECK(report.dims == std::vector<std::size_t>{1, 2, 3});
    CHECK(report.verdict == TowerVerdict::Growth);
    CHECK(report.first_growth_q == 2);
}

TEST_CASE("perfectness") {
    CHECK_FALSE(perfect_check(cyclic_group(2)));
    CHECK_FALSE(perfect_check(cyclic_group(5)));
    CHECK_FALSE(perfect_check(symmetric_3()));
    FiniteGroup a5 = alternating_5();
    CHECK(perfect_check(a5));
    // idempotent augmentation ideal: dim I = dim I^2 = 59 over F_2 and F_5
    for (std::uint32_t p : {2u, 5u}) {
        FiniteGroup plain = a5;
        plain.sigma = {0};
        auto tower = ideal_tower(plain, Fp(1, p), 2);
        CHECK(tower[0].dim() == 59);
        CHECK(tower[1].dim() == 59);
    }
}

TEST_CASE("trivial rep and sigma") {
    FiniteGroup z3 = cyclic_group(3);
    auto triv = trivial_rep(z3, Rat(1));
    for (int q = 1; q <= 3; ++q) CHECK(hq0(z3, triv, q, Rat(1)).dim() == 1);
    // with Sigma the whole group, the Sigma-cut kills the regular module's
    // fixed tower down to the invariants only
    FiniteGroup zs = cyclic_group(3);
    zs.sigma = {0, 1, 2};
    auto rep = regular_rep(zs, Rat(1));
    CHECK(hq0(zs, rep, 2, Rat(1)).dim() == 1);
}

TEST_CASE("order bound is enforced") {
    CHECK_THROWS_AS(ideal_tower(cyclic_group(61), Fp(1, 7), 2), resource_error);
    CHECK_THROWS_AS(ideal_tower(cyclic_group(201), Rat(1), 2), resource_error);
}
