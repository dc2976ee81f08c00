#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hoc/dims.hpp"

using namespace hoc;

TEST_CASE("three routes to N_g agree") {
    for (int g = 0; g <= 3; ++g)
        for (int q = 0; q <= 6; ++q) {
            INFO(g, " ", q);
            std::int64_t r = n_g(g, q);
            CHECK(r == n_g_closed_form(g, q));
            CHECK(r == n_g_enumerate(g, q));
        }
}

TEST_CASE("anchors") {
    for (int g = 1; g <= 4; ++g) {
        CHECK(n_g(g, 1) == 2 * g);
        CHECK(n_g(g, 2) == 4 * g * g - 1);
    }
    CHECK(n_g(0, 0) == 1);
    for (int q = 1; q <= 6; ++q) CHECK(n_g(0, q) == 0);
}

TEST_CASE("quadratic integer arithmetic") {
    QuadraticInteger a{2, 1, 3}, b{1, -1, 3};
    auto p = a * b;
    CHECK(p.a == mpz_class(-1));
    CHECK(p.b == mpz_class(-1));
    auto n = a * a.conj(); // norm 2^2 - 3 = 1
    CHECK(n.a == mpz_class(1));
    CHECK(n.b == mpz_class(0));
    auto cube = quad_pow(a, 3);
    CHECK(cube.a == mpz_class(26));
    CHECK(cube.b == mpz_class(15));
    QuadraticInteger other{1, 1, 8};
    CHECK_THROWS_AS(a + other, input_error);
}

TEST_CASE("bar_n partial sums") {
    for (int g = 0; g <= 3; ++g) {
        std::int64_t acc = 1;
        for (int q = 1; q <= 5; ++q) {
            acc += n_g(g, q);
            CHECK(bar_n(g, q) == acc);
        }
    }
    CHECK(bar_n(2, 0) == 1);
}

TEST_CASE("first cohomology dimensions at n = 0") {
    CHECK(dim_h1(1, 1, 0, 1) == 2);
    CHECK(dim_h1(1, 1, 0, 2) == 4);
    CHECK(dim_h1(1, 2, 0, 1) == 3);
    CHECK(dim_h1(2, 1, 0, 1) == 4);
    CHECK(dim_h1(0, 3, 0, 2) == 2);
    // dim H^1 = bar N(q-1)(2g+s-2) + 1 at n = 0
    for (int g = 0; g <= 2; ++g)
        for (int s = 1; s <= 3; ++s)
            for (int q = 1; q <= 4; ++q) {
                if (g == 0 && s < 3) continue;
                INFO(g, " ", s, " ", q);
                CHECK(dim_h1(g, s, 0, q) == bar_n(g, q - 1) * (2 * g + s - 2) + 1);
            }
}

TEST_CASE("parabolic dimensions at n = 0 equal N_g") {
    for (int g = 0; g <= 2; ++g)
        for (int s = 1; s <= 3; ++s)
            for (int q = 1; q <= 4; ++q) {
                if (g == 0 && s < 3) continue;
                INFO(g, " ", s, " ", q);
                CHECK(dim_h1_par(g, s, 0, q) == n_g(g, q));
            }
}

TEST_CASE("positive weight dimensions") {
    // n >= 2: dim H_q^1 = bar N(q-1)(2g+s-2)(n+1), dim H_{q,par}^1 =
    // bar N(q-1)((2g-2)(n+1)+sn); differences step by N_g(q) blocks
    CHECK(dim_h1(2, 1, 2, 1) == 9);
    CHECK(dim_h1_par(2, 1, 2, 1) == 8);
    for (int q = 1; q <= 3; ++q) {
        CHECK(dim_h1(2, 1, 2, q + 1) - dim_h1(2, 1, 2, q) ==
              n_g(2, q) * dim_h1(2, 1, 2, 1));
        CHECK(dim_h1_par(2, 1, 2, q + 1) - dim_h1_par(2, 1, 2, q) ==
              n_g(2, q) * dim_h1_par(2, 1, 2, 1));
    }
}

TEST_CASE("second ext group in the cocompact trivial case") {
    for (int g = 1; g <= 3; ++g)
        for (int q = 1; q <= 4; ++q) CHECK(dim_ext2_s0(g, 0, q) == n_g(g, q - 1));
    CHECK_THROWS_AS(dim_ext2_s0(2, 1, 2), input_error);
}

TEST_CASE("auxiliary classical dimensions") {
    auto a = dim_aux(2, 1, 2);
    CHECK(a.dim_cusp_classical == (2 * 2 - 2) * (2 + 1) + 2 * 1);
    CHECK_FALSE(a.cusp_n0_convention_warning);
    auto b = dim_aux(2, 1, 0);
    CHECK(b.cusp_n0_convention_warning);
}

TEST_CASE("alternating sums of the exact sequences vanish") {
    for (auto [g, s] : {std::pair{1, 1}, {1, 2}, {2, 1}, {0, 3}, {2, 0}})
        for (int n : {0, 2}) {
            auto report = sequence_consistency(g, s, n, 4);
            CHECK(!report.checks.empty());
            for (const auto& c : report.checks) {
                INFO(g, " ", s, " ", n, " ", c.label);
                CHECK(c.alternating_sum == 0);
                CHECK(c.ok);
            }
            CHECK(report.all_ok());
        }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(n_g(-1, 2), input_error);
    CHECK_THROWS_AS(n_g(1, -1), input_error);
    CHECK_THROWS_AS(dim_h1(1, 1, 1, 1), input_error); // odd weight
}
