#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hoc/dims.hpp"
#include "hoc/surface.hpp"

using namespace hoc;

TEST_CASE("admissibility detects only the adjacent pattern") {
    CHECK(is_admissible({}));
    CHECK(is_admissible({1}));
    CHECK(is_admissible({2, 1}));
    CHECK(is_admissible({1, 3, 2}));
    CHECK_FALSE(is_admissible({1, 2}));
    CHECK_FALSE(is_admissible({3, 1, 2, 4}));
}

TEST_CASE("admissible basis is sorted, deduplicated and counted by the recursion") {
    for (int g = 1; g <= 3; ++g) {
        std::int64_t prev = 1, cur = 2 * g; // N_g(0), N_g(1)
        for (int q = 1; q <= (g == 3 ? 4 : 6); ++q) {
            auto basis = admissible_basis(g, q);
            CHECK(std::int64_t(basis.size()) == cur);
            CHECK(std::is_sorted(basis.begin(), basis.end()));
            CHECK(std::adjacent_find(basis.begin(), basis.end()) == basis.end());
            for (const auto& m : basis) CHECK(is_admissible(m));
            std::int64_t next = 2 * g * cur - prev;
            prev = cur;
            cur = next;
        }
    }
}

TEST_CASE("rewriting fixes admissible elements") {
    GenusContext ctx = make_genus_context(2, 3);
    auto e = TruncatedSeries::generator(2, 3) +
             mul(TruncatedSeries::generator(2, 3), TruncatedSeries::generator(1, 3));
    CHECK(rewrite_normal_form(e, ctx) == e);
}

TEST_CASE("rewriting eliminates the forbidden pattern") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> gen(1, 4);
    GenusContext ctx = make_genus_context(2, 3);
    for (int trial = 0; trial < 10; ++trial) {
        TruncatedSeries e = TruncatedSeries::one(3);
        for (int k = 0; k < 3; ++k)
            e = mul(e, TruncatedSeries::one(3) + TruncatedSeries::generator(gen(rng), 3));
        auto n = rewrite_normal_form(e, ctx);
        for (const auto& [m, c] : n.coefficients()) CHECK(is_admissible(m));
        // rewriting is a normal form: applying it again changes nothing
        CHECK(rewrite_normal_form(n, ctx) == n);
    }
}

TEST_CASE("the relator rewrites to one") {
    for (int g = 1; g <= 2; ++g) {
        GenusContext ctx = make_genus_context(g, 3);
        auto r = expand_word(surface_relator(g), 3, 2 * g);
        CHECK(rewrite_normal_form(r, ctx) == TruncatedSeries::one(3));
    }
}

TEST_CASE("surface product is associative and unital") {
    GenusContext ctx = make_genus_context(2, 3);
    auto a = TruncatedSeries::generator(1, 3);
    auto b = TruncatedSeries::generator(2, 3);
    auto c = TruncatedSeries::one(3) + TruncatedSeries::generator(3, 3);
    CHECK(surface_mul(surface_mul(a, b, ctx), c, ctx) ==
          surface_mul(a, surface_mul(b, c, ctx), ctx));
    CHECK(surface_mul(a, TruncatedSeries::one(3), ctx) == rewrite_normal_form(a, ctx));
}

TEST_CASE("graded dimensions match the tuple count") {
    for (int g = 1; g <= 2; ++g)
        for (int q = 1; q <= 4; ++q)
            CHECK(relator_ideal_graded_dim(g, q) == std::size_t(n_g(g, q)));
}

TEST_CASE("graded dimension fixed values") {
    CHECK(relator_ideal_graded_dim(1, 3) == 4);
    CHECK(relator_ideal_graded_dim(2, 2) == 15);
    CHECK(relator_ideal_graded_dim(2, 3) == 56);
}

TEST_CASE("oversized requests are refused") {
    CHECK_THROWS_AS(relator_ideal_graded_dim(3, 8), resource_error);
}
