#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hoc/dims.hpp"
#include "hoc/fuchsian.hpp"

using namespace hoc;

TEST_CASE("signature validation") {
    CHECK_THROWS_AS(make_signature(-1, 1), input_error);
    CHECK_THROWS_AS(make_signature(1, 0), input_error);
    auto sig = make_signature(1, 2);
    CHECK(sig.rank() == 3);
}

TEST_CASE("parabolic words multiply to the inverse relator") {
    for (auto [g, s] : {std::pair{1, 1}, {1, 2}, {2, 1}, {0, 3}}) {
        auto sig = make_signature(g, s);
        auto ps = sig.parabolic_words();
        CHECK(int(ps.size()) == s);
        Word prod;
        for (int k = 1; k <= g; ++k)
            prod = prod * Word::commutator(Word::generator(2 * k - 1),
                                           Word::generator(2 * k));
        for (const auto& p : ps) prod = prod * p;
        CHECK(prod == Word());
    }
}

TEST_CASE("worked quotients") {
    auto g1s1 = make_signature(1, 1);
    CHECK(h1_dim_n0(g1s1, 2) == 4);
    CHECK(h1_par_dim_n0(g1s1, 2) == 3);
    CHECK(h1_dim_n0(make_signature(0, 3), 2) == 2);
    CHECK(h1_dim_n0(make_signature(1, 2), 1) == 3);
}

TEST_CASE("quotients match the closed formulas") {
    for (auto [g, s] : {std::pair{1, 1}, {1, 2}, {2, 1}, {0, 3}}) {
        auto sig = make_signature(g, s);
        for (int q = 1; q <= 3; ++q) {
            INFO(g, " ", s, " ", q);
            CHECK(std::int64_t(h1_par_dim_n0(sig, q)) == n_g(g, q));
            CHECK(std::int64_t(h1_dim_n0(sig, q)) == dim_h1(g, s, 0, q));
        }
    }
}

TEST_CASE("tower containments are exact") {
    for (auto [g, s] : {std::pair{1, 1}, {0, 3}}) {
        auto model = build_jq(make_signature(g, s), 2);
        CHECK(model.jq_image.contains(model.i_jq_image));
        CHECK(model.jq_image.contains(model.jq_next_image));
    }
}

TEST_CASE("parabolic class ranks") {
    // s - 1 at q = 1 (one relation from the presentation); for q >= 2 the
    // commutator part frees the last class unless g = 0
    for (auto [g, s] : {std::pair{1, 1}, {1, 2}, {2, 1}, {0, 3}}) {
        auto sig = make_signature(g, s);
        for (int q = 1; q <= (g == 2 ? 2 : 3); ++q) {
            INFO(g, " ", s, " ", q);
            std::size_t expect = (q == 1 || g == 0) ? std::size_t(s - 1) : std::size_t(s);
            CHECK(parabolic_class_rank(sig, q) == expect);
        }
    }
}

TEST_CASE("oversized towers are refused") {
    CHECK_THROWS_AS(build_jq(make_signature(2, 1), 12), resource_error);
}
