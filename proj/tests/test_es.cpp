#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "hoc/es/group_fixture.hpp"
#include "hoc/es/phi.hpp"
#include "hoc/es/second_order.hpp"
#include "hoc/es/verify.hpp"

using namespace hoc;
using cplx = std::complex<double>;

TEST_CASE("quadrature weights and polynomial exactness") {
    const auto& gl = gauss_legendre_32();
    REQUIRE(gl.size() == 32);
    double wsum = 0;
    for (auto [x, w] : gl) {
        wsum += w;
        CHECK(std::abs(x) < 1.0);
    }
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
    // exact for degree <= 63: check int_{-1}^1 x^k against the closed value
    for (int k : {0, 1, 2, 7, 20, 63}) {
        double acc = 0;
        for (auto [x, w] : gl) acc += w * std::pow(x, k);
        double expect = (k % 2 == 1) ? 0.0 : 2.0 / (k + 1);
        CHECK(acc == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("segment integration against an antiderivative") {
    QuadConfig cfg;
    auto fn = [](cplx z) { return std::vector<cplx>{std::exp(z), z * z}; };
    cplx z0{0.0, 0.2}, z1{1.0, 1.3};
    auto v = integrate_segment(fn, z0, z1, 2, cfg);
    CHECK(std::abs(v[0] - (std::exp(z1) - std::exp(z0))) < 1e-12);
    CHECK(std::abs(v[1] - (z1 * z1 * z1 - z0 * z0 * z0) / 3.0) < 1e-12);
}

TEST_CASE("fixture sanity") {
    auto fx = gamma0_11();
    CHECK_NOTHROW(validate_fixture(fx));
    CHECK(fx.generator("T").parabolic);
    CHECK(fx.generator("U").parabolic);
    CHECK_FALSE(fx.generator("A").parabolic);
    CHECK_THROWS_AS(fx.generator("Z"), input_error);

    GroupFixture bad = fx;
    bad.generators[0].m.c = 5; // lower-left no longer divisible by the level
    CHECK_THROWS_AS(validate_fixture(bad), input_error);
    GroupFixture bad2 = fx;
    bad2.generators[0].parabolic = true; // trace is not +-2
    CHECK_THROWS_AS(validate_fixture(bad2), input_error);
}

TEST_CASE("word evaluation") {
    auto fx = gamma0_11();
    const Mat2& A = fx.generator("A").m;
    const Mat2& B = fx.generator("B").m;
    CHECK(word_matrix(fx, {1, 2}) == A * B);
    CHECK(word_matrix(fx, {1, -1}) == Mat2{});
    CHECK(word_matrix(fx, {-2, 1, 2}) == B.inverse() * A * B);
    CHECK_THROWS_AS(word_matrix(fx, {5}), input_error);
    CHECK_THROWS_AS(word_matrix(fx, {0}), input_error);
}

TEST_CASE("base point selection keeps the orbit high") {
    auto fx = gamma0_11();
    std::vector<std::vector<int>> words{{1}, {2}, {3}, {4}, {1, 2}, {3, 1}};
    cplx z0 = choose_base_point(fx, words, 0.004);
    CHECK(min_orbit_height(fx, words, z0) >= 0.004);
    CHECK_THROWS_AS(choose_base_point(fx, words, 10.0), evaluation_domain_error);
}

TEST_CASE("degree zero periods equal the lambda map") {
    auto fx = gamma0_11();
    auto f = fixture_form(fx, 6000);
    QuadConfig cfg;
    cplx z0{0.875, 0.7864};
    for (const char* name : {"A", "B"}) {
        const Mat2& g = fx.generator(name).m;
        auto psi = period_vector(f, 0, g, z0, cfg);
        REQUIRE(psi.size() == 1);
        cplx lam = lambda_of(f, g.inverse(), cplx{0.3, 0.9}, 1e-13);
        CHECK(std::abs(psi[0] - lam) < 1e-10);
    }
}

TEST_CASE("frozen period values for the level 11 group") {
    auto fx = gamma0_11();
    auto f = fixture_form(fx, 6000);
    cplx lamA = lambda_of(f, fx.generator("A").m, cplx{0.3, 0.9}, 1e-14);
    cplx lamB = lambda_of(f, fx.generator("B").m, cplx{0.3, 0.9}, 1e-14);
    CHECK(lamA.real() == doctest::Approx(-0.634604652139777).epsilon(1e-10));
    CHECK(lamA.imag() == doctest::Approx(-1.458816616938496).epsilon(1e-10));
    CHECK(lamB.real() == doctest::Approx(-0.634604652139777).epsilon(1e-10));
    CHECK(lamB.imag() == doctest::Approx(1.458816616938494).epsilon(1e-10));
    double det = lamA.real() * lamB.imag() - lamA.imag() * lamB.real();
    CHECK(det == doctest::Approx(-1.851543623456).epsilon(1e-8));
}

TEST_CASE("lambda vanishes on parabolic generators and adds on products") {
    auto fx = gamma0_11();
    auto f = fixture_form(fx, 6000);
    cplx z{0.3, 0.9};
    for (const char* name : {"T", "U"})
        CHECK(std::abs(lambda_of(f, fx.generator(name).m, z, 1e-13)) < 1e-10);
    const Mat2& A = fx.generator("A").m;
    const Mat2& B = fx.generator("B").m;
    cplx sum = lambda_of(f, A, z, 1e-13) + lambda_of(f, B, z, 1e-13);
    cplx prod = lambda_of(f, A * B, z, 1e-13);
    CHECK(std::abs(sum - prod) < 1e-9);
}

TEST_CASE("cocycle identity for generator pairs") {
    auto fx = gamma0_11();
    auto f = fixture_form(fx, 6000);
    QuadConfig cfg;
    cplx z0{0.875, 0.7864};
    const Mat2& A = fx.generator("A").m;
    const Mat2& T = fx.generator("T").m;
    const Mat2& B = fx.generator("B").m;
    // the identity couples the degree to the weight: n = k - 2 = 0 here
    CHECK(cocycle_residual(f, 0, A, T, z0, cfg) < 1e-9);
    CHECK(cocycle_residual(f, 0, T, A, z0, cfg) < 1e-9);
    CHECK(cocycle_residual(f, 0, A, B, z0, cfg) < 1e-9);
    const Mat2& U = fx.generator("U").m;
    CHECK(cocycle_residual(f, 0, T, U, z0, cfg) < 1e-9);
}

TEST_CASE("second order relation on a non-generator element") {
    auto fx = gamma0_11();
    auto f = fixture_form(fx, 6000);
    Mat2 AB = fx.generator("A").m * fx.generator("B").m;
    cplx lam = lambda_of(f, AB, cplx{0.3, 0.9}, 1e-13);
    std::vector<cplx> samples;
    for (int k = 0; k < 5; ++k) samples.emplace_back(-0.5 + 0.3 * k, 0.5 + 0.1 * k);
    CHECK(second_order_residual(f, AB, lam, samples, 1e-13) < 1e-8);
}

TEST_CASE("full suite passes at the pinned tolerances") {
    auto fx = gamma0_11();
    VerifyConfig cfg;
    auto records = verify_suite(fx, 0, cfg);
    CHECK(!records.empty());
    for (const auto& r : records) {
        CAPTURE(r.name);
        CHECK(r.pass);
    }
    CHECK_THROWS_AS(verify_suite(fx, 2, cfg), input_error); // weight mismatch
}

TEST_CASE("rank checks") {
    auto fx = gamma0_11();
    auto f = fixture_form(fx, 6000);
    QuadConfig cfg;
    std::vector<std::vector<int>> words{{1}, {2}, {3}, {4}};
    auto table = build_cocycle_table(fx, f, 0, words, cfg);
    CHECK(table.entries.size() == 4);
    CHECK(table_rank(table, 1e-6) == 2);
    CHECK(invariant_dim_exact(fx, 2) == 0);
    CHECK(invariant_dim_exact(fx, 0) == 1);
}
