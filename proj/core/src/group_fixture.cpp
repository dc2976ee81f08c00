#include "hoc/es/group_fixture.hpp"

#include <cmath>
#include <cstdlib>

#include "hoc/errors.hpp"

namespace hoc {

const FixtureGenerator& GroupFixture::generator(const std::string& gname) const {
    for (const auto& g : generators)
        if (g.name == gname) return g;
    throw input_error("fixture " + name + ": no generator named " + gname);
}

void validate_fixture(const GroupFixture& fx) {
    if (fx.level < 1) throw input_error("fixture " + fx.name + ": bad level");
    if (fx.generators.empty()) throw input_error("fixture " + fx.name + ": no generators");
    if (fx.fricke_sign != 1 && fx.fricke_sign != -1)
        throw input_error("fixture " + fx.name + ": fricke sign must be +-1");
    for (const auto& g : fx.generators) {
        if (g.m.det() != 1)
            throw input_error("fixture " + fx.name + ": generator " + g.name +
                              " has determinant != 1");
        if (g.m.c % fx.level != 0)
            throw input_error("fixture " + fx.name + ": generator " + g.name +
                              " is not congruent at this level");
        const bool par = std::abs(g.m.trace()) == 2 && g.m != Mat2{} &&
                         g.m != Mat2{-1, 0, 0, -1};
        if (g.parabolic != par)
            throw input_error("fixture " + fx.name + ": generator " + g.name +
                              " has a wrong parabolic flag");
    }
}

CuspFormSpec fixture_form(const GroupFixture& fx, int count) {
    auto coeffs = eta_product_coeffs(fx.eta, count);
    CuspFormSpec f;
    f.weight = fx.weight;
    f.level = fx.level;
    f.fricke_sign = fx.fricke_sign;
    f.a.assign(std::size_t(count) + 1, 0.0);
    double cb = 1.0;
    for (int m = 1; m <= count; ++m) {
        f.a[std::size_t(m)] = double(coeffs[std::size_t(m) - 1]);
        const double ratio =
            std::abs(double(coeffs[std::size_t(m) - 1])) / std::pow(double(m), fx.weight / 2.0);
        cb = std::max(cb, ratio);
    }
    f.coeff_bound = cb;
    return f;
}

Mat2 word_matrix(const GroupFixture& fx, const std::vector<int>& word) {
    Mat2 out;
    for (int letter : word) {
        if (letter == 0 || std::size_t(std::abs(letter)) > fx.generators.size())
            throw input_error("word_matrix: letter out of range");
        const Mat2& g = fx.generators[std::size_t(std::abs(letter)) - 1].m;
        out = out * (letter > 0 ? g : g.inverse());
    }
    return out;
}

GroupFixture gamma0_11() {
    GroupFixture fx;
    fx.name = "gamma0_11";
    fx.level = 11;
    fx.weight = 2;
    fx.fricke_sign = -1;
    fx.generators = {
        {"A", {7, -2, 11, -3}, false},
        {"B", {4, 1, 11, 3}, false},
        {"T", {1, 1, 0, 1}, true},
        {"U", {1, 0, 11, 1}, true},
    };
    fx.eta = {{1, 2}, {11, 2}};
    validate_fixture(fx);
    return fx;
}

} // namespace hoc
