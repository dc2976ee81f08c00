#pragma once

#include <string>
#include <vector>

#include "hoc/es/pn.hpp"
#include "hoc/es/qseries.hpp"

namespace hoc {

struct FixtureGenerator {
    std::string name;
    Mat2 m;
    bool parabolic = false;
};

/// A congruence-type group given by explicit generator matrices, plus the
/// newform attached to it as an eta product recipe.
struct GroupFixture {
    std::string name;
    int level = 1;
    int weight = 2;
    int fricke_sign = 1;
    std::vector<FixtureGenerator> generators;
    std::vector<EtaFactor> eta;

    const FixtureGenerator& generator(const std::string& gname) const;
};

/// Checks determinants, level divisibility of the lower-left entries and the
/// parabolic trace flags. Throws input_error on any violation.
void validate_fixture(const GroupFixture& fx);

/// Builds the cusp form spec from the fixture's eta recipe with `count`
/// coefficients.
CuspFormSpec fixture_form(const GroupFixture& fx, int count);

/// Word in the fixture's generators: entries are +-(i+1) for generator i or
/// its inverse, evaluated left to right.
Mat2 word_matrix(const GroupFixture& fx, const std::vector<int>& word);

/// Built-in fixture: the level 11 genus 1 group with its weight 2 newform.
GroupFixture gamma0_11();

} // namespace hoc
