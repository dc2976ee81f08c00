#pragma once

#include <complex>
#include <string>
#include <vector>

#include "hoc/es/group_fixture.hpp"
#include "hoc/es/integrate.hpp"
#include "hoc/report.hpp"

namespace hoc {

struct CocycleEntry {
    std::string label;
    std::vector<int> word;
    std::vector<std::complex<double>> psi; // raw period vector
};

struct CocycleTable {
    int degree = 0; // n, so the form has weight n + 2
    std::complex<double> base_point;
    std::vector<CocycleEntry> entries;
};

CocycleTable build_cocycle_table(const GroupFixture& fx, const CuspFormSpec& f,
                                 int n, const std::vector<std::vector<int>>& words,
                                 const QuadConfig& cfg);

/// Rank of the real span of {Re psi, Im psi} over the table rows: the number
/// of singular values above the threshold.
int table_rank(const CocycleTable& table, double sv_threshold);

/// Dimension of the joint fixed space of p_n(gamma) over the fixture
/// generators, computed exactly over the rationals.
int invariant_dim_exact(const GroupFixture& fx, int n);

struct VerifyConfig {
    double tol_cocycle = 1e-8;
    double tol_parabolic = 1e-6;
    double tol_base_point = 1e-6;
    double tol_pullback = 1e-9;
    double tol_second_order = 1e-8;
    double sv_threshold = 1e-6; // singular value cut for the rank check
    double quad_tol = 1e-12;
    double min_im = 0.004;
    int coeff_count = 6000;
};

/// Formal group-ring element over the fixture's generators.
struct RingTerm {
    double coeff = 0.0;
    std::vector<int> word;
};

/// Linear extension of the raw period map to a group-ring element.
std::vector<std::complex<double>> psi_on_element(const GroupFixture& fx,
                                                 const CuspFormSpec& f, int n,
                                                 const std::vector<RingTerm>& elem,
                                                 std::complex<double> z,
                                                 const QuadConfig& cfg);

/// Max-norm defect of delta_n(gz) = (cz+d)^{-n-2} p_n(g) delta_n(z) with
/// delta_n(z) = (X - zY)^n dz, checked at the given points.
double pullback_residual(const Mat2& gamma, int n,
                         const std::vector<std::complex<double>>& points);

/// Full numeric suite on a fixture: cocycle identities, Fricke sign,
/// second-order relation, lambda additivity and rank checks.
std::vector<CheckRecord> verify_suite(const GroupFixture& fx, int n,
                                      const VerifyConfig& cfg);

} // namespace hoc
