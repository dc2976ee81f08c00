#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "hoc/es/qseries.hpp"

namespace hoc {

struct QuadConfig {
    double tol = 1e-12;
    int max_depth = 20;
    double form_tol = 1e-14; // truncation target for each form evaluation
};

/// Gauss-Legendre nodes and weights on [-1, 1], computed once per order.
const std::vector<std::pair<double, double>>& gauss_legendre_32();

/// Adaptive integral of a vector-valued function along the straight segment
/// from z0 to z1. Error is controlled in the max norm; throws
/// convergence_error when the depth limit is hit.
std::vector<std::complex<double>> integrate_segment(
    const std::function<std::vector<std::complex<double>>(std::complex<double>)>& fn,
    std::complex<double> z0, std::complex<double> z1, std::size_t dim,
    const QuadConfig& cfg);

/// Components of int 2 pi i f(z) (X - zY)^n dz from z0 to z1 in the basis
/// X^{n-i} Y^i.
std::vector<std::complex<double>> integrate_omega(const CuspFormSpec& f, int n,
                                                  std::complex<double> z0,
                                                  std::complex<double> z1,
                                                  const QuadConfig& cfg);

} // namespace hoc
