#pragma once

#include <complex>
#include <vector>

#include "hoc/es/group_fixture.hpp"
#include "hoc/es/integrate.hpp"

namespace hoc {

/// lambda(gamma) = L(gamma z) - L(z) where L is the Eichler integral of f.
/// Independent of z; the overload with two points returns the spread between
/// the two evaluations as a consistency measure.
std::complex<double> lambda_of(const CuspFormSpec& f, const Mat2& gamma,
                               std::complex<double> z, double tol);

/// G(z) = f(z) L(z), the weight 2 object with G|(gamma - 1) = lambda(gamma) f.
std::complex<double> eval_second_order(const CuspFormSpec& f,
                                       std::complex<double> z, double tol);

/// Max over sample points of |G(gamma z)/(cz+d)^2 - G(z) - lambda * f(z)|.
double second_order_residual(const CuspFormSpec& f, const Mat2& gamma,
                             std::complex<double> lambda,
                             const std::vector<std::complex<double>>& samples,
                             double tol);

} // namespace hoc
