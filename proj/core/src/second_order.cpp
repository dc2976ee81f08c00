#include "hoc/es/second_order.hpp"

#include <cmath>

namespace hoc {

std::complex<double> lambda_of(const CuspFormSpec& f, const Mat2& gamma,
                               std::complex<double> z, double tol) {
    return eichler_integral(f, gamma.act(z), tol) - eichler_integral(f, z, tol);
}

std::complex<double> eval_second_order(const CuspFormSpec& f,
                                       std::complex<double> z, double tol) {
    return eval_form(f, z, tol) * eichler_integral(f, z, tol);
}

double second_order_residual(const CuspFormSpec& f, const Mat2& gamma,
                             std::complex<double> lambda,
                             const std::vector<std::complex<double>>& samples,
                             double tol) {
    double r = 0.0;
    for (const auto& z : samples) {
        const std::complex<double> j = gamma.denom(z);
        const std::complex<double> lhs =
            eval_second_order(f, gamma.act(z), tol) / (j * j) -
            eval_second_order(f, z, tol);
        const std::complex<double> rhs = lambda * eval_form(f, z, tol);
        r = std::max(r, std::abs(lhs - rhs));
    }
    return r;
}

} // namespace hoc
