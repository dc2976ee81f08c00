#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace hoc {

/// One factor eta(m z)^e of an eta product.
struct EtaFactor {
    int multiplier = 1;
    int power = 1;
};

/// Fourier coefficients a_1..a_count of prod eta(m z)^e, assuming the total
/// q-power shift sum(m*e)/24 is a positive integer. Entries use exact int64
/// arithmetic and throw on overflow.
std::vector<std::int64_t> eta_product_coeffs(const std::vector<EtaFactor>& recipe,
                                             int count);

/// A cusp form given by its Fourier expansion at infinity, f(z) = sum_{m>=1}
/// a_m q^m with q = exp(2 pi i z), together with the data needed to evaluate
/// it low in the upper half plane via the Fricke involution.
struct CuspFormSpec {
    int weight = 2;
    int level = 1;
    int fricke_sign = 1;      // f(-1/(N z)) = sign * (sqrt(N) z)^k f(z)
    double coeff_bound = 1.0; // |a_m| <= coeff_bound * m^{weight/2} (Deligne-style)
    std::vector<std::complex<double>> a; // a[0] unused, a[m] = m-th coefficient
};

/// Bound on |sum_{m>M} m^{k/2} e^{-2 pi m y}| via the geometric tail estimate.
double qexp_tail_bound(int weight, int terms, double y);

/// Smallest truncation length whose tail bound is below tol at height y.
int choose_truncation(int weight, double y, double tol);

/// f(z) summed directly from the expansion; requires enough coefficients,
/// throws otherwise.
std::complex<double> eval_qexp(const CuspFormSpec& f, std::complex<double> z,
                               double tol);

/// f(z) anywhere with Im z > 0: uses the expansion when Im z is comfortable
/// and the Fricke relation to move the point high otherwise.
std::complex<double> eval_form(const CuspFormSpec& f, std::complex<double> z,
                               double tol);

/// Antiderivative L(z) = sum_{m>=1} a_m/m q^m of a weight-2 form, evaluated
/// directly from the expansion (no Fricke fallback; callers keep Im z high).
std::complex<double> eichler_integral(const CuspFormSpec& f, std::complex<double> z,
                                      double tol);

} // namespace hoc
