#include "hoc/es/qseries.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "hoc/errors.hpp"

namespace hoc {

namespace {

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r))
        throw resource_error("eta_product_coeffs: int64 overflow");
    return r;
}

} // namespace

std::vector<std::int64_t> eta_product_coeffs(const std::vector<EtaFactor>& recipe,
                                             int count) {
    if (recipe.empty()) throw input_error("eta_product_coeffs: empty recipe");
    if (count < 1) throw input_error("eta_product_coeffs: count must be positive");
    long shift24 = 0;
    for (const auto& f : recipe) {
        if (f.multiplier < 1) throw input_error("eta_product_coeffs: bad multiplier");
        shift24 += long(f.multiplier) * f.power;
    }
    if (shift24 <= 0 || shift24 % 24 != 0)
        throw input_error("eta_product_coeffs: q-power shift is not a positive integer");
    const long shift = shift24 / 24;

    const long len = count - shift + 1; // coefficients of the pure product part
    std::vector<std::int64_t> c(std::size_t(std::max(len, 1L)), 0);
    c[0] = 1;
    const long top = long(c.size()) - 1;
    for (const auto& f : recipe) {
        for (int rep = 0; rep < std::abs(f.power); ++rep) {
            for (long nn = f.multiplier; nn <= top; nn += f.multiplier) {
                if (f.power > 0) {
                    // multiply by (1 - q^nn)
                    for (long i = top; i >= nn; --i)
                        c[std::size_t(i)] = checked_add(c[std::size_t(i)], -c[std::size_t(i - nn)]);
                } else {
                    // divide by (1 - q^nn)
                    for (long i = nn; i <= top; ++i)
                        c[std::size_t(i)] = checked_add(c[std::size_t(i)], c[std::size_t(i - nn)]);
                }
            }
        }
    }
    std::vector<std::int64_t> out(std::size_t(count), 0);
    for (long m = shift; m <= count; ++m) out[std::size_t(m - 1)] = c[std::size_t(m - shift)];
    return out;
}

double qexp_tail_bound(int weight, int terms, double y) {
    // sum_{m>M} m^{k/2} e^{-2 pi m y} <= M^{k/2} r^M t/(1-t), t = e^{k/(2M)} r
    const double p = weight / 2.0;
    const double r = std::exp(-2.0 * std::numbers::pi * y);
    const double M = terms;
    const double t = std::exp(p / M) * r;
    if (t >= 1.0) return std::numeric_limits<double>::infinity();
    return std::pow(M, p) * std::pow(r, M) * t / (1.0 - t);
}

int choose_truncation(int weight, double y, double tol) {
    if (y <= 0) throw evaluation_domain_error("choose_truncation: point not in the upper half plane");
    if (tol <= 0) throw input_error("choose_truncation: tolerance must be positive");
    int lo = 4, hi = 4;
    while (qexp_tail_bound(weight, hi, y) >= tol) {
        hi *= 2;
        if (hi > 20'000'000)
            throw convergence_error("choose_truncation: truncation length above limit");
    }
    while (lo + 1 < hi) {
        int mid = lo + (hi - lo) / 2;
        (qexp_tail_bound(weight, mid, y) < tol ? hi : lo) = mid;
    }
    return hi;
}

std::complex<double> eval_qexp(const CuspFormSpec& f, std::complex<double> z,
                               double tol) {
    const double y = z.imag();
    const double bound = std::max(f.coeff_bound, 1.0);
    const int m = choose_truncation(f.weight, y, tol / bound);
    if (m >= int(f.a.size()))
        throw evaluation_domain_error("eval_qexp: not enough coefficients for this height");
    const std::complex<double> q =
        std::exp(std::complex<double>(0.0, 2.0 * std::numbers::pi) * z);
    std::complex<double> acc = 0.0;
    for (int k = m; k >= 1; --k) acc = acc * q + f.a[std::size_t(k)];
    return acc * q;
}

std::complex<double> eval_form(const CuspFormSpec& f, std::complex<double> z,
                               double tol) {
    if (z.imag() <= 0)
        throw evaluation_domain_error("eval_form: point not in the upper half plane");
    const std::complex<double> w = -1.0 / (double(f.level) * z);
    if (w.imag() <= z.imag()) return eval_qexp(f, z, tol);
    // f(z) = sign * (sqrt(N) w)^k f(w) with w = -1/(N z)
    const std::complex<double> jfac =
        std::pow(std::sqrt(double(f.level)) * w, f.weight);
    return double(f.fricke_sign) * jfac * eval_qexp(f, w, tol / std::abs(jfac));
}

std::complex<double> eichler_integral(const CuspFormSpec& f, std::complex<double> z,
                                      double tol) {
    if (f.weight != 2)
        throw input_error("eichler_integral: only weight 2 is supported");
    const double y = z.imag();
    const double bound = std::max(f.coeff_bound, 1.0);
    const int m = choose_truncation(f.weight, y, tol / bound);
    if (m >= int(f.a.size()))
        throw evaluation_domain_error("eichler_integral: not enough coefficients for this height");
    const std::complex<double> q =
        std::exp(std::complex<double>(0.0, 2.0 * std::numbers::pi) * z);
    std::complex<double> acc = 0.0;
    for (int k = m; k >= 1; --k) acc = acc * q + f.a[std::size_t(k)] / double(k);
    return acc * q;
}

} // namespace hoc
