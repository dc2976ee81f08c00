#include "hoc/es/integrate.hpp"

#include <cmath>
#include <numbers>

#include "hoc/errors.hpp"

namespace hoc {

const std::vector<std::pair<double, double>>& gauss_legendre_32() {
    static const std::vector<std::pair<double, double>> table = [] {
        constexpr int n = 32;
        std::vector<std::pair<double, double>> nodes(n);
        for (int k = 0; k < n; ++k) {
            double x = std::cos(std::numbers::pi * (k + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                // Legendre recurrence for P_n(x) and P_n'(x)
                double p0 = 1.0, p1 = x;
                for (int j = 2; j <= n; ++j) {
                    double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                double step = p1 / dp;
                x -= step;
                if (std::abs(step) < 1e-15) break;
            }
            nodes[std::size_t(k)] = {x, 2.0 / ((1.0 - x * x) * dp * dp)};
        }
        return nodes;
    }();
    return table;
}

namespace {

using CVec = std::vector<std::complex<double>>;

CVec quad_on(const std::function<CVec(std::complex<double>)>& fn,
             std::complex<double> z0, std::complex<double> z1, std::size_t dim) {
    const auto& gl = gauss_legendre_32();
    const std::complex<double> mid = 0.5 * (z0 + z1);
    const std::complex<double> half = 0.5 * (z1 - z0);
    CVec acc(dim, 0.0);
    for (const auto& [x, w] : gl) {
        CVec v = fn(mid + half * x);
        for (std::size_t i = 0; i < dim; ++i) acc[i] += w * v[i];
    }
    for (auto& c : acc) c *= half;
    return acc;
}

double max_norm(const CVec& v) {
    double m = 0.0;
    for (const auto& c : v) m = std::max(m, std::abs(c));
    return m;
}

CVec adaptive(const std::function<CVec(std::complex<double>)>& fn,
              std::complex<double> z0, std::complex<double> z1, std::size_t dim,
              const CVec& whole, double tol, int depth, int max_depth) {
    const std::complex<double> mid = 0.5 * (z0 + z1);
    CVec left = quad_on(fn, z0, mid, dim);
    CVec right = quad_on(fn, mid, z1, dim);
    CVec sum(dim);
    double err = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        sum[i] = left[i] + right[i];
        err = std::max(err, std::abs(sum[i] - whole[i]));
    }
    if (err <= tol) return sum;
    if (depth >= max_depth)
        throw convergence_error("integrate_segment: depth limit reached");
    CVec l2 = adaptive(fn, z0, mid, dim, left, 0.5 * tol, depth + 1, max_depth);
    CVec r2 = adaptive(fn, mid, z1, dim, right, 0.5 * tol, depth + 1, max_depth);
    for (std::size_t i = 0; i < dim; ++i) sum[i] = l2[i] + r2[i];
    return sum;
}

} // namespace

std::vector<std::complex<double>> integrate_segment(
    const std::function<CVec(std::complex<double>)>& fn, std::complex<double> z0,
    std::complex<double> z1, std::size_t dim, const QuadConfig& cfg) {
    if (z0 == z1) return CVec(dim, 0.0);
    CVec whole = quad_on(fn, z0, z1, dim);
    double scale = std::max(1.0, max_norm(whole));
    return adaptive(fn, z0, z1, dim, whole, cfg.tol * scale, 0, cfg.max_depth);
}

std::vector<std::complex<double>> integrate_omega(const CuspFormSpec& f, int n,
                                                  std::complex<double> z0,
                                                  std::complex<double> z1,
                                                  const QuadConfig& cfg) {
    std::vector<double> binom(std::size_t(n) + 1, 1.0);
    for (int i = 1; i <= n; ++i)
        binom[std::size_t(i)] = binom[std::size_t(i) - 1] * (n - i + 1) / i;
    const std::complex<double> two_pi_i(0.0, 2.0 * std::numbers::pi);
    auto fn = [&](std::complex<double> z) {
        const std::complex<double> fv = two_pi_i * eval_form(f, z, cfg.form_tol);
        CVec out(std::size_t(n) + 1);
        std::complex<double> zp = 1.0;
        for (int i = 0; i <= n; ++i) {
            out[std::size_t(i)] = fv * binom[std::size_t(i)] * zp;
            zp *= -z;
        }
        return out;
    };
    return integrate_segment(fn, z0, z1, std::size_t(n) + 1, cfg);
}

} // namespace hoc
