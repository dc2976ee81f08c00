#include "hoc/es/phi.hpp"

#include <cmath>
#include <limits>

#include "hoc/errors.hpp"

namespace hoc {

std::vector<std::complex<double>> period_vector(const CuspFormSpec& f, int n,
                                                const Mat2& gamma,
                                                std::complex<double> z,
                                                const QuadConfig& cfg) {
    return integrate_omega(f, n, z, gamma.inverse().act(z), cfg);
}

std::vector<std::complex<double>> phi_value(const CuspFormSpec& f, int n,
                                            const Mat2& gamma,
                                            std::complex<double> z,
                                            const QuadConfig& cfg) {
    return pn_apply(pn_matrix(gamma, n), period_vector(f, n, gamma, z, cfg));
}

double cocycle_residual(const CuspFormSpec& f, int n, const Mat2& gamma,
                        const Mat2& delta, std::complex<double> z,
                        const QuadConfig& cfg) {
    auto lhs = period_vector(f, n, gamma * delta, z, cfg);
    auto pd = period_vector(f, n, delta, z, cfg);
    auto twisted = pn_apply(pn_matrix(delta.inverse(), n),
                            period_vector(f, n, gamma, z, cfg));
    double r = 0.0, scale = 1.0;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        r = std::max(r, std::abs(lhs[i] - pd[i] - twisted[i]));
        scale = std::max(scale, std::abs(lhs[i]));
    }
    return r / scale;
}

double min_orbit_height(const GroupFixture& fx,
                        const std::vector<std::vector<int>>& words,
                        std::complex<double> z) {
    double h = z.imag();
    for (const auto& w : words) {
        const Mat2 m = word_matrix(fx, w).inverse();
        h = std::min(h, m.act(z).imag());
        // products inside the cocycle identity visit delta^{-1} z too
        for (std::size_t cut = 1; cut < w.size(); ++cut) {
            std::vector<int> tail(w.begin() + long(cut), w.end());
            h = std::min(h, word_matrix(fx, tail).inverse().act(z).imag());
        }
    }
    return h;
}

std::complex<double> choose_base_point(const GroupFixture& fx,
                                       const std::vector<std::vector<int>>& words,
                                       double min_im) {
    double best = -std::numeric_limits<double>::infinity();
    std::complex<double> best_z;
    for (double im = 3.0; im >= 0.02; im /= 1.25) {
        for (double re = -1.0; re <= 2.0 + 1e-9; re += 0.025) {
            const std::complex<double> z(re, im);
            const double h = min_orbit_height(fx, words, z);
            if (h > best) {
                best = h;
                best_z = z;
            }
        }
    }
    if (best < min_im)
        throw evaluation_domain_error(
            "choose_base_point: no grid point keeps the orbit above the height floor");
    return best_z;
}

} // namespace hoc
