#pragma once

#include <complex>
#include <string>
#include <vector>

#include "hoc/es/group_fixture.hpp"
#include "hoc/es/integrate.hpp"

namespace hoc {

/// Raw period vector psi_z(gamma) = int_z^{gamma^{-1} z} omega(f). The map
/// satisfies psi(gamma delta) = psi(delta) + p_n(delta^{-1}) psi(gamma),
/// which is the identity the checks below exercise.
std::vector<std::complex<double>> period_vector(const CuspFormSpec& f, int n,
                                                const Mat2& gamma,
                                                std::complex<double> z,
                                                const QuadConfig& cfg);

/// p_n(gamma) * psi_z(gamma), the normalized cocycle value.
std::vector<std::complex<double>> phi_value(const CuspFormSpec& f, int n,
                                            const Mat2& gamma,
                                            std::complex<double> z,
                                            const QuadConfig& cfg);

/// Max-norm defect of the cocycle identity on the pair (gamma, delta).
double cocycle_residual(const CuspFormSpec& f, int n, const Mat2& gamma,
                        const Mat2& delta, std::complex<double> z,
                        const QuadConfig& cfg);

/// Smallest Im(w^{-1} z) over the given words, the quantity a base point must
/// keep bounded away from the real axis.
double min_orbit_height(const GroupFixture& fx,
                        const std::vector<std::vector<int>>& words,
                        std::complex<double> z);

/// Grid search for a base point whose orbit under the given words stays
/// above min_im. Re runs over [-1, 2], Im over a geometric ladder in
/// [0.02, 3]. Throws evaluation_domain_error if no grid point qualifies.
std::complex<double> choose_base_point(const GroupFixture& fx,
                                       const std::vector<std::vector<int>>& words,
                                       double min_im);

} // namespace hoc
