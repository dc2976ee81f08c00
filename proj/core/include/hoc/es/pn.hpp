#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "hoc/scalar.hpp"
#include "hoc/subspace.hpp"

namespace hoc {

/// Integer 2x2 matrix, determinant 1, identified up to sign.
struct Mat2 {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    std::int64_t det() const { return a * d - b * c; }
    std::int64_t trace() const { return a + d; }
    Mat2 inverse() const { return {d, -b, -c, a}; } // valid for det 1

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend bool operator==(const Mat2&, const Mat2&) = default;

    std::complex<double> act(std::complex<double> z) const {
        return (double(a) * z + double(b)) / (double(c) * z + double(d));
    }
    std::complex<double> denom(std::complex<double> z) const {
        return double(c) * z + double(d);
    }
};

/// Matrix of the substitution action on homogeneous degree-n polynomials in
/// the basis X^n, X^{n-1}Y, ..., Y^n: column j holds the expansion of
/// (dX - bY)^{n-j} (-cX + aY)^j. Exact integer entries.
Mat<Rat> pn_matrix_exact(const Mat2& gamma, int n);

std::vector<std::vector<double>> pn_matrix(const Mat2& gamma, int n);

std::vector<double> pn_apply(const std::vector<std::vector<double>>& m,
                             const std::vector<double>& v);
std::vector<std::complex<double>> pn_apply(const std::vector<std::vector<double>>& m,
                                           const std::vector<std::complex<double>>& v);

} // namespace hoc
