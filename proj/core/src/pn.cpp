#include "hoc/es/pn.hpp"

#include <stdexcept>

namespace hoc {

namespace {

std::vector<mpz_class> binomials(int n) {
    std::vector<mpz_class> row(std::size_t(n) + 1);
    row[0] = 1;
    for (int k = 1; k <= n; ++k)
        row[std::size_t(k)] = row[std::size_t(k) - 1] * (n - k + 1) / k;
    return row;
}

} // namespace

Mat<Rat> pn_matrix_exact(const Mat2& gamma, int n) {
    if (n < 0) throw std::invalid_argument("pn_matrix_exact: negative degree");
    const std::size_t dim = std::size_t(n) + 1;
    Mat<Rat> out(dim, Vec<Rat>(dim));
    // column j: (dX - bY)^{n-j} (-cX + aY)^j, coefficient of X^{n-i} Y^i in row i
    for (int j = 0; j <= n; ++j) {
        std::vector<mpz_class> poly(dim, 0); // index = exponent of Y
        auto bn1 = binomials(n - j);
        for (int r = 0; r <= n - j; ++r) {
            mpz_class dp, bp;
            mpz_pow_ui(dp.get_mpz_t(), mpz_class(gamma.d).get_mpz_t(), unsigned(n - j - r));
            mpz_pow_ui(bp.get_mpz_t(), mpz_class(-gamma.b).get_mpz_t(), unsigned(r));
            poly[std::size_t(r)] = bn1[std::size_t(r)] * dp * bp;
        }
        auto bn2 = binomials(j);
        std::vector<mpz_class> full(dim, 0);
        for (int r = 0; r <= j; ++r) {
            mpz_class cp, ap;
            mpz_pow_ui(cp.get_mpz_t(), mpz_class(-gamma.c).get_mpz_t(), unsigned(j - r));
            mpz_pow_ui(ap.get_mpz_t(), mpz_class(gamma.a).get_mpz_t(), unsigned(r));
            mpz_class coeff = bn2[std::size_t(r)] * cp * ap;
            for (int s = 0; s + r <= n; ++s)
                if (poly[std::size_t(s)] != 0)
                    full[std::size_t(s + r)] += coeff * poly[std::size_t(s)];
        }
        for (int i = 0; i <= n; ++i) out[std::size_t(i)][std::size_t(j)] = Rat(full[std::size_t(i)]);
    }
    return out;
}

std::vector<std::vector<double>> pn_matrix(const Mat2& gamma, int n) {
    auto exact = pn_matrix_exact(gamma, n);
    std::vector<std::vector<double>> out(exact.size());
    for (std::size_t i = 0; i < exact.size(); ++i) {
        out[i].resize(exact[i].size());
        for (std::size_t j = 0; j < exact[i].size(); ++j) out[i][j] = exact[i][j].get_d();
    }
    return out;
}

template <class T>
static std::vector<T> apply_impl(const std::vector<std::vector<double>>& m,
                                 const std::vector<T>& v) {
    std::vector<T> out(m.size(), T(0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

std::vector<double> pn_apply(const std::vector<std::vector<double>>& m,
                             const std::vector<double>& v) {
    return apply_impl(m, v);
}
std::vector<std::complex<double>> pn_apply(const std::vector<std::vector<double>>& m,
                                           const std::vector<std::complex<double>>& v) {
    return apply_impl(m, v);
}

} // namespace hoc
