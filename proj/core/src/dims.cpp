#include "hoc/dims.hpp"

namespace hoc {

namespace {

void check_args(int g, int s, int n, int q) {
    if (g < 0 || s < 0) throw input_error("dims: g and s must be >= 0");
    if (n < 0 || n % 2 != 0) throw input_error("dims: n must be even and >= 0");
    if (q < 1) throw input_error("dims: q must be >= 1");
}

std::int64_t to_int64(const mpz_class& z) {
    if (!z.fits_slong_p()) throw resource_error("dims: value exceeds 64 bits");
    return z.get_si();
}

} // namespace

QuadraticInteger quad_pow(QuadraticInteger base, unsigned long e) {
    QuadraticInteger acc{1, 0, base.d};
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::int64_t n_g(int g, int q) {
    if (g < 0 || q < 0) throw input_error("n_g: negative argument");
    if (q == 0) return 1;
    if (g == 0) return 0;
    std::int64_t prev = 1, cur = 2 * g;
    for (int k = 1; k < q; ++k) {
        std::int64_t next = 2 * static_cast<std::int64_t>(g) * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::int64_t n_g_closed_form(int g, int q) {
    if (g < 0 || q < 0) throw input_error("n_g_closed_form: negative argument");
    if (q == 0) return 1;
    if (g == 0) return 0;
    const long d = static_cast<long>(g) * g - 1;
    const QuadraticInteger alpha{g, 1, d};
    QuadraticInteger sum{0, 0, d};
    // alpha^{q-2j}, j = 0..q; negative exponents via the conjugate (norm 1)
    for (int j = 0; j <= q; ++j) {
        int e = q - 2 * j;
        QuadraticInteger term = e >= 0 ? quad_pow(alpha, static_cast<unsigned long>(e))
                                       : quad_pow(alpha.conj(), static_cast<unsigned long>(-e));
        sum = sum + term;
    }
    if (sum.b != 0)
        throw convergence_error("n_g_closed_form: irrational part did not cancel");
    return to_int64(sum.a);
}

std::int64_t n_g_enumerate(int g, int q) {
    if (g < 0 || q < 0) throw input_error("n_g_enumerate: negative argument");
    if (q == 0) return 1;
    if (g == 0) return 0;
    double total = 1;
    for (int i = 0; i < q; ++i) total *= 2 * g;
    if (total > 5e7) throw resource_error("n_g_enumerate: too many tuples");
    std::int64_t count = 0;
    std::vector<int> tuple(static_cast<std::size_t>(q), 1);
    while (true) {
        bool ok = true;
        for (int i = 0; i + 1 < q; ++i)
            if (tuple[static_cast<std::size_t>(i)] == 1 &&
                tuple[static_cast<std::size_t>(i + 1)] == 2) {
                ok = false;
                break;
            }
        if (ok) ++count;
        int i = q - 1;
        while (i >= 0 && tuple[static_cast<std::size_t>(i)] == 2 * g) {
            tuple[static_cast<std::size_t>(i)] = 1;
            --i;
        }
        if (i < 0) break;
        ++tuple[static_cast<std::size_t>(i)];
    }
    return count;
}

std::int64_t bar_n(int g, int q) {
    if (g < 0 || q < 0) throw input_error("bar_n: negative argument");
    std::int64_t sum = 1;
    for (int k = 1; k <= q; ++k) sum += n_g(g, k);
    return sum;
}

std::int64_t dim_h1(int g, int s, int n, int q) {
    check_args(g, s, n, q);
    if (n >= 1) return bar_n(g, q - 1) * (2 * g + s - 2) * (n + 1);
    if (s > 0) return bar_n(g, q - 1) * (2 * g + s - 2) + 1;
    return n_g(g, q);
}

std::int64_t dim_h1_par(int g, int s, int n, int q) {
    check_args(g, s, n, q);
    if (n == 0) return n_g(g, q);
    return bar_n(g, q - 1) * ((2 * g - 2) * (n + 1) + s * n);
}

AuxDims dim_aux(int g, int s, int n) {
    check_args(g, s, n, 1);
    AuxDims out;
    out.dim_cusp_classical = (2 * g - 2) * static_cast<std::int64_t>(n + 1) +
                             static_cast<std::int64_t>(n) * s;
    out.cusp_n0_convention_warning = (n == 0);
    if (n >= 1)
        out.dim_h1_classical = (2 * g + s - 2) * static_cast<std::int64_t>(n + 1);
    else
        out.dim_h1_classical = s > 0 ? 2 * g + s - 1 : 2 * g;
    return out;
}

std::int64_t dim_ext2_s0(int g, int s, int q) {
    if (s > 0)
        throw input_error("dim_ext2_s0: Ext^2 vanishes for s > 0");
    check_args(g, s, 0, q);
    return n_g(g, q - 1);
}

SequenceReport sequence_consistency(int g, int s, int n, int q_max) {
    check_args(g, s, n, q_max);
    SequenceReport report;
    const std::int64_t h1_gamma = dim_aux(g, s, n).dim_h1_classical;
    for (int q = 1; q <= q_max; ++q) {
        std::int64_t N = n_g(g, q);
        if (n >= 1) {
            // 0 -> H_q^1 -> H_{q+1}^1 -> H^1(Gamma,V)^{N_g(q)} -> 0
            std::int64_t sum = dim_h1(g, s, n, q) - dim_h1(g, s, n, q + 1) + N * h1_gamma;
            report.checks.push_back(
                {"(a) q=" + std::to_string(q), sum, sum == 0});
            // parabolic variant
            std::int64_t hp = dim_aux(g, s, n).dim_cusp_classical; // dim H^1_par = dim S_{n+2}
            std::int64_t sump =
                dim_h1_par(g, s, n, q) - dim_h1_par(g, s, n, q + 1) + N * hp;
            report.checks.push_back(
                {"(par) q=" + std::to_string(q), sump, sump == 0});
        } else if (n == 0 && s > 0) {
            // 0 -> R^{N} -> H_q^1 -> H_{q+1}^1 -> H^1(Gamma,R)^{N} -> 0
            std::int64_t sum =
                N - dim_h1(g, s, 0, q) + dim_h1(g, s, 0, q + 1) - N * h1_gamma;
            report.checks.push_back(
                {"(b) q=" + std::to_string(q), sum, sum == 0});
        } else {
            // 0 -> R^{N} -> H_q^1 -> H_{q+1}^1 -> H^1(Gamma,R)^{N} -> R^{N_g(q-1)} -> 0
            std::int64_t sum = N - dim_h1(g, 0, 0, q) + dim_h1(g, 0, 0, q + 1) -
                               N * h1_gamma + n_g(g, q - 1);
            report.checks.push_back(
                {"(c) q=" + std::to_string(q), sum, sum == 0});
        }
    }
    return report;
}

} // namespace hoc
