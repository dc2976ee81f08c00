#include "hoc/es/verify.hpp"

#include <cmath>
#include <sstream>

#include "hoc/errors.hpp"
#include "hoc/es/phi.hpp"
#include "hoc/es/second_order.hpp"

namespace hoc {

namespace {

std::string fmt_complex(std::complex<double> z) {
    std::ostringstream os;
    os << format_double(z.real()) << (z.imag() < 0 ? " - " : " + ")
       << format_double(std::abs(z.imag())) << "i";
    return os.str();
}

CheckRecord residual_record(std::string name, std::string anchor, double residual,
                            double tol) {
    CheckRecord rec;
    rec.name = std::move(name);
    rec.anchor = std::move(anchor);
    rec.expected = "residual < " + format_double(tol);
    rec.computed = format_double(residual);
    rec.residual = residual;
    rec.pass = residual < tol;
    return rec;
}

CheckRecord value_record(std::string name, std::string anchor, std::string expected,
                         std::string computed, bool pass) {
    CheckRecord rec;
    rec.name = std::move(name);
    rec.anchor = std::move(anchor);
    rec.expected = std::move(expected);
    rec.computed = std::move(computed);
    rec.pass = pass;
    return rec;
}

// singular values via Jacobi iteration on the (small) Gram matrix
std::vector<double> singular_values(const std::vector<std::vector<double>>& m) {
    const std::size_t r = m.size();
    if (r == 0) return {};
    const std::size_t c = m[0].size();
    std::vector<std::vector<double>> g(r, std::vector<double>(r, 0.0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t k = 0; k < c; ++k) g[i][j] += m[i][k] * m[j][k];
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < r; ++p)
            for (std::size_t q = p + 1; q < r; ++q) off += g[p][q] * g[p][q];
        if (off < 1e-300) break;
        for (std::size_t p = 0; p < r; ++p)
            for (std::size_t q = p + 1; q < r; ++q) {
                if (g[p][q] == 0.0) continue;
                const double theta = 0.5 * std::atan2(2.0 * g[p][q], g[p][p] - g[q][q]);
                const double cs = std::cos(theta), sn = std::sin(theta);
                for (std::size_t k = 0; k < r; ++k) {
                    const double gp = g[p][k], gq = g[q][k];
                    g[p][k] = cs * gp + sn * gq;
                    g[q][k] = -sn * gp + cs * gq;
                }
                for (std::size_t k = 0; k < r; ++k) {
                    const double gp = g[k][p], gq = g[k][q];
                    g[k][p] = cs * gp + sn * gq;
                    g[k][q] = -sn * gp + cs * gq;
                }
            }
    }
    std::vector<double> sv(r);
    for (std::size_t i = 0; i < r; ++i) sv[i] = std::sqrt(std::max(0.0, g[i][i]));
    std::sort(sv.rbegin(), sv.rend());
    return sv;
}

} // namespace

CocycleTable build_cocycle_table(const GroupFixture& fx, const CuspFormSpec& f,
                                 int n, const std::vector<std::vector<int>>& words,
                                 const QuadConfig& cfg) {
    CocycleTable table;
    table.degree = n;
    table.base_point = choose_base_point(fx, words, 0.0);
    for (const auto& w : words) {
        CocycleEntry e;
        e.word = w;
        for (int letter : w) {
            if (!e.label.empty()) e.label += '*';
            const auto& g = fx.generators[std::size_t(std::abs(letter)) - 1];
            e.label += letter > 0 ? g.name : g.name + "^-1";
        }
        e.psi = period_vector(f, n, word_matrix(fx, w), table.base_point, cfg);
        table.entries.push_back(std::move(e));
    }
    return table;
}

int table_rank(const CocycleTable& table, double sv_threshold) {
    // rows: Re and Im of each vector component, columns: table entries
    const std::size_t dim = std::size_t(table.degree) + 1;
    std::vector<std::vector<double>> m(2 * dim,
                                       std::vector<double>(table.entries.size()));
    for (std::size_t j = 0; j < table.entries.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) {
            m[2 * i][j] = table.entries[j].psi[i].real();
            m[2 * i + 1][j] = table.entries[j].psi[i].imag();
        }
    int rank = 0;
    for (double sv : singular_values(m))
        if (sv > sv_threshold) ++rank;
    return rank;
}

std::vector<std::complex<double>> psi_on_element(const GroupFixture& fx,
                                                 const CuspFormSpec& f, int n,
                                                 const std::vector<RingTerm>& elem,
                                                 std::complex<double> z,
                                                 const QuadConfig& cfg) {
    std::vector<std::complex<double>> acc(std::size_t(n) + 1, 0.0);
    for (const auto& term : elem) {
        if (term.coeff == 0.0) continue;
        auto v = period_vector(f, n, word_matrix(fx, term.word), z, cfg);
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += term.coeff * v[i];
    }
    return acc;
}

double pullback_residual(const Mat2& gamma, int n,
                         const std::vector<std::complex<double>>& points) {
    const auto p = pn_matrix(gamma, n);
    std::vector<double> binom(std::size_t(n) + 1, 1.0);
    for (int i = 1; i <= n; ++i)
        binom[std::size_t(i)] = binom[std::size_t(i) - 1] * (n - i + 1) / i;
    auto delta = [&](std::complex<double> z) {
        std::vector<std::complex<double>> v(std::size_t(n) + 1);
        std::complex<double> zp = 1.0;
        for (int i = 0; i <= n; ++i) {
            v[std::size_t(i)] = binom[std::size_t(i)] * zp;
            zp *= -z;
        }
        return v;
    };
    double r = 0.0;
    for (const auto& z : points) {
        const std::complex<double> j = gamma.denom(z);
        auto lhs = delta(gamma.act(z)); // times d(gz) = dz / j^2
        auto rhs = pn_apply(p, delta(z));
        std::complex<double> jn = std::pow(j, -n - 2) * j * j; // (cz+d)^{-n}
        for (std::size_t i = 0; i < lhs.size(); ++i)
            r = std::max(r, std::abs(lhs[i] / (j * j) - jn / (j * j) * rhs[i]));
    }
    return r;
}

int invariant_dim_exact(const GroupFixture& fx, int n) {
    const std::size_t dim = std::size_t(n) + 1;
    Mat<Rat> rows;
    for (const auto& g : fx.generators) {
        Mat<Rat> p = pn_matrix_exact(g.m, n);
        for (std::size_t i = 0; i < dim; ++i) {
            Vec<Rat> row = p[i];
            row[i] -= 1;
            rows.push_back(std::move(row));
        }
    }
    return int(nullspace(rows, dim, Rat(1)).dim());
}

std::vector<CheckRecord> verify_suite(const GroupFixture& fx, int n,
                                      const VerifyConfig& cfg) {
    if (n != fx.weight - 2)
        throw input_error("verify_suite: degree does not match the fixture weight");
    validate_fixture(fx);

    std::vector<CheckRecord> out;
    const CuspFormSpec f = fixture_form(fx, cfg.coeff_count);

    QuadConfig qcfg;
    qcfg.tol = cfg.quad_tol;

    // words: all generators plus the products the cocycle identity visits
    std::vector<std::vector<int>> words;
    for (int i = 1; i <= int(fx.generators.size()); ++i) words.push_back({i});
    // pairs whose products keep a small lower-left entry, so the orbit of the
    // base point does not sink too close to the real axis
    std::vector<std::pair<int, int>> pairs = {{1, 2}, {1, 3}, {3, 1}, {3, 4}};
    for (auto [i, j] : pairs)
        if (i <= int(fx.generators.size()) && j <= int(fx.generators.size()))
            words.push_back({i, j});

    const std::complex<double> z0 = choose_base_point(fx, words, cfg.min_im);
    out.push_back(value_record(
        "base_point", "min_gamma Im(gamma^-1 z) >= " + format_double(cfg.min_im),
        "height floor met", fmt_complex(z0) + ", floor " +
            format_double(min_orbit_height(fx, words, z0)),
        min_orbit_height(fx, words, z0) >= cfg.min_im));

    for (auto [i, j] : pairs) {
        if (i > int(fx.generators.size()) || j > int(fx.generators.size())) continue;
        const Mat2 g = fx.generators[std::size_t(i) - 1].m;
        const Mat2 d = fx.generators[std::size_t(j) - 1].m;
        const double r = cocycle_residual(f, n, g, d, z0, qcfg);
        out.push_back(residual_record(
            "cocycle_" + fx.generators[std::size_t(i) - 1].name +
                fx.generators[std::size_t(j) - 1].name,
            "psi(gd) = psi(d) + p_n(d^-1) psi(g)", r, cfg.tol_cocycle));
    }

    for (std::size_t i = 0; i < fx.generators.size(); ++i) {
        if (!fx.generators[i].parabolic) continue;
        auto v = period_vector(f, n, fx.generators[i].m, z0, qcfg);
        double norm = 0.0;
        for (const auto& c : v) norm = std::max(norm, std::abs(c));
        out.push_back(residual_record("parabolic_vanishing_" + fx.generators[i].name,
                                      "psi vanishes on the cusp stabilizers", norm,
                                      cfg.tol_parabolic));
    }

    {
        // augmentation-ideal elements give base-point independent values (n = 0)
        const std::complex<double> z1 = z0 + std::complex<double>(0.15, 0.4);
        const std::vector<std::vector<RingTerm>> elems = {
            {{1.0, {1}}, {-1.0, {}}},                                 // A - 1
            {{1.0, {1, 2}}, {-1.0, {1}}, {-1.0, {2}}, {1.0, {}}},     // (A-1)(B-1)
            {{1.0, {3}}, {-1.0, {}}},                                 // T - 1
        };
        const std::vector<std::string> labels = {"deg1", "deg2", "parabolic"};
        for (std::size_t k = 0; k < elems.size(); ++k) {
            auto a = psi_on_element(fx, f, n, elems[k], z0, qcfg);
            auto b = psi_on_element(fx, f, n, elems[k], z1, qcfg);
            double diff = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i)
                diff = std::max(diff, std::abs(a[i] - b[i]));
            out.push_back(residual_record(
                "base_point_independence_" + labels[k],
                "phi extended to the ideal does not depend on the base point", diff,
                cfg.tol_base_point));
        }
    }

    {
        std::vector<std::complex<double>> pts;
        for (int k = 0; k < 10; ++k)
            pts.push_back({-0.9 + 0.35 * k, 0.3 + 0.17 * k});
        for (int deg : {0, 2}) {
            double r = 0.0;
            for (const auto& g : fx.generators)
                r = std::max(r, pullback_residual(g.m, deg, pts));
            out.push_back(residual_record(
                "pullback_n" + std::to_string(deg),
                "delta_n(gz) = (cz+d)^{-n-2} p_n(g) delta_n(z)", r, cfg.tol_pullback));
        }
    }

    {
        // Fricke relation straight from the two expansions
        const std::complex<double> z(0.1, 0.35);
        const std::complex<double> w = -1.0 / (double(f.level) * z);
        const std::complex<double> jfac =
            std::pow(std::sqrt(double(f.level)) * z, f.weight);
        const std::complex<double> ratio =
            eval_qexp(f, w, qcfg.form_tol) / (jfac * eval_qexp(f, z, qcfg.form_tol));
        out.push_back(residual_record("fricke_sign",
                                      "f(-1/(Nz)) = eps (sqrt(N) z)^k f(z)",
                                      std::abs(ratio - double(f.fricke_sign)), cfg.tol_cocycle));
    }

    if (f.weight == 2) {
        const std::complex<double> zs(0.21, 0.9);
        const std::complex<double> zs2(-0.37, 1.4);
        std::vector<std::complex<double>> lambdas;
        std::vector<const FixtureGenerator*> hyp;
        for (const auto& g : fx.generators) {
            const std::complex<double> l = lambda_of(f, g.m, zs, qcfg.form_tol);
            const std::complex<double> l2 = lambda_of(f, g.m, zs2, qcfg.form_tol);
            out.push_back(residual_record("lambda_base_independent_" + g.name,
                                          "lambda(g) = L(gz) - L(z), any z",
                                          std::abs(l - l2), cfg.tol_base_point));
            if (g.parabolic) {
                out.push_back(residual_record("lambda_parabolic_" + g.name,
                                              "lambda vanishes on the cusp stabilizers",
                                              std::abs(l), cfg.tol_parabolic));
            } else {
                hyp.push_back(&g);
                lambdas.push_back(l);
            }
            out.push_back(residual_record(
                "second_order_" + g.name, "G|(g - 1) = lambda(g) f, G = f L",
                second_order_residual(f, g.m, l, {zs, zs2}, qcfg.form_tol), cfg.tol_second_order));
        }
        if (hyp.size() >= 2) {
            const Mat2 prod = hyp[0]->m * hyp[1]->m;
            const std::complex<double> lp = lambda_of(f, prod, zs, qcfg.form_tol);
            out.push_back(residual_record("lambda_additive",
                                          "lambda(gh) = lambda(g) + lambda(h)",
                                          std::abs(lp - lambdas[0] - lambdas[1]),
                                          cfg.tol_second_order));
            const double det = lambdas[0].real() * lambdas[1].imag() -
                               lambdas[0].imag() * lambdas[1].real();
            out.push_back(value_record(
                "lambda_rank", "lambda(g), lambda(h) span R^2 over R",
                "|det| > 1e-6", format_double(det), std::abs(det) > 1e-6));
        }
    }

    {
        CocycleTable table = build_cocycle_table(fx, f, n, words, qcfg);
        const int r = table_rank(table, cfg.sv_threshold);
        out.push_back(value_record("period_rank",
                                   "periods of f and if are R-independent", "2",
                                   std::to_string(r), r == 2));
    }

    {
        const int inv = invariant_dim_exact(fx, 2);
        out.push_back(value_record("invariant_dim_sym2",
                                   "dim { v : p_2(g) v = v for all g } = 0", "0",
                                   std::to_string(inv), inv == 0));
    }

    return out;
}

} // namespace hoc
