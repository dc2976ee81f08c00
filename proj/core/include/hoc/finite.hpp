#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hoc/scalar.hpp"
#include "hoc/subspace.hpp"

namespace hoc {

/// Finite group given by its Cayley table (row g, column h -> g*h), with
/// element 0 as the identity, a generating set, and an explicit normal
/// subgroup Sigma.
struct FiniteGroup {
    std::string name;
    std::size_t order = 0;
    std::vector<std::vector<int>> cayley;
    std::vector<int> inverses;
    std::vector<int> generators;
    std::vector<int> sigma; // must contain 0 and be closed as validated

    int mul(int a, int b) const { return cayley[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    int inv(int a) const { return inverses[static_cast<std::size_t>(a)]; }
};

/// Structural checks: identity, inverses, associativity on random triples,
/// generator closure, Sigma closed under multiplication, inversion, and
/// conjugation by generators. Throws input_error with the first violation.
void validate_group(const FiniteGroup& gp);

FiniteGroup cyclic_group(int n);
FiniteGroup symmetric_3();
FiniteGroup alternating_5();

/// Representation by matrices assigned to the group's generators.
template <class K>
struct ModuleRep {
    std::size_t dim = 0;
    std::vector<Mat<K>> action; // one matrix per generator, row-major
};

/// Left regular representation (permutation matrices from the Cayley table).
template <class K>
ModuleRep<K> regular_rep(const FiniteGroup& gp, const K& one);

template <class K>
ModuleRep<K> trivial_rep(const FiniteGroup& gp, const K& one);

/// Matrices for every group element, obtained by multiplying generator
/// matrices along a BFS of the Cayley graph. Verifies consistency: an
/// element reached along two paths must get the same matrix.
template <class K>
std::vector<Mat<K>> element_matrices(const FiniteGroup& gp, const ModuleRep<K>& rep,
                                     const K& one);

/// [J_1, ..., J_qmax] as subspaces of the group algebra (dimension |G|),
/// J_q = I^q + A I_Sigma.
template <class K>
std::vector<Subspace<K>> ideal_tower(const FiniteGroup& gp, const K& one, int q_max);

/// Fixed-vector tower: W_1 = V^Gamma cut down by Sigma, and
/// W_{q+1} = {v : (rho(gen_i)-1)v in W_q for all i} cut down by Sigma.
template <class K>
Subspace<K> hq0(const FiniteGroup& gp, const ModuleRep<K>& rep, int q, const K& one);

/// Annihilator route to the same space: common kernel of the action of a
/// basis of J_q. Independent of the tower computation.
template <class K>
Subspace<K> hq0_annihilator(const FiniteGroup& gp, const ModuleRep<K>& rep, int q,
                            const K& one);

enum class TowerVerdict { Stable, Growth };

struct StabilizationReport {
    std::vector<std::size_t> dims; // dim hq0 for q = 1..q_max
    TowerVerdict verdict = TowerVerdict::Stable;
    int first_growth_q = 0; // valid when verdict == Growth
};

template <class K>
StabilizationReport stabilization_report(const FiniteGroup& gp, const ModuleRep<K>& rep,
                                         int q_max, const K& one);

/// True iff dim I^2 = dim I over F_p for every prime p dividing |G|
/// (equivalent to a vanishing abelianization; over Q the equality always
/// holds, so the prime fields are the meaningful test).
bool perfect_check(const FiniteGroup& gp);

} // namespace hoc

// --- template implementations ----------------------------------------------

#include <algorithm>
#include <deque>
#include <type_traits>

namespace hoc {

namespace detail {

template <class K>
Vec<K> mat_apply(const Mat<K>& m, const Vec<K>& v, const K& zero) {
    Vec<K> out(m.size(), zero);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!is_zero(m[i][j]) && !is_zero(v[j])) out[i] += m[i][j] * v[j];
    return out;
}

template <class K>
Mat<K> mat_mul(const Mat<K>& a, const Mat<K>& b, const K& zero) {
    std::size_t n = a.size(), m = b[0].size(), k = b.size();
    Mat<K> out(n, Vec<K>(m, zero));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (is_zero(a[i][l])) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (!is_zero(b[l][j])) out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

template <class K>
Mat<K> mat_identity(std::size_t n, const K& one) {
    K zero = one - one;
    Mat<K> m(n, Vec<K>(n, zero));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = one;
    return m;
}

/// Group algebra product of coordinate vectors via the Cayley table.
template <class K>
Vec<K> algebra_mul(const FiniteGroup& gp, const Vec<K>& a, const Vec<K>& b, const K& zero) {
    Vec<K> out(gp.order, zero);
    for (std::size_t g = 0; g < gp.order; ++g) {
        if (is_zero(a[g])) continue;
        for (std::size_t h = 0; h < gp.order; ++h)
            if (!is_zero(b[h]))
                out[static_cast<std::size_t>(gp.cayley[g][h])] += a[g] * b[h];
    }
    return out;
}

template <class K>
void check_order_bound(const FiniteGroup& gp) {
    std::size_t bound = std::is_same_v<K, Rat> ? 200 : 60;
    if (gp.order > bound)
        throw resource_error("finite: group order " + std::to_string(gp.order) +
                             " exceeds bound " + std::to_string(bound));
}

} // namespace detail

template <class K>
ModuleRep<K> regular_rep(const FiniteGroup& gp, const K& one) {
    K zero = one - one;
    ModuleRep<K> rep;
    rep.dim = gp.order;
    for (int g : gp.generators) {
        Mat<K> m(gp.order, Vec<K>(gp.order, zero));
        for (std::size_t h = 0; h < gp.order; ++h)
            m[static_cast<std::size_t>(gp.mul(g, static_cast<int>(h)))][h] = one;
        rep.action.push_back(std::move(m));
    }
    return rep;
}

template <class K>
ModuleRep<K> trivial_rep(const FiniteGroup& gp, const K& one) {
    ModuleRep<K> rep;
    rep.dim = 1;
    for (std::size_t i = 0; i < gp.generators.size(); ++i)
        rep.action.push_back(Mat<K>{Vec<K>{one}});
    return rep;
}

template <class K>
std::vector<Mat<K>> element_matrices(const FiniteGroup& gp, const ModuleRep<K>& rep,
                                     const K& one) {
    if (rep.action.size() != gp.generators.size())
        throw input_error("element_matrices: one matrix per generator required");
    K zero = one - one;
    std::vector<Mat<K>> mats(gp.order);
    std::vector<bool> seen(gp.order, false);
    mats[0] = detail::mat_identity<K>(rep.dim, one);
    seen[0] = true;
    std::deque<int> queue{0};
    bool check = rep.dim * gp.order <= 10000;
    while (!queue.empty()) {
        int g = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < gp.generators.size(); ++i) {
            int h = gp.mul(gp.generators[static_cast<std::size_t>(i)], g);
            Mat<K> m = detail::mat_mul(rep.action[i], mats[static_cast<std::size_t>(g)], zero);
            if (!seen[static_cast<std::size_t>(h)]) {
                mats[static_cast<std::size_t>(h)] = std::move(m);
                seen[static_cast<std::size_t>(h)] = true;
                queue.push_back(h);
            } else if (check && m != mats[static_cast<std::size_t>(h)]) {
                throw input_error("element_matrices: generator matrices violate the "
                                  "group's relations");
            }
        }
    }
    for (bool s : seen)
        if (!s) throw input_error("element_matrices: generators do not generate");
    return mats;
}

template <class K>
std::vector<Subspace<K>> ideal_tower(const FiniteGroup& gp, const K& one, int q_max) {
    detail::check_order_bound<K>(gp);
    K zero = one - one;
    const std::size_t n = gp.order;

    Mat<K> aug_basis; // e_g - e_1 for g != 1
    for (std::size_t g = 1; g < n; ++g) {
        Vec<K> v(n, zero);
        v[g] = one;
        v[0] = zero - one;
        aug_basis.push_back(std::move(v));
    }
    Mat<K> sigma_basis; // e_{g sigma} - e_g
    for (std::size_t g = 0; g < n; ++g)
        for (int s : gp.sigma) {
            if (s == 0) continue;
            Vec<K> v(n, zero);
            v[static_cast<std::size_t>(gp.mul(static_cast<int>(g), s))] += one;
            v[g] -= one;
            sigma_basis.push_back(std::move(v));
        }

    std::vector<Subspace<K>> tower;
    Subspace<K> ipow = span_reduce(aug_basis, n); // I^1
    for (int q = 1; q <= q_max; ++q) {
        Subspace<K> jq = ipow;
        for (const Vec<K>& v : sigma_basis) jq.insert(v);
        tower.push_back(jq);
        if (q == q_max) break;
        Subspace<K> next(n);
        for (const Vec<K>& a : ipow.basis())
            for (const Vec<K>& b : aug_basis)
                next.insert(detail::algebra_mul(gp, a, b, zero));
        ipow = std::move(next);
    }
    return tower;
}

template <class K>
Subspace<K> hq0(const FiniteGroup& gp, const ModuleRep<K>& rep, int q, const K& one) {
    if (q < 1) throw input_error("hq0: q must be >= 1");
    element_matrices(gp, rep, one); // validates the representation
    K zero = one - one;
    const std::size_t d = rep.dim;

    Mat<K> sigma_rows;
    if (gp.sigma.size() > 1) {
        std::vector<Mat<K>> mats = element_matrices(gp, rep, one);
        for (int s : gp.sigma) {
            if (s == 0) continue;
            const Mat<K>& m = mats[static_cast<std::size_t>(s)];
            for (std::size_t i = 0; i < d; ++i) {
                Vec<K> row = m[i];
                row[i] -= one;
                sigma_rows.push_back(std::move(row));
            }
        }
    }

    auto step = [&](const Subspace<K>& w) {
        Mat<K> rows;
        Mat<K> constraints = kernel_constraints(w, one);
        for (const Mat<K>& m : rep.action) {
            // C (rho(gen) - 1) v = 0
            for (const Vec<K>& c : constraints) {
                Vec<K> row(d, zero);
                for (std::size_t j = 0; j < d; ++j) {
                    for (std::size_t l = 0; l < d; ++l)
                        if (!is_zero(c[l])) row[j] += c[l] * m[l][j];
                    row[j] -= c[j];
                }
                rows.push_back(std::move(row));
            }
        }
        for (const Vec<K>& r : sigma_rows) rows.push_back(r);
        if (rows.empty()) {
            // no constraints: whole space
            Mat<K> id = detail::mat_identity<K>(d, one);
            return span_reduce(id, d);
        }
        return nullspace(rows, d, one);
    };

    Subspace<K> w = step(Subspace<K>(d)); // W_1 = V^Gamma (∩ Sigma-kernel)
    for (int k = 2; k <= q; ++k) w = step(w);
    return w;
}

template <class K>
Subspace<K> hq0_annihilator(const FiniteGroup& gp, const ModuleRep<K>& rep, int q,
                            const K& one) {
    K zero = one - one;
    std::vector<Mat<K>> mats = element_matrices(gp, rep, one);
    std::vector<Subspace<K>> tower = ideal_tower(gp, one, q);
    const Subspace<K>& jq = tower.back();
    Mat<K> rows;
    for (const Vec<K>& a : jq.basis()) {
        Mat<K> m(rep.dim, Vec<K>(rep.dim, zero));
        for (std::size_t g = 0; g < gp.order; ++g) {
            if (is_zero(a[g])) continue;
            for (std::size_t i = 0; i < rep.dim; ++i)
                for (std::size_t j = 0; j < rep.dim; ++j)
                    m[i][j] += a[g] * mats[g][i][j];
        }
        for (Vec<K>& row : m) rows.push_back(std::move(row));
    }
    if (rows.empty()) return span_reduce(detail::mat_identity<K>(rep.dim, one), rep.dim);
    return nullspace(rows, rep.dim, one);
}

template <class K>
StabilizationReport stabilization_report(const FiniteGroup& gp, const ModuleRep<K>& rep,
                                         int q_max, const K& one) {
    StabilizationReport report;
    for (int q = 1; q <= q_max; ++q) {
        report.dims.push_back(hq0(gp, rep, q, one).dim());
        if (q > 1 && report.dims[static_cast<std::size_t>(q - 1)] >
                         report.dims[static_cast<std::size_t>(q - 2)] &&
            report.verdict == TowerVerdict::Stable) {
            report.verdict = TowerVerdict::Growth;
            report.first_growth_q = q;
        }
    }
    return report;
}

} // namespace hoc
