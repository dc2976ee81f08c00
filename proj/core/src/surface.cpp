#include "hoc/surface.hpp"

#include <algorithm>
#include <string>

namespace hoc {

bool is_admissible(const SurfaceMonomial& m) {
    for (std::size_t i = 0; i + 1 < m.size(); ++i)
        if (m[i] == 1 && m[i + 1] == 2) return false;
    return true;
}

GenusContext make_genus_context(int g, int cap) {
    if (g < 0) throw input_error("make_genus_context: genus must be >= 0");
    Word b;
    for (int k = g; k >= 2; --k)
        b = b * Word::commutator(Word::generator(2 * k), Word::generator(2 * k - 1));
    int rank = std::max(1, 2 * g);
    return GenusContext{g, cap, expand_word(b, cap, rank)};
}

std::vector<SurfaceMonomial> admissible_basis(int g, int q) {
    if (g < 0 || q < 0) throw input_error("admissible_basis: negative argument");
    if (q == 0) return {SurfaceMonomial{}};
    if (g == 0) return {};
    std::vector<SurfaceMonomial> out;
    SurfaceMonomial m;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(m.size()) == q) {
            out.push_back(m);
            return;
        }
        for (int l = 1; l <= 2 * g; ++l) {
            if (!m.empty() && m.back() == 1 && l == 2) continue;
            m.push_back(l);
            self(self);
            m.pop_back();
        }
    };
    rec(rec);
    return out;
}

namespace {

/// Leftmost index of an adjacent (1,2) pair, or npos.
std::size_t first_bad_pair(const Monomial& m) {
    for (std::size_t i = 0; i + 1 < m.size(); ++i)
        if (m[i] == 1 && m[i + 1] == 2) return i;
    return static_cast<std::size_t>(-1);
}

} // namespace

SurfaceElement rewrite_normal_form(const TruncatedSeries& e, const GenusContext& ctx) {
    if (e.cap() != ctx.cap) throw input_error("rewrite_normal_form: cap mismatch");
    const int cap = ctx.cap;
    // rule = b * x2 x1 + (b - 1)(1 + x1 + x2), the replacement for x1 x2
    TruncatedSeries rule(cap);
    {
        TruncatedSeries x2x1(cap);
        x2x1.add_term({2, 1}, Rat(1));
        TruncatedSeries lin = TruncatedSeries::one(cap);
        lin.add_term({1}, Rat(1));
        lin.add_term({2}, Rat(1));
        TruncatedSeries bm1 = ctx.b_series - TruncatedSeries::one(cap);
        rule = mul(ctx.b_series, x2x1) + mul(bm1, lin);
    }

    SurfaceElement result(cap);
    TruncatedSeries pending = e;
    long budget = 1'000'000;
    while (!pending.zero()) {
        // lowest degree first; map order is graded
        auto it = pending.coefficients().begin();
        Monomial m = it->first;
        Rat c = it->second;
        pending.add_term(m, -c);
        std::size_t bad = first_bad_pair(m);
        if (bad == static_cast<std::size_t>(-1)) {
            result.add_term(m, c);
            continue;
        }
        if (--budget < 0)
            throw convergence_error("rewrite_normal_form: rewrite budget exceeded");
        TruncatedSeries prefix(cap), suffix(cap);
        prefix.add_term(Monomial(m.begin(), m.begin() + static_cast<long>(bad)), c);
        suffix.add_term(Monomial(m.begin() + static_cast<long>(bad) + 2, m.end()), Rat(1));
        pending = pending + mul(mul(prefix, rule), suffix);
    }
    return result;
}

SurfaceElement surface_mul(const SurfaceElement& a, const SurfaceElement& b,
                           const GenusContext& ctx) {
    if (a.cap() != b.cap()) throw input_error("surface_mul: cap mismatch");
    return rewrite_normal_form(mul(a, b), ctx);
}

Word surface_relator(int g) {
    Word rel;
    for (int k = 1; k <= g; ++k)
        rel = rel * Word::commutator(Word::generator(2 * k - 1), Word::generator(2 * k));
    return rel;
}

std::size_t relator_ideal_graded_dim(int g, int q) {
    if (g < 1 || q < 1) throw input_error("relator_ideal_graded_dim: need g, q >= 1");
    const int rank = 2 * g;
    double coords = 1;
    for (int d = 0; d <= q + 1; ++d) coords *= rank;
    if (coords > 1e6)
        throw resource_error("relator_ideal_graded_dim: ambient exceeds 1e6 coordinates");

    const int cap = q;
    TruncatedSeries rel = expand_word(surface_relator(g), cap, rank);
    TruncatedSeries gen = rel - TruncatedSeries::one(cap);
    Subspace<Rat> ideal(monomial_space_dim(rank, cap));
    if (!gen.zero()) ideal = two_sided_ideal_image({gen}, cap, rank);

    Subspace<Rat> slice = power_ideal_image(q, cap, rank); // degree exactly q
    std::size_t joint = subspace_sum(slice, ideal).dim();
    return joint - ideal.dim();
}

} // namespace hoc
