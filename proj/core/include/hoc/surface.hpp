#pragma once

#include <vector>

#include "hoc/series.hpp"
#include "hoc/word.hpp"

namespace hoc {

/// Monomial over the letters 1..2g with no adjacent (1,2) pair.
using SurfaceMonomial = Monomial;

bool is_admissible(const SurfaceMonomial& m);

/// Immutable data for the genus-g truncated surface-group algebra: the
/// Magnus image of b = [x_{2g}, x_{2g-1}] ... [x_4, x_3], which rewrites
/// x_1 x_2 into admissible form. For g = 1 the product is empty and b = 1.
struct GenusContext {
    int g;
    int cap;
    TruncatedSeries b_series;
};

GenusContext make_genus_context(int g, int cap);

/// All admissible tuples over {1,..,2g} of length q, lexicographically
/// sorted. Exactly N_g(q) of them.
std::vector<SurfaceMonomial> admissible_basis(int g, int q);

/// Element of the surface-group algebra in normal form: every monomial
/// admissible, degree <= cap.
using SurfaceElement = TruncatedSeries;

/// Normal form modulo the surface relation: substitutes
///   x_1 x_2 -> b * x_2 x_1 + (b - 1)(1 + x_1 + x_2)
/// at the leftmost offending position, lowest degree first, until every
/// monomial is admissible.
SurfaceElement rewrite_normal_form(const TruncatedSeries& e, const GenusContext& ctx);

/// Product in the surface-group algebra: free product followed by rewriting.
SurfaceElement surface_mul(const SurfaceElement& a, const SurfaceElement& b,
                           const GenusContext& ctx);

/// The genus-g relator [x_1, x_2] ... [x_{2g-1}, x_{2g}] as a free word.
Word surface_relator(int g);

/// Independent oracle for dim I^q/I^{q+1} of the surface group: the degree-q
/// slice of the free truncated algebra on 2g letters modulo the two-sided
/// ideal generated by the Magnus image of the relator minus one.
std::size_t relator_ideal_graded_dim(int g, int q);

} // namespace hoc
