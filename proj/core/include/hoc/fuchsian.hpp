#pragma once

#include <vector>

#include "hoc/series.hpp"
#include "hoc/subspace.hpp"
#include "hoc/word.hpp"

namespace hoc {

/// Torsion-free Fuchsian signature (genus g, cusp count s >= 1). The group is
/// free of rank r = 2g + s - 1: hyperbolic letters 1..2g, free parabolic
/// letters 2g+1..2g+s-1, and the dependent parabolic
///   p_s = ([x_1,x_2]...[x_{2g-1},x_{2g}] p_1 ... p_{s-1})^{-1}.
struct FuchsianSignature {
    int g = 0;
    int s = 0;

    int rank() const { return 2 * g + s - 1; }

    /// All s parabolic generators as words, the dependent one last.
    std::vector<Word> parabolic_words() const;

    /// p_s as a word over the free letters.
    Word dependent_parabolic() const;
};

FuchsianSignature make_signature(int g, int s);

/// Truncated images of the ideal tower at one order q, all inside the
/// monomial coordinate space of cap q over r letters. Exact there: both
/// quotients J_q/J_{q+1} and J_q/IJ_q absorb I^{q+1}.
struct JqModel {
    FuchsianSignature signature;
    int q = 0;
    int cap = 0;
    Subspace<Rat> jq_image;
    Subspace<Rat> i_jq_image;
    Subspace<Rat> jq_next_image;
};

/// Refuses towers whose ambient coordinate space is too large to reduce
/// exactly at desk scale. Called by build_jq; callers planning a q-loop can
/// check the largest order upfront.
void check_jq_size(const FuchsianSignature& sig, int q);

JqModel build_jq(const FuchsianSignature& sig, int q);

/// dim J_q/IJ_q: the order-q cohomology dimension for the trivial module.
std::size_t h1_dim_n0(const FuchsianSignature& sig, int q);

/// dim J_q/J_{q+1}: the order-q parabolic cohomology dimension (n = 0).
std::size_t h1_par_dim_n0(const FuchsianSignature& sig, int q);

/// Rank of the classes of (p_j - 1), j = 1..s, in J_q/IJ_q.
std::size_t parabolic_class_rank(const FuchsianSignature& sig, int q);

std::size_t h1_dim_n0(const JqModel& model);
std::size_t h1_par_dim_n0(const JqModel& model);
std::size_t parabolic_class_rank(const JqModel& model);

} // namespace hoc
