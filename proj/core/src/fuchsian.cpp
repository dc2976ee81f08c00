#include "hoc/fuchsian.hpp"

#include <cmath>
#include <string>

namespace hoc {

namespace {

Word relator_prefix(const FuchsianSignature& sig) {
    // [x_1,x_2]...[x_{2g-1},x_{2g}] p_1 ... p_{s-1}
    Word w;
    for (int k = 1; k <= sig.g; ++k)
        w = w * Word::commutator(Word::generator(2 * k - 1), Word::generator(2 * k));
    for (int j = 1; j <= sig.s - 1; ++j) w = w * Word::generator(2 * sig.g + j);
    return w;
}

} // namespace

Word FuchsianSignature::dependent_parabolic() const {
    return relator_prefix(*this).inverse();
}

std::vector<Word> FuchsianSignature::parabolic_words() const {
    std::vector<Word> out;
    for (int j = 1; j <= s - 1; ++j) out.push_back(Word::generator(2 * g + j));
    out.push_back(dependent_parabolic());
    return out;
}

FuchsianSignature make_signature(int g, int s) {
    if (g < 0 || s < 1)
        throw input_error("make_signature: need g >= 0 and s >= 1");
    FuchsianSignature sig{g, s};
    if (sig.rank() < 1)
        throw input_error("make_signature: rank 2g+s-1 must be >= 1");
    // the full relator must reduce freely to the identity
    Word relator = relator_prefix(sig) * sig.dependent_parabolic();
    if (!relator.empty())
        throw input_error("make_signature: relator does not reduce to identity");
    return sig;
}

void check_jq_size(const FuchsianSignature& sig, int q) {
    if (q < 1) throw input_error("build_jq: q must be >= 1");
    const int r = sig.rank();
    double coords = 1, total = 1;
    for (int d = 1; d <= q; ++d) {
        coords *= r;
        total += coords;
    }
    if (total > 3000)
        throw resource_error("build_jq: ambient coordinate space exceeds 3000");
}

JqModel build_jq(const FuchsianSignature& sig, int q) {
    check_jq_size(sig, q);
    const int r = sig.rank();
    const int cap = q;
    std::vector<TruncatedSeries> parabolic_gens;
    for (const Word& p : sig.parabolic_words())
        parabolic_gens.push_back(expand_word(p, cap, r) - TruncatedSeries::one(cap));

    std::size_t n = monomial_space_dim(r, cap);
    Subspace<Rat> parab(n);
    bool any = false;
    for (const TruncatedSeries& g : parabolic_gens)
        if (!g.zero()) any = true;
    if (any) parab = two_sided_ideal_image(parabolic_gens, cap, r);

    JqModel model{sig, q, cap, Subspace<Rat>(n), Subspace<Rat>(n), Subspace<Rat>(n)};
    model.jq_image = subspace_sum(power_ideal_image(q, cap, r), parab);
    // IJ_q = I^{q+1} + I * (parabolic ideal); I^{q+1} vanishes at cap q
    model.i_jq_image = subspace_product(power_ideal_image(1, cap, r), parab, r, cap);
    // J_{q+1} = I^{q+1} + parabolic ideal
    model.jq_next_image = parab;

    if (!model.jq_image.contains(model.i_jq_image))
        throw convergence_error("build_jq: IJ_q not contained in J_q");
    if (!model.jq_image.contains(model.jq_next_image))
        throw convergence_error("build_jq: J_{q+1} not contained in J_q");
    return model;
}

std::size_t h1_dim_n0(const JqModel& m) {
    return quotient_dim(m.jq_image, m.i_jq_image);
}

std::size_t h1_par_dim_n0(const JqModel& m) {
    return quotient_dim(m.jq_image, m.jq_next_image);
}

std::size_t parabolic_class_rank(const JqModel& m) {
    const int r = m.signature.rank();
    Mat<Rat> classes;
    for (const Word& p : m.signature.parabolic_words())
        classes.push_back(to_vector(
            expand_word(p, m.cap, r) - TruncatedSeries::one(m.cap), r));
    return rank_mod(classes, m.i_jq_image);
}

std::size_t h1_dim_n0(const FuchsianSignature& sig, int q) {
    return h1_dim_n0(build_jq(sig, q));
}
std::size_t h1_par_dim_n0(const FuchsianSignature& sig, int q) {
    return h1_par_dim_n0(build_jq(sig, q));
}
std::size_t parabolic_class_rank(const FuchsianSignature& sig, int q) {
    return parabolic_class_rank(build_jq(sig, q));
}

} // namespace hoc
