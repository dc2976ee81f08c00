#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "hoc/scalar.hpp"
#include "hoc/subspace.hpp"
#include "hoc/word.hpp"

namespace hoc {

/// Noncommuting monomial: sequence of generator indices. Empty = 1.
using Monomial = std::vector<int>;

/// Graded order, then lexicographic with letter order 1 < 2 < ... < r.
struct GradedLex {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// Element of the degree-capped noncommutative polynomial algebra over Q.
/// Products of degree above the cap are dropped; zero coefficients are
/// never stored.
class TruncatedSeries {
  public:
    explicit TruncatedSeries(int cap) : cap_(cap) {
        if (cap < 0) throw input_error("TruncatedSeries: cap must be >= 0");
    }

    int cap() const { return cap_; }
    const std::map<Monomial, Rat, GradedLex>& coefficients() const { return coeffs_; }
    bool zero() const { return coeffs_.empty(); }

    Rat coefficient(const Monomial& m) const {
        auto it = coeffs_.find(m);
        return it == coeffs_.end() ? Rat(0) : it->second;
    }

    void add_term(const Monomial& m, const Rat& c) {
        if (static_cast<int>(m.size()) > cap_ || is_zero(c)) return;
        auto [it, inserted] = coeffs_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (is_zero(it->second)) coeffs_.erase(it);
        }
    }

    /// Smallest degree with a nonzero term; cap+1 if the series is zero.
    int valuation() const {
        return coeffs_.empty() ? cap_ + 1 : static_cast<int>(coeffs_.begin()->first.size());
    }

    static TruncatedSeries one(int cap) {
        TruncatedSeries s(cap);
        s.add_term({}, Rat(1));
        return s;
    }

    static TruncatedSeries generator(int i, int cap) {
        TruncatedSeries s(cap);
        s.add_term({i}, Rat(1));
        return s;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        check_caps(a, b);
        TruncatedSeries s = a;
        for (const auto& [m, c] : b.coeffs_) s.add_term(m, c);
        return s;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        check_caps(a, b);
        TruncatedSeries s = a;
        for (const auto& [m, c] : b.coeffs_) s.add_term(m, -c);
        return s;
    }
    TruncatedSeries scaled(const Rat& f) const {
        TruncatedSeries s(cap_);
        if (is_zero(f)) return s;
        for (const auto& [m, c] : coeffs_) s.coeffs_.emplace(m, f * c);
        return s;
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  private:
    static void check_caps(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.cap_ != b.cap_) throw input_error("TruncatedSeries: cap mismatch");
    }
    int cap_;
    std::map<Monomial, Rat, GradedLex> coeffs_;
};

/// Exact truncated product.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Magnus image of a freely reduced word: each generator maps to 1 + x_i,
/// inverse letters expand by the truncated geometric series.
TruncatedSeries expand_word(const Word& w, int cap, int rank);

/// Sum of coefficients; equals 1 for every Magnus image of a group element.
Rat augmentation(const TruncatedSeries& s);

// --- monomial coordinates -------------------------------------------------
//
// The coordinate space of A/I^{cap+1} over r free generators enumerates all
// monomials of degree <= cap in graded lex order (1 included at index 0).

std::size_t monomial_space_dim(int rank, int cap);
std::size_t monomial_index(const Monomial& m, int rank);
Monomial monomial_at(std::size_t index, int rank, int cap);

Vec<Rat> to_vector(const TruncatedSeries& s, int rank);
TruncatedSeries from_vector(const Vec<Rat>& v, int rank, int cap);

// --- ideal images ----------------------------------------------------------

/// Image of I^q in A/I^{cap+1}: the span of all monomials of degree in
/// [q, cap]. q = cap+1 gives the zero subspace.
Subspace<Rat> power_ideal_image(int q, int cap, int rank);

/// Image of the two-sided ideal generated by the given series, each of which
/// must have zero constant term. Spanned by all products m_a * g * m_b of
/// monomials around the generators, reduced.
Subspace<Rat> two_sided_ideal_image(const std::vector<TruncatedSeries>& gens, int cap,
                                    int rank);

/// Span of pairwise products of basis elements of two subspaces of the
/// truncated algebra.
Subspace<Rat> subspace_product(const Subspace<Rat>& a, const Subspace<Rat>& b, int rank,
                               int cap);

} // namespace hoc
