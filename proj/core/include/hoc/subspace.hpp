#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hoc/errors.hpp"
#include "hoc/scalar.hpp"

namespace hoc {

template <class K>
using Vec = std::vector<K>;
template <class K>
using Mat = std::vector<Vec<K>>;

/// Row-reduced echelon basis of a linear subspace. Rows are nonzero, pivot
/// entries are 1, pivot columns are strictly increasing and cleared in all
/// other rows. Membership and reduction against the basis are exact.
template <class K>
class Subspace {
  public:
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    const Mat<K>& basis() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Reduces v against the basis; the result is zero iff v lies in the span.
    Vec<K> reduce(Vec<K> v) const {
        if (v.size() != ambient_)
            throw input_error("Subspace::reduce: vector has length " +
                              std::to_string(v.size()) + ", ambient is " +
                              std::to_string(ambient_));
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const K& c = v[pivots_[i]];
            if (is_zero(c)) continue;
            K f = c; // pivot entry of rows_[i] is 1
            for (std::size_t j = pivots_[i]; j < ambient_; ++j)
                v[j] -= f * rows_[i][j];
        }
        return v;
    }

    bool contains(const Vec<K>& v) const {
        Vec<K> r = reduce(v);
        for (const K& x : r)
            if (!is_zero(x)) return false;
        return true;
    }

    bool contains(const Subspace& other) const {
        if (other.ambient_ != ambient_) return false;
        for (const Vec<K>& row : other.rows_)
            if (!contains(row)) return false;
        return true;
    }

    /// Inserts a vector, keeping RREF. Returns true if the dimension grew.
    bool insert(Vec<K> v) {
        v = reduce(std::move(v));
        std::size_t p = ambient_;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (!is_zero(v[j])) { p = j; break; }
        if (p == ambient_) return false;
        K inv = field_one(v[p]) / v[p];
        for (std::size_t j = p; j < ambient_; ++j) v[j] = inv * v[j];
        // clear the new pivot column in existing rows
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            K c = rows_[i][p];
            if (is_zero(c)) continue;
            for (std::size_t j = p; j < ambient_; ++j)
                rows_[i][j] -= c * v[j];
        }
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, p);
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
    }

  private:
    std::size_t ambient_;
    Mat<K> rows_;
    std::vector<std::size_t> pivots_;
};

/// Row-reduced span of a set of coordinate vectors. Within each elimination
/// column the candidate row whose leading entry has the smallest bit size is
/// taken as pivot, which keeps rational coefficients from blowing up.
template <class K>
Subspace<K> span_reduce(const Mat<K>& vectors, std::size_t ambient_dim) {
    for (const Vec<K>& v : vectors)
        if (v.size() != ambient_dim)
            throw input_error("span_reduce: vector has length " +
                              std::to_string(v.size()) + ", ambient is " +
                              std::to_string(ambient_dim));
    Mat<K> work = vectors;
    Subspace<K> out(ambient_dim);
    std::size_t start = 0;
    for (std::size_t col = 0; col < ambient_dim && start < work.size(); ++col) {
        std::size_t best = work.size();
        std::size_t best_bits = 0;
        for (std::size_t i = start; i < work.size(); ++i) {
            if (is_zero(work[i][col])) continue;
            std::size_t bits = bit_size(work[i][col]);
            if (best == work.size() || bits < best_bits) { best = i; best_bits = bits; }
        }
        if (best == work.size()) continue;
        std::swap(work[start], work[best]);
        K inv = field_one(work[start][col]) / work[start][col];
        for (std::size_t j = col; j < ambient_dim; ++j)
            work[start][j] = inv * work[start][j];
        for (std::size_t i = start + 1; i < work.size(); ++i) {
            K c = work[i][col];
            if (is_zero(c)) continue;
            for (std::size_t j = col; j < ambient_dim; ++j)
                work[i][j] -= c * work[start][j];
        }
        ++start;
    }
    for (std::size_t i = 0; i < start; ++i)
        out.insert(std::move(work[i]));
    return out;
}

/// dim U - dim W, requiring W to be contained in U.
template <class K>
std::size_t quotient_dim(const Subspace<K>& u, const Subspace<K>& w) {
    if (u.ambient_dim() != w.ambient_dim())
        throw input_error("quotient_dim: ambient dimensions differ");
    for (std::size_t i = 0; i < w.dim(); ++i)
        if (!u.contains(w.basis()[i]))
            throw containment_error("quotient_dim: basis vector " + std::to_string(i) +
                                    " of W is not contained in U");
    return u.dim() - w.dim();
}

template <class K>
Subspace<K> subspace_sum(const Subspace<K>& a, const Subspace<K>& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw input_error("subspace_sum: ambient dimensions differ");
    Subspace<K> out = a;
    for (const Vec<K>& row : b.basis()) out.insert(row);
    return out;
}

/// Rank of the images of `vectors` in the quotient by `denominator`.
template <class K>
std::size_t rank_mod(const Mat<K>& vectors, const Subspace<K>& denominator) {
    Subspace<K> acc = denominator;
    std::size_t rank = 0;
    for (const Vec<K>& v : vectors)
        if (acc.insert(v)) ++rank;
    return rank;
}

/// Kernel of the linear map given by matrix rows, returned as a subspace of
/// the column space.
template <class K>
Subspace<K> nullspace(const Mat<K>& rows, std::size_t ncols, const K& one) {
    Subspace<K> rowspace = span_reduce(rows, ncols);
    // free coordinates parametrize the kernel
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t p : rowspace.pivots()) is_pivot[p] = true;
    K zero = one - one;
    Subspace<K> out(ncols);
    for (std::size_t j = 0; j < ncols; ++j) {
        if (is_pivot[j]) continue;
        Vec<K> v(ncols, zero);
        v[j] = one;
        for (std::size_t i = 0; i < rowspace.dim(); ++i)
            v[rowspace.pivots()[i]] = zero - rowspace.basis()[i][j];
        out.insert(std::move(v));
    }
    return out;
}

/// Matrix C with ker C = span. Rows are indexed by non-pivot coordinates:
/// v lies in the span iff v[j] equals the pivot-coordinate combination
/// prescribed by the echelon basis for every non-pivot j.
template <class K>
Mat<K> kernel_constraints(const Subspace<K>& space, const K& one) {
    std::size_t n = space.ambient_dim();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : space.pivots()) is_pivot[p] = true;
    K zero = one - one;
    Mat<K> out;
    for (std::size_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        Vec<K> row(n, zero);
        row[j] = one;
        for (std::size_t i = 0; i < space.dim(); ++i)
            row[space.pivots()[i]] = zero - space.basis()[i][j];
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace hoc
