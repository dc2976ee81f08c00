#include "hoc/series.hpp"

#include <algorithm>
#include <string>

namespace hoc {

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.cap() != b.cap()) throw input_error("mul: cap mismatch");
    TruncatedSeries out(a.cap());
    for (const auto& [ma, ca] : a.coefficients()) {
        for (const auto& [mb, cb] : b.coefficients()) {
            if (static_cast<int>(ma.size() + mb.size()) > a.cap()) continue;
            Monomial m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

TruncatedSeries expand_word(const Word& w, int cap, int rank) {
    TruncatedSeries result = TruncatedSeries::one(cap);
    for (const Letter& l : w.letters()) {
        if (l.gen > rank)
            throw input_error("expand_word: generator index " + std::to_string(l.gen) +
                              " exceeds rank " + std::to_string(rank));
        TruncatedSeries factor(cap);
        if (l.exp == 1) {
            factor.add_term({}, Rat(1));
            factor.add_term({l.gen}, Rat(1));
        } else {
            // gamma^{-1} = sum_n (1-gamma)^n truncated: sum_n (-x)^n
            Rat sign(1);
            Monomial m;
            for (int d = 0; d <= cap; ++d) {
                factor.add_term(m, sign);
                sign = -sign;
                m.push_back(l.gen);
            }
        }
        result = mul(result, factor);
    }
    return result;
}

Rat augmentation(const TruncatedSeries& s) {
    // evaluation at x_i = 0: the coefficient of the empty monomial
    for (const auto& [m, c] : s.coefficients())
        if (m.empty()) return c;
    return Rat(0);
}

std::size_t monomial_space_dim(int rank, int cap) {
    std::size_t total = 0, layer = 1;
    for (int d = 0; d <= cap; ++d) {
        total += layer;
        layer *= static_cast<std::size_t>(rank);
    }
    return total;
}

std::size_t monomial_index(const Monomial& m, int rank) {
    std::size_t offset = 0, layer = 1;
    for (std::size_t d = 0; d < m.size(); ++d) {
        offset += layer;
        layer *= static_cast<std::size_t>(rank);
    }
    std::size_t pos = 0;
    for (int letter : m) {
        if (letter < 1 || letter > rank)
            throw input_error("monomial_index: letter out of range");
        pos = pos * static_cast<std::size_t>(rank) + static_cast<std::size_t>(letter - 1);
    }
    return offset + pos;
}

Monomial monomial_at(std::size_t index, int rank, int cap) {
    std::size_t layer = 1;
    for (int d = 0; d <= cap; ++d) {
        if (index < layer) {
            Monomial m(static_cast<std::size_t>(d));
            for (int i = d - 1; i >= 0; --i) {
                m[static_cast<std::size_t>(i)] =
                    static_cast<int>(index % static_cast<std::size_t>(rank)) + 1;
                index /= static_cast<std::size_t>(rank);
            }
            return m;
        }
        index -= layer;
        layer *= static_cast<std::size_t>(rank);
    }
    throw input_error("monomial_at: index out of range");
}

Vec<Rat> to_vector(const TruncatedSeries& s, int rank) {
    Vec<Rat> v(monomial_space_dim(rank, s.cap()), Rat(0));
    for (const auto& [m, c] : s.coefficients()) v[monomial_index(m, rank)] = c;
    return v;
}

TruncatedSeries from_vector(const Vec<Rat>& v, int rank, int cap) {
    if (v.size() != monomial_space_dim(rank, cap))
        throw input_error("from_vector: length does not match ambient");
    TruncatedSeries s(cap);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!is_zero(v[i])) s.add_term(monomial_at(i, rank, cap), v[i]);
    return s;
}

Subspace<Rat> power_ideal_image(int q, int cap, int rank) {
    if (q < 1 || q > cap + 1)
        throw input_error("power_ideal_image: need 1 <= q <= cap+1");
    std::size_t n = monomial_space_dim(rank, cap);
    Subspace<Rat> out(n);
    std::size_t lo = monomial_space_dim(rank, q - 1);
    for (std::size_t i = lo; i < n; ++i) {
        Vec<Rat> v(n, Rat(0));
        v[i] = Rat(1);
        out.insert(std::move(v));
    }
    return out;
}

Subspace<Rat> two_sided_ideal_image(const std::vector<TruncatedSeries>& gens, int cap,
                                    int rank) {
    if (gens.empty())
        throw input_error("two_sided_ideal_image: empty generator list");
    std::size_t n = monomial_space_dim(rank, cap);
    Subspace<Rat> out(n);
    for (const TruncatedSeries& g : gens) {
        if (!is_zero(g.coefficient({})))
            throw input_error("two_sided_ideal_image: generator has nonzero constant term");
        if (g.zero()) continue; // trivial generator contributes nothing
        int room = cap - g.valuation();
        // all m_a * g * m_b with deg m_a + deg m_b <= room
        std::vector<Monomial> left{{}};
        for (int da = 0; da <= room; ++da) {
            std::vector<Monomial> next;
            for (const Monomial& ma : left) {
                TruncatedSeries sa(cap);
                sa.add_term(ma, Rat(1));
                TruncatedSeries ag = mul(sa, g);
                std::vector<Monomial> right{{}};
                for (int db = 0; db + da <= room; ++db) {
                    std::vector<Monomial> rnext;
                    for (const Monomial& mb : right) {
                        TruncatedSeries sb(cap);
                        sb.add_term(mb, Rat(1));
                        out.insert(to_vector(mul(ag, sb), rank));
                        if (db + da < room)
                            for (int l = 1; l <= rank; ++l) {
                                Monomial m = mb;
                                m.push_back(l);
                                rnext.push_back(std::move(m));
                            }
                    }
                    right = std::move(rnext);
                }
                if (da < room)
                    for (int l = 1; l <= rank; ++l) {
                        Monomial m = ma;
                        m.push_back(l);
                        next.push_back(std::move(m));
                    }
            }
            left = std::move(next);
        }
    }
    return out;
}

Subspace<Rat> subspace_product(const Subspace<Rat>& a, const Subspace<Rat>& b, int rank,
                               int cap) {
    std::size_t n = monomial_space_dim(rank, cap);
    if (a.ambient_dim() != n || b.ambient_dim() != n)
        throw input_error("subspace_product: ambient dimension mismatch");
    Subspace<Rat> out(n);
    for (const Vec<Rat>& ra : a.basis()) {
        TruncatedSeries sa = from_vector(ra, rank, cap);
        for (const Vec<Rat>& rb : b.basis())
            out.insert(to_vector(mul(sa, from_vector(rb, rank, cap)), rank));
    }
    return out;
}

} // namespace hoc
