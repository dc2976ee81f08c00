#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hoc/errors.hpp"

namespace hoc {

/// Element a + b*sqrt(d) of Z[sqrt(d)], d = g^2 - 1. Exact; conjugation
/// flips the sign of b.
struct QuadraticInteger {
    mpz_class a;
    mpz_class b;
    long d;

    QuadraticInteger conj() const { return {a, -b, d}; }

    friend QuadraticInteger operator+(const QuadraticInteger& x, const QuadraticInteger& y) {
        check(x, y);
        return {x.a + y.a, x.b + y.b, x.d};
    }
    friend QuadraticInteger operator*(const QuadraticInteger& x, const QuadraticInteger& y) {
        check(x, y);
        return {x.a * y.a + x.b * y.b * x.d, x.a * y.b + x.b * y.a, x.d};
    }

  private:
    static void check(const QuadraticInteger& x, const QuadraticInteger& y) {
        if (x.d != y.d) throw input_error("QuadraticInteger: discriminant mismatch");
    }
};

QuadraticInteger quad_pow(QuadraticInteger base, unsigned long e);

/// N_g(q): tuples over {1,..,2g} of length q with no adjacent (1,2).
/// Computed by the recursion N_g(q+1) = 2g N_g(q) - N_g(q-1).
std::int64_t n_g(int g, int q);

/// Same quantity from the closed form sum alpha^q + alpha^{q-2} + ... +
/// alpha^{-q} with alpha = g + sqrt(g^2-1), evaluated in Z[sqrt(g^2-1)].
/// Throws if the irrational part fails to cancel.
std::int64_t n_g_closed_form(int g, int q);

/// Same quantity by brute-force enumeration.
std::int64_t n_g_enumerate(int g, int q);

/// bar N_g(q) = 1 + N_g(1) + ... + N_g(q).
std::int64_t bar_n(int g, int q);

/// dim H_q^1 for the weight module of even parameter n.
std::int64_t dim_h1(int g, int s, int n, int q);

/// dim H_{q,par}^1.
std::int64_t dim_h1_par(int g, int s, int n, int q);

struct AuxDims {
    std::int64_t dim_cusp_classical = 0; // (2g-2)(n+1) + ns; convention-sensitive at n=0
    bool cusp_n0_convention_warning = false;
    std::int64_t dim_h1_classical = 0;
};

AuxDims dim_aux(int g, int s, int n);

/// dim Ext^2 in the n = s = 0 case: N_g(q-1). Any s > 0 request is a domain
/// error because the space vanishes there.
std::int64_t dim_ext2_s0(int g, int s, int q);

struct SequenceCheck {
    std::string label;
    std::int64_t alternating_sum = 0;
    bool ok = false;
};

struct SequenceReport {
    std::vector<SequenceCheck> checks;
    bool all_ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
};

/// Alternating-sum identities of every exact sequence applicable to
/// (g, s, n), for q = 1..q_max.
SequenceReport sequence_consistency(int g, int s, int n, int q_max);

} // namespace hoc
