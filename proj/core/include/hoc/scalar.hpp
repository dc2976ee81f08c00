#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "hoc/errors.hpp"

namespace hoc {

/// Exact rational scalar. mpq_class keeps values canonical: lowest terms,
/// positive denominator.
using Rat = mpq_class;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

/// Combined bit size of numerator and denominator, used for pivot selection.
inline std::size_t bit_size(const Rat& x) {
    return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
}

inline Rat field_zero(const Rat&) { return Rat(0); }
inline Rat field_one(const Rat&) { return Rat(1); }

/// Prime-field scalar with a runtime modulus. A modulus of 0 marks an
/// unbound zero that adopts the modulus of the other operand.
class Fp {
  public:
    Fp() : v_(0), p_(0) {}
    Fp(std::int64_t v, std::uint32_t p) : p_(p) {
        if (p < 2) throw input_error("Fp: modulus must be >= 2");
        std::int64_t r = v % static_cast<std::int64_t>(p);
        if (r < 0) r += p;
        v_ = static_cast<std::uint32_t>(r);
    }

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }
    bool zero() const { return v_ == 0; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        std::uint32_t p = join(a, b);
        if (p == 0) return Fp();
        return make((static_cast<std::uint64_t>(a.v_) + b.v_) % p, p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        std::uint32_t p = join(a, b);
        if (p == 0) return Fp();
        return make((static_cast<std::uint64_t>(p) + a.v_ - b.v_) % p, p);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        std::uint32_t p = join(a, b);
        if (p == 0) return Fp();
        return make(static_cast<std::uint64_t>(a.v_) * b.v_ % p, p);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
    Fp operator-() const {
        if (p_ == 0) return Fp();
        return make(v_ == 0 ? 0 : p_ - v_, p_);
    }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    Fp inverse() const {
        if (v_ == 0 || p_ == 0) throw input_error("Fp: inverse of zero");
        // extended Euclid
        std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
        while (b != 0) {
            std::int64_t t = a / b;
            a -= t * b; std::swap(a, b);
            x0 -= t * x1; std::swap(x0, x1);
        }
        return Fp(x0, p_);
    }

    friend bool operator==(const Fp& a, const Fp& b) {
        return a.v_ == b.v_ && (a.v_ == 0 || a.p_ == b.p_);
    }

  private:
    static std::uint32_t join(const Fp& a, const Fp& b) {
        if (a.p_ == 0) return b.p_;
        if (b.p_ == 0) return a.p_;
        if (a.p_ != b.p_) throw input_error("Fp: modulus mismatch");
        return a.p_;
    }
    static Fp make(std::uint64_t v, std::uint32_t p) {
        Fp r;
        r.v_ = static_cast<std::uint32_t>(v);
        r.p_ = p;
        return r;
    }
    std::uint32_t v_;
    std::uint32_t p_;
};

inline bool is_zero(const Fp& x) { return x.zero(); }
inline std::size_t bit_size(const Fp&) { return 1; }
inline Fp field_zero(const Fp& s) { return Fp(0, s.modulus() ? s.modulus() : 2); }
inline Fp field_one(const Fp& s) {
    if (s.modulus() == 0) throw input_error("Fp: unbound sample");
    return Fp(1, s.modulus());
}

inline std::string to_string(const Rat& x) { return x.get_str(); }
inline std::string to_string(const Fp& x) { return std::to_string(x.value()); }

} // namespace hoc
