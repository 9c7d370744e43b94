// Copyright 2026 The bfgeo Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file field.hpp
 * @brief Exact coefficient fields: arbitrary-precision rationals and F_p.
 *
 * All polynomial spaces are computed over Q (constructions) or over a prime
 * field with p > 2^30 (rank probing). Both are exact; no floating point ever
 * enters polynomial arithmetic.
 */

#pragma once

#include <bfgeo/errors.hpp>

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace bfgeo {

/// Exact rational scalar. GMP keeps values in lowest terms with positive
/// denominator, which is exactly the representation invariant we need.
using Rat = mpq_class;

using BigInt = mpz_class;

/// Element of F_p for a runtime prime p (odd, typically > 2^30).
/// Carries its modulus so mixed-field arithmetic is detected, not silent.
struct Fp {
    std::uint32_t v = 0;
    std::uint32_t p = 0;

    Fp() = default;
    Fp(std::uint64_t value, std::uint32_t prime)
        : v(static_cast<std::uint32_t>(value % prime)), p(prime) {}

    friend bool operator==(const Fp& a, const Fp& b) { return a.v == b.v && a.p == b.p; }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
};

namespace detail {
inline void check_same_prime(const Fp& a, const Fp& b) {
    if (a.p != b.p)
        throw Error(ErrorCode::ModeMismatch, "F_p scalars with different primes: " +
                                                 std::to_string(a.p) + " vs " + std::to_string(b.p));
}
} // namespace detail

inline Fp operator+(const Fp& a, const Fp& b) {
    detail::check_same_prime(a, b);
    std::uint32_t s = a.v + b.v; // p < 2^31 so no u32 overflow
    if (s >= a.p) s -= a.p;
    return Fp{s, a.p};
}

inline Fp operator-(const Fp& a, const Fp& b) {
    detail::check_same_prime(a, b);
    std::uint32_t s = a.v >= b.v ? a.v - b.v : a.v + a.p - b.v;
    return Fp{s, a.p};
}

inline Fp operator-(const Fp& a) {
    return Fp{a.v == 0 ? 0u : a.p - a.v, a.p};
}

inline Fp operator*(const Fp& a, const Fp& b) {
    detail::check_same_prime(a, b);
    return Fp{static_cast<std::uint32_t>((std::uint64_t(a.v) * b.v) % a.p), a.p};
}

inline Fp& operator+=(Fp& a, const Fp& b) { a = a + b; return a; }
inline Fp& operator-=(Fp& a, const Fp& b) { a = a - b; return a; }
inline Fp& operator*=(Fp& a, const Fp& b) { a = a * b; return a; }

std::uint32_t fp_pow(std::uint32_t base, std::uint64_t exp, std::uint32_t p);

/// Inverse via Fermat; requires p prime and a nonzero.
std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p);

inline Fp inverse(const Fp& a) { return Fp{fp_inv(a.v, a.p), a.p}; }

bool is_probable_prime(std::uint64_t n);

// ---------------------------------------------------------------------------
// Field glue used by Polynomial<K> and the ansatz templates. The overload set
// replaces a traits class: generic code calls these unqualified.
// ---------------------------------------------------------------------------

inline Rat zero_like(const Rat&) { return Rat(0); }
inline Fp zero_like(const Fp& x) { return Fp{0, x.p}; }

inline Rat one_like(const Rat&) { return Rat(1); }
inline Fp one_like(const Fp& x) { return Fp{1, x.p}; }

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool is_zero(const Fp& x) { return x.v == 0; }

/// Restores the representation invariant for scalars built from raw parts
/// (GMP's two-argument rational constructor does not reduce).
inline void normalize_scalar(Rat& x) { x.canonicalize(); }
inline void normalize_scalar(Fp&) {}

/// Scalar from a small signed integer, in the field of `like`.
inline Rat int_like(const Rat&, long n) { return Rat(n); }
inline Fp int_like(const Fp& x, long n) {
    long r = n % static_cast<long>(x.p);
    if (r < 0) r += x.p;
    return Fp{static_cast<std::uint32_t>(r), x.p};
}

/// Exact division by a positive integer (for the 1/N! projector weight).
inline Rat div_by_int(const Rat& x, unsigned long n) { return x / Rat(static_cast<long>(n)); }
inline Fp div_by_int(const Fp& x, unsigned long n) {
    std::uint32_t r = static_cast<std::uint32_t>(n % x.p);
    if (r == 0)
        throw Error(ErrorCode::BadArgument,
                    "division by " + std::to_string(n) + " is not invertible mod " + std::to_string(x.p));
    return x * Fp{fp_inv(r, x.p), x.p};
}

std::string scalar_to_string(const Rat& x);
std::string scalar_to_string(const Fp& x);

} // namespace bfgeo
