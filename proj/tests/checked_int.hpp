// Copyright 2026 The bfgeo Authors
// SPDX-License-Identifier: Apache-2.0

// Test-only scalar: int64 with overflow traps. Used where a determinant is
// known to stay far below 2^63 (column denominators cleared first) and the
// arithmetic volume makes GMP rationals needlessly slow. Any overflow throws
// instead of wrapping, so a wrong bound fails loudly.

#pragma once

#include <bfgeo/errors.hpp>

#include <cstdint>
#include <string>

namespace bfgeo {

struct CheckedInt {
    std::int64_t v = 0;

    friend bool operator==(const CheckedInt&, const CheckedInt&) = default;

    friend CheckedInt operator+(const CheckedInt& a, const CheckedInt& b) {
        CheckedInt r;
        if (__builtin_add_overflow(a.v, b.v, &r.v))
            throw Error(ErrorCode::ResourceGuard, "checked int64 overflow in +");
        return r;
    }
    friend CheckedInt operator-(const CheckedInt& a, const CheckedInt& b) {
        CheckedInt r;
        if (__builtin_sub_overflow(a.v, b.v, &r.v))
            throw Error(ErrorCode::ResourceGuard, "checked int64 overflow in -");
        return r;
    }
    friend CheckedInt operator-(const CheckedInt& a) { return CheckedInt{0} - a; }
    friend CheckedInt operator*(const CheckedInt& a, const CheckedInt& b) {
        CheckedInt r;
        if (__builtin_mul_overflow(a.v, b.v, &r.v))
            throw Error(ErrorCode::ResourceGuard, "checked int64 overflow in *");
        return r;
    }
    friend CheckedInt& operator+=(CheckedInt& a, const CheckedInt& b) { return a = a + b; }
    friend CheckedInt& operator-=(CheckedInt& a, const CheckedInt& b) { return a = a - b; }
    friend CheckedInt& operator*=(CheckedInt& a, const CheckedInt& b) { return a = a * b; }
};

inline CheckedInt zero_like(const CheckedInt&) { return CheckedInt{0}; }
inline CheckedInt one_like(const CheckedInt&) { return CheckedInt{1}; }
inline bool is_zero(const CheckedInt& x) { return x.v == 0; }
inline CheckedInt int_like(const CheckedInt&, long n) { return CheckedInt{n}; }
inline void normalize_scalar(CheckedInt&) {}
inline std::string scalar_to_string(const CheckedInt& x) { return std::to_string(x.v); }

} // namespace bfgeo
