// Copyright 2026 The bfgeo Authors
// SPDX-License-Identifier: Apache-2.0

// AVX2 mod-p kernels. Multiplication by the loop-invariant scalar a uses the
// precomputed-quotient (Shoup) form: with a' = floor(a*2^32/p) and x < p,
//   q = (a' * x) >> 32,  r = a*x - q*p  satisfies  0 <= r < 2p,
// so one conditional subtract reduces r, all in 32x32->64 multiplies.
// Guarded by runtime dispatch in fp_kernels.cpp; only compiled on x86-64.

#include <bfgeo/fp_kernels.hpp>

#if BFGEO_HAVE_AVX2_KERNELS

#include <immintrin.h>

namespace bfgeo::fpk {

namespace {

// 8-lane Shoup product r[i] = (a * v[i]) mod p, lanes already < p.
inline __m256i mulmod8(__m256i v, __m256i a_lo, __m256i a_shoup, __m256i p_vec) {
    const __m256i hi_mask = _mm256_set1_epi64x(static_cast<long long>(0xFFFFFFFF00000000ULL));
    const __m256i prod_even = _mm256_mul_epu32(v, a_shoup);
    const __m256i prod_odd = _mm256_mul_epu32(_mm256_srli_epi64(v, 32), a_shoup);
    const __m256i q = _mm256_or_si256(_mm256_srli_epi64(prod_even, 32),
                                      _mm256_and_si256(prod_odd, hi_mask));
    __m256i r = _mm256_sub_epi32(_mm256_mullo_epi32(v, a_lo), _mm256_mullo_epi32(q, p_vec));
    r = _mm256_min_epu32(r, _mm256_sub_epi32(r, p_vec));
    return r;
}

inline __m256i addmod8(__m256i a, __m256i b, __m256i p_vec) {
    const __m256i t = _mm256_add_epi32(a, b);
    return _mm256_min_epu32(t, _mm256_sub_epi32(t, p_vec));
}

} // namespace

void axpy_avx2(std::uint32_t* y, const std::uint32_t* x, std::size_t n,
               std::uint32_t a, std::uint32_t p) {
    const std::uint32_t ar = a % p;
    const std::uint64_t shoup = (static_cast<std::uint64_t>(ar) << 32) / p;
    const __m256i a_lo = _mm256_set1_epi32(static_cast<int>(ar));
    const __m256i a_sh = _mm256_set1_epi64x(static_cast<long long>(shoup));
    const __m256i p_vec = _mm256_set1_epi32(static_cast<int>(p));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256i xv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        const __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        const __m256i r = mulmod8(xv, a_lo, a_sh, p_vec);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), addmod8(yv, r, p_vec));
    }
    if (i < n) axpy_scalar(y + i, x + i, n - i, ar, p);
}

void scale_avx2(std::uint32_t* y, std::size_t n, std::uint32_t a, std::uint32_t p) {
    const std::uint32_t ar = a % p;
    const std::uint64_t shoup = (static_cast<std::uint64_t>(ar) << 32) / p;
    const __m256i a_lo = _mm256_set1_epi32(static_cast<int>(ar));
    const __m256i a_sh = _mm256_set1_epi64x(static_cast<long long>(shoup));
    const __m256i p_vec = _mm256_set1_epi32(static_cast<int>(p));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), mulmod8(yv, a_lo, a_sh, p_vec));
    }
    if (i < n) scale_scalar(y + i, n - i, ar, p);
}

} // namespace bfgeo::fpk

#endif // BFGEO_HAVE_AVX2_KERNELS
