// Copyright 2026 The bfgeo Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fp_kernels.hpp
 * @brief Dense mod-p vector kernels: scalar reference and SIMD variants.
 *
 * These are the inner loops of the rank elimination. Residues are uint32
 * values in [0, p) with p an odd prime below 2^31, so a 32x32 product fits
 * in 64 bits. The scalar kernels are the reference semantics; the AVX2
 * variants must agree bit-for-bit and are selected once at startup
 * (BFGEO_SIMD=scalar forces the reference path).
 */

#pragma once

#include <cstddef>
#include <cstdint>

namespace bfgeo::fpk {

/// y[i] = (y[i] + a * x[i]) mod p. a need not be reduced below p.
void axpy_scalar(std::uint32_t* y, const std::uint32_t* x, std::size_t n,
                 std::uint32_t a, std::uint32_t p);

/// y[i] = (a * y[i]) mod p.
void scale_scalar(std::uint32_t* y, std::size_t n, std::uint32_t a, std::uint32_t p);

#if defined(__x86_64__) || defined(_M_X64)
#define BFGEO_HAVE_AVX2_KERNELS 1
void axpy_avx2(std::uint32_t* y, const std::uint32_t* x, std::size_t n,
               std::uint32_t a, std::uint32_t p);
void scale_avx2(std::uint32_t* y, std::size_t n, std::uint32_t a, std::uint32_t p);
#else
#define BFGEO_HAVE_AVX2_KERNELS 0
#endif

using AxpyFn = void (*)(std::uint32_t*, const std::uint32_t*, std::size_t, std::uint32_t, std::uint32_t);
using ScaleFn = void (*)(std::uint32_t*, std::size_t, std::uint32_t, std::uint32_t);

struct Kernels {
    AxpyFn axpy;
    ScaleFn scale;
    const char* backend; // "scalar" or "avx2"
};

/// Runtime-selected kernel set (CPU feature check + BFGEO_SIMD override).
const Kernels& kernels();

} // namespace bfgeo::fpk
