// Copyright 2026 The bfgeo Authors
// SPDX-License-Identifier: Apache-2.0

#include <bfgeo/fp_kernels.hpp>

#include <cstdlib>
#include <cstring>

namespace bfgeo::fpk {

void axpy_scalar(std::uint32_t* y, const std::uint32_t* x, std::size_t n,
                 std::uint32_t a, std::uint32_t p) {
    const std::uint64_t a64 = a % p;
    for (std::size_t i = 0; i < n; ++i)
        y[i] = static_cast<std::uint32_t>((a64 * x[i] + y[i]) % p);
}

void scale_scalar(std::uint32_t* y, std::size_t n, std::uint32_t a, std::uint32_t p) {
    const std::uint64_t a64 = a % p;
    for (std::size_t i = 0; i < n; ++i)
        y[i] = static_cast<std::uint32_t>(a64 * y[i] % p);
}

namespace {

bool scalar_forced() {
    const char* env = std::getenv("BFGEO_SIMD");
    return env != nullptr && std::strcmp(env, "scalar") == 0;
}

Kernels select_kernels() {
#if BFGEO_HAVE_AVX2_KERNELS
    if (!scalar_forced() && __builtin_cpu_supports("avx2"))
        return Kernels{axpy_avx2, scale_avx2, "avx2"};
#endif
    return Kernels{axpy_scalar, scale_scalar, "scalar"};
}

} // namespace

const Kernels& kernels() {
    static const Kernels k = select_kernels();
    return k;
}

} // namespace bfgeo::fpk
