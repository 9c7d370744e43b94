// Copyright 2026 The bfgeo Authors
// SPDX-License-Identifier: Apache-2.0

#include <bfgeo/field.hpp>
#include <bfgeo/fp_kernels.hpp>
#include <bfgeo/rng.hpp>

#include <doctest.h>

#include <vector>

using namespace bfgeo;

namespace {

// Oracle with an independent wide-arithmetic route.
std::uint32_t axpy_one(std::uint32_t y, std::uint32_t x, std::uint32_t a, std::uint32_t p) {
    const unsigned __int128 t = static_cast<unsigned __int128>(a) * x + y;
    return static_cast<std::uint32_t>(t % p);
}

} // namespace

TEST_CASE("scalar axpy matches the wide-arithmetic oracle") {
    SplitMix64 rng(42);
    const std::uint32_t primes[] = {2147483647u, 1073741827u};
    for (std::uint32_t p : primes) {
        for (int rep = 0; rep < 20; ++rep) {
            const std::size_t n = rng.next_below(70);
            std::vector<std::uint32_t> x(n), y(n), expect(n);
            const std::uint32_t a = static_cast<std::uint32_t>(rng.next_below(p));
            for (std::size_t i = 0; i < n; ++i) {
                x[i] = static_cast<std::uint32_t>(rng.next_below(p));
                y[i] = static_cast<std::uint32_t>(rng.next_below(p));
                expect[i] = axpy_one(y[i], x[i], a, p);
            }
            fpk::axpy_scalar(y.data(), x.data(), n, a, p);
            CHECK(y == expect);
        }
    }
}

#if BFGEO_HAVE_AVX2_KERNELS
TEST_CASE("avx2 kernels agree with the scalar reference bit-for-bit") {
    if (!__builtin_cpu_supports("avx2")) return; // nothing to compare on this host
    SplitMix64 rng(7);
    const std::uint32_t primes[] = {2147483647u, 1073741827u, 1000000007u};
    for (std::uint32_t p : primes) {
        for (std::size_t n : {std::size_t(0), std::size_t(1), std::size_t(7), std::size_t(8),
                              std::size_t(9), std::size_t(64), std::size_t(129), std::size_t(1000)}) {
            std::vector<std::uint32_t> x(n), y0(n);
            for (std::size_t i = 0; i < n; ++i) {
                x[i] = static_cast<std::uint32_t>(rng.next_below(p));
                y0[i] = static_cast<std::uint32_t>(rng.next_below(p));
            }
            const std::uint32_t edge[] = {0u, 1u, p - 1, static_cast<std::uint32_t>(rng.next_below(p))};
            for (std::uint32_t a : edge) {
                std::vector<std::uint32_t> ys = y0, yv = y0;
                fpk::axpy_scalar(ys.data(), x.data(), n, a, p);
                fpk::axpy_avx2(yv.data(), x.data(), n, a, p);
                CHECK(ys == yv);

                std::vector<std::uint32_t> ss = y0, sv = y0;
                fpk::scale_scalar(ss.data(), n, a, p);
                fpk::scale_avx2(sv.data(), n, a, p);
                CHECK(ss == sv);
            }
            // Extreme residues stress the conditional subtracts.
            std::vector<std::uint32_t> hi(n, p - 1), hi2(n, p - 1);
            std::vector<std::uint32_t> xs(n, p - 1);
            fpk::axpy_scalar(hi.data(), xs.data(), n, p - 1, p);
            fpk::axpy_avx2(hi2.data(), xs.data(), n, p - 1, p);
            CHECK(hi == hi2);
        }
    }
}
#endif

TEST_CASE("runtime dispatch honors the BFGEO_SIMD override") {
    // The suite only checks that a backend was selected and is callable.
    const auto& k = fpk::kernels();
    CHECK(k.axpy != nullptr);
    CHECK(k.scale != nullptr);
    std::vector<std::uint32_t> y{1, 2, 3}, x{4, 5, 6};
    k.axpy(y.data(), x.data(), 3, 2, 101);
    CHECK(y == std::vector<std::uint32_t>{9, 12, 15});
}

TEST_CASE("F_p inverse and power") {
    const std::uint32_t p = 2147483647u;
    SplitMix64 rng(3);
    for (int i = 0; i < 50; ++i) {
        const std::uint32_t a = static_cast<std::uint32_t>(rng.next_below(p - 1)) + 1;
        const std::uint32_t inv = fp_inv(a, p);
        CHECK(static_cast<std::uint64_t>(a) * inv % p == 1);
    }
    CHECK(fp_pow(2, 10, p) == 1024);
    CHECK_THROWS_AS(fp_inv(0, p), Error);
}

TEST_CASE("Fp arithmetic checks the modulus") {
    Fp a{5, 101}, b{7, 103};
    CHECK_THROWS_AS(a + b, Error);
    Fp c{100, 101}, d{5, 101};
    CHECK((c + d).v == 4);
    CHECK((c * d).v == 500 % 101);
    CHECK((-Fp{0, 101}).v == 0);
    CHECK(div_by_int(Fp{1, 101}, 2).v == 51); // (p+1)/2
}
