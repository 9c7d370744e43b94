// Copyright 2026 The bfgeo Authors
// SPDX-License-Identifier: Apache-2.0

#include <bfgeo/field.hpp>

namespace bfgeo {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::BadArgument: return "bad-argument";
        case ErrorCode::BadProfile: return "bad-profile";
        case ErrorCode::ModeMismatch: return "mode-mismatch";
        case ErrorCode::ParticleMismatch: return "particle-mismatch";
        case ErrorCode::DimensionMismatch: return "dimension-mismatch";
        case ErrorCode::NotTailSymmetric: return "not-tail-symmetric";
        case ErrorCode::ParseError: return "parse-error";
        case ErrorCode::ResourceGuard: return "resource-guard";
        case ErrorCode::IoError: return "io-error";
    }
    return "unknown";
}

std::uint32_t fp_pow(std::uint32_t base, std::uint64_t exp, std::uint32_t p) {
    std::uint64_t acc = 1, b = base % p;
    while (exp) {
        if (exp & 1) acc = acc * b % p;
        b = b * b % p;
        exp >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0)
        throw Error(ErrorCode::BadArgument, "inverse of 0 mod " + std::to_string(p));
    return fp_pow(a, p - 2, p);
}

bool is_probable_prime(std::uint64_t n) {
    mpz_class z(static_cast<unsigned long>(n));
    return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

std::string scalar_to_string(const Rat& x) {
    return x.get_str();
}

std::string scalar_to_string(const Fp& x) {
    return std::to_string(x.v) + " mod " + std::to_string(x.p);
}

} // namespace bfgeo
