// Copyright 2026 The bfgeo Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace bfgeo {

/// Machine-readable error codes surfaced by the CLI as {"error":{"code",...}}.
enum class ErrorCode {
    BadArgument,       // malformed flag / value out of domain
    BadProfile,        // profile not nondecreasing or wrong arity
    ModeMismatch,      // rational vs prime-field operands mixed
    ParticleMismatch,  // polynomials with different particle counts
    DimensionMismatch, // evaluation point of wrong shape
    NotTailSymmetric,  // a phi failed the tail-symmetry check
    ParseError,        // unreadable JSON / spec file
    ResourceGuard,     // enumeration or matrix size guard tripped
    IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }
    const char* code_name() const { return error_code_name(code_); }

private:
    ErrorCode code_;
};

} // namespace bfgeo
