// Copyright 2026 The bfgeo Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file poly_io.hpp
 * @brief JSON wire format for polynomials.
 *
 * {"n": N, "terms": [{"exp": [[i,a,e], ...], "coef": "..."} ...]}
 *
 * Terms appear in canonical graded-lex order (leading term first) and "exp"
 * lists only nonzero exponents sorted by (i, a). Coefficients are strings:
 * "num/den" (denominator omitted when 1) in rational mode, "v mod p" in
 * prime-field mode. Equal polynomials serialize to identical bytes.
 */

#pragma once

#include <bfgeo/polynomial.hpp>

#include <json.hpp>

#include <cstdint>
#include <string>

namespace bfgeo {

using Json = nlohmann::ordered_json;

Rat rat_from_string(const std::string& s);
Fp fp_from_string(const std::string& s);

template <class K>
Json poly_to_json(const Polynomial<K>& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json exp = Json::array();
        for (unsigned i = 1; i <= p.particles(); ++i)
            for (unsigned a = 1; a <= kCoords; ++a)
                if (unsigned e = m.exponent(i, a); e > 0) exp.push_back({i, a, e});
        terms.push_back({{"exp", std::move(exp)}, {"coef", scalar_to_string(c)}});
    }
    return Json{{"n", p.particles()}, {"terms", std::move(terms)}};
}

RatPoly rat_poly_from_json(const Json& j);

/// prime == 0 infers the prime from the first coefficient.
FpPoly fp_poly_from_json(const Json& j, std::uint32_t prime = 0);

/// True when the serialized coefficients use "v mod p" form.
bool poly_json_is_fp(const Json& j);

} // namespace bfgeo
