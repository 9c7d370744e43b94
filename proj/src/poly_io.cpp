// Copyright 2026 The bfgeo Authors
// SPDX-License-Identifier: Apache-2.0

#include <bfgeo/poly_io.hpp>

namespace bfgeo {

namespace {

[[noreturn]] void bad(const std::string& what) {
    throw Error(ErrorCode::ParseError, what);
}

Monomial exp_from_json(const Json& exp, unsigned n) {
    Monomial m(n);
    long last_key = -1;
    for (const auto& triple : exp) {
        if (!triple.is_array() || triple.size() != 3) bad("exp entries must be [i,a,e] triples");
        const long i = triple[0].get<long>();
        const long a = triple[1].get<long>();
        const long e = triple[2].get<long>();
        if (i < 1 || i > long(n) || a < 1 || a > long(kCoords) || e < 1 || e > 0xffff)
            bad("exp triple out of range");
        const long key = kCoords * (i - 1) + (a - 1);
        if (key <= last_key) bad("exp triples must be sorted by (i,a) without repeats");
        last_key = key;
        m = m * Monomial::variable(n, unsigned(i), unsigned(a), unsigned(e));
    }
    return m;
}

template <class K, class ParseCoef>
Polynomial<K> poly_from_json_impl(const Json& j, ParseCoef parse_coef) {
    if (!j.is_object() || !j.contains("n") || !j.contains("terms")) bad("polynomial JSON needs {n, terms}");
    const long n_raw = j["n"].get<long>();
    if (n_raw < 1 || n_raw > 64) bad("particle count out of range");
    const unsigned n = unsigned(n_raw);
    std::vector<typename Polynomial<K>::Term> terms;
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("exp") || !t.contains("coef")) bad("term needs {exp, coef}");
        terms.emplace_back(exp_from_json(t["exp"], n), parse_coef(t["coef"].get<std::string>()));
    }
    return Polynomial<K>::from_terms(n, std::move(terms));
}

} // namespace

Rat rat_from_string(const std::string& s) {
    if (s.empty() || s.find(" mod ") != std::string::npos)
        bad("expected rational coefficient, got '" + s + "'");
    mpq_class q;
    if (q.set_str(s, 10) != 0) bad("unparsable rational '" + s + "'");
    if (sgn(q.get_den()) <= 0) bad("rational with nonpositive denominator '" + s + "'");
    q.canonicalize();
    return q;
}

Fp fp_from_string(const std::string& s) {
    const auto pos = s.find(" mod ");
    if (pos == std::string::npos) bad("expected 'v mod p' coefficient, got '" + s + "'");
    try {
        const unsigned long v = std::stoul(s.substr(0, pos));
        const unsigned long p = std::stoul(s.substr(pos + 5));
        if (p < 3 || p >= (1ul << 31)) bad("prime out of range in '" + s + "'");
        return Fp{v, static_cast<std::uint32_t>(p)};
    } catch (const std::logic_error&) {
        bad("unparsable field coefficient '" + s + "'");
    }
}

RatPoly rat_poly_from_json(const Json& j) {
    return poly_from_json_impl<Rat>(j, rat_from_string);
}

FpPoly fp_poly_from_json(const Json& j, std::uint32_t prime) {
    std::uint32_t expected = prime;
    auto parse = [&expected](const std::string& s) {
        Fp c = fp_from_string(s);
        if (expected == 0) expected = c.p;
        if (c.p != expected)
            throw Error(ErrorCode::ModeMismatch, "mixed primes in polynomial JSON");
        return c;
    };
    return poly_from_json_impl<Fp>(j, parse);
}

bool poly_json_is_fp(const Json& j) {
    if (!j.is_object() || !j.contains("terms")) bad("polynomial JSON needs {n, terms}");
    for (const auto& t : j["terms"]) {
        if (!t.contains("coef")) bad("term needs coef");
        return t["coef"].get<std::string>().find(" mod ") != std::string::npos;
    }
    return false; // empty polynomial: mode decided by the caller
}

} // namespace bfgeo
