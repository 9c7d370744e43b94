// Copyright 2026 The bfgeo Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file ansatz.hpp
 * @brief Tail-symmetric column spaces, the backflow matrix/determinant, and
 *        the Slater/Vandermonde special cases.
 *
 * A column function phi(x; y_2..y_N) lives in the N-particle ring with slot 1
 * as the "own" particle and slots 2..N as the tail; it must be symmetric
 * under tail permutations. Row i of the backflow matrix substitutes particle
 * i for the own slot and (1..N minus i), in ascending order, for the tail.
 * The determinant of that matrix is totally antisymmetric in the particles.
 */

#pragma once

#include <bfgeo/combinat.hpp>
#include <bfgeo/polynomial.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace bfgeo::ansatz {

using combinat::DegreeProfile;

inline constexpr unsigned kMaxDetParticles = 8; // permutation-expansion guard

// ---------------------------------------------------------------------------
// Basis structure (coefficient-field independent)
// ---------------------------------------------------------------------------

/// Exponents of a monomial in one particle's three coordinates.
using CoordMonomial = std::array<std::uint16_t, 3>;

/// All coordinate monomials of exact degree d, lex-descending:
/// (d,0,0), (d-1,1,0), (d-1,0,1), ...
std::vector<CoordMonomial> coord_monomials(unsigned d);

/// Degrees 0..max_degree concatenated (degree-major). Basis keys index into
/// this flat list.
std::vector<CoordMonomial> coord_monomials_upto(unsigned max_degree);

/**
 * One tail-symmetric basis element: own-slot monomial of degree z times the
 * orbit sum of a tail monomial multiset (indices into coord_monomials_upto,
 * nondecreasing). The orbit sum runs over distinct arrangements, so every
 * coefficient is 1.
 */
struct TailBasisKey {
    unsigned z = 0;                         // own-slot degree
    std::uint32_t own = 0;                  // flat index of the own monomial
    std::vector<std::uint32_t> tail;        // flat indices, nondecreasing
};

/// Canonical key order: z descending (pure own-slot elements first), then
/// own index ascending, then tail multiset ascending.
std::vector<TailBasisKey> tail_basis_keys(unsigned n, unsigned d);

// ---------------------------------------------------------------------------
// Column functions
// ---------------------------------------------------------------------------

template <class K>
struct PhiFunction {
    Polynomial<K> poly;  // in the N-particle slot ring
    unsigned degree = 0; // declared homogeneous degree
};

/// Validates tail symmetry and homogeneity (zero polynomials pass with any
/// declared degree).
template <class K>
PhiFunction<K> make_phi(Polynomial<K> poly, unsigned degree) {
    if (!poly.is_zero_poly()) {
        if (!poly.is_homogeneous() || poly.degree() != degree)
            throw Error(ErrorCode::BadArgument, "phi must be homogeneous of its declared degree");
    }
    if (!poly.symmetry_check(SymmetryKind::SymmetricTail))
        throw Error(ErrorCode::NotTailSymmetric, "phi is not symmetric in the tail slots");
    return PhiFunction<K>{std::move(poly), degree};
}

template <class K>
struct TailSymBasis {
    unsigned n = 0;
    unsigned degree = 0;
    std::vector<TailBasisKey> keys;
    std::vector<Polynomial<K>> elements; // same order as keys
    std::size_t size() const { return elements.size(); }
};

namespace detail {

template <class K>
Polynomial<K> materialize_key(unsigned n, const TailBasisKey& key,
                              const std::vector<CoordMonomial>& flat, const K& one) {
    auto place = [n](const CoordMonomial& cm, unsigned particle) {
        Monomial m(n);
        for (unsigned a = 0; a < kCoords; ++a)
            if (cm[a] > 0) m = m * Monomial::variable(n, particle, a + 1, cm[a]);
        return m;
    };
    const Monomial own = place(flat[key.own], 1);
    std::vector<typename Polynomial<K>::Term> terms;
    std::vector<std::uint32_t> arrangement = key.tail; // sorted: first arrangement
    do {
        Monomial m = own;
        for (unsigned t = 0; t < arrangement.size(); ++t)
            m = m * place(flat[arrangement[t]], 2 + t);
        terms.emplace_back(std::move(m), one);
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    return Polynomial<K>::from_terms(n, std::move(terms));
}

} // namespace detail

/// The full degree-d tail-symmetric column space as an explicit basis.
/// Element count equals dimension::source_column_dim_exact(n, d).
template <class K>
TailSymBasis<K> tail_sym_basis(unsigned n, unsigned d, const K& one) {
    if (n == 0) throw Error(ErrorCode::BadArgument, "basis needs n >= 1");
    TailSymBasis<K> basis;
    basis.n = n;
    basis.degree = d;
    basis.keys = tail_basis_keys(n, d);
    const auto flat = coord_monomials_upto(d);
    basis.elements.reserve(basis.keys.size());
    for (const auto& key : basis.keys)
        basis.elements.push_back(detail::materialize_key<K>(n, key, flat, one));
    return basis;
}

/// Own-slot-only sub-basis (the Slater column space of degree d).
template <class K>
TailSymBasis<K> slater_basis(unsigned n, unsigned d, const K& one) {
    TailSymBasis<K> basis = tail_sym_basis<K>(n, d, one);
    TailSymBasis<K> out;
    out.n = n;
    out.degree = d;
    for (std::size_t i = 0; i < basis.keys.size(); ++i) {
        if (basis.keys[i].z != d) continue;
        out.keys.push_back(basis.keys[i]);
        out.elements.push_back(basis.elements[i]);
    }
    return out;
}

template <class K>
PhiFunction<K> assemble_phi(const TailSymBasis<K>& basis, const std::vector<K>& coeffs) {
    if (coeffs.size() != basis.size())
        throw Error(ErrorCode::BadArgument,
                    "coefficient count " + std::to_string(coeffs.size()) + " does not match basis size " +
                        std::to_string(basis.size()));
    Polynomial<K> sum(basis.n);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (!is_zero(coeffs[i])) sum = sum + basis.elements[i].scaled(coeffs[i]);
    // Tail symmetry and homogeneity hold by linearity; revalidate cheaply.
    return make_phi(std::move(sum), basis.degree);
}

// ---------------------------------------------------------------------------
// Backflow matrix and determinant
// ---------------------------------------------------------------------------

/// Slot-to-particle relabeling for row i: slot 1 -> i, slots 2..N -> the
/// ascending list (1..N minus i).
ParticlePermutation row_substitution(unsigned n, unsigned row);

template <class K>
using PolyMatrix = std::vector<std::vector<Polynomial<K>>>;

template <class K>
void validate_phis(const std::vector<PhiFunction<K>>& phis) {
    if (phis.empty()) throw Error(ErrorCode::BadArgument, "need at least one column");
    const unsigned n = phis[0].poly.particles();
    if (phis.size() != n)
        throw Error(ErrorCode::BadArgument, "need exactly N columns for N particles");
    for (std::size_t j = 0; j < phis.size(); ++j) {
        if (phis[j].poly.particles() != n)
            throw Error(ErrorCode::ParticleMismatch, "column " + std::to_string(j + 1) + " uses a different N");
        if (!phis[j].poly.symmetry_check(SymmetryKind::SymmetricTail))
            throw Error(ErrorCode::NotTailSymmetric,
                        "column " + std::to_string(j + 1) + " is not tail-symmetric");
    }
}

/// Entry (i, j) = phi_j with slot 1 -> particle i, tail slots -> the others.
template <class K>
PolyMatrix<K> backflow_matrix(const std::vector<PhiFunction<K>>& phis) {
    validate_phis(phis);
    const unsigned n = phis[0].poly.particles();
    PolyMatrix<K> m(n, std::vector<Polynomial<K>>(n, Polynomial<K>(n)));
    for (unsigned i = 1; i <= n; ++i) {
        const ParticlePermutation sub = row_substitution(n, i);
        for (unsigned j = 0; j < n; ++j) m[i - 1][j] = phis[j].poly.permuted(sub);
    }
    return m;
}

namespace detail {

/**
 * Signed permutation expansion as a subset DP over rows, processing columns
 * left to right (optionally skipping one column). dp[mask] after k columns
 * is det(rows in mask, first k processed columns); each state is built with
 * one fused product-sum so every minor is multiplied out and sorted once.
 */
template <class K>
std::vector<Polynomial<K>> det_subset_dp(const PolyMatrix<K>& m, int skip_col) {
    const unsigned n = static_cast<unsigned>(m.size());
    const unsigned ring_n = m[0][0].particles();
    std::vector<Polynomial<K>> dp(std::size_t(1) << n, Polynomial<K>(ring_n));
    bool first = true;
    unsigned done = 0;
    for (unsigned col = 0; col < n; ++col) {
        if (static_cast<int>(col) == skip_col) continue;
        std::vector<Polynomial<K>> next(std::size_t(1) << n, Polynomial<K>(ring_n));
        if (first) {
            for (unsigned r = 0; r < n; ++r) next[std::size_t(1) << r] = m[r][col];
            first = false;
        } else {
            for (std::size_t to = 0; to < next.size(); ++to) {
                if (__builtin_popcountll(to) != static_cast<int>(done + 1)) continue;
                std::vector<typename Polynomial<K>::ProductPart> parts;
                for (unsigned r = 0; r < n; ++r) {
                    if (!(to & (std::size_t(1) << r))) continue;
                    const std::size_t src = to & ~(std::size_t(1) << r);
                    if (dp[src].is_zero_poly()) continue;
                    const std::size_t below = src & ((std::size_t(1) << r) - 1);
                    const bool negative =
                        ((__builtin_popcountll(below) + __builtin_popcountll(src)) & 1) != 0;
                    parts.push_back({&m[r][col], &dp[src], negative});
                }
                next[to] = Polynomial<K>::product_sum(ring_n, parts);
            }
        }
        ++done;
        dp = std::move(next);
    }
    return dp;
}

} // namespace detail

/// Determinant by signed permutation expansion (subset DP, N <= 8 guard).
template <class K>
Polynomial<K> determinant(const PolyMatrix<K>& m) {
    const unsigned n = static_cast<unsigned>(m.size());
    if (n == 0 || m[0].size() != n)
        throw Error(ErrorCode::BadArgument, "determinant needs a square matrix");
    if (n > kMaxDetParticles)
        throw Error(ErrorCode::ResourceGuard, "determinant expansion limited to N <= 8");
    auto dp = detail::det_subset_dp(m, -1);
    return dp[(std::size_t(1) << n) - 1];
}

/// minors[i][j] = determinant of m with row i and column j removed (0-based).
template <class K>
PolyMatrix<K> first_minors(const PolyMatrix<K>& m) {
    const unsigned n = static_cast<unsigned>(m.size());
    if (n < 2) throw Error(ErrorCode::BadArgument, "first minors need a matrix of size >= 2");
    if (n > kMaxDetParticles)
        throw Error(ErrorCode::ResourceGuard, "determinant expansion limited to N <= 8");
    const unsigned ring_n = m[0][0].particles();
    PolyMatrix<K> minors(n, std::vector<Polynomial<K>>(n, Polynomial<K>(ring_n)));
    const std::size_t full = (std::size_t(1) << n) - 1;
    for (unsigned j = 0; j < n; ++j) {
        auto dp = detail::det_subset_dp(m, static_cast<int>(j));
        for (unsigned i = 0; i < n; ++i)
            minors[i][j] = std::move(dp[full & ~(std::size_t(1) << i)]);
    }
    return minors;
}

template <class K>
Polynomial<K> backflow_det(const std::vector<PhiFunction<K>>& phis) {
    return determinant(backflow_matrix(phis));
}

// ---------------------------------------------------------------------------
// Special cases
// ---------------------------------------------------------------------------

/// phi_j(x; y) = x[1]^(j-1): the determinant is the Vandermonde determinant
/// in the first coordinates, prod_{i<j} (x[j][1] - x[i][1]).
template <class K>
std::vector<PhiFunction<K>> vandermonde_phis(unsigned n, const K& one) {
    std::vector<PhiFunction<K>> phis;
    phis.reserve(n);
    for (unsigned j = 0; j < n; ++j) {
        Polynomial<K> p = j == 0 ? Polynomial<K>::constant(n, one)
                                 : Polynomial<K>::variable(n, 1, 1, one, j);
        phis.push_back(make_phi(std::move(p), j));
    }
    return phis;
}

/// Wraps own-slot-only orbitals; rejects polynomials touching tail slots.
template <class K>
std::vector<PhiFunction<K>> slater_phis(const std::vector<Polynomial<K>>& orbitals) {
    std::vector<PhiFunction<K>> phis;
    phis.reserve(orbitals.size());
    for (std::size_t j = 0; j < orbitals.size(); ++j) {
        const auto& p = orbitals[j];
        for (const auto& [mono, coef] : p.terms())
            for (unsigned i = 2; i <= p.particles(); ++i)
                if (mono.particle_degree(i) != 0)
                    throw Error(ErrorCode::BadArgument,
                                "slater orbital " + std::to_string(j + 1) + " depends on a tail slot");
        if (!p.is_homogeneous())
            throw Error(ErrorCode::BadArgument,
                        "slater orbital " + std::to_string(j + 1) + " is not homogeneous");
        phis.push_back(make_phi(p, p.degree().value_or(0)));
    }
    return phis;
}

// ---------------------------------------------------------------------------
// Ansatz configurations (the source of the ansatz map)
// ---------------------------------------------------------------------------

template <class K>
struct AnsatzConfig {
    unsigned n = 0;
    DegreeProfile profile;
    std::vector<TailSymBasis<K>> columns;

    std::size_t param_count() const {
        std::size_t total = 0;
        for (const auto& c : columns) total += c.size();
        return total;
    }
};

void validate_profile(unsigned n, const DegreeProfile& profile);

/// Configuration with the full tail-symmetric basis in every column.
template <class K>
AnsatzConfig<K> make_config(unsigned n, const DegreeProfile& profile, const K& one) {
    validate_profile(n, profile);
    AnsatzConfig<K> config;
    config.n = n;
    config.profile = profile;
    config.columns.reserve(profile.size());
    for (unsigned d : profile) config.columns.push_back(tail_sym_basis<K>(n, d, one));
    return config;
}

/// Assembles the per-column phis for one parameter vector (coeffs
/// concatenated column-major in canonical basis order).
template <class K>
std::vector<PhiFunction<K>> assemble_columns(const AnsatzConfig<K>& config, const std::vector<K>& coeffs) {
    if (coeffs.size() != config.param_count())
        throw Error(ErrorCode::BadArgument, "parameter vector has wrong length");
    std::vector<PhiFunction<K>> phis;
    phis.reserve(config.columns.size());
    std::size_t offset = 0;
    for (const auto& basis : config.columns) {
        std::vector<K> slice(coeffs.begin() + offset, coeffs.begin() + offset + basis.size());
        offset += basis.size();
        phis.push_back(assemble_phi(basis, slice));
    }
    return phis;
}

} // namespace bfgeo::ansatz
