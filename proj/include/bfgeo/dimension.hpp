// Copyright 2026 The bfgeo Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file dimension.hpp
 * @brief Exact source/target dimensions, the coarse bound formulas, their
 *        asymptotics, and the minimal-degree / determinant-count thresholds.
 *
 * The target is the degree-D slice of the N-th wedge power of the 3-variable
 * polynomial ring: its dimension counts N-element sets of distinct monomials
 * with degrees summing to D. The source is parametrized per degree profile by
 * one tail-symmetric column space per column.
 */

#pragma once

#include <bfgeo/combinat.hpp>

#include <optional>
#include <string>
#include <vector>

namespace bfgeo::dimension {

using combinat::DegreeProfile;

/// N-subsets of distinct monomials in 3 variables with degree sum D,
/// by dynamic programming over degree blocks.
BigInt target_dim_exact(unsigned n, unsigned D);

/// Restricted sum over strictly increasing degree tuples with
/// p_1 >= ceil(D / 2N): always a lower bound for target_dim_exact.
BigInt target_dim_paper_lower(unsigned n, unsigned D);

/// Leading term D^{3N-1} e^{2N-1} / (pi 2^{4N} N^{4N-2}).
long double target_dim_asymptotic(unsigned n, unsigned long D);

/// Dimension of the degree-d tail-symmetric column space: monomials on the
/// own slot times multisets of N-1 monomials on the tail.
BigInt source_column_dim_exact(unsigned n, unsigned d);

/// Sum of column dimensions over the profile.
BigInt source_dim_exact(unsigned n, const DegreeProfile& profile);

/// Product-count upper bound per column: sum over nondecreasing tail degree
/// tuples of C(z+2,2) * prod C(delta_i+2,2). Overcounts orbit sums.
BigInt source_column_dim_paper(unsigned n, unsigned d);

BigInt source_dim_paper(unsigned n, const DegreeProfile& profile);

/// Leading term D^{3N-1} e^{2N-3} / (N^{7N-4} 2^{N+1} pi).
long double source_dim_asymptotic(unsigned n, unsigned long D);

/// Number of multisets of `count` monomials in 3 variables with total
/// degree `total`. Counts tail orbits; exposed for cross-checks.
BigInt monomial_multiset_count(unsigned count, unsigned total);

/// Smallest D with target_dim_exact(n, D) > 0: greedily fill the cheapest
/// monomial degrees (block delta holds C(delta+2,2) monomials).
unsigned min_degree(unsigned n);

/// N^{3N-3}, the determinant-count threshold. Requires n >= 2.
BigInt determinant_count_bound(unsigned n);

/// The profile closest to d_j = D/N: floor values first, ceil values last.
DegreeProfile balanced_profile(unsigned n, unsigned D);

struct GapReport {
    unsigned n = 0;
    unsigned degree = 0;
    BigInt target_exact;
    BigInt target_paper_lower;
    long double target_asymptotic = 0.0L;
    DegreeProfile best_profile; // argmax of source_dim_exact over all profiles
    BigInt source_exact_best;
    BigInt source_paper_best;
    DegreeProfile balanced;
    BigInt source_exact_balanced;
    BigInt source_paper_balanced;
    long double source_asymptotic = 0.0L;
    double ratio_target_over_best_source = 0.0;
    unsigned min_degree = 0;
    std::optional<BigInt> det_count_bound; // absent for n = 1
    std::vector<std::string> discrepancy_flags;
};

/// Bundles every dimension figure for one (n, D), including the argmax
/// profile of the exact source dimension.
GapReport gap_report(unsigned n, unsigned D);

double bigint_ratio(const BigInt& numerator, const BigInt& denominator);

} // namespace bfgeo::dimension
