// Copyright 2026 The bfgeo Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file combinat.hpp
 * @brief Partition counting and the monomial-space dimension helpers.
 *
 * pbar(k, m) counts partitions of m with at most k parts; qbar(k, m) counts
 * strictly decreasing partitions with k or k-1 parts. Everything is exact
 * big-integer arithmetic; the counts overflow 64 bits quickly.
 */

#pragma once

#include <bfgeo/errors.hpp>
#include <bfgeo/field.hpp>

#include <cstdint>
#include <functional>
#include <vector>

namespace bfgeo::combinat {

/// Weakly decreasing positive parts.
using Partition = std::vector<unsigned long>;

/// Nondecreasing per-column degrees (d_1 <= ... <= d_N).
using DegreeProfile = std::vector<unsigned>;

BigInt binomial(unsigned long n, unsigned long k);

/**
 * Partitions of m with at most k parts, by the induction
 * p_k(m) = sum_{i>=0} p_{k-1}(m - i k), evaluated as the telescoped
 * two-term DP p_k(m) = p_{k-1}(m) + p_k(m - k) over an O(k m) table.
 *
 * Convention: pbar(0, 0) = 1 (empty partition); k = 0 with m > 0 is a
 * domain error at the API boundary (the internal table uses 0 there).
 */
BigInt pbar(unsigned k, unsigned long m);

/**
 * Strictly decreasing partitions with k or k-1 parts. Computed through the
 * staircase bijection qbar(k, m + C(k,2)) = pbar(k, m); below the staircase
 * weight the direct enumeration (which finds nothing) is used.
 */
BigInt qbar(unsigned k, unsigned long m);

/// Leading term m^{k-1} / (k! (k-1)!) in extended precision.
long double pbar_asymptotic(unsigned k, unsigned long m);

/// Dimension of homogeneous degree-d polynomials in 3 variables: C(d+2, 2).
unsigned long dim_sym(unsigned long d);

/**
 * Complete duplicate-free enumeration, largest first part first (the order
 * [5], [4,1], [3,2] for k=2, m=5). strict selects the qbar family.
 * Guard: refuses runs whose count exceeds 10^7.
 */
void for_each_partition(unsigned k, unsigned long m, bool strict,
                        const std::function<void(const Partition&)>& fn);

std::vector<Partition> enumerate_partitions(unsigned k, unsigned long m, bool strict);

/// All nondecreasing n-tuples of nonnegative integers summing to d,
/// lexicographically ascending. Count equals pbar(n, d).
void for_each_profile(unsigned n, unsigned d, const std::function<void(const DegreeProfile&)>& fn);

std::vector<DegreeProfile> enumerate_profiles(unsigned n, unsigned d);

} // namespace bfgeo::combinat
