// Copyright 2026 The bfgeo Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file rankprobe.hpp
 * @brief Generic Jacobian ranks, secant (stacked-tangent) ranks, fiber
 *        dimensions, and surjectivity verdicts over a large prime field.
 *
 * The differential of the determinant map is assembled column by column:
 * by multilinearity, the partial derivative with respect to a basis element
 * b of column j is the determinant with column j replaced by b, which the
 * fast path expands as a cofactor sum against precomputed first minors.
 * Ranks are maxima over seeded random points; they lower-bound the generic
 * rank and equal it with high probability.
 */

#pragma once

#include <bfgeo/ansatz.hpp>
#include <bfgeo/dimension.hpp>
#include <bfgeo/rng.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bfgeo::rankprobe {

using ansatz::AnsatzConfig;
using combinat::DegreeProfile;

inline constexpr std::uint32_t kDefaultPrime = 2147483647u; // 2^31 - 1

struct RankOptions {
    unsigned trials = 3;
    std::uint32_t prime = kDefaultPrime;
    std::uint64_t seed = 1;
    std::size_t max_rows = 1'000'000; // support-row guard
};

/// Sub-seed derived from the run seed and the profile content, so a profile
/// probes identically whether run alone or inside a sweep.
std::uint64_t profile_seed(std::uint64_t seed, const DegreeProfile& profile);

/// P independent uniform scalars drawn from the stream.
std::vector<Fp> random_point(const AnsatzConfig<Fp>& config, SplitMix64& stream);

/// All P Jacobian columns at `point`, ordered column-major (j ascending,
/// basis index ascending) — the cofactor fast path.
std::vector<FpPoly> jacobian_columns(const AnsatzConfig<Fp>& config, const std::vector<Fp>& point);

/// Independent route for one column: the full determinant with column j
/// replaced by basis element b (the multilinearity identity).
FpPoly jacobian_column_onehot(const AnsatzConfig<Fp>& config, const std::vector<Fp>& point,
                              std::size_t column_j, std::size_t basis_b);

struct RankComputation {
    unsigned rank = 0;
    std::size_t rows = 0; // support-restricted row count
    std::size_t cols = 0;
};

/// Rank by incremental Gaussian elimination over F_p on the support rows.
RankComputation rank_of_columns(const std::vector<FpPoly>& columns, std::uint32_t prime,
                                std::size_t max_rows);

struct ProfileProbe {
    DegreeProfile profile;
    std::size_t param_count = 0;
    unsigned generic_rank = 0;
    long long fiber_dimension = 0;
    std::map<unsigned, unsigned> secant_ranks; // r -> max rank over trials
    std::optional<unsigned> saturation_r;      // first r that fills the target or stalls
    std::size_t rows = 0;                      // at r = r_max
    std::size_t cols = 0;
    std::uint64_t seed = 0;                    // derived sub-seed
};

/// Probes one profile: per trial draws r_max points from one stream and
/// absorbs their Jacobian blocks incrementally, so secant_ranks[r] is the
/// rank of [J_1 | ... | J_r].
ProfileProbe probe_profile(unsigned n, const DegreeProfile& profile, unsigned r_max,
                           const RankOptions& options, const BigInt& target_dim);

enum class Verdict { SurjectiveEvidence, NotSurjective, Inconclusive };

const char* verdict_name(Verdict v);

/// Pure classification used by reports: `certificate` is the counting-only
/// r*P_max + r < target test (proof-grade); rank evidence otherwise.
Verdict classify_verdict(bool certificate_fires, bool guard_skipped, bool any_profile_fills_target);

struct RankReport {
    unsigned n = 0;
    unsigned degree = 0;
    unsigned r_max = 1;
    RankOptions options;
    BigInt target_dim;
    bool all_profiles = false;
    std::vector<ProfileProbe> profiles;
    BigInt max_param_count;       // max source dimension over probed profiles
    BigInt certificate_lhs;       // r * max_param_count + r
    bool certificate_fires = false;
    bool guard_skipped = false;   // some profile exceeded the row guard
    unsigned max_secant_rank = 0; // over probed profiles, at r = r_max
    Verdict verdict = Verdict::Inconclusive;
    std::string strength;         // "proof" | "evidence" | "none"
    std::optional<BigInt> det_count_bound; // N^{3N-3}, n >= 2
};

/// Probes a single profile (all_profiles = false) or every profile of
/// (n, D). The verdict follows the counting certificate when it fires and
/// the measured ranks otherwise.
RankReport run_rank_report(unsigned n, unsigned D, unsigned r_max, const RankOptions& options,
                           bool all_profiles, const std::optional<DegreeProfile>& profile);

} // namespace bfgeo::rankprobe
