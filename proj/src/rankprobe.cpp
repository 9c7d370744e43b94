// Copyright 2026 The bfgeo Authors
// SPDX-License-Identifier: Apache-2.0

#include <bfgeo/rankprobe.hpp>

#include <bfgeo/fp_kernels.hpp>

#include <algorithm>
#include <unordered_map>

namespace bfgeo::rankprobe {

std::uint64_t profile_seed(std::uint64_t seed, const DegreeProfile& profile) {
    std::uint64_t h = seed ^ 0x243f6a8885a308d3ULL;
    for (unsigned d : profile) {
        h ^= d + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h = SplitMix64(h).next();
    }
    return h;
}

std::vector<Fp> random_point(const AnsatzConfig<Fp>& config, SplitMix64& stream) {
    if (config.columns.empty() || config.param_count() == 0)
        throw Error(ErrorCode::BadArgument, "configuration has no parameters");
    std::uint32_t prime = 0;
    for (const auto& basis : config.columns)
        for (const auto& el : basis.elements)
            if (!el.is_zero_poly()) {
                prime = el.terms().front().second.p;
                break;
            }
    if (prime == 0) throw Error(ErrorCode::BadArgument, "configuration carries no field-mode basis");
    std::vector<Fp> point;
    point.reserve(config.param_count());
    for (std::size_t i = 0; i < config.param_count(); ++i)
        point.emplace_back(stream.next_below(prime), prime);
    return point;
}

namespace {

// sum_i (-1)^{i+j} subst(b, row i) * minor[i][j], all 0-based.
FpPoly cofactor_column(const AnsatzConfig<Fp>& config, const ansatz::PolyMatrix<Fp>& minors,
                       std::size_t j, const FpPoly& basis_element) {
    const unsigned n = config.n;
    FpPoly col(n);
    for (unsigned i = 0; i < n; ++i) {
        FpPoly piece = basis_element.permuted(ansatz::row_substitution(n, i + 1)) * minors[i][j];
        col = ((i + j) % 2 == 0) ? col + piece : col - piece;
    }
    return col;
}

} // namespace

std::vector<FpPoly> jacobian_columns(const AnsatzConfig<Fp>& config, const std::vector<Fp>& point) {
    const unsigned n = config.n;
    std::vector<FpPoly> columns;
    columns.reserve(config.param_count());
    if (n == 1) {
        // The map is the identity on the single column space.
        for (const auto& el : config.columns[0].elements) columns.push_back(el);
        return columns;
    }
    const auto phis = ansatz::assemble_columns(config, point);
    const auto matrix = ansatz::backflow_matrix(phis);
    const auto minors = ansatz::first_minors(matrix);
    for (std::size_t j = 0; j < config.columns.size(); ++j)
        for (const auto& el : config.columns[j].elements)
            columns.push_back(cofactor_column(config, minors, j, el));
    return columns;
}

FpPoly jacobian_column_onehot(const AnsatzConfig<Fp>& config, const std::vector<Fp>& point,
                              std::size_t column_j, std::size_t basis_b) {
    auto phis = ansatz::assemble_columns(config, point);
    const auto& basis = config.columns.at(column_j);
    phis[column_j] = ansatz::make_phi(basis.elements.at(basis_b), basis.degree);
    return ansatz::backflow_det(phis);
}

namespace {

/// Incremental column eliminator. Basis vectors are normalized at their
/// pivot and reduced against all earlier pivots, so absorbing in insertion
/// order leaves every earlier pivot position clean.
class Eliminator {
public:
    Eliminator(std::uint32_t prime, std::size_t length) : p_(prime), len_(length) {}

    bool absorb(std::vector<std::uint32_t> v) {
        const auto& k = fpk::kernels();
        for (std::size_t b = 0; b < basis_.size(); ++b) {
            const std::uint32_t c = v[pivots_[b]];
            if (c != 0) k.axpy(v.data(), basis_[b].data(), len_, p_ - c, p_);
        }
        std::size_t piv = len_;
        for (std::size_t i = 0; i < len_; ++i)
            if (v[i] != 0) {
                piv = i;
                break;
            }
        if (piv == len_) return false;
        if (v[piv] != 1) k.scale(v.data(), len_, fp_inv(v[piv], p_), p_);
        basis_.push_back(std::move(v));
        pivots_.push_back(piv);
        return true;
    }

    unsigned rank() const { return static_cast<unsigned>(basis_.size()); }

private:
    std::uint32_t p_;
    std::size_t len_;
    std::vector<std::vector<std::uint32_t>> basis_;
    std::vector<std::size_t> pivots_;
};

std::vector<Monomial> support_of(const std::vector<FpPoly>& columns) {
    std::unordered_map<Monomial, bool, MonomialHash> seen;
    for (const auto& col : columns)
        for (const auto& [m, c] : col.terms()) seen.emplace(m, true);
    std::vector<Monomial> support;
    support.reserve(seen.size());
    for (const auto& [m, b] : seen) support.push_back(m);
    std::sort(support.begin(), support.end(),
              [](const Monomial& a, const Monomial& b) { return grlex_cmp(a, b) > 0; });
    return support;
}

} // namespace

RankComputation rank_of_columns(const std::vector<FpPoly>& columns, std::uint32_t prime,
                                std::size_t max_rows) {
    const auto support = support_of(columns);
    RankComputation out;
    out.rows = support.size();
    out.cols = columns.size();
    if (support.empty()) return out;
    if (support.size() > max_rows)
        throw Error(ErrorCode::ResourceGuard,
                    "support has " + std::to_string(support.size()) + " rows, guard is " +
                        std::to_string(max_rows));
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> row_index;
    row_index.reserve(support.size());
    for (std::uint32_t i = 0; i < support.size(); ++i) row_index.emplace(support[i], i);

    Eliminator elim(prime, support.size());
    std::vector<std::uint32_t> dense(support.size());
    for (const auto& col : columns) {
        std::fill(dense.begin(), dense.end(), 0u);
        for (const auto& [m, c] : col.terms()) dense[row_index.at(m)] = c.v;
        elim.absorb(dense);
    }
    out.rank = elim.rank();
    return out;
}

ProfileProbe probe_profile(unsigned n, const DegreeProfile& profile, unsigned r_max,
                           const RankOptions& options, const BigInt& target_dim) {
    if (r_max < 1) throw Error(ErrorCode::BadArgument, "secant order r must be >= 1");
    if (!is_probable_prime(options.prime) || options.prime < (1u << 30))
        throw Error(ErrorCode::BadArgument, "prime must be a prime above 2^30");

    const Fp one{1, options.prime};
    const auto config = ansatz::make_config<Fp>(n, profile, one);

    ProfileProbe probe;
    probe.profile = profile;
    probe.param_count = config.param_count();
    probe.seed = profile_seed(options.seed, profile);

    for (unsigned trial = 0; trial < options.trials; ++trial) {
        SplitMix64 stream(SplitMix64(probe.seed + trial).next());
        // Columns for all r_max points up front; blocks absorb incrementally
        // so the rank after block r is the stacked-Jacobian rank.
        std::vector<std::vector<FpPoly>> blocks;
        blocks.reserve(r_max);
        std::vector<FpPoly> all_columns;
        for (unsigned q = 0; q < r_max; ++q) {
            const auto point = random_point(config, stream);
            blocks.push_back(jacobian_columns(config, point));
            for (const auto& col : blocks.back()) all_columns.push_back(col);
        }
        const auto rows = support_of(all_columns);
        if (rows.size() > options.max_rows)
            throw Error(ErrorCode::ResourceGuard,
                        "support has " + std::to_string(rows.size()) + " rows, guard is " +
                            std::to_string(options.max_rows));
        probe.rows = std::max(probe.rows, rows.size());
        probe.cols = all_columns.size();
        std::unordered_map<Monomial, std::uint32_t, MonomialHash> row_index;
        row_index.reserve(rows.size());
        for (std::uint32_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);

        Eliminator elim(options.prime, rows.size());
        std::vector<std::uint32_t> dense(rows.size());
        for (unsigned r = 1; r <= r_max; ++r) {
            for (const auto& col : blocks[r - 1]) {
                std::fill(dense.begin(), dense.end(), 0u);
                for (const auto& [m, c] : col.terms()) dense[row_index.at(m)] = c.v;
                elim.absorb(dense);
            }
            auto& best = probe.secant_ranks[r];
            best = std::max(best, elim.rank());
        }
    }

    probe.generic_rank = probe.secant_ranks.count(1) ? probe.secant_ranks[1] : 0;
    probe.fiber_dimension = static_cast<long long>(probe.param_count) - probe.generic_rank;

    for (unsigned r = 1; r <= r_max; ++r) {
        if (BigInt(probe.secant_ranks[r]) == target_dim) {
            probe.saturation_r = r;
            break;
        }
        if (r >= 2 && probe.secant_ranks[r] == probe.secant_ranks[r - 1]) {
            probe.saturation_r = r;
            break;
        }
    }
    return probe;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::SurjectiveEvidence: return "surjective-evidence";
        case Verdict::NotSurjective: return "not-surjective";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

Verdict classify_verdict(bool certificate_fires, bool guard_skipped, bool any_profile_fills_target) {
    if (certificate_fires) return Verdict::NotSurjective;
    if (any_profile_fills_target) return Verdict::SurjectiveEvidence;
    if (guard_skipped) return Verdict::Inconclusive;
    return Verdict::NotSurjective;
}

RankReport run_rank_report(unsigned n, unsigned D, unsigned r_max, const RankOptions& options,
                           bool all_profiles, const std::optional<DegreeProfile>& profile) {
    RankReport report;
    report.n = n;
    report.degree = D;
    report.r_max = r_max;
    report.options = options;
    report.all_profiles = all_profiles;
    report.target_dim = dimension::target_dim_exact(n, D);
    if (n >= 2) report.det_count_bound = dimension::determinant_count_bound(n);

    std::vector<DegreeProfile> to_probe;
    if (all_profiles) {
        to_probe = combinat::enumerate_profiles(n, D);
    } else {
        if (!profile) throw Error(ErrorCode::BadProfile, "need a profile or --all-profiles");
        ansatz::validate_profile(n, *profile);
        unsigned sum = 0;
        for (unsigned d : *profile) sum += d;
        if (sum != D)
            throw Error(ErrorCode::BadProfile, "profile degrees sum to " + std::to_string(sum) +
                                                   ", expected " + std::to_string(D));
        to_probe.push_back(*profile);
    }

    // Counting certificate: r * max source dimension + r vs the target.
    report.max_param_count = 0;
    for (const auto& prof : to_probe)
        report.max_param_count = std::max(report.max_param_count, dimension::source_dim_exact(n, prof));
    report.certificate_lhs = BigInt(r_max) * report.max_param_count + r_max;
    report.certificate_fires = all_profiles && report.certificate_lhs < report.target_dim;

    bool any_fills = false;
    for (const auto& prof : to_probe) {
        try {
            ProfileProbe probe = probe_profile(n, prof, r_max, options, report.target_dim);
            report.max_secant_rank = std::max(report.max_secant_rank, probe.secant_ranks[r_max]);
            if (BigInt(probe.secant_ranks[r_max]) == report.target_dim) any_fills = true;
            report.profiles.push_back(std::move(probe));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::ResourceGuard) throw;
            report.guard_skipped = true;
            ProfileProbe skipped;
            skipped.profile = prof;
            skipped.param_count = 0;
            report.profiles.push_back(std::move(skipped));
        }
    }

    // A single-profile run that does not fill the target says nothing about
    // the other profiles: inconclusive unless it fills.
    if (!all_profiles) {
        report.verdict = any_fills ? Verdict::SurjectiveEvidence : Verdict::Inconclusive;
        report.strength = any_fills ? "evidence" : "none";
        return report;
    }
    report.verdict = classify_verdict(report.certificate_fires, report.guard_skipped, any_fills);
    if (report.verdict == Verdict::NotSurjective)
        report.strength = report.certificate_fires ? "proof" : "evidence";
    else if (report.verdict == Verdict::SurjectiveEvidence)
        report.strength = "evidence";
    else
        report.strength = "none";
    return report;
}

} // namespace bfgeo::rankprobe
