// Copyright 2026 The bfgeo Authors
// SPDX-License-Identifier: Apache-2.0

#include <bfgeo/report.hpp>

#include <bfgeo/version.hpp>

namespace bfgeo::report {

Json big_to_json(const BigInt& value) {
    if (value.fits_ulong_p()) return value.get_ui();
    if (value.fits_slong_p()) return value.get_si();
    return value.get_str();
}

Json to_json(const dimension::GapReport& r) {
    Json j;
    j["n"] = r.n;
    j["degree"] = r.degree;
    j["target"] = {{"exact", big_to_json(r.target_exact)},
                   {"paper_lower", big_to_json(r.target_paper_lower)},
                   {"asymptotic", static_cast<double>(r.target_asymptotic)}};
    j["source"] = {{"best_profile", r.best_profile},
                   {"exact_best", big_to_json(r.source_exact_best)},
                   {"paper_best", big_to_json(r.source_paper_best)},
                   {"balanced_profile", r.balanced},
                   {"exact_balanced", big_to_json(r.source_exact_balanced)},
                   {"paper_balanced", big_to_json(r.source_paper_balanced)},
                   {"asymptotic", static_cast<double>(r.source_asymptotic)}};
    j["ratio_target_over_best_source"] = r.ratio_target_over_best_source;
    j["min_degree"] = r.min_degree;
    if (r.det_count_bound) j["determinant_count_bound"] = big_to_json(*r.det_count_bound);
    j["discrepancy_flags"] = r.discrepancy_flags;
    return j;
}

Json to_json(const rankprobe::ProfileProbe& p) {
    Json j;
    j["profile"] = p.profile;
    j["param_count"] = p.param_count;
    j["generic_rank"] = p.generic_rank;
    j["fiber_dimension"] = p.fiber_dimension;
    Json secants = Json::object();
    for (const auto& [r, rank] : p.secant_ranks) {
        secants[std::to_string(r)] = rank;
    }
    j["secant_ranks"] = std::move(secants);
    // The affine secant count bound r*dim+r, reported against the cone rank.
    if (!p.secant_ranks.empty()) {
        const unsigned r_max = p.secant_ranks.rbegin()->first;
        j["secant_bound_r_rank_plus_r"] =
            static_cast<std::uint64_t>(r_max) * p.generic_rank + r_max;
    }
    if (p.saturation_r)
        j["saturation_r"] = *p.saturation_r;
    else
        j["saturation_r"] = nullptr;
    j["matrix"] = {{"rows", p.rows}, {"cols", p.cols}};
    j["profile_seed"] = p.seed;
    return j;
}

Json to_json(const rankprobe::RankReport& r) {
    Json j;
    j["n"] = r.n;
    j["degree"] = r.degree;
    j["r"] = r.r_max;
    j["trials"] = r.options.trials;
    j["prime"] = r.options.prime;
    j["seed"] = r.options.seed;
    j["target_dim_exact"] = big_to_json(r.target_dim);
    j["all_profiles"] = r.all_profiles;
    j["max_param_count"] = big_to_json(r.max_param_count);
    j["certificate"] = {{"lhs_r_times_max_params_plus_r", big_to_json(r.certificate_lhs)},
                        {"fires", r.certificate_fires}};
    Json profiles = Json::array();
    for (const auto& p : r.profiles) profiles.push_back(to_json(p));
    j["profiles"] = std::move(profiles);
    j["max_secant_rank"] = r.max_secant_rank;
    j["guard_skipped"] = r.guard_skipped;
    j["verdict"] = rankprobe::verdict_name(r.verdict);
    j["strength"] = r.strength;
    if (r.det_count_bound) j["determinant_count_bound"] = big_to_json(*r.det_count_bound);
    return j;
}

Json envelope(const std::string& command, Json payload, std::optional<std::uint64_t> seed,
              std::optional<std::uint32_t> prime) {
    Json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["schema"] = kReportSchemaVersion;
    j["command"] = command;
    if (seed) j["seed"] = *seed;
    if (prime) j["prime"] = *prime;
    j["payload"] = std::move(payload);
    return j;
}

Json error_json(const std::string& code, const std::string& message) {
    return Json{{"error", {{"code", code}, {"message", message}}}};
}

std::string render(const Json& j) {
    return j.dump(2) + "\n";
}

} // namespace bfgeo::report
