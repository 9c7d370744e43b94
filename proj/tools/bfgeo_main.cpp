// Copyright 2026 The bfgeo Authors
// SPDX-License-Identifier: Apache-2.0

// bfgeo: command-line front end. JSON on stdout, diagnostics on stderr.
// Identical invocations (including seeds) produce byte-identical output.

#include <bfgeo/ansatz.hpp>
#include <bfgeo/combinat.hpp>
#include <bfgeo/dimension.hpp>
#include <bfgeo/fp_kernels.hpp>
#include <bfgeo/rankprobe.hpp>
#include <bfgeo/report.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace bfgeo;
using combinat::DegreeProfile;

DegreeProfile parse_profile(const std::string& text) {
    DegreeProfile profile;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            const long v = std::stol(item);
            if (v < 0) throw std::invalid_argument("negative");
            profile.push_back(static_cast<unsigned>(v));
        } catch (const std::logic_error&) {
            throw Error(ErrorCode::BadProfile, "profile entry '" + item + "' is not a nonnegative integer");
        }
    }
    if (profile.empty()) throw Error(ErrorCode::BadProfile, "empty profile");
    for (std::size_t i = 1; i < profile.size(); ++i)
        if (profile[i - 1] > profile[i])
            throw Error(ErrorCode::BadProfile, "profile must be nondecreasing (unsorted input is rejected)");
    return profile;
}

std::size_t max_rows_from_env() {
    if (const char* env = std::getenv("BFGEO_MAX_ROWS")) {
        try {
            return std::stoul(env);
        } catch (const std::logic_error&) {
            throw Error(ErrorCode::BadArgument, "BFGEO_MAX_ROWS is not a number");
        }
    }
    return rankprobe::RankOptions{}.max_rows;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, "invalid JSON in '" + path + "': " + e.what());
    }
}

// --- ansatz eval ------------------------------------------------------------

template <class K>
Json eval_phis(const std::vector<ansatz::PhiFunction<K>>& phis, bool check) {
    const auto det = ansatz::backflow_det(phis);
    DegreeProfile profile;
    for (const auto& phi : phis) profile.push_back(phi.degree);
    Json payload;
    payload["n"] = phis.empty() ? 0 : phis[0].poly.particles();
    payload["profile"] = profile;
    if (det.degree())
        payload["degree"] = *det.degree();
    else
        payload["degree"] = nullptr; // zero polynomial
    payload["term_count"] = det.term_count();
    payload["polynomial"] = poly_to_json(det);
    payload["text"] = det.to_text();
    if (check) payload["antisymmetric"] = det.symmetry_check(SymmetryKind::AntisymmetricAll);
    return payload;
}

template <class K>
std::vector<ansatz::PhiFunction<K>> phis_from_columns_spec(const Json& spec, const K& one,
                                                           const std::function<K(const std::string&)>& parse) {
    const unsigned n = spec.at("n").get<unsigned>();
    DegreeProfile profile = spec.at("profile").get<DegreeProfile>();
    ansatz::validate_profile(n, profile);
    const auto& columns = spec.at("columns");
    if (!columns.is_array() || columns.size() != n)
        throw Error(ErrorCode::ParseError, "spec needs exactly N columns");
    std::vector<ansatz::PhiFunction<K>> phis;
    for (unsigned j = 0; j < n; ++j) {
        const auto basis = ansatz::tail_sym_basis<K>(n, profile[j], one);
        std::vector<K> coeffs;
        for (const auto& c : columns[j].at("coeffs")) coeffs.push_back(parse(c.get<std::string>()));
        phis.push_back(ansatz::assemble_phi(basis, coeffs));
    }
    return phis;
}

Json run_ansatz_eval(const std::string& path, bool check) {
    const Json spec = load_json_file(path);
    if (spec.contains("special")) {
        const std::string kind = spec.at("special").get<std::string>();
        const unsigned n = spec.at("n").get<unsigned>();
        if (kind == "vandermonde")
            return eval_phis(ansatz::vandermonde_phis<Rat>(n, Rat(1)), check);
        if (kind == "slater") {
            std::vector<RatPoly> orbitals;
            for (const auto& p : spec.at("orbitals")) orbitals.push_back(rat_poly_from_json(p));
            return eval_phis(ansatz::slater_phis(orbitals), check);
        }
        throw Error(ErrorCode::ParseError, "unknown special ansatz '" + kind + "'");
    }
    const std::string mode = spec.value("mode", std::string("rational"));
    if (mode == "rational") {
        auto phis = phis_from_columns_spec<Rat>(spec, Rat(1), rat_from_string);
        return eval_phis(phis, check);
    }
    if (mode == "fp") {
        const std::uint32_t prime = spec.value("prime", rankprobe::kDefaultPrime);
        if (!is_probable_prime(prime) || prime < (1u << 30))
            throw Error(ErrorCode::BadArgument, "spec prime must be a prime above 2^30");
        auto parse = [prime](const std::string& s) {
            Fp c = fp_from_string(s);
            if (c.p != prime) throw Error(ErrorCode::ModeMismatch, "coefficient prime differs from spec prime");
            return c;
        };
        auto phis = phis_from_columns_spec<Fp>(spec, Fp{1, prime}, parse);
        return eval_phis(phis, check);
    }
    throw Error(ErrorCode::ParseError, "mode must be 'rational' or 'fp'");
}

// --- dims -------------------------------------------------------------------

Json run_dims_target(unsigned n, unsigned D, bool exact, bool paper_lower, bool asym) {
    Json payload;
    payload["n"] = n;
    payload["degree"] = D;
    if (exact) payload["exact"] = report::big_to_json(dimension::target_dim_exact(n, D));
    if (paper_lower) payload["paper_lower"] = report::big_to_json(dimension::target_dim_paper_lower(n, D));
    if (asym) payload["asymptotic"] = static_cast<double>(dimension::target_dim_asymptotic(n, std::max(1u, D)));
    return payload;
}

Json run_dims_source(unsigned n, const DegreeProfile& profile, bool exact, bool paper, bool asym) {
    unsigned D = 0;
    for (unsigned d : profile) D += d;
    Json payload;
    payload["n"] = n;
    payload["profile"] = profile;
    payload["degree"] = D;
    if (exact) payload["exact"] = report::big_to_json(dimension::source_dim_exact(n, profile));
    if (paper) payload["paper"] = report::big_to_json(dimension::source_dim_paper(n, profile));
    if (asym) payload["asymptotic"] = static_cast<double>(dimension::source_dim_asymptotic(n, std::max(1u, D)));
    return payload;
}

int emit(const Json& env) {
    std::cout << report::render(env);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"backflow ansatz geometry toolkit"};
    app.require_subcommand(1);

    // partitions
    auto* cmd_partitions = app.add_subcommand("partitions", "count and list partitions");
    unsigned part_k = 1;
    unsigned long part_m = 0;
    bool part_strict = false;
    cmd_partitions->add_option("--k", part_k)->required();
    cmd_partitions->add_option("--m", part_m)->required();
    cmd_partitions->add_flag("--strict", part_strict);

    // dims target / dims source
    auto* cmd_dims = app.add_subcommand("dims", "dimension computations");
    cmd_dims->require_subcommand(1);
    auto* cmd_target = cmd_dims->add_subcommand("target", "target space dimensions");
    unsigned tgt_n = 1, tgt_d = 0;
    bool tgt_exact = false, tgt_lower = false, tgt_asym = false, tgt_all = false;
    cmd_target->add_option("--n", tgt_n)->required();
    cmd_target->add_option("--degree", tgt_d)->required();
    cmd_target->add_flag("--exact", tgt_exact);
    cmd_target->add_flag("--paper-lower", tgt_lower);
    cmd_target->add_flag("--asymptotic", tgt_asym);
    cmd_target->add_flag("--all", tgt_all);
    auto* cmd_source = cmd_dims->add_subcommand("source", "source space dimensions");
    unsigned src_n = 1;
    std::string src_profile;
    bool src_exact = false, src_paper = false, src_asym = false, src_all = false;
    cmd_source->add_option("--n", src_n)->required();
    cmd_source->add_option("--profile", src_profile)->required();
    cmd_source->add_flag("--exact", src_exact);
    cmd_source->add_flag("--paper", src_paper);
    cmd_source->add_flag("--asymptotic", src_asym);
    cmd_source->add_flag("--all", src_all);

    // mindeg / bound / gap
    auto* cmd_mindeg = app.add_subcommand("mindeg", "smallest degree with a nonzero target space");
    unsigned mindeg_n = 1;
    cmd_mindeg->add_option("--n", mindeg_n)->required();
    auto* cmd_bound = app.add_subcommand("bound", "determinant-count threshold N^(3N-3)");
    unsigned bound_n = 2;
    cmd_bound->add_option("--n", bound_n)->required();
    auto* cmd_gap = app.add_subcommand("gap", "full dimension gap report");
    unsigned gap_n = 1, gap_d = 0;
    cmd_gap->add_option("--n", gap_n)->required();
    cmd_gap->add_option("--degree", gap_d)->required();

    // ansatz eval
    auto* cmd_ansatz = app.add_subcommand("ansatz", "ansatz construction");
    cmd_ansatz->require_subcommand(1);
    auto* cmd_eval = cmd_ansatz->add_subcommand("eval", "evaluate a determinant from a spec file");
    std::string spec_path;
    bool eval_check = false;
    cmd_eval->add_option("--spec", spec_path)->required();
    cmd_eval->add_flag("--check", eval_check);

    // rank
    auto* cmd_rank = app.add_subcommand("rank", "generic Jacobian rank probing");
    unsigned rank_n = 2, rank_d = 2;
    std::string rank_profile;
    bool rank_all = false;
    unsigned rank_trials = 3, rank_secant = 1;
    std::uint64_t rank_seed = 1;
    std::uint64_t rank_prime = rankprobe::kDefaultPrime;
    cmd_rank->add_option("--n", rank_n)->required();
    cmd_rank->add_option("--degree", rank_d)->required();
    cmd_rank->add_option("--profile", rank_profile);
    cmd_rank->add_flag("--all-profiles", rank_all);
    cmd_rank->add_option("--trials", rank_trials);
    cmd_rank->add_option("--prime", rank_prime);
    cmd_rank->add_option("--seed", rank_seed);
    cmd_rank->add_option("--secant", rank_secant);

    // verdict
    auto* cmd_verdict = app.add_subcommand("verdict", "surjectivity verdict across all profiles");
    unsigned verdict_n = 2, verdict_d = 2, verdict_r = 1;
    unsigned verdict_trials = 3;
    std::uint64_t verdict_seed = 1;
    std::uint64_t verdict_prime = rankprobe::kDefaultPrime;
    cmd_verdict->add_option("--n", verdict_n)->required();
    cmd_verdict->add_option("--degree", verdict_d)->required();
    cmd_verdict->add_option("--r", verdict_r)->required();
    cmd_verdict->add_option("--trials", verdict_trials);
    cmd_verdict->add_option("--prime", verdict_prime);
    cmd_verdict->add_option("--seed", verdict_seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cout << report::render(report::error_json("bad-argument", e.what()));
        return 2;
    }

    const auto started = std::chrono::steady_clock::now();
    try {
        if (cmd_partitions->parsed()) {
            const auto items = combinat::enumerate_partitions(part_k, part_m, part_strict);
            Json payload;
            payload["k"] = part_k;
            payload["m"] = part_m;
            payload["strict"] = part_strict;
            payload["count"] = items.size();
            payload["items"] = items;
            return emit(report::envelope("partitions", payload));
        }
        if (cmd_target->parsed()) {
            const bool all = tgt_all || (!tgt_exact && !tgt_lower && !tgt_asym);
            return emit(report::envelope(
                "dims target", run_dims_target(tgt_n, tgt_d, all || tgt_exact, all || tgt_lower, all || tgt_asym)));
        }
        if (cmd_source->parsed()) {
            const bool all = src_all || (!src_exact && !src_paper && !src_asym);
            const auto profile = parse_profile(src_profile);
            ansatz::validate_profile(src_n, profile);
            return emit(report::envelope(
                "dims source",
                run_dims_source(src_n, profile, all || src_exact, all || src_paper, all || src_asym)));
        }
        if (cmd_mindeg->parsed()) {
            const unsigned md = dimension::min_degree(mindeg_n);
            Json payload;
            payload["n"] = mindeg_n;
            payload["min_degree"] = md;
            payload["ratio_to_n_pow_4_3"] =
                static_cast<double>(md) / std::pow(static_cast<double>(mindeg_n), 4.0 / 3.0);
            return emit(report::envelope("mindeg", payload));
        }
        if (cmd_bound->parsed()) {
            Json payload;
            payload["n"] = bound_n;
            payload["bound"] = report::big_to_json(dimension::determinant_count_bound(bound_n));
            return emit(report::envelope("bound", payload));
        }
        if (cmd_gap->parsed()) {
            return emit(report::envelope("gap", report::to_json(dimension::gap_report(gap_n, gap_d))));
        }
        if (cmd_eval->parsed()) {
            return emit(report::envelope("ansatz eval", run_ansatz_eval(spec_path, eval_check)));
        }
        if (cmd_rank->parsed() || cmd_verdict->parsed()) {
            const bool is_verdict = cmd_verdict->parsed();
            rankprobe::RankOptions options;
            options.trials = is_verdict ? verdict_trials : rank_trials;
            options.seed = is_verdict ? verdict_seed : rank_seed;
            options.max_rows = max_rows_from_env();
            const std::uint64_t prime64 = is_verdict ? verdict_prime : rank_prime;
            if (prime64 >= (1ull << 31) || !is_probable_prime(prime64) || prime64 < (1u << 30))
                throw Error(ErrorCode::BadArgument, "--prime must be a prime in (2^30, 2^31)");
            options.prime = static_cast<std::uint32_t>(prime64);

            rankprobe::RankReport result;
            std::string command;
            if (is_verdict) {
                command = "verdict";
                result = rankprobe::run_rank_report(verdict_n, verdict_d, verdict_r, options, true,
                                                    std::nullopt);
            } else {
                command = "rank";
                if (rank_all && !rank_profile.empty())
                    throw Error(ErrorCode::BadArgument, "--profile and --all-profiles are exclusive");
                std::optional<DegreeProfile> profile;
                if (!rank_profile.empty()) profile = parse_profile(rank_profile);
                if (!rank_all && !profile)
                    throw Error(ErrorCode::BadProfile, "rank needs --profile or --all-profiles");
                result = rankprobe::run_rank_report(rank_n, rank_d, rank_secant, options, rank_all, profile);
            }
            const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                     std::chrono::steady_clock::now() - started)
                                     .count();
            std::cerr << "bfgeo: " << command << " finished in " << elapsed << " ms (kernels: "
                      << fpk::kernels().backend << ")\n";
            return emit(report::envelope(command, report::to_json(result), options.seed, options.prime));
        }
    } catch (const Error& e) {
        std::cout << report::render(report::error_json(e.code_name(), e.what()));
        return 1;
    } catch (const std::exception& e) {
        std::cout << report::render(report::error_json("internal", e.what()));
        return 1;
    }
    std::cout << report::render(report::error_json("bad-argument", "no subcommand"));
    return 2;
}
