// Copyright 2026 The bfgeo Authors
// SPDX-License-Identifier: Apache-2.0

#include <bfgeo/ansatz.hpp>
#include <bfgeo/dimension.hpp>

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <set>

using namespace bfgeo;
using namespace bfgeo::dimension;
using combinat::dim_sym;

namespace {

// ---- independent oracles ----------------------------------------------------

// All 3-variable monomials of degree <= cap as exponent triples.
std::vector<std::array<int, 3>> monomials_upto(int cap) {
    std::vector<std::array<int, 3>> out;
    for (int d = 0; d <= cap; ++d)
        for (int e1 = d; e1 >= 0; --e1)
            for (int e2 = d - e1; e2 >= 0; --e2) out.push_back({e1, e2, d - e1 - e2});
    return out;
}

// Brute-force: count N-subsets of distinct monomials with degree sum D.
BigInt target_oracle(unsigned n, unsigned D) {
    const auto monos = monomials_upto(static_cast<int>(D));
    BigInt count = 0;
    std::function<void(std::size_t, unsigned, unsigned)> rec = [&](std::size_t start, unsigned left,
                                                                   unsigned deg_left) {
        if (left == 0) {
            if (deg_left == 0) ++count;
            return;
        }
        for (std::size_t i = start; i < monos.size(); ++i) {
            const unsigned d = static_cast<unsigned>(monos[i][0] + monos[i][1] + monos[i][2]);
            if (d > deg_left) break; // list is degree-sorted
            rec(i + 1, left - 1, deg_left - d);
        }
    };
    rec(0, n, D);
    return count;
}

// Brute-force: multisets of `count` monomials with total degree `total`.
BigInt multiset_oracle(unsigned count, unsigned total) {
    const auto monos = monomials_upto(static_cast<int>(total));
    BigInt out = 0;
    std::function<void(std::size_t, unsigned, unsigned)> rec = [&](std::size_t start, unsigned left,
                                                                   unsigned deg_left) {
        if (left == 0) {
            if (deg_left == 0) ++out;
            return;
        }
        for (std::size_t i = start; i < monos.size(); ++i) {
            const unsigned d = static_cast<unsigned>(monos[i][0] + monos[i][1] + monos[i][2]);
            if (d > deg_left) break;
            rec(i, left - 1, deg_left - d); // repeats allowed
        }
    };
    rec(0, count, total);
    return out;
}

// Truncated bivariate generating function prod_delta (1 + s t^delta)^{B(delta)},
// tracking s-degree up to n_max and t-degree up to d_max.
std::vector<std::vector<BigInt>> wedge_generating_function(unsigned n_max, unsigned d_max) {
    std::vector<std::vector<BigInt>> gf(n_max + 1, std::vector<BigInt>(d_max + 1));
    gf[0][0] = 1;
    for (unsigned delta = 0; delta <= d_max; ++delta) {
        const unsigned long reps = dim_sym(delta);
        for (unsigned long rep = 0; rep < reps; ++rep) {
            // Multiply by (1 + s t^delta): one factor per monomial.
            for (unsigned k = n_max; k-- > 0;)
                for (unsigned t = 0; t + delta <= d_max; ++t)
                    if (gf[k][t] != 0) gf[k + 1][t + delta] += gf[k][t];
            if (delta == 0) break; // only one constant monomial
        }
    }
    return gf;
}

} // namespace

TEST_CASE("target_dim_exact pinned examples") {
    for (unsigned d = 0; d <= 6; ++d) CHECK(target_dim_exact(1, d) == BigInt(dim_sym(d)));
    CHECK(target_dim_exact(2, 2) == 9);
    CHECK(target_dim_exact(2, 0) == 0);
}

TEST_CASE("target_dim_exact equals the subset-enumeration oracle") {
    for (unsigned n = 1; n <= 3; ++n)
        for (unsigned D = 0; D <= 8; ++D) CHECK(target_dim_exact(n, D) == target_oracle(n, D));
    CHECK(target_dim_exact(4, 6) == target_oracle(4, 6));
}

TEST_CASE("target_dim_exact matches the generating-function oracle up to degree 20") {
    const unsigned d_max = 20;
    const auto gf = wedge_generating_function(4, d_max);
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned D = 0; D <= d_max; ++D) CHECK(target_dim_exact(n, D) == gf[n][D]);
}

TEST_CASE("restricted-sum target lower bound: pinned sum and domination") {
    // n=2, D=8: tuples (2,6) and (3,5): 6*28 + 10*21 = 378.
    CHECK(target_dim_paper_lower(2, 8) == 378);
    for (unsigned D = 0; D <= 10; ++D) CHECK(target_dim_paper_lower(1, D) == BigInt(dim_sym(D)));
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned D = 0; D <= 20; ++D)
            CHECK(target_dim_paper_lower(n, D) <= target_dim_exact(n, D));
}

TEST_CASE("target asymptotic: power law, monotonicity, duplicate formula") {
    for (unsigned n = 1; n <= 4; ++n) {
        const long double ratio = target_dim_asymptotic(n, 200) / target_dim_asymptotic(n, 100);
        CHECK(std::fabs(static_cast<double>(ratio) - std::pow(2.0, 3.0 * n - 1)) <
              1e-9 * std::pow(2.0, 3.0 * n - 1));
        CHECK(target_dim_asymptotic(n, 101) > target_dim_asymptotic(n, 100));
    }
    // Independent direct-power route.
    const unsigned n = 3;
    const long double direct = std::pow(100.0L, 3.0L * n - 1) * std::exp(1.0L * (2 * n - 1)) /
                               (std::numbers::pi_v<long double> * std::pow(2.0L, 4.0L * n) *
                                std::pow(static_cast<long double>(n), 4.0L * n - 2));
    const long double mine = target_dim_asymptotic(n, 100);
    CHECK(std::fabs(static_cast<double>(mine / direct - 1.0L)) < 1e-12);
}

TEST_CASE("source column dimension: pinned values and the multiset oracle") {
    CHECK(source_dim_exact(2, {0, 2}) == 22);
    for (unsigned d = 0; d <= 8; ++d) {
        // N=2: no tail symmetry constraint; the column space is all of
        // degree-d in 6 variables: C(d+5,5).
        CHECK(source_column_dim_exact(2, d) == combinat::binomial(d + 5, 5));
    }
    CHECK(source_dim_exact(3, {0, 0, 1}) == 8);

    for (unsigned count = 0; count <= 3; ++count)
        for (unsigned total = 0; total <= 6; ++total)
            CHECK(monomial_multiset_count(count, total) == multiset_oracle(count, total));

    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned d = 0; d <= 5; ++d) {
            BigInt expect = 0;
            for (unsigned z = 0; z <= d; ++z) expect += BigInt(dim_sym(z)) * multiset_oracle(n - 1, d - z);
            CHECK(source_column_dim_exact(n, d) == expect);
        }
}

TEST_CASE("source paper bound dominates the exact orbit count") {
    for (unsigned n = 2; n <= 4; ++n) {
        combinat::for_each_profile(n, 6, [&](const combinat::DegreeProfile& profile) {
            CHECK(source_dim_exact(n, profile) <= source_dim_paper(n, profile));
        });
        // d_j <= 6 grid, all columns independently.
        for (unsigned d = 0; d <= 6; ++d)
            CHECK(source_column_dim_exact(n, d) <= source_column_dim_paper(n, d));
    }
    // N=2: single tail slot, product count equals the orbit count exactly.
    for (unsigned d = 0; d <= 6; ++d)
        CHECK(source_column_dim_exact(2, d) == source_column_dim_paper(2, d));
}

TEST_CASE("exact/asymptotic ratio drifts toward a constant (trend only)") {
    for (unsigned n = 2; n <= 3; ++n) {
        double prev_ratio = 0.0, prev_drift = -1.0;
        for (unsigned D = 10; D <= 80; D *= 2) {
            const double ratio = dimension::bigint_ratio(target_dim_exact(n, D), BigInt(1)) /
                                 static_cast<double>(target_dim_asymptotic(n, D));
            if (prev_ratio > 0.0) {
                const double drift = std::fabs(ratio / prev_ratio - 1.0);
                if (prev_drift >= 0.0) CHECK(drift < prev_drift); // settling
                prev_drift = drift;
            }
            prev_ratio = ratio;
        }
    }
}

TEST_CASE("source asymptotic power law") {
    for (unsigned n = 2; n <= 4; ++n) {
        const long double ratio = source_dim_asymptotic(n, 240) / source_dim_asymptotic(n, 120);
        CHECK(std::fabs(static_cast<double>(ratio) - std::pow(2.0, 3.0 * n - 1)) <
              1e-9 * std::pow(2.0, 3.0 * n - 1));
    }
}

TEST_CASE("min_degree: pinned values, positivity boundary, N^{4/3} band") {
    CHECK(min_degree(1) == 0);
    CHECK(min_degree(2) == 1);
    CHECK(min_degree(4) == 3);
    for (unsigned n = 1; n <= 5; ++n) {
        const unsigned md = min_degree(n);
        CHECK(target_dim_exact(n, md) > 0);
        if (md > 0) CHECK(target_dim_exact(n, md - 1) == 0);
    }
    // Contiguity on the tested range: zero below, positive at and above.
    for (unsigned n = 1; n <= 4; ++n) {
        const unsigned md = min_degree(n);
        for (unsigned D = 0; D <= 20; ++D) {
            if (D < md)
                CHECK(target_dim_exact(n, D) == 0);
            else
                CHECK(target_dim_exact(n, D) > 0);
        }
    }
    // Empirical band recorded from the run over 2 <= N <= 200.
    double lo = 1e9, hi = 0;
    for (unsigned n = 2; n <= 200; ++n) {
        const double ratio = min_degree(n) / std::pow(static_cast<double>(n), 4.0 / 3.0);
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    CHECK(lo >= 0.35);
    CHECK(hi <= 1.20);
}

TEST_CASE("determinant count bound") {
    CHECK(determinant_count_bound(2) == 8);
    CHECK(determinant_count_bound(3) == 729);
    CHECK_THROWS_AS(determinant_count_bound(1), Error);
}

TEST_CASE("gap report bundles consistent figures") {
    const auto r = gap_report(3, 12);
    CHECK(r.target_exact >= r.target_paper_lower);
    CHECK(r.source_exact_best <= r.source_paper_best);
    CHECK(r.source_exact_balanced <= r.source_paper_balanced);
    CHECK(r.source_exact_best >= r.source_exact_balanced);
    CHECK(r.balanced == combinat::DegreeProfile{4, 4, 4});
    CHECK(r.min_degree == 2);
    REQUIRE(r.det_count_bound.has_value());
    CHECK(*r.det_count_bound == 729);
    CHECK(r.ratio_target_over_best_source > 0.0);
    // The skewed profile dominates the balanced one here.
    CHECK(std::find(r.discrepancy_flags.begin(), r.discrepancy_flags.end(),
                    "balanced-profile-not-argmax") != r.discrepancy_flags.end());
}

TEST_CASE("balanced profile construction") {
    CHECK(balanced_profile(3, 12) == combinat::DegreeProfile{4, 4, 4});
    CHECK(balanced_profile(3, 4) == combinat::DegreeProfile{1, 1, 2});
    CHECK(balanced_profile(2, 5) == combinat::DegreeProfile{2, 3});
}
