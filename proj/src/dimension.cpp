// Copyright 2026 The bfgeo Authors
// SPDX-License-Identifier: Apache-2.0

#include <bfgeo/dimension.hpp>

#include <cmath>
#include <limits>
#include <numbers>

namespace bfgeo::dimension {

using combinat::binomial;
using combinat::dim_sym;

BigInt target_dim_exact(unsigned n, unsigned D) {
    if (n == 0) throw Error(ErrorCode::BadArgument, "target dimension needs n >= 1");
    // table[k][t]: ways to pick k distinct monomials of total degree t from
    // the degree blocks processed so far.
    std::vector<std::vector<BigInt>> table(n + 1, std::vector<BigInt>(D + 1));
    table[0][0] = 1;
    for (unsigned delta = 0; delta <= D; ++delta) {
        const unsigned long block = dim_sym(delta);
        // k descending: each degree block contributes to a path at most once.
        for (unsigned k = n; k-- > 0;) {
            for (unsigned t = 0; t <= D; ++t) {
                if (table[k][t] == 0) continue;
                for (unsigned take = 1; k + take <= n; ++take) {
                    if (delta == 0 && take > 1) break; // only one constant monomial
                    const unsigned long add = static_cast<unsigned long>(take) * delta;
                    if (t + add > D) break;
                    table[k + take][t + add] += table[k][t] * binomial(block, take);
                }
            }
        }
    }
    return table[n][D];
}

namespace {

void paper_lower_rec(unsigned slots_left, unsigned long min_value, unsigned long remaining,
                     BigInt product, BigInt& total) {
    if (slots_left == 0) {
        if (remaining == 0) total += product;
        return;
    }
    for (unsigned long p = min_value;; ++p) {
        // Cheapest strictly increasing completion starting at p.
        unsigned long completion = 0;
        for (unsigned i = 0; i < slots_left; ++i) completion += p + i;
        if (completion > remaining) break;
        paper_lower_rec(slots_left - 1, p + 1, remaining - p, product * dim_sym(p), total);
    }
}

} // namespace

BigInt target_dim_paper_lower(unsigned n, unsigned D) {
    if (n == 0) throw Error(ErrorCode::BadArgument, "target bound needs n >= 1");
    const unsigned long cutoff = (D + 2ul * n - 1) / (2ul * n); // ceil(D / 2N)
    BigInt total = 0;
    paper_lower_rec(n, cutoff, D, 1, total);
    return total;
}

long double target_dim_asymptotic(unsigned n, unsigned long D) {
    if (n == 0 || D == 0) throw Error(ErrorCode::BadArgument, "asymptotic needs n, D >= 1");
    const long double ln2 = std::numbers::ln2_v<long double>;
    const long double logv = (3.0L * n - 1) * std::log(static_cast<long double>(D)) +
                             (2.0L * n - 1) - std::log(std::numbers::pi_v<long double>) -
                             4.0L * n * ln2 - (4.0L * n - 2) * std::log(static_cast<long double>(n));
    const long double v = std::exp(logv);
    if (!std::isfinite(v)) throw Error(ErrorCode::ResourceGuard, "asymptotic overflows long double");
    return v;
}

BigInt monomial_multiset_count(unsigned count, unsigned total) {
    // table[s][t]: multisets of s monomials with total degree t, using
    // degree blocks processed so far. Multichoose within a block.
    std::vector<std::vector<BigInt>> table(count + 1, std::vector<BigInt>(total + 1));
    table[0][0] = 1;
    for (unsigned delta = 0; delta <= total; ++delta) {
        const unsigned long block = dim_sym(delta);
        for (unsigned s = count; s-- > 0;) {
            for (unsigned t = 0; t <= total; ++t) {
                if (table[s][t] == 0) continue;
                for (unsigned take = 1; s + take <= count; ++take) {
                    const unsigned long add = static_cast<unsigned long>(take) * delta;
                    if (t + add > total) break;
                    table[s + take][t + add] += table[s][t] * binomial(block + take - 1, take);
                }
            }
        }
    }
    return table[count][total];
}

BigInt source_column_dim_exact(unsigned n, unsigned d) {
    if (n == 0) throw Error(ErrorCode::BadArgument, "source dimension needs n >= 1");
    BigInt total = 0;
    for (unsigned z = 0; z <= d; ++z)
        total += BigInt(dim_sym(z)) * monomial_multiset_count(n - 1, d - z);
    return total;
}

BigInt source_dim_exact(unsigned n, const DegreeProfile& profile) {
    BigInt total = 0;
    for (unsigned d : profile) total += source_column_dim_exact(n, d);
    return total;
}

namespace {

// Sum over nondecreasing (delta_2..delta_N) with given total of the product
// of per-degree monomial counts.
BigInt tail_product_sum(unsigned slots, unsigned min_value, unsigned total) {
    if (slots == 0) return total == 0 ? BigInt(1) : BigInt(0);
    BigInt sum = 0;
    for (unsigned v = min_value; v * slots <= total; ++v)
        sum += BigInt(dim_sym(v)) * tail_product_sum(slots - 1, v, total - v);
    return sum;
}

} // namespace

BigInt source_column_dim_paper(unsigned n, unsigned d) {
    if (n == 0) throw Error(ErrorCode::BadArgument, "source bound needs n >= 1");
    BigInt total = 0;
    for (unsigned z = 0; z <= d; ++z)
        total += BigInt(dim_sym(z)) * tail_product_sum(n - 1, 0, d - z);
    return total;
}

BigInt source_dim_paper(unsigned n, const DegreeProfile& profile) {
    BigInt total = 0;
    for (unsigned d : profile) total += source_column_dim_paper(n, d);
    return total;
}

long double source_dim_asymptotic(unsigned n, unsigned long D) {
    if (n == 0 || D == 0) throw Error(ErrorCode::BadArgument, "asymptotic needs n, D >= 1");
    const long double ln2 = std::numbers::ln2_v<long double>;
    const long double logv = (3.0L * n - 1) * std::log(static_cast<long double>(D)) +
                             (2.0L * n - 3) - (7.0L * n - 4) * std::log(static_cast<long double>(n)) -
                             (n + 1.0L) * ln2 - std::log(std::numbers::pi_v<long double>);
    const long double v = std::exp(logv);
    if (!std::isfinite(v)) throw Error(ErrorCode::ResourceGuard, "asymptotic overflows long double");
    return v;
}

unsigned min_degree(unsigned n) {
    if (n == 0) throw Error(ErrorCode::BadArgument, "min_degree needs n >= 1");
    unsigned long remaining = n;
    unsigned long sum = 0;
    for (unsigned delta = 0; remaining > 0; ++delta) {
        const unsigned long take = std::min<unsigned long>(remaining, dim_sym(delta));
        sum += take * delta;
        remaining -= take;
    }
    return static_cast<unsigned>(sum);
}

BigInt determinant_count_bound(unsigned n) {
    if (n < 2) throw Error(ErrorCode::BadArgument, "determinant-count bound needs n >= 2");
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), n, 3ul * n - 3);
    return r;
}

DegreeProfile balanced_profile(unsigned n, unsigned D) {
    DegreeProfile profile(n, D / n);
    for (unsigned i = 0; i < D % n; ++i) profile[n - 1 - i] += 1;
    return profile;
}

double bigint_ratio(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) return std::numeric_limits<double>::infinity();
    mpq_class q(numerator, denominator);
    q.canonicalize();
    return q.get_d();
}

GapReport gap_report(unsigned n, unsigned D) {
    GapReport report;
    report.n = n;
    report.degree = D;
    report.target_exact = target_dim_exact(n, D);
    report.target_paper_lower = target_dim_paper_lower(n, D);
    report.target_asymptotic = target_dim_asymptotic(n, std::max(1u, D));
    report.min_degree = min_degree(n);
    if (n >= 2) report.det_count_bound = determinant_count_bound(n);

    combinat::for_each_profile(n, D, [&](const DegreeProfile& profile) {
        BigInt dim = source_dim_exact(n, profile);
        if (report.best_profile.empty() || dim > report.source_exact_best) {
            report.best_profile = profile;
            report.source_exact_best = dim;
        }
    });
    report.source_paper_best = source_dim_paper(n, report.best_profile);
    report.balanced = balanced_profile(n, D);
    report.source_exact_balanced = source_dim_exact(n, report.balanced);
    report.source_paper_balanced = source_dim_paper(n, report.balanced);
    report.source_asymptotic = source_dim_asymptotic(n, std::max(1u, D));
    report.ratio_target_over_best_source = bigint_ratio(report.target_exact, report.source_exact_best);

    // The 3-variable symmetric power has C(d+2,2) monomials; the alternative
    // C(d+1,2) convention seen in coarse estimates is flagged, not used.
    report.discrepancy_flags.push_back("dim-sym-binomial-convention");
    if (report.best_profile != report.balanced &&
        report.source_exact_best > report.source_exact_balanced)
        report.discrepancy_flags.push_back("balanced-profile-not-argmax");
    return report;
}

} // namespace bfgeo::dimension
