// Copyright 2026 The bfgeo Authors
// SPDX-License-Identifier: Apache-2.0

#include <bfgeo/combinat.hpp>

#include <cmath>

namespace bfgeo::combinat {

namespace {

constexpr unsigned long kEnumerationGuard = 10'000'000UL;

// Partitions in the order [m], [m-1,1], ...: next part runs from the largest
// value allowed downward.
void partition_rec(unsigned long remaining, unsigned long max_part, unsigned parts_left,
                   Partition& acc, const std::function<void(const Partition&)>& fn) {
    if (remaining == 0) {
        fn(acc);
        return;
    }
    if (parts_left == 0) return;
    unsigned long hi = std::min(remaining, max_part);
    // Smallest admissible next part: ceil(remaining / parts_left).
    unsigned long lo = (remaining + parts_left - 1) / parts_left;
    for (unsigned long a = hi; a >= lo; --a) {
        acc.push_back(a);
        partition_rec(remaining - a, a, parts_left - 1, acc, fn);
        acc.pop_back();
    }
}

// Strictly decreasing, exactly k or k-1 parts.
void strict_rec(unsigned long remaining, unsigned long max_part, unsigned k,
                Partition& acc, const std::function<void(const Partition&)>& fn) {
    if (remaining == 0) {
        if (acc.size() + 1 == k || acc.size() == k) fn(acc);
        return;
    }
    if (acc.size() >= k) return;
    const unsigned slots = k - static_cast<unsigned>(acc.size());
    for (unsigned long a = std::min(remaining, max_part); a >= 1; --a) {
        // With at most `slots` strictly decreasing parts starting at a, the
        // reachable weight is a + (a-1) + ... >= remaining must be possible.
        unsigned long reach = 0;
        for (unsigned long t = a, used = 0; used < slots && t >= 1; --t, ++used) reach += t;
        if (reach < remaining) break;
        acc.push_back(a);
        strict_rec(remaining - a, a - 1, k, acc, fn);
        acc.pop_back();
    }
}

} // namespace

BigInt binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt pbar(unsigned k, unsigned long m) {
    if (k == 0) {
        if (m == 0) return 1;
        throw Error(ErrorCode::BadArgument, "pbar(0, m) undefined for m > 0");
    }
    if (m > 20'000'000UL)
        throw Error(ErrorCode::ResourceGuard, "pbar table for m = " + std::to_string(m) + " is too large");
    // row holds pbar(kk, .) after pass kk; starts at kk = 0.
    std::vector<BigInt> row(m + 1);
    row[0] = 1;
    for (unsigned kk = 1; kk <= k; ++kk)
        for (unsigned long j = kk; j <= m; ++j) row[j] += row[j - kk];
    return row[m];
}

BigInt qbar(unsigned k, unsigned long m) {
    if (k == 0) throw Error(ErrorCode::BadArgument, "qbar requires k >= 1");
    const unsigned long staircase = static_cast<unsigned long>(k) * (k - 1) / 2;
    if (m >= staircase) return pbar(k, m - staircase);
    BigInt count = 0;
    Partition acc;
    strict_rec(m, m == 0 ? 0 : m, k, acc, [&](const Partition&) { ++count; });
    return count; // always 0: the staircase is the minimum weight
}

long double pbar_asymptotic(unsigned k, unsigned long m) {
    if (k == 0 || m == 0)
        throw Error(ErrorCode::BadArgument, "pbar_asymptotic requires k >= 1, m >= 1");
    const long double logm = std::log(static_cast<long double>(m));
    const long double log_kfac = std::lgamma(static_cast<long double>(k) + 1.0L);
    const long double log_km1fac = std::lgamma(static_cast<long double>(k));
    return std::exp(static_cast<long double>(k - 1) * logm - log_kfac - log_km1fac);
}

unsigned long dim_sym(unsigned long d) {
    return (d + 1) * (d + 2) / 2;
}

void for_each_partition(unsigned k, unsigned long m, bool strict,
                        const std::function<void(const Partition&)>& fn) {
    BigInt expected = strict ? qbar(k, m) : pbar(k, m);
    if (expected > kEnumerationGuard)
        throw Error(ErrorCode::ResourceGuard,
                    "partition enumeration would produce " + expected.get_str() + " items");
    Partition acc;
    if (strict) {
        strict_rec(m, m, k, acc, fn); // m = 0 emits the empty partition iff k = 1
    } else {
        if (m == 0) {
            fn(acc);
            return;
        }
        partition_rec(m, m, k, acc, fn);
    }
}

std::vector<Partition> enumerate_partitions(unsigned k, unsigned long m, bool strict) {
    std::vector<Partition> out;
    for_each_partition(k, m, strict, [&](const Partition& p) { out.push_back(p); });
    return out;
}

namespace {
void profile_rec(unsigned slots_left, unsigned min_value, unsigned remaining,
                 DegreeProfile& acc, const std::function<void(const DegreeProfile&)>& fn) {
    if (slots_left == 0) {
        if (remaining == 0) fn(acc);
        return;
    }
    if (min_value * slots_left > remaining) return;
    for (unsigned v = min_value; v * slots_left <= remaining; ++v) {
        acc.push_back(v);
        profile_rec(slots_left - 1, v, remaining - v, acc, fn);
        acc.pop_back();
    }
}
} // namespace

void for_each_profile(unsigned n, unsigned d, const std::function<void(const DegreeProfile&)>& fn) {
    if (n == 0) throw Error(ErrorCode::BadArgument, "profiles need n >= 1");
    DegreeProfile acc;
    acc.reserve(n);
    profile_rec(n, 0, d, acc, fn);
}

std::vector<DegreeProfile> enumerate_profiles(unsigned n, unsigned d) {
    std::vector<DegreeProfile> out;
    for_each_profile(n, d, [&](const DegreeProfile& p) { out.push_back(p); });
    return out;
}

} // namespace bfgeo::combinat
