// Copyright 2026 The bfgeo Authors
// SPDX-License-Identifier: Apache-2.0

#include <bfgeo/ansatz.hpp>

#include <functional>

namespace bfgeo::ansatz {

std::vector<CoordMonomial> coord_monomials(unsigned d) {
    std::vector<CoordMonomial> out;
    for (unsigned e1 = d + 1; e1-- > 0;)
        for (unsigned e2 = d - e1 + 1; e2-- > 0;) {
            const unsigned e3 = d - e1 - e2;
            out.push_back({static_cast<std::uint16_t>(e1), static_cast<std::uint16_t>(e2),
                           static_cast<std::uint16_t>(e3)});
        }
    return out;
}

std::vector<CoordMonomial> coord_monomials_upto(unsigned max_degree) {
    std::vector<CoordMonomial> out;
    for (unsigned d = 0; d <= max_degree; ++d) {
        auto block = coord_monomials(d);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

namespace {

unsigned coord_degree(const CoordMonomial& m) {
    return unsigned(m[0]) + m[1] + m[2];
}

// Nondecreasing index multisets of `slots` entries with total degree `total`.
void tail_multiset_rec(const std::vector<CoordMonomial>& flat, std::uint32_t start, unsigned slots,
                       unsigned total, std::vector<std::uint32_t>& acc,
                       const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
    if (slots == 0) {
        if (total == 0) fn(acc);
        return;
    }
    for (std::uint32_t idx = start; idx < flat.size(); ++idx) {
        const unsigned deg = coord_degree(flat[idx]);
        if (deg > total) break; // flat list is degree-major ascending
        acc.push_back(idx);
        tail_multiset_rec(flat, idx, slots - 1, total - deg, acc, fn);
        acc.pop_back();
    }
}

} // namespace

std::vector<TailBasisKey> tail_basis_keys(unsigned n, unsigned d) {
    const auto flat = coord_monomials_upto(d);
    // Flat offsets of each degree block, to slice the own-slot monomials.
    std::vector<std::uint32_t> degree_offset(d + 2, 0);
    for (unsigned z = 0; z <= d; ++z)
        degree_offset[z + 1] = degree_offset[z] + static_cast<std::uint32_t>(coord_monomials(z).size());

    std::vector<TailBasisKey> keys;
    for (unsigned z = d + 1; z-- > 0;) { // own degree descending
        const unsigned tail_total = d - z;
        for (std::uint32_t own = degree_offset[z]; own < degree_offset[z + 1]; ++own) {
            std::vector<std::uint32_t> acc;
            tail_multiset_rec(flat, 0, n - 1, tail_total, acc, [&](const std::vector<std::uint32_t>& tail) {
                keys.push_back(TailBasisKey{z, own, tail});
            });
        }
    }
    return keys;
}

ParticlePermutation row_substitution(unsigned n, unsigned row) {
    if (row < 1 || row > n) throw Error(ErrorCode::BadArgument, "row out of range");
    std::vector<std::uint32_t> images(n);
    images[0] = row;
    for (unsigned t = 2; t <= n; ++t) images[t - 1] = (t - 1 < row) ? (t - 1) : t;
    return ParticlePermutation::from_images(images);
}

void validate_profile(unsigned n, const DegreeProfile& profile) {
    if (n == 0 || profile.size() != n)
        throw Error(ErrorCode::BadProfile, "profile must list exactly N degrees");
    for (std::size_t i = 1; i < profile.size(); ++i)
        if (profile[i - 1] > profile[i])
            throw Error(ErrorCode::BadProfile, "profile degrees must be nondecreasing");
}

} // namespace bfgeo::ansatz
