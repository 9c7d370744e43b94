// Copyright 2026 The bfgeo Authors
// SPDX-License-Identifier: Apache-2.0

#include <bfgeo/monomial.hpp>

#include <algorithm>

namespace bfgeo {

int ParticlePermutation::parity_of(const std::vector<std::uint32_t>& image) {
    // Cycle decomposition parity.
    std::vector<bool> seen(image.size(), false);
    int sign = 1;
    for (std::size_t i = 0; i < image.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = image[j];
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

ParticlePermutation ParticlePermutation::from_images(const std::vector<std::uint32_t>& images_1based) {
    const std::size_t n = images_1based.size();
    std::vector<std::uint32_t> im(n);
    std::vector<bool> hit(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t v = images_1based[i];
        if (v < 1 || v > n || hit[v - 1])
            throw Error(ErrorCode::BadArgument, "image table is not a permutation");
        hit[v - 1] = true;
        im[i] = v - 1;
    }
    ParticlePermutation perm(std::move(im));
    perm.sign_ = parity_of(perm.image_);
    return perm;
}

void for_each_permutation(unsigned n, const std::function<void(const ParticlePermutation&)>& fn) {
    std::vector<std::uint32_t> images(n);
    for (unsigned i = 0; i < n; ++i) images[i] = i + 1;
    do {
        fn(ParticlePermutation::from_images(images));
    } while (std::next_permutation(images.begin(), images.end()));
}

} // namespace bfgeo
