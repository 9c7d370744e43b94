// Copyright 2026 The bfgeo Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file monomial.hpp
 * @brief Monomials in the N-particle ring and particle permutations.
 *
 * Variables are x[i][a] with particle i in 1..N and coordinate a in 1..3.
 * A monomial stores one exponent per variable, flattened particle-major, with
 * the total degree cached. The canonical term order is graded lexicographic
 * on that flattened vector (higher degree first, then lexicographically
 * larger exponent vector first), so equal polynomials always serialize to
 * identical bytes.
 */

#pragma once

#include <bfgeo/errors.hpp>

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <functional>
#include <numeric>
#include <vector>

namespace bfgeo {

inline constexpr unsigned kCoords = 3;

class Monomial {
public:
    /// The determinant guard caps particles at 8, so 24 variables suffice;
    /// exponents live inline and copies are plain memcpy.
    static constexpr unsigned kMaxVars = 24;

    Monomial() = default;

    /// The constant monomial 1 in the n-particle ring.
    explicit Monomial(unsigned n) : vars_(static_cast<std::uint8_t>(kCoords * n)) {
        if (kCoords * n > kMaxVars) throw Error(ErrorCode::BadArgument, "particle count above 8");
        exp_.fill(0);
    }

    /// From a flattened exponent vector (size 3N).
    static Monomial from_exponents(const std::uint16_t* exps, unsigned vars) {
        Monomial m(vars / kCoords);
        std::memcpy(m.exp_.data(), exps, vars * sizeof(std::uint16_t));
        m.degree_ = 0;
        for (unsigned v = 0; v < vars; ++v) m.degree_ += exps[v];
        return m;
    }

    /// x[particle][coord]^e (1-based particle and coord).
    static Monomial variable(unsigned n, unsigned particle, unsigned coord, unsigned e = 1) {
        if (particle < 1 || particle > n || coord < 1 || coord > kCoords)
            throw Error(ErrorCode::BadArgument, "variable index out of range");
        Monomial m(n);
        m.exp_[kCoords * (particle - 1) + (coord - 1)] = static_cast<std::uint16_t>(e);
        m.degree_ = e;
        return m;
    }

    unsigned particles() const { return vars_ / kCoords; }
    unsigned degree() const { return degree_; }

    std::uint16_t exponent(unsigned particle, unsigned coord) const {
        return exp_[kCoords * (particle - 1) + (coord - 1)];
    }

    unsigned particle_degree(unsigned particle) const {
        const std::uint16_t* e = exp_.data() + kCoords * (particle - 1);
        return unsigned(e[0]) + e[1] + e[2];
    }

    Monomial operator*(const Monomial& other) const {
        if (vars_ != other.vars_)
            throw Error(ErrorCode::ParticleMismatch, "monomials from rings with different particle counts");
        Monomial r(*this);
        for (unsigned k = 0; k < vars_; ++k)
            r.exp_[k] = static_cast<std::uint16_t>(r.exp_[k] + other.exp_[k]);
        r.degree_ = degree_ + other.degree_;
        return r;
    }

    /// Relabel particles: x[i][a] -> x[sigma(i)][a] (sigma 0-based image table).
    Monomial relabeled(const std::vector<std::uint32_t>& image) const {
        Monomial r(particles());
        for (unsigned i = 0; i < particles(); ++i)
            std::memcpy(&r.exp_[kCoords * image[i]], &exp_[kCoords * i], kCoords * sizeof(std::uint16_t));
        r.degree_ = degree_;
        return r;
    }

    const std::uint16_t* exponents() const { return exp_.data(); }
    unsigned var_count() const { return vars_; }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.degree_ == b.degree_ && a.vars_ == b.vars_ &&
               std::memcmp(a.exp_.data(), b.exp_.data(), a.vars_ * sizeof(std::uint16_t)) == 0;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    /// Graded lex: by total degree, then lexicographically on the flattened
    /// exponent vector. Returns <0, 0, >0.
    friend int grlex_cmp(const Monomial& a, const Monomial& b) {
        if (a.degree_ != b.degree_) return a.degree_ < b.degree_ ? -1 : 1;
        for (unsigned v = 0; v < a.vars_; ++v)
            if (a.exp_[v] != b.exp_[v]) return a.exp_[v] < b.exp_[v] ? -1 : 1;
        return 0;
    }

    std::size_t hash() const {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (unsigned v = 0; v < vars_; ++v) {
            h ^= exp_[v];
            h *= 0x100000001b3ULL;
        }
        return h;
    }

private:
    std::array<std::uint16_t, kMaxVars> exp_{}; // particle-major, coordinate-minor
    std::uint32_t degree_ = 0;
    std::uint8_t vars_ = 0;
};

/// Leading-term-first order for polynomial storage and serialization.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_cmp(a, b) > 0; }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/**
 * Bijection on {1..N} with cached sign. Stored 0-based internally.
 */
class ParticlePermutation {
public:
    static ParticlePermutation identity(unsigned n) {
        std::vector<std::uint32_t> im(n);
        std::iota(im.begin(), im.end(), 0u);
        return ParticlePermutation(std::move(im));
    }

    /// Transposition (i j), 1-based.
    static ParticlePermutation transposition(unsigned n, unsigned i, unsigned j) {
        if (i < 1 || j < 1 || i > n || j > n || i == j)
            throw Error(ErrorCode::BadArgument, "invalid transposition");
        auto perm = identity(n);
        std::swap(perm.image_[i - 1], perm.image_[j - 1]);
        perm.sign_ = -1;
        return perm;
    }

    /// From a 1-based image table: particle i maps to images[i-1].
    static ParticlePermutation from_images(const std::vector<std::uint32_t>& images_1based);

    unsigned size() const { return static_cast<unsigned>(image_.size()); }
    int sign() const { return sign_; }

    /// 1-based image of particle i.
    unsigned operator()(unsigned i) const { return image_[i - 1] + 1; }

    const std::vector<std::uint32_t>& image0() const { return image_; }

    /// (a.compose(b))(i) = a(b(i)).
    ParticlePermutation compose(const ParticlePermutation& b) const {
        if (size() != b.size())
            throw Error(ErrorCode::ParticleMismatch, "composing permutations of different sizes");
        std::vector<std::uint32_t> im(size());
        for (unsigned i = 0; i < size(); ++i) im[i] = image_[b.image_[i]];
        ParticlePermutation r(std::move(im));
        r.sign_ = sign_ * b.sign_;
        return r;
    }

private:
    explicit ParticlePermutation(std::vector<std::uint32_t> image)
        : image_(std::move(image)), sign_(1) {}

    static int parity_of(const std::vector<std::uint32_t>& image);

    std::vector<std::uint32_t> image_;
    int sign_;
};

/// Invokes fn(perm) for every permutation of {1..n}, in lexicographic order
/// of the image table. n! calls; callers keep n small.
void for_each_permutation(unsigned n, const std::function<void(const ParticlePermutation&)>& fn);

} // namespace bfgeo
