// Copyright 2026 The bfgeo Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file polynomial.hpp
 * @brief Exact sparse multivariate polynomials with particle-permutation
 *        actions, grading, and (anti)symmetry operators.
 *
 * A Polynomial<K> is an immutable value: every operation returns a new
 * polynomial, terms are kept in canonical graded-lex order with no zero
 * coefficients, and values are safe to move between threads.
 */

#pragma once

#include <bfgeo/field.hpp>
#include <bfgeo/monomial.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <utility>
#include <vector>

namespace bfgeo {

enum class SymmetryKind {
    AntisymmetricAll, // sign flip under every particle transposition
    SymmetricTail,    // invariant under permutations of particles 2..N
};

template <class K>
class Polynomial {
public:
    using Term = std::pair<Monomial, K>;

    Polynomial() = default;

    /// Zero polynomial in the n-particle ring.
    explicit Polynomial(unsigned n) : n_(n) {}

    /// Single term c * m. Zero coefficients collapse to the zero polynomial.
    Polynomial(unsigned n, const Monomial& m, K c) : n_(n) {
        if (m.particles() != n)
            throw Error(ErrorCode::ParticleMismatch, "monomial particle count differs from ring");
        normalize_scalar(c);
        if (!is_zero(c)) terms_.emplace_back(m, std::move(c));
    }

    static Polynomial constant(unsigned n, K c) { return Polynomial(n, Monomial(n), std::move(c)); }

    /// c * x[particle][coord]^e.
    static Polynomial variable(unsigned n, unsigned particle, unsigned coord, K c, unsigned e = 1) {
        return Polynomial(n, Monomial::variable(n, particle, coord, e), std::move(c));
    }

    unsigned particles() const { return n_; }
    bool is_zero_poly() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    /// Total degree; empty for the zero polynomial (its degree sentinel).
    std::optional<unsigned> degree() const {
        if (terms_.empty()) return std::nullopt;
        // Leading term has maximal degree under graded lex.
        return terms_.front().first.degree();
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const unsigned d = terms_.front().first.degree();
        return terms_.back().first.degree() == d;
    }

    const K* coefficient(const Monomial& m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const Monomial& key) { return grlex_cmp(t.first, key) > 0; });
        if (it != terms_.end() && it->first == m) return &it->second;
        return nullptr;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial operator+(const Polynomial& other) const { return merged(other, false); }
    Polynomial operator-(const Polynomial& other) const { return merged(other, true); }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    Polynomial operator*(const Polynomial& other) const {
        check_compatible(other);
        if (terms_.empty()) return Polynomial(n_);
        if (other.terms_.empty()) return Polynomial(n_);
        // Nibble-packed fast path: up to 16 variables with every product
        // exponent below 16 (guaranteed by the total-degree bound).
        if (kCoords * n_ <= 16 &&
            terms_.front().first.degree() + other.terms_.front().first.degree() <= 15)
            return packed_mul(other);
        std::unordered_map<Monomial, K, MonomialHash> acc;
        acc.reserve(terms_.size() * other.terms_.size() / 2 + 8);
        for (const auto& [ma, ca] : terms_) {
            for (const auto& [mb, cb] : other.terms_) {
                Monomial m = ma * mb;
                auto it = acc.find(m);
                if (it == acc.end())
                    acc.emplace(std::move(m), ca * cb);
                else
                    it->second += ca * cb;
            }
        }
        return from_accumulator(n_, std::move(acc));
    }

    Polynomial scaled(K c) const {
        normalize_scalar(c);
        if (is_zero(c)) return Polynomial(n_);
        Polynomial r(*this);
        for (auto& [m, coef] : r.terms_) coef *= c;
        r.prune();
        return r;
    }

    /// Exact evaluation by term summation: point[i-1][a-1] is x[i][a].
    K evaluate(const std::vector<std::array<K, 3>>& point) const {
        if (point.size() != n_)
            throw Error(ErrorCode::DimensionMismatch, "evaluation point has wrong particle count");
        K sample = terms_.empty() ? sample_scalar(point) : terms_.front().second;
        K acc = zero_like(sample);
        for (const auto& [m, c] : terms_) {
            K v = c;
            for (unsigned i = 1; i <= n_; ++i)
                for (unsigned a = 1; a <= kCoords; ++a) {
                    const unsigned e = m.exponent(i, a);
                    for (unsigned k = 0; k < e; ++k) v *= point[i - 1][a - 1];
                }
            acc += v;
        }
        return acc;
    }

    /// x[i][a] -> x[sigma(i)][a]; coefficients unchanged.
    Polynomial permuted(const ParticlePermutation& sigma) const {
        if (sigma.size() != n_)
            throw Error(ErrorCode::ParticleMismatch, "permutation size differs from ring");
        Polynomial r(n_);
        r.terms_.reserve(terms_.size());
        for (const auto& [m, c] : terms_) r.terms_.emplace_back(m.relabeled(sigma.image0()), c);
        r.sort_terms();
        return r;
    }

    /// Signed symmetrization (1/N!) * sum_sigma sgn(sigma) sigma.p.
    /// Idempotent projector onto the totally antisymmetric subspace.
    Polynomial antisymmetrized() const {
        unsigned long factorial = 1;
        for (unsigned k = 2; k <= n_; ++k) factorial *= k;
        if (terms_.empty()) return *this;
        // Reject up front when N! is not invertible (tiny prime fields),
        // even if the signed sum would vanish.
        (void)div_by_int(one_like(terms_.front().second), factorial);
        Polynomial sum(n_);
        for_each_permutation(n_, [&](const ParticlePermutation& sigma) {
            Polynomial image = permuted(sigma);
            if (sigma.sign() < 0)
                sum = sum - image;
            else
                sum = sum + image;
        });
        Polynomial r(n_);
        r.terms_.reserve(sum.terms_.size());
        for (const auto& [m, c] : sum.terms_) {
            K scaled = div_by_int(c, factorial); // throws when N! is not invertible
            if (!is_zero(scaled)) r.terms_.emplace_back(m, std::move(scaled));
        }
        return r;
    }

    /// Checks on adjacent-transposition generators only; equivalent to the
    /// full S_N (resp. tail S_{N-1}) condition.
    bool symmetry_check(SymmetryKind kind) const {
        const unsigned lo = (kind == SymmetryKind::AntisymmetricAll) ? 1u : 2u;
        for (unsigned i = lo; i + 1 <= n_; ++i) {
            Polynomial image = permuted(ParticlePermutation::transposition(n_, i, i + 1));
            if (kind == SymmetryKind::AntisymmetricAll) {
                if (image != -*this) return false;
            } else {
                if (image != *this) return false;
            }
        }
        return true;
    }

    /// Splits into homogeneous components; the keys are the degrees present.
    std::map<unsigned, Polynomial> homogeneous_components() const {
        std::map<unsigned, Polynomial> comps;
        for (const auto& [m, c] : terms_) {
            auto [it, fresh] = comps.try_emplace(m.degree(), n_);
            it->second.terms_.emplace_back(m, c);
        }
        for (auto& [d, poly] : comps) poly.sort_terms();
        return comps;
    }

    /// Degrees per particle appearing in the support (column bookkeeping).
    std::vector<unsigned> max_particle_degrees() const {
        std::vector<unsigned> out(n_, 0);
        for (const auto& [m, c] : terms_)
            for (unsigned i = 1; i <= n_; ++i)
                out[i - 1] = std::max(out[i - 1], m.particle_degree(i));
        return out;
    }

    /// Deterministic plain-text rendering: "c * x[i][a]^e * ..." + " + ...".
    std::string to_text() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << scalar_to_string(c);
            for (unsigned i = 1; i <= n_; ++i)
                for (unsigned a = 1; a <= kCoords; ++a) {
                    unsigned e = m.exponent(i, a);
                    if (e == 0) continue;
                    os << " * x[" << i << "][" << a << "]";
                    if (e > 1) os << "^" << e;
                }
        }
        return os.str();
    }

    static Polynomial from_terms(unsigned n, std::vector<Term> terms) {
        Polynomial r(n);
        for (auto& [m, c] : terms) {
            if (m.particles() != n)
                throw Error(ErrorCode::ParticleMismatch, "term from a different ring");
            normalize_scalar(c);
        }
        r.terms_ = std::move(terms);
        r.sort_terms();
        return r;
    }

private:
    void check_compatible(const Polynomial& other) const {
        if (n_ != other.n_)
            throw Error(ErrorCode::ParticleMismatch,
                        "particle counts differ: " + std::to_string(n_) + " vs " + std::to_string(other.n_));
    }

    // Needed only to type the zero result of evaluating the zero polynomial.
    static K sample_scalar(const std::vector<std::array<K, 3>>& point) {
        if (!point.empty()) return point[0][0];
        return K{};
    }

    Polynomial merged(const Polynomial& other, bool subtract) const {
        check_compatible(other);
        Polynomial r(n_);
        r.terms_.reserve(terms_.size() + other.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < other.terms_.size()) {
            int cmp;
            if (i == terms_.size())
                cmp = -1;
            else if (j == other.terms_.size())
                cmp = 1;
            else
                cmp = grlex_cmp(terms_[i].first, other.terms_[j].first);
            if (cmp > 0) {
                r.terms_.push_back(terms_[i++]);
            } else if (cmp < 0) {
                const auto& [m, c] = other.terms_[j++];
                r.terms_.emplace_back(m, subtract ? -c : c);
            } else {
                K c = subtract ? K(terms_[i].second - other.terms_[j].second)
                               : K(terms_[i].second + other.terms_[j].second);
                if (!is_zero(c)) r.terms_.emplace_back(terms_[i].first, std::move(c));
                ++i;
                ++j;
            }
        }
        return r;
    }

    static Polynomial from_accumulator(unsigned n, std::unordered_map<Monomial, K, MonomialHash> acc) {
        Polynomial r(n);
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!is_zero(c)) r.terms_.emplace_back(m, std::move(c));
        r.sort_terms();
        return r;
    }

public:
    // ---- packed multiplication -------------------------------------------

    static std::uint64_t pack_key(const Monomial& m, unsigned vars) {
        std::uint64_t key = 0;
        const std::uint16_t* e = m.exponents();
        for (unsigned v = 0; v < vars; ++v) key |= std::uint64_t(e[v] & 0xF) << (4 * v);
        return key;
    }

    Monomial unpack_key(std::uint64_t key) const {
        std::uint16_t exps[16];
        for (unsigned v = 0; v < kCoords * n_; ++v)
            exps[v] = static_cast<std::uint16_t>((key >> (4 * v)) & 0xF);
        return Monomial::from_exponents(exps, kCoords * n_);
    }

    /// Open-addressing accumulator over packed keys. Product keys add
    /// nibble-wise without carries because every exponent stays below 16.
    class PackedAccumulator {
    public:
        static constexpr std::uint64_t kEmpty = ~std::uint64_t(0); // needs degree >= 30

        explicit PackedAccumulator(std::size_t expected) {
            capacity_ = 64;
            while (capacity_ < 2 * expected) capacity_ <<= 1;
            slots_.assign(capacity_, Slot{kEmpty, K{}});
        }

        void add_product(const Polynomial& a, const Polynomial& b, bool negate, unsigned vars) {
            std::vector<std::uint64_t> ka(a.terms_.size()), kb(b.terms_.size());
            for (std::size_t i = 0; i < a.terms_.size(); ++i) ka[i] = pack_key(a.terms_[i].first, vars);
            for (std::size_t i = 0; i < b.terms_.size(); ++i) kb[i] = pack_key(b.terms_[i].first, vars);
            for (std::size_t i = 0; i < ka.size(); ++i) {
                const K& ca = a.terms_[i].second;
                for (std::size_t jj = 0; jj < kb.size(); ++jj) {
                    K prod = ca * b.terms_[jj].second;
                    accumulate(ka[i] + kb[jj], prod, negate);
                }
            }
        }

        Polynomial harvest(const Polynomial& ring_like) {
            Polynomial r(ring_like.n_);
            r.terms_.reserve(used_);
            for (auto& s : slots_)
                if (s.key != kEmpty && !is_zero(s.val))
                    r.terms_.emplace_back(ring_like.unpack_key(s.key), std::move(s.val));
            r.sort_terms();
            return r;
        }

    private:
        struct Slot {
            std::uint64_t key;
            K val;
        };

        static std::uint64_t hash_of(std::uint64_t key) {
            std::uint64_t z = key + 0x9e3779b97f4a7c15ULL;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            return z ^ (z >> 27);
        }

        void accumulate(std::uint64_t key, K& prod, bool negate) {
            const std::size_t mask = capacity_ - 1;
            std::size_t pos = hash_of(key) & mask;
            while (true) {
                if (slots_[pos].key == key) {
                    if (negate)
                        slots_[pos].val -= prod;
                    else
                        slots_[pos].val += prod;
                    return;
                }
                if (slots_[pos].key == kEmpty) {
                    slots_[pos].key = key;
                    slots_[pos].val = negate ? K(-prod) : std::move(prod);
                    if (++used_ * 10 > capacity_ * 7) rehash();
                    return;
                }
                pos = (pos + 1) & mask;
            }
        }

        void rehash() {
            std::vector<Slot> bigger(capacity_ * 2, Slot{kEmpty, K{}});
            const std::size_t mask = capacity_ * 2 - 1;
            for (auto& s : slots_) {
                if (s.key == kEmpty) continue;
                std::size_t pos = hash_of(s.key) & mask;
                while (bigger[pos].key != kEmpty) pos = (pos + 1) & mask;
                bigger[pos] = std::move(s);
            }
            slots_ = std::move(bigger);
            capacity_ *= 2;
        }

        std::vector<Slot> slots_;
        std::size_t capacity_ = 0;
        std::size_t used_ = 0;
    };

    struct ProductPart {
        const Polynomial* a;
        const Polynomial* b;
        bool negate;
    };

    static bool fused_eligible(unsigned n, const std::vector<ProductPart>& parts) {
        if (kCoords * n > 16) return false;
        for (const auto& part : parts) {
            if (part.a->terms_.empty() || part.b->terms_.empty()) continue;
            if (part.a->terms_.front().first.degree() + part.b->terms_.front().first.degree() > 15)
                return false;
        }
        return true;
    }

    /// sum over parts of (+/-) a*b with a single accumulation and one sort.
    static Polynomial product_sum(unsigned n, const std::vector<ProductPart>& parts) {
        if (parts.empty()) return Polynomial(n);
        if (fused_eligible(n, parts)) {
            std::size_t expected = 0;
            for (const auto& part : parts)
                expected = std::max(expected, part.a->terms_.size() * part.b->terms_.size() / 4);
            PackedAccumulator acc(std::min<std::size_t>(expected + 8, std::size_t(1) << 22));
            const unsigned vars = kCoords * n;
            for (const auto& part : parts) {
                if (part.a->terms_.empty() || part.b->terms_.empty()) continue;
                acc.add_product(*part.a, *part.b, part.negate, vars);
            }
            return acc.harvest(Polynomial(n));
        }
        Polynomial out(n);
        for (const auto& part : parts) {
            Polynomial prod = *part.a * *part.b;
            out = part.negate ? out - prod : out + prod;
        }
        return out;
    }

    Polynomial packed_mul(const Polynomial& other) const {
        PackedAccumulator acc(std::min<std::size_t>(terms_.size() * other.terms_.size() / 4 + 8,
                                                    std::size_t(1) << 22));
        acc.add_product(*this, other, false, kCoords * n_);
        return acc.harvest(*this);
    }

private:
    void sort_terms() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& a, const Term& b) { return grlex_cmp(a.first, b.first) > 0; });
        // Adjacent duplicates may appear when callers hand in raw term lists.
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().first == t.first)
                out.back().second += t.second;
            else
                out.push_back(std::move(t));
        }
        terms_.clear();
        for (auto& t : out)
            if (!is_zero(t.second)) terms_.push_back(std::move(t));
    }

    void prune() {
        terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                    [](const Term& t) { return is_zero(t.second); }),
                     terms_.end());
    }

    unsigned n_ = 0;
    std::vector<Term> terms_; // graded-lex descending, no zero coefficients
};

using RatPoly = Polynomial<Rat>;
using FpPoly = Polynomial<Fp>;

} // namespace bfgeo
