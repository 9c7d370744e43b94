// Copyright 2026 The bfgeo Authors
// SPDX-License-Identifier: Apache-2.0

#include <bfgeo/ansatz.hpp>
#include <bfgeo/dimension.hpp>
#include <bfgeo/rng.hpp>

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

using namespace bfgeo;
using namespace bfgeo::ansatz;

namespace {

RatPoly var(unsigned n, unsigned i, unsigned a, long c = 1, unsigned e = 1) {
    return RatPoly::variable(n, i, a, Rat(c), e);
}

std::vector<Rat> random_coeffs(std::size_t count, SplitMix64& rng) {
    std::vector<Rat> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.emplace_back(rng.next_in(-4, 4));
    return out;
}

// Orbit-enumeration oracle: group all degree-d monomials of the N-particle
// ring that are tail-symmetric images of each other; count orbits of
// (own monomial, tail multiset).
std::size_t tail_basis_count_oracle(unsigned n, unsigned d) {
    // Enumerate every monomial of total degree d in the n-particle ring and
    // canonicalize its tail block multiset.
    std::set<std::vector<std::vector<std::uint16_t>>> orbits;
    std::vector<Monomial> all;
    std::function<void(unsigned, unsigned, Monomial)> rec = [&](unsigned var_idx, unsigned left, Monomial m) {
        if (var_idx == 3 * n) {
            if (left == 0) all.push_back(m);
            return;
        }
        for (unsigned e = 0; e <= left; ++e) {
            Monomial next = m;
            if (e > 0)
                next = next * Monomial::variable(n, var_idx / 3 + 1, var_idx % 3 + 1, e);
            rec(var_idx + 1, left - e, next);
        }
    };
    rec(0, d, Monomial(n));
    for (const auto& m : all) {
        std::vector<std::vector<std::uint16_t>> key;
        key.push_back({m.exponent(1, 1), m.exponent(1, 2), m.exponent(1, 3)});
        std::vector<std::vector<std::uint16_t>> tail;
        for (unsigned i = 2; i <= n; ++i) tail.push_back({m.exponent(i, 1), m.exponent(i, 2), m.exponent(i, 3)});
        std::sort(tail.begin(), tail.end());
        for (auto& t : tail) key.push_back(std::move(t));
        orbits.insert(std::move(key));
    }
    return orbits.size();
}

} // namespace

TEST_CASE("tail_sym_basis pinned cases") {
    auto b21 = tail_sym_basis<Rat>(2, 1, Rat(1));
    REQUIRE(b21.size() == 6);
    // z = 1 first: own-slot variables, then the tail slot variables.
    CHECK(b21.elements[0] == var(2, 1, 1));
    CHECK(b21.elements[1] == var(2, 1, 2));
    CHECK(b21.elements[2] == var(2, 1, 3));
    CHECK(b21.elements[3] == var(2, 2, 1));
    CHECK(b21.elements[4] == var(2, 2, 2));
    CHECK(b21.elements[5] == var(2, 2, 3));

    auto b31 = tail_sym_basis<Rat>(3, 1, Rat(1));
    REQUIRE(b31.size() == 6);
    CHECK(b31.elements[0] == var(3, 1, 1));
    CHECK(b31.elements[3] == var(3, 2, 1) + var(3, 3, 1));
    CHECK(b31.elements[4] == var(3, 2, 2) + var(3, 3, 2));

    // N=3, d=2, z=0, tail degrees (1,1): the mixed orbit sum appears.
    auto b32 = tail_sym_basis<Rat>(3, 2, Rat(1));
    const auto want = var(3, 2, 1) * var(3, 3, 2) + var(3, 2, 2) * var(3, 3, 1);
    bool found = false;
    for (const auto& el : b32.elements) found = found || el == want;
    CHECK(found);
}

TEST_CASE("tail basis elements satisfy the column-function invariants") {
    for (unsigned n = 1; n <= 4; ++n) {
        for (unsigned d = 0; d <= 3; ++d) {
            auto basis = tail_sym_basis<Rat>(n, d, Rat(1));
            for (const auto& el : basis.elements) {
                CHECK(el.is_homogeneous());
                if (!el.is_zero_poly()) CHECK(*el.degree() == d);
                CHECK(el.symmetry_check(SymmetryKind::SymmetricTail));
            }
            // Duplicate-free.
            std::set<std::string> texts;
            for (const auto& el : basis.elements) texts.insert(el.to_text());
            CHECK(texts.size() == basis.size());
        }
    }
}

TEST_CASE("tail basis count equals the source column dimension and the orbit oracle") {
    for (unsigned n = 1; n <= 5; ++n)
        for (unsigned d = 0; d <= 6; ++d) {
            if (n >= 4 && d >= 5) continue; // keep the oracle affordable
            auto keys = tail_basis_keys(n, d);
            CHECK(BigInt(keys.size()) == dimension::source_column_dim_exact(n, d));
            if (n <= 3 || d <= 3) CHECK(keys.size() == tail_basis_count_oracle(n, d));
        }
    // The full-range count identity (no materialization needed).
    for (unsigned d = 0; d <= 6; ++d)
        CHECK(BigInt(tail_basis_keys(5, d).size()) == dimension::source_column_dim_exact(5, d));
}

TEST_CASE("tail basis elements are linearly independent (F_p rank equals count)") {
    const std::uint32_t p = 2147483647u;
    for (unsigned n : {2u, 3u}) {
        for (unsigned d = 0; d <= 3; ++d) {
            auto basis = tail_sym_basis<Fp>(n, d, Fp{1, p});
            // Distinct leading monomials under a total order imply independence.
            std::set<std::string> leading;
            for (const auto& el : basis.elements) {
                REQUIRE(!el.is_zero_poly());
                leading.insert(FpPoly(el.particles(), el.terms().front().first, Fp{1, p}).to_text());
            }
            CHECK(leading.size() == basis.size());
        }
    }
}

TEST_CASE("assemble_phi: zero, one-hot, linearity") {
    auto basis = tail_sym_basis<Rat>(3, 2, Rat(1));
    auto zero = assemble_phi(basis, std::vector<Rat>(basis.size(), Rat(0)));
    CHECK(zero.poly.is_zero_poly());

    std::vector<Rat> onehot(basis.size(), Rat(0));
    onehot[4] = Rat(1);
    CHECK(assemble_phi(basis, onehot).poly == basis.elements[4]);

    SplitMix64 rng(9);
    auto c1 = random_coeffs(basis.size(), rng);
    auto c2 = random_coeffs(basis.size(), rng);
    std::vector<Rat> sum(basis.size());
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = c1[i] + c2[i];
    CHECK(assemble_phi(basis, sum).poly ==
          assemble_phi(basis, c1).poly + assemble_phi(basis, c2).poly);

    CHECK_THROWS_AS(assemble_phi(basis, std::vector<Rat>(basis.size() + 1, Rat(0))), Error);
}

TEST_CASE("backflow matrix: slater case, substitution, tail order immaterial") {
    // Slater case: phi_j depends only on slot 1; entry (i,j) = phi_j(x_i).
    auto phis = slater_phis<Rat>({var(2, 1, 1), var(2, 1, 2)});
    auto m = backflow_matrix(phis);
    CHECK(m[0][0] == var(2, 1, 1));
    CHECK(m[1][0] == var(2, 2, 1));
    CHECK(m[0][1] == var(2, 1, 2));
    CHECK(m[1][1] == var(2, 2, 2));

    // phi_2(x; y) = x[1]^2 y[1]: entry (2,2) = x[2][1]^2 x[1][1].
    auto phi2 = make_phi(var(2, 1, 1, 1, 2) * var(2, 2, 1), 3);
    auto phi1 = make_phi(RatPoly::constant(2, Rat(1)), 0);
    auto m2 = backflow_matrix<Rat>({phi1, phi2});
    CHECK(m2[1][1] == var(2, 2, 1, 1, 2) * var(2, 1, 1));

    // Permuting tail slots of a phi leaves the matrix unchanged.
    auto basis = tail_sym_basis<Rat>(3, 2, Rat(1));
    SplitMix64 rng(12);
    auto phi = assemble_phi(basis, random_coeffs(basis.size(), rng));
    auto swapped = make_phi(phi.poly.permuted(ParticlePermutation::transposition(3, 2, 3)), phi.degree);
    std::vector<PhiFunction<Rat>> a{phi, phi, phi}, b{swapped, phi, phi};
    CHECK(backflow_matrix(a) == backflow_matrix(b));
}

TEST_CASE("backflow determinant pinned cases") {
    // 2x2 Slater.
    auto det = backflow_det(slater_phis<Rat>({var(2, 1, 1), var(2, 1, 2)}));
    CHECK(det == var(2, 1, 1) * var(2, 2, 2) - var(2, 1, 2) * var(2, 2, 1));

    // Hand cofactor expansion: phi1 = 1, phi2(x;y) = x[1]^2 y[1].
    auto phi1 = make_phi(RatPoly::constant(2, Rat(1)), 0);
    auto phi2 = make_phi(var(2, 1, 1, 1, 2) * var(2, 2, 1), 3);
    auto det2 = backflow_det<Rat>({phi1, phi2});
    CHECK(det2 == var(2, 2, 1, 1, 2) * var(2, 1, 1) - var(2, 1, 1, 1, 2) * var(2, 2, 1));

    // Equal columns annihilate.
    auto same = make_phi(var(3, 1, 1) + var(3, 2, 1) + var(3, 3, 1), 1);
    auto other = make_phi(var(3, 1, 2), 1);
    CHECK(backflow_det<Rat>({same, same, other}).is_zero_poly());
}

TEST_CASE("vandermonde special case") {
    auto det2 = backflow_det(vandermonde_phis<Rat>(2, Rat(1)));
    CHECK(det2 == var(2, 2, 1) - var(2, 1, 1));

    auto det3 = backflow_det(vandermonde_phis<Rat>(3, Rat(1)));
    auto expect = (var(3, 2, 1) - var(3, 1, 1)) * (var(3, 3, 1) - var(3, 1, 1)) *
                  (var(3, 3, 1) - var(3, 2, 1));
    CHECK(det3 == expect);

    auto det4 = backflow_det(vandermonde_phis<Rat>(4, Rat(1)));
    CHECK(det4.symmetry_check(SymmetryKind::AntisymmetricAll));
    CHECK(det4.degree() == 6u);
}

TEST_CASE("slater rejects tail-dependent or inhomogeneous orbitals") {
    CHECK_THROWS_AS(slater_phis<Rat>({var(2, 2, 1), var(2, 1, 1)}), Error);
    CHECK_THROWS_AS(slater_phis<Rat>({var(2, 1, 1) + RatPoly::constant(2, Rat(1)), var(2, 1, 2)}), Error);
}

TEST_CASE("tail-symmetry failures are rejected with the column named") {
    auto good = make_phi(var(3, 1, 1), 1);
    PhiFunction<Rat> bad{var(3, 2, 1), 1}; // bypasses make_phi on purpose
    try {
        backflow_matrix<Rat>({good, bad, good});
        FAIL("expected a tail-symmetry error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotTailSymmetric);
        CHECK(std::string(e.what()).find("column 2") != std::string::npos);
    }
}

TEST_CASE("determinant properties on random configurations") {
    SplitMix64 rng(77);
    for (unsigned n = 2; n <= 4; ++n) {
        for (int rep = 0; rep < 3; ++rep) {
            combinat::DegreeProfile profile;
            for (unsigned j = 0; j < n; ++j)
                profile.push_back(static_cast<unsigned>(rng.next_below(n == 4 ? 2 : 3)));
            std::sort(profile.begin(), profile.end());
            auto config = make_config<Rat>(n, profile, Rat(1));
            std::vector<Rat> coeffs = random_coeffs(config.param_count(), rng);
            auto phis = assemble_columns(config, coeffs);
            auto det = backflow_det(phis);

            CHECK(det.symmetry_check(SymmetryKind::AntisymmetricAll));
            unsigned total = 0;
            for (unsigned d : profile) total += d;
            if (!det.is_zero_poly()) CHECK(*det.degree() == total);

            // Multilinearity in column 0.
            auto alt = phis;
            SplitMix64 rng2(rep + 100);
            auto other_coeffs = random_coeffs(config.columns[0].size(), rng2);
            auto other = assemble_phi(config.columns[0], other_coeffs);
            const Rat alpha(3), beta(-2);
            std::vector<Rat> mixed(config.columns[0].size());
            for (std::size_t i = 0; i < mixed.size(); ++i)
                mixed[i] = alpha * coeffs[i] + beta * other_coeffs[i];
            alt[0] = assemble_phi(config.columns[0], mixed);
            auto left = backflow_det(alt);
            auto phis_b = phis;
            phis_b[0] = other;
            auto right = det.scaled(alpha) + backflow_det(phis_b).scaled(beta);
            CHECK(left == right);

            // Cone property: scaling one column scales the output.
            auto scaled_phis = phis;
            scaled_phis[0] = PhiFunction<Rat>{phis[0].poly.scaled(Rat(5)), phis[0].degree};
            CHECK(backflow_det(scaled_phis) == det.scaled(Rat(5)));
        }
    }
}

TEST_CASE("subset-DP determinant equals the naive signed permutation sum") {
    SplitMix64 rng(555);
    for (unsigned n = 2; n <= 4; ++n) {
        // Random polynomial entries, no structure assumed.
        PolyMatrix<Rat> m(n, std::vector<RatPoly>(n, RatPoly(n)));
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                RatPoly p(n);
                for (int t = 0; t < 3; ++t) {
                    Monomial mono(n);
                    for (unsigned q = 1; q <= n; ++q)
                        if (rng.next_below(2))
                            mono = mono * Monomial::variable(n, q, 1 + unsigned(rng.next_below(3)));
                    p = p + RatPoly(n, mono, Rat(rng.next_in(-3, 3)));
                }
                m[i][j] = p;
            }
        RatPoly naive(n);
        for_each_permutation(n, [&](const ParticlePermutation& sigma) {
            RatPoly prod = RatPoly::constant(n, Rat(1));
            for (unsigned col = 1; col <= n; ++col) prod = prod * m[sigma(col) - 1][col - 1];
            naive = sigma.sign() < 0 ? naive - prod : naive + prod;
        });
        CHECK(determinant(m) == naive);
    }
}

TEST_CASE("cofactor minors reproduce the determinant") {
    SplitMix64 rng(123);
    for (unsigned n = 2; n <= 4; ++n) {
        combinat::DegreeProfile profile(n, 1);
        auto config = make_config<Rat>(n, profile, Rat(1));
        auto phis = assemble_columns(config, random_coeffs(config.param_count(), rng));
        auto m = backflow_matrix(phis);
        auto det = determinant(m);
        auto minors = first_minors(m);
        for (unsigned j = 0; j < n; ++j) {
            RatPoly acc(n);
            for (unsigned i = 0; i < n; ++i) {
                auto piece = m[i][j] * minors[i][j];
                acc = ((i + j) % 2 == 0) ? acc + piece : acc - piece;
            }
            CHECK(acc == det);
        }
    }
}

TEST_CASE("determinant guard rejects oversized matrices") {
    PolyMatrix<Rat> m(9, std::vector<RatPoly>(9, RatPoly(9)));
    CHECK_THROWS_AS(determinant(m), Error);
}
