#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hsca/linalg.hpp"
#include "hsca/spaces.hpp"
#include "hsca/verifier.hpp"

using namespace hsca;

namespace {

CliffPoly uvar(int m, int j) { return CliffPoly::variable(m, Family::U, j); }

}  // namespace

TEST_CASE("exact nullspace and inverse") {
  // x + y + z = 0 has a two-dimensional nullspace
  const RationalMatrix a{{Rational(1), Rational(1), Rational(1)}};
  const auto ns = nullspace(a);
  REQUIRE(ns.size() == 2);
  for (const auto& v : ns) {
    CHECK(v[0] + v[1] + v[2] == Rational(0));
  }
  CHECK(rank(a) == 1);

  const RationalMatrix b{{Rational(1, 2), Rational(1)}, {Rational(1), Rational(3)}};
  const auto inv = invert(b);
  REQUIRE(inv.has_value());
  // b * inv == identity
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Rational dot(0);
      for (int l = 0; l < 2; ++l) dot += b[i][l] * (*inv)[l][j];
      CHECK(dot == Rational(i == j ? 1 : 0));
    }
  }
  const RationalMatrix singular{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
  CHECK(!invert(singular).has_value());

  const auto sol = solve(b, {Rational(2), Rational(5)});
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] * Rational(1, 2) + (*sol)[1] == Rational(2));
  CHECK((*sol)[0] + (*sol)[1] * Rational(3) == Rational(5));
  CHECK(!solve(singular, {Rational(1), Rational(0)}).has_value());
}

TEST_CASE("harmonic bases have the expected rank and are harmonic") {
  const auto b31 = harmonic_basis(3, 1);
  REQUIRE(b31->size() == 3);
  CHECK(b31->elems[0] == uvar(3, 1));
  CHECK(b31->elems[1] == uvar(3, 2));
  CHECK(b31->elems[2] == uvar(3, 3));

  CHECK(harmonic_basis(3, 2)->size() == 5);
  CHECK(harmonic_basis(2, 0)->size() == 1);

  for (int m = 2; m <= 6; ++m) {
    for (int k = 0; k <= 4; ++k) {
      const auto basis = harmonic_basis(m, k);
      CHECK(basis->size() == harmonic_space_dim(m, k));
      for (const auto& e : basis->elems) {
        CHECK(laplacian(e, Family::U).is_zero());
        CHECK(e.is_homogeneous(Family::U, k));
      }
    }
  }
}

TEST_CASE("harmonic basis elements are linearly independent") {
  const auto basis = harmonic_basis(4, 3);
  // coefficient matrix over the degree-3 monomials must have full column rank
  const auto monos = u_monomials(4, 3, 4);
  RationalMatrix coeffs(monos.size(), RationalVector(basis->size(), Rational(0)));
  for (int col = 0; col < basis->size(); ++col) {
    for (const auto& [mono, coeff] : basis->elems[col].terms()) {
      for (std::size_t row = 0; row < monos.size(); ++row) {
        if (monos[row] == mono) {
          coeffs[row][col] = coeff.scalar_part().rational_part();
        }
      }
    }
  }
  CHECK(rank(coeffs) == basis->size());
}

TEST_CASE("monogenic bases satisfy the Dirac constraint and the rank formula") {
  for (int m = 3; m <= 6; ++m) {
    for (int k = 0; k <= 4; ++k) {
      const auto basis = monogenic_basis(m, k);
      CHECK(basis->size() == monogenic_space_rank(m, k));
      for (const auto& e : basis->elems) {
        CHECK(dirac(e, Family::U).is_zero());
        CHECK(e.is_homogeneous(Family::U, k));
      }
    }
  }
  CHECK(monogenic_basis(3, 0)->size() == 1);
  CHECK(monogenic_basis(4, 2)->size() == 6);
}

TEST_CASE("space dimensions satisfy the decomposition count") {
  for (int m = 3; m <= 6; ++m) {
    for (int k = 1; k <= 4; ++k) {
      CHECK(harmonic_space_dim(m, k) ==
            monogenic_space_rank(m, k) + monogenic_space_rank(m, k - 1));
      // also as constructed bases
      CHECK(harmonic_basis(m, k)->size() ==
            monogenic_basis(m, k)->size() + monogenic_basis(m, k - 1)->size());
    }
  }
}

TEST_CASE("projection examples at m=3, k=1") {
  const int m = 3;
  const CliffPoly h = uvar(m, 1);
  const CliffPoly uvec = CliffPoly::vector_variable(m, Family::U);

  // P⁺u₁ = u₁ + u e₁/3
  const CliffPoly expected_plus =
      h + poly_mul(uvec, CliffPoly::constant(Multivector::basis_vector(m, 1)))
              .scaled(ExactScalar(Rational(1, 3)));
  CHECK(project_plus(h) == expected_plus);
  CHECK(dirac(project_plus(h), Family::U).is_zero());
  CHECK(project_minus(h) == h - expected_plus);

  // already monogenic input is fixed; u-multiples are annihilated
  const CliffPoly p = project_plus(h);
  CHECK(project_plus(p) == p);
  const CliffPoly up = poly_mul(uvec, CliffPoly::constant(Multivector::basis_vector(m, 2)));
  CHECK(project_plus(up).is_zero());
  CHECK(project_minus(up) == up);
}

TEST_CASE("projections reject non-harmonic input") {
  const int m = 3;
  const CliffPoly bad = poly_mul(uvar(m, 1), uvar(m, 1));  // Δ_u ≠ 0
  CHECK_THROWS_AS(project_plus(bad), std::invalid_argument);
  CHECK_THROWS_AS(project_minus(bad), std::invalid_argument);
  CHECK_THROWS_AS(almansi_split(bad), std::invalid_argument);
}

TEST_CASE("projector algebra on random harmonics") {
  SplitMix64 rng(11);
  for (int m = 3; m <= 5; ++m) {
    for (int k = 1; k <= 3; ++k) {
      for (int trial = 0; trial < 20; ++trial) {
        const CliffPoly h = random_h_field(m, k, 0, rng).poly;
        const HPair split = almansi_split(h);
        CHECK(split.f1 + split.f2 == h);
        CHECK(project_plus(split.f1) == split.f1);
        CHECK(project_minus(split.f2) == split.f2);
        CHECK(project_minus(split.f1).is_zero());
        CHECK(project_plus(split.f2).is_zero());
        CHECK(in_monogenic_summand(split.f1));
        CHECK(in_complement_summand(split.f2));
      }
    }
  }
}

TEST_CASE("multiplication by u shifts monogenics with the known eigenvalue") {
  SplitMix64 rng(23);
  for (int m = 3; m <= 5; ++m) {
    for (int k = 1; k <= 3; ++k) {
      const CliffPoly uvec = CliffPoly::vector_variable(m, Family::U);
      for (int trial = 0; trial < 10; ++trial) {
        const CliffPoly p = random_monogenic(m, k - 1, rng);
        CHECK(dirac(poly_mul(uvec, p), Family::U) ==
              p.scaled(ExactScalar(-(m + 2 * k - 2))));
      }
    }
  }
}

TEST_CASE("zero splits to zero") {
  const HPair split = almansi_split(CliffPoly::zero(3));
  CHECK(split.f1.is_zero());
  CHECK(split.f2.is_zero());
}

TEST_CASE("harmonic gram matrices are diagonal-positive and symmetric") {
  const auto basis = harmonic_basis(3, 2);
  const auto& g = basis->gram();
  REQUIRE(g.size() == static_cast<std::size_t>(basis->size()));
  for (int i = 0; i < basis->size(); ++i) {
    CHECK(g[i][i].sign() > 0);
    for (int j = 0; j < basis->size(); ++j) CHECK(g[i][j] == g[j][i]);
  }
}
