#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hsca/multivector.hpp"
#include "hsca/verifier.hpp"

using namespace hsca;

namespace {

Multivector e(int m, int j) { return Multivector::basis_vector(m, j); }

Multivector blade(int m, std::initializer_list<int> idx) {
  Multivector out = Multivector::scalar(m, ExactScalar(1));
  for (int j : idx) out = geometric_product(out, e(m, j));
  return out;
}

// Conjugation by explicit factor reversal, independent of the grade-sign
// shortcut used by the implementation.
Multivector conjugate_by_expansion(const Multivector& a) {
  Multivector out(a.dim());
  for (const auto& [mask, coeff] : a.terms()) {
    Multivector piece = Multivector::scalar(a.dim(), coeff);
    for (int j = a.dim(); j >= 1; --j) {
      if (mask & (1u << (j - 1))) {
        piece = geometric_product(piece, e(a.dim(), j).scaled(ExactScalar(-1)));
      }
    }
    out += piece;
  }
  return out;
}

Multivector random_small_multivector(int m, SplitMix64& rng, int max_grade) {
  Multivector out(m);
  for (int t = 0; t < 4; ++t) {
    BladeMask mask;
    do {
      mask = static_cast<BladeMask>(rng.below(std::uint64_t{1} << m));
    } while (blade_grade(mask) > max_grade);
    out.add_term(mask, ExactScalar(rng.small_rational()));
  }
  return out;
}

}  // namespace

TEST_CASE("generator products satisfy the defining relations") {
  for (int m = 2; m <= 8; ++m) {
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= m; ++j) {
        const Multivector anti =
            geometric_product(e(m, i), e(m, j)) + geometric_product(e(m, j), e(m, i));
        CHECK(anti == Multivector::scalar(m, ExactScalar(i == j ? -2 : 0)));
      }
    }
  }
}

TEST_CASE("product examples") {
  const int m = 3;
  CHECK(geometric_product(e(m, 1), e(m, 1)) == Multivector::scalar(m, ExactScalar(-1)));
  CHECK(geometric_product(blade(m, {1, 2}), blade(m, {2, 1})) ==
        Multivector::scalar(m, ExactScalar(1)));
  const Multivector v = e(m, 1) + e(m, 2);
  CHECK(geometric_product(v, v) == Multivector::scalar(m, ExactScalar(-2)));
}

TEST_CASE("vectors square to minus their length") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = 2 + static_cast<int>(rng.below(7));
    VectorM x;
    x.coords.resize(m);
    for (auto& c : x.coords) c = ExactScalar(rng.small_rational());
    const Multivector sq = geometric_product(x.to_multivector(), x.to_multivector());
    CHECK(sq == Multivector::scalar(m, -x.norm_squared()));
  }
}

TEST_CASE("geometric product is associative") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const int m = 2 + static_cast<int>(rng.below(7));
    const Multivector a = random_small_multivector(m, rng, 3);
    const Multivector b = random_small_multivector(m, rng, 3);
    const Multivector c = random_small_multivector(m, rng, 3);
    CHECK(geometric_product(geometric_product(a, b), c) ==
          geometric_product(a, geometric_product(b, c)));
  }
}

TEST_CASE("conjugation examples and anti-automorphism") {
  const int m = 3;
  CHECK(clifford_conjugate(e(m, 1)) == e(m, 1).scaled(ExactScalar(-1)));
  CHECK(clifford_conjugate(blade(m, {1, 2})) == blade(m, {1, 2}).scaled(ExactScalar(-1)));
  const Multivector mixed = Multivector::scalar(m, ExactScalar(1)) + blade(m, {1, 2, 3});
  CHECK(clifford_conjugate(mixed) == mixed);
  CHECK(conjugate_by_expansion(mixed) == mixed);

  SplitMix64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const int md = 2 + static_cast<int>(rng.below(7));
    const Multivector a = random_small_multivector(md, rng, md);
    const Multivector b = random_small_multivector(md, rng, md);
    CHECK(clifford_conjugate(geometric_product(a, b)) ==
          geometric_product(clifford_conjugate(b), clifford_conjugate(a)));
    CHECK(clifford_conjugate(a) == conjugate_by_expansion(a));
  }
}

TEST_CASE("grade projection") {
  const int m = 3;
  const Multivector mixed =
      Multivector::scalar(m, ExactScalar(1)) + e(m, 1) + blade(m, {1, 2});
  CHECK(grade_project(mixed, 1) == e(m, 1));
  CHECK(grade_project(blade(m, {1, 2}), 0).is_zero());
  CHECK(grade_project(geometric_product(e(m, 1), e(m, 1)), 0) ==
        Multivector::scalar(m, ExactScalar(-1)));
  Multivector sum(m);
  for (int g = 0; g <= m; ++g) sum += grade_project(mixed, g);
  CHECK(sum == mixed);
  CHECK_THROWS(grade_project(mixed, m + 1));
}

TEST_CASE("reflection examples") {
  const int m = 3;
  VectorM a{{ExactScalar(1), ExactScalar(0), ExactScalar(0)}};
  VectorM x{{ExactScalar(2), ExactScalar(3), ExactScalar(0)}};
  VectorM rx = reflect(a, x);
  CHECK(rx.coords[0] == ExactScalar(-2));
  CHECK(rx.coords[1] == ExactScalar(3));

  VectorM parallel{{ExactScalar(1), ExactScalar(0), ExactScalar(0)}};
  CHECK(reflect(a, parallel).coords[0] == ExactScalar(-1));

  // mirrors through the two diagonals: a·x·a negates the component along a,
  // so (e1+e2)/√2 sends e1 to −e2 and (e1−e2)/√2 sends e1 to e2
  const ExactScalar half_root2(Rational(0), Rational(1, 2), 2);
  VectorM diag_plus{{half_root2, half_root2, ExactScalar(0)}};
  VectorM diag_minus{{half_root2, -half_root2, ExactScalar(0)}};
  VectorM e1{{ExactScalar(1), ExactScalar(0), ExactScalar(0)}};
  VectorM image = reflect(diag_plus, e1);
  CHECK(image.coords[0] == ExactScalar(0));
  CHECK(image.coords[1] == ExactScalar(-1));
  CHECK(image.coords[2] == ExactScalar(0));
  image = reflect(diag_minus, e1);
  CHECK(image.coords[0] == ExactScalar(0));
  CHECK(image.coords[1] == ExactScalar(1));
  CHECK(image.coords[2] == ExactScalar(0));

  VectorM not_unit{{ExactScalar(2), ExactScalar(0), ExactScalar(0)}};
  CHECK_THROWS(reflect(not_unit, x));
}

TEST_CASE("reflection is an involutive isometry") {
  SplitMix64 rng(31337);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 2 + static_cast<int>(rng.below(7));
    const VectorM a = random_unit_vector(m, rng);
    CHECK(a.norm_squared() == ExactScalar(1));
    VectorM x;
    x.coords.resize(m);
    for (auto& c : x.coords) c = ExactScalar(rng.small_rational());
    const VectorM rx = reflect(a, x);
    CHECK(rx.norm_squared() == x.norm_squared());
    const VectorM rrx = reflect(a, rx);
    for (int j = 0; j < m; ++j) CHECK(rrx.coords[j] == x.coords[j]);
  }
}
