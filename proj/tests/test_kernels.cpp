#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hsca/kernels.hpp"
#include "hsca/spaces.hpp"
#include "hsca/verifier.hpp"

using namespace hsca;

namespace {

CliffPoly uvar(int m, int j) { return CliffPoly::variable(m, Family::U, j); }
CliffPoly vvar(int m, int j) { return CliffPoly::variable(m, Family::V, j); }

std::vector<double> rand_point(int m, double lo, double hi, SplitMix64& rng) {
  std::vector<double> x(m);
  double norm = 0;
  for (auto& c : x) {
    c = 2.0 * rng.unit_double() - 1.0;
    norm += c * c;
  }
  const double target = lo + (hi - lo) * rng.unit_double();
  for (auto& c : x) c *= target / std::sqrt(norm);
  return x;
}

}  // namespace

TEST_CASE("scalar zonal kernel: constants and the degree-one closed form") {
  for (int m = 3; m <= 5; ++m) {
    const auto k0 = zonal_harmonic_kernel(m, 0);
    CHECK(k0->poly == CliffPoly::scalar_constant(m, ExactScalar(1)));

    const auto k1 = zonal_harmonic_kernel(m, 1);
    CliffPoly expected(m);
    for (int j = 1; j <= m; ++j) {
      expected += poly_mul(uvar(m, j), vvar(m, j)).scaled(ExactScalar(Rational(m)));
    }
    CHECK(k1->poly == expected);
  }
}

TEST_CASE("scalar zonal kernel matches the Gegenbauer closed form") {
  // Independent oracle: the degree-k zonal harmonic is the bi-homogeneous
  // polynomial ((2k+m-2)/(m-2)) Σ_j (-1)^j c_j 2^{k-2j} <u,v>^{k-2j} (|u|²|v|²)^j
  // with c_j = [Π_{i<k-j} (λ+i)] / (j! (k-2j)!), λ = (m-2)/2, all exactly
  // rational.  The Gram-inverse construction must reproduce it coefficient
  // for coefficient.
  for (int m = 3; m <= 5; ++m) {
    for (int k = 0; k <= 3; ++k) {
      const Rational lambda(m - 2, 2);
      CliffPoly dot(m);
      for (int j = 1; j <= m; ++j) dot += poly_mul(uvar(m, j), vvar(m, j));
      const CliffPoly uv_norms = times_norm_squared(
          times_norm_squared(CliffPoly::scalar_constant(m, ExactScalar(1)), Family::U),
          Family::V);

      CliffPoly oracle(m);
      for (int j = 0; 2 * j <= k; ++j) {
        Rational c(1);
        for (int i = 0; i < k - j; ++i) c *= lambda + Rational(i);
        for (int i = 2; i <= j; ++i) c /= Rational(i);
        for (int i = 2; i <= k - 2 * j; ++i) c /= Rational(i);
        for (int i = 0; i < k - 2 * j; ++i) c *= Rational(2);
        if (j % 2 == 1) c = -c;
        CliffPoly term = CliffPoly::scalar_constant(m, ExactScalar(c));
        for (int rep = 0; rep < k - 2 * j; ++rep) term = poly_mul(term, dot);
        for (int rep = 0; rep < j; ++rep) term = poly_mul(term, uv_norms);
        oracle += term;
      }
      oracle = oracle.scaled(ExactScalar(Rational(2 * k + m - 2, m - 2)));

      CHECK(zonal_harmonic_kernel(m, k)->poly == oracle);
    }
  }
}

TEST_CASE("zonal kernel diagonal integrates to the space dimension") {
  for (int m = 3; m <= 5; ++m) {
    for (int k = 0; k <= 3; ++k) {
      // substitute v := u and integrate over the sphere
      const auto kernel = zonal_harmonic_kernel(m, k);
      CliffPoly diagonal(m);
      for (const auto& [mono, coeff] : kernel->poly.terms()) {
        Monomial merged = mono;
        for (int j = 0; j < m; ++j) {
          merged.u[j] = static_cast<std::uint8_t>(merged.u[j] + merged.v[j]);
          merged.v[j] = 0;
        }
        diagonal.add_term(merged, coeff);
      }
      CHECK(sphere_integral(diagonal, Family::U) ==
            CliffPoly::scalar_constant(
                m, ExactScalar(Rational(harmonic_space_dim(m, k)))));
    }
  }
}

TEST_CASE("scalar zonal kernel is symmetric in its two arguments") {
  const auto kernel = zonal_harmonic_kernel(3, 2);
  CliffPoly swapped(3);
  for (const auto& [mono, coeff] : kernel->poly.terms()) {
    Monomial s = mono;
    std::swap(s.u, s.v);
    swapped.add_term(s, coeff);
  }
  CHECK(swapped == kernel->poly);
}

TEST_CASE("reproducing identities hold exactly across the grid") {
  for (int m = 3; m <= 4; ++m) {
    for (int k = 0; k <= 2; ++k) {
      const auto harmonic = zonal_harmonic_kernel(m, k);
      for (const auto& b : harmonic_basis(m, k)->elems) {
        CHECK(sphere_integral(poly_mul(harmonic->poly.conjugated(), b), Family::U) ==
              rename_family(b, Family::U, Family::V));
      }
      const auto monogenic = zonal_monogenic_kernel(m, k);
      CHECK(dirac(monogenic->poly, Family::U).is_zero());
      for (const auto& p : monogenic_basis(m, k)->elems) {
        CHECK(sphere_integral(poly_mul(monogenic->poly.conjugated(), p), Family::U) ==
              rename_family(p, Family::U, Family::V));
      }
    }
  }
}

TEST_CASE("monogenic kernel annihilates the complement summand") {
  // The conjugation pairing of the kernel with u-multiples of lower-degree
  // monogenics vanishes; together with the reproducing identity this pins
  // the kernel inside M_k ⊗ M_k.
  SplitMix64 rng(71);
  for (const auto& [m, k] : {std::pair{3, 1}, std::pair{3, 2}, std::pair{4, 2}}) {
    const auto kernel = zonal_monogenic_kernel(m, k);
    CHECK(laplacian(kernel->poly, Family::V).is_zero());
    const CliffPoly conj = kernel->poly.conjugated();
    const CliffPoly uvec = CliffPoly::vector_variable(m, Family::U);
    for (int trial = 0; trial < 5; ++trial) {
      const CliffPoly complement = poly_mul(uvec, random_monogenic(m, k - 1, rng));
      CHECK(sphere_integral(poly_mul(conj, complement), Family::U).is_zero());
    }
  }
}

TEST_CASE("monogenic kernel reproduces right multiples too") {
  const int m = 3, k = 1;
  const auto kernel = zonal_monogenic_kernel(m, k);
  const CliffPoly p =
      monogenic_basis(m, k)->elems[0].right_mul(geometric_product(
          Multivector::basis_vector(m, 1), Multivector::basis_vector(m, 3)));
  CHECK(sphere_integral(poly_mul(kernel->poly.conjugated(), p), Family::U) ==
        rename_family(p, Family::U, Family::V));
}

TEST_CASE("fundamental solution constants") {
  CHECK(fundamental_a_constant(3, 1) == doctest::Approx(1.0 / 3.0));
  CHECK(fundamental_a_constant(5, 0) == doctest::Approx(1.0));
  CHECK(fundamental_c_constant(3, 1) ==
        doctest::Approx(1.0 / (4.0 * std::numbers::pi)));
  CHECK_THROWS(fundamental_c_constant(4, 1));
}

TEST_CASE("jet propagation matches analytic derivatives of |x|^{2-m}") {
  SplitMix64 rng(13);
  for (int m = 3; m <= 5; ++m) {
    for (int trial = 0; trial < 10; ++trial) {
      const std::vector<double> x = rand_point(m, 0.5, 2.0, rng);
      const Jet2 jet = jet_norm_power(x, 2.0 - m);
      double s = 0.0;
      for (double c : x) s += c * c;
      const double p = (2.0 - m) / 2.0;
      for (int i = 0; i < m; ++i) {
        const double gi = 2.0 * p * x[i] * std::pow(s, p - 1.0);
        CHECK(jet.grad[i].eval(std::vector<double>(m, 0.0))[0] ==
              doctest::Approx(gi).epsilon(1e-10));
        for (int j = 0; j < m; ++j) {
          double hij = 4.0 * p * (p - 1.0) * x[i] * x[j] * std::pow(s, p - 2.0);
          if (i == j) hij += 2.0 * p * std::pow(s, p - 1.0);
          CHECK(jet.hess[i][j].eval(std::vector<double>(m, 0.0))[0] ==
                doctest::Approx(hij).epsilon(1e-10));
        }
      }
    }
  }
}

TEST_CASE("jet products differentiate like products") {
  // compare jet of |x|^{-2} = |x|^{-1} * |x|^{-1} against the direct jet
  const std::vector<double> x{0.7, -0.4, 1.1};
  const Jet2 direct = jet_norm_power(x, -2.0);
  const Jet2 half = jet_norm_power(x, -1.0);
  const Jet2 squared = mul(half, half);
  const std::vector<double> origin(3, 0.0);
  CHECK(squared.value.eval(origin)[0] ==
        doctest::Approx(direct.value.eval(origin)[0]).epsilon(1e-12));
  for (int i = 0; i < 3; ++i) {
    CHECK(squared.grad[i].eval(origin)[0] ==
          doctest::Approx(direct.grad[i].eval(origin)[0]).epsilon(1e-12));
    for (int j = 0; j < 3; ++j) {
      CHECK(squared.hess[i][j].eval(origin)[0] ==
            doctest::Approx(direct.hess[i][j].eval(origin)[0]).epsilon(1e-12));
    }
  }
}

TEST_CASE("substituted kernel stays harmonic in u at fixed x") {
  SplitMix64 rng(29);
  const int m = 3, k = 2;
  for (int trial = 0; trial < 5; ++trial) {
    const std::vector<double> x = rand_point(m, 0.5, 2.0, rng);
    const std::vector<double> v = rand_point(m, 1.0, 1.0, rng);
    const Jet2 jet = fundamental_jet(FundamentalKind::Bosonic, m, k, x, v);
    const double scale = std::max(1.0, jet.value.max_abs());
    CHECK(jet.value.laplacian_u().max_abs() / scale <= 1e-10);
  }
}

TEST_CASE("fundamental solution evaluation basics") {
  const int m = 3;
  SplitMix64 rng(31);
  const std::vector<double> x{1.0, 0.0, 0.0};
  const std::vector<double> v = rand_point(m, 1.0, 1.0, rng);

  // value and jet paths agree
  for (FundamentalKind kind :
       {FundamentalKind::RaritaSchwinger, FundamentalKind::Remaining,
        FundamentalKind::Bosonic}) {
    const NumUPoly value = eval_fundamental(kind, m, 1, x, v);
    const Jet2 jet = fundamental_jet(kind, m, 1, x, v);
    NumUPoly diff = value;
    diff -= jet.value;
    CHECK(diff.max_abs() <= 1e-12 * std::max(1.0, value.max_abs()));
  }

  // the Q-type solution has a left factor u: every term has u-degree >= 1
  const NumUPoly fk = eval_fundamental(FundamentalKind::Remaining, m, 1, x, v);
  for (const auto& [e, c] : fk.terms()) {
    int deg = 0;
    for (int j = 0; j < m; ++j) deg += e[j];
    CHECK(deg >= 1);
  }

  CHECK_THROWS(eval_fundamental(FundamentalKind::Bosonic, 4, 1, {1, 0, 0, 0}, {1, 0, 0, 0}));
  CHECK_THROWS(eval_fundamental(FundamentalKind::RaritaSchwinger, 3, 1, {0, 0, 0}, v));
  CHECK_THROWS(eval_fundamental(FundamentalKind::Remaining, 3, 0, x, v));
}

TEST_CASE("fundamental solutions scale homogeneously in x") {
  // the reflected substitution is scale-invariant, so doubling x multiplies
  // the first-kind solution by 2^{1−m}
  SplitMix64 rng(41);
  for (int m = 3; m <= 4; ++m) {
    const std::vector<double> x = rand_point(m, 0.6, 1.0, rng);
    const std::vector<double> v = rand_point(m, 1.0, 1.0, rng);
    std::vector<double> x2 = x;
    for (auto& c : x2) c *= 2.0;
    const NumUPoly at_x = eval_fundamental(FundamentalKind::RaritaSchwinger, m, 1, x, v);
    const NumUPoly at_2x = eval_fundamental(FundamentalKind::RaritaSchwinger, m, 1, x2, v);
    NumUPoly diff = at_2x;
    diff -= at_x.scaled(std::pow(2.0, 1 - m));
    CHECK(diff.max_abs() <= 1e-12 * at_x.max_abs());
  }
}

TEST_CASE("annihilation residuals vanish to rounding") {
  SplitMix64 rng(37);
  // classical check: the k=0 solution of the first-order operator is the
  // Cauchy kernel
  for (int trial = 0; trial < 5; ++trial) {
    const std::vector<double> x = rand_point(3, 0.5, 2.0, rng);
    const std::vector<double> v = rand_point(3, 1.0, 1.0, rng);
    CHECK(annihilation_residual(FundamentalKind::RaritaSchwinger, 3, 0, x, v) <= 1e-10);
  }
  for (const auto& [m, k] : {std::pair{3, 1}, std::pair{3, 2}}) {
    for (int trial = 0; trial < 5; ++trial) {
      const std::vector<double> x = rand_point(m, 0.5, 2.0, rng);
      const std::vector<double> v = rand_point(m, 1.0, 1.0, rng);
      CHECK(annihilation_residual(FundamentalKind::RaritaSchwinger, m, k, x, v) <= 1e-9);
      CHECK(annihilation_residual(FundamentalKind::Remaining, m, k, x, v) <= 1e-9);
      CHECK(annihilation_residual(FundamentalKind::Bosonic, m, k, x, v) <= 1e-9);
    }
  }
  // scale stability: residual at 2x comparable to residual at x
  const std::vector<double> x{0.8, -0.3, 0.4};
  const std::vector<double> v{0.0, 1.0, 0.0};
  std::vector<double> x2 = x;
  for (auto& c : x2) c *= 2.0;
  CHECK(annihilation_residual(FundamentalKind::Bosonic, 3, 1, x, v) <= 1e-9);
  CHECK(annihilation_residual(FundamentalKind::Bosonic, 3, 1, x2, v) <= 1e-9);
}

TEST_CASE("sphere quadrature integrates polynomials") {
  // ∫ u1² over S² = ω_3/3; ∫ 1 = ω_3
  double total = 0.0, moment = 0.0;
  for (const auto& node : sphere_quadrature(3, 12)) {
    total += node.weight;
    moment += node.weight * node.point[0] * node.point[0];
  }
  CHECK(total == doctest::Approx(omega_m(3)).epsilon(1e-12));
  CHECK(moment == doctest::Approx(omega_m(3) / 3.0).epsilon(1e-12));

  double total4 = 0.0;
  for (const auto& node : sphere_quadrature(4, 16)) total4 += node.weight;
  CHECK(total4 == doctest::Approx(omega_m(4)).epsilon(1e-8));
}

TEST_CASE("classical reconstruction recovers polynomial values") {
  SplitMix64 rng(53);
  const int m = 3;
  CliffPoly f(m);
  f += CliffPoly::variable(m, Family::X, 1)
           .left_mul(Multivector::basis_vector(m, 2));
  f += poly_mul(CliffPoly::variable(m, Family::X, 2),
                CliffPoly::variable(m, Family::X, 3));
  f += CliffPoly::scalar_constant(m, ExactScalar(Rational(1, 2)));
  const std::vector<double> y{0.2, -0.1, 0.3};
  const ProbeResult probe = borel_pompeiu_probe_classical(f, y, 24);
  CHECK(probe.residual <= 1e-10);
  // the relative sign between the boundary and volume terms matters
  CHECK(probe.residual_displayed > 1e-2);
}

TEST_CASE("spin reconstruction probe reports residuals") {
  const int m = 3, k = 1;
  const SpinContext ctx{m, k};
  SplitMix64 rng(59);
  const HPair f = almansi_split(random_h_field(m, k, 2, rng).poly);
  const std::vector<double> y{0.1, 0.2, -0.1};
  const std::vector<double> v = rand_point(m, 1.0, 1.0, rng);
  const ProbeResult probe = borel_pompeiu_probe(f, ctx, y, v, 12);
  CHECK(std::isfinite(probe.residual));
  CHECK(std::isfinite(probe.residual_displayed));
}
