// Acceptance gate: one test case per acceptance criterion, each printing a
// single [PASS]/[FAIL] line with its runtime.  Tolerances are pinned here.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <string>

#include "hsca/kernels.hpp"
#include "hsca/operators.hpp"
#include "hsca/verifier.hpp"

using namespace hsca;

namespace {

class CriterionTimer {
 public:
  CriterionTimer(int number, std::string label)
      : number_(number), label_(std::move(label)),
        start_(std::chrono::steady_clock::now()) {}

  void finish(bool ok) const {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start_)
                        .count();
    std::printf("[%s] criterion %d: %s (%lld ms)\n", ok ? "PASS" : "FAIL", number_,
                label_.c_str(), static_cast<long long>(ms));
    std::fflush(stdout);
    CHECK(ok);
  }

 private:
  int number_;
  std::string label_;
  std::chrono::steady_clock::time_point start_;
};

bool all_pass(const Report& report) {
  for (const auto& e : report.entries) {
    if (e.status == SuiteStatus::Fail) return false;
  }
  return true;
}

SuiteConfig grid(std::vector<int> ms, std::vector<int> ks, int samples, int xdeg = 4) {
  SuiteConfig cfg;
  cfg.m_list = std::move(ms);
  cfg.k_list = std::move(ks);
  cfg.samples = samples;
  cfg.xdeg = xdeg;
  cfg.seed = 42;
  return cfg;
}

}  // namespace

TEST_CASE("criterion 1: Clifford axioms and reflection geometry") {
  const CriterionTimer timer(1, "defining relations for all m <= 8; 1000 reflections");
  bool ok = true;
  for (int m = 2; m <= 8; ++m) {
    for (int i = 1; i <= m && ok; ++i) {
      for (int j = 1; j <= m && ok; ++j) {
        const Multivector ei = Multivector::basis_vector(m, i);
        const Multivector ej = Multivector::basis_vector(m, j);
        ok = geometric_product(ei, ej) + geometric_product(ej, ei) ==
             Multivector::scalar(m, ExactScalar(i == j ? -2 : 0));
      }
    }
  }
  SplitMix64 rng(42);
  for (int trial = 0; trial < 1000 && ok; ++trial) {
    const int m = 2 + static_cast<int>(rng.below(7));
    const VectorM a = random_unit_vector(m, rng);
    VectorM x;
    x.coords.resize(m);
    for (auto& c : x.coords) c = ExactScalar(rng.small_rational());
    const VectorM rx = reflect(a, x);
    ok = rx.norm_squared() == x.norm_squared();
    const VectorM rrx = reflect(a, rx);
    for (int j = 0; ok && j < m; ++j) ok = rrx.coords[j] == x.coords[j];
  }
  timer.finish(ok);
}

TEST_CASE("criterion 2: Almansi-Fischer projections and eigenvalue relation") {
  const CriterionTimer timer(2, "projector algebra over {3,4,5}x{1,2,3}, 100 samples");
  const Report report = run_suite("almansi", grid({3, 4, 5}, {1, 2, 3}, 100));
  timer.finish(all_pass(report));
}

TEST_CASE("criterion 3: second-order operator equals both composition lines") {
  const CriterionTimer timer(3, "exact operator equality on degree-4 spanning sets");
  bool ok = all_pass(run_suite("theorem1", grid({3, 4, 5}, {1, 2}, 0)));
  ok = ok && all_pass(run_suite("theorem1", grid({5}, {3}, 0)));
  timer.finish(ok);
}

TEST_CASE("criterion 4: matrix factorization and recombination") {
  const CriterionTimer timer(4, "first-order matrix squared matches; recombination exact");
  bool ok = all_pass(run_suite("factorization", grid({3, 4, 5}, {1, 2}, 0)));
  ok = ok && all_pass(run_suite("factorization", grid({5}, {3}, 0)));
  timer.finish(ok);
}

TEST_CASE("criterion 5: k=0 reduction to the x-Laplacian") {
  const CriterionTimer timer(5, "composition form equals the x-Laplacian, m >= 5");
  bool ok = true;
  for (int m = 5; m <= 6 && ok; ++m) {
    const SpinContext ctx{m, 0};
    SplitMix64 rng(42 + m);
    for (int trial = 0; trial < 25 && ok; ++trial) {
      const CliffPoly f = random_h_field(m, 0, 4, rng).poly;
      ok = bosonic_laplacian_rs(f, ctx) == laplacian(f, Family::X);
    }
  }
  timer.finish(ok);
}

TEST_CASE("criterion 6: generalized Maxwell system termwise") {
  const CriterionTimer timer(6, "k=1 operator reproduces the m-equation system; witnesses");
  const Report report = run_suite("maxwell", grid({3, 4, 5}, {1}, 50));
  timer.finish(all_pass(report));
}

TEST_CASE("criterion 7: reproducing kernels over the full grid") {
  const CriterionTimer timer(7, "zonal kernels reproduce all bases, {3,4,5}x{0..3}");
  const Report report = run_suite("kernels", grid({3, 4, 5}, {0, 1, 2, 3}, 0));
  timer.finish(all_pass(report));
}

TEST_CASE("criterion 8: fundamental solutions annihilate under their operators") {
  const CriterionTimer timer(8, "jet residuals <= 1e-8 at 20 points; m=4 H-kind skips");
  SuiteConfig cfg = grid({3, 5}, {1, 2}, 20);
  cfg.tol = 1e-8;
  bool ok = all_pass(run_suite("fundamental", cfg));

  // contract: the second-order kind is a SKIP at m=4, not an error
  SuiteConfig cfg4 = grid({4}, {1}, 5);
  const Report at4 = run_suite("fundamental", cfg4);
  bool found_skip = false;
  for (const auto& e : at4.entries) {
    if (e.notes.find("kind=H") != std::string::npos) {
      found_skip = e.status == SuiteStatus::Skip;
    } else {
      ok = ok && e.status == SuiteStatus::Pass;
    }
  }
  timer.finish(ok && found_skip);
}

TEST_CASE("criterion 9: boundary pairing equals volume pairing on the unit ball") {
  const CriterionTimer timer(9, "50 random pairs at (3,1), (4,1), (3,2), exact");
  bool ok = all_pass(run_suite("stokes", grid({3, 4}, {1}, 50)));
  ok = ok && all_pass(run_suite("stokes", grid({3}, {2}, 50)));
  timer.finish(ok);
}

TEST_CASE("criterion 10: reconstruction probe") {
  const CriterionTimer timer(
      10, "classical case reconstructs within 1e-4 at order 24; k>=1 reported");
  const Report report = run_suite("borel_probe", grid({3}, {1}, 2));
  bool ok = all_pass(report);
  bool classical_seen = false, spin_seen = false;
  for (const auto& e : report.entries) {
    if (e.k == 0) {
      classical_seen = true;
      ok = ok && e.max_residual <= 1e-4;
    }
    if (e.k == 1) {
      spin_seen = true;
      ok = ok && std::isfinite(e.max_residual) &&
           e.notes.find("residual") != std::string::npos;
    }
  }
  timer.finish(ok && classical_seen && spin_seen);
}
