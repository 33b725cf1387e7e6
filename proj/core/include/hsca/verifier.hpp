#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hsca/operators.hpp"
#include "hsca/poly.hpp"
#include "hsca/spaces.hpp"

namespace hsca {

/// Counter-based generator (SplitMix64) so sample sets are reproducible from
/// the seed alone, independently of platform or library.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
  /// Uniform integer in [lo, hi].
  long long in_range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  /// Uniform double in [0, 1).
  double unit_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  /// Nonzero rational with numerator in [-9, 9] and denominator in [1, 4].
  Rational small_rational() {
    long long num = in_range(-9, 9);
    if (num == 0) num = 1;
    return Rational(num, in_range(1, 4));
  }

 private:
  std::uint64_t state_;
};

struct SuiteConfig {
  std::vector<int> m_list{3, 4, 5};
  std::vector<int> k_list{1, 2};
  int xdeg = 4;
  int samples = 100;
  std::uint64_t seed = 42;
  double tol = 1e-8;
  std::string report_path;
  int threads = 0;  // 0 = hardware concurrency
};

enum class SuiteStatus { Pass, Fail, Skip };

[[nodiscard]] const char* to_string(SuiteStatus s);

struct SuiteEntry {
  std::string suite;
  int m = 0;
  int k = -1;  // -1 when the suite has no k parameter
  long long cases = 0;
  long long failures = 0;
  double max_residual = 0.0;
  long long elapsed_ms = 0;
  SuiteStatus status = SuiteStatus::Pass;
  std::string notes;
  std::vector<std::string> failure_polys;  // offending inputs, JSON, capped
};

struct Report {
  std::string tool_name;
  std::string tool_version;
  std::string compiler;
  std::uint64_t seed = 0;
  std::vector<std::string> suites_run;
  std::vector<SuiteEntry> entries;

  [[nodiscard]] bool passed() const;
  [[nodiscard]] int exit_code() const { return passed() ? 0 : 1; }
};

/// All suite names, in canonical execution order.
[[nodiscard]] const std::vector<std::string>& suite_names();
[[nodiscard]] bool is_suite_name(const std::string& name);

/// Runs one named suite (or "all") over the configured (m, k) grid.
/// Unsupported (m, k) pairs become SKIP entries; unknown names throw
/// std::invalid_argument.  Deterministic for a fixed (config, seed).
[[nodiscard]] Report run_suite(const std::string& name, const SuiteConfig& cfg);

/// Report serialization; elapsed_ms fields are zeroed when include_elapsed
/// is false so byte-identical comparison across runs is possible.
[[nodiscard]] std::string report_to_json(const Report& report, bool include_elapsed = true);
void write_report_file(const Report& report, const std::string& path);

/// Reproducible pseudo-random field: a sparse exact-rational combination of
/// {x-monomials of degree <= xdeg} x {H_k basis} x {right blade factors}.
[[nodiscard]] HField random_h_field(int m, int k, int xdeg, SplitMix64& rng);

/// Random element of the monogenic module M_k (right blade combinations of
/// the module basis).
[[nodiscard]] CliffPoly random_monogenic(int m, int k, SplitMix64& rng);

/// Exact unit vector from the rational stereographic parametrization.
[[nodiscard]] VectorM random_unit_vector(int m, SplitMix64& rng);

}  // namespace hsca
