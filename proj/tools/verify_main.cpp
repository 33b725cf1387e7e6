// Verification driver: runs the identity suites over an (m, k) grid and
// emits a machine-readable JSON report.
//
//   verify [suite] --m 3,4,5 --k 1,2 --xdeg 4 --samples 100 --seed 42
//          --tol 1e-8 --report out.json
//
// Exit codes: 0 all suites pass, 1 at least one FAIL entry, 2 usage error.

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hsca/verifier.hpp"

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (!token.empty()) out.push_back(std::stoi(token));
  }
  if (out.empty()) throw CLI::ValidationError("expected a comma-separated integer list");
  return out;
}

void print_summary(const hsca::Report& report) {
  for (const auto& e : report.entries) {
    std::cout << "[" << hsca::to_string(e.status) << "] " << e.suite << " m=" << e.m;
    if (e.k >= 0) std::cout << " k=" << e.k;
    std::cout << " cases=" << e.cases << " failures=" << e.failures
              << " max_residual=" << e.max_residual << " (" << e.elapsed_ms << " ms)";
    if (!e.notes.empty()) std::cout << "  -- " << e.notes;
    std::cout << "\n";
  }
  std::cout << (report.passed() ? "PASS" : "FAIL") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification suites for higher spin Clifford analysis"};

  std::string suite = "all";
  std::string m_arg = "3,4,5";
  std::string k_arg = "1,2";
  hsca::SuiteConfig cfg;

  app.add_option("suite", suite,
                 "suite to run: clifford|almansi|theorem1|factorization|maxwell|stokes|"
                 "kernels|fundamental|borel_probe|all")
      ->envname("HSCA_SUITE");
  app.add_option("--m", m_arg, "comma-separated list of dimensions m")->envname("HSCA_M");
  app.add_option("--k", k_arg, "comma-separated list of spin degrees k")->envname("HSCA_K");
  app.add_option("--xdeg", cfg.xdeg, "x-degree cap for spanning sets and random fields")
      ->envname("HSCA_XDEG");
  app.add_option("--samples", cfg.samples, "random samples per (m,k) entry")
      ->envname("HSCA_SAMPLES");
  app.add_option("--seed", cfg.seed, "seed for the counter-based generator (SplitMix64)")
      ->envname("HSCA_SEED");
  app.add_option("--tol", cfg.tol, "residual tolerance for the numeric suites")
      ->envname("HSCA_TOL");
  app.add_option("--report", cfg.report_path, "path for the JSON report")
      ->envname("HSCA_REPORT");
  app.add_option("--threads", cfg.threads, "worker threads (0 = hardware)")
      ->envname("HSCA_THREADS");

  try {
    app.parse(argc, argv);
    cfg.m_list = parse_int_list(m_arg);
    cfg.k_list = parse_int_list(k_arg);
    if (!hsca::is_suite_name(suite)) {
      std::cerr << "error: unknown suite '" << suite << "'\n";
      return 2;
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const hsca::Report report = hsca::run_suite(suite, cfg);
    print_summary(report);
    return report.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
