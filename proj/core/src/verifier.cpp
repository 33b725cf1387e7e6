#include "hsca/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <future>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "hsca/kernels.hpp"
#include "hsca/poly_json.hpp"

namespace hsca {

const char* to_string(SuiteStatus s) {
  switch (s) {
    case SuiteStatus::Pass: return "PASS";
    case SuiteStatus::Fail: return "FAIL";
    case SuiteStatus::Skip: return "SKIP";
  }
  return "?";
}

bool Report::passed() const {
  return std::none_of(entries.begin(), entries.end(), [](const SuiteEntry& e) {
    return e.status == SuiteStatus::Fail;
  });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "clifford", "almansi",  "theorem1",    "factorization", "maxwell",
      "stokes",   "kernels",  "fundamental", "borel_probe"};
  return names;
}

bool is_suite_name(const std::string& name) {
  if (name == "all") return true;
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

// ---------------------------------------------------------------------------
// Random inputs
// ---------------------------------------------------------------------------

namespace {

constexpr int kFieldTerms = 8;
constexpr int kMaxFailurePolys = 3;

std::vector<Monomial> x_monomials_up_to(int m, int xdeg) {
  std::vector<Monomial> out;
  for (int d = 0; d <= xdeg; ++d) {
    for (const auto& mono : u_monomials(m, d, m)) {
      Monomial xmono;
      xmono.x = mono.u;
      out.push_back(xmono);
    }
  }
  return out;
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t task_seed(std::uint64_t seed, const std::string& suite, int m, int k) {
  return seed ^ fnv1a(suite) ^ (static_cast<std::uint64_t>(m) * 0x9e3779b97f4a7c15ULL) ^
         (static_cast<std::uint64_t>(k + 1) * 0xc2b2ae3d27d4eb4fULL);
}

std::vector<double> random_unit_double(int m, SplitMix64& rng) {
  std::vector<double> v(m);
  double norm = 0.0;
  do {
    norm = 0.0;
    for (int j = 0; j < m; ++j) {
      v[j] = 2.0 * rng.unit_double() - 1.0;
      norm += v[j] * v[j];
    }
  } while (norm < 1e-4);
  const double inv = 1.0 / std::sqrt(norm);
  for (double& c : v) c *= inv;
  return v;
}

CliffPoly swap_uv(const CliffPoly& p) {
  CliffPoly out(p.dim());
  for (const auto& [mono, coeff] : p.terms()) {
    Monomial m = mono;
    std::swap(m.u, m.v);
    out.add_term(m, coeff);
  }
  return out;
}

/// Terms of p whose u-part is exactly the single variable u_s, with that
/// variable stripped (p must be u-homogeneous of degree 1).
CliffPoly coefficient_of_u(const CliffPoly& p, int s) {
  CliffPoly out(p.dim());
  for (const auto& [mono, coeff] : p.terms()) {
    if (mono.u[s - 1] != 1 || mono.degree(Family::U) != 1) continue;
    Monomial m = mono;
    m.u[s - 1] = 0;
    out.add_term(m, coeff);
  }
  return out;
}

}  // namespace

HField random_h_field(int m, int k, int xdeg, SplitMix64& rng) {
  const auto basis = harmonic_basis(m, k);
  const std::vector<Monomial> xmonos = x_monomials_up_to(m, xdeg);
  CliffPoly f(m);
  for (int pick = 0; pick < kFieldTerms; ++pick) {
    const auto& xmono = xmonos[rng.below(xmonos.size())];
    const auto& elem = basis->elems[rng.below(basis->elems.size())];
    const auto blade = static_cast<BladeMask>(rng.below(std::uint64_t{1} << m));
    const ExactScalar c{rng.small_rational()};
    f += poly_mul(CliffPoly::from_term(m, xmono, Multivector::scalar(m, c)), elem)
             .right_mul(Multivector(m, blade, ExactScalar(1)));
  }
  return HField(std::move(f), m, k);
}

CliffPoly random_monogenic(int m, int k, SplitMix64& rng) {
  const auto basis = monogenic_basis(m, k);
  CliffPoly out(m);
  for (int pick = 0; pick < 4; ++pick) {
    const auto& elem = basis->elems[rng.below(basis->elems.size())];
    const auto blade = static_cast<BladeMask>(rng.below(std::uint64_t{1} << m));
    out += elem.scaled(ExactScalar(rng.small_rational()))
               .right_mul(Multivector(m, blade, ExactScalar(1)));
  }
  return out;
}

VectorM random_unit_vector(int m, SplitMix64& rng) {
  // Stereographic image of a rational point is exactly unit:
  // a = (2t, 1 − |t|²)/(1 + |t|²).
  std::vector<Rational> t(m - 1);
  Rational tt(0);
  for (auto& c : t) {
    c = rng.small_rational();
    tt += c * c;
  }
  const Rational denom = Rational(1) + tt;
  VectorM a;
  a.coords.resize(m);
  for (int j = 0; j < m - 1; ++j) a.coords[j] = ExactScalar(Rational(2) * t[j] / denom);
  a.coords[m - 1] = ExactScalar((Rational(1) - tt) / denom);
  return a;
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

namespace {

struct CaseTracker {
  SuiteEntry* entry;

  void record(bool ok, const std::function<std::string()>& payload = {}) {
    ++entry->cases;
    if (ok) return;
    ++entry->failures;
    entry->status = SuiteStatus::Fail;
    if (payload && entry->failure_polys.size() < kMaxFailurePolys) {
      entry->failure_polys.push_back(payload());
    }
  }
};

SuiteEntry make_entry(const std::string& suite, int m, int k) {
  SuiteEntry e;
  e.suite = suite;
  e.m = m;
  e.k = k;
  return e;
}

SuiteEntry skip_entry(const std::string& suite, int m, int k, const std::string& why) {
  SuiteEntry e = make_entry(suite, m, k);
  e.status = SuiteStatus::Skip;
  e.notes = why;
  return e;
}

SuiteEntry clifford_suite(int m, const SuiteConfig& cfg) {
  SuiteEntry entry = make_entry("clifford", m, -1);
  CaseTracker t{&entry};
  SplitMix64 rng(task_seed(cfg.seed, "clifford", m, 0));

  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      const Multivector ei = Multivector::basis_vector(m, i);
      const Multivector ej = Multivector::basis_vector(m, j);
      const Multivector anti = geometric_product(ei, ej) + geometric_product(ej, ei);
      const Multivector expected =
          Multivector::scalar(m, ExactScalar(i == j ? -2 : 0));
      t.record(anti == expected);
    }
  }

  for (int s = 0; s < cfg.samples; ++s) {
    const VectorM a = random_unit_vector(m, rng);
    VectorM x;
    x.coords.resize(m);
    for (int j = 0; j < m; ++j) x.coords[j] = ExactScalar(rng.small_rational());
    const VectorM rx = reflect(a, x);
    bool ok = rx.norm_squared() == x.norm_squared();
    const VectorM rrx = reflect(a, rx);
    for (int j = 0; ok && j < m; ++j) ok = rrx.coords[j] == x.coords[j];
    t.record(ok);
  }
  entry.notes = "defining relations and reflection involution/isometry, exact";
  return entry;
}

SuiteEntry almansi_suite(int m, int k, const SuiteConfig& cfg) {
  SuiteEntry entry = make_entry("almansi", m, k);
  CaseTracker t{&entry};
  SplitMix64 rng(task_seed(cfg.seed, "almansi", m, k));
  const int n2 = m + 2 * k - 2;
  const CliffPoly uvec = CliffPoly::vector_variable(m, Family::U);

  for (int s = 0; s < cfg.samples; ++s) {
    const CliffPoly h = random_h_field(m, k, 0, rng).poly;
    const CliffPoly p = project_plus(h);
    const CliffPoly q = project_minus(h);
    bool ok = (p + q == h);
    ok = ok && project_plus(p) == p;
    ok = ok && project_minus(q) == q;
    ok = ok && project_minus(p).is_zero();
    ok = ok && project_plus(q).is_zero();
    ok = ok && dirac(p, Family::U).is_zero();
    // Explicit u·M_{k−1} preimage of the minus part.
    const CliffPoly w = dirac(h, Family::U).scaled(ExactScalar(Rational(-1, n2)));
    ok = ok && dirac(w, Family::U).is_zero();
    ok = ok && poly_mul(uvec, w) == q;
    // Eigenvalue relation D_u(u p) = (−m−2k+2) p on M_{k−1}.
    const CliffPoly pm = random_monogenic(m, k - 1, rng);
    ok = ok && dirac(poly_mul(uvec, pm), Family::U) ==
                   pm.scaled(ExactScalar(Rational(-(m + 2 * k - 2))));
    t.record(ok, [&] { return poly_to_json(h); });
  }
  entry.notes = "projector algebra, preimage, and eigenvalue relation, exact";
  return entry;
}

SuiteEntry theorem1_suite(int m, int k, const SuiteConfig& cfg) {
  SuiteEntry entry = make_entry("theorem1", m, k);
  CaseTracker t{&entry};
  const SpinContext ctx{m, k};
  const auto basis = harmonic_basis(m, k);

  for (const auto& xmono : x_monomials_up_to(m, cfg.xdeg)) {
    const CliffPoly xpoly =
        CliffPoly::from_term(m, xmono, Multivector::scalar(m, ExactScalar(1)));
    for (const auto& elem : basis->elems) {
      const CliffPoly f = poly_mul(xpoly, elem);
      const CliffPoly direct = bosonic_laplacian_direct(f, ctx);
      const CliffPoly line1 = bosonic_laplacian_composed(f, ctx, CompositionLine::First);
      const CliffPoly line2 = bosonic_laplacian_composed(f, ctx, CompositionLine::Second);
      bool ok = (direct == line1) && (direct == line2);
      ok = ok && is_h_field(direct, k);
      t.record(ok, [&] { return poly_to_json(f); });
    }
  }
  entry.notes = k == 0 ? "second-order operator equals both composition lines; the "
                         "projector degeneration P+=I, P-=0 occurs at k=0"
                       : "second-order operator equals both composition lines, exact";
  return entry;
}

SuiteEntry factorization_suite(int m, int k, const SuiteConfig& cfg) {
  SuiteEntry entry = make_entry("factorization", m, k);
  CaseTracker t{&entry};
  const SpinContext ctx{m, k};
  const auto basis = harmonic_basis(m, k);

  const auto check_pair = [&](const HPair& pair) {
    const HPair via_factor = matrix_dirac_apply(matrix_dirac_transpose_apply(pair, ctx), ctx);
    const HPair direct = matrix_laplacian_apply(pair, ctx);
    return via_factor.f1 == direct.f1 && via_factor.f2 == direct.f2;
  };

  for (const auto& xmono : x_monomials_up_to(m, cfg.xdeg)) {
    const CliffPoly xpoly =
        CliffPoly::from_term(m, xmono, Multivector::scalar(m, ExactScalar(1)));
    for (const auto& elem : basis->elems) {
      const CliffPoly f = poly_mul(xpoly, elem);
      const HPair split = almansi_split(f);
      bool ok = check_pair(HPair{split.f1, CliffPoly::zero(m)});
      ok = ok && check_pair(HPair{CliffPoly::zero(m), split.f2});
      // Recombined second-order matrix output is the negative of the direct
      // operator.
      const HPair d2 = matrix_laplacian_apply(split, ctx);
      ok = ok && (d2.f1 + d2.f2 == -bosonic_laplacian_direct(f, ctx));
      // Projection identities underlying the factorization: the first-order
      // operators land in the summand the opposite projection annihilates.
      const CliffPoly dx1 = dirac(split.f1, Family::X);
      const CliffPoly dx2 = dirac(split.f2, Family::X);
      ok = ok && detail::project_minus_unchecked(
                     detail::project_plus_unchecked(dx1, k), k)
                     .is_zero();
      ok = ok && detail::project_plus_unchecked(
                     detail::project_minus_unchecked(dx1, k), k)
                     .is_zero();
      ok = ok && detail::project_minus_unchecked(
                     detail::project_plus_unchecked(dx2, k), k)
                     .is_zero();
      ok = ok && detail::project_plus_unchecked(
                     detail::project_minus_unchecked(dx2, k), k)
                     .is_zero();
      t.record(ok, [&] { return poly_to_json(f); });
    }
  }
  entry.notes =
      "first-order matrix times its transpose equals the second-order matrix, exact in "
      "Q(sqrt((m+2k)(m+2k-4))); recombined output is the negative of the direct form; "
      "projection identities verified on the spanning set";
  return entry;
}

SuiteEntry maxwell_suite(int m, const SuiteConfig& cfg) {
  SuiteEntry entry = make_entry("maxwell", m, 1);
  CaseTracker t{&entry};
  SplitMix64 rng(task_seed(cfg.seed, "maxwell", m, 1));
  const SpinContext ctx{m, 1};
  const std::vector<Monomial> xmonos = x_monomials_up_to(m, std::min(cfg.xdeg, 3));

  for (int s = 0; s < cfg.samples; ++s) {
    std::vector<CliffPoly> comps;
    comps.reserve(m);
    CliffPoly field(m);
    for (int j = 1; j <= m; ++j) {
      CliffPoly fj(m);
      for (int pick = 0; pick < 5; ++pick) {
        fj += CliffPoly::from_term(m, xmonos[rng.below(xmonos.size())],
                                   Multivector::scalar(m, ExactScalar(rng.small_rational())));
      }
      field += poly_mul(CliffPoly::variable(m, Family::U, j), fj);
      comps.push_back(std::move(fj));
    }
    const CliffPoly applied = bosonic_laplacian_direct(field, ctx);
    bool ok = true;
    for (int s_idx = 1; s_idx <= m && ok; ++s_idx) {
      CliffPoly rhs = laplacian(comps[s_idx - 1], Family::X);
      for (int j = 1; j <= m; ++j) {
        rhs += partial_derivative(partial_derivative(comps[j - 1], Family::X, j), Family::X,
                                  s_idx)
                   .scaled(ExactScalar(Rational(-4, m)));
      }
      ok = coefficient_of_u(applied, s_idx) == rhs;
    }
    t.record(ok, [&] { return poly_to_json(field); });
  }

  // Witnesses: ⟨u, x⟩ is annihilated; u₁x₁² maps to 2 u₁ (m−4)/m.
  CliffPoly pairing(m);
  for (int j = 1; j <= m; ++j) {
    pairing += poly_mul(CliffPoly::variable(m, Family::U, j),
                        CliffPoly::variable(m, Family::X, j));
  }
  t.record(bosonic_laplacian_direct(pairing, ctx).is_zero(),
           [&] { return poly_to_json(pairing); });

  const CliffPoly witness = poly_mul(
      CliffPoly::variable(m, Family::U, 1),
      poly_mul(CliffPoly::variable(m, Family::X, 1), CliffPoly::variable(m, Family::X, 1)));
  const CliffPoly expected =
      CliffPoly::variable(m, Family::U, 1).scaled(ExactScalar(Rational(2 * (m - 4), m)));
  t.record(bosonic_laplacian_direct(witness, ctx) == expected,
           [&] { return poly_to_json(witness); });

  entry.notes = "k=1 operator reproduces the m-equation Euclidean system termwise, exact";
  return entry;
}

SuiteEntry stokes_suite(int m, int k, const SuiteConfig& cfg) {
  SuiteEntry entry = make_entry("stokes", m, k);
  CaseTracker t{&entry};
  SplitMix64 rng(task_seed(cfg.seed, "stokes", m, k));
  const SpinContext ctx{m, k};
  const int xdeg = std::min(cfg.xdeg, 2);

  for (int s = 0; s < cfg.samples; ++s) {
    const CliffPoly fh = random_h_field(m, k, xdeg, rng).poly;
    const CliffPoly gh = random_h_field(m, k, xdeg, rng).poly;
    const HPair f = almansi_split(fh);
    const HPair g = almansi_split(gh);
    const StokesSides sides = stokes_pairing(f, g, ctx);
    t.record(sides.boundary == sides.volume, [&] { return poly_to_json(fh); });
  }
  entry.notes =
      "boundary pairing equals the volume pairing (volume terms combined at relative "
      "sign -1), exact on the unit ball";
  return entry;
}

SuiteEntry kernels_suite(int m, int k, const SuiteConfig& cfg) {
  SuiteEntry entry = make_entry("kernels", m, k);
  CaseTracker t{&entry};
  (void)cfg;

  const auto harmonic = zonal_harmonic_kernel(m, k);
  const CliffPoly conj_h = harmonic->poly.conjugated();
  for (const auto& b : harmonic_basis(m, k)->elems) {
    t.record(sphere_integral(poly_mul(conj_h, b), Family::U) ==
                 rename_family(b, Family::U, Family::V),
             [&] { return poly_to_json(b); });
  }
  t.record(swap_uv(harmonic->poly) == harmonic->poly);

  if (k == 1) {
    CliffPoly expected(m);
    for (int j = 1; j <= m; ++j) {
      expected += poly_mul(CliffPoly::variable(m, Family::U, j),
                           CliffPoly::variable(m, Family::V, j))
                      .scaled(ExactScalar(Rational(m)));
    }
    t.record(harmonic->poly == expected);
  }

  const auto monogenic = zonal_monogenic_kernel(m, k);
  const CliffPoly conj_m = monogenic->poly.conjugated();
  for (const auto& p : monogenic_basis(m, k)->elems) {
    t.record(sphere_integral(poly_mul(conj_m, p), Family::U) ==
                 rename_family(p, Family::U, Family::V),
             [&] { return poly_to_json(p); });
  }

  entry.notes = "reproducing identities exact over the full bases (kernels carry 1/omega_m)";
  return entry;
}

SuiteEntry fundamental_suite(int m, int k, FundamentalKind kind, const SuiteConfig& cfg) {
  const char* kind_name = kind == FundamentalKind::RaritaSchwinger ? "E"
                          : kind == FundamentalKind::Remaining     ? "F"
                                                                   : "H";
  SuiteEntry entry = make_entry("fundamental", m, k);
  entry.notes = std::string("kind=") + kind_name;
  if (kind == FundamentalKind::Bosonic && m == 4) {
    entry.status = SuiteStatus::Skip;
    entry.notes += "; constant divides by 4-m";
    return entry;
  }
  if (kind == FundamentalKind::Remaining && k < 1) {
    entry.status = SuiteStatus::Skip;
    entry.notes += "; needs k >= 1";
    return entry;
  }
  CaseTracker t{&entry};
  SplitMix64 rng(task_seed(cfg.seed, std::string("fundamental") + kind_name, m, k));

  for (int s = 0; s < cfg.samples; ++s) {
    std::vector<double> x = random_unit_double(m, rng);
    const double radius = 0.5 + 1.5 * rng.unit_double();
    for (double& c : x) c *= radius;
    const std::vector<double> v = random_unit_double(m, rng);
    const double residual = annihilation_residual(kind, m, k, x, v);
    entry.max_residual = std::max(entry.max_residual, residual);
    t.record(residual <= cfg.tol);
  }
  entry.notes += "; jet-propagated operator application at random points";
  return entry;
}

SuiteEntry borel_classical_entry(int m, const SuiteConfig& cfg) {
  SuiteEntry entry = make_entry("borel_probe", m, 0);
  CaseTracker t{&entry};
  SplitMix64 rng(task_seed(cfg.seed, "borel_probe", m, 0));
  const int order = 24;
  const int samples = std::min(cfg.samples, 3);
  const std::vector<Monomial> xmonos = x_monomials_up_to(m, 2);

  double displayed = 0.0;
  for (int s = 0; s < samples; ++s) {
    CliffPoly f(m);
    for (int pick = 0; pick < 5; ++pick) {
      const auto blade = static_cast<BladeMask>(rng.below(std::uint64_t{1} << m));
      f += CliffPoly::from_term(m, xmonos[rng.below(xmonos.size())],
                                Multivector(m, blade, ExactScalar(rng.small_rational())));
    }
    std::vector<double> y = random_unit_double(m, rng);
    for (double& c : y) c *= 0.5 * rng.unit_double();
    const ProbeResult probe = borel_pompeiu_probe_classical(f, y, order);
    entry.max_residual = std::max(entry.max_residual, probe.residual);
    displayed = std::max(displayed, probe.residual_displayed);
    t.record(probe.residual <= 1e-4, [&] { return poly_to_json(f); });
  }
  std::ostringstream note;
  note << "classical reduction at quadrature order " << order
       << "; volume term enters with the sign that reconstructs (displayed-sign residual "
       << displayed << ")";
  entry.notes = note.str();
  return entry;
}

SuiteEntry borel_probe_suite(int m, int k, const SuiteConfig& cfg) {
  SuiteEntry entry = make_entry("borel_probe", m, k);
  SplitMix64 rng(task_seed(cfg.seed, "borel_probe", m, k));
  const SpinContext ctx{m, k};
  const int order = 24;
  const int samples = std::min(cfg.samples, 2);

  double worst = 0.0, worst_displayed = 0.0;
  for (int s = 0; s < samples; ++s) {
    const CliffPoly fh = random_h_field(m, k, 2, rng).poly;
    const HPair f = almansi_split(fh);
    std::vector<double> y = random_unit_double(m, rng);
    for (double& c : y) c *= 0.5 * rng.unit_double();
    const std::vector<double> v = random_unit_double(m, rng);
    const ProbeResult probe = borel_pompeiu_probe(f, ctx, y, v, order);
    worst = std::max(worst, probe.residual);
    worst_displayed = std::max(worst_displayed, probe.residual_displayed);
    ++entry.cases;
  }
  std::ostringstream note;
  note << "experimental diag(E_k, F_k) candidate; no asserted bound; residual=" << worst
       << ", displayed-sign residual=" << worst_displayed;
  entry.notes = note.str();
  entry.max_residual = worst;
  return entry;
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

using Task = std::function<SuiteEntry()>;

void append_suite_tasks(const std::string& name, const SuiteConfig& cfg,
                        std::vector<Task>& tasks) {
  const auto supported_or_skip = [&](int m, int k, const Task& task) {
    if (supported_context(m, k)) {
      tasks.push_back(task);
    } else {
      tasks.push_back([name, m, k] {
        return skip_entry(name, m, k, "unsupported (m,k): need m >= 3 and m+2k-4 >= 1");
      });
    }
  };

  if (name == "clifford") {
    for (int m : cfg.m_list) tasks.push_back([m, &cfg] { return clifford_suite(m, cfg); });
    return;
  }
  if (name == "maxwell") {
    for (int m : cfg.m_list) {
      supported_or_skip(m, 1, [m, &cfg] { return maxwell_suite(m, cfg); });
    }
    return;
  }
  if (name == "kernels") {
    for (int m : cfg.m_list) {
      for (int k : cfg.k_list) {
        if (m >= 3 && k >= 0) {
          tasks.push_back([m, k, &cfg] { return kernels_suite(m, k, cfg); });
        } else {
          tasks.push_back([name, m, k] { return skip_entry(name, m, k, "needs m >= 3"); });
        }
      }
    }
    return;
  }
  if (name == "fundamental") {
    for (int m : cfg.m_list) {
      for (int k : cfg.k_list) {
        for (FundamentalKind kind :
             {FundamentalKind::RaritaSchwinger, FundamentalKind::Remaining,
              FundamentalKind::Bosonic}) {
          supported_or_skip(m, k,
                            [m, k, kind, &cfg] { return fundamental_suite(m, k, kind, cfg); });
        }
      }
    }
    return;
  }
  if (name == "borel_probe") {
    for (int m : cfg.m_list) {
      if (m != 3) {
        tasks.push_back(
            [name, m] { return skip_entry(name, m, -1, "probe runs on the m=3 grid"); });
        continue;
      }
      tasks.push_back([m, &cfg] { return borel_classical_entry(m, cfg); });
      for (int k : cfg.k_list) {
        supported_or_skip(m, k, [m, k, &cfg] { return borel_probe_suite(m, k, cfg); });
      }
    }
    return;
  }

  // (m, k)-gridded exact suites.
  for (int m : cfg.m_list) {
    for (int k : cfg.k_list) {
      if (name == "almansi") {
        supported_or_skip(m, k, [m, k, &cfg] { return almansi_suite(m, k, cfg); });
      } else if (name == "theorem1") {
        supported_or_skip(m, k, [m, k, &cfg] { return theorem1_suite(m, k, cfg); });
      } else if (name == "factorization") {
        supported_or_skip(m, k, [m, k, &cfg] { return factorization_suite(m, k, cfg); });
      } else if (name == "stokes") {
        supported_or_skip(m, k, [m, k, &cfg] { return stokes_suite(m, k, cfg); });
      } else {
        throw std::invalid_argument("unknown suite: " + name);
      }
    }
  }
}

}  // namespace

Report run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (!is_suite_name(name)) throw std::invalid_argument("unknown suite: " + name);

  std::vector<std::string> selected;
  if (name == "all") {
    selected = suite_names();
  } else {
    selected.push_back(name);
  }

  std::vector<Task> tasks;
  for (const auto& suite : selected) append_suite_tasks(suite, cfg, tasks);

  // Work queue over a fixed pool; results land in deterministic slot order.
  std::vector<SuiteEntry> entries(tasks.size());
  std::atomic<std::size_t> next{0};
  const int requested = cfg.threads > 0
                            ? cfg.threads
                            : static_cast<int>(std::thread::hardware_concurrency());
  const int workers =
      std::max(1, std::min<int>(requested, static_cast<int>(tasks.size())));
  const auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const auto start = std::chrono::steady_clock::now();
      entries[i] = tasks[i]();
      entries[i].elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                  std::chrono::steady_clock::now() - start)
                                  .count();
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  Report report;
  report.tool_name = "hsca-verify";
  report.tool_version = "0.1.0";
#if defined(__VERSION__)
  report.compiler = __VERSION__;
#endif
  report.seed = cfg.seed;
  report.suites_run = selected;
  report.entries = std::move(entries);

  if (!cfg.report_path.empty()) write_report_file(report, cfg.report_path);
  return report;
}

std::string report_to_json(const Report& report, bool include_elapsed) {
  nlohmann::json out;
  out["tool"] = {{"name", report.tool_name},
                 {"version", report.tool_version},
                 {"compiler", report.compiler}};
  out["seed"] = report.seed;
  out["suites_run"] = report.suites_run;
  out["status"] = report.passed() ? "PASS" : "FAIL";
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : report.entries) {
    nlohmann::json j;
    j["suite"] = e.suite;
    j["m"] = e.m;
    j["k"] = e.k;
    j["cases"] = e.cases;
    j["failures"] = e.failures;
    j["max_residual"] = e.max_residual;
    j["elapsed_ms"] = include_elapsed ? e.elapsed_ms : 0;
    j["status"] = to_string(e.status);
    j["notes"] = e.notes;
    if (!e.failure_polys.empty()) {
      nlohmann::json polys = nlohmann::json::array();
      for (const auto& p : e.failure_polys) polys.push_back(nlohmann::json::parse(p));
      j["failures_detail"] = std::move(polys);
    }
    entries.push_back(std::move(j));
  }
  out["suites"] = std::move(entries);
  return out.dump(2);
}

void write_report_file(const Report& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write report to " + path);
  out << report_to_json(report) << "\n";
}

}  // namespace hsca
