#include "hsca/kernels.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <stdexcept>

namespace hsca {

// ---------------------------------------------------------------------------
// Exact kernel construction
// ---------------------------------------------------------------------------

namespace {

BiKernel build_harmonic_kernel(int m, int k) {
  const auto basis = harmonic_basis(m, k);
  const auto inverse = invert(basis->gram());
  if (!inverse) throw std::runtime_error("zonal kernel: singular Gram system");

  BiKernel kernel;
  kernel.m = m;
  kernel.k = k;
  kernel.kind = SpaceKind::Harmonic;
  kernel.poly = CliffPoly(m);

  std::vector<CliffPoly> in_v;
  in_v.reserve(basis->elems.size());
  for (const auto& b : basis->elems) in_v.push_back(rename_family(b, Family::U, Family::V));

  const int n = basis->size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rational& w = (*inverse)[i][j];
      if (w.is_zero()) continue;
      kernel.poly += poly_mul(basis->elems[i], in_v[j]).scaled(ExactScalar(w));
    }
  }

  for (const auto& b : basis->elems) {
    const CliffPoly lhs = sphere_integral(poly_mul(kernel.poly.conjugated(), b), Family::U);
    if (lhs != rename_family(b, Family::U, Family::V)) {
      throw std::logic_error("zonal harmonic kernel: reproducing check failed");
    }
  }
  return kernel;
}

BiKernel build_monogenic_kernel(int m, int k) {
  const auto harmonic = zonal_harmonic_kernel(m, k);

  BiKernel kernel;
  kernel.m = m;
  kernel.k = k;
  kernel.kind = SpaceKind::Monogenic;
  kernel.poly = detail::project_plus_unchecked(harmonic->poly, k);

  // The projection argument rests on the Almansi-Fischer summands being
  // orthogonal under the conjugation pairing; verify the reproducing
  // identity exactly on the whole module basis rather than trusting it.
  const CliffPoly conj = kernel.poly.conjugated();
  for (const auto& p : monogenic_basis(m, k)->elems) {
    const CliffPoly lhs = sphere_integral(poly_mul(conj, p), Family::U);
    if (lhs != rename_family(p, Family::U, Family::V)) {
      throw std::logic_error("zonal monogenic kernel: reproducing check failed");
    }
  }
  return kernel;
}

class KernelCache {
 public:
  std::shared_ptr<const BiKernel> get(int m, int k, SpaceKind kind) {
    const auto key = std::make_tuple(m, k, kind);
    {
      std::shared_lock lock(mutex_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    auto built = std::make_shared<const BiKernel>(
        kind == SpaceKind::Harmonic ? build_harmonic_kernel(m, k)
                                    : build_monogenic_kernel(m, k));
    std::unique_lock lock(mutex_);
    auto [it, inserted] = cache_.try_emplace(key, std::move(built));
    return it->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::tuple<int, int, SpaceKind>, std::shared_ptr<const BiKernel>> cache_;
};

KernelCache& kernel_cache() {
  static KernelCache cache;
  return cache;
}

}  // namespace

std::shared_ptr<const BiKernel> zonal_harmonic_kernel(int m, int k) {
  if (m < 2 || m > kMaxDim || k < 0) throw std::invalid_argument("zonal kernel: bad (m,k)");
  return kernel_cache().get(m, k, SpaceKind::Harmonic);
}

std::shared_ptr<const BiKernel> zonal_monogenic_kernel(int m, int k) {
  if (m < 3 || m > kMaxDim || k < 0) throw std::invalid_argument("zonal kernel: bad (m,k)");
  return kernel_cache().get(m, k, SpaceKind::Monogenic);
}

// ---------------------------------------------------------------------------
// NumUPoly
// ---------------------------------------------------------------------------

void NumUPoly::add_term(const UExponents& e, const NumMultivector& c) {
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) it->second += c;
}

NumUPoly& NumUPoly::operator+=(const NumUPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

NumUPoly& NumUPoly::operator-=(const NumUPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    NumMultivector neg = c;
    neg *= -1.0;
    add_term(e, neg);
  }
  return *this;
}

NumUPoly NumUPoly::scaled(double s) const {
  NumUPoly out(dim_);
  for (const auto& [e, c] : terms_) {
    NumMultivector sc = c;
    sc *= s;
    out.terms_.emplace(e, std::move(sc));
  }
  return out;
}

NumUPoly NumUPoly::left_mul(const NumMultivector& c) const {
  NumUPoly out(dim_);
  for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, mul(c, coeff));
  return out;
}

NumUPoly NumUPoly::right_mul(const NumMultivector& c) const {
  NumUPoly out(dim_);
  for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, mul(coeff, c));
  return out;
}

NumUPoly mul(const NumUPoly& a, const NumUPoly& b) {
  NumUPoly out(a.dim());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      UExponents e = ea;
      for (int j = 0; j < a.dim(); ++j) e[j] = static_cast<std::uint8_t>(e[j] + eb[j]);
      out.add_term(e, mul(ca, cb));
    }
  }
  return out;
}

NumUPoly NumUPoly::left_mul_u_vector() const {
  NumUPoly out(dim_);
  for (int j = 0; j < dim_; ++j) {
    NumMultivector ej(dim_);
    ej[std::size_t{1} << j] = 1.0;
    for (const auto& [e, c] : terms_) {
      UExponents shifted = e;
      shifted[j] = static_cast<std::uint8_t>(shifted[j] + 1);
      out.add_term(shifted, mul(ej, c));
    }
  }
  return out;
}

NumUPoly NumUPoly::partial_u(int j) const {
  NumUPoly out(dim_);
  for (const auto& [e, c] : terms_) {
    if (e[j - 1] == 0) continue;
    UExponents d = e;
    d[j - 1] = static_cast<std::uint8_t>(d[j - 1] - 1);
    NumMultivector sc = c;
    sc *= static_cast<double>(e[j - 1]);
    out.add_term(d, sc);
  }
  return out;
}

NumUPoly NumUPoly::times_u(int j) const {
  NumUPoly out(dim_);
  for (const auto& [e, c] : terms_) {
    UExponents s = e;
    s[j - 1] = static_cast<std::uint8_t>(s[j - 1] + 1);
    out.terms_.emplace(s, c);
  }
  return out;
}

NumUPoly NumUPoly::times_norm_u2() const {
  NumUPoly out(dim_);
  for (int j = 1; j <= dim_; ++j) out += times_u(j).times_u(j);
  return out;
}

NumUPoly NumUPoly::dirac_u() const {
  NumUPoly out(dim_);
  for (int j = 1; j <= dim_; ++j) {
    NumMultivector ej(dim_);
    ej[std::size_t{1} << (j - 1)] = 1.0;
    out += partial_u(j).left_mul(ej);
  }
  return out;
}

NumUPoly NumUPoly::laplacian_u() const {
  NumUPoly out(dim_);
  for (int j = 1; j <= dim_; ++j) out += partial_u(j).partial_u(j);
  return out;
}

NumUPoly NumUPoly::project_plus(int k) const {
  const double denom = dim_ + 2.0 * k - 2.0;
  NumUPoly out = *this;
  out += dirac_u().left_mul_u_vector().scaled(1.0 / denom);
  return out;
}

NumUPoly NumUPoly::project_minus(int k) const {
  const double denom = dim_ + 2.0 * k - 2.0;
  return dirac_u().left_mul_u_vector().scaled(-1.0 / denom);
}

NumMultivector NumUPoly::eval(const std::vector<double>& u) const {
  NumMultivector out(dim_);
  for (const auto& [e, c] : terms_) {
    double scale = 1.0;
    for (int j = 0; j < dim_; ++j) {
      for (int rep = 0; rep < e[j]; ++rep) scale *= u[j];
    }
    NumMultivector sc = c;
    sc *= scale;
    out += sc;
  }
  return out;
}

double NumUPoly::max_abs() const {
  double m = 0.0;
  for (const auto& [e, c] : terms_) m = std::max(m, c.max_abs());
  return m;
}

NumMultivector num_conjugate(const NumMultivector& a) {
  NumMultivector out(a.dim());
  for (std::size_t blade = 0; blade < a.size(); ++blade) {
    out[blade] = conjugation_sign(blade_grade(static_cast<BladeMask>(blade))) * a[blade];
  }
  return out;
}

NumMultivector num_vector(const std::vector<double>& coords) {
  NumMultivector out(static_cast<int>(coords.size()));
  for (std::size_t j = 0; j < coords.size(); ++j) out[std::size_t{1} << j] = coords[j];
  return out;
}

NumUPoly evaluate_xv(const CliffPoly& p, const std::vector<double>& x,
                     const std::vector<double>& v) {
  NumUPoly out(p.dim());
  for (const auto& [mono, coeff] : p.terms()) {
    double scale = 1.0;
    for (int j = 0; j < p.dim(); ++j) {
      for (int rep = 0; rep < mono.x[j]; ++rep) scale *= x[j];
      for (int rep = 0; rep < mono.v[j]; ++rep) scale *= v[j];
    }
    if (scale == 0.0) continue;
    NumMultivector c(p.dim());
    for (const auto& [blade, s] : coeff.terms()) c[blade] += s.to_double();
    c *= scale;
    out.add_term(mono.u, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Jets
// ---------------------------------------------------------------------------

Jet2::Jet2(int dim)
    : m(dim),
      value(dim),
      grad(dim, NumUPoly(dim)),
      hess(dim, std::vector<NumUPoly>(dim, NumUPoly(dim))) {}

Jet2& Jet2::operator+=(const Jet2& o) {
  value += o.value;
  for (int i = 0; i < m; ++i) {
    grad[i] += o.grad[i];
    for (int j = 0; j < m; ++j) hess[i][j] += o.hess[i][j];
  }
  return *this;
}

Jet2 Jet2::scaled(double s) const {
  Jet2 out(m);
  out.value = value.scaled(s);
  for (int i = 0; i < m; ++i) {
    out.grad[i] = grad[i].scaled(s);
    for (int j = 0; j < m; ++j) out.hess[i][j] = hess[i][j].scaled(s);
  }
  return out;
}

Jet2 Jet2::left_mul_u_vector() const {
  Jet2 out(m);
  out.value = value.left_mul_u_vector();
  for (int i = 0; i < m; ++i) {
    out.grad[i] = grad[i].left_mul_u_vector();
    for (int j = 0; j < m; ++j) out.hess[i][j] = hess[i][j].left_mul_u_vector();
  }
  return out;
}

Jet2 Jet2::right_mul(const NumMultivector& c) const {
  Jet2 out(m);
  out.value = value.right_mul(c);
  for (int i = 0; i < m; ++i) {
    out.grad[i] = grad[i].right_mul(c);
    for (int j = 0; j < m; ++j) out.hess[i][j] = hess[i][j].right_mul(c);
  }
  return out;
}

Jet2 mul(const Jet2& a, const Jet2& b) {
  Jet2 out(a.m);
  out.value = mul(a.value, b.value);
  for (int i = 0; i < a.m; ++i) {
    out.grad[i] = mul(a.grad[i], b.value) + mul(a.value, b.grad[i]);
    for (int j = 0; j < a.m; ++j) {
      out.hess[i][j] = mul(a.hess[i][j], b.value) + mul(a.grad[i], b.grad[j]) +
                       mul(a.grad[j], b.grad[i]) + mul(a.value, b.hess[i][j]);
    }
  }
  return out;
}

namespace {

NumUPoly num_scalar_upoly(int m, double s) {
  NumUPoly out(m);
  NumMultivector c(m);
  c[0] = s;
  out.add_term(UExponents{}, c);
  return out;
}

NumUPoly num_u_variable(int m, int j) {
  NumUPoly out(m);
  NumMultivector c(m);
  c[0] = 1.0;
  UExponents e{};
  e[j - 1] = 1;
  out.add_term(e, c);
  return out;
}

}  // namespace

Jet2 jet_constant(int m, const NumUPoly& value) {
  Jet2 out(m);
  out.value = value;
  return out;
}

Jet2 jet_coordinate(const std::vector<double>& x, int j) {
  const int m = static_cast<int>(x.size());
  Jet2 out(m);
  out.value = num_scalar_upoly(m, x[j - 1]);
  out.grad[j - 1] = num_scalar_upoly(m, 1.0);
  return out;
}

Jet2 jet_x_vector(const std::vector<double>& x) {
  const int m = static_cast<int>(x.size());
  Jet2 out(m);
  NumUPoly value(m);
  value.add_term(UExponents{}, num_vector(x));
  out.value = value;
  for (int j = 0; j < m; ++j) {
    std::vector<double> ej(m, 0.0);
    ej[j] = 1.0;
    NumUPoly g(m);
    g.add_term(UExponents{}, num_vector(ej));
    out.grad[j] = g;
  }
  return out;
}

Jet2 jet_norm_power(const std::vector<double>& x, double p) {
  const int m = static_cast<int>(x.size());
  double s = 0.0;
  for (double c : x) s += c * c;
  if (s == 0.0) throw std::invalid_argument("jet_norm_power: x must be nonzero");
  // φ(s) = s^{p/2} with s = |x|²: ∂_i = 2x_i φ', ∂_i∂_j = 4x_ix_j φ'' + 2δ_ij φ'.
  const double phi = std::pow(s, p / 2.0);
  const double dphi = (p / 2.0) * std::pow(s, p / 2.0 - 1.0);
  const double ddphi = (p / 2.0) * (p / 2.0 - 1.0) * std::pow(s, p / 2.0 - 2.0);
  Jet2 out(m);
  out.value = num_scalar_upoly(m, phi);
  for (int i = 0; i < m; ++i) {
    out.grad[i] = num_scalar_upoly(m, dphi * 2.0 * x[i]);
    for (int j = 0; j < m; ++j) {
      double h = ddphi * 4.0 * x[i] * x[j];
      if (i == j) h += 2.0 * dphi;
      out.hess[i][j] = num_scalar_upoly(m, h);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fundamental solutions
// ---------------------------------------------------------------------------

double fundamental_a_constant(int m, int k) {
  return static_cast<double>(m - 2) / static_cast<double>(m + 2 * k - 2);
}

double fundamental_c_constant(int m, int k) {
  if (m == 4) throw std::invalid_argument("fundamental constant divides by 4-m");
  return (m + 2 * k - 4) * std::tgamma(m / 2.0 - 1.0) /
         (4.0 * (4 - m) * std::pow(std::numbers::pi, m / 2.0));
}

namespace {

// Jets of the reflected spin variable: (x u x / |x|²)_i substitutes
// σ_i(u; x) = u_i − 2 x_i ⟨x, u⟩ / |x|² for u_i.
std::vector<Jet2> sigma_jets(const std::vector<double>& x) {
  const int m = static_cast<int>(x.size());
  Jet2 inner(m);  // ⟨x, u⟩
  for (int l = 1; l <= m; ++l) {
    inner.value += num_u_variable(m, l).scaled(x[l - 1]);
    inner.grad[l - 1] += num_u_variable(m, l);
  }
  const Jet2 inv_s = jet_norm_power(x, -2.0);
  std::vector<Jet2> sigma;
  sigma.reserve(m);
  for (int i = 1; i <= m; ++i) {
    Jet2 s = jet_constant(m, num_u_variable(m, i));
    s += mul(mul(jet_coordinate(x, i), inv_s), inner).scaled(-2.0);
    sigma.push_back(std::move(s));
  }
  return sigma;
}

NumMultivector coeff_to_num(const Multivector& coeff, int m) {
  NumMultivector c(m);
  for (const auto& [blade, s] : coeff.terms()) c[blade] += s.to_double();
  return c;
}

// Jet of the true kernel K(x u x/|x|², v) with K = poly/ω_m.
Jet2 substituted_kernel_jet(const BiKernel& kernel, const std::vector<double>& x,
                            const std::vector<double>& v) {
  const int m = kernel.m;
  const std::vector<Jet2> sigma = sigma_jets(x);
  Jet2 out(m);
  for (const auto& [mono, coeff] : kernel.poly.terms()) {
    double vscale = 1.0;
    for (int i = 0; i < m; ++i) {
      for (int rep = 0; rep < mono.v[i]; ++rep) vscale *= v[i];
    }
    if (vscale == 0.0) continue;
    Jet2 term = jet_constant(m, num_scalar_upoly(m, 1.0));
    for (int i = 0; i < m; ++i) {
      for (int rep = 0; rep < mono.u[i]; ++rep) term = mul(term, sigma[i]);
    }
    NumMultivector c = coeff_to_num(coeff, m);
    c *= vscale;
    out += term.right_mul(c);
  }
  return out.scaled(1.0 / omega_m(m));
}

// Value-only variant for the quadrature hot path.
NumUPoly substituted_kernel_value(const BiKernel& kernel, const std::vector<double>& x,
                                  const std::vector<double>& v) {
  const int m = kernel.m;
  double s = 0.0;
  for (double c : x) s += c * c;
  std::vector<NumUPoly> sigma;
  sigma.reserve(m);
  for (int i = 1; i <= m; ++i) {
    NumUPoly form = num_u_variable(m, i);
    for (int l = 1; l <= m; ++l) {
      form += num_u_variable(m, l).scaled(-2.0 * x[i - 1] * x[l - 1] / s);
    }
    sigma.push_back(std::move(form));
  }
  NumUPoly out(m);
  for (const auto& [mono, coeff] : kernel.poly.terms()) {
    double vscale = 1.0;
    for (int i = 0; i < m; ++i) {
      for (int rep = 0; rep < mono.v[i]; ++rep) vscale *= v[i];
    }
    if (vscale == 0.0) continue;
    NumUPoly term = num_scalar_upoly(m, 1.0);
    for (int i = 0; i < m; ++i) {
      for (int rep = 0; rep < mono.u[i]; ++rep) term = mul(term, sigma[i]);
    }
    NumMultivector c = coeff_to_num(coeff, m);
    c *= vscale;
    out += term.right_mul(c);
  }
  return out.scaled(1.0 / omega_m(m));
}

void check_fundamental_args(FundamentalKind kind, int m, int k,
                            const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != m) {
    throw std::invalid_argument("fundamental solution: bad point dimension");
  }
  double s = 0.0;
  for (double c : x) s += c * c;
  if (s == 0.0) throw std::invalid_argument("fundamental solution: x must be nonzero");
  if (kind == FundamentalKind::Bosonic && m == 4) {
    throw std::invalid_argument("fundamental solution: constant undefined at m=4");
  }
  if (kind == FundamentalKind::Remaining && k < 1) {
    throw std::invalid_argument("fundamental solution: F_k needs k >= 1");
  }
}

}  // namespace

Jet2 fundamental_jet(FundamentalKind kind, int m, int k, const std::vector<double>& x,
                     const std::vector<double>& v) {
  check_fundamental_args(kind, m, k, x);
  switch (kind) {
    case FundamentalKind::RaritaSchwinger: {
      const auto kernel = zonal_monogenic_kernel(m, k);
      Jet2 out = mul(jet_x_vector(x),
                     mul(jet_norm_power(x, -static_cast<double>(m)),
                         substituted_kernel_jet(*kernel, x, v)));
      return out.scaled(1.0 / (omega_m(m) * fundamental_a_constant(m, k)));
    }
    case FundamentalKind::Remaining: {
      const auto kernel = zonal_monogenic_kernel(m, k - 1);
      Jet2 out = mul(jet_x_vector(x),
                     mul(jet_norm_power(x, -static_cast<double>(m)),
                         substituted_kernel_jet(*kernel, x, v)));
      out = out.left_mul_u_vector().right_mul(num_vector(v));
      return out.scaled(-1.0 / (omega_m(m) * fundamental_a_constant(m, k)));
    }
    case FundamentalKind::Bosonic: {
      const auto kernel = zonal_harmonic_kernel(m, k);
      Jet2 out = mul(jet_norm_power(x, 2.0 - m), substituted_kernel_jet(*kernel, x, v));
      return out.scaled(fundamental_c_constant(m, k));
    }
  }
  throw std::logic_error("fundamental_jet: unreachable");
}

NumUPoly eval_fundamental(FundamentalKind kind, int m, int k, const std::vector<double>& x,
                          const std::vector<double>& v) {
  check_fundamental_args(kind, m, k, x);
  double s = 0.0;
  for (double c : x) s += c * c;
  switch (kind) {
    case FundamentalKind::RaritaSchwinger: {
      const auto kernel = zonal_monogenic_kernel(m, k);
      NumUPoly out = substituted_kernel_value(*kernel, x, v)
                         .left_mul(num_vector(x))
                         .scaled(std::pow(s, -m / 2.0));
      return out.scaled(1.0 / (omega_m(m) * fundamental_a_constant(m, k)));
    }
    case FundamentalKind::Remaining: {
      const auto kernel = zonal_monogenic_kernel(m, k - 1);
      NumUPoly out = substituted_kernel_value(*kernel, x, v)
                         .left_mul(num_vector(x))
                         .scaled(std::pow(s, -m / 2.0))
                         .left_mul_u_vector()
                         .right_mul(num_vector(v));
      return out.scaled(-1.0 / (omega_m(m) * fundamental_a_constant(m, k)));
    }
    case FundamentalKind::Bosonic: {
      const auto kernel = zonal_harmonic_kernel(m, k);
      NumUPoly out =
          substituted_kernel_value(*kernel, x, v).scaled(std::pow(s, (2.0 - m) / 2.0));
      return out.scaled(fundamental_c_constant(m, k));
    }
  }
  throw std::logic_error("eval_fundamental: unreachable");
}

double annihilation_residual(FundamentalKind kind, int m, int k,
                             const std::vector<double>& x, const std::vector<double>& v) {
  const Jet2 jet = fundamental_jet(kind, m, k, x, v);
  const double input_scale = jet.value.max_abs();
  if (input_scale == 0.0) return 0.0;

  NumUPoly result(m);
  switch (kind) {
    case FundamentalKind::RaritaSchwinger:
    case FundamentalKind::Remaining: {
      NumUPoly dx(m);
      for (int j = 0; j < m; ++j) {
        NumMultivector ej(m);
        ej[std::size_t{1} << j] = 1.0;
        dx += jet.grad[j].left_mul(ej);
      }
      result = (kind == FundamentalKind::RaritaSchwinger) ? dx.project_plus(k)
                                                          : dx.project_minus(k);
      break;
    }
    case FundamentalKind::Bosonic: {
      const int n = m + 2 * k;
      NumUPoly lap(m);
      for (int j = 0; j < m; ++j) lap += jet.hess[j][j];
      NumUPoly mixed1(m);  // Σ_l u_l Σ_j ∂_{u_j} hess_{lj}
      for (int l = 0; l < m; ++l) {
        NumUPoly inner(m);
        for (int j = 0; j < m; ++j) inner += jet.hess[l][j].partial_u(j + 1);
        mixed1 += inner.times_u(l + 1);
      }
      NumUPoly mixed2(m);  // Σ_{l,j} ∂_{u_l} ∂_{u_j} hess_{lj}
      for (int l = 0; l < m; ++l) {
        for (int j = 0; j < m; ++j) {
          mixed2 += jet.hess[l][j].partial_u(j + 1).partial_u(l + 1);
        }
      }
      result = lap + mixed1.scaled(-4.0 / (n - 2)) +
               mixed2.times_norm_u2().scaled(4.0 / (static_cast<double>(n - 2) * (n - 4)));
      break;
    }
  }
  return result.max_abs() / input_scale;
}

// ---------------------------------------------------------------------------
// Quadrature
// ---------------------------------------------------------------------------

namespace {

struct GaussRule {
  std::vector<double> nodes, weights;
};

// Gauss-Legendre on [-1, 1] by Newton iteration on P_n.
GaussRule gauss_legendre(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = t;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * t * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (t * p1 - p0) / (t * t - 1.0);
      const double step = p1 / dp;
      t -= step;
      if (std::abs(step) < 1e-15) break;
    }
    rule.nodes[i] = t;
    rule.weights[i] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
  return rule;
}

}  // namespace

std::vector<QuadratureNode> sphere_quadrature(int m, int order) {
  if (m < 2) throw std::invalid_argument("sphere_quadrature: m >= 2");
  std::vector<QuadratureNode> nodes;
  if (m == 2) {
    const int count = std::max(4, 2 * order);
    nodes.reserve(count);
    for (int i = 0; i < count; ++i) {
      const double phi = 2.0 * std::numbers::pi * (i + 0.5) / count;
      nodes.push_back({{std::cos(phi), std::sin(phi)}, 2.0 * std::numbers::pi / count});
    }
    return nodes;
  }

  // Polar rule for ∫ f(t) (1−t²)^{(m−3)/2} dt.  Odd m: the weight power is an
  // integer, folded into Gauss-Legendre weights.  Even m: split off √(1−t²)
  // and use the Chebyshev rule of the second kind for it; the remaining
  // integer power folds in.  Both choices are exact on polynomials.
  GaussRule polar;
  int poly_power = 0;
  if (m % 2 == 1) {
    polar = gauss_legendre(order);
    poly_power = (m - 3) / 2;
  } else {
    const int n = std::max(order, 2);
    polar.nodes.resize(n);
    polar.weights.resize(n);
    for (int i = 1; i <= n; ++i) {
      const double theta = std::numbers::pi * i / (n + 1.0);
      polar.nodes[i - 1] = std::cos(theta);
      polar.weights[i - 1] =
          std::numbers::pi / (n + 1.0) * std::sin(theta) * std::sin(theta);
    }
    poly_power = (m - 4) / 2;
  }

  const std::vector<QuadratureNode> sub = sphere_quadrature(m - 1, order);
  nodes.reserve(polar.nodes.size() * sub.size());
  for (std::size_t i = 0; i < polar.nodes.size(); ++i) {
    const double t = polar.nodes[i];
    const double sin2 = 1.0 - t * t;
    const double sint = std::sqrt(sin2);
    double wpolar = polar.weights[i];
    for (int rep = 0; rep < poly_power; ++rep) wpolar *= sin2;
    for (const auto& q : sub) {
      QuadratureNode node;
      node.point.resize(m);
      node.point[0] = t;
      for (int j = 0; j < m - 1; ++j) node.point[j + 1] = sint * q.point[j];
      node.weight = wpolar * q.weight;
      nodes.push_back(std::move(node));
    }
  }
  return nodes;
}

// ---------------------------------------------------------------------------
// Borel-Pompeiu probes
// ---------------------------------------------------------------------------

namespace {

std::vector<double> minus(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

// Radial extent of the unit ball from interior point y along direction w.
double ball_extent(const std::vector<double>& y, const std::vector<double>& w) {
  double yw = 0.0, yy = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    yw += y[i] * w[i];
    yy += y[i] * y[i];
  }
  return -yw + std::sqrt(std::max(0.0, 1.0 - yy + yw * yw));
}

double probe_residual(const NumMultivector& recon, const NumMultivector& ref) {
  return (recon - ref).max_abs() / std::max(1.0, ref.max_abs());
}

}  // namespace

ProbeResult borel_pompeiu_probe_classical(const CliffPoly& f, const std::vector<double>& y,
                                          int order) {
  const int m = f.dim();
  if (f.uses_family(Family::U) || f.uses_family(Family::V)) {
    throw std::invalid_argument("classical probe: f must be u-constant");
  }
  const double omega = omega_m(m);
  const CliffPoly df = dirac(f, Family::X);

  // bar(E_0(z)) with E_0(z) = z/(ω_m² |z|^m); the u-sphere integration later
  // contributes the factor ω_m that restores the Cauchy kernel normalization.
  const auto cauchy_bar = [&](const std::vector<double>& z) {
    double s = 0.0;
    for (double c : z) s += c * c;
    NumMultivector out = num_vector(z);
    out *= -std::pow(s, -m / 2.0) / (omega * omega);
    return out;
  };

  const auto eval_at = [&](const CliffPoly& p, const std::vector<double>& x) {
    PointM pt;
    pt.x = x;
    return evaluate(p, pt);
  };

  NumMultivector boundary(m);
  for (const auto& node : sphere_quadrature(m, order)) {
    const NumMultivector term =
        mul(mul(cauchy_bar(minus(node.point, y)), num_vector(node.point)),
            eval_at(f, node.point));
    boundary += term * node.weight;
  }
  boundary *= omega;

  // Volume term pairing against (D₁ f)₁ = −D_x f, with the quadrature in
  // polar coordinates around y so the ρ^{m−1} Jacobian absorbs |x−y|^{1−m}.
  NumMultivector volume(m);
  const GaussRule radial = gauss_legendre(order);
  for (const auto& dir : sphere_quadrature(m, order)) {
    const double extent = ball_extent(y, dir.point);
    for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
      const double t = 0.5 * (radial.nodes[i] + 1.0);
      const double rho = extent * t;
      if (rho == 0.0) continue;
      std::vector<double> x(m);
      for (int j = 0; j < m; ++j) x[j] = y[j] + rho * dir.point[j];
      NumMultivector dval = eval_at(df, x);
      dval *= -1.0;
      const double w = dir.weight * 0.5 * radial.weights[i] * extent * std::pow(rho, m - 1);
      volume += mul(cauchy_bar(minus(x, y)), dval) * w;
    }
  }
  volume *= omega;

  ProbeResult out;
  out.reconstructed = boundary + volume;
  PointM ref_pt;
  ref_pt.x = y;
  out.reference = eval_at(f, y);
  out.residual = probe_residual(out.reconstructed, out.reference);
  out.residual_displayed = probe_residual(boundary - volume, out.reference);
  return out;
}

ProbeResult borel_pompeiu_probe(const HPair& f, const SpinContext& ctx,
                                const std::vector<double>& y, const std::vector<double>& v,
                                int order) {
  require_supported(ctx);
  const int m = ctx.m;
  const int k = ctx.k;
  const int n = ctx.n();
  const double d2 = -std::sqrt(static_cast<double>(n) / (n - 4));

  const HPair df = matrix_dirac_apply(f, ctx);
  const std::vector<QuadratureNode> u_nodes = sphere_quadrature(m, 2 * k + 2);
  const std::vector<double> no_v;

  const auto bar_upoly = [&](const NumUPoly& p) {
    NumUPoly out(m);
    for (const auto& [e, c] : p.terms()) out.add_term(e, num_conjugate(c));
    return out;
  };

  // ∫_{S^{m−1}} [bar(E) ⋅ n ⋅ g₁ + d₂ bar(F) ⋅ n ⋅ g₂] dS(u) by quadrature;
  // `normal` is null on the volume side.
  const auto pair_against = [&](const NumUPoly& bar_e, const NumUPoly& bar_f,
                                const NumUPoly& g1, const NumUPoly& g2,
                                const NumMultivector* normal) {
    NumMultivector acc(m);
    for (const auto& un : u_nodes) {
      const NumMultivector e_at = bar_e.eval(un.point);
      const NumMultivector f_at = bar_f.eval(un.point);
      NumMultivector t1 = normal ? mul(e_at, mul(*normal, g1.eval(un.point)))
                                 : mul(e_at, g1.eval(un.point));
      NumMultivector t2 = normal ? mul(f_at, mul(*normal, g2.eval(un.point)))
                                 : mul(f_at, g2.eval(un.point));
      t2 *= d2;
      acc += (t1 + t2) * un.weight;
    }
    return acc;
  };

  NumMultivector boundary(m);
  for (const auto& node : sphere_quadrature(m, order)) {
    const std::vector<double> z = minus(node.point, y);
    const NumUPoly bar_e =
        bar_upoly(eval_fundamental(FundamentalKind::RaritaSchwinger, m, k, z, v));
    const NumUPoly bar_f =
        bar_upoly(eval_fundamental(FundamentalKind::Remaining, m, k, z, v));
    const NumMultivector normal = num_vector(node.point);
    const NumUPoly f1 = evaluate_xv(f.f1, node.point, no_v);
    const NumUPoly f2 = evaluate_xv(f.f2, node.point, no_v);
    boundary += pair_against(bar_e, bar_f, f1, f2, &normal) * node.weight;
  }

  NumMultivector volume(m);
  const GaussRule radial = gauss_legendre(order);
  for (const auto& dir : sphere_quadrature(m, order)) {
    const double extent = ball_extent(y, dir.point);
    for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
      const double t = 0.5 * (radial.nodes[i] + 1.0);
      const double rho = extent * t;
      if (rho == 0.0) continue;
      std::vector<double> x(m), z(m);
      for (int j = 0; j < m; ++j) {
        z[j] = rho * dir.point[j];
        x[j] = y[j] + z[j];
      }
      const NumUPoly bar_e =
          bar_upoly(eval_fundamental(FundamentalKind::RaritaSchwinger, m, k, z, v));
      const NumUPoly bar_f =
          bar_upoly(eval_fundamental(FundamentalKind::Remaining, m, k, z, v));
      const NumUPoly g1 = evaluate_xv(df.f1, x, no_v);
      const NumUPoly g2 = evaluate_xv(df.f2, x, no_v);
      const double w = dir.weight * 0.5 * radial.weights[i] * extent * std::pow(rho, m - 1);
      volume += pair_against(bar_e, bar_f, g1, g2, nullptr) * w;
    }
  }

  ProbeResult out;
  out.reconstructed = boundary + volume;
  PointM ref_pt;
  ref_pt.x = y;
  ref_pt.u = v;
  out.reference = evaluate(f.f1 + f.f2, ref_pt);
  out.residual = probe_residual(out.reconstructed, out.reference);
  out.residual_displayed = probe_residual(boundary - volume, out.reference);
  return out;
}

}  // namespace hsca
