#include "hsca/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hsca {

const char* family_name(Family f) {
  switch (f) {
    case Family::X: return "x";
    case Family::U: return "u";
    case Family::V: return "v";
  }
  return "?";
}

const std::array<std::uint8_t, kMaxDim>& Monomial::exps(Family f) const {
  switch (f) {
    case Family::X: return x;
    case Family::U: return u;
    default: return v;
  }
}

std::array<std::uint8_t, kMaxDim>& Monomial::exps(Family f) {
  switch (f) {
    case Family::X: return x;
    case Family::U: return u;
    default: return v;
  }
}

int Monomial::degree(Family f) const {
  int d = 0;
  for (auto e : exps(f)) d += e;
  return d;
}

int Monomial::total_degree() const {
  return degree(Family::X) + degree(Family::U) + degree(Family::V);
}

bool operator<(const Monomial& a, const Monomial& b) {
  const int ta = a.total_degree(), tb = b.total_degree();
  if (ta != tb) return ta < tb;
  if (a.x != b.x) return a.x < b.x;
  if (a.u != b.u) return a.u < b.u;
  return a.v < b.v;
}

// ---------------------------------------------------------------------------
// NumMultivector
// ---------------------------------------------------------------------------

NumMultivector& NumMultivector::operator+=(const NumMultivector& o) {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

NumMultivector& NumMultivector::operator-=(const NumMultivector& o) {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

NumMultivector& NumMultivector::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  return *this;
}

double NumMultivector::max_abs() const {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

NumMultivector mul(const NumMultivector& a, const NumMultivector& b) {
  NumMultivector out(a.dim());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0.0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0.0) continue;
      const int sign = blade_product_sign(static_cast<BladeMask>(i),
                                          static_cast<BladeMask>(j));
      out[i ^ j] += sign * a[i] * b[j];
    }
  }
  return out;
}

const std::vector<double>& PointM::coords(Family f) const {
  switch (f) {
    case Family::X: return x;
    case Family::U: return u;
    default: return v;
  }
}

// ---------------------------------------------------------------------------
// CliffPoly
// ---------------------------------------------------------------------------

CliffPoly::CliffPoly(int dim) : dim_(dim) {
  if (dim < 2 || dim > kMaxDim) {
    throw std::invalid_argument("CliffPoly: dimension must be in [2, 8]");
  }
}

CliffPoly CliffPoly::constant(Multivector value) {
  CliffPoly out(value.dim());
  out.add_term(Monomial{}, value);
  return out;
}

CliffPoly CliffPoly::scalar_constant(int dim, ExactScalar value) {
  return constant(Multivector::scalar(dim, std::move(value)));
}

CliffPoly CliffPoly::variable(int dim, Family f, int j) {
  if (j < 1 || j > dim) throw std::invalid_argument("CliffPoly: variable index");
  CliffPoly out(dim);
  Monomial mono;
  mono.exps(f)[j - 1] = 1;
  out.add_term(mono, Multivector::scalar(dim, ExactScalar(1)));
  return out;
}

CliffPoly CliffPoly::vector_variable(int dim, Family f) {
  CliffPoly out(dim);
  for (int j = 1; j <= dim; ++j) {
    Monomial mono;
    mono.exps(f)[j - 1] = 1;
    out.add_term(mono, Multivector::basis_vector(dim, j));
  }
  return out;
}

CliffPoly CliffPoly::from_term(int dim, const Monomial& mono, const Multivector& coeff) {
  CliffPoly out(dim);
  out.add_term(mono, coeff);
  return out;
}

void CliffPoly::add_term(const Monomial& mono, const Multivector& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CliffPoly& CliffPoly::operator+=(const CliffPoly& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("CliffPoly: dimension mismatch");
  for (const auto& [mono, coeff] : o.terms_) add_term(mono, coeff);
  return *this;
}

CliffPoly& CliffPoly::operator-=(const CliffPoly& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("CliffPoly: dimension mismatch");
  for (const auto& [mono, coeff] : o.terms_) add_term(mono, -coeff);
  return *this;
}

CliffPoly CliffPoly::operator-() const {
  CliffPoly out(dim_);
  for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, -coeff);
  return out;
}

CliffPoly CliffPoly::scaled(const ExactScalar& s) const {
  CliffPoly out(dim_);
  if (s.is_zero()) return out;
  for (const auto& [mono, coeff] : terms_) {
    Multivector c = coeff.scaled(s);
    if (!c.is_zero()) out.terms_.emplace(mono, std::move(c));
  }
  return out;
}

CliffPoly CliffPoly::left_mul(const Multivector& c) const {
  CliffPoly out(dim_);
  for (const auto& [mono, coeff] : terms_) {
    out.add_term(mono, geometric_product(c, coeff));
  }
  return out;
}

CliffPoly CliffPoly::right_mul(const Multivector& c) const {
  CliffPoly out(dim_);
  for (const auto& [mono, coeff] : terms_) {
    out.add_term(mono, geometric_product(coeff, c));
  }
  return out;
}

bool operator==(const CliffPoly& a, const CliffPoly& b) {
  return a.dim_ == b.dim_ && a.terms_ == b.terms_;
}

int CliffPoly::max_degree(Family f) const {
  int d = 0;
  for (const auto& [mono, coeff] : terms_) d = std::max(d, mono.degree(f));
  return d;
}

bool CliffPoly::is_homogeneous(Family f, int k) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return t.first.degree(f) == k; });
}

bool CliffPoly::uses_family(Family f) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return t.first.degree(f) > 0; });
}

CliffPoly CliffPoly::conjugated() const {
  CliffPoly out(dim_);
  for (const auto& [mono, coeff] : terms_) {
    out.terms_.emplace(mono, clifford_conjugate(coeff));
  }
  return out;
}

std::string CliffPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, coeff] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "[" << coeff.to_string() << "]";
    for (Family f : {Family::X, Family::U, Family::V}) {
      const auto& e = mono.exps(f);
      for (int j = 0; j < dim_; ++j) {
        if (e[j] == 0) continue;
        os << "*" << family_name(f) << (j + 1);
        if (e[j] > 1) os << "^" << static_cast<int>(e[j]);
      }
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CliffPoly& p) {
  return os << p.to_string();
}

// ---------------------------------------------------------------------------
// Calculus and integrals
// ---------------------------------------------------------------------------

CliffPoly poly_mul(const CliffPoly& p, const CliffPoly& q) {
  if (p.dim() != q.dim()) throw std::invalid_argument("poly_mul: dimension mismatch");
  CliffPoly out(p.dim());
  for (const auto& [mp, cp] : p.terms()) {
    for (const auto& [mq, cq] : q.terms()) {
      Monomial mono = mp;
      for (Family f : {Family::X, Family::U, Family::V}) {
        auto& e = mono.exps(f);
        const auto& eq = mq.exps(f);
        for (int j = 0; j < p.dim(); ++j) {
          const int sum = e[j] + eq[j];
          if (sum > 255) throw std::overflow_error("poly_mul: exponent exceeds 255");
          e[j] = static_cast<std::uint8_t>(sum);
        }
      }
      out.add_term(mono, geometric_product(cp, cq));
    }
  }
  return out;
}

CliffPoly partial_derivative(const CliffPoly& p, Family f, int j) {
  if (j < 1 || j > p.dim()) throw std::invalid_argument("partial_derivative: index");
  CliffPoly out(p.dim());
  for (const auto& [mono, coeff] : p.terms()) {
    const int e = mono.exps(f)[j - 1];
    if (e == 0) continue;
    Monomial m = mono;
    m.exps(f)[j - 1] = static_cast<std::uint8_t>(e - 1);
    out.add_term(m, coeff.scaled(ExactScalar(e)));
  }
  return out;
}

CliffPoly dirac(const CliffPoly& p, Family f) {
  CliffPoly out(p.dim());
  for (int j = 1; j <= p.dim(); ++j) {
    const Multivector ej = Multivector::basis_vector(p.dim(), j);
    out += partial_derivative(p, f, j).left_mul(ej);
  }
  return out;
}

CliffPoly laplacian(const CliffPoly& p, Family f) {
  CliffPoly out(p.dim());
  for (int j = 1; j <= p.dim(); ++j) {
    out += partial_derivative(partial_derivative(p, f, j), f, j);
  }
  return out;
}

CliffPoly u_dot_grad_x(const CliffPoly& p) {
  CliffPoly out(p.dim());
  for (int j = 1; j <= p.dim(); ++j) {
    CliffPoly d = partial_derivative(p, Family::X, j);
    for (const auto& [mono, coeff] : d.terms()) {
      Monomial m = mono;
      m.u[j - 1] = static_cast<std::uint8_t>(m.u[j - 1] + 1);
      out.add_term(m, coeff);
    }
  }
  return out;
}

CliffPoly grad_u_dot_grad_x(const CliffPoly& p) {
  CliffPoly out(p.dim());
  for (int j = 1; j <= p.dim(); ++j) {
    out += partial_derivative(partial_derivative(p, Family::X, j), Family::U, j);
  }
  return out;
}

CliffPoly times_norm_squared(const CliffPoly& p, Family f) {
  CliffPoly out(p.dim());
  for (const auto& [mono, coeff] : p.terms()) {
    for (int j = 0; j < p.dim(); ++j) {
      Monomial m = mono;
      m.exps(f)[j] = static_cast<std::uint8_t>(m.exps(f)[j] + 2);
      out.add_term(m, coeff);
    }
  }
  return out;
}

Rational monomial_sphere_ratio(const std::array<std::uint8_t, kMaxDim>& exps, int m) {
  // ∫_{S^{m−1}} t^{2β} dS / ω_m = ∏_j (2β_j − 1)!! / ∏_{i=0}^{|β|−1} (m + 2i)
  int total_half = 0;
  Rational num(1);
  for (int j = 0; j < m; ++j) {
    const int e = exps[j];
    if (e % 2 == 1) return Rational(0);
    const int beta = e / 2;
    total_half += beta;
    for (int i = 1; i < 2 * beta; i += 2) num *= Rational(i);
  }
  Rational den(1);
  for (int i = 0; i < total_half; ++i) den *= Rational(m + 2 * i);
  return num / den;
}

namespace {

CliffPoly integral_impl(const CliffPoly& p, Family f, bool ball) {
  CliffPoly out(p.dim());
  const int m = p.dim();
  for (const auto& [mono, coeff] : p.terms()) {
    Rational ratio = monomial_sphere_ratio(mono.exps(f), m);
    if (ratio.is_zero()) continue;
    if (ball) ratio /= Rational(mono.degree(f) + m);
    Monomial rest = mono;
    rest.exps(f) = {};
    out.add_term(rest, coeff.scaled(ExactScalar(ratio)));
  }
  return out;
}

}  // namespace

CliffPoly sphere_integral(const CliffPoly& p, Family f) {
  return integral_impl(p, f, /*ball=*/false);
}

CliffPoly ball_integral(const CliffPoly& p, Family f) {
  return integral_impl(p, f, /*ball=*/true);
}

CliffPoly rename_family(const CliffPoly& p, Family from, Family to) {
  if (from == to) return p;
  if (p.uses_family(to)) {
    throw std::invalid_argument("rename_family: target family already in use");
  }
  CliffPoly out(p.dim());
  for (const auto& [mono, coeff] : p.terms()) {
    Monomial m = mono;
    m.exps(to) = m.exps(from);
    m.exps(from) = {};
    out.add_term(m, coeff);
  }
  return out;
}

NumMultivector evaluate(const CliffPoly& p, const PointM& pt) {
  for (Family f : {Family::X, Family::U, Family::V}) {
    if (p.uses_family(f) && pt.coords(f).size() < static_cast<std::size_t>(p.dim())) {
      throw std::invalid_argument(std::string("evaluate: point lacks the ") +
                                  family_name(f) + " family");
    }
  }
  NumMultivector out(p.dim());
  for (const auto& [mono, coeff] : p.terms()) {
    double scale = 1.0;
    for (Family f : {Family::X, Family::U, Family::V}) {
      const auto& e = mono.exps(f);
      for (int j = 0; j < p.dim(); ++j) {
        for (int rep = 0; rep < e[j]; ++rep) scale *= pt.coords(f)[j];
      }
    }
    if (scale == 0.0) continue;
    for (const auto& [blade, c] : coeff.terms()) {
      out[blade] += scale * c.to_double();
    }
  }
  return out;
}

double omega_m(int m) {
  return 2.0 * std::pow(std::numbers::pi, m / 2.0) / std::tgamma(m / 2.0);
}

}  // namespace hsca
