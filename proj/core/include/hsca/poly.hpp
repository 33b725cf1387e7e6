#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hsca/multivector.hpp"

namespace hsca {

/// The three scalar variable families: x (base space), u (spin variable),
/// and v (second spin variable, used by bivariate kernels).
enum class Family : std::uint8_t { X = 0, U = 1, V = 2 };

[[nodiscard]] const char* family_name(Family f);

/// Commutative monomial in up to three families of m scalar variables each.
struct Monomial {
  std::array<std::uint8_t, kMaxDim> x{}, u{}, v{};

  [[nodiscard]] const std::array<std::uint8_t, kMaxDim>& exps(Family f) const;
  [[nodiscard]] std::array<std::uint8_t, kMaxDim>& exps(Family f);
  [[nodiscard]] int degree(Family f) const;
  [[nodiscard]] int total_degree() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.x == b.x && a.u == b.u && a.v == b.v;
  }
  /// Graded order (total degree first), then lexicographic per family.
  friend bool operator<(const Monomial& a, const Monomial& b);
};

/// Numeric multivector: dense double coefficients per blade, used wherever
/// exactness ends (evaluation, jets, quadrature).
class NumMultivector {
 public:
  NumMultivector() : dim_(0) {}
  explicit NumMultivector(int dim) : dim_(dim), coeffs_(std::size_t{1} << dim, 0.0) {}

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] double& operator[](std::size_t blade) { return coeffs_[blade]; }
  [[nodiscard]] double operator[](std::size_t blade) const { return coeffs_[blade]; }
  [[nodiscard]] std::size_t size() const { return coeffs_.size(); }

  NumMultivector& operator+=(const NumMultivector& o);
  NumMultivector& operator-=(const NumMultivector& o);
  NumMultivector& operator*=(double s);
  [[nodiscard]] double max_abs() const;

  friend NumMultivector operator+(NumMultivector a, const NumMultivector& b) { return a += b; }
  friend NumMultivector operator-(NumMultivector a, const NumMultivector& b) { return a -= b; }
  friend NumMultivector operator*(NumMultivector a, double s) { return a *= s; }

  /// Clifford product with e_i² = −1.
  friend NumMultivector mul(const NumMultivector& a, const NumMultivector& b);

 private:
  int dim_;
  std::vector<double> coeffs_;
};

/// Evaluation point: numeric coordinates per family (empty = family absent).
struct PointM {
  std::vector<double> x, u, v;

  [[nodiscard]] const std::vector<double>& coords(Family f) const;
};

/// Polynomial in the scalar variables x_1..x_m, u_1..u_m (and v_1..v_m) with
/// Clifford-algebra coefficients.  Scalar variables commute with all blades;
/// coefficients multiply in the geometric algebra.  Canonical form stores no
/// zero coefficients and keeps terms in a deterministic graded order.
class CliffPoly {
 public:
  explicit CliffPoly(int dim);

  static CliffPoly zero(int dim) { return CliffPoly(dim); }
  static CliffPoly constant(Multivector value);
  static CliffPoly scalar_constant(int dim, ExactScalar value);
  /// The scalar variable monomial, e.g. variable(m, Family::X, 1) = x_1.
  static CliffPoly variable(int dim, Family f, int j);
  /// The Clifford vector of a family, Σ_j var_j e_j.
  static CliffPoly vector_variable(int dim, Family f);
  static CliffPoly from_term(int dim, const Monomial& mono, const Multivector& coeff);

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const std::map<Monomial, Multivector>& terms() const { return terms_; }
  [[nodiscard]] std::size_t term_count() const { return terms_.size(); }

  void add_term(const Monomial& mono, const Multivector& coeff);

  CliffPoly& operator+=(const CliffPoly& o);
  CliffPoly& operator-=(const CliffPoly& o);
  friend CliffPoly operator+(CliffPoly a, const CliffPoly& b) { return a += b; }
  friend CliffPoly operator-(CliffPoly a, const CliffPoly& b) { return a -= b; }
  [[nodiscard]] CliffPoly operator-() const;

  [[nodiscard]] CliffPoly scaled(const ExactScalar& s) const;
  [[nodiscard]] CliffPoly left_mul(const Multivector& c) const;   // c · p
  [[nodiscard]] CliffPoly right_mul(const Multivector& c) const;  // p · c

  friend bool operator==(const CliffPoly& a, const CliffPoly& b);
  friend bool operator!=(const CliffPoly& a, const CliffPoly& b) { return !(a == b); }

  [[nodiscard]] int max_degree(Family f) const;
  /// True when every monomial has degree k in the family (zero poly: true).
  [[nodiscard]] bool is_homogeneous(Family f, int k) const;
  [[nodiscard]] bool uses_family(Family f) const;

  /// Clifford conjugation applied to every coefficient.
  [[nodiscard]] CliffPoly conjugated() const;

  [[nodiscard]] std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const CliffPoly& p);

 private:
  int dim_;
  std::map<Monomial, Multivector> terms_;
};

/// Geometric product of polynomials (coefficients multiply left-to-right).
[[nodiscard]] CliffPoly poly_mul(const CliffPoly& p, const CliffPoly& q);

/// Formal partial derivative with respect to the j-th variable (1-based).
[[nodiscard]] CliffPoly partial_derivative(const CliffPoly& p, Family f, int j);

/// Dirac operator Σ_j e_j ∂_j acting from the left.
[[nodiscard]] CliffPoly dirac(const CliffPoly& p, Family f);

/// Laplacian Σ_j ∂_j²; equals −dirac(dirac(·)).
[[nodiscard]] CliffPoly laplacian(const CliffPoly& p, Family f);

/// ⟨u, ∇_x⟩ p = Σ_j u_j ∂_{x_j} p.
[[nodiscard]] CliffPoly u_dot_grad_x(const CliffPoly& p);

/// ⟨∇_u, ∇_x⟩ p = Σ_j ∂_{u_j} ∂_{x_j} p.
[[nodiscard]] CliffPoly grad_u_dot_grad_x(const CliffPoly& p);

/// Multiplication by |var|² = Σ_j var_j².
[[nodiscard]] CliffPoly times_norm_squared(const CliffPoly& p, Family f);

/// Exact integral of each monomial of the family over the unit sphere
/// S^{m−1}, via ∫ t^{2β} dS = 2 ∏_j Γ(β_j + ½) / Γ(|β| + m/2); odd exponents
/// vanish.  The result is the coefficient of the formal surface-area unit
/// ω_m and no longer involves the integrated family.
[[nodiscard]] CliffPoly sphere_integral(const CliffPoly& p, Family f);

/// Exact integral over the unit ball: radial factor 1/(deg + m) times the
/// sphere integral, returned as the coefficient of ω_m.
[[nodiscard]] CliffPoly ball_integral(const CliffPoly& p, Family f);

/// ∫ t^β dS(t) / ω_m for a single monomial (exact rational).
[[nodiscard]] Rational monomial_sphere_ratio(const std::array<std::uint8_t, kMaxDim>& exps,
                                             int m);

/// Moves every exponent of `from` into `to`.  The `to` family must be unused.
[[nodiscard]] CliffPoly rename_family(const CliffPoly& p, Family from, Family to);

/// Numeric substitution; exact coefficients convert to double at the end.
/// Throws if the point lacks a family the polynomial uses.
[[nodiscard]] NumMultivector evaluate(const CliffPoly& p, const PointM& pt);

/// Surface area of the unit sphere S^{m−1} as a double.
[[nodiscard]] double omega_m(int m);

}  // namespace hsca
