#pragma once

#include <memory>
#include <vector>

#include "hsca/operators.hpp"
#include "hsca/poly.hpp"
#include "hsca/spaces.hpp"

namespace hsca {

/// Bivariate reproducing kernel on S^{m−1}.  The stored polynomial P(u, v)
/// is the numerator of K = P/ω_m, kept exact so reproducing checks divide
/// out the formal surface-area unit.  Harmonic kernels are scalar-valued and
/// symmetric under u <-> v; monogenic kernels are Cl_m-valued and reproduce
/// through the conjugation pairing f(v) = ∫ bar(K(u,v)) f(u) dS(u).
struct BiKernel {
  int m = 0;
  int k = 0;
  SpaceKind kind = SpaceKind::Harmonic;
  CliffPoly poly = CliffPoly(2);  // kernel = poly / ω_m
};

/// Zonal kernel of scalar H_k, built from the exact Gram inverse of the
/// harmonic basis.  Cached per (m, k).
[[nodiscard]] std::shared_ptr<const BiKernel> zonal_harmonic_kernel(int m, int k);

/// Zonal kernel of M_k: the u-projection P_k⁺ of the harmonic kernel, with
/// the reproducing identity then verified exactly against the whole module
/// basis (throws on failure).  Cached per (m, k).
[[nodiscard]] std::shared_ptr<const BiKernel> zonal_monogenic_kernel(int m, int k);

// --- Numeric layer: polynomials in u with double Clifford coefficients -----

using UExponents = std::array<std::uint8_t, kMaxDim>;

/// Numeric polynomial in the u variables with NumMultivector coefficients.
class NumUPoly {
 public:
  NumUPoly() : dim_(0) {}
  explicit NumUPoly(int dim) : dim_(dim) {}

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] bool empty() const { return terms_.empty(); }
  [[nodiscard]] const std::map<UExponents, NumMultivector>& terms() const { return terms_; }

  void add_term(const UExponents& e, const NumMultivector& c);

  NumUPoly& operator+=(const NumUPoly& o);
  NumUPoly& operator-=(const NumUPoly& o);
  friend NumUPoly operator+(NumUPoly a, const NumUPoly& b) { return a += b; }
  friend NumUPoly operator-(NumUPoly a, const NumUPoly& b) { return a -= b; }
  [[nodiscard]] NumUPoly scaled(double s) const;

  [[nodiscard]] NumUPoly left_mul(const NumMultivector& c) const;
  [[nodiscard]] NumUPoly right_mul(const NumMultivector& c) const;
  friend NumUPoly mul(const NumUPoly& a, const NumUPoly& b);

  /// Left multiplication by the Clifford vector u = Σ_j u_j e_j.
  [[nodiscard]] NumUPoly left_mul_u_vector() const;

  [[nodiscard]] NumUPoly partial_u(int j) const;  // 1-based
  /// Multiplication by the scalar variable u_j.
  [[nodiscard]] NumUPoly times_u(int j) const;
  /// Multiplication by |u|² = Σ_j u_j².
  [[nodiscard]] NumUPoly times_norm_u2() const;
  /// Dirac operator in u, Σ_j e_j ∂_{u_j}, acting from the left.
  [[nodiscard]] NumUPoly dirac_u() const;
  [[nodiscard]] NumUPoly laplacian_u() const;

  /// P_k⁺ = I + u D_u/(m+2k−2) and P_k⁻ = −u D_u/(m+2k−2).
  [[nodiscard]] NumUPoly project_plus(int k) const;
  [[nodiscard]] NumUPoly project_minus(int k) const;

  [[nodiscard]] NumMultivector eval(const std::vector<double>& u) const;
  [[nodiscard]] double max_abs() const;

 private:
  int dim_;
  std::map<UExponents, NumMultivector> terms_;
};

/// Clifford conjugation of a numeric multivector.
[[nodiscard]] NumMultivector num_conjugate(const NumMultivector& a);
[[nodiscard]] NumMultivector num_vector(const std::vector<double>& coords);

/// Evaluates the x and v families numerically at a point, leaving u
/// symbolic.
[[nodiscard]] NumUPoly evaluate_xv(const CliffPoly& p, const std::vector<double>& x,
                                   const std::vector<double>& v);

// --- Second-order forward-mode jets -----------------------------------------

/// Value, gradient, and Hessian in x of a NumUPoly-valued quantity at a
/// fixed base point; products propagate derivatives exactly (to rounding),
/// preserving Clifford factor order.
struct Jet2 {
  int m = 0;
  NumUPoly value;
  std::vector<NumUPoly> grad;                // m entries
  std::vector<std::vector<NumUPoly>> hess;   // m x m, symmetric

  explicit Jet2(int dim);

  Jet2& operator+=(const Jet2& o);
  friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
  [[nodiscard]] Jet2 scaled(double s) const;
  [[nodiscard]] Jet2 left_mul_u_vector() const;
  [[nodiscard]] Jet2 right_mul(const NumMultivector& c) const;
  friend Jet2 mul(const Jet2& a, const Jet2& b);
};

/// Jet of a quantity constant in x.
[[nodiscard]] Jet2 jet_constant(int m, const NumUPoly& value);
/// Jet of the coordinate x_j (1-based) at base point x.
[[nodiscard]] Jet2 jet_coordinate(const std::vector<double>& x, int j);
/// Jet of the Clifford vector Σ_j x_j e_j at base point x.
[[nodiscard]] Jet2 jet_x_vector(const std::vector<double>& x);
/// Jet of |x|^p (any real exponent) at base point x != 0.
[[nodiscard]] Jet2 jet_norm_power(const std::vector<double>& x, double p);

// --- Fundamental solutions ---------------------------------------------------

enum class FundamentalKind { RaritaSchwinger, Remaining, Bosonic };  // E_k, F_k, H_k

/// The constant (m−2)/(m+2k−2).
[[nodiscard]] double fundamental_a_constant(int m, int k);
/// The constant (m+2k−4)Γ(m/2−1)/(4(4−m)π^{m/2}); undefined at m == 4.
[[nodiscard]] double fundamental_c_constant(int m, int k);

/// Value of the fundamental solution at numeric (x, v), as a degree-k
/// polynomial in u with double Clifford coefficients.  Throws for x == 0 or
/// (Bosonic, m == 4).
[[nodiscard]] NumUPoly eval_fundamental(FundamentalKind kind, int m, int k,
                                        const std::vector<double>& x,
                                        const std::vector<double>& v);

/// Full second-order jet of the fundamental solution (internal to the
/// residual computation but exposed for testing).
[[nodiscard]] Jet2 fundamental_jet(FundamentalKind kind, int m, int k,
                                   const std::vector<double>& x,
                                   const std::vector<double>& v);

/// Relative residual of the annihilation identity (R_k E_k, Q_k F_k, or
/// D_k H_k) at the point: max coefficient of the operator output over the
/// max coefficient of the solution value.
[[nodiscard]] double annihilation_residual(FundamentalKind kind, int m, int k,
                                           const std::vector<double>& x,
                                           const std::vector<double>& v);

// --- Quadrature and the Borel-Pompeiu probe ---------------------------------

struct QuadratureNode {
  std::vector<double> point;
  double weight = 0.0;
};

/// Product quadrature on S^{m−1}: Gauss-Legendre or second-kind Chebyshev in
/// each polar angle cosine (matching the parity of the sin-power weight) and
/// a uniform azimuthal rule.  Exact for polynomials up to the rule degree.
[[nodiscard]] std::vector<QuadratureNode> sphere_quadrature(int m, int order);

/// Experimental two-sided reconstruction of f(y, v) from the candidate
/// kernel matrix diag(E_k, F_k).  `residual` uses the sign combination under
/// which the classical k = 0 case reconstructs; `residual_displayed` keeps
/// the opposite relative sign between boundary and volume terms.
struct ProbeResult {
  NumMultivector reconstructed;
  NumMultivector reference;
  double residual = 0.0;
  double residual_displayed = 0.0;
};

/// k = 0 probe: classical Borel-Pompeiu reduction with the Cauchy kernel.
[[nodiscard]] ProbeResult borel_pompeiu_probe_classical(const CliffPoly& f,
                                                        const std::vector<double>& y,
                                                        int order);

/// k >= 1 probe with the diag(E_k, F_k) candidate assembly.
[[nodiscard]] ProbeResult borel_pompeiu_probe(const HPair& f, const SpinContext& ctx,
                                              const std::vector<double>& y,
                                              const std::vector<double>& v, int order);

}  // namespace hsca
