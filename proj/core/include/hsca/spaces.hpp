#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "hsca/linalg.hpp"
#include "hsca/poly.hpp"

namespace hsca {

enum class SpaceKind { Harmonic, Monogenic };

/// Ordered basis of H_k (scalar harmonic) or M_k (Clifford monogenic)
/// polynomials in u, with the Gram data of the spherical inner product
/// ∫_{S^{m−1}} bar(b_i) b_j dS (scalar parts, as exact coefficients of ω_m).
struct SpaceBasis {
  int m = 0;
  int k = 0;
  SpaceKind kind = SpaceKind::Harmonic;
  std::vector<CliffPoly> elems;

  [[nodiscard]] int size() const { return static_cast<int>(elems.size()); }
  /// Gram matrix, computed on first access (thread-safe).
  [[nodiscard]] const RationalMatrix& gram() const;

 private:
  mutable std::once_flag gram_once_;
  mutable RationalMatrix gram_;
};

/// dim of scalar-valued H_k: C(m+k−1, k) − C(m+k−3, k−2).
[[nodiscard]] long long harmonic_space_dim(int m, int k);
/// Rank of M_k as a right Cl_m-module: C(m+k−2, k).
[[nodiscard]] long long monogenic_space_rank(int m, int k);

/// Degree-k monomials in the first `vars` u-variables, in the deterministic
/// basis order (descending lexicographic exponent vectors).
[[nodiscard]] std::vector<Monomial> u_monomials(int m, int k, int vars);

/// Scalar-coefficient basis of H_k, from the exact nullspace of the Δ_u
/// constraint matrix on degree-k monomials.  Cached; safe for concurrent use.
[[nodiscard]] std::shared_ptr<const SpaceBasis> harmonic_basis(int m, int k);

/// Right-module basis of M_k, from an exact triangular solve of the D_u
/// constraint system (degree-by-degree in u_m).  Every element is verified
/// to satisfy D_u e = 0 and the count to match C(m+k−2, k).  Cached.
[[nodiscard]] std::shared_ptr<const SpaceBasis> monogenic_basis(int m, int k);

/// Projection P_k⁺ = I + u D_u/(m+2k−2) of a u-homogeneous harmonic
/// polynomial onto M_k.  Throws if the input is not u-harmonic.
[[nodiscard]] CliffPoly project_plus(const CliffPoly& h);

/// Projection P_k⁻ = −u D_u/(m+2k−2) onto u M_{k−1}.
[[nodiscard]] CliffPoly project_minus(const CliffPoly& h);

/// The Almansi–Fischer pair: f1 ∈ M_k, f2 ∈ u M_{k−1}, with f1 + f2 = h.
struct HPair {
  CliffPoly f1;
  CliffPoly f2;
};

[[nodiscard]] HPair almansi_split(const CliffPoly& h);

/// True when D_u f == 0 (f lies in the monogenic summand).
[[nodiscard]] bool in_monogenic_summand(const CliffPoly& f);
/// True when P⁺ f == 0 (f lies in the u·M_{k−1} summand).
[[nodiscard]] bool in_complement_summand(const CliffPoly& f);

namespace detail {
/// Projections without the harmonicity validation, for compositions whose
/// inputs are harmonic by construction.  k is the u-degree of p.
[[nodiscard]] CliffPoly project_plus_unchecked(const CliffPoly& p, int k);
[[nodiscard]] CliffPoly project_minus_unchecked(const CliffPoly& p, int k);
}  // namespace detail

}  // namespace hsca
