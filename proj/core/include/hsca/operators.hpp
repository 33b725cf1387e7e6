#pragma once

#include "hsca/poly.hpp"
#include "hsca/spaces.hpp"

namespace hsca {

/// Parameter pair (m, k) for the spin-k operators on R^m.  The second-order
/// operators divide by m+2k−2 and m+2k−4, so only m >= 3 with m+2k−4 >= 1
/// is admitted.
struct SpinContext {
  int m = 0;
  int k = 0;

  [[nodiscard]] int n() const { return m + 2 * k; }

  friend bool operator==(const SpinContext&, const SpinContext&) = default;
};

[[nodiscard]] bool supported_context(int m, int k);
void require_supported(const SpinContext& ctx);

/// Validated field: polynomial in (x, u), u-homogeneous of degree k and
/// harmonic in u pointwise in x.
struct HField {
  CliffPoly poly;
  int m = 0;
  int k = 0;

  HField(CliffPoly p, int m_, int k_);
};

/// Whether p is u-homogeneous of degree k with Δ_u p == 0 (exact).
[[nodiscard]] bool is_h_field(const CliffPoly& p, int k);

// --- Rarita-Schwinger-type operators (first order) ------------------------

/// R_k = P_k⁺ D_x on M_k-valued fields.  Throws when D_u f != 0.
[[nodiscard]] CliffPoly rarita_schwinger(const CliffPoly& f, const SpinContext& ctx);
/// T_k = P_k⁺ D_x on u·M_{k−1}-valued fields.
[[nodiscard]] CliffPoly twistor(const CliffPoly& f, const SpinContext& ctx);
/// T_k* = P_k⁻ D_x on M_k-valued fields.
[[nodiscard]] CliffPoly dual_twistor(const CliffPoly& f, const SpinContext& ctx);
/// Q_k = P_k⁻ D_x on u·M_{k−1}-valued fields.
[[nodiscard]] CliffPoly remaining_operator(const CliffPoly& f, const SpinContext& ctx);

// --- Bosonic Laplacian (second order) --------------------------------------

/// Direct form: Δ_x − 4⟨u,∇_x⟩⟨∇_u,∇_x⟩/(m+2k−2)
///            + 4|u|²⟨∇_u,∇_x⟩²/((m+2k−2)(m+2k−4)).
[[nodiscard]] CliffPoly bosonic_laplacian_direct(const CliffPoly& f, const SpinContext& ctx);

enum class CompositionLine { First, Second };

/// The same operator written through the four Rarita-Schwinger-type
/// compositions (either displayed line).
[[nodiscard]] CliffPoly bosonic_laplacian_composed(const CliffPoly& f, const SpinContext& ctx,
                                                   CompositionLine line);

/// Convenience: evaluates both composition lines, throws logic_error if they
/// disagree, and returns the common value.
[[nodiscard]] CliffPoly bosonic_laplacian_rs(const CliffPoly& f, const SpinContext& ctx);

// --- Matrix forms on Almansi-Fischer pairs ---------------------------------

/// First-order matrix operator (coefficients in Q(√((m+2k)(m+2k−4)))):
///   [ −R_k P⁺              2 T_k* P⁺ / √((m+2k)(m+2k−4)) ]
///   [ 2 T_k P⁻ / (m+2k−4)  √((m+2k)/(m+2k−4)) Q_k P⁻     ]
[[nodiscard]] HPair matrix_dirac_apply(const HPair& f, const SpinContext& ctx);
/// The transposed matrix.
[[nodiscard]] HPair matrix_dirac_transpose_apply(const HPair& f, const SpinContext& ctx);

/// Second-order matrix operator:
///   [ R_k² P⁺                −2 R_k T_k P⁻ / (m+2k−4)    ]
///   [ 2 Q_k T_k* P⁺/(m+2k−4)  (m+2k)/(m+2k−4) Q_k² P⁻   ]
/// Recombining the output components gives the NEGATIVE of the direct form.
[[nodiscard]] HPair matrix_laplacian_apply(const HPair& f, const SpinContext& ctx);

// --- Stokes pairing on the unit ball ---------------------------------------

/// Both sides of the first-order Stokes identity on Ω = unit ball, as exact
/// coefficients of ω_m².  The boundary side pairs with
/// dσ_x = diag(1, −√((m+2k)/(m+2k−4))) n(x) dσ(x), n(x) = x; the volume side
/// is ∫∫ (bar(D₁f))ᵀ g − ∫∫ bar(f)ᵀ (D₁g) (the relative minus sign is what
/// the exact identity requires).
struct StokesSides {
  Multivector boundary;
  Multivector volume;
};

[[nodiscard]] StokesSides stokes_pairing(const HPair& f, const HPair& g,
                                         const SpinContext& ctx);

/// Constant term of a fully integrated polynomial; throws if any variable
/// survives.
[[nodiscard]] Multivector constant_coefficient(const CliffPoly& p);

}  // namespace hsca
