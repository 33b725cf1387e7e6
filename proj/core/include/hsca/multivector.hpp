#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hsca/scalar.hpp"

namespace hsca {

/// Basis blades of Cl_m are indexed by subsets of {1..m}: bit j-1 <=> e_j.
using BladeMask = std::uint16_t;

constexpr int kMaxDim = 8;

[[nodiscard]] int blade_grade(BladeMask blade);

/// Sign (+1/-1) of the product e_A · e_B under e_i² = −1; the resulting
/// blade is A xor B.  Computed by counting the transpositions that merge the
/// two ascending index lists plus one metric factor per shared index.
[[nodiscard]] int blade_product_sign(BladeMask a, BladeMask b);

/// Sign of the Clifford conjugation bar(e_A) = (−1)^{g(g+1)/2} e_A.
[[nodiscard]] int conjugation_sign(int grade);

/// Element of the real Clifford algebra Cl_m with e_i e_j + e_j e_i = −2δ_ij.
///
/// Stored sparsely as blade -> coefficient with no explicit zeros; the term
/// list is kept sorted by blade mask so equal values compare equal
/// structurally.  Immutable-in-spirit: all operations return new values.
class Multivector {
 public:
  explicit Multivector(int dim);
  Multivector(int dim, BladeMask blade, ExactScalar coeff);

  static Multivector scalar(int dim, ExactScalar value);
  static Multivector basis_vector(int dim, int j);  // e_j, 1-based
  static Multivector from_vector(const std::vector<ExactScalar>& coords);

  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const std::vector<std::pair<BladeMask, ExactScalar>>& terms() const {
    return terms_;
  }

  [[nodiscard]] ExactScalar coefficient(BladeMask blade) const;
  [[nodiscard]] ExactScalar scalar_part() const { return coefficient(0); }

  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  [[nodiscard]] Multivector operator-() const;

  [[nodiscard]] Multivector scaled(const ExactScalar& s) const;

  friend bool operator==(const Multivector& a, const Multivector& b);
  friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

  /// True when every term has the given grade (the zero element has any grade).
  [[nodiscard]] bool is_homogeneous_grade(int grade) const;

  [[nodiscard]] std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Multivector& a);

  void add_term(BladeMask blade, const ExactScalar& coeff);

 private:
  int dim_;
  std::vector<std::pair<BladeMask, ExactScalar>> terms_;  // sorted by mask
};

[[nodiscard]] Multivector geometric_product(const Multivector& a, const Multivector& b);
[[nodiscard]] Multivector clifford_conjugate(const Multivector& a);
[[nodiscard]] Multivector grade_project(const Multivector& a, int grade);

/// Vector in R^m with exact coordinates; embeds as Σ x_j e_j.
struct VectorM {
  std::vector<ExactScalar> coords;

  [[nodiscard]] int dim() const { return static_cast<int>(coords.size()); }
  [[nodiscard]] Multivector to_multivector() const;
  /// |x|² = Σ x_j², equal to minus the geometric square.
  [[nodiscard]] ExactScalar norm_squared() const;
};

/// Reflection of x across the hyperplane perpendicular to the unit vector a,
/// computed as the geometric product a·x·a.  Throws unless |a|² == 1 exactly.
[[nodiscard]] VectorM reflect(const VectorM& a, const VectorM& x);

}  // namespace hsca
