#pragma once

#include <optional>
#include <vector>

#include "hsca/rational.hpp"

namespace hsca {

using RationalMatrix = std::vector<std::vector<Rational>>;
using RationalVector = std::vector<Rational>;

/// Basis of the (right) nullspace {v : A v = 0}, computed exactly by
/// fraction-free (Bareiss) elimination on the integer-scaled rows.  The basis
/// is canonical: one vector per free column in ascending column order, with
/// that free coordinate set to 1.
[[nodiscard]] std::vector<RationalVector> nullspace(const RationalMatrix& a);

[[nodiscard]] int rank(const RationalMatrix& a);

/// Solves A x = b; empty when the system is inconsistent (A need not be
/// square; a particular solution with free variables at zero is returned).
[[nodiscard]] std::optional<RationalVector> solve(const RationalMatrix& a,
                                                  const RationalVector& b);

/// Inverse of a square matrix; empty when singular.
[[nodiscard]] std::optional<RationalMatrix> invert(const RationalMatrix& a);

}  // namespace hsca
