#pragma once

#include <string>

#include "hsca/poly.hpp"

namespace hsca {

/// Serializes a polynomial to the interchange JSON format:
///   {"dim": m, "terms": [{"x": [...], "u": [...], "blade": [indices],
///                         "a": "p/q", "b": "p/q", "r": n}, ...]}
/// One entry per (monomial, blade) pair, coefficient a + b√r; a "v" exponent
/// array appears only when the term uses the second spin family.  Terms are
/// emitted in canonical order so the round trip is bit-exact.
[[nodiscard]] std::string poly_to_json(const CliffPoly& p);

[[nodiscard]] CliffPoly poly_from_json(const std::string& text);

}  // namespace hsca
