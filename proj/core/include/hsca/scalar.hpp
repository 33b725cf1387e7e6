#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "hsca/rational.hpp"

namespace hsca {

/// Element of the real quadratic extension Q(√r), stored as a + b·√r.
///
/// r is a square-free nonnegative integer fixed per value; construction
/// reduces any square factor of r into b.  Pure rationals carry r == 1 so
/// that values from different contexts mix freely; combining two genuinely
/// irrational values requires matching radicands (this never happens in
/// practice, since each (m, k) context uses the single radicand
/// (m+2k)(m+2k−4)).
class ExactScalar {
 public:
  ExactScalar() : a_(0), b_(0), r_(1) {}
  ExactScalar(long long n) : a_(n), b_(0), r_(1) {}  // NOLINT
  ExactScalar(Rational a) : a_(std::move(a)), b_(0), r_(1) {}  // NOLINT
  ExactScalar(Rational a, Rational b, std::uint64_t r);

  /// √n as an exact scalar (square factor of n is pulled out).
  static ExactScalar sqrt_int(std::uint64_t n);

  [[nodiscard]] const Rational& rational_part() const { return a_; }
  [[nodiscard]] const Rational& radical_part() const { return b_; }
  [[nodiscard]] std::uint64_t radicand() const { return r_; }

  [[nodiscard]] bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  [[nodiscard]] bool is_rational() const { return b_.is_zero(); }

  [[nodiscard]] ExactScalar operator-() const;
  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar x, const ExactScalar& y) { return x += y; }
  friend ExactScalar operator-(ExactScalar x, const ExactScalar& y) { return x -= y; }
  friend ExactScalar operator*(ExactScalar x, const ExactScalar& y) { return x *= y; }
  friend ExactScalar operator/(ExactScalar x, const ExactScalar& y) { return x /= y; }

  friend bool operator==(const ExactScalar& x, const ExactScalar& y);
  friend bool operator!=(const ExactScalar& x, const ExactScalar& y) { return !(x == y); }

  [[nodiscard]] ExactScalar reciprocal() const;
  [[nodiscard]] double to_double() const;
  [[nodiscard]] std::string to_string() const;

  friend std::ostream& operator<<(std::ostream& os, const ExactScalar& s);

 private:
  Rational a_, b_;
  std::uint64_t r_;

  void normalize();
};

}  // namespace hsca
