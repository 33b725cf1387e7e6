#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace hsca {

/// Exact rational number.
///
/// Values that fit into a reduced int64 numerator/denominator pair stay on a
/// fast inline path; anything larger is transparently promoted to a GMP
/// rational.  All arithmetic is exact, the representation is always canonical
/// (den > 0, gcd(num, den) == 1), and equality is decidable.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& q);

  /// Parses "p", "-p", or "p/q".  Throws std::invalid_argument on bad input.
  static Rational from_string(const std::string& text);

  [[nodiscard]] bool is_zero() const { return big_ ? sgn(*big_) == 0 : num_ == 0; }
  [[nodiscard]] bool is_one() const;
  [[nodiscard]] bool is_integer() const;
  [[nodiscard]] int sign() const;

  [[nodiscard]] Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  [[nodiscard]] Rational abs() const;
  [[nodiscard]] Rational reciprocal() const;

  [[nodiscard]] double to_double() const;
  [[nodiscard]] mpq_class to_mpq() const;
  /// Canonical text form, "p" or "p/q" with q > 1.
  [[nodiscard]] std::string to_string() const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  // Fast path: value = num_/den_ with den_ > 0 and gcd == 1, valid when
  // big_ is empty.  Slow path: value = *big_ (canonical mpq).
  long long num_;
  long long den_;
  std::shared_ptr<const mpq_class> big_;

  static Rational from_int128(__int128 num, __int128 den);
  static Rational from_mpq(mpq_class q);
  friend struct RationalOps;
};

}  // namespace hsca
