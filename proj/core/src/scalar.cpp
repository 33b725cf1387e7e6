#include "hsca/scalar.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace hsca {

namespace {

// Splits n = s^2 * r with r square-free; returns {s, r}.
std::pair<std::uint64_t, std::uint64_t> square_free_split(std::uint64_t n) {
  std::uint64_t s = 1, r = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    std::uint64_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (std::uint64_t i = 0; i + 1 < e; i += 2) s *= p;
    if (e % 2 == 1) r *= p;
  }
  r *= n;  // leftover prime
  return {s, r};
}

}  // namespace

ExactScalar::ExactScalar(Rational a, Rational b, std::uint64_t r)
    : a_(std::move(a)), b_(std::move(b)), r_(r) {
  if (r_ == 0) {
    b_ = Rational(0);
    r_ = 1;
  }
  normalize();
}

void ExactScalar::normalize() {
  if (b_.is_zero()) {
    r_ = 1;
    return;
  }
  const auto [s, r] = square_free_split(r_);
  if (r == 1) {  // radicand was a perfect square
    a_ += b_ * Rational(static_cast<long long>(s));
    b_ = Rational(0);
    r_ = 1;
    return;
  }
  b_ *= Rational(static_cast<long long>(s));
  r_ = r;
}

ExactScalar ExactScalar::sqrt_int(std::uint64_t n) {
  return ExactScalar(Rational(0), Rational(1), n);
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar out;
  out.a_ = -a_;
  out.b_ = -b_;
  out.r_ = r_;
  return out;
}

namespace {
[[noreturn]] void mixed_radicand(std::uint64_t r1, std::uint64_t r2) {
  throw std::logic_error("ExactScalar: mixing radicands " + std::to_string(r1) +
                         " and " + std::to_string(r2));
}
}  // namespace

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  a_ += o.a_;
  if (o.b_.is_zero()) return *this;
  if (b_.is_zero()) {
    b_ = o.b_;
    r_ = o.r_;
    return *this;
  }
  if (r_ != o.r_) mixed_radicand(r_, o.r_);
  b_ += o.b_;
  if (b_.is_zero()) r_ = 1;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) { return *this += -o; }

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  // (a1 + b1√r)(a2 + b2√r) = a1a2 + b1b2r + (a1b2 + b1a2)√r
  if (b_.is_zero() && o.b_.is_zero()) {
    a_ *= o.a_;
    return *this;
  }
  std::uint64_t r = r_;
  if (!b_.is_zero() && !o.b_.is_zero()) {
    if (r_ != o.r_) mixed_radicand(r_, o.r_);
  } else if (b_.is_zero()) {
    r = o.r_;
  }
  const Rational rr(static_cast<long long>(r));
  Rational na = a_ * o.a_ + b_ * o.b_ * rr;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  r_ = b_.is_zero() ? 1 : r;
  return *this;
}

ExactScalar ExactScalar::reciprocal() const {
  if (is_zero()) throw std::domain_error("ExactScalar: reciprocal of zero");
  if (b_.is_zero()) {
    ExactScalar out;
    out.a_ = a_.reciprocal();
    return out;
  }
  // 1/(a + b√r) = (a − b√r) / (a² − b²r)
  const Rational norm = a_ * a_ - b_ * b_ * Rational(static_cast<long long>(r_));
  if (norm.is_zero()) {
    // impossible for square-free r > 1 with rational a, b not both zero
    throw std::logic_error("ExactScalar: degenerate norm");
  }
  ExactScalar out;
  out.a_ = a_ / norm;
  out.b_ = -b_ / norm;
  out.r_ = r_;
  return out;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) { return *this *= o.reciprocal(); }

bool operator==(const ExactScalar& x, const ExactScalar& y) {
  return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_.is_zero() || x.r_ == y.r_);
}

double ExactScalar::to_double() const {
  double v = a_.to_double();
  if (!b_.is_zero()) v += b_.to_double() * std::sqrt(static_cast<double>(r_));
  return v;
}

std::string ExactScalar::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  std::string out;
  if (!a_.is_zero()) out = a_.to_string() + (b_.sign() > 0 ? "+" : "");
  out += b_.to_string() + "*sqrt(" + std::to_string(r_) + ")";
  return out;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& s) {
  return os << s.to_string();
}

}  // namespace hsca
