#include "hsca/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace hsca {

namespace {

constexpr long long kMax = std::numeric_limits<long long>::max();

unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    const unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

unsigned __int128 uabs128(__int128 v) {
  return v < 0 ? static_cast<unsigned __int128>(-(v + 1)) + 1
               : static_cast<unsigned __int128>(v);
}

mpz_class mpz_from_int128(__int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = uabs128(v);
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  mpz_class lo(static_cast<unsigned long>(u & ~0ULL));
  mpz_class out = (hi << 64) + lo;
  return neg ? mpz_class(-out) : out;
}

}  // namespace

struct RationalOps {
  static bool small(const Rational& r) { return !r.big_; }
  static long long num(const Rational& r) { return r.num_; }
  static long long den(const Rational& r) { return r.den_; }
  static const mpq_class& big(const Rational& r) { return *r.big_; }
};

Rational Rational::from_int128(__int128 num, __int128 den) {
  if (den == 0) throw std::domain_error("Rational: division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rational();
  const unsigned __int128 g = gcd128(uabs128(num), uabs128(den));
  num /= static_cast<__int128>(g);
  den /= static_cast<__int128>(g);
  if (uabs128(num) <= static_cast<unsigned __int128>(kMax) &&
      uabs128(den) <= static_cast<unsigned __int128>(kMax)) {
    Rational r;
    r.num_ = static_cast<long long>(num);
    r.den_ = static_cast<long long>(den);
    return r;
  }
  mpq_class q(mpz_from_int128(num), mpz_from_int128(den));
  q.canonicalize();
  return from_mpq(std::move(q));
}

Rational Rational::from_mpq(mpq_class q) {
  q.canonicalize();
  Rational r;
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    r.num_ = q.get_num().get_si();
    r.den_ = q.get_den().get_si();
  } else {
    r.num_ = 0;
    r.den_ = 1;
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
  }
  return r;
}

Rational::Rational(long long num, long long den) : num_(0), den_(1) {
  *this = from_int128(num, den);
}

Rational::Rational(const mpq_class& q) : num_(0), den_(1) { *this = from_mpq(q); }

Rational Rational::from_string(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) {
    throw std::invalid_argument("Rational: cannot parse '" + text + "'");
  }
  q.canonicalize();
  return from_mpq(std::move(q));
}

bool Rational::is_one() const { return big_ ? (*big_ == 1) : (num_ == 1 && den_ == 1); }

bool Rational::is_integer() const { return big_ ? (big_->get_den() == 1) : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

Rational Rational::operator-() const {
  if (!big_) return from_int128(-static_cast<__int128>(num_), den_);
  return from_mpq(mpq_class(-*big_));
}

Rational& Rational::operator+=(const Rational& o) {
  if (!big_ && !o.big_) {
    const __int128 n = static_cast<__int128>(num_) * o.den_ +
                       static_cast<__int128>(o.num_) * den_;
    *this = from_int128(n, static_cast<__int128>(den_) * o.den_);
  } else {
    *this = from_mpq(to_mpq() + o.to_mpq());
  }
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (!big_ && !o.big_) {
    const __int128 n = static_cast<__int128>(num_) * o.den_ -
                       static_cast<__int128>(o.num_) * den_;
    *this = from_int128(n, static_cast<__int128>(den_) * o.den_);
  } else {
    *this = from_mpq(to_mpq() - o.to_mpq());
  }
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  if (!big_ && !o.big_) {
    *this = from_int128(static_cast<__int128>(num_) * o.num_,
                        static_cast<__int128>(den_) * o.den_);
  } else {
    *this = from_mpq(to_mpq() * o.to_mpq());
  }
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  if (!big_ && !o.big_) {
    *this = from_int128(static_cast<__int128>(num_) * o.den_,
                        static_cast<__int128>(den_) * o.num_);
  } else {
    *this = from_mpq(to_mpq() / o.to_mpq());
  }
  return *this;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  return a.to_mpq() == b.to_mpq();
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    return static_cast<__int128>(a.num_) * b.den_ <
           static_cast<__int128>(b.num_) * a.den_;
  }
  return a.to_mpq() < b.to_mpq();
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
  if (!big_) return from_int128(den_, num_);
  return from_mpq(mpq_class(1) / *big_);
}

double Rational::to_double() const {
  if (!big_) return static_cast<double>(num_) / static_cast<double>(den_);
  return big_->get_d();
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_from_int128(num_), mpz_from_int128(den_));
  q.canonicalize();
  return q;
}

std::string Rational::to_string() const { return to_mpq().get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace hsca
