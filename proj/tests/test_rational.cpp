#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "hsca/rational.hpp"
#include "hsca/scalar.hpp"

using hsca::ExactScalar;
using hsca::Rational;

namespace {

// Small deterministic generator for the oracle sweep.
std::uint64_t splitmix(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

TEST_CASE("basic rational arithmetic is canonical") {
  const Rational a(1, 3);
  const Rational b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - a == Rational(0));
  CHECK((a * b).to_string() == "1/18");
  CHECK(Rational(4, 8) == Rational(1, 2));
  CHECK(Rational(-3, -9) == Rational(1, 3));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(7).is_integer());
  CHECK(Rational(1, 2) < Rational(2, 3));
  CHECK(Rational(5, 7).reciprocal() == Rational(7, 5));
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational(1, 2) / Rational(0));
}

TEST_CASE("values outside int64 promote without losing exactness") {
  const Rational big(1000000007LL, 3);
  Rational acc(1);
  for (int i = 0; i < 8; ++i) acc *= big;  // numerator ~1e72
  Rational back = acc;
  for (int i = 0; i < 8; ++i) back /= big;
  CHECK(back == Rational(1));
  CHECK(acc.to_mpq() == [&] {
    mpq_class q(1);
    for (int i = 0; i < 8; ++i) q *= mpq_class(1000000007L, 3);
    q.canonicalize();
    return q;
  }());
}

TEST_CASE("random operation sweep agrees with the GMP oracle") {
  std::uint64_t state = 12345;
  Rational value(0);
  mpq_class oracle(0);
  for (int step = 0; step < 2000; ++step) {
    const long num = static_cast<long>(splitmix(state) % 2001) - 1000;
    const long den = static_cast<long>(splitmix(state) % 50) + 1;
    const Rational operand(num, den);
    mpq_class q_operand(num);
    q_operand /= den;
    switch (splitmix(state) % 3) {
      case 0:
        value += operand;
        oracle += q_operand;
        break;
      case 1:
        value -= operand;
        oracle -= q_operand;
        break;
      default:
        value *= operand;
        oracle *= q_operand;
        break;
    }
    oracle.canonicalize();
  }
  CHECK(value.to_mpq() == oracle);
}

TEST_CASE("string round trip is canonical") {
  for (const char* text : {"0", "7", "-7", "22/7", "-355/113"}) {
    const Rational r = Rational::from_string(text);
    CHECK(r.to_string() == text);
  }
  CHECK(Rational::from_string("4/8") == Rational(1, 2));
  CHECK_THROWS(Rational::from_string("one half"));
}

TEST_CASE("quadratic extension scalars reduce the radicand") {
  const ExactScalar root8 = ExactScalar::sqrt_int(8);  // 2√2
  CHECK(root8.radicand() == 2);
  CHECK(root8.radical_part() == Rational(2));
  CHECK(ExactScalar::sqrt_int(9) == ExactScalar(3));  // perfect square folds in
  CHECK(ExactScalar::sqrt_int(1) == ExactScalar(1));

  const ExactScalar root2 = ExactScalar::sqrt_int(2);
  CHECK(root2 * root2 == ExactScalar(2));
  CHECK(root8 == root2 * ExactScalar(2));
}

TEST_CASE("quadratic extension field operations") {
  const ExactScalar root5 = ExactScalar::sqrt_int(5);
  const ExactScalar x = ExactScalar(Rational(1, 2)) + root5;  // 1/2 + √5
  const ExactScalar inv = x.reciprocal();
  CHECK(x * inv == ExactScalar(1));
  CHECK((x - x).is_zero());
  CHECK((root5 - root5).is_rational());

  // 2/√12 = (1/3)√3
  const ExactScalar w(Rational(0), Rational(2, 12), 12);
  CHECK(w.radicand() == 3);
  CHECK(w.radical_part() == Rational(1, 3));
  CHECK(w.to_double() == doctest::Approx(2.0 / std::sqrt(12.0)));

  // mixing distinct radicands is a logic error
  CHECK_THROWS_AS((void)(root5 * ExactScalar::sqrt_int(3)), std::logic_error);
  // but rational values combine with anything
  CHECK(ExactScalar(2) * root5 == ExactScalar(Rational(0), Rational(2), 5));
}
