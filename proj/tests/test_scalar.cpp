#include <doctest.h>

#include <random>

#include "kslogic/error.hpp"
#include "kslogic/scalar.hpp"
#include "support.hpp"

using namespace kslogic;

TEST_SUITE("scalar") {

TEST_CASE("rational canonical form") {
  const Rational r(6, -8);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 4);
  CHECK(r == Rational(-3, 4));
  CHECK(r.str() == "-3/4");
  CHECK(Rational(4, 2).str() == "2");
  CHECK_THROWS_AS(Rational(1, 0), InvalidOperand);
}

TEST_CASE("arith examples") {
  const GaussianRational I = GaussianRational::i();
  CHECK(arith(1 + I, 1 - I, ArithOp::Mul) == GaussianRational(2));
  CHECK(arith(Rational(1, 2), Rational(1, 2), ArithOp::Add) == GaussianRational(1));
  CHECK_THROWS_AS(arith(1, 0, ArithOp::Div), InvalidOperand);
  CHECK(arith(1, I, ArithOp::Div) == -I);
  CHECK(arith(3, I, ArithOp::Sub) == GaussianRational(3, -1));
}

TEST_CASE("conjugate examples") {
  const GaussianRational I = GaussianRational::i();
  CHECK(conjugate(I) == -I);
  CHECK(conjugate(Rational(3, 4)) == GaussianRational(Rational(3, 4)));
  CHECK(conjugate(GaussianRational(Rational(1, 4), Rational(-1, 4))) == GaussianRational(Rational(1, 4), Rational(1, 4)));
}

TEST_CASE("text encoding") {
  CHECK(GaussianRational(Rational(1, 4), Rational(-1, 4)).str() == "1/4-1/4i");
  CHECK(GaussianRational(0).str() == "0");
  CHECK(GaussianRational::i().str() == "1i");
  CHECK(GaussianRational(Rational(-1, 2), Rational(3)).str() == "-1/2+3i");
  CHECK(GaussianRational(Rational(0), Rational(-1, 4)).str() == "-1/4i");

  for (const char* s : {"0", "1", "-7", "1/4", "-3/4", "1i", "-1i", "1/4-1/4i", "-1/2+3i", "5/3i", "-2+1/7i"}) {
    CAPTURE(s);
    CHECK(GaussianRational::parse(s).str() == s);
  }
  // Accepted but not canonical; printing normalizes.
  CHECK(GaussianRational::parse("2/4").str() == "1/2");
  CHECK(GaussianRational::parse("1+0i").str() == "1");

  for (const char* s : {"", "i", "-i", "+1", "+1i", "1 /2", " 1", "1/0", "1/", "/2", "1+i", "1+-2i", "1.5", "1e3", "1ii"}) {
    CAPTURE(s);
    CHECK_THROWS_AS(GaussianRational::parse(s), ParseError);
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(20261019);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = testing::random_scalar(rng);
    const auto b = testing::random_scalar(rng);
    const auto c = testing::random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == GaussianRational(0));
    if (!a.is_zero()) CHECK(a * (GaussianRational(1) / a) == GaussianRational(1));
    CHECK(conjugate(conjugate(a)) == a);
    CHECK(conjugate(a * b) == conjugate(a) * conjugate(b));
    // Equality is equality of canonical text.
    CHECK((a == b) == (a.str() == b.str()));
    CHECK(GaussianRational::parse(a.str()) == a);
  }
}

TEST_CASE("big integers do not overflow") {
  Rational r(1);
  for (int k = 0; k < 100; ++k) r *= Rational(1, 3);
  CHECK(r.denominator() > mpz_class("1000000000000000000000000000000000000000"));
  CHECK(Rational::parse(r.str()) == r);
}

}  // TEST_SUITE
