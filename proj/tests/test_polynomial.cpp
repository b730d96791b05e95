#include "hbraid/polynomial.hpp"

#include <gtest/gtest.h>

using namespace hbraid;

namespace {
const Polynomial a = Polynomial::variable(0);
const Polynomial b = Polynomial::variable(1);
const std::vector<std::string> names{"a", "b"};
}  // namespace

TEST(Polynomial, RingOperations) {
  EXPECT_EQ((a + b) * (a - b), a * a - b * b);
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ((a * Polynomial(0)), Polynomial());
  EXPECT_EQ(((a + b) * (a + b)).to_string(names), "a^2 + 2*a*b + b^2");
  EXPECT_EQ((Polynomial(3) - a).to_string(names), "-a + 3");
}

TEST(Polynomial, SubstituteAndEvaluate) {
  Polynomial p = a * a * b + Polynomial(2) * a;
  Polynomial q = p.substitute(0, b + Polynomial(1));
  EXPECT_EQ(q, (b + Polynomial(1)) * (b + Polynomial(1)) * b + Polynomial(2) * (b + Polynomial(1)));
  std::vector<Rational> at{Rational(3), Rational(-2)};
  EXPECT_EQ(p.evaluate(at), Rational(-18 + 6));
}

TEST(Polynomial, Binomial) {
  Polynomial c = binom2(a);
  EXPECT_FALSE(c.has_integer_coefficients());
  for (int m = -5; m <= 5; ++m) {
    std::vector<Rational> at{Rational(m)};
    EXPECT_EQ(c.evaluate(at), Rational(binom2(Integer(m))));
  }
}

TEST(Polynomial, Divisibility) {
  Polynomial p = Polynomial(3) * (b * b + Polynomial(2) * b) + Polynomial(1);
  EXPECT_TRUE((p - Polynomial(1)).coefficients_divisible_by(3));
  EXPECT_FALSE(p.coefficients_divisible_by(3));
  EXPECT_FALSE(binom2(a).coefficients_divisible_by(1));
}
