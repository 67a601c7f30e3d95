#include <gtest/gtest.h>

#include "fockrep/numerics.hpp"

using namespace fockrep;

namespace {

// Independent reference: product of (a - i) over i in [0, b) with plain int64.
std::int64_t naive_falling(std::int64_t a, std::int64_t b) {
  if (b < 0) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < b; ++i) r *= a - i;
  return r;
}

}  // namespace

TEST(Scalar, ParsesAndPrintsCanonically) {
  EXPECT_EQ(Scalar::parse("6/4").str(), "3/2");
  EXPECT_EQ(Scalar::parse("-0/7").str(), "0");
  EXPECT_EQ(Scalar::parse("+5").str(), "5");
  EXPECT_EQ(Scalar::parse("4/-2").str(), "-2");
  EXPECT_EQ(Scalar(3, -6).str(), "-1/2");
  EXPECT_THROW(Scalar::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Scalar::parse("abc"), std::invalid_argument);
  EXPECT_THROW(Scalar::parse(""), std::invalid_argument);
}

TEST(Scalar, ArithmeticIsExact) {
  Scalar third(1, 3);
  EXPECT_EQ(third + third + third, Scalar(1));
  EXPECT_EQ(Scalar(2, 3) * Scalar(3, 4), Scalar(1, 2));
  EXPECT_EQ(pow(Scalar(3, 2), -2), Scalar(4, 9));
  EXPECT_EQ(pow(Scalar(-1), 7), Scalar(-1));
  EXPECT_EQ(pow(Scalar(5), 0), Scalar(1));
  EXPECT_TRUE((Scalar(7) / Scalar(7)).is_integer());
  EXPECT_THROW(pow(Scalar(0), -1), std::domain_error);
}

TEST(FallingFactorial, ReferenceValues) {
  EXPECT_EQ(falling_factorial(Integer(5), 2), 20);
  EXPECT_EQ(falling_factorial(Integer(3), 0), 1);
  EXPECT_EQ(falling_factorial(Integer(7), -1), 0);
}

TEST(FallingFactorial, MatchesNaiveProduct) {
  for (std::int64_t a = -8; a <= 8; ++a)
    for (std::int64_t b = -2; b <= 8; ++b) EXPECT_EQ(falling_factorial(Integer(a), b), naive_falling(a, b)) << a << "," << b;
}

TEST(FallingFactorial, LargeValuesStayExact) {
  // 40! overflows 64 bits; compare against the quotient of factorials.
  EXPECT_EQ(falling_factorial(Integer(40), 40), factorial(40));
  EXPECT_EQ(falling_factorial(Integer(60), 20) * factorial(40), factorial(60));
}

TEST(Binomial, ReferenceValues) {
  EXPECT_EQ(binomial(Integer(4), 2), Scalar(6));
  EXPECT_EQ(binomial(Integer(-1), 2), Scalar(1));
  EXPECT_EQ(binomial(Integer(3), 5), Scalar(0));
  EXPECT_EQ(binomial(Integer(3), -1), Scalar(0));
}

TEST(Binomial, PascalRuleForNegativeTops) {
  for (std::int64_t a = -10; a <= 10; ++a)
    for (std::int64_t b = 1; b <= 10; ++b)
      EXPECT_EQ(binomial(Integer(a), b), binomial(Integer(a - 1), b) + binomial(Integer(a - 1), b - 1));
}

TEST(AppendixLemma, ReferenceValues) {
  EXPECT_EQ(appendix_lemma_lhs_i(3, 1, 1), -4);
  EXPECT_EQ(appendix_lemma_lhs_i(0, 2, 2), 0);
  EXPECT_EQ(appendix_lemma_lhs_i(2, 0, 0), 2);
  EXPECT_EQ(appendix_lemma_rhs_i(3, 1, 1), -4);
  EXPECT_EQ(appendix_lemma_rhs_i(0, 2, 2), 0);
  EXPECT_EQ(appendix_lemma_rhs_i(2, 0, 0), 2);
}

TEST(AppendixLemma, SecondPartSmallCases) {
  // m=3, l=1, s=1: sum over b=-3..-1 of (b+3)(b) = 0*(-3) + 1*(-2) + 2*(-1) = -4.
  EXPECT_EQ(appendix_lemma_lhs_ii(3, 1, 1), -4);
  EXPECT_EQ(appendix_lemma_rhs_ii(3, 1, 1), -4);
  EXPECT_EQ(appendix_lemma_lhs_ii(2, 0, 0), 2);
}

TEST(AppendixLemma, BothPartsOnFullRange) {
  for (std::int64_t m = 0; m <= 10; ++m)
    for (std::int64_t l = 0; l <= 10; ++l)
      for (std::int64_t s = 0; s <= 10; ++s) {
        ASSERT_EQ(appendix_lemma_lhs_i(m, l, s), appendix_lemma_rhs_i(m, l, s)) << m << " " << l << " " << s;
        ASSERT_EQ(appendix_lemma_lhs_ii(m, l, s), appendix_lemma_rhs_ii(m, l, s)) << m << " " << l << " " << s;
      }
}
