#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace gk;
using namespace gk::test;

TEST(Field, PrimeCharacteristicValidated) {
  EXPECT_THROW(PrimeField(4), std::invalid_argument);
  EXPECT_THROW(PrimeField(1), std::invalid_argument);
  EXPECT_NO_THROW(PrimeField(2));
  EXPECT_NO_THROW(PrimeField(2147483647u));
  EXPECT_EQ(PrimeField().characteristic(), 32003u);
  EXPECT_EQ(FieldSpec::prime(7).name(), "ZZ/7");
  EXPECT_EQ(FieldSpec::rationals().name(), "QQ");
}

TEST(Field, PrimeResiduesInRange) {
  PrimeField k(7);
  EXPECT_EQ(k.from_int(-1), 6u);
  EXPECT_EQ(k.parse("15"), 1u);
  EXPECT_EQ(k.parse("-3"), 4u);
  EXPECT_EQ(k.mul(k.parse("1/3"), 3u), 1u);
  EXPECT_THROW(k.inv(0), std::domain_error);
  for (std::uint32_t a = 1; a < 7; ++a) EXPECT_EQ(k.mul(a, k.inv(a)), 1u);
}

TEST(Field, RationalsCanonical) {
  RationalField q;
  auto a = q.parse("6/-4");
  EXPECT_EQ(a.get_num(), -3);
  EXPECT_EQ(a.get_den(), 2);
  EXPECT_THROW(q.parse("1/0"), std::domain_error);
  EXPECT_THROW(q.inv(q.zero()), std::domain_error);
  EXPECT_EQ(q.to_string(q.parse("10/4")), "5/2");
}

TEST(Monomial, CompareExamples) {
  MonomialOrder o3{3}, o2{2};
  EXPECT_EQ(monomial_compare({2, 1, 0}, {1, 2, 0}, o3), std::strong_ordering::greater);
  EXPECT_EQ(monomial_compare({1, 2, 0}, {1, 2, 0}, o3), std::strong_ordering::equal);
  EXPECT_EQ(monomial_compare({3, 0}, {2, 1}, o2), std::strong_ordering::greater);
  EXPECT_THROW(monomial_compare({1, 0}, {1, 0, 0}, o2), std::invalid_argument);
}

TEST(Monomial, ExponentOverflowIsHardError) {
  Monomial a = Monomial::variable(2, 0, kMaxExponent);
  EXPECT_THROW(a * Monomial::variable(2, 0), std::overflow_error);
  Monomial b(2);
  EXPECT_THROW(b.set(0, kMaxExponent + 1), std::overflow_error);
}

TEST(Monomial, DegrevlexExhaustiveOnSmallDegrees) {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<Monomial> all;
    for (std::uint32_t d = 0; d <= 6; ++d) {
      auto md = monomials_of_degree(n, d);
      for (const auto& m : md) EXPECT_EQ(m.degree(), d);
      all.insert(all.end(), md.begin(), md.end());
    }
    std::sort(all.begin(), all.end(), [](const Monomial& a, const Monomial& b) { return degrevlex(a, b) < 0; });
    // strictly increasing chain: total, antisymmetric, no duplicates
    for (std::size_t i = 0; i + 1 < all.size(); ++i) {
      EXPECT_TRUE(degrevlex(all[i], all[i + 1]) < 0);
      EXPECT_TRUE(degrevlex(all[i + 1], all[i]) > 0);
    }
    // 1 is the minimum (global order)
    EXPECT_TRUE(all.front().is_one());
    // multiplicativity on neighbouring pairs
    for (std::size_t i = 0; i + 1 < all.size(); i += 3)
      for (std::size_t v = 0; v < n; ++v) {
        auto x = Monomial::variable(n, v);
        EXPECT_TRUE(degrevlex(all[i] * x, all[i + 1] * x) < 0);
      }
  }
}

TEST(Polynomial, ArithmeticExamples) {
  auto S = ring({"x", "y"});
  EXPECT_EQ(S.add(P(S, "x+y"), P(S, "x-y")), P(S, "2*x"));
  auto R = make_quotient_ring(S, {P(S, "x*y")});
  EXPECT_TRUE(R.mul(R.variable(0), R.variable(1)).is_zero());
  auto F2 = ring({"x", "y"}, PrimeField(2));
  EXPECT_EQ(F2.mul(P(F2, "x+y"), P(F2, "x+y")), P(F2, "x^2+y^2"));
  EXPECT_EQ(S.format(P(S, "x^2 - 2*x*y + 3")), "x^2 - 2*x*y + 3");
}

TEST(Polynomial, HomogeneityExamples) {
  auto S = ring({"x", "y", "z"});
  auto h = homogeneity(P(S, "x*y - z^2"));
  EXPECT_TRUE(h.first);
  EXPECT_EQ(h.second, 2u);
  EXPECT_FALSE(homogeneity(P(S, "x + x^2")).first);
  auto z = homogeneity(S.zero());
  EXPECT_TRUE(z.first);
  EXPECT_FALSE(z.second.has_value());
}

template <class F>
void ring_axioms(F field, int trials) {
  std::mt19937_64 rng(1234);
  auto S = ring({"x", "y", "z"}, field);
  for (int t = 0; t < trials; ++t) {
    auto a = random_poly(rng, S, 3, 3);
    auto b = random_poly(rng, S, 3, 3);
    auto c = random_poly(rng, S, 3, 3);
    ASSERT_EQ(S.add(S.add(a, b), c), S.add(a, S.add(b, c)));
    ASSERT_EQ(S.add(a, b), S.add(b, a));
    ASSERT_EQ(S.mul(a, b), S.mul(b, a));
    ASSERT_EQ(S.mul(S.mul(a, b), c), S.mul(a, S.mul(b, c)));
    ASSERT_EQ(S.mul(a, S.add(b, c)), S.add(S.mul(a, b), S.mul(a, c)));
    ASSERT_TRUE(S.is_canonical(S.mul(a, b)));
    ASSERT_TRUE(S.sub(a, a).is_zero());
  }
}

TEST(Polynomial, RingAxiomsPrimeField) { ring_axioms(PrimeField(), 10000); }
TEST(Polynomial, RingAxiomsRationals) { ring_axioms(RationalField(), 10000); }

TEST(Polynomial, QuotientArithmeticIsNormalFormAndIdempotent) {
  std::mt19937_64 rng(99);
  auto S = ring({"x", "y", "z"});
  auto R = make_quotient_ring(S, {P(S, "x*y - z^2"), P(S, "x^3")});
  for (int t = 0; t < 2000; ++t) {
    auto a = R.reduce(random_poly(rng, S, 4, 4));
    auto b = R.reduce(random_poly(rng, S, 4, 4));
    auto c = R.reduce(random_poly(rng, S, 4, 4));
    auto ab = R.mul(a, b);
    ASSERT_EQ(R.reduce(ab), ab);
    ASSERT_EQ(R.mul(ab, c), R.mul(a, R.mul(b, c)));
    ASSERT_EQ(R.mul(a, R.add(b, c)), R.add(ab, R.mul(a, c)));
    for (const auto& t2 : ab.terms)
      for (const auto& g : R.quotient_gb()) ASSERT_FALSE(divides(g.lead().mono, t2.mono));
  }
}

TEST(Polynomial, ContextMismatchRejected) {
  auto S = ring({"x", "y"});
  EXPECT_THROW(S.monomial(Monomial(3)), std::invalid_argument);
}
