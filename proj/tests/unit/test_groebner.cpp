#include "support.hpp"

#include <gtest/gtest.h>

using namespace gk;
using namespace gk::test;

namespace {
template <class F>
std::vector<Polynomial<F>> polys(const GroebnerBasis<F>& gb) {
  std::vector<Polynomial<F>> out;
  for (const auto& e : gb.elements) out.push_back(e.components[0]);
  return out;
}
}  // namespace

TEST(Groebner, SingleGeneratorIsItsOwnBasis) {
  auto S = ring({"x", "y"});
  auto gb = groebner_basis<PrimeField>({E(S, "x*y")}, S);
  EXPECT_EQ(polys(gb), Ps(S, {"x*y"}));
}

TEST(Groebner, MonomialGeneratorsAreABasis) {
  auto S = ring({"x", "y", "z"});
  auto gb = groebner_basis<PrimeField>({E(S, "x*z"), E(S, "y*z"), E(S, "x^2")}, S);
  EXPECT_EQ(polys(gb), Ps(S, {"x*z", "y*z", "x^2"}));
}

TEST(Groebner, OneBuchbergerStep) {
  auto S = ring({"x", "y"});
  auto gb = groebner_basis<PrimeField>({E(S, "x^2+y^2"), E(S, "x*y")}, S);
  EXPECT_EQ(polys(gb), Ps(S, {"x^2+y^2", "x*y", "y^3"}));
  EXPECT_TRUE(verify_groebner(gb, S));
}

TEST(Groebner, InhomogeneousRejected) {
  auto S = ring({"x", "y"});
  EXPECT_THROW(groebner_basis<PrimeField>({E(S, "x+y^2")}, S), std::invalid_argument);
}

TEST(Groebner, NormalFormExamples) {
  auto S = ring({"x", "y", "z"});
  auto g1 = groebner_basis<PrimeField>({E(S, "x*y")}, S);
  EXPECT_TRUE(normal_form(E(S, "x*y"), g1, S).is_zero());
  EXPECT_EQ(normal_form(E(S, "z^3"), g1, S), E(S, "z^3"));
  auto g2 = groebner_basis<PrimeField>({E(S, "x^2 - y*z")}, S);
  EXPECT_EQ(normal_form(E(S, "x^2*y"), g2, S), E(S, "y^2*z"));
}

TEST(Groebner, SyzygyExamples) {
  auto S = ring({"x", "y", "z"});
  auto s1 = syzygy_matrix(row(S, {"x*z", "y*z"}), S);
  ASSERT_EQ(s1.cols(), 1u);
  EXPECT_EQ(s1.columns[0], Ps(S, {"y", "-x"}));
  EXPECT_EQ(s1.col_degrees, std::vector<int>{3});
  auto s2 = syzygy_matrix(row(S, {"x*y - z^2"}), S);
  EXPECT_EQ(s2.cols(), 0u);
  auto T = ring({"x", "y"});
  auto s3 = syzygy_matrix(row(T, {"x", "y"}), T);
  ASSERT_EQ(s3.cols(), 1u);
  EXPECT_EQ(s3.columns[0], Ps(T, {"y", "-x"}));
}

TEST(Groebner, SyzygiesOverQuotient) {
  auto S = ring({"x", "y"});
  auto R = make_quotient_ring(S, {P(S, "x*y")});
  // kernel of x: R(-1) -> R is generated by y
  auto s = syzygy_matrix(row(R, {"x"}), R);
  ASSERT_EQ(s.cols(), 1u);
  EXPECT_EQ(s.columns[0], Ps(R, {"y"}));
}

TEST(Groebner, MembershipWithCertificate) {
  auto S = ring({"x", "y"});
  std::vector<FreeModuleElement<PrimeField>> gens{E(S, "x^2+y^2"), E(S, "x*y")};
  auto m = membership(E(S, "y^3"), gens, S);
  ASSERT_TRUE(m.member);
  EXPECT_EQ(m.certificate, Ps(S, {"y", "-x"}));
  auto T = ring({"x", "y", "z"});
  EXPECT_FALSE(membership(E(T, "z"), {E(T, "x*y")}, T).member);
  auto z = membership(FreeModuleElement<PrimeField>({T.zero()}, {0}), {E(T, "x*y")}, T);
  EXPECT_TRUE(z.member);
  EXPECT_EQ(z.certificate.size(), 1u);
  EXPECT_TRUE(z.certificate[0].is_zero());
}

TEST(Groebner, MembershipCertificateReconstructs) {
  std::mt19937_64 rng(5);
  auto S = ring({"x", "y", "z"});
  for (int t = 0; t < 50; ++t) {
    std::vector<FreeModuleElement<PrimeField>> gens;
    for (int k = 0; k < 3; ++k) gens.push_back({{random_poly(rng, S, 3, 2, true)}, {0}});
    Polynomial<PrimeField> f;
    for (auto& g : gens) f = S.add(f, S.mul(g.components[0], random_poly(rng, S, 2, 0, true)));
    auto hf = homogeneity(f);
    if (!hf.first || f.is_zero()) continue;
    auto m = membership(FreeModuleElement<PrimeField>({f}, {0}), gens, S);
    ASSERT_TRUE(m.member);
    Polynomial<PrimeField> back;
    for (std::size_t i = 0; i < gens.size(); ++i) back = S.add(back, S.mul(m.certificate[i], gens[i].components[0]));
    EXPECT_EQ(back, f);
  }
}

TEST(Groebner, HilbertSeriesExamples) {
  auto S = ring({"x", "y"});
  auto free = hilbert_series_from_initial(groebner_basis<PrimeField>({}, S), 2);
  EXPECT_EQ(free.numerator, LaurentPolynomial::one());
  EXPECT_EQ(free.denominator_exponent, 2);
  auto xy = hilbert_series_from_initial(groebner_basis<PrimeField>({E(S, "x*y")}, S), 2);
  EXPECT_EQ(xy.numerator.to_string(), "1 - t^2");
  for (int d = 1; d <= 10; ++d) EXPECT_EQ(xy.value(d), 2);
  auto T = ring({"x", "y", "z"});
  auto h = hilbert_series_from_initial(groebner_basis<PrimeField>({E(T, "x*z"), E(T, "y*z")}, T), 3);
  EXPECT_EQ(h.numerator.to_string(), "1 - 2t^2 + t^3");
  EXPECT_EQ(h.dimension(), 2);
  // direct count: standard monomials are those not divisible by xz or yz
  for (int d = 0; d <= 10; ++d) {
    long cnt = 0;
    for (const auto& m : monomials_of_degree(3, static_cast<std::uint32_t>(d)))
      if (!(m[2] > 0 && (m[0] > 0 || m[1] > 0))) ++cnt;
    EXPECT_EQ(h.value(d), cnt) << d;
  }
}

TEST(Groebner, DeterministicBases) {
  auto S = ring({"x", "y", "z"});
  std::vector<FreeModuleElement<PrimeField>> gens{E(S, "x^2-y*z"), E(S, "y^2-x*z"), E(S, "z^2-x*y")};
  auto a = groebner_basis(gens, S);
  auto b = groebner_basis(gens, S);
  EXPECT_EQ(a.elements, b.elements);
  EXPECT_TRUE(verify_groebner(a, S));
}
