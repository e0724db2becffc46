#include "support.hpp"

#include "gradedkernel/resolution.hpp"

#include <gtest/gtest.h>

using namespace gk;
using namespace gk::test;

namespace {
using PM = PresentedModule<PrimeField>;

PM cyclic(const RingContext<PrimeField>& S, std::initializer_list<const char*> gens) {
  return PM::cyclic(S, Ps(S, gens));
}

std::vector<long long> totals(const PM& M, std::size_t len = 6) { return betti_table(M, len).totals(); }

void expect_koszul_agrees(const PM& M) {
  auto t = betti_table(M, M.ring.nvars() + 1);
  auto [lo, hi] = default_oracle_window(M);
  for (std::size_t i = 0; i <= M.ring.nvars(); ++i) {
    auto tor = koszul_tor(M, i, lo, hi);
    for (int j = lo; j <= hi; ++j) EXPECT_EQ(tor[j], t.at(static_cast<int>(i), j)) << "i=" << i << " j=" << j;
  }
}
}  // namespace

TEST(Resolution, FreeModuleHasLengthZero) {
  auto S = ring({"x", "y"});
  auto res = free_resolution(PM::free(S, {0}), 3);
  EXPECT_EQ(res.length(), 0);
  EXPECT_FALSE(res.truncated);
}

TEST(Resolution, HypersurfaceXY) {
  auto S = ring({"x", "y"});
  auto res = free_resolution(cyclic(S, {"x*y"}), 3);
  ASSERT_EQ(res.length(), 1);
  EXPECT_EQ(res.modules[1], std::vector<int>{2});
  auto t = betti_table(res);
  EXPECT_EQ(t.totals(), (std::vector<long long>{1, 1}));
  EXPECT_EQ(render_betti(t), "       0 1\n    0: 1 .\n    1: . 1\ntotal: 1 1\n");
}

TEST(Resolution, TwoQuadricsWithCommonFactor) {
  auto S = ring({"x", "y", "z"});
  auto M = cyclic(S, {"x*z", "y*z"});
  auto res = free_resolution(M, 4);
  ASSERT_EQ(res.length(), 2);
  EXPECT_EQ(res.modules[1], (std::vector<int>{2, 2}));
  EXPECT_EQ(res.modules[2], std::vector<int>{3});
  EXPECT_TRUE(is_complex(res));
  EXPECT_TRUE(res.minimal);
  EXPECT_EQ(render_betti(betti_table(res)).substr(render_betti(betti_table(res)).rfind("total")), "total: 1 2 1\n");
  expect_koszul_agrees(M);
}

TEST(Resolution, ReferenceHypersurfaceHasLengthOneResolution) {
  auto S = ring({"x", "y", "z"});
  EXPECT_EQ(totals(cyclic(S, {"x*y - z^2"})), (std::vector<long long>{1, 1}));
}

TEST(Resolution, ZeroModule) {
  auto S = ring({"x", "y"});
  auto M = cyclic(S, {"1"});
  auto res = free_resolution(M, 3);
  EXPECT_EQ(res.length(), -1);
  EXPECT_TRUE(betti_table(res).empty());
  EXPECT_EQ(render_betti(betti_table(res)), "0\n");
}

TEST(Resolution, ResidueFieldKoszul) {
  auto S = ring({"x", "y", "z"});
  auto M = cyclic(S, {"x", "y", "z"});
  EXPECT_EQ(totals(M), (std::vector<long long>{1, 3, 3, 1}));
  auto tor = koszul_tor(M, 2, 0, 4);
  EXPECT_EQ(tor[2], 3);
  EXPECT_EQ(tor[3], 0);
  expect_koszul_agrees(M);
}

TEST(Resolution, KoszulOracleExamples) {
  auto S = ring({"x", "y"});
  auto tor = koszul_tor(cyclic(S, {"x*y"}), 1, 0, 5);
  for (int j = 0; j <= 5; ++j) EXPECT_EQ(tor[j], j == 2 ? 1 : 0);
  auto free = koszul_tor(PM::free(S, {0, 1}), 1, -2, 6);
  for (auto [j, v] : free) EXPECT_EQ(v, 0);
}

TEST(Resolution, MinimalizeCancelsUnits) {
  auto S = ring({"x", "y"});
  // S --1--> S is the trivial complex
  FreeResolution<PrimeField> triv(S);
  triv.modules = {{0}, {0}};
  triv.maps = {matrix_from_columns<PrimeField>({0}, {{S.one()}})};
  auto m = minimalize(triv);
  EXPECT_EQ(m.length(), -1);

  // non-minimal: S(-1)^2 -> S with columns (x, x) and an extra unit step
  FreeResolution<PrimeField> r(S);
  auto d1 = matrix_from_columns<PrimeField>({0}, {{P(S, "x")}, {P(S, "x")}});
  auto d2 = matrix_from_columns<PrimeField>({1, 1}, {{S.one(), P(S, "-1")}});
  r.modules = {{0}, {1, 1}, {1}};
  r.maps = {d1, d2};
  ASSERT_TRUE(is_complex(r));
  auto mm = minimalize(r);
  EXPECT_EQ(mm.modules.size(), 2u);
  EXPECT_EQ(mm.modules[1], std::vector<int>{1});
  EXPECT_TRUE(entries_in_maximal_ideal(mm));
  EXPECT_TRUE(is_complex(mm));
  // idempotent
  auto again = minimalize(mm);
  EXPECT_EQ(again.modules, mm.modules);
  EXPECT_EQ(again.maps, mm.maps);
}

TEST(Resolution, MinimalPresentationDropsRedundantGenerators) {
  auto S = ring({"x", "y"});
  // coker of [[1, x],[0, y]]-type data: F_0 = S^2, relation e_1 - y*e_2 ... removes e_1
  auto rel = matrix_from_columns<PrimeField>({1, 0}, {{S.one(), P(S, "-y")}, {P(S, "x"), S.zero()}});
  PM M(S, {1, 0}, rel);
  auto p = minimal_presentation(M);
  EXPECT_EQ(p.generator_degrees, std::vector<int>{0});
  ASSERT_EQ(p.relations.cols(), 1u);
  EXPECT_EQ(p.relations.at(0, 0), P(S, "x*y"));
}

TEST(Resolution, TruncatedOverQuotient) {
  auto S = ring({"x", "y"});
  auto R = make_quotient_ring(S, {P(S, "x*y")});
  auto k = PM::cyclic(R, Ps(R, {"x", "y"}));
  auto res = free_resolution(k, 5);
  EXPECT_TRUE(res.truncated);
  EXPECT_EQ(res.length(), 5);
  EXPECT_TRUE(is_complex(res));
  auto t = betti_table(res);
  // k over k[x,y]/(xy): beta_i = 2 for i >= 1
  EXPECT_EQ(t.totals(), (std::vector<long long>{1, 2, 2, 2, 2, 2}));
}

TEST(Resolution, ExactnessAndHilbertConsistencyOnRandomMonomialIdeals) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 12; ++trial) {
    std::size_t n = 2 + trial % 3;
    std::vector<std::string> names;
    for (std::size_t v = 0; v < n; ++v) names.push_back(std::string(1, static_cast<char>('a' + v)));
    auto S = ring(names);
    std::vector<Polynomial<PrimeField>> gens;
    for (int g = 0; g < 3; ++g) {
      Monomial m(n);
      int d = 1 + static_cast<int>(rng() % 3);
      for (int s = 0; s < d; ++s) {
        auto v = rng() % n;
        m.set(v, m[v] + 1);
      }
      gens.push_back(S.monomial(m));
    }
    auto M = PM::cyclic(S, gens);
    auto res = free_resolution(M, n + 1);
    ASSERT_FALSE(res.truncated);
    ASSERT_TRUE(is_complex(res));
    ASSERT_TRUE(res.minimal);
    EXPECT_EQ(betti_numerator(betti_table(res)), hilbert_series(M).numerator);
    // degreewise exactness at interior spots
    for (std::size_t i = 1; i + 1 < res.modules.size(); ++i)
      for (int d = 0; d <= 8; ++d) {
        long long dimFi = 0;
        for (int s : res.modules[i]) dimFi += d >= s ? binomial(d - s + static_cast<long long>(n) - 1, static_cast<long long>(n) - 1) : 0;
        auto r1 = degreewise_rank(S, res.map(i), d);
        auto r2 = degreewise_rank(S, res.map(i + 1), d);
        EXPECT_EQ(static_cast<long long>(r1 + r2), dimFi) << "i=" << i << " d=" << d;
      }
    expect_koszul_agrees(M);
  }
}
