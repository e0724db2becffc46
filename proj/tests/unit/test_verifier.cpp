#include "support.hpp"

#include "gradedkernel/verifier.hpp"

#include <gtest/gtest.h>

using namespace gk;
using namespace gk::test;

namespace {
using Case = ExampleCase<PrimeField>;

const Case& builtin(const std::string& id) {
  static const auto corpus = corpus_builtin(PrimeField());
  for (const auto& c : corpus)
    if (c.id == id) return c;
  throw std::out_of_range(id);
}

Case simple(std::vector<std::string> vars, std::vector<std::string> ring_ideal, std::vector<std::string> module_ideal,
            std::vector<std::string> inner = {}) {
  return detail::make_case<PrimeField>("t", "baseline", "", PrimeField(), std::move(vars), std::move(ring_ideal),
                                       std::move(module_ideal), std::move(inner));
}

Bounds small() {
  Bounds b;
  b.tmax = 3;
  return b;
}
}  // namespace

TEST(Verifier, ClaimIdsParse) {
  EXPECT_EQ(parse_claim_id("C3"), ClaimId::C3);
  EXPECT_EQ(parse_claim_id("C10-ass-rhs"), ClaimId::C10);
  EXPECT_EQ(parse_claim_id("C1"), ClaimId::C1);
  EXPECT_FALSE(parse_claim_id("C11").has_value());
  EXPECT_FALSE(parse_claim_id("C1-wrong").has_value());
  for (auto id : kAllClaims) EXPECT_EQ(parse_claim_id(claim_name(id)), id);
}

TEST(Verifier, VanishingAboveDimensionPassesOnXY) {
  auto r = run_claim(ClaimId::C9, Reading::literal, builtin("ref-xy"), small());
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_FALSE(r.crashed);
  EXPECT_EQ(r.witness.at("dim_R").get<int>(), 2);
}

TEST(Verifier, LiteralVanishingBelowDepthOnPolynomialRing) {
  // M / m^t M has depth 0 while M = k[x,y] has depth 2
  auto r = run_claim(ClaimId::C1, Reading::literal, builtin("base-free2"), small());
  EXPECT_EQ(r.verdict, Verdict::fail);
  for (const auto& st : r.witness.at("tower").at("stages"))
    EXPECT_EQ(st.at("nonzero"), json::array({0}));
}

TEST(Verifier, TwoIdealDepthCharacterizationFails) {
  // a = (x): stages S/(x^t) have H^1 only, depth S = 2
  auto r = run_claim(ClaimId::C7, Reading::two_ideal, builtin("base-free2"), small());
  EXPECT_EQ(r.verdict, Verdict::fail);
  EXPECT_EQ(r.witness.at("tower").at("inner"), json::array({"x"}));
  auto c1 = run_claim(ClaimId::C1, Reading::two_ideal, builtin("base-free2"), small());
  EXPECT_EQ(c1.verdict, Verdict::fail);
}

TEST(Verifier, ArtinianProxyPassesUnderLiteralReading) {
  auto r = run_claim(ClaimId::C2, Reading::literal, builtin("ref-hypersurface"), small());
  EXPECT_EQ(r.verdict, Verdict::pass);
}

TEST(Verifier, TwoIdealStagesStillHaveTopDegree) {
  // H^1_m(S/(x^t)) is nonzero in all low degrees but bounded above by t - 2
  auto r = run_claim(ClaimId::C2, Reading::two_ideal, builtin("base-free2"), small());
  EXPECT_EQ(r.verdict, Verdict::pass);
  const auto& st = r.witness.at("tower").at("stages");
  EXPECT_EQ(st.at(2).at("top_degree").at(1), 1);
  EXPECT_EQ(st.at(2).at("finite_length").at(1), false);
}

TEST(Verifier, HypothesisFailureIsInconclusive) {
  auto r = run_claim(ClaimId::C4, Reading::literal, builtin("ref-noncm"), small());
  EXPECT_EQ(r.verdict, Verdict::inconclusive);
  EXPECT_TRUE(r.witness.contains("inapplicable"));
  auto c10 = run_claim(ClaimId::C10, Reading::literal, builtin("ref-hypersurface"), small());
  EXPECT_EQ(c10.verdict, Verdict::inconclusive);
}

TEST(Verifier, BettiBassDualityOnArtinianRing) {
  // d = 0: beta_i(M) = mu_i(Hom(M, omega)) is the classical Matlis duality
  auto r = run_claim(ClaimId::C3, Reading::literal, builtin("base-ci-artinian"), small());
  EXPECT_EQ(r.verdict, Verdict::pass) << r.witness.dump();
  auto k = simple({"x", "y"}, {"x^2", "y^2"}, {"x", "y"});
  auto rk = run_claim(ClaimId::C3, Reading::literal, k, small());
  EXPECT_EQ(rk.verdict, Verdict::pass) << rk.witness.dump();
  EXPECT_EQ(rk.witness.at("beta"), json::array({1, 2, 3, 4, 5}));
}

TEST(Verifier, BettiBassDualityShiftsByDimension) {
  auto r = run_claim(ClaimId::C3, Reading::literal, builtin("base-free2"), small());
  EXPECT_EQ(r.verdict, Verdict::fail);
  EXPECT_EQ(r.witness.at("beta"), json::array({1, 0, 0, 0, 0}));
  EXPECT_EQ(r.witness.at("mu_shifted_by_dim"), json::array({1, 0, 0, 0, 0}));
}

TEST(Verifier, LyubeznikBettiSumOnRegularRings) {
  for (const char* id : {"base-free2", "base-free3", "ref-hypersurface"}) {
    auto r = run_claim(ClaimId::C6, Reading::literal, builtin(id), small());
    EXPECT_EQ(r.verdict, Verdict::pass) << id << " " << r.witness.dump();
  }
}

TEST(Verifier, DualProjdimOnGorensteinCases) {
  for (const char* id : {"ref-hypersurface", "base-ci4", "base-ci-artinian"}) {
    auto r = run_claim(ClaimId::C8, Reading::literal, builtin(id), small());
    EXPECT_EQ(r.verdict, Verdict::pass) << id << " " << r.witness.dump();
  }
}

TEST(Verifier, DualProjdimFailsBelowFullDimension) {
  // M = S/(xy) over k[x,y]: F^2_m(M) = 0 and Hom(M, omega) = 0, projdim M = 1
  auto xy = run_claim(ClaimId::C8, Reading::literal, builtin("ref-xy"), small());
  EXPECT_EQ(xy.verdict, Verdict::fail);
  EXPECT_EQ(xy.witness.at("projdim_M"), 1);
  EXPECT_EQ(xy.witness.at("projdim_hom"), -1);
}

TEST(Verifier, AssociatedPrimesAgainstVertexCovers) {
  auto r = run_claim(ClaimId::C10, Reading::literal, builtin("ref-noncm"), small());
  EXPECT_EQ(r.verdict, Verdict::pass) << r.witness.dump();
  EXPECT_EQ(r.witness.at("computed"), json::array({json::array({2})}));
  auto emb = simple({"x", "y"}, {"x^2", "x*y"}, {"x^2", "x*y"});
  auto re = run_claim(ClaimId::C10, Reading::literal, emb, small());
  EXPECT_EQ(re.verdict, Verdict::pass);
}

TEST(Verifier, MinimalCovers) {
  std::vector<Monomial> gens = {Monomial{1, 0, 1}, Monomial{0, 1, 1}};
  auto c = detail::minimal_covers(gens, 3, 1);
  EXPECT_EQ(c, (std::vector<std::vector<std::size_t>>{{2}}));
  auto c2 = detail::minimal_covers(gens, 3, 2);
  EXPECT_EQ(c2, (std::vector<std::vector<std::size_t>>{{0, 1}}));
}

TEST(Verifier, WitnessesRejudgeToTheSameVerdict) {
  for (const char* id : {"ref-xy", "ref-noncm", "base-residue3"})
    for (auto claim : kAllClaims)
      for (auto reading : {Reading::literal, Reading::two_ideal}) {
        auto r = run_claim(claim, reading, builtin(id), small());
        auto round = json::parse(r.witness.dump());
        EXPECT_EQ(judge_claim(claim, round).verdict, r.verdict) << id << " " << r.claim;
      }
}

TEST(Verifier, JudgeDetectsTamperedWitness) {
  auto r = run_claim(ClaimId::C9, Reading::literal, builtin("ref-xy"), small());
  ASSERT_EQ(r.verdict, Verdict::pass);
  auto w = r.witness;
  w["dim_R"] = -1;
  EXPECT_EQ(judge_claim(ClaimId::C9, w).verdict, Verdict::fail);
}

TEST(Verifier, DiscrepanciesOnReferenceCases) {
  std::vector<Case> corpus = {builtin("ref-hypersurface"), builtin("ref-noncm")};
  auto res = verify_all(corpus, small());
  auto has = [&](const std::string& ex, const std::string& kind) {
    for (const auto& d : res.discrepancies)
      if (d.example == ex && d.kind == kind) return true;
    return false;
  };
  EXPECT_TRUE(has("ref-hypersurface", "betti-table"));
  EXPECT_TRUE(has("ref-hypersurface", "resolution-dd"));
  EXPECT_TRUE(has("ref-hypersurface", "lyubeznik"));
  EXPECT_TRUE(has("ref-noncm", "betti-table"));
  EXPECT_TRUE(has("ref-noncm", "resolution-dd"));
  EXPECT_TRUE(res.golden_ok());
  for (const auto& g : res.golden) EXPECT_TRUE(g.passed) << g.name << ": " << g.detail;
}

TEST(Verifier, CorpusGenerationIsDeterministic) {
  CorpusParams p;
  p.max_vars = 3;
  p.count = 10;
  auto a = corpus_generate(42, p, PrimeField());
  auto b = corpus_generate(42, p, PrimeField());
  ASSERT_EQ(a.size(), corpus_builtin(PrimeField()).size() + 10);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].id, b[i].id);
    EXPECT_EQ(a[i].description, b[i].description);
    EXPECT_LE(a[i].S.nvars(), std::max<std::size_t>(4, 3));
  }
  for (std::size_t i = corpus_builtin(PrimeField()).size(); i < a.size(); ++i) EXPECT_LE(a[i].S.nvars(), 3u);
  p.count = 0;
  EXPECT_EQ(corpus_generate(0, p, PrimeField()).size(), corpus_builtin(PrimeField()).size());
  auto c = corpus_generate(43, CorpusParams{3, 3, 10, 0}, PrimeField());
  bool differs = false;
  for (std::size_t i = 0; i < c.size(); ++i) differs = differs || c[i].description != a[i].description;
  EXPECT_TRUE(differs);
}

TEST(Verifier, BinomialCasesAreHomogeneous) {
  auto c = corpus_generate(5, CorpusParams{4, 3, 0, 6}, PrimeField());
  for (const auto& e : c)
    for (const auto& f : e.ring_ideal) EXPECT_TRUE(f.is_homogeneous()) << e.description;
}

TEST(Verifier, VerifyAllIsDeterministicAndCounts) {
  std::vector<Case> corpus = {builtin("ref-xy"), builtin("base-ci-artinian")};
  auto a = verify_all(corpus, small());
  auto b = verify_all(corpus, small());
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.summary.pass + a.summary.fail + a.summary.inconclusive, static_cast<int>(a.reports.size()));
  EXPECT_EQ(a.summary.crashes, 0);
  for (std::size_t i = 1; i < a.reports.size(); ++i)
    EXPECT_LE(static_cast<int>(*parse_claim_id(a.reports[i - 1].claim)),
              static_cast<int>(*parse_claim_id(a.reports[i].claim)));
}

TEST(Verifier, VerdictsStableAcrossBounds) {
  std::vector<Case> corpus = {builtin("ref-xy"), builtin("ref-hypersurface"), builtin("base-ci3")};
  Bounds lo = small();
  Bounds hi = small();
  hi.tmax = 5;
  hi.max_length = 5;
  auto a = verify_all(corpus, lo);
  auto b = verify_all(corpus, hi);
  ASSERT_EQ(a.reports.size(), b.reports.size());
  for (std::size_t i = 0; i < a.reports.size(); ++i) {
    if (a.reports[i].verdict == Verdict::inconclusive || b.reports[i].verdict == Verdict::inconclusive) continue;
    EXPECT_EQ(a.reports[i].verdict, b.reports[i].verdict) << a.reports[i].claim << " " << a.reports[i].example;
  }
}
