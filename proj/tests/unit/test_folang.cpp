#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hyperlab/folang.hpp"
#include "hyperlab/hypercore.hpp"
#include "oracles.hpp"

using namespace hyperlab;
namespace ht = hyperlab::testing;

namespace {

int ceil_log2(int i) {
  int d = 0;
  while ((1 << d) < i) ++d;
  return d;
}

}  // namespace

TEST(Formula, DepthAndFreeVariables) {
  const auto f = fo::parse("exists x (N(x,y,z) & forall w (w = x | !N(w,y,z)))");
  EXPECT_EQ(fo::quantifier_depth(f), 2);
  EXPECT_EQ(fo::free_variables(f), (std::set<std::string>{"y", "z"}));
  EXPECT_EQ(fo::quantifier_depth(fo::atom({"a", "b", "c"})), 0);
}

TEST(Formula, PrintParseRoundTrip) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    const auto f = ht::random_formula(rng, 3, 3, {"x"});
    const auto text = fo::print(f);
    EXPECT_EQ(fo::parse(text, 3), f) << text;
  }
}

TEST(Formula, ParserPrecedence) {
  const auto f = fo::parse("N(a,b,c) | N(a,b,d) & a = b -> !a = c");
  EXPECT_EQ(f.kind(), fo::Kind::Implies);
  EXPECT_EQ(f.child(0).kind(), fo::Kind::Or);
  EXPECT_EQ(f.child(0).child(1).kind(), fo::Kind::And);
  const auto arrows = fo::parse("a = b -> b = c -> c = a");
  EXPECT_EQ(arrows.child(1).kind(), fo::Kind::Implies);
}

TEST(Formula, ParseErrors) {
  EXPECT_THROW(fo::parse("exists (N(x,y,z))"), ParseError);
  EXPECT_THROW(fo::parse("N(x,y,z) &"), ParseError);
  EXPECT_THROW(fo::parse("N(x,y) & N(x,y,z)"), ParseError);
  EXPECT_THROW(fo::parse("N(x,y,z)", 4), ParseError);
  try {
    fo::parse("x = y $");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
}

TEST(Evaluator, AgreesWithOracleOnRandomInputs) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 400; ++trial) {
    const auto g = ht::random_hypergraph(rng, 3, 3 + static_cast<int>(rng() % 4), 0.3);
    const auto f = ht::random_formula(rng, 3, 3, {});
    EXPECT_EQ(fo::evaluate(f, g), ht::oracle_evaluate(f, g)) << fo::print(f) << "\n" << to_shg(g);
    EXPECT_EQ(fo::evaluate(f, g, {}, {.memoize = false}), ht::oracle_evaluate(f, g));
  }
}

TEST(Evaluator, TableMatchesOracleForFreeVariables) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = ht::random_hypergraph(rng, 3, 5, 0.3);
    const auto f = ht::random_formula(rng, 2, 3, {"x", "y"});
    const fo::Evaluator ev(f);
    const auto table = ev.evaluate_table(g, {"x", "y"});
    std::size_t pos = 0;
    for (Vertex a : g.vertices())
      for (Vertex b : g.vertices())
        EXPECT_EQ(table[pos++], ht::oracle_evaluate(f, g, {{"x", a}, {"y", b}})) << fo::print(f);
  }
}

TEST(Evaluator, AtomsWithRepeatedArgumentsAreFalse) {
  const auto g = ht::single_edge();
  EXPECT_FALSE(fo::evaluate(fo::parse("exists x exists y N(x,x,y)"), g));
  EXPECT_TRUE(fo::evaluate(fo::parse("exists x exists y exists z N(z,x,y)"), g));
}

TEST(Evaluator, RejectsBadInput) {
  const auto g = ht::single_edge();
  EXPECT_THROW(fo::evaluate(fo::parse("N(x,y,z)"), g), DomainError);
  EXPECT_THROW(fo::evaluate(fo::parse("x = x"), g, {{"x", 42}}), DomainError);
  EXPECT_THROW(fo::evaluate(fo::parse("exists a exists b exists c exists d N(a,b,c,d)"), g), DomainError);
}

TEST(Builders, DistanceFormulasMatchShortestPaths) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = ht::random_hypergraph(rng, 3, 7, 0.07);
    const auto d = ht::all_distances(g);
    for (int i = 0; i <= 4; ++i) {
      const fo::Evaluator exact(fo::dist_exact(i, 3));
      const auto table = exact.evaluate_table(g, {"x", "y"});
      for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 7; ++b)
          EXPECT_EQ(table[static_cast<std::size_t>(a * 7 + b)],
                    d[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] == i);
    }
  }
}

TEST(Builders, DistanceDepth) {
  for (int s = 3; s <= 5; ++s)
    for (int i = 1; i <= 32; ++i) {
      EXPECT_EQ(fo::quantifier_depth(fo::dist_at_most(i, s)), ceil_log2(i) + s - 2);
      EXPECT_EQ(fo::quantifier_depth(fo::dist_exact(i, s)), ceil_log2(i) + s - 2);
    }
  EXPECT_THROW(fo::dist_at_most(0, 3), DomainError);
  EXPECT_THROW(fo::dist_exact(2, 2), DomainError);
}

TEST(Builders, FreshNamesSkipReserved) {
  fo::FreshNames names("v", {"v2"});
  EXPECT_EQ(names.next(), "v1");
  EXPECT_EQ(names.next(), "v3");
}

TEST(SentenceBuilders, WitnessSentenceDepthAndTruth) {
  const auto w = fo::build_witness_sentence(3, 4, 1, 1);
  EXPECT_LE(fo::quantifier_depth(w.sentence), 4);
  EXPECT_TRUE(fo::free_variables(w.sentence).empty());
  EXPECT_FALSE(fo::evaluate(w.sentence, ht::edgeless(3, 9)));
}

TEST(SentenceBuilders, LimitPointSentenceIsClosedWithDepthK) {
  for (int k = 8; k <= 9; ++k) {
    const auto l = fo::build_limit_point_sentence(3, k);
    EXPECT_EQ(l.l, k - 3 - 4);
    EXPECT_TRUE(fo::free_variables(l.sentence).empty());
    EXPECT_LE(fo::quantifier_depth(l.sentence), k);
  }
  EXPECT_THROW(fo::build_limit_point_sentence(3, 7), DomainError);
}
