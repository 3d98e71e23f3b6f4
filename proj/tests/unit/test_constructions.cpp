#include <gtest/gtest.h>

#include "hyperlab/constructions/constructions.hpp"
#include "hyperlab/extlab.hpp"
#include "hyperlab/folang.hpp"
#include "hyperlab/hypercore.hpp"
#include "oracles.hpp"

using namespace hyperlab;
namespace ht = hyperlab::testing;

TEST(LoosePath, Shape) {
  const auto p = loose_path(3, 3);
  EXPECT_EQ(p.vertex_count(), 7u);
  EXPECT_EQ(p.edge_count(), 3u);
  const auto d = ht::all_distances(p);
  EXPECT_EQ(d[0][6], 3);
  const auto q = loose_path(4, 2, 10);
  EXPECT_EQ(q.vertices().front(), 10);
  EXPECT_EQ(q.vertex_count(), 7u);
}

TEST(LimitPointPair, SmallestCase) {
  const auto c = limit_point_pair(3, 1, 2);
  const auto& h = c.pair.inner();
  const auto& g = c.pair.outer();
  EXPECT_EQ(c.alpha, make_rational(7, 4));
  EXPECT_EQ(density(h), make_rational(4, 7));
  EXPECT_EQ(c.pair.density(), make_rational(4, 7));
  EXPECT_EQ(c.pair.extra_vertices(), 2 * (2 * 2 - 1) + 1);
  EXPECT_TRUE(ht::brute_strictly_balanced(h));
  EXPECT_EQ(ext::classify_pair(c.pair, c.alpha), ext::PairClass::Neutral);
  EXPECT_EQ(c.middles.size(), 4u);
  // Every a-b path has length 2^l and z sits at distance 2^l from the first m middles.
  const auto d = ht::all_distances(g);
  const int a = g.index_of(c.a), b = g.index_of(c.b), z = g.index_of(c.z);
  EXPECT_EQ(d[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)], 2);
  for (int i = 0; i < 2; ++i)
    EXPECT_EQ(d[static_cast<std::size_t>(z)][static_cast<std::size_t>(g.index_of(c.middles[static_cast<std::size_t>(i)]))], 2);
  for (const auto& check : c.checks) EXPECT_NE(check.passed, std::optional<bool>(false)) << check.name;
}

TEST(LimitPointPair, AlphaFormula) {
  for (int l = 1; l <= 2; ++l)
    for (int m = 2; m <= 3; ++m) {
      const auto c = limit_point_pair(3, l, m);
      const Rational want = Rational(2) - make_rational(1, 1 << l) + make_rational(1, (1 << l) * m);
      EXPECT_EQ(c.alpha, want);
      EXPECT_EQ(1 / density(c.pair.inner()), want);
    }
  EXPECT_THROW(limit_point_pair(3, 0, 2), DomainError);
  EXPECT_THROW(limit_point_pair(3, 1, 1), DomainError);
}

TEST(SpectrumWitness, ShortVariant) {
  const auto w = spectrum_witnesses(3, 4, 1, 1);
  EXPECT_EQ(w.alpha, make_rational(9, 5));
  EXPECT_EQ(density(w.h), make_rational(5, 9));
  EXPECT_EQ(w.h.vertex_count(), 9u);
  EXPECT_TRUE(w.h.contains_vertex(w.x));
}

TEST(SpectrumWitness, LongVariantCounts) {
  for (int a1 = 1; a1 <= 4; ++a1)
    for (int a2 = 1; a2 <= 4; ++a2) {
      if (a1 + a2 - 3 < 1) continue;
      const auto w = spectrum_witnesses(3, 5, a1, a2);
      const long e = static_cast<long>(w.h.edge_count());
      EXPECT_EQ(static_cast<long>(w.h.vertex_count()), 2 * e - 1);
      EXPECT_EQ(1 / density(w.h), w.alpha);
      EXPECT_EQ(w.alpha, Rational(2) - make_rational(1, 8 + w.a));
    }
}

TEST(SpectrumWitness, SentenceSeparatesWitnessFromEdgeless) {
  const auto w = spectrum_witnesses(3, 4, 1, 1);
  const auto l = fo::build_witness_sentence(3, 4, 1, 1);
  EXPECT_LE(fo::quantifier_depth(l.sentence), 4);
  EXPECT_TRUE(fo::evaluate(l.sentence, w.h));
  EXPECT_FALSE(fo::evaluate(l.sentence, ht::edgeless(3, 9)));
}

TEST(OmegaTilde, DenseSubgraphIsDetected) {
  const auto w = spectrum_witnesses(3, 4, 1, 1);
  EXPECT_TRUE(omega_tilde_check(w.h, w.alpha, 9));
  const auto k4 = Hypergraph::from_edges(3, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
  EXPECT_FALSE(omega_tilde_check(k4, make_rational(7, 4), 4));
  EXPECT_TRUE(omega_tilde_check(k4, make_rational(1, 2), 4));
}
