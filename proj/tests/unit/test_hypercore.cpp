#include <gtest/gtest.h>

#include <random>

#include "hyperlab/hypercore.hpp"
#include "oracles.hpp"

using namespace hyperlab;
namespace ht = hyperlab::testing;

TEST(Hypergraph, SortsAndDeduplicatesLabels) {
  Hypergraph g(3, {5, 1, 3, 1, 9}, {{9, 1, 3}});
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.label(0), 1);
  EXPECT_EQ(g.edge_labels(0), (std::vector<Vertex>{1, 3, 9}));
  EXPECT_TRUE(g.has_edge_labels(std::vector<Vertex>{3, 9, 1}));
  EXPECT_FALSE(g.has_edge_labels(std::vector<Vertex>{3, 5, 1}));
}

TEST(Hypergraph, RejectsMalformedInput) {
  EXPECT_THROW(Hypergraph(2, {1, 2}, {{1, 2}}), DomainError);
  EXPECT_THROW(Hypergraph(3, {1, 2, 3}, {{1, 2}}), DomainError);
  EXPECT_THROW(Hypergraph(3, {1, 2, 3}, {{1, 2, 2}}), DomainError);
  EXPECT_THROW(Hypergraph(3, {1, 2, 3}, {{1, 2, 4}}), DomainError);
  EXPECT_THROW(Hypergraph(3, {1, 2, 3}, {{1, 2, 3}, {3, 2, 1}}), DomainError);
  EXPECT_THROW(ht::single_edge().index_of(7), DomainError);
}

TEST(Hypergraph, NeighborsAndInduced) {
  const auto g = ht::loose_triangle();
  const int v1 = g.index_of(1);
  EXPECT_EQ(g.degree(v1), 2);
  EXPECT_EQ(g.neighbors(v1).size(), 4u);
  const std::vector<Vertex> keep{1, 2, 3, 4};
  const auto sub = g.induced_labels(keep);
  EXPECT_EQ(sub.vertex_count(), 4u);
  EXPECT_EQ(sub.edge_count(), 1u);
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-5")), "-5");
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("x"), ParseError);
  EXPECT_EQ(binomial(6, 3), 20);
  EXPECT_EQ(binomial(3, 6), 0);
  EXPECT_EQ(pow2(70), BigInt(1) << 70);
}

TEST(Density, FixturesMatchHandCounts) {
  EXPECT_EQ(density(ht::single_edge()), make_rational(1, 3));
  EXPECT_EQ(density(ht::loose_two_cycle()), make_rational(1, 2));
  EXPECT_EQ(density(ht::loose_triangle()), make_rational(1, 2));
  EXPECT_THROW(density(Hypergraph(3)), DomainError);
}

TEST(Density, MaxDensityAgreesWithSubsetOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const auto g = ht::random_hypergraph(rng, 3, n, 0.25);
    const auto md = max_density(g);
    EXPECT_EQ(md.value, ht::brute_max_density(g)) << to_shg(g);
    EXPECT_EQ(density(md.witness), md.value);
    EXPECT_EQ(is_strictly_balanced(g), ht::brute_strictly_balanced(g)) << to_shg(g);
  }
}

TEST(Density, StrictBalanceOfFixtures) {
  EXPECT_TRUE(is_strictly_balanced(ht::single_edge()));
  EXPECT_TRUE(is_strictly_balanced(ht::loose_two_cycle()));
  EXPECT_TRUE(is_strictly_balanced(ht::loose_triangle()));
  // Two disjoint edges: each half has the same density.
  EXPECT_FALSE(is_strictly_balanced(Hypergraph::from_edges(3, {{1, 2, 3}, {4, 5, 6}})));
}

TEST(Density, CapIsEnforced) {
  Limits tight;
  tight.enumeration_vertices = 4;
  EXPECT_THROW(max_density(ht::loose_triangle(), tight), CapacityError);
}

TEST(RootedPair, CountsAndDensity) {
  const RootedPair pair(ht::loose_two_cycle(), ht::single_edge());
  EXPECT_EQ(pair.extra_vertices(), 1);
  EXPECT_EQ(pair.extra_edges(), 1);
  EXPECT_EQ(pair.density(), 1);
  EXPECT_THROW(RootedPair(ht::single_edge(), ht::loose_two_cycle()), DomainError);
  const RootedPair same(ht::single_edge(), ht::single_edge());
  EXPECT_THROW(same.density(), DomainError);
}

TEST(Isomorphism, AutomorphismsAgreeWithPermutationOracle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const auto g = ht::random_hypergraph(rng, 3, n, 0.3);
    EXPECT_EQ(automorphism_count(g), BigInt(ht::brute_automorphisms(g))) << to_shg(g);
  }
  EXPECT_EQ(automorphism_count(ht::single_edge()), 6);
  EXPECT_EQ(automorphism_count(ht::loose_two_cycle()), 4);
  EXPECT_EQ(automorphism_count(ht::loose_triangle()), 6);
}

TEST(Isomorphism, ColouredAutomorphisms) {
  const auto g = ht::loose_triangle();
  std::vector<int> colour(g.vertex_count(), 0);
  colour[static_cast<std::size_t>(g.index_of(1))] = 1;
  Coloring c;
  c.vertex = colour;
  EXPECT_EQ(automorphism_count(g, c), BigInt(ht::brute_automorphisms(g, colour)));
  Coloring ec;
  ec.edge = {1, 0, 0};
  EXPECT_EQ(automorphism_count(g, ec), BigInt(ht::brute_automorphisms(g, {}, ec.edge)));
}

TEST(Isomorphism, EmbeddingsAndCopiesAgreeWithOracle) {
  std::mt19937_64 rng(7);
  const std::vector<Hypergraph> motifs{ht::single_edge(), ht::loose_two_cycle(),
                                       Hypergraph::from_edges(3, {{1, 2, 3}, {3, 4, 5}})};
  for (int trial = 0; trial < 40; ++trial) {
    const auto host = ht::random_hypergraph(rng, 3, 6, 0.35);
    for (const auto& m : motifs) {
      EXPECT_EQ(count_embeddings(m, host), ht::brute_embeddings(m, host));
      EXPECT_EQ(count_copies(m, host), BigInt(ht::brute_copies(m, host)));
    }
  }
}

TEST(Isomorphism, RelabelledCopiesAreIsomorphic) {
  const auto a = ht::loose_triangle();
  const auto b = Hypergraph::from_edges(3, {{10, 20, 30}, {30, 40, 50}, {50, 60, 10}});
  EXPECT_TRUE(are_isomorphic(a, b));
  EXPECT_FALSE(are_isomorphic(a, Hypergraph::from_edges(3, {{1, 2, 3}, {3, 4, 5}, {5, 6, 7}})));
}

TEST(Distance, AgreesWithFloydWarshall) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = ht::random_hypergraph(rng, 3, 7, 0.08);
    const auto d = ht::all_distances(g);
    for (int i = 0; i < 7; ++i) {
      EXPECT_EQ(distances_from(g, i), d[static_cast<std::size_t>(i)]);
      for (int j = 0; j < 7; ++j) {
        const auto got = distance(g, g.label(i), g.label(j));
        const int want = d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        EXPECT_EQ(got.value_or(-1), want);
      }
    }
  }
}

TEST(Shg, RoundTrip) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = ht::random_hypergraph(rng, 3 + static_cast<int>(trial % 2), 6, 0.2);
    EXPECT_EQ(parse_shg(to_shg(g)), g);
  }
  const auto odd = Hypergraph(3, {4, 8, 15, 16}, {{4, 8, 16}});
  EXPECT_EQ(parse_shg(to_shg(odd)), odd);
}

TEST(Shg, ParseErrorsCarryPositions) {
  EXPECT_THROW(parse_shg("s 3 n 3\n1 2\n"), Error);
  try {
    parse_shg("s three n 3");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
}
