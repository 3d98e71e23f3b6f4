#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hyperlab/extlab/pairs.hpp"
#include "hyperlab/folang/formula.hpp"
#include "hyperlab/hypercore/hypergraph.hpp"
#include "hyperlab/hypercore/rational.hpp"

// Slow, direct implementations used as references in tests.
namespace hyperlab::testing {

using EdgeList = std::vector<std::vector<Vertex>>;

// Fixtures (s = 3).
Hypergraph single_edge();
Hypergraph loose_two_cycle();    // {1,2,3}, {3,4,1}
Hypergraph loose_triangle();     // {1,2,3}, {3,4,5}, {5,6,1}
Hypergraph edgeless(int s, int n);

/// Every s-hypergraph on labels 1..n with at most max_edges edges.
std::vector<Hypergraph> all_hypergraphs(int s, int n, int max_edges);
/// Same enumeration without storing the results.
void for_each_hypergraph(int s, int n, int max_edges, const std::function<void(const Hypergraph&)>& visit);

Hypergraph random_hypergraph(std::mt19937_64& rng, int s, int n, double p);

/// Permutations of all vertices mapping the edge set onto itself. If
/// vertex_colour is given, colours must be preserved; if edge_colour is given,
/// each edge must map to an edge of the same colour.
std::uint64_t brute_automorphisms(const Hypergraph& g, const std::vector<int>& vertex_colour = {},
                                  const std::vector<int>& edge_colour = {});

/// Every automorphism as the image index of each vertex index.
std::vector<std::vector<int>> brute_automorphism_list(const Hypergraph& g);

/// Injective maps motif -> host sending edges to edges.
std::uint64_t brute_embeddings(const Hypergraph& motif, const Hypergraph& host);

/// Distinct (vertex set, edge set) images of embeddings, in host labels.
using CopySet = std::pair<std::set<Vertex>, std::set<std::vector<Vertex>>>;
std::set<CopySet> brute_copy_sets(const Hypergraph& motif, const Hypergraph& host);
std::uint64_t brute_copies(const Hypergraph& motif, const Hypergraph& host);

/// Floyd-Warshall over the primal graph; -1 when unreachable.
std::vector<std::vector<int>> all_distances(const Hypergraph& g);

/// Maximum of e/v over all induced sub-hypergraphs.
Rational brute_max_density(const Hypergraph& g);
bool brute_strictly_balanced(const Hypergraph& g);

/// Safe / rigid / neutral straight from the definitions, over vertex subsets.
ext::PairClass brute_classify(const RootedPair& pair, const Rational& alpha);

/// Recursive evaluation by enumerating every quantifier value.
bool oracle_evaluate(const fo::Formula& f, const Hypergraph& g, std::map<std::string, Vertex> assignment = {});

/// Random formula of quantifier depth at most `depth`, with free variables
/// drawn from `free` and bound ones from `pool`.
fo::Formula random_formula(std::mt19937_64& rng, int depth, int arity, const std::vector<std::string>& free,
                           const std::vector<std::string>& pool = {"x", "y", "z", "w"});

/// Graphs from the bundled atlas, as edge lists on 0..n-1.
struct SmallGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};
std::vector<SmallGraph> load_graph_atlas();

/// Hypergraph whose edges are all triangles of the graph (labels 1..n), or
/// none when some graph edge lies in no triangle.
std::optional<Hypergraph> triangle_hypergraph(const SmallGraph& g);

}  // namespace hyperlab::testing
