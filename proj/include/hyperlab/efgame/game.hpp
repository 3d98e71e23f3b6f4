#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hyperlab/folang/formula.hpp"
#include "hyperlab/hypercore/hypergraph.hpp"

namespace hyperlab::ef {

/// Spoiler may pebble a vertex in either structure in every round.
inline constexpr const char* kRules = "classical";

struct GameLimits {
  std::size_t max_vertices = 8;
  int max_rounds = 4;
};

/// Pebbles in play order, as vertex indices of the left and right structure.
struct GameState {
  int rounds_left = 0;
  std::vector<int> pebbles_left;
  std::vector<int> pebbles_right;
};

/// Exhaustive solver for the k-round Ehrenfeucht game on two hypergraphs.
/// Holds a memo table; one instance per thread.
class Game {
 public:
  /// Throws DomainError on arity mismatch or k < 0, CapacityError above limits.
  Game(const Hypergraph& left, const Hypergraph& right, int rounds, GameLimits limits = {});

  bool duplicator_wins();
  /// A closed sentence of depth <= rounds, true on the left and false on the
  /// right; none when Duplicator wins.
  std::optional<fo::Formula> distinguishing_formula();

  std::size_t states_explored() const noexcept { return explored_; }

 private:
  bool wins(GameState& state);
  bool extend(GameState& state, int x, int y) const;
  fo::Formula extract(GameState& state);
  fo::Formula violation(const GameState& state) const;

  const Hypergraph& left_;
  const Hypergraph& right_;
  int rounds_;
  std::size_t explored_ = 0;
  struct Memo;
  std::shared_ptr<Memo> memo_;
};

bool duplicator_wins(const Hypergraph& left, const Hypergraph& right, int rounds, GameLimits limits = {});
std::optional<fo::Formula> distinguishing_formula(const Hypergraph& left, const Hypergraph& right, int rounds,
                                                  GameLimits limits = {});

}  // namespace hyperlab::ef
