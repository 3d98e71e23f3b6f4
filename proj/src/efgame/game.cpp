#include "hyperlab/efgame/game.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "hyperlab/hypercore/errors.hpp"

namespace hyperlab::ef {

struct Game::Memo {
  std::unordered_map<std::string, bool> table;
};

namespace {

std::string var(std::size_t pebble) { return "x" + std::to_string(pebble + 1); }

/// Rounds left plus the set of pebble pairs; play order does not affect the outcome.
std::string key(const GameState& state) {
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < state.pebbles_left.size(); ++i)
    pairs.emplace_back(state.pebbles_left[i], state.pebbles_right[i]);
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  std::string out(1, static_cast<char>(state.rounds_left));
  for (auto [x, y] : pairs) {
    out += static_cast<char>(x);
    out += static_cast<char>(y);
  }
  return out;
}

/// Calls visit(subset) for every (size)-subset of distinct positions in `pool`.
template <class Visit>
bool for_each_subset(const std::vector<int>& pool, std::size_t size, std::vector<int>& chosen,
                     std::size_t start, Visit&& visit) {
  if (chosen.size() == size) return visit(chosen);
  for (std::size_t i = start; i < pool.size(); ++i) {
    chosen.push_back(pool[i]);
    const bool go_on = for_each_subset(pool, size, chosen, i + 1, visit);
    chosen.pop_back();
    if (!go_on) return false;
  }
  return true;
}

}  // namespace

Game::Game(const Hypergraph& left, const Hypergraph& right, int rounds, GameLimits limits)
    : left_(left), right_(right), rounds_(rounds), memo_(std::make_shared<Memo>()) {
  if (left.arity() != right.arity()) throw DomainError("game on hypergraphs of different arity");
  if (rounds < 0) throw DomainError("number of rounds must be non-negative");
  if (left.vertex_count() > limits.max_vertices || right.vertex_count() > limits.max_vertices)
    throw CapacityError("game search is capped at " + std::to_string(limits.max_vertices) + " vertices per side");
  if (rounds > limits.max_rounds)
    throw CapacityError("game search is capped at " + std::to_string(limits.max_rounds) + " rounds");
  if (left.vertex_count() > 120 || right.vertex_count() > 120)
    throw CapacityError("game search supports at most 120 vertices per side");
}

/// Would adding the pair (x, y) keep the pebble correspondence a partial
/// isomorphism? The existing correspondence is assumed to be one.
bool Game::extend(GameState& state, int x, int y) const {
  const std::size_t count = state.pebbles_left.size();
  std::vector<int> distinct;
  for (std::size_t i = 0; i < count; ++i) {
    const bool same_left = state.pebbles_left[i] == x;
    const bool same_right = state.pebbles_right[i] == y;
    if (same_left != same_right) return false;
    if (same_left) return true;  // repeats an existing pair
  }
  // Each N-tuple through the new pair needs s - 1 other distinct pebbled vertices.
  std::vector<int> others;
  for (std::size_t i = 0; i < count; ++i)
    if (std::find(others.begin(), others.end(), static_cast<int>(i)) == others.end()) {
      bool fresh = true;
      for (int j : others)
        if (state.pebbles_left[static_cast<std::size_t>(j)] == state.pebbles_left[i]) fresh = false;
      if (fresh) others.push_back(static_cast<int>(i));
    }
  const auto s = static_cast<std::size_t>(left_.arity());
  if (others.size() + 1 < s) return true;
  std::vector<int> chosen, lhs(s), rhs(s);
  return for_each_subset(others, s - 1, chosen, 0, [&](const std::vector<int>& subset) {
    lhs[0] = x;
    rhs[0] = y;
    for (std::size_t i = 0; i + 1 < s; ++i) {
      lhs[i + 1] = state.pebbles_left[static_cast<std::size_t>(subset[i])];
      rhs[i + 1] = state.pebbles_right[static_cast<std::size_t>(subset[i])];
    }
    return left_.has_edge(lhs) == right_.has_edge(rhs);
  });
}

bool Game::wins(GameState& state) {
  if (state.rounds_left == 0) return true;
  const std::string k = key(state);
  if (auto it = memo_->table.find(k); it != memo_->table.end()) return it->second;
  ++explored_;
  bool duplicator = true;
  for (int side = 0; side < 2 && duplicator; ++side) {
    const Hypergraph& from = side == 0 ? left_ : right_;
    const Hypergraph& to = side == 0 ? right_ : left_;
    auto& mine = side == 0 ? state.pebbles_left : state.pebbles_right;
    for (int x = 0; x < static_cast<int>(from.vertex_count()) && duplicator; ++x) {
      // Re-pebbling a pebbled vertex only wastes a round.
      if (std::find(mine.begin(), mine.end(), x) != mine.end()) continue;
      bool answered = false;
      for (int y = 0; y < static_cast<int>(to.vertex_count()) && !answered; ++y) {
        const int l = side == 0 ? x : y, r = side == 0 ? y : x;
        if (!extend(state, l, r)) continue;
        state.pebbles_left.push_back(l);
        state.pebbles_right.push_back(r);
        --state.rounds_left;
        answered = wins(state);
        ++state.rounds_left;
        state.pebbles_left.pop_back();
        state.pebbles_right.pop_back();
      }
      if (!answered) duplicator = false;
    }
  }
  memo_->table.emplace(k, duplicator);
  return duplicator;
}

bool Game::duplicator_wins() {
  GameState start{rounds_, {}, {}};
  return wins(start);
}

/// Literal true on the left and false on the right, for a state whose last
/// pair broke the partial isomorphism.
fo::Formula Game::violation(const GameState& state) const {
  const std::size_t last = state.pebbles_left.size() - 1;
  const int x = state.pebbles_left[last], y = state.pebbles_right[last];
  for (std::size_t i = 0; i < last; ++i) {
    const bool same_left = state.pebbles_left[i] == x;
    const bool same_right = state.pebbles_right[i] == y;
    if (same_left && !same_right) return fo::eq(var(i), var(last));
    if (!same_left && same_right) return fo::neq(var(i), var(last));
  }
  const auto s = static_cast<std::size_t>(left_.arity());
  std::vector<int> others;
  for (std::size_t i = 0; i < last; ++i) {
    bool fresh = true;
    for (int j : others)
      if (state.pebbles_left[static_cast<std::size_t>(j)] == state.pebbles_left[i]) fresh = false;
    if (fresh) others.push_back(static_cast<int>(i));
  }
  std::optional<fo::Formula> found;
  std::vector<int> chosen, lhs(s), rhs(s);
  for_each_subset(others, s - 1, chosen, 0, [&](const std::vector<int>& subset) {
    lhs[0] = x;
    rhs[0] = y;
    std::vector<std::string> args{var(last)};
    for (std::size_t i = 0; i + 1 < s; ++i) {
      lhs[i + 1] = state.pebbles_left[static_cast<std::size_t>(subset[i])];
      rhs[i + 1] = state.pebbles_right[static_cast<std::size_t>(subset[i])];
      args.push_back(var(static_cast<std::size_t>(subset[i])));
    }
    const bool a = left_.has_edge(lhs), b = right_.has_edge(rhs);
    if (a == b) return true;
    found = a ? fo::atom(args) : fo::lnot(fo::atom(args));
    return false;
  });
  if (!found) throw Error("internal: no violated literal");
  return *found;
}

/// Precondition: Spoiler wins from `state`.
fo::Formula Game::extract(GameState& state) {
  const std::size_t j = state.pebbles_left.size();
  for (int side = 0; side < 2; ++side) {
    const Hypergraph& from = side == 0 ? left_ : right_;
    const Hypergraph& to = side == 0 ? right_ : left_;
    auto& mine = side == 0 ? state.pebbles_left : state.pebbles_right;
    for (int x = 0; x < static_cast<int>(from.vertex_count()); ++x) {
      if (std::find(mine.begin(), mine.end(), x) != mine.end()) continue;
      bool winning = true;
      for (int y = 0; y < static_cast<int>(to.vertex_count()) && winning; ++y) {
        const int l = side == 0 ? x : y, r = side == 0 ? y : x;
        if (!extend(state, l, r)) continue;
        state.pebbles_left.push_back(l);
        state.pebbles_right.push_back(r);
        --state.rounds_left;
        winning = !wins(state);
        ++state.rounds_left;
        state.pebbles_left.pop_back();
        state.pebbles_right.pop_back();
      }
      if (!winning) continue;
      // One subformula per reply, each true on the left and false on the right.
      std::vector<fo::Formula> parts;
      for (int y = 0; y < static_cast<int>(to.vertex_count()); ++y) {
        const int l = side == 0 ? x : y, r = side == 0 ? y : x;
        const bool ok = extend(state, l, r);
        state.pebbles_left.push_back(l);
        state.pebbles_right.push_back(r);
        --state.rounds_left;
        parts.push_back(ok ? extract(state) : violation(state));
        ++state.rounds_left;
        state.pebbles_left.pop_back();
        state.pebbles_right.pop_back();
      }
      if (side == 0) {
        // Left x satisfies every part; each right y fails its own part.
        return fo::exists(var(j), parts.empty() ? fo::eq(var(j), var(j)) : fo::land(std::move(parts)));
      }
      // Each left y satisfies its own part; the right x satisfies none.
      return fo::forall(var(j), parts.empty() ? fo::neq(var(j), var(j)) : fo::lor(std::move(parts)));
    }
  }
  throw Error("internal: Spoiler has no winning move");
}

std::optional<fo::Formula> Game::distinguishing_formula() {
  if (duplicator_wins()) return std::nullopt;
  GameState start{rounds_, {}, {}};
  return extract(start);
}

bool duplicator_wins(const Hypergraph& left, const Hypergraph& right, int rounds, GameLimits limits) {
  return Game(left, right, rounds, limits).duplicator_wins();
}

std::optional<fo::Formula> distinguishing_formula(const Hypergraph& left, const Hypergraph& right, int rounds,
                                                  GameLimits limits) {
  return Game(left, right, rounds, limits).distinguishing_formula();
}

}  // namespace hyperlab::ef
