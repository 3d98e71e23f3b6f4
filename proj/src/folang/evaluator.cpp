#include "hyperlab/folang/evaluator.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <unordered_map>

#include "hyperlab/hypercore/errors.hpp"

namespace hyperlab::fo {

namespace {

struct CNode {
  Kind kind;
  std::vector<int> slots;     // atom / equality arguments, or {bound} for quantifiers
  std::vector<int> children;  // node ids
  std::vector<int> free;      // slots of free variables (quantifiers only)
};

}  // namespace

struct Evaluator::Impl {
  EvalOptions options;
  std::vector<CNode> nodes;
  std::vector<std::string> slot_names;
  std::map<std::string, int> slot_of;
  std::vector<std::string> root_free;
  std::vector<int> atom_arities;
  int root = 0;

  mutable std::atomic<std::size_t> visits{0};

  /// Per-call state; the compiled tables above are never modified.
  struct Run {
    const Hypergraph* g = nullptr;
    std::vector<int> env;
    std::vector<std::unordered_map<std::uint64_t, bool>> memo;
    std::vector<char> memo_ok;
    std::vector<int> buffer;
    std::size_t visits = 0;
  };

  int slot(const std::string& name) {
    auto [it, fresh] = slot_of.emplace(name, static_cast<int>(slot_names.size()));
    if (fresh) slot_names.push_back(name);
    return it->second;
  }

  int compile(const Formula& f) {
    CNode node{f.kind(), {}, {}, {}};
    if (f.kind() == Kind::Atom || f.kind() == Kind::Equal || f.kind() == Kind::Exists || f.kind() == Kind::Forall)
      for (const auto& v : f.vars()) node.slots.push_back(slot(v));
    if (f.kind() == Kind::Atom) atom_arities.push_back(static_cast<int>(f.vars().size()));
    for (const auto& c : f.children()) node.children.push_back(compile(c));
    if (f.kind() == Kind::Exists || f.kind() == Kind::Forall)
      for (const auto& v : free_variables(f)) node.free.push_back(slot(v));
    nodes.push_back(std::move(node));
    return static_cast<int>(nodes.size()) - 1;
  }

  Run prepare(const Hypergraph& graph) const {
    for (int a : atom_arities)
      if (a != graph.arity())
        throw DomainError("formula uses N with " + std::to_string(a) + " arguments on a " +
                          std::to_string(graph.arity()) + "-uniform hypergraph");
    Run r;
    r.g = &graph;
    r.env.assign(slot_names.size(), -1);
    r.memo.assign(nodes.size(), {});
    r.memo_ok.assign(nodes.size(), 0);
    r.buffer.resize(static_cast<std::size_t>(graph.arity()));
    if (!options.memoize) return r;
    const long double n = static_cast<long double>(std::max<std::size_t>(graph.vertex_count(), 1));
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i].kind != Kind::Exists && nodes[i].kind != Kind::Forall) continue;
      long double cap = 1;
      for (std::size_t k = 0; k < nodes[i].free.size(); ++k) cap *= n;
      r.memo_ok[i] = cap < static_cast<long double>(std::numeric_limits<std::uint64_t>::max() / 2);
    }
    return r;
  }

  bool eval(Run& r, int id) const {
    const CNode& node = nodes[static_cast<std::size_t>(id)];
    switch (node.kind) {
      case Kind::Atom:
        for (std::size_t i = 0; i < node.slots.size(); ++i) r.buffer[i] = r.env[static_cast<std::size_t>(node.slots[i])];
        return r.g->has_edge(r.buffer);
      case Kind::Equal:
        return r.env[static_cast<std::size_t>(node.slots[0])] == r.env[static_cast<std::size_t>(node.slots[1])];
      case Kind::Not:
        return !eval(r, node.children[0]);
      case Kind::And:
        for (int c : node.children)
          if (!eval(r, c)) return false;
        return true;
      case Kind::Or:
        for (int c : node.children)
          if (eval(r, c)) return true;
        return false;
      case Kind::Implies:
        return !eval(r, node.children[0]) || eval(r, node.children[1]);
      case Kind::Exists:
      case Kind::Forall:
        return quantify(r, id, node);
    }
    return false;
  }

  bool quantify(Run& r, int id, const CNode& node) const {
    std::uint64_t key = 0;
    const bool cached = r.memo_ok[static_cast<std::size_t>(id)] != 0;
    if (cached) {
      const std::uint64_t n = r.g->vertex_count();
      for (int s : node.free) key = key * n + static_cast<std::uint64_t>(r.env[static_cast<std::size_t>(s)]);
      auto& table = r.memo[static_cast<std::size_t>(id)];
      if (auto it = table.find(key); it != table.end()) return it->second;
    }
    ++r.visits;
    const bool existential = node.kind == Kind::Exists;
    const auto bound = static_cast<std::size_t>(node.slots[0]);
    const int saved = r.env[bound];
    bool result = !existential;
    const int n = static_cast<int>(r.g->vertex_count());
    for (int v = 0; v < n; ++v) {
      r.env[bound] = v;
      if (eval(r, node.children[0]) == existential) {
        result = existential;
        break;
      }
    }
    r.env[bound] = saved;
    if (cached) r.memo[static_cast<std::size_t>(id)].emplace(key, result);
    return result;
  }
};

Evaluator::Evaluator(const Formula& f, EvalOptions options) : impl_(std::make_unique<Impl>()) {
  impl_->options = options;
  impl_->root = impl_->compile(f);
  for (const auto& v : free_variables(f)) impl_->root_free.push_back(v);
}

Evaluator::~Evaluator() = default;
Evaluator::Evaluator(Evaluator&&) noexcept = default;
Evaluator& Evaluator::operator=(Evaluator&&) noexcept = default;

bool Evaluator::evaluate(const Hypergraph& g, const Assignment& assignment) const {
  auto run = impl_->prepare(g);
  for (const auto& name : impl_->root_free) {
    auto it = assignment.find(name);
    if (it == assignment.end()) throw DomainError("free variable '" + name + "' is not assigned");
    auto idx = g.find(it->second);
    if (!idx) throw DomainError("variable '" + name + "' is assigned unknown vertex " + std::to_string(it->second));
    run.env[static_cast<std::size_t>(impl_->slot_of.at(name))] = *idx;
  }
  const bool result = impl_->eval(run, impl_->root);
  impl_->visits = run.visits;
  return result;
}

std::vector<bool> Evaluator::evaluate_table(const Hypergraph& g, const std::vector<std::string>& vars) const {
  for (const auto& name : impl_->root_free)
    if (std::find(vars.begin(), vars.end(), name) == vars.end())
      throw DomainError("free variable '" + name + "' is not listed");
  auto run = impl_->prepare(g);
  const std::size_t n = g.vertex_count();
  std::vector<int> slots;
  for (const auto& name : vars) {
    auto it = impl_->slot_of.find(name);
    slots.push_back(it == impl_->slot_of.end() ? -1 : it->second);
  }
  std::vector<bool> out;
  if (n == 0 && !vars.empty()) return out;
  std::vector<std::size_t> digits(vars.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (slots[i] >= 0) run.env[static_cast<std::size_t>(slots[i])] = static_cast<int>(digits[i]);
    out.push_back(impl_->eval(run, impl_->root));
    std::size_t i = vars.size();
    while (i > 0 && ++digits[i - 1] == n) digits[--i] = 0;
    if (i == 0) break;
  }
  impl_->visits = run.visits;
  return out;
}

std::size_t Evaluator::last_visits() const { return impl_->visits; }

bool evaluate(const Formula& f, const Hypergraph& g, const Assignment& assignment, EvalOptions options) {
  return Evaluator(f, options).evaluate(g, assignment);
}

}  // namespace hyperlab::fo
