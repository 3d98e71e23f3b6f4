#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hyperlab/folang/formula.hpp"
#include "hyperlab/hypercore/hypergraph.hpp"

namespace hyperlab::fo {

using Assignment = std::map<std::string, Vertex>;

struct EvalOptions {
  /// Cache quantified subformulas by the values of their free variables.
  bool memoize = true;
};

/// Compiled formula, reusable across hypergraphs and assignments. Calls on one
/// instance may run concurrently.
class Evaluator {
 public:
  explicit Evaluator(const Formula& f, EvalOptions options = {});
  ~Evaluator();
  Evaluator(Evaluator&&) noexcept;
  Evaluator& operator=(Evaluator&&) noexcept;

  /// Throws DomainError if a free variable is unassigned, an assigned vertex
  /// is unknown, or an atom's arity differs from the hypergraph's.
  bool evaluate(const Hypergraph& g, const Assignment& assignment = {}) const;

  /// Truth value for every assignment of the listed free variables, in
  /// lexicographic order of vertex indices (last variable fastest). One cache
  /// is shared by all assignments.
  std::vector<bool> evaluate_table(const Hypergraph& g, const std::vector<std::string>& vars) const;

  /// Quantifier-node visits during the last call (cache hits excluded).
  std::size_t last_visits() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

bool evaluate(const Formula& f, const Hypergraph& g, const Assignment& assignment = {},
              EvalOptions options = {});

}  // namespace hyperlab::fo
