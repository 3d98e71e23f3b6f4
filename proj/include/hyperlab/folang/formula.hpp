#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace hyperlab::fo {

enum class Kind { Atom, Equal, Not, And, Or, Implies, Exists, Forall };

class Formula;

struct Node {
  Kind kind;
  /// Atom: the argument list. Equal: two variables. Quantifiers: the bound variable.
  std::vector<std::string> vars;
  std::vector<Formula> children;
};

/// Immutable first-order formula over the signature {N, =}.
class Formula {
 public:
  Kind kind() const { return node_->kind; }
  const std::vector<std::string>& vars() const { return node_->vars; }
  const std::vector<Formula>& children() const { return node_->children; }
  const Formula& child(std::size_t i = 0) const { return node_->children.at(i); }
  /// Quantified variable of Exists / Forall.
  const std::string& bound() const { return node_->vars.front(); }
  const Node* id() const { return node_.get(); }

  /// Structural equality.
  bool operator==(const Formula& other) const;

  friend Formula make(Kind kind, std::vector<std::string> vars, std::vector<Formula> children);

 private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

Formula make(Kind kind, std::vector<std::string> vars, std::vector<Formula> children);

Formula atom(std::vector<std::string> args);
Formula eq(std::string x, std::string y);
Formula neq(std::string x, std::string y);
Formula lnot(Formula f);
/// A single operand is returned unchanged. Throws DomainError when empty.
Formula land(std::vector<Formula> operands);
Formula lor(std::vector<Formula> operands);
Formula implies(Formula lhs, Formula rhs);
Formula exists(std::string var, Formula body);
Formula forall(std::string var, Formula body);
/// Nested quantifiers, outermost first.
Formula exists(const std::vector<std::string>& vars, Formula body);
Formula forall(const std::vector<std::string>& vars, Formula body);

int quantifier_depth(const Formula& f);
std::set<std::string> free_variables(const Formula& f);
/// Total number of nodes.
std::size_t size(const Formula& f);

/// Canonical text, re-parsable by `parse`.
std::string print(const Formula& f);

/// Grammar: quantifiers `exists x` / `forall x` (binding as far right as
/// possible), `->` (right associative), `|`, `&`, `!`, `N(x,...)`, `x = y`,
/// parentheses. With `arity` set every N atom must have that many arguments;
/// otherwise all N atoms must agree. Throws ParseError.
Formula parse(const std::string& text, int arity = 0);

}  // namespace hyperlab::fo
