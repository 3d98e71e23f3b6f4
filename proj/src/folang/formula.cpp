#include "hyperlab/folang/formula.hpp"

#include <algorithm>

#include "hyperlab/hypercore/errors.hpp"

namespace hyperlab::fo {

Formula make(Kind kind, std::vector<std::string> vars, std::vector<Formula> children) {
  return Formula(std::make_shared<const Node>(Node{kind, std::move(vars), std::move(children)}));
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  return kind() == other.kind() && vars() == other.vars() && children() == other.children();
}

Formula atom(std::vector<std::string> args) {
  if (args.empty()) throw DomainError("N atom needs arguments");
  return make(Kind::Atom, std::move(args), {});
}

Formula eq(std::string x, std::string y) { return make(Kind::Equal, {std::move(x), std::move(y)}, {}); }

Formula neq(std::string x, std::string y) { return lnot(eq(std::move(x), std::move(y))); }

Formula lnot(Formula f) { return make(Kind::Not, {}, {std::move(f)}); }

Formula land(std::vector<Formula> operands) {
  if (operands.empty()) throw DomainError("empty conjunction");
  if (operands.size() == 1) return operands.front();
  return make(Kind::And, {}, std::move(operands));
}

Formula lor(std::vector<Formula> operands) {
  if (operands.empty()) throw DomainError("empty disjunction");
  if (operands.size() == 1) return operands.front();
  return make(Kind::Or, {}, std::move(operands));
}

Formula implies(Formula lhs, Formula rhs) { return make(Kind::Implies, {}, {std::move(lhs), std::move(rhs)}); }

Formula exists(std::string var, Formula body) { return make(Kind::Exists, {std::move(var)}, {std::move(body)}); }

Formula forall(std::string var, Formula body) { return make(Kind::Forall, {std::move(var)}, {std::move(body)}); }

Formula exists(const std::vector<std::string>& vars, Formula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = exists(*it, std::move(body));
  return body;
}

Formula forall(const std::vector<std::string>& vars, Formula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = forall(*it, std::move(body));
  return body;
}

int quantifier_depth(const Formula& f) {
  int deepest = 0;
  for (const auto& c : f.children()) deepest = std::max(deepest, quantifier_depth(c));
  if (f.kind() == Kind::Exists || f.kind() == Kind::Forall) ++deepest;
  return deepest;
}

namespace {

void collect_free(const Formula& f, std::multiset<std::string>& bound, std::set<std::string>& out) {
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::Equal:
      for (const auto& v : f.vars())
        if (!bound.count(v)) out.insert(v);
      return;
    case Kind::Exists:
    case Kind::Forall: {
      auto it = bound.insert(f.bound());
      collect_free(f.child(), bound, out);
      bound.erase(it);
      return;
    }
    default:
      for (const auto& c : f.children()) collect_free(c, bound, out);
  }
}

}  // namespace

std::set<std::string> free_variables(const Formula& f) {
  std::multiset<std::string> bound;
  std::set<std::string> out;
  collect_free(f, bound, out);
  return out;
}

std::size_t size(const Formula& f) {
  std::size_t total = 1;
  for (const auto& c : f.children()) total += size(c);
  return total;
}

namespace {

// Binding strength: quantifiers < -> < | < & < unary.
int level(Kind k) {
  switch (k) {
    case Kind::Exists:
    case Kind::Forall:
      return 0;
    case Kind::Implies:
      return 1;
    case Kind::Or:
      return 2;
    case Kind::And:
      return 3;
    default:
      return 4;
  }
}

void print_to(const Formula& f, int required, std::string& out) {
  const bool paren = level(f.kind()) < required;
  if (paren) out += '(';
  switch (f.kind()) {
    case Kind::Atom:
      out += "N(";
      for (std::size_t i = 0; i < f.vars().size(); ++i) {
        if (i) out += ',';
        out += f.vars()[i];
      }
      out += ')';
      break;
    case Kind::Equal:
      out += f.vars()[0] + " = " + f.vars()[1];
      break;
    case Kind::Not:
      out += '!';
      if (f.child().kind() == Kind::Equal) {
        out += '(';
        print_to(f.child(), 0, out);
        out += ')';
      } else {
        print_to(f.child(), 4, out);
      }
      break;
    case Kind::And:
    case Kind::Or: {
      const char* sep = f.kind() == Kind::And ? " & " : " | ";
      const int child_level = f.kind() == Kind::And ? 4 : 3;
      for (std::size_t i = 0; i < f.children().size(); ++i) {
        if (i) out += sep;
        print_to(f.children()[i], child_level, out);
      }
      break;
    }
    case Kind::Implies:
      print_to(f.child(0), 2, out);
      out += " -> ";
      print_to(f.child(1), 1, out);
      break;
    case Kind::Exists:
    case Kind::Forall:
      out += f.kind() == Kind::Exists ? "exists " : "forall ";
      out += f.bound();
      out += ' ';
      print_to(f.child(), 0, out);
      break;
  }
  if (paren) out += ')';
}

}  // namespace

std::string print(const Formula& f) {
  std::string out;
  print_to(f, 0, out);
  return out;
}

}  // namespace hyperlab::fo
