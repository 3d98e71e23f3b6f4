#include <cctype>

#include "hyperlab/folang/formula.hpp"
#include "hyperlab/hypercore/errors.hpp"

namespace hyperlab::fo {

namespace {

enum class Tok { Ident, LParen, RParen, Comma, And, Or, Not, Eq, Arrow, End };

struct Token {
  Tok type;
  std::string text;
  std::size_t offset;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = i;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::Ident, s.substr(start, i - start), start});
      continue;
    }
    switch (c) {
      case '(': out.push_back({Tok::LParen, "(", i}); break;
      case ')': out.push_back({Tok::RParen, ")", i}); break;
      case ',': out.push_back({Tok::Comma, ",", i}); break;
      case '&': out.push_back({Tok::And, "&", i}); break;
      case '|': out.push_back({Tok::Or, "|", i}); break;
      case '!': out.push_back({Tok::Not, "!", i}); break;
      case '=': out.push_back({Tok::Eq, "=", i}); break;
      case '-':
        if (i + 1 < s.size() && s[i + 1] == '>') {
          out.push_back({Tok::Arrow, "->", i});
          ++i;
          break;
        }
        [[fallthrough]];
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

bool is_keyword(const std::string& id) { return id == "exists" || id == "forall" || id == "N"; }

class Parser {
 public:
  Parser(const std::string& text, int arity) : tokens_(lex(text)), arity_(arity) {}

  Formula run() {
    Formula f = formula();
    if (peek().type != Tok::End) throw ParseError("unexpected '" + peek().text + "'", peek().offset);
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_++]; }

  Token expect(Tok type, const char* what) {
    if (peek().type != type)
      throw ParseError(std::string("expected ") + what + (peek().type == Tok::End ? ", got end of input" : ", got '" + peek().text + "'"),
                       peek().offset);
    return take();
  }

  std::string variable() {
    const Token t = expect(Tok::Ident, "a variable");
    if (is_keyword(t.text)) throw ParseError("'" + t.text + "' is reserved", t.offset);
    return t.text;
  }

  Formula formula() {
    if (peek().type == Tok::Ident && (peek().text == "exists" || peek().text == "forall")) {
      const bool ex = take().text == "exists";
      std::string var = variable();
      Formula body = formula();
      return ex ? exists(std::move(var), std::move(body)) : forall(std::move(var), std::move(body));
    }
    return implication();
  }

  // Operands of binary connectives may themselves start with a quantifier,
  // which then extends to the end of the enclosing group.
  Formula operand(int level) {
    if (peek().type == Tok::Ident && (peek().text == "exists" || peek().text == "forall")) return formula();
    return level == 1 ? disjunction() : level == 2 ? conjunction() : unary();
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (peek().type != Tok::Arrow) return lhs;
    take();
    Formula rhs = peek().type == Tok::Ident && (peek().text == "exists" || peek().text == "forall")
                      ? formula()
                      : implication();
    return implies(std::move(lhs), std::move(rhs));
  }

  Formula disjunction() {
    std::vector<Formula> parts{conjunction()};
    while (peek().type == Tok::Or) {
      take();
      parts.push_back(operand(2));
    }
    return parts.size() == 1 ? parts.front() : make(Kind::Or, {}, std::move(parts));
  }

  Formula conjunction() {
    std::vector<Formula> parts{unary()};
    while (peek().type == Tok::And) {
      take();
      parts.push_back(operand(3));
    }
    return parts.size() == 1 ? parts.front() : make(Kind::And, {}, std::move(parts));
  }

  Formula unary() {
    const Token& t = peek();
    if (t.type == Tok::Not) {
      take();
      return lnot(operand(3));
    }
    if (t.type == Tok::LParen) {
      take();
      Formula inner = formula();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (t.type == Tok::Ident && t.text == "N") {
      const std::size_t at = t.offset;
      take();
      expect(Tok::LParen, "'(' after N");
      std::vector<std::string> args{variable()};
      while (peek().type == Tok::Comma) {
        take();
        args.push_back(variable());
      }
      expect(Tok::RParen, "')'");
      check_arity(static_cast<int>(args.size()), at);
      return atom(std::move(args));
    }
    if (t.type == Tok::Ident && (t.text == "exists" || t.text == "forall")) return formula();
    if (t.type == Tok::Ident) {
      std::string x = variable();
      expect(Tok::Eq, "'='");
      std::string y = variable();
      return eq(std::move(x), std::move(y));
    }
    throw ParseError(t.type == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'", t.offset);
  }

  void check_arity(int got, std::size_t at) {
    if (arity_ == 0) arity_ = got;
    if (got != arity_)
      throw ParseError("N has " + std::to_string(got) + " arguments, expected " + std::to_string(arity_), at);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int arity_;
};

}  // namespace

Formula parse(const std::string& text, int arity) { return Parser(text, arity).run(); }

}  // namespace hyperlab::fo
