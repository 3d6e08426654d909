#pragma once

// Concrete syntax, pretty-printer, and the JSON interchange tree.
//
// Grammar (ASCII):
//   atoms       identifiers; a trailing ' complements (p' is the
//               complement literal of p); `top` / `bot` are the nullaries
//   !           not        (tightest)
//   & |         and / or   (equal precedence, individually left-associative;
//                           mixing & and | at one level requires parentheses)
//   >           object/attribute, right-associative
//   ->          implication sugar, weakest, right-associative;
//               F1 -> F2 parses as !F1 | F2 and never appears in the AST

#include "gradual/core.hpp"

#include <json.hpp>

#include <cctype>
#include <string>
#include <variant>
#include <vector>

namespace gradual {

struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class ParseCode { E_LEX, E_PAREN, E_AMBIGUOUS, E_EMPTY, E_RESERVED };

inline const char* to_string(ParseCode c) {
  switch (c) {
    case ParseCode::E_LEX: return "E_LEX";
    case ParseCode::E_PAREN: return "E_PAREN";
    case ParseCode::E_AMBIGUOUS: return "E_AMBIGUOUS";
    case ParseCode::E_EMPTY: return "E_EMPTY";
    case ParseCode::E_RESERVED: return "E_RESERVED";
  }
  return "?";
}

struct ParseError {
  SourceSpan span;
  ParseCode code = ParseCode::E_LEX;
  std::string message;
};

/// Either a formula or the first error encountered.
class ParseResult {
public:
  ParseResult(Formula f) : v_(std::move(f)) {}
  ParseResult(ParseError e) : v_(std::move(e)) {}

  bool ok() const { return std::holds_alternative<Formula>(v_); }
  explicit operator bool() const { return ok(); }
  const Formula& value() const { return std::get<Formula>(v_); }
  const ParseError& error() const { return std::get<ParseError>(v_); }

private:
  std::variant<Formula, ParseError> v_;
};

namespace detail {

enum class Tok { Atom, Top, Bot, Not, And, Or, Grad, Implies, LParen, RParen, End };

struct Token {
  Tok kind;
  SourceSpan span;
  std::string text;  // Atom only; complement marks already folded in
  bool negated = false;
};

struct Lexer {
  std::string_view src;
  std::size_t pos = 0;
  std::vector<Token> out;
  std::optional<ParseError> err;

  void fail(ParseCode code, std::size_t b, std::size_t e, std::string msg) {
    if (!err) err = ParseError{{b, e}, code, std::move(msg)};
  }

  void run() {
    while (pos < src.size() && !err) {
      char c = src[pos];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
        continue;
      }
      std::size_t b = pos;
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
          ++pos;
        std::string word(src.substr(b, pos - b));
        if (word == kTopToken) {
          out.push_back({Tok::Top, {b, pos}, {}, false});
        } else if (word == kBotToken) {
          out.push_back({Tok::Bot, {b, pos}, {}, false});
        } else {
          bool neg = false;
          while (pos < src.size() && src[pos] == '\'') {
            neg = !neg;
            ++pos;
          }
          out.push_back({Tok::Atom, {b, pos}, std::move(word), neg});
        }
        continue;
      }
      switch (c) {
        case '!': out.push_back({Tok::Not, {b, b + 1}, {}, false}); ++pos; break;
        case '&': out.push_back({Tok::And, {b, b + 1}, {}, false}); ++pos; break;
        case '|': out.push_back({Tok::Or, {b, b + 1}, {}, false}); ++pos; break;
        case '>': out.push_back({Tok::Grad, {b, b + 1}, {}, false}); ++pos; break;
        case '(': out.push_back({Tok::LParen, {b, b + 1}, {}, false}); ++pos; break;
        case ')': out.push_back({Tok::RParen, {b, b + 1}, {}, false}); ++pos; break;
        case '-':
          if (pos + 1 < src.size() && src[pos + 1] == '>') {
            out.push_back({Tok::Implies, {b, b + 2}, {}, false});
            pos += 2;
          } else {
            fail(ParseCode::E_LEX, b, b + 1, "stray '-' (expected '->')");
          }
          break;
        default:
          fail(ParseCode::E_LEX, b, b + 1, std::string("unknown character '") + c + "'");
      }
    }
    out.push_back({Tok::End, {src.size(), src.size()}, {}, false});
  }
};

struct Parser {
  const std::vector<Token>& toks;
  std::size_t i = 0;
  std::optional<ParseError> err;

  const Token& peek() const { return toks[i]; }
  const Token& take() { return toks[i++]; }

  void fail(ParseCode code, const Token& t, std::string msg) {
    if (!err) err = ParseError{t.span, code, std::move(msg)};
  }

  // implication (weakest, right-associative); desugars on the spot
  Formula implication() {
    Formula lhs = gradation();
    if (err) return lhs;
    if (peek().kind == Tok::Implies) {
      take();
      Formula rhs = implication();
      if (err) return lhs;
      return Formula::disj(Formula::neg(std::move(lhs)), std::move(rhs));
    }
    return lhs;
  }

  // `>` layer, right-associative
  Formula gradation() {
    Formula lhs = junction();
    if (err) return lhs;
    if (peek().kind == Tok::Grad) {
      take();
      Formula rhs = gradation();
      if (err) return lhs;
      return Formula::grad(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  // homogeneous & / | chains; mixing without parentheses is ambiguous
  Formula junction() {
    Formula acc = unary();
    if (err) return acc;
    std::optional<Tok> seen;
    while (peek().kind == Tok::And || peek().kind == Tok::Or) {
      Tok op = peek().kind;
      if (seen && *seen != op) {
        fail(ParseCode::E_AMBIGUOUS, peek(),
             "mixing '&' and '|' at the same level; add parentheses");
        return acc;
      }
      seen = op;
      take();
      Formula rhs = unary();
      if (err) return acc;
      acc = (op == Tok::And) ? Formula::conj(std::move(acc), std::move(rhs))
                             : Formula::disj(std::move(acc), std::move(rhs));
    }
    return acc;
  }

  Formula unary() {
    if (peek().kind == Tok::Not) {
      take();
      Formula f = unary();
      if (err) return f;
      return Formula::neg(std::move(f));
    }
    return primary();
  }

  Formula primary() {
    const Token& t = take();
    switch (t.kind) {
      case Tok::Atom: return Formula::lit(t.text, t.negated);
      case Tok::Top: return Formula::top();
      case Tok::Bot: return Formula::bot();
      case Tok::LParen: {
        Formula f = implication();
        if (err) return f;
        if (peek().kind != Tok::RParen) {
          fail(ParseCode::E_PAREN, peek(), "expected ')'");
          return f;
        }
        take();
        return f;
      }
      case Tok::RParen:
        fail(ParseCode::E_PAREN, t, "unexpected ')'");
        return Formula::top();
      case Tok::End:
        fail(ParseCode::E_LEX, t, "unexpected end of input");
        return Formula::top();
      default:
        fail(ParseCode::E_LEX, t, "unexpected token");
        return Formula::top();
    }
  }
};

} // namespace detail

inline ParseResult parse(std::string_view text) {
  bool blank = true;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) {
      blank = false;
      break;
    }
  if (blank) return ParseError{{0, 0}, ParseCode::E_EMPTY, "empty input"};

  detail::Lexer lex{text};
  lex.run();
  if (lex.err) return *lex.err;

  detail::Parser p{lex.out};
  Formula f = p.implication();
  if (p.err) return *p.err;
  if (p.peek().kind != detail::Tok::End) {
    const auto& t = p.peek();
    if (t.kind == detail::Tok::RParen)
      return ParseError{t.span, ParseCode::E_PAREN, "unmatched ')'"};
    return ParseError{t.span, ParseCode::E_LEX, "trailing input after formula"};
  }
  return f;
}

namespace detail {

inline std::string render_elem(const SElem& s) {
  switch (s.kind) {
    case SElem::Kind::Top: return std::string(kTopToken);
    case SElem::Kind::Bot: return std::string(kBotToken);
    case SElem::Kind::Lit: return s.negated ? s.name + "'" : s.name;
  }
  return "?";
}

// Binding strength used for minimal parenthesisation; higher binds tighter.
inline int prec(Op op) {
  switch (op) {
    case Op::Elem: return 4;
    case Op::Not: return 3;
    case Op::And:
    case Op::Or: return 2;
    case Op::Grad: return 1;
  }
  return 0;
}

inline void render(const Formula& f, std::string& out) {
  auto bracket = [&](const Formula& g, bool need) {
    if (need) out += '(';
    render(g, out);
    if (need) out += ')';
  };
  switch (f.op()) {
    case Op::Elem:
      out += render_elem(f.leaf());
      break;
    case Op::Not:
      out += '!';
      bracket(f.child(), prec(f.child().op()) < prec(Op::Not));
      break;
    case Op::And:
    case Op::Or: {
      // left-associative; a same-op left child flattens, everything
      // else at or below this precedence is bracketed (so & and |
      // never mix visibly without parentheses)
      bool lneed = prec(f.left().op()) < prec(Op::And) ||
                   (prec(f.left().op()) == prec(Op::And) && f.left().op() != f.op());
      bool rneed = prec(f.right().op()) <= prec(Op::And);
      bracket(f.left(), lneed);
      out += (f.op() == Op::And) ? " & " : " | ";
      bracket(f.right(), rneed);
      break;
    }
    case Op::Grad:
      // right-associative
      bracket(f.left(), prec(f.left().op()) <= prec(Op::Grad));
      out += " > ";
      bracket(f.right(), prec(f.right().op()) < prec(Op::Grad));
      break;
  }
}

} // namespace detail

/// Minimal-parenthesis rendering; parse(pretty(f)) == f structurally.
inline std::string pretty(const Formula& f) {
  std::string out;
  detail::render(f, out);
  return out;
}

inline std::string pretty(const SElem& s) { return detail::render_elem(s); }

inline std::string pretty(const UnitChain& u) { return pretty(u.to_formula()); }

// ---------------------------------------------------------------------------
// Interchange tree: {"op":"and"|"or"|"not"|"grad","args":[...]} with
// leaves {"op":"elem","kind":"top"|"bot"|"lit","name":...,"neg":bool}.
// ---------------------------------------------------------------------------

namespace detail {

inline nlohmann::json to_json_tree(const Formula& f) {
  using nlohmann::json;
  switch (f.op()) {
    case Op::Elem: {
      const SElem& s = f.leaf();
      json j{{"op", "elem"}};
      switch (s.kind) {
        case SElem::Kind::Top: j["kind"] = "top"; break;
        case SElem::Kind::Bot: j["kind"] = "bot"; break;
        case SElem::Kind::Lit:
          j["kind"] = "lit";
          j["name"] = s.name;
          j["neg"] = s.negated;
          break;
      }
      return j;
    }
    case Op::Not: return {{"op", "not"}, {"args", {to_json_tree(f.child())}}};
    case Op::And: return {{"op", "and"}, {"args", {to_json_tree(f.left()), to_json_tree(f.right())}}};
    case Op::Or: return {{"op", "or"}, {"args", {to_json_tree(f.left()), to_json_tree(f.right())}}};
    case Op::Grad: return {{"op", "grad"}, {"args", {to_json_tree(f.left()), to_json_tree(f.right())}}};
  }
  throw Error("unreachable");
}

inline Formula from_json_tree(const nlohmann::json& j, ParseError& err, bool& bad) {
  auto fail = [&](ParseCode code, const std::string& msg) {
    if (!bad) err = ParseError{{0, 0}, code, msg};
    bad = true;
    return Formula::top();
  };
  if (bad) return Formula::top();
  if (!j.is_object() || !j.contains("op") || !j["op"].is_string())
    return fail(ParseCode::E_LEX, "interchange node must be an object with an \"op\" string");
  const std::string op = j["op"].get<std::string>();
  if (op == "elem") {
    if (!j.contains("kind") || !j["kind"].is_string())
      return fail(ParseCode::E_LEX, "elem node needs a \"kind\" string");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "top") return Formula::top();
    if (kind == "bot") return Formula::bot();
    if (kind != "lit") return fail(ParseCode::E_LEX, "unknown elem kind '" + kind + "'");
    if (!j.contains("name") || !j["name"].is_string())
      return fail(ParseCode::E_LEX, "lit node needs a \"name\" string");
    const std::string name = j["name"].get<std::string>();
    bool neg = false;
    if (j.contains("neg")) {
      if (!j["neg"].is_boolean()) return fail(ParseCode::E_LEX, "\"neg\" must be a boolean");
      neg = j["neg"].get<bool>();
    }
    if (name == kTopToken || name == kBotToken)
      return fail(ParseCode::E_RESERVED, "atom name '" + name + "' is reserved");
    if (!is_valid_atom_name(name)) return fail(ParseCode::E_LEX, "invalid atom name '" + name + "'");
    return Formula::lit(name, neg);
  }
  std::size_t arity = (op == "not") ? 1 : 2;
  if (op != "not" && op != "and" && op != "or" && op != "grad")
    return fail(ParseCode::E_LEX, "unknown op '" + op + "'");
  if (!j.contains("args") || !j["args"].is_array() || j["args"].size() != arity)
    return fail(ParseCode::E_LEX, "\"" + op + "\" needs " + std::to_string(arity) + " args");
  Formula a = from_json_tree(j["args"][0], err, bad);
  if (bad) return a;
  if (op == "not") return Formula::neg(std::move(a));
  Formula b = from_json_tree(j["args"][1], err, bad);
  if (bad) return b;
  if (op == "and") return Formula::conj(std::move(a), std::move(b));
  if (op == "or") return Formula::disj(std::move(a), std::move(b));
  return Formula::grad(std::move(a), std::move(b));
}

} // namespace detail

inline std::string to_interchange(const Formula& f) { return detail::to_json_tree(f).dump(); }

inline ParseResult from_interchange(std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded())
    return ParseError{{0, text.size()}, ParseCode::E_LEX, "malformed interchange document"};
  ParseError err;
  bool bad = false;
  Formula f = detail::from_json_tree(j, err, bad);
  if (bad) {
    err.span = {0, text.size()};
    return err;
  }
  return f;
}

} // namespace gradual
