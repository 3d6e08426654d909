#pragma once

// Formula AST for gradual classical logic: atoms with structural
// complements, the nullary connectives top/bot, the usual and/or/not,
// and the object/attribute connective `>` (written ⋗ in math notation).
// Everything here is an immutable value; trees share subterms freely.

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gradual {

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown by operations whose precondition is a unit-chain expansion.
class NotUnitChainError : public Error {
public:
  explicit NotUnitChainError(const std::string& what) : Error(what) {}
};

/// Thrown when a chain is deeper than the frame evaluating it (E_DEPTH).
class DepthError : public Error {
public:
  explicit DepthError(const std::string& what) : Error(what) {}
};

/// Thrown when a frame universe would exceed the enumeration cap (E_TOO_LARGE).
class UniverseTooLargeError : public Error {
public:
  explicit UniverseTooLargeError(const std::string& what) : Error(what) {}
};

using AtomName = std::string;

inline constexpr std::string_view kTopToken = "top";
inline constexpr std::string_view kBotToken = "bot";

/// Atom names are identifiers: [A-Za-z_][A-Za-z0-9_]*, case-sensitive,
/// and never one of the reserved tokens `top`/`bot`.
inline bool is_valid_atom_name(std::string_view name) {
  if (name.empty() || name == kTopToken || name == kBotToken) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(name.front())) return false;
  for (char c : name)
    if (!alpha(c) && !digit(c)) return false;
  return true;
}

/// An element of S: a literal with polarity, or top, or bot.
/// Complemented literals are the same atom with the polarity bit flipped,
/// so complement() is involutive by construction.
struct SElem {
  enum class Kind { Top, Bot, Lit };

  Kind kind = Kind::Top;
  AtomName name;        // Lit only
  bool negated = false; // Lit only

  static SElem top() { return SElem{Kind::Top, {}, false}; }
  static SElem bot() { return SElem{Kind::Bot, {}, false}; }
  static SElem lit(AtomName n, bool neg = false) {
    if (!is_valid_atom_name(n)) throw Error("invalid atom name: '" + n + "'");
    return SElem{Kind::Lit, std::move(n), neg};
  }

  bool is_lit() const { return kind == Kind::Lit; }

  SElem complement() const {
    switch (kind) {
      case Kind::Top: return bot();
      case Kind::Bot: return top();
      case Kind::Lit: return SElem{Kind::Lit, name, !negated};
    }
    throw Error("unreachable");
  }

  friend bool operator==(const SElem& a, const SElem& b) {
    if (a.kind != b.kind) return false;
    if (a.kind != Kind::Lit) return true;
    return a.name == b.name && a.negated == b.negated;
  }
  friend bool operator!=(const SElem& a, const SElem& b) { return !(a == b); }
};

inline SElem complement(const SElem& s) { return s.complement(); }

enum class Op { Elem, And, Or, Not, Grad };

namespace detail {
struct FormulaNode;
}

/// A formula is a cheap value handle onto an immutable shared tree.
/// Structural equality is node-wise; nothing is reassociated or
/// commuted implicitly.
class Formula {
public:
  Formula() = default; // empty handle; only valid after assignment

  static Formula elem(SElem s);
  static Formula top() { return elem(SElem::top()); }
  static Formula bot() { return elem(SElem::bot()); }
  static Formula lit(AtomName n, bool neg = false) { return elem(SElem::lit(std::move(n), neg)); }
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);
  static Formula neg(Formula f);
  /// object ⋗ attribute
  static Formula grad(Formula object, Formula attribute);

  Op op() const;
  bool is(Op o) const { return op() == o; }

  const SElem& leaf() const;
  const Formula& left() const;
  const Formula& right() const;
  const Formula& child() const;

  bool valid() const { return node_ != nullptr; }

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

private:
  static Formula make(Op op, SElem e, Formula l, Formula r);

  std::shared_ptr<const detail::FormulaNode> node_;
};

namespace detail {
struct FormulaNode {
  Op op;
  SElem elem;
  Formula l, r;
};
} // namespace detail

inline Formula Formula::make(Op op, SElem e, Formula l, Formula r) {
  Formula f;
  f.node_ = std::make_shared<const detail::FormulaNode>(
      detail::FormulaNode{op, std::move(e), std::move(l), std::move(r)});
  return f;
}

inline Formula Formula::elem(SElem s) { return make(Op::Elem, std::move(s), {}, {}); }
inline Formula Formula::conj(Formula l, Formula r) { return make(Op::And, {}, std::move(l), std::move(r)); }
inline Formula Formula::disj(Formula l, Formula r) { return make(Op::Or, {}, std::move(l), std::move(r)); }
inline Formula Formula::neg(Formula f) { return make(Op::Not, {}, std::move(f), {}); }
inline Formula Formula::grad(Formula object, Formula attribute) {
  return make(Op::Grad, {}, std::move(object), std::move(attribute));
}

inline Op Formula::op() const { return node_->op; }

inline const SElem& Formula::leaf() const {
  if (node_->op != Op::Elem) throw Error("not a leaf");
  return node_->elem;
}
inline const Formula& Formula::left() const {
  if (node_->op == Op::Elem) throw Error("leaf has no children");
  return node_->l;
}
inline const Formula& Formula::right() const {
  if (node_->op != Op::And && node_->op != Op::Or && node_->op != Op::Grad)
    throw Error("node has no right child");
  return node_->r;
}
inline const Formula& Formula::child() const {
  if (node_->op != Op::Not) throw Error("not a negation");
  return node_->l;
}

inline bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.node_->op != b.node_->op) return false;
  switch (a.node_->op) {
    case Op::Elem: return a.node_->elem == b.node_->elem;
    case Op::Not: return a.node_->l == b.node_->l;
    default: return a.node_->l == b.node_->l && a.node_->r == b.node_->r;
  }
}

/// Number of connectives and S-elements: 1 for leaves, both children
/// plus one for the binary connectives, child plus one for not.
inline std::size_t f_size(const Formula& f) {
  switch (f.op()) {
    case Op::Elem: return 1;
    case Op::Not: return f_size(f.child()) + 1;
    default: return f_size(f.left()) + f_size(f.right()) + 1;
  }
}

/// Deepest nesting of `not` along any root-to-leaf path.
inline std::size_t neg_max(const Formula& f) {
  switch (f.op()) {
    case Op::Elem: return 0;
    case Op::Not: return neg_max(f.child()) + 1;
    default: return std::max(neg_max(f.left()), neg_max(f.right()));
  }
}

namespace detail {
// A unit chain as a subterm: a right-nested `>` spine whose every
// element is an S-element leaf.
inline bool is_unit_chain_term(const Formula& f) {
  const Formula* cur = &f;
  while (cur->is(Op::Grad)) {
    if (!cur->left().is(Op::Elem)) return false;
    cur = &cur->right();
  }
  return cur->is(Op::Elem);
}
} // namespace detail

/// True iff every `>` in f heads a unit chain and no `not` occurs.
/// This is the evaluable normal form; reduction targets it.
inline bool is_unit_chain_expansion(const Formula& f) {
  switch (f.op()) {
    case Op::Elem: return true;
    case Op::Not: return false;
    case Op::And:
    case Op::Or: return is_unit_chain_expansion(f.left()) && is_unit_chain_expansion(f.right());
    case Op::Grad: return detail::is_unit_chain_term(f);
  }
  return false;
}

namespace detail {
inline std::size_t chain_length(const Formula& f) {
  std::size_t n = 1;
  const Formula* cur = &f;
  while (cur->is(Op::Grad)) {
    ++n;
    cur = &cur->right();
  }
  return n;
}
} // namespace detail

/// Largest position index reached by any unit chain (0 when chain-free).
/// The element at position k of a chain sits at the k-th object level.
inline std::size_t max_object_level(const Formula& f) {
  if (!is_unit_chain_expansion(f)) throw NotUnitChainError("max_object_level: input not in unit chain expansion");
  switch (f.op()) {
    case Op::Elem: return 0;
    case Op::Grad: return detail::chain_length(f) - 1;
    default: return std::max(max_object_level(f.left()), max_object_level(f.right()));
  }
}

/// Distinct atom names occurring in f, polarity-collapsed; top/bot excluded.
inline void collect_atom_names(const Formula& f, std::set<AtomName>& out) {
  switch (f.op()) {
    case Op::Elem:
      if (f.leaf().is_lit()) out.insert(f.leaf().name);
      break;
    case Op::Not:
      collect_atom_names(f.child(), out);
      break;
    default:
      collect_atom_names(f.left(), out);
      collect_atom_names(f.right(), out);
  }
}

inline std::set<AtomName> atom_names(const Formula& f) {
  std::set<AtomName> out;
  collect_atom_names(f, out);
  return out;
}

/// A unit chain s0 > s1 > ... > sk as a flat sequence, length >= 1.
/// Length-1 chains round-trip to a bare S-element leaf.
class UnitChain {
public:
  explicit UnitChain(std::vector<SElem> elems) : elems_(std::move(elems)) {
    if (elems_.empty()) throw Error("unit chain must have at least one element");
  }

  static std::optional<UnitChain> from_formula(const Formula& f) {
    std::vector<SElem> elems;
    const Formula* cur = &f;
    while (cur->is(Op::Grad)) {
      if (!cur->left().is(Op::Elem)) return std::nullopt;
      elems.push_back(cur->left().leaf());
      cur = &cur->right();
    }
    if (!cur->is(Op::Elem)) return std::nullopt;
    elems.push_back(cur->leaf());
    return UnitChain(std::move(elems));
  }

  Formula to_formula() const {
    Formula f = Formula::elem(elems_.back());
    for (std::size_t i = elems_.size() - 1; i-- > 0;)
      f = Formula::grad(Formula::elem(elems_[i]), std::move(f));
    return f;
  }

  std::size_t size() const { return elems_.size(); }
  const SElem& operator[](std::size_t i) const { return elems_[i]; }
  const std::vector<SElem>& elems() const { return elems_; }

  friend bool operator==(const UnitChain& a, const UnitChain& b) { return a.elems_ == b.elems_; }

private:
  std::vector<SElem> elems_;
};

/// A possibly empty sequence of S-elements; prefixes index local
/// interpretations by length only (see semantics.hpp).
struct Prefix {
  std::vector<SElem> elems;
  std::size_t length() const { return elems.size(); }
  friend bool operator==(const Prefix& a, const Prefix& b) { return a.elems == b.elems; }
};

} // namespace gradual
