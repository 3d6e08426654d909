#pragma once

// Valuation frames, evaluation of unit-chain expansions, and the
// exhaustive frame-enumeration oracle for validity/satisfiability.
//
// A frame realizes the local interpretation I(prefix, s). I depends
// only on the prefix *length* and s (the synchronization condition), so
// a frame stores one truth assignment per level, indexed 0..depth.
// top is 1 and bot is 0 at every level, and a complemented literal
// reads as the flipped positive entry; none of the three is ever
// stored, so those constraints cannot be violated. A chain is true
// iff every element is true at its own level (the global
// interpretation J conjoins I along the chain).

#include "gradual/core.hpp"
#include "gradual/reduce.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace gradual {

class FrameFormatError : public Error {
public:
  explicit FrameFormatError(const std::string& what) : Error(what) {}
};

class ValuationFrame {
public:
  ValuationFrame() : levels_(1) {}
  explicit ValuationFrame(std::vector<std::map<AtomName, bool>> levels) : levels_(std::move(levels)) {
    if (levels_.empty()) throw Error("a frame has at least one level");
  }

  std::size_t depth() const { return levels_.size() - 1; }
  const std::vector<std::map<AtomName, bool>>& levels() const { return levels_; }

  /// I(level, s); atoms without an entry read as false.
  int value(std::size_t level, const SElem& s) const {
    if (level >= levels_.size()) throw DepthError("level " + std::to_string(level) + " beyond frame depth");
    switch (s.kind) {
      case SElem::Kind::Top: return 1;
      case SElem::Kind::Bot: return 0;
      case SElem::Kind::Lit: {
        auto it = levels_[level].find(s.name);
        bool v = it != levels_[level].end() && it->second;
        return (v != s.negated) ? 1 : 0;
      }
    }
    throw Error("unreachable");
  }

  friend bool operator==(const ValuationFrame& a, const ValuationFrame& b) {
    return a.levels_ == b.levels_;
  }

private:
  std::vector<std::map<AtomName, bool>> levels_;
};

/// J along a unit chain: 1 iff every element holds at its level.
inline int eval_chain(const ValuationFrame& m, const UnitChain& u) {
  if (u.size() > m.depth() + 1)
    throw DepthError("chain of length " + std::to_string(u.size()) + " exceeds frame depth " +
                     std::to_string(m.depth()));
  for (std::size_t i = 0; i < u.size(); ++i)
    if (m.value(i, u[i]) == 0) return 0;
  return 1;
}

namespace detail {

inline int eval_uce(const ValuationFrame& m, const Formula& f) {
  switch (f.op()) {
    case Op::Elem: return m.value(0, f.leaf());
    case Op::And: return eval_uce(m, f.left()) & eval_uce(m, f.right());
    case Op::Or: return eval_uce(m, f.left()) | eval_uce(m, f.right());
    case Op::Grad: {
      std::size_t level = 0;
      const Formula* cur = &f;
      while (cur->is(Op::Grad)) {
        if (level > m.depth()) throw DepthError("chain exceeds frame depth");
        if (m.value(level, cur->left().leaf()) == 0) return 0;
        ++level;
        cur = &cur->right();
      }
      if (level > m.depth()) throw DepthError("chain exceeds frame depth");
      return m.value(level, cur->leaf());
    }
    case Op::Not: throw Error("unreachable");
  }
  throw Error("unreachable");
}

} // namespace detail

/// Evaluate a unit-chain expansion under a frame covering its depth.
inline int eval(const ValuationFrame& m, const Formula& f) {
  if (!is_unit_chain_expansion(f)) throw NotUnitChainError("eval: input not in unit chain expansion");
  return detail::eval_uce(m, f);
}

/// All frames over a finite atom set at a fixed depth, enumerated in a
/// fixed lexicographic order: tuple positions run levels-outer /
/// sorted-atoms-inner, position 0 is the most significant bit, and
/// false sorts before true. Index 0 is the all-false frame.
class FrameUniverse {
public:
  static constexpr std::size_t kMaxBits = 24;

  FrameUniverse(const std::set<AtomName>& atoms, std::size_t depth)
      : atoms_(atoms.begin(), atoms.end()), depth_(depth) {
    bits_ = atoms_.size() * (depth_ + 1);
    if (bits_ > kMaxBits)
      throw UniverseTooLargeError("frame universe needs " + std::to_string(bits_) +
                                  " bits (cap " + std::to_string(kMaxBits) + ")");
  }

  std::uint64_t count() const { return std::uint64_t{1} << bits_; }
  std::size_t depth() const { return depth_; }
  const std::vector<AtomName>& atoms() const { return atoms_; }

  ValuationFrame frame(std::uint64_t index) const {
    std::vector<std::map<AtomName, bool>> levels(depth_ + 1);
    std::size_t pos = 0;
    for (std::size_t lvl = 0; lvl <= depth_; ++lvl)
      for (const AtomName& a : atoms_) {
        levels[lvl][a] = ((index >> (bits_ - 1 - pos)) & 1) != 0;
        ++pos;
      }
    return ValuationFrame(std::move(levels));
  }

private:
  std::vector<AtomName> atoms_;
  std::size_t depth_;
  std::size_t bits_;
};

enum class VerdictClass { Valid, Unsatisfiable, Contingent };

inline const char* to_string(VerdictClass c) {
  switch (c) {
    case VerdictClass::Valid: return "valid";
    case VerdictClass::Unsatisfiable: return "unsatisfiable";
    case VerdictClass::Contingent: return "contingent";
  }
  return "?";
}

struct Verdict {
  VerdictClass cls = VerdictClass::Contingent;
  std::optional<ValuationFrame> witness_true;  // lexicographically first
  std::optional<ValuationFrame> witness_false; // lexicographically first
};

/// Ground truth: reduce to unit-chain expansion, then evaluate under
/// every frame over the formula's own atoms at its own depth. Atoms
/// outside the formula cannot change any evaluation (the semantics is
/// homomorphic and chains only read their own elements), so validity
/// over all frames coincides with validity over this restricted set.
inline Verdict classify_oracle(const Formula& f) {
  Formula uce = reduce(f);
  FrameUniverse universe(atom_names(uce), max_object_level(uce));
  Verdict v;
  bool all_true = true, all_false = true;
  for (std::uint64_t i = 0; i < universe.count(); ++i) {
    ValuationFrame m = universe.frame(i);
    if (detail::eval_uce(m, uce)) {
      all_false = false;
      if (!v.witness_true) v.witness_true = std::move(m);
    } else {
      all_true = false;
      if (!v.witness_false) v.witness_false = std::move(m);
    }
  }
  if (all_true) {
    v.cls = VerdictClass::Valid;
    v.witness_false.reset();
  } else if (all_false) {
    v.cls = VerdictClass::Unsatisfiable;
    v.witness_true.reset();
  } else {
    v.cls = VerdictClass::Contingent;
  }
  return v;
}

// ---------------------------------------------------------------------------
// Frame file format: {"levels":[{"hat":true},{"yellow":false}]}.
// Atoms absent from a level default to false. Keys must be plain atom
// names: complemented literals and top/bot are derived values and are
// rejected.
// ---------------------------------------------------------------------------

inline nlohmann::json frame_to_json(const ValuationFrame& m) {
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& lvl : m.levels()) {
    nlohmann::json o = nlohmann::json::object();
    for (const auto& [name, val] : lvl) o[name] = val;
    levels.push_back(std::move(o));
  }
  return nlohmann::json{{"levels", std::move(levels)}};
}

inline ValuationFrame frame_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("levels") || !j["levels"].is_array() || j["levels"].empty())
    throw FrameFormatError("frame document needs a non-empty \"levels\" array");
  std::vector<std::map<AtomName, bool>> levels;
  for (const auto& lvl : j["levels"]) {
    if (!lvl.is_object()) throw FrameFormatError("each level must be an object of atom entries");
    std::map<AtomName, bool> entries;
    for (auto it = lvl.begin(); it != lvl.end(); ++it) {
      const std::string& key = it.key();
      if (key == kTopToken || key == kBotToken)
        throw FrameFormatError("level entry '" + key + "' is reserved; top/bot values are fixed");
      if (!is_valid_atom_name(key))
        throw FrameFormatError("level entry '" + key + "' is not a plain atom name");
      if (!it.value().is_boolean())
        throw FrameFormatError("level entry '" + key + "' must be a boolean");
      entries[key] = it.value().get<bool>();
    }
    levels.push_back(std::move(entries));
  }
  return ValuationFrame(std::move(levels));
}

inline ValuationFrame frame_from_text(std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw FrameFormatError("malformed frame document");
  return frame_from_json(j);
}

} // namespace gradual
