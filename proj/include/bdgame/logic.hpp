#pragma once

// Propositional vocabulary, formulas, and classical entailment by model
// enumeration.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace bdg {

using AtomId = std::uint32_t;
using AtomMask = std::uint64_t;

struct Atom {
  std::string name;
  // Owning agent for decision atoms; empty for world atoms.
  std::optional<std::string> owner;

  bool is_world() const { return !owner.has_value(); }
  friend bool operator==(const Atom&, const Atom&) = default;
};

// Immutable atom table. Ids are assigned in name order, so comparing ids
// compares names.
class Vocabulary {
 public:
  static constexpr std::size_t kHardLimit = 64;
  static constexpr std::size_t kDefaultBound = 24;

  Vocabulary() = default;
  explicit Vocabulary(std::vector<Atom> atoms,
                      std::size_t bound = kDefaultBound);

  std::size_t size() const { return atoms_.size(); }
  const Atom& atom(AtomId id) const { return atoms_.at(id); }
  const std::vector<Atom>& atoms() const { return atoms_; }
  std::optional<AtomId> find(std::string_view name) const;

  AtomMask world_mask() const { return world_mask_; }
  AtomMask agent_mask(std::string_view agent) const;

  // Model-enumeration cap; entailment refuses vocabularies larger than this.
  std::size_t bound() const { return bound_; }
  Vocabulary with_bound(std::size_t bound) const;
  void check_bound() const;

  friend bool operator==(const Vocabulary& a, const Vocabulary& b) {
    return a.atoms_ == b.atoms_ && a.bound_ == b.bound_;
  }

 private:
  std::vector<Atom> atoms_;
  std::map<std::string, AtomId, std::less<>> index_;
  AtomMask world_mask_ = 0;
  std::size_t bound_ = kDefaultBound;
};

// Immutable propositional formula with structural equality. The canonical
// text (minimal parentheses) is computed once at construction and doubles as
// the identity of the formula.
class Formula {
 public:
  enum class Kind { kTrue, kFalse, kAtom, kNot, kAnd, kOr, kImplies };

  Formula();  // true

  static Formula top();
  static Formula bottom();
  static Formula atom(AtomId id, std::string name);
  static Formula negation(Formula operand);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);

  Kind kind() const { return node_->kind; }
  AtomId atom_id() const { return node_->atom; }
  Formula operand() const { return Formula(node_->lhs); }
  Formula lhs() const { return Formula(node_->lhs); }
  Formula rhs() const { return Formula(node_->rhs); }

  AtomMask atoms() const { return node_->mask; }
  const std::string& str() const { return node_->text; }

  // Truth value under the assignment whose bit i is the value of atom i.
  bool evaluate(AtomMask assignment) const;

  friend bool operator==(const Formula& a, const Formula& b) {
    return a.node_ == b.node_ || a.node_->text == b.node_->text;
  }
  // Orders by atom text ignoring leading negations, so p and !p sort together.
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind = Kind::kTrue;
    AtomId atom = 0;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
    AtomMask mask = 0;
    std::string text;
    std::size_t sort_offset = 0;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Kind kind, const Formula* lhs, const Formula* rhs);
  static bool eval(const Node* n, AtomMask assignment);

  std::shared_ptr<const Node> node_;
};

using FormulaSet = std::set<Formula>;

Formula parse_formula(std::string_view text, const Vocabulary& vocabulary);
std::string to_string(const FormulaSet& set);

// Premises are read conjunctively. Throws VocabularyOverflow when the
// vocabulary is larger than its bound.
bool entails(const FormulaSet& premises, const Formula& conclusion,
             const Vocabulary& vocabulary);
bool consistent(const FormulaSet& premises, const Vocabulary& vocabulary);

class Language {
 public:
  static Language agent(std::string id) { return Language(Kind::kAgent, id); }
  static Language world() { return Language(Kind::kWorld, {}); }
  static Language any() { return Language(Kind::kAny, {}); }

  bool contains(const Formula& f, const Vocabulary& vocabulary) const;

 private:
  enum class Kind { kAgent, kWorld, kAny };
  Language(Kind kind, std::string agent)
      : kind_(kind), agent_(std::move(agent)) {}
  Kind kind_;
  std::string agent_;
};

inline bool in_sublanguage(const Formula& f, const Language& language,
                           const Vocabulary& vocabulary) {
  return language.contains(f, vocabulary);
}

}  // namespace bdg
