#pragma once

// Rule extensions: the least superset of a theory closed under a rule set,
// where a rule fires once the current set entails its antecedent.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bdgame/logic.hpp"

namespace bdg {

enum class RuleKind { kBelief, kDesire };

struct Rule {
  std::string id;
  Formula antecedent;
  Formula consequent;
  RuleKind kind = RuleKind::kBelief;
  std::size_t owner = 0;  // agent index

  std::string str() const {
    return antecedent.str() + " => " + consequent.str();
  }
  friend bool operator==(const Rule&, const Rule&) = default;
};

struct Extension {
  FormulaSet base;
  FormulaSet derived;  // consequents not already in base
  int iterations = 0;  // rounds that added at least one formula
  bool consistent = true;

  FormulaSet all() const;
};

// {consequent(r) | r in rules, theory |= antecedent(r)}
FormulaSet applicable_consequents(std::span<const Rule> rules,
                                  const FormulaSet& theory,
                                  const Vocabulary& vocabulary);

Extension extension(std::span<const Rule> rules, const FormulaSet& base,
                    const Vocabulary& vocabulary);

// Independent check of `claimed` against the intersection of all rule-closed
// supersets of `base`. Exponential in the number of distinct consequents.
bool fixpoint_certificate(std::span<const Rule> rules, const FormulaSet& base,
                          const FormulaSet& claimed,
                          const Vocabulary& vocabulary);

}  // namespace bdg
