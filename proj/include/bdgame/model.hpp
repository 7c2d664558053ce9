#pragma once

// Agent system specifications: agents with facts, belief and desire rules,
// a priority order over desires and an initial decision; plus the `.bdg`
// text format.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bdgame/extension.hpp"
#include "bdgame/logic.hpp"

namespace bdg {

enum class DecisionMode { kPositiveSubsets, kTotalAssignments, kLiteralSubsets };

std::string_view to_string(DecisionMode mode);
std::optional<DecisionMode> parse_decision_mode(std::string_view text);

struct Literal {
  AtomId atom = 0;
  bool positive = true;

  Formula formula(const Vocabulary& vocabulary) const;
  std::string str(const Vocabulary& vocabulary) const;

  friend bool operator==(const Literal&, const Literal&) = default;
  // Atoms in name order, the positive literal before the negative one.
  friend std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
    if (auto c = a.atom <=> b.atom; c != 0) return c;
    return b.positive <=> a.positive;
  }
};

struct PriorityOrder {
  enum class Mode { kRanked, kIdentity };

  Mode mode = Mode::kIdentity;
  // Desire-rule id -> rank; higher rank = higher priority. Ranked mode only.
  std::map<std::string, int> ranks;

  // Strict d > d'. Identity mode has no strict pairs.
  bool higher(const std::string& d, const std::string& d2) const;

  friend bool operator==(const PriorityOrder&, const PriorityOrder&) = default;
};

struct AgentSpec {
  std::string id;
  std::vector<AtomId> decision_atoms;  // sorted
  FormulaSet facts;
  std::vector<Rule> beliefs;
  std::vector<Rule> desires;
  PriorityOrder priority;
  std::vector<Literal> initial_decision;  // sorted, duplicate-free

  const Rule* find_desire(std::string_view rule_id) const;

  friend bool operator==(const AgentSpec&, const AgentSpec&) = default;
};

struct SpecOptions {
  static constexpr std::size_t kDefaultMaxDecisions = std::size_t{1} << 16;
  static constexpr std::size_t kDefaultMaxProfiles = std::size_t{1} << 20;
  static constexpr std::size_t kDefaultMaxGoalCandidates = std::size_t{1} << 20;

  DecisionMode decision_mode = DecisionMode::kLiteralSubsets;
  std::size_t max_decisions = kDefaultMaxDecisions;
  std::size_t max_profiles = kDefaultMaxProfiles;
  std::size_t max_goal_candidates = kDefaultMaxGoalCandidates;

  friend bool operator==(const SpecOptions&, const SpecOptions&) = default;
};

struct AgentSystemSpec {
  std::string name;
  Vocabulary vocabulary;
  std::vector<AgentSpec> agents;
  std::vector<AtomId> world_atoms;  // sorted
  SpecOptions options;

  std::optional<std::size_t> agent_index(std::string_view id) const;
  FormulaSet all_facts() const;
  std::vector<Rule> all_beliefs() const;
  std::vector<Rule> all_desires() const;

  friend bool operator==(const AgentSystemSpec&,
                         const AgentSystemSpec&) = default;
};

// Throws SpecError (line/column) on syntax errors, undeclared or duplicate
// atoms, duplicate rule ids, and an empty agent list. Typing problems are
// left to validate_spec.
AgentSystemSpec parse_spec(std::string_view text);
AgentSystemSpec load_spec(const std::string& path);
std::string print_spec(const AgentSystemSpec& spec);

enum class ViolationKind {
  kNoAgents,
  kBeliefConsequentNotWorld,
  kFactNotWorld,
  kPriorityNotTotal,
  kInitialDecisionInconsistent,
  kCrossAgentPriority,
  kPriorityUnknownRule,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string agent;
  std::string subject;

  std::string str() const;
  friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;  // sorted
  std::vector<std::string> warnings;

  bool valid() const { return violations.empty(); }
};

ValidationReport validate_spec(const AgentSystemSpec& spec);

}  // namespace bdg
