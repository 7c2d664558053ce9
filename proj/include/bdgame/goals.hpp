#pragma once

// Joint goals: U-closed profile families, their goal sets, goal-based
// profiles, the representation checks, decision rules and the goal heuristic.

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bdgame/game.hpp"

namespace bdg {

struct GoalSet {
  FormulaSet positive;
  FormulaSet negative;

  std::string str() const;  // "<{p & q}, {}>"

  friend bool operator==(const GoalSet&, const GoalSet&) = default;
  friend auto operator<=>(const GoalSet& a, const GoalSet& b) {
    if (auto c = a.positive <=> b.positive; c != 0) return c;
    return a.negative <=> b.negative;
  }
};

// A set of jointly feasible profiles, by index into game.profiles().
struct ProfileFamily {
  std::set<std::size_t> members;
  bool u_closed = false;

  friend bool operator==(const ProfileFamily&, const ProfileFamily&) = default;
};

bool is_u_closed(const GameSpecification& game,
                 const std::set<std::size_t>& members);
// Wraps `members` and records whether they are U-closed.
ProfileFamily make_family(const GameSpecification& game,
                          std::set<std::size_t> members);
ProfileFamily u_closure(const GameSpecification& game,
                        const ProfileFamily& family);

// The goal set read off one profile's joint extension.
GoalSet goal_set_of(const AgentSystemSpec& spec, const Extension& joint);
GoalSet goal_set_of(const GameSpecification& game, std::size_t profile);

struct GoalSetEntry {
  GoalSet goals;
  std::vector<std::size_t> generators;  // members producing this goal set
};

// One entry per distinct goal set, canonical order. Throws NotUClosed.
std::vector<GoalSetEntry> delta_goal_sets(const GameSpecification& game,
                                          const ProfileFamily& family);

bool is_goal_based(const AgentSystemSpec& spec, const Extension& joint,
                   const GoalSet& goals);
bool is_goal_based(const GameSpecification& game, std::size_t profile,
                   const GoalSet& goals);
// Throws InfeasibleProfile.
bool is_goal_based(const AgentSystemSpec& spec, const DecisionProfile& profile,
                   const GoalSet& goals);

// Goal set generated by a single subset D' of the joint desires:
// consequents of D' as positive goals, antecedents as negative goals.
GoalSet syntactic_goal_set(const std::vector<Rule>& subset);
// 2^|D|, the number of subsets before deduplication.
std::size_t syntactic_goal_set_count(const AgentSystemSpec& spec);
// Deduplicated, canonical order. Throws BoundExceeded above
// max_goal_candidates subsets.
std::vector<GoalSet> syntactic_goal_sets(const AgentSystemSpec& spec);

struct CheckReport {
  std::string name;
  bool passed = true;
  std::optional<std::string> counterexample;
  std::vector<std::string> evidence;

  void fail(std::string what);
};

// Both directions of the goal-set representation of a U-closed family.
// An un-closed family is reported as a failed `u-closed` sub-check.
CheckReport representation_check(const GameSpecification& game,
                                 const ProfileFamily& family);
// Every feasible profile is goal-based for the goal set of the closure of
// its singleton; infeasible profiles never reach the goal search.
CheckReport feasible_representation_check(const GameSpecification& game);

enum class DecisionRule { kBdRational, kNashElsePareto };

std::string_view to_string(DecisionRule r);
std::optional<DecisionRule> parse_decision_rule(std::string_view text);

// The rule's profiles, U-closed.
ProfileFamily apply_decision_rule(
    const GameSpecification& game, DecisionRule rule,
    InfeasibleSwaps swaps = InfeasibleSwaps::kSkip);

// E_{B u D}(F u initial decisions) over all agents' rules.
FormulaSet heuristic_goals(const AgentSystemSpec& spec);
// True iff every belief antecedent is a world formula.
bool fragment_check(const AgentSystemSpec& spec);

struct GoalsFirstResult {
  std::size_t candidates = 0;               // goal-set pairs examined
  std::vector<GoalSetEntry> feasible_goal_sets;  // generators: goal-based
  std::vector<std::size_t> goal_based;      // union over feasible goal sets
  std::vector<std::size_t> pareto;          // Pareto among goal_based
};

// Goals-first pipeline: enumerate candidate goal sets (subsets of desire
// consequents x subsets of desire antecedents), keep those that are the goal
// set of some feasible profile, collect their goal-based profiles and order
// them. Throws BoundExceeded above max_goal_candidates.
GoalsFirstResult goals_first_pareto(const GameSpecification& game);

}  // namespace bdg
