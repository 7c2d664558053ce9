#pragma once

// Decisions, decision profiles, feasibility, unreached desires and the
// priority-lifted preference over sets of desires.

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "bdgame/extension.hpp"
#include "bdgame/model.hpp"

namespace bdg {

struct Decision {
  std::size_t agent = 0;
  std::vector<Literal> literals;  // sorted, consistent

  FormulaSet formulas(const Vocabulary& vocabulary) const;
  std::string str(const Vocabulary& vocabulary) const;

  friend bool operator==(const Decision&, const Decision&) = default;
  friend auto operator<=>(const Decision& a, const Decision& b) {
    if (auto c = a.agent <=> b.agent; c != 0) return c;
    return a.literals <=> b.literals;
  }
};

// One decision per agent, in agent order.
struct DecisionProfile {
  std::vector<Decision> decisions;

  std::string str(const Vocabulary& vocabulary) const;
  // (delta_{-i}, d): this profile with agent i's decision replaced.
  DecisionProfile with(const Decision& d) const;

  friend bool operator==(const DecisionProfile&,
                         const DecisionProfile&) = default;
  friend auto operator<=>(const DecisionProfile&,
                          const DecisionProfile&) = default;
};

using RuleIdSet = std::set<std::string>;

struct AgentDesires {
  RuleIdSet unreached;
  RuleIdSet reached;
  RuleIdSet violated;
  RuleIdSet inapplicable;

  friend bool operator==(const AgentDesires&, const AgentDesires&) = default;
};

struct DesireReport {
  std::vector<AgentDesires> agents;

  // Per-agent unreached sets; two profiles are indistinguishable iff these
  // tuples are equal.
  std::vector<RuleIdSet> unreached() const;

  friend bool operator==(const DesireReport&, const DesireReport&) = default;
};

// All decisions of the configured mode that contain the agent's initial
// decision, in canonical order. Throws BoundExceeded above max_decisions.
std::vector<Decision> enumerate_decisions(const AgentSystemSpec& spec,
                                          std::size_t agent);
// Every profile (feasible or not), in canonical order.
std::vector<DecisionProfile> enumerate_profiles(const AgentSystemSpec& spec);

// Parses "a,!b" / "a !b" against the agent's decision atoms.
Decision parse_decision(const AgentSystemSpec& spec, std::size_t agent,
                        std::string_view text);

Extension agent_extension(const AgentSystemSpec& spec, const Decision& d);
Extension joint_extension(const AgentSystemSpec& spec,
                          const DecisionProfile& profile);
// Union of per-agent extensions that were computed separately.
Extension join_extensions(const AgentSystemSpec& spec,
                          const std::vector<const Extension*>& parts);

bool is_feasible_decision(const AgentSystemSpec& spec, std::size_t agent,
                          const Decision& d);
bool is_feasible_profile(const AgentSystemSpec& spec,
                         const DecisionProfile& profile);

// Throws InfeasibleProfile when the joint extension is inconsistent.
DesireReport desire_report(const AgentSystemSpec& spec,
                           const DecisionProfile& profile);
DesireReport desire_report(const AgentSystemSpec& spec, const Extension& joint);

enum class SetRelation { kSucceeds, kPrecedes, kEquivalent, kIncomparable };
enum class ProfileOrder { kBetter, kWorse, kEqual, kIncomparable };

std::string_view to_string(SetRelation r);
std::string_view to_string(ProfileOrder r);

// D1 >= D2: every desire only in D2 is outranked by some desire only in D1.
bool lifted_geq(const RuleIdSet& d1, const RuleIdSet& d2,
                const PriorityOrder& order);
SetRelation set_preference(const RuleIdSet& d1, const RuleIdSet& d2,
                           const PriorityOrder& order);
// As above, rejecting ids that are not desires of `agent` (CrossAgentRule).
SetRelation set_preference(const AgentSpec& agent, const RuleIdSet& d1,
                           const RuleIdSet& d2);

// Compares two profiles by their unreached sets: the profile whose unreached
// set is lifted-smaller wins.
ProfileOrder compare_unreached(const RuleIdSet& unreached1,
                               const RuleIdSet& unreached2,
                               const PriorityOrder& order);
ProfileOrder compare_profiles(const AgentSystemSpec& spec,
                              const DecisionProfile& p1,
                              const DecisionProfile& p2, std::size_t agent);

}  // namespace bdg
