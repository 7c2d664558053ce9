#include "bdgame/goals.hpp"

#include <map>

#include "bdgame/error.hpp"

namespace bdg {

std::string GoalSet::str() const {
  return "<" + to_string(positive) + ", " + to_string(negative) + ">";
}

void CheckReport::fail(std::string what) {
  passed = false;
  if (!counterexample) counterexample = what;
  evidence.push_back(std::move(what));
}

// ---------------------------------------------------------------------------
// U-closure

namespace {

using UTuple = std::vector<RuleIdSet>;

UTuple u_tuple(const GameSpecification& game, std::size_t p) {
  return game.profiles()[p].report.unreached();
}

std::string profile_str(const GameSpecification& game, std::size_t p) {
  return game.profiles()[p].profile.str(game.spec().vocabulary);
}

// Feasible profiles whose U tuple matches some member, grouped by tuple.
std::set<std::size_t> closure_of(const GameSpecification& game,
                                 const std::set<std::size_t>& members) {
  std::set<UTuple> tuples;
  for (std::size_t p : members) tuples.insert(u_tuple(game, p));
  std::set<std::size_t> out = members;
  for (std::size_t q = 0; q < game.size(); ++q) {
    if (tuples.contains(u_tuple(game, q))) out.insert(q);
  }
  return out;
}

}  // namespace

bool is_u_closed(const GameSpecification& game,
                 const std::set<std::size_t>& members) {
  return closure_of(game, members) == members;
}

ProfileFamily make_family(const GameSpecification& game,
                          std::set<std::size_t> members) {
  for (std::size_t p : members) {
    if (p >= game.size()) {
      throw Error("profile index " + std::to_string(p) + " out of range");
    }
  }
  ProfileFamily f;
  f.u_closed = is_u_closed(game, members);
  f.members = std::move(members);
  return f;
}

ProfileFamily u_closure(const GameSpecification& game,
                        const ProfileFamily& family) {
  return ProfileFamily{closure_of(game, family.members), true};
}

// ---------------------------------------------------------------------------
// Goal sets

GoalSet goal_set_of(const AgentSystemSpec& spec, const Extension& joint) {
  const FormulaSet e = joint.all();
  GoalSet g;
  for (const auto& agent : spec.agents) {
    for (const auto& d : agent.desires) {
      if (!entails(e, d.antecedent, spec.vocabulary)) {
        g.negative.insert(d.antecedent);
      } else if (entails(e, d.consequent, spec.vocabulary)) {
        g.positive.insert(d.consequent);
      }
    }
  }
  return g;
}

GoalSet goal_set_of(const GameSpecification& game, std::size_t profile) {
  return goal_set_of(game.spec(), game.profiles()[profile].extension);
}

namespace {

std::vector<GoalSetEntry> group_goal_sets(const GameSpecification& game,
                                          const std::set<std::size_t>& members) {
  std::map<GoalSet, std::vector<std::size_t>> grouped;
  for (std::size_t p : members) grouped[goal_set_of(game, p)].push_back(p);
  std::vector<GoalSetEntry> out;
  for (auto& [g, gens] : grouped) out.push_back({g, std::move(gens)});
  return out;
}

}  // namespace

std::vector<GoalSetEntry> delta_goal_sets(const GameSpecification& game,
                                          const ProfileFamily& family) {
  if (!is_u_closed(game, family.members)) {
    throw NotUClosed("profile family is not closed under indistinguishable "
                     "profiles");
  }
  return group_goal_sets(game, family.members);
}

bool is_goal_based(const AgentSystemSpec& spec, const Extension& joint,
                   const GoalSet& goals) {
  if (!joint.consistent) {
    throw InfeasibleProfile("goal-based check on an infeasible profile");
  }
  const FormulaSet e = joint.all();
  for (const auto& g : goals.positive) {
    if (!entails(e, g, spec.vocabulary)) return false;
  }
  for (const auto& g : goals.negative) {
    if (entails(e, g, spec.vocabulary)) return false;
  }
  return true;
}

bool is_goal_based(const GameSpecification& game, std::size_t profile,
                   const GoalSet& goals) {
  return is_goal_based(game.spec(), game.profiles()[profile].extension, goals);
}

bool is_goal_based(const AgentSystemSpec& spec, const DecisionProfile& profile,
                   const GoalSet& goals) {
  const Extension joint = joint_extension(spec, profile);
  if (!joint.consistent) {
    throw InfeasibleProfile("profile " + profile.str(spec.vocabulary) +
                            " is infeasible");
  }
  return is_goal_based(spec, joint, goals);
}

GoalSet syntactic_goal_set(const std::vector<Rule>& subset) {
  GoalSet g;
  for (const auto& d : subset) {
    g.positive.insert(d.consequent);
    g.negative.insert(d.antecedent);
  }
  return g;
}

std::size_t syntactic_goal_set_count(const AgentSystemSpec& spec) {
  const std::size_t n = spec.all_desires().size();
  return n >= 63 ? SIZE_MAX : std::size_t{1} << n;
}

std::vector<GoalSet> syntactic_goal_sets(const AgentSystemSpec& spec) {
  const auto desires = spec.all_desires();
  const std::size_t count = syntactic_goal_set_count(spec);
  if (count > spec.options.max_goal_candidates) {
    throw BoundExceeded(std::to_string(desires.size()) +
                        " desires give more than " +
                        std::to_string(spec.options.max_goal_candidates) +
                        " goal-set candidates");
  }
  std::set<GoalSet> out;
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<Rule> subset;
    for (std::size_t i = 0; i < desires.size(); ++i) {
      if (mask >> i & 1) subset.push_back(desires[i]);
    }
    out.insert(syntactic_goal_set(subset));
  }
  return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------
// Representation checks

CheckReport representation_check(const GameSpecification& game,
                                 const ProfileFamily& family) {
  CheckReport report;
  report.name = "representation";
  const auto closed = closure_of(game, family.members);
  for (std::size_t q : closed) {
    if (family.members.contains(q)) continue;
    report.fail("u-closed: " + profile_str(game, q) +
                " is indistinguishable from a member but missing");
  }

  const auto entries = group_goal_sets(game, family.members);
  for (const auto& entry : entries) {
    for (std::size_t p : entry.generators) {
      if (!is_goal_based(game, p, entry.goals)) {
        report.fail("soundness: member " + profile_str(game, p) +
                    " is not goal-based for its goal set " +
                    entry.goals.str());
      }
    }
  }
  for (const auto& entry : entries) {
    for (std::size_t q = 0; q < game.size(); ++q) {
      if (family.members.contains(q)) continue;
      if (is_goal_based(game, q, entry.goals)) {
        report.fail("completeness: " + profile_str(game, q) +
                    " is goal-based for " + entry.goals.str() +
                    " but not in the family");
      }
    }
  }
  if (report.passed) {
    report.evidence.push_back(std::to_string(family.members.size()) +
                              " members, " + std::to_string(entries.size()) +
                              " goal sets");
  }
  return report;
}

CheckReport feasible_representation_check(const GameSpecification& game) {
  CheckReport report;
  report.name = "feasible-representation";
  for (std::size_t p = 0; p < game.size(); ++p) {
    const auto closed = closure_of(game, {p});
    bool represented = false;
    for (const auto& entry : group_goal_sets(game, closed)) {
      if (is_goal_based(game, p, entry.goals)) {
        represented = true;
        break;
      }
    }
    if (!represented) {
      report.fail(profile_str(game, p) +
                  " is feasible but goal-based for no goal set of its closure");
    }
  }
  const std::size_t total = enumerate_profiles(game.spec()).size();
  if (game.size() > total) report.fail("more feasible profiles than profiles");
  report.evidence.push_back(std::to_string(game.size()) + " feasible, " +
                            std::to_string(total - game.size()) +
                            " infeasible profiles excluded");
  return report;
}

// ---------------------------------------------------------------------------
// Decision rules and the goal heuristic

std::string_view to_string(DecisionRule r) {
  return r == DecisionRule::kBdRational ? "bd-rational" : "nash-else-pareto";
}

std::optional<DecisionRule> parse_decision_rule(std::string_view text) {
  if (text == "bd-rational") return DecisionRule::kBdRational;
  if (text == "nash-else-pareto") return DecisionRule::kNashElsePareto;
  return std::nullopt;
}

ProfileFamily apply_decision_rule(const GameSpecification& game,
                                  DecisionRule rule, InfeasibleSwaps swaps) {
  std::vector<std::size_t> chosen;
  if (rule == DecisionRule::kNashElsePareto) chosen = nash(game, swaps).profiles;
  if (chosen.empty()) chosen = pareto(game).profiles;
  return u_closure(game,
                   ProfileFamily{{chosen.begin(), chosen.end()}, false});
}

FormulaSet heuristic_goals(const AgentSystemSpec& spec) {
  std::vector<Rule> rules = spec.all_beliefs();
  for (auto& d : spec.all_desires()) rules.push_back(std::move(d));
  FormulaSet base = spec.all_facts();
  for (const auto& agent : spec.agents) {
    for (const auto& lit : agent.initial_decision) {
      base.insert(lit.formula(spec.vocabulary));
    }
  }
  return extension(rules, base, spec.vocabulary).all();
}

bool fragment_check(const AgentSystemSpec& spec) {
  const Language world = Language::world();
  for (const auto& b : spec.all_beliefs()) {
    if (!world.contains(b.antecedent, spec.vocabulary)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Goals-first pipeline

GoalsFirstResult goals_first_pareto(const GameSpecification& game) {
  const AgentSystemSpec& spec = game.spec();
  FormulaSet consequents;
  FormulaSet antecedents;
  for (const auto& d : spec.all_desires()) {
    consequents.insert(d.consequent);
    antecedents.insert(d.antecedent);
  }
  const std::vector<Formula> cons(consequents.begin(), consequents.end());
  const std::vector<Formula> ants(antecedents.begin(), antecedents.end());
  const std::size_t bits = cons.size() + ants.size();
  if (bits >= 63 ||
      (std::size_t{1} << bits) > spec.options.max_goal_candidates) {
    throw BoundExceeded(std::to_string(bits) +
                        " distinct desire components give too many goal-set "
                        "candidates");
  }

  // A candidate is feasible when it is the goal set of some feasible profile.
  std::set<GoalSet> attained;
  for (std::size_t p = 0; p < game.size(); ++p) {
    attained.insert(goal_set_of(game, p));
  }

  GoalsFirstResult result;
  result.candidates = std::size_t{1} << bits;
  std::set<std::size_t> goal_based;
  for (std::size_t mask = 0; mask < result.candidates; ++mask) {
    GoalSet g;
    for (std::size_t i = 0; i < cons.size(); ++i) {
      if (mask >> i & 1) g.positive.insert(cons[i]);
    }
    for (std::size_t i = 0; i < ants.size(); ++i) {
      if (mask >> (cons.size() + i) & 1) g.negative.insert(ants[i]);
    }
    if (!attained.contains(g)) continue;
    GoalSetEntry entry{g, {}};
    for (std::size_t q = 0; q < game.size(); ++q) {
      if (is_goal_based(game, q, g)) entry.generators.push_back(q);
    }
    goal_based.insert(entry.generators.begin(), entry.generators.end());
    result.feasible_goal_sets.push_back(std::move(entry));
  }
  std::sort(result.feasible_goal_sets.begin(), result.feasible_goal_sets.end(),
            [](const GoalSetEntry& a, const GoalSetEntry& b) {
              return a.goals < b.goals;
            });
  result.goal_based.assign(goal_based.begin(), goal_based.end());
  result.pareto = pareto_among(game, result.goal_based);
  return result;
}

}  // namespace bdg
