#include "bdgame/decision.hpp"

#include <algorithm>
#include <cctype>

#include "bdgame/error.hpp"

namespace bdg {

FormulaSet Decision::formulas(const Vocabulary& vocabulary) const {
  FormulaSet out;
  for (const auto& lit : literals) out.insert(lit.formula(vocabulary));
  return out;
}

std::string Decision::str(const Vocabulary& vocabulary) const {
  std::string out = "{";
  for (std::size_t i = 0; i < literals.size(); ++i) {
    if (i) out += ", ";
    out += literals[i].str(vocabulary);
  }
  return out + "}";
}

std::string DecisionProfile::str(const Vocabulary& vocabulary) const {
  std::string out = "<";
  for (std::size_t i = 0; i < decisions.size(); ++i) {
    if (i) out += ", ";
    out += decisions[i].str(vocabulary);
  }
  return out + ">";
}

DecisionProfile DecisionProfile::with(const Decision& d) const {
  DecisionProfile out = *this;
  out.decisions.at(d.agent) = d;
  return out;
}

std::vector<RuleIdSet> DesireReport::unreached() const {
  std::vector<RuleIdSet> out;
  out.reserve(agents.size());
  for (const auto& a : agents) out.push_back(a.unreached);
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<Decision> enumerate_decisions(const AgentSystemSpec& spec,
                                          std::size_t agent) {
  const AgentSpec& a = spec.agents.at(agent);
  std::vector<AtomId> free;
  for (AtomId id : a.decision_atoms) {
    const bool fixed = std::any_of(
        a.initial_decision.begin(), a.initial_decision.end(),
        [&](const Literal& l) { return l.atom == id; });
    if (!fixed) free.push_back(id);
  }

  // Choices per free atom: 0 = absent, 1 = positive, 2 = negative.
  std::vector<int> choices;
  switch (spec.options.decision_mode) {
    case DecisionMode::kPositiveSubsets: choices = {0, 1}; break;
    case DecisionMode::kTotalAssignments: choices = {1, 2}; break;
    case DecisionMode::kLiteralSubsets: choices = {0, 1, 2}; break;
  }
  std::size_t count = 1;
  for (std::size_t i = 0; i < free.size(); ++i) {
    count *= choices.size();
    if (count > spec.options.max_decisions) {
      throw BoundExceeded("agent '" + a.id + "' has more than " +
                          std::to_string(spec.options.max_decisions) +
                          " candidate decisions");
    }
  }

  std::vector<Decision> out;
  out.reserve(count);
  std::vector<std::size_t> digit(free.size(), 0);
  for (std::size_t n = 0; n < count; ++n) {
    Decision d;
    d.agent = agent;
    d.literals = a.initial_decision;
    for (std::size_t i = 0; i < free.size(); ++i) {
      const int c = choices[digit[i]];
      if (c != 0) d.literals.push_back(Literal{free[i], c == 1});
    }
    std::sort(d.literals.begin(), d.literals.end());
    out.push_back(std::move(d));
    for (std::size_t i = 0; i < free.size(); ++i) {
      if (++digit[i] < choices.size()) break;
      digit[i] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DecisionProfile> enumerate_profiles(const AgentSystemSpec& spec) {
  std::vector<std::vector<Decision>> per_agent;
  std::size_t count = 1;
  for (std::size_t i = 0; i < spec.agents.size(); ++i) {
    per_agent.push_back(enumerate_decisions(spec, i));
    count *= per_agent.back().size();
    if (count > spec.options.max_profiles) {
      throw BoundExceeded("more than " +
                          std::to_string(spec.options.max_profiles) +
                          " decision profiles");
    }
  }
  std::vector<DecisionProfile> out;
  out.reserve(count);
  std::vector<std::size_t> digit(per_agent.size(), 0);
  for (std::size_t n = 0; n < count; ++n) {
    DecisionProfile p;
    for (std::size_t i = 0; i < per_agent.size(); ++i) {
      p.decisions.push_back(per_agent[i][digit[i]]);
    }
    out.push_back(std::move(p));
    // Last agent varies fastest, so the output is already lexicographic.
    for (std::size_t i = per_agent.size(); i-- > 0;) {
      if (++digit[i] < per_agent[i].size()) break;
      digit[i] = 0;
    }
  }
  return out;
}

Decision parse_decision(const AgentSystemSpec& spec, std::size_t agent,
                        std::string_view text) {
  const AgentSpec& a = spec.agents.at(agent);
  std::set<Literal> lits;
  std::string word;
  auto flush = [&] {
    if (word.empty()) return;
    const bool positive = word[0] != '!';
    const std::string name = positive ? word : word.substr(1);
    auto id = spec.vocabulary.find(name);
    if (!id) throw UndeclaredAtom(name);
    if (spec.vocabulary.atom(*id).owner != a.id) {
      throw Error("'" + name + "' is not a decision atom of agent '" + a.id +
                  "'");
    }
    lits.insert(Literal{*id, positive});
    word.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      word += c;
    }
  }
  flush();
  Decision d;
  d.agent = agent;
  d.literals.assign(lits.begin(), lits.end());
  for (std::size_t i = 1; i < d.literals.size(); ++i) {
    if (d.literals[i].atom == d.literals[i - 1].atom) {
      throw Error("decision contains both polarities of '" +
                  spec.vocabulary.atom(d.literals[i].atom).name + "'");
    }
  }
  return d;
}

// ---------------------------------------------------------------------------
// Extensions and feasibility

Extension agent_extension(const AgentSystemSpec& spec, const Decision& d) {
  const AgentSpec& a = spec.agents.at(d.agent);
  FormulaSet base = a.facts;
  for (const auto& f : d.formulas(spec.vocabulary)) base.insert(f);
  return extension(a.beliefs, base, spec.vocabulary);
}

Extension join_extensions(const AgentSystemSpec& spec,
                          const std::vector<const Extension*>& parts) {
  Extension joint;
  for (const Extension* e : parts) {
    joint.base.insert(e->base.begin(), e->base.end());
    joint.iterations = std::max(joint.iterations, e->iterations);
  }
  for (const Extension* e : parts) {
    for (const auto& f : e->derived) {
      if (!joint.base.contains(f)) joint.derived.insert(f);
    }
  }
  joint.consistent = consistent(joint.all(), spec.vocabulary);
  return joint;
}

Extension joint_extension(const AgentSystemSpec& spec,
                          const DecisionProfile& profile) {
  if (profile.decisions.size() != spec.agents.size()) {
    throw Error("profile has " + std::to_string(profile.decisions.size()) +
                " decisions for " + std::to_string(spec.agents.size()) +
                " agents");
  }
  std::vector<Extension> parts;
  parts.reserve(profile.decisions.size());
  for (const auto& d : profile.decisions) {
    parts.push_back(agent_extension(spec, d));
  }
  std::vector<const Extension*> ptrs;
  for (const auto& e : parts) ptrs.push_back(&e);
  return join_extensions(spec, ptrs);
}

bool is_feasible_decision(const AgentSystemSpec& spec, std::size_t agent,
                          const Decision& d) {
  Decision copy = d;
  copy.agent = agent;
  return agent_extension(spec, copy).consistent;
}

bool is_feasible_profile(const AgentSystemSpec& spec,
                         const DecisionProfile& profile) {
  return joint_extension(spec, profile).consistent;
}

DesireReport desire_report(const AgentSystemSpec& spec, const Extension& joint) {
  if (!joint.consistent) {
    throw InfeasibleProfile(
        "unreached desires are undefined on an inconsistent extension");
  }
  const FormulaSet e = joint.all();
  const Vocabulary& vocab = spec.vocabulary;
  DesireReport report;
  for (const auto& agent : spec.agents) {
    AgentDesires r;
    for (const auto& d : agent.desires) {
      if (!entails(e, d.antecedent, vocab)) {
        r.inapplicable.insert(d.id);
        continue;
      }
      if (entails(e, d.consequent, vocab)) {
        r.reached.insert(d.id);
      } else {
        r.unreached.insert(d.id);
        if (entails(e, Formula::negation(d.consequent), vocab)) {
          r.violated.insert(d.id);
        }
      }
    }
    report.agents.push_back(std::move(r));
  }
  return report;
}

DesireReport desire_report(const AgentSystemSpec& spec,
                           const DecisionProfile& profile) {
  const Extension joint = joint_extension(spec, profile);
  if (!joint.consistent) {
    throw InfeasibleProfile("profile " + profile.str(spec.vocabulary) +
                            " is infeasible");
  }
  return desire_report(spec, joint);
}

// ---------------------------------------------------------------------------
// Preference

std::string_view to_string(SetRelation r) {
  switch (r) {
    case SetRelation::kSucceeds: return "succeeds";
    case SetRelation::kPrecedes: return "precedes";
    case SetRelation::kEquivalent: return "equivalent";
    case SetRelation::kIncomparable: return "incomparable";
  }
  return "?";
}

std::string_view to_string(ProfileOrder r) {
  switch (r) {
    case ProfileOrder::kBetter: return "better";
    case ProfileOrder::kWorse: return "worse";
    case ProfileOrder::kEqual: return "equal";
    case ProfileOrder::kIncomparable: return "incomparable";
  }
  return "?";
}

bool lifted_geq(const RuleIdSet& d1, const RuleIdSet& d2,
                const PriorityOrder& order) {
  for (const auto& lower : d2) {
    if (d1.contains(lower)) continue;
    bool outranked = false;
    for (const auto& upper : d1) {
      if (!d2.contains(upper) && order.higher(upper, lower)) {
        outranked = true;
        break;
      }
    }
    if (!outranked) return false;
  }
  return true;
}

SetRelation set_preference(const RuleIdSet& d1, const RuleIdSet& d2,
                           const PriorityOrder& order) {
  const bool forward = lifted_geq(d1, d2, order);
  const bool backward = lifted_geq(d2, d1, order);
  if (forward && backward) return SetRelation::kEquivalent;
  if (forward) return SetRelation::kSucceeds;
  if (backward) return SetRelation::kPrecedes;
  return SetRelation::kIncomparable;
}

SetRelation set_preference(const AgentSpec& agent, const RuleIdSet& d1,
                           const RuleIdSet& d2) {
  for (const RuleIdSet* set : {&d1, &d2}) {
    for (const auto& id : *set) {
      if (!agent.find_desire(id)) {
        throw CrossAgentRule("'" + id + "' is not a desire of agent '" +
                             agent.id + "'");
      }
    }
  }
  return set_preference(d1, d2, agent.priority);
}

ProfileOrder compare_unreached(const RuleIdSet& unreached1,
                               const RuleIdSet& unreached2,
                               const PriorityOrder& order) {
  // p1 >= p2 iff U(p2) lifted-dominates U(p1).
  const bool geq = lifted_geq(unreached2, unreached1, order);
  const bool leq = lifted_geq(unreached1, unreached2, order);
  if (geq && leq) return ProfileOrder::kEqual;
  if (geq) return ProfileOrder::kBetter;
  if (leq) return ProfileOrder::kWorse;
  return ProfileOrder::kIncomparable;
}

ProfileOrder compare_profiles(const AgentSystemSpec& spec,
                              const DecisionProfile& p1,
                              const DecisionProfile& p2, std::size_t agent) {
  const auto u1 = desire_report(spec, p1).agents.at(agent).unreached;
  const auto u2 = desire_report(spec, p2).agents.at(agent).unreached;
  return compare_unreached(u1, u2, spec.agents.at(agent).priority);
}

}  // namespace bdg
