#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "bdgame/decision.hpp"
#include "oracle.hpp"

namespace oracle {

using bdg::AgentSpec;
using bdg::AgentSystemSpec;
using bdg::Decision;
using bdg::DecisionProfile;
using bdg::PriorityOrder;
using bdg::Vocabulary;

inline std::vector<std::string> bdg_atom_names(const AgentSystemSpec& spec) {
  std::vector<std::string> out;
  for (const auto& a : spec.vocabulary.atoms()) out.push_back(a.name);
  return out;
}

// Brute-force game built only from oracle semantics: joint extension as the
// union of per-agent extensions, unreached sets, and the two concepts.
struct Game {
  std::vector<std::string> names;
  std::vector<std::vector<Decision>> feasible;  // per agent
  std::map<DecisionProfile, std::vector<std::set<std::string>>> unreached;
  std::vector<std::map<std::string, int>> ranks;

  explicit Game(const AgentSystemSpec& spec) {
    names = bdg_atom_names(spec);
    std::vector<std::vector<Rule>> beliefs;
    std::vector<std::vector<Desire>> desires;
    for (std::size_t i = 0; i < spec.agents.size(); ++i) {
      const AgentSpec& a = spec.agents[i];
      beliefs.emplace_back();
      desires.emplace_back();
      for (const auto& b : a.beliefs) {
        beliefs[i].emplace_back(b.antecedent.str(), b.consequent.str());
      }
      for (const auto& d : a.desires) {
        desires[i].push_back({d.id, d.antecedent.str(), d.consequent.str()});
      }
      ranks.push_back(a.priority.mode == PriorityOrder::Mode::kRanked
                          ? a.priority.ranks
                          : std::map<std::string, int>{});
      feasible.emplace_back();
      for (const auto& d : bdg::enumerate_decisions(spec, i)) {
        if (consistent(own(spec, beliefs[i], d), names)) {
          feasible[i].push_back(d);
        }
      }
    }
    for (const auto& p : bdg::enumerate_profiles(spec)) {
      std::set<std::string> joint;
      for (const auto& d : p.decisions) {
        const std::set<std::string> e = own(spec, beliefs[d.agent], d);
        joint.insert(e.begin(), e.end());
      }
      if (!consistent(joint, names)) continue;
      std::vector<std::set<std::string>> u;
      for (const auto& ds : desires) {
        u.push_back(oracle::unreached(ds, joint, names));
      }
      unreached[p] = u;
    }
  }

  std::set<std::string> own(const AgentSystemSpec& spec, const std::vector<Rule>& rs,
           const Decision& d) const {
    std::set<std::string> base;
    for (const auto& f : spec.agents[d.agent].facts) base.insert(f.str());
    for (const auto& l : d.literals) base.insert(l.str(spec.vocabulary));
    return extension(rs, base, names);
  }

  bool geq(const DecisionProfile& p, const DecisionProfile& q,
           std::size_t i) const {
    return lifted_geq(unreached.at(q)[i], unreached.at(p)[i],
                              ranks[i]);
  }

  std::set<std::string> nash(const Vocabulary& v) const {
    std::set<std::string> out;
    for (const auto& [p, u] : unreached) {
      bool ok = true;
      for (std::size_t i = 0; i < feasible.size(); ++i) {
        for (const auto& d : feasible[i]) {
          const DecisionProfile q = p.with(d);
          if (unreached.count(q) && !geq(p, q, i)) ok = false;
        }
      }
      if (ok) out.insert(p.str(v));
    }
    return out;
  }

  std::set<std::string> pareto(const Vocabulary& v) const {
    std::set<std::string> out;
    for (const auto& [p, u] : unreached) {
      bool excluded = false;
      for (const auto& [q, uq] : unreached) {
        bool all = true;
        for (std::size_t i = 0; i < feasible.size(); ++i) {
          all = all && geq(q, p, i) && !geq(p, q, i);
        }
        excluded = excluded || all;
      }
      if (!excluded) out.insert(p.str(v));
    }
    return out;
  }
};

}  // namespace oracle
