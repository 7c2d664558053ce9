#include "bdgame/properties.hpp"

#include <algorithm>
#include <numeric>

#include "bdgame/generator.hpp"

namespace bdg {

namespace {

bool subset_of(const FormulaSet& a, const FormulaSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string describe(const RuleInstance& inst) {
  std::string out = "rules {";
  for (std::size_t i = 0; i < inst.rules.size(); ++i) {
    if (i) out += ", ";
    out += inst.rules[i].str();
  }
  return out + "}, T " + to_string(inst.theory) + ", T' " +
         to_string(inst.extra);
}

}  // namespace

CheckReport check_extension_laws(std::uint64_t seed, std::size_t instances,
                                 std::size_t max_atoms, std::size_t max_rules) {
  CheckReport report;
  report.name = "extension-laws";
  Random rng(seed);
  std::size_t certified = 0;
  for (std::size_t n = 0; n < instances; ++n) {
    const RuleInstance inst = random_rule_instance(rng, max_atoms, max_rules);
    const Vocabulary& v = inst.vocabulary;
    const Extension e = extension(inst.rules, inst.theory, v);
    const FormulaSet all = e.all();

    FormulaSet bigger = inst.theory;
    bigger.insert(inst.extra.begin(), inst.extra.end());
    if (!subset_of(all, extension(inst.rules, bigger, v).all())) {
      report.fail("monotonicity: " + describe(inst));
    }
    if (!subset_of(inst.theory, all)) {
      report.fail("containment: " + describe(inst));
    }
    if (extension(inst.rules, all, v).all() != all) {
      report.fail("idempotence: " + describe(inst));
    }
    if (static_cast<std::size_t>(e.iterations) > inst.rules.size() + 1) {
      report.fail("termination: " + std::to_string(e.iterations) +
                  " rounds for " + describe(inst));
    }
    if (inst.rules.size() <= 5 && v.size() <= 5) {
      ++certified;
      if (!fixpoint_certificate(inst.rules, inst.theory, all, v)) {
        report.fail("least fixpoint: " + describe(inst));
      }
    }
  }
  report.evidence.push_back(std::to_string(instances) + " instances, " +
                            std::to_string(certified) +
                            " checked against the intersection form");
  return report;
}

CheckReport check_spec_monotonicity(const AgentSystemSpec& spec) {
  CheckReport report;
  report.name = "monotonicity";
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < spec.agents.size(); ++i) {
    const auto decisions = enumerate_decisions(spec, i);
    std::vector<FormulaSet> ext;
    for (const auto& d : decisions) ext.push_back(agent_extension(spec, d).all());
    for (std::size_t x = 0; x < decisions.size(); ++x) {
      for (std::size_t y = 0; y < decisions.size(); ++y) {
        const auto& small = decisions[x].literals;
        const auto& large = decisions[y].literals;
        if (x == y || !std::includes(large.begin(), large.end(), small.begin(),
                                     small.end())) {
          continue;
        }
        ++pairs;
        if (!subset_of(ext[x], ext[y])) {
          report.fail("agent " + spec.agents[i].id + ": E(" +
                      decisions[x].str(spec.vocabulary) + ") not within E(" +
                      decisions[y].str(spec.vocabulary) + ")");
        }
      }
    }
  }
  report.evidence.push_back(std::to_string(pairs) + " decision pairs");
  return report;
}

namespace {

// Laws of the lifted order over all subsets of `ids` under `order`.
void order_laws(const std::vector<std::string>& ids, const PriorityOrder& order,
                CheckReport& report) {
  const std::size_t n = std::size_t{1} << ids.size();
  std::vector<RuleIdSet> sets(n);
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t k = 0; k < ids.size(); ++k) {
      if (m >> k & 1) sets[m].insert(ids[k]);
    }
  }
  auto name = [](const RuleIdSet& s) {
    std::string out = "{";
    for (const auto& id : s) out += (out.size() > 1 ? ", " : "") + id;
    return out + "}";
  };
  std::vector<std::vector<char>> geq(n, std::vector<char>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      geq[a][b] = lifted_geq(sets[a], sets[b], order);
    }
  }
  const bool identity = order.mode == PriorityOrder::Mode::kIdentity;
  for (std::size_t a = 0; a < n; ++a) {
    if (!geq[a][a]) report.fail("reflexivity: " + name(sets[a]));
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && geq[a][b] && geq[b][a]) {
        report.fail("antisymmetry: " + name(sets[a]) + " and " + name(sets[b]));
      }
      if (identity && geq[a][b] != ((a & b) == b)) {
        report.fail("identity mode: " + name(sets[a]) + " vs " + name(sets[b]) +
                    " differs from superset");
      }
      if (!geq[a][b]) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (geq[b][c] && !geq[a][c]) {
          report.fail("transitivity: " + name(sets[a]) + ", " + name(sets[b]) +
                      ", " + name(sets[c]));
        }
      }
    }
  }
}

}  // namespace

CheckReport check_order_laws(std::size_t rules) {
  CheckReport report;
  report.name = "order-laws";
  std::size_t orders = 0;
  for (std::size_t size = 0; size <= rules; ++size) {
    std::vector<std::string> ids;
    for (std::size_t k = 0; k < size; ++k) ids.push_back("r" + std::to_string(k));
    std::vector<int> ranks(size);
    std::iota(ranks.begin(), ranks.end(), 1);
    do {
      PriorityOrder order;
      order.mode = PriorityOrder::Mode::kRanked;
      for (std::size_t k = 0; k < size; ++k) order.ranks[ids[k]] = ranks[k];
      order_laws(ids, order, report);
      ++orders;
    } while (std::next_permutation(ranks.begin(), ranks.end()));
    order_laws(ids, PriorityOrder{}, report);
    ++orders;
  }
  report.evidence.push_back(std::to_string(orders) + " orders up to " +
                            std::to_string(rules) + " rules");
  return report;
}

CheckReport check_spec_order_laws(const AgentSystemSpec& spec) {
  CheckReport report;
  report.name = "order-laws";
  for (const auto& agent : spec.agents) {
    std::vector<std::string> ids;
    for (const auto& d : agent.desires) {
      if (ids.size() < 8) ids.push_back(d.id);
    }
    order_laws(ids, agent.priority, report);
  }
  return report;
}

CheckReport check_game_laws(const GameSpecification& game) {
  CheckReport report;
  report.name = "game-laws";
  const Vocabulary& v = game.spec().vocabulary;
  auto contains = [](const std::vector<std::size_t>& set, std::size_t p) {
    return std::binary_search(set.begin(), set.end(), p);
  };
  const SolutionReport par = pareto(game);
  const SolutionReport strong = strongly_pareto(game);
  for (std::size_t p : strong.profiles) {
    if (!contains(par.profiles, p)) {
      report.fail("strongly Pareto but not Pareto: " +
                  game.profiles()[p].profile.str(v));
    }
  }
  if (game.size() > 0 && par.profiles.empty()) {
    report.fail("no Pareto profile among " + std::to_string(game.size()));
  }
  for (InfeasibleSwaps swaps : {InfeasibleSwaps::kSkip, InfeasibleSwaps::kFail}) {
    const SolutionReport dom = dominant(game, swaps);
    const SolutionReport nsh = nash(game, swaps);
    // Inclusion only holds under kSkip.
    for (std::size_t p : dom.profiles) {
      if (swaps == InfeasibleSwaps::kSkip && !contains(nsh.profiles, p)) {
        report.fail("dominant but not Nash: " +
                    game.profiles()[p].profile.str(v));
      }
    }
    for (const auto* r : {&dom, &nsh}) {
      for (const auto& w : r->witnesses) {
        if (!confirms_exclusion(game, r->solution_concept, w, swaps)) {
          report.fail(std::string(to_string(r->solution_concept)) +
                      " witness does not exclude " +
                      game.profiles()[w.profile].profile.str(v));
        }
      }
    }
  }
  for (const auto* r : {&par, &strong}) {
    for (const auto& w : r->witnesses) {
      if (!confirms_exclusion(game, r->solution_concept, w)) {
        report.fail(std::string(to_string(r->solution_concept)) +
                    " witness does not exclude " +
                    game.profiles()[w.profile].profile.str(v));
      }
    }
  }
  return report;
}

RepresentationResult check_representation(const GameSpecification& game) {
  RepresentationResult result;
  result.closure.name = "representation";
  std::set<std::set<std::size_t>> families;
  for (SolutionConcept c :
       {SolutionConcept::kPareto, SolutionConcept::kStrongPareto,
        SolutionConcept::kDominant, SolutionConcept::kNash}) {
    const auto r = solve(game, c);
    families.insert(u_closure(game, {{r.profiles.begin(), r.profiles.end()},
                                     false})
                        .members);
  }
  for (std::size_t p = 0; p < game.size(); ++p) {
    families.insert(u_closure(game, {{p}, false}).members);
  }
  std::set<std::size_t> all;
  for (std::size_t p = 0; p < game.size(); ++p) all.insert(p);
  families.insert(all);

  for (const auto& members : families) {
    const CheckReport r =
        representation_check(game, ProfileFamily{members, true});
    for (const auto& e : r.evidence) {
      if (!r.passed) result.closure.fail(e);
    }
  }
  result.closure.evidence.push_back(std::to_string(families.size()) +
                                    " U-closed families");
  result.feasible = feasible_representation_check(game);
  return result;
}

CheckReport check_pipeline_equivalence(const GameSpecification& game) {
  CheckReport report;
  report.name = "pipeline-equivalence";
  const auto first = pareto(game).profiles;
  const GoalsFirstResult second = goals_first_pareto(game);
  if (first != second.pareto) {
    std::string diff;
    for (std::size_t p : first) {
      if (!std::binary_search(second.pareto.begin(), second.pareto.end(), p)) {
        diff += " only-profile-first " +
                game.profiles()[p].profile.str(game.spec().vocabulary);
      }
    }
    for (std::size_t p : second.pareto) {
      if (!std::binary_search(first.begin(), first.end(), p)) {
        diff += " only-goals-first " +
                game.profiles()[p].profile.str(game.spec().vocabulary);
      }
    }
    report.fail("Pareto families differ:" + diff);
  }
  report.evidence.push_back(std::to_string(second.candidates) +
                            " goal-set candidates, " +
                            std::to_string(second.feasible_goal_sets.size()) +
                            " feasible");
  return report;
}

}  // namespace bdg
