#include "bdgame/game.hpp"

#include <algorithm>
#include <thread>

#include "bdgame/error.hpp"

namespace bdg {

std::string_view to_string(SolutionConcept c) {
  switch (c) {
    case SolutionConcept::kPareto: return "pareto";
    case SolutionConcept::kStrongPareto: return "strong-pareto";
    case SolutionConcept::kDominant: return "dominant";
    case SolutionConcept::kNash: return "nash";
  }
  return "?";
}

std::optional<SolutionConcept> parse_solution_concept(std::string_view text) {
  if (text == "pareto") return SolutionConcept::kPareto;
  if (text == "strong-pareto") return SolutionConcept::kStrongPareto;
  if (text == "dominant") return SolutionConcept::kDominant;
  if (text == "nash") return SolutionConcept::kNash;
  return std::nullopt;
}

std::string_view to_string(InfeasibleSwaps policy) {
  return policy == InfeasibleSwaps::kSkip ? "skip" : "fail";
}

std::optional<InfeasibleSwaps> parse_infeasible_swaps(std::string_view text) {
  if (text == "skip") return InfeasibleSwaps::kSkip;
  if (text == "fail") return InfeasibleSwaps::kFail;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// GameSpecification

std::optional<std::size_t> GameSpecification::index_of(
    const DecisionProfile& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool GameSpecification::at_least(std::size_t p1, std::size_t p2,
                                 std::size_t agent) const {
  return lifted_geq(unreached(p2, agent), unreached(p1, agent),
                    spec_.agents[agent].priority);
}

bool GameSpecification::better(std::size_t p1, std::size_t p2,
                               std::size_t agent) const {
  return at_least(p1, p2, agent) && !at_least(p2, p1, agent);
}

ProfileOrder GameSpecification::compare(std::size_t p1, std::size_t p2,
                                        std::size_t agent) const {
  return compare_unreached(unreached(p1, agent), unreached(p2, agent),
                           spec_.agents[agent].priority);
}

bool GameSpecification::indistinguishable(std::size_t p1,
                                          std::size_t p2) const {
  for (std::size_t i = 0; i < agent_count(); ++i) {
    if (unreached(p1, i) != unreached(p2, i)) return false;
  }
  return true;
}

GameSpecification derive_game(const AgentSystemSpec& spec, unsigned jobs) {
  GameSpecification game;
  game.spec_ = spec;
  const AgentSystemSpec& s = game.spec_;

  std::vector<std::vector<Extension>> extensions;
  std::size_t count = 1;
  for (std::size_t i = 0; i < s.agents.size(); ++i) {
    std::vector<Decision> feasible;
    std::vector<Extension> exts;
    for (auto& d : enumerate_decisions(s, i)) {
      Extension e = agent_extension(s, d);
      if (!e.consistent) continue;
      feasible.push_back(std::move(d));
      exts.push_back(std::move(e));
    }
    count *= feasible.size();
    if (count > s.options.max_profiles) {
      throw BoundExceeded("more than " + std::to_string(s.options.max_profiles) +
                          " candidate profiles");
    }
    game.feasible_decisions_.push_back(std::move(feasible));
    extensions.push_back(std::move(exts));
  }
  if (s.agents.empty()) count = 0;

  const std::size_t agents = s.agents.size();
  auto digits_of = [&](std::size_t n) {
    std::vector<std::size_t> digit(agents);
    for (std::size_t i = agents; i-- > 0;) {
      const std::size_t base = game.feasible_decisions_[i].size();
      digit[i] = n % base;
      n /= base;
    }
    return digit;
  };

  std::vector<std::optional<EvaluatedProfile>> slots(count);
  auto evaluate = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t n = lo; n < hi; ++n) {
      const auto digit = digits_of(n);
      std::vector<const Extension*> parts;
      EvaluatedProfile ep;
      for (std::size_t i = 0; i < agents; ++i) {
        ep.profile.decisions.push_back(game.feasible_decisions_[i][digit[i]]);
        parts.push_back(&extensions[i][digit[i]]);
      }
      ep.extension = join_extensions(s, parts);
      if (!ep.extension.consistent) continue;
      ep.report = desire_report(s, ep.extension);
      slots[n] = std::move(ep);
    }
  };

  const std::size_t workers =
      std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    evaluate(0, count);
  } else {
    std::vector<std::jthread> threads;
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t lo = w * chunk;
      const std::size_t hi = std::min(count, lo + chunk);
      if (lo >= hi) break;
      threads.emplace_back(evaluate, lo, hi);
    }
  }

  for (auto& slot : slots) {
    if (!slot) continue;
    game.index_.emplace(slot->profile, game.profiles_.size());
    game.profiles_.push_back(std::move(*slot));
  }
  return game;
}

// ---------------------------------------------------------------------------
// Solution concepts

namespace {

// Strictly better for every agent.
std::optional<std::size_t> pareto_improver(
    const GameSpecification& game, std::size_t p,
    const std::vector<std::size_t>& range) {
  for (std::size_t q : range) {
    bool all = game.agent_count() > 0;
    for (std::size_t i = 0; i < game.agent_count() && all; ++i) {
      all = game.better(q, p, i);
    }
    if (all) return q;
  }
  return std::nullopt;
}

std::optional<std::size_t> strong_pareto_improver(const GameSpecification& game,
                                                  std::size_t p) {
  for (std::size_t q = 0; q < game.size(); ++q) {
    bool weak = true;
    bool strict = false;
    for (std::size_t i = 0; i < game.agent_count() && weak; ++i) {
      weak = game.at_least(q, p, i);
      strict = strict || game.better(q, p, i);
    }
    if (weak && strict) return q;
  }
  return std::nullopt;
}

std::vector<std::size_t> all_indexes(const GameSpecification& game) {
  std::vector<std::size_t> out(game.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

// Unilateral deviation of `agent` from profile p that breaks the Nash
// condition, if any.
std::optional<Exclusion> nash_violation(const GameSpecification& game,
                                        std::size_t p, InfeasibleSwaps swaps) {
  const DecisionProfile& profile = game.profiles()[p].profile;
  for (std::size_t i = 0; i < game.agent_count(); ++i) {
    for (const auto& d : game.feasible_decisions()[i]) {
      if (d == profile.decisions[i]) continue;
      DecisionProfile deviation = profile.with(d);
      auto q = game.index_of(deviation);
      if (!q) {
        if (swaps == InfeasibleSwaps::kFail) {
          return Exclusion{p, std::move(deviation), i, true};
        }
        continue;
      }
      if (!game.at_least(p, *q, i)) {
        return Exclusion{p, std::move(deviation), i, false};
      }
    }
  }
  return std::nullopt;
}

// Some feasible counter-profile q and agent i with (q_{-i}, p_i) not at least
// as good as q for i.
std::optional<Exclusion> dominance_violation(const GameSpecification& game,
                                             std::size_t p,
                                             InfeasibleSwaps swaps) {
  const DecisionProfile& profile = game.profiles()[p].profile;
  for (std::size_t q = 0; q < game.size(); ++q) {
    const DecisionProfile& counter = game.profiles()[q].profile;
    for (std::size_t i = 0; i < game.agent_count(); ++i) {
      auto swapped = game.index_of(counter.with(profile.decisions[i]));
      if (!swapped) {
        if (swaps == InfeasibleSwaps::kFail) {
          return Exclusion{p, counter, i, true};
        }
        continue;
      }
      if (!game.at_least(*swapped, q, i)) return Exclusion{p, counter, i, false};
    }
  }
  return std::nullopt;
}

}  // namespace

SolutionReport pareto(const GameSpecification& game) {
  SolutionReport report;
  report.solution_concept = SolutionConcept::kPareto;
  const auto range = all_indexes(game);
  for (std::size_t p = 0; p < game.size(); ++p) {
    if (auto q = pareto_improver(game, p, range)) {
      report.witnesses.push_back(
          Exclusion{p, game.profiles()[*q].profile, std::nullopt, false});
    } else {
      report.profiles.push_back(p);
    }
  }
  return report;
}

std::vector<std::size_t> pareto_among(const GameSpecification& game,
                                      const std::vector<std::size_t>& subset) {
  std::vector<std::size_t> out;
  for (std::size_t p : subset) {
    if (!pareto_improver(game, p, subset)) out.push_back(p);
  }
  return out;
}

SolutionReport strongly_pareto(const GameSpecification& game) {
  SolutionReport report;
  report.solution_concept = SolutionConcept::kStrongPareto;
  for (std::size_t p = 0; p < game.size(); ++p) {
    if (auto q = strong_pareto_improver(game, p)) {
      report.witnesses.push_back(
          Exclusion{p, game.profiles()[*q].profile, std::nullopt, false});
    } else {
      report.profiles.push_back(p);
    }
  }
  return report;
}

SolutionReport dominant(const GameSpecification& game, InfeasibleSwaps swaps) {
  SolutionReport report;
  report.solution_concept = SolutionConcept::kDominant;
  for (std::size_t p = 0; p < game.size(); ++p) {
    if (auto w = dominance_violation(game, p, swaps)) {
      report.witnesses.push_back(std::move(*w));
    } else {
      report.profiles.push_back(p);
    }
  }
  return report;
}

SolutionReport nash(const GameSpecification& game, InfeasibleSwaps swaps) {
  SolutionReport report;
  report.solution_concept = SolutionConcept::kNash;
  for (std::size_t p = 0; p < game.size(); ++p) {
    if (auto w = nash_violation(game, p, swaps)) {
      report.witnesses.push_back(std::move(*w));
    } else {
      report.profiles.push_back(p);
    }
  }
  return report;
}

SolutionReport solve(const GameSpecification& game, SolutionConcept c,
                     InfeasibleSwaps swaps) {
  switch (c) {
    case SolutionConcept::kPareto: return pareto(game);
    case SolutionConcept::kStrongPareto: return strongly_pareto(game);
    case SolutionConcept::kDominant: return dominant(game, swaps);
    case SolutionConcept::kNash: return nash(game, swaps);
  }
  return {};
}

bool confirms_exclusion(const GameSpecification& game, SolutionConcept c,
                        const Exclusion& w, InfeasibleSwaps swaps) {
  if (w.profile >= game.size()) return false;
  const DecisionProfile& profile = game.profiles()[w.profile].profile;
  const auto counter = game.index_of(w.counter);
  switch (c) {
    case SolutionConcept::kPareto: {
      if (!counter || game.agent_count() == 0) return false;
      for (std::size_t i = 0; i < game.agent_count(); ++i) {
        if (!game.better(*counter, w.profile, i)) return false;
      }
      return true;
    }
    case SolutionConcept::kStrongPareto: {
      if (!counter) return false;
      bool strict = false;
      for (std::size_t i = 0; i < game.agent_count(); ++i) {
        if (!game.at_least(*counter, w.profile, i)) return false;
        strict = strict || game.better(*counter, w.profile, i);
      }
      return strict;
    }
    case SolutionConcept::kNash: {
      if (!w.agent) return false;
      const std::size_t i = *w.agent;
      // The counter must be a unilateral deviation by agent i.
      if (w.counter.with(profile.decisions[i]) != profile) return false;
      if (!counter) return swaps == InfeasibleSwaps::kFail;
      return !game.at_least(w.profile, *counter, i);
    }
    case SolutionConcept::kDominant: {
      if (!w.agent || !counter) return false;
      const std::size_t i = *w.agent;
      auto swapped = game.index_of(w.counter.with(profile.decisions[i]));
      if (!swapped) return swaps == InfeasibleSwaps::kFail;
      return !game.at_least(*swapped, *counter, i);
    }
  }
  return false;
}

}  // namespace bdg
