#pragma once

// The game derived from an agent system: jointly feasible profiles with
// their extensions and unreached desires, and the four solution concepts.

#include <cstddef>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "bdgame/decision.hpp"
#include "bdgame/model.hpp"

namespace bdg {

enum class SolutionConcept { kPareto, kStrongPareto, kDominant, kNash };

std::string_view to_string(SolutionConcept c);
std::optional<SolutionConcept> parse_solution_concept(std::string_view text);

// How dominance and Nash treat a swapped profile that is jointly infeasible:
// kSkip leaves it out of the quantifier's range, kFail makes the check fail.
enum class InfeasibleSwaps { kSkip, kFail };

std::string_view to_string(InfeasibleSwaps policy);
std::optional<InfeasibleSwaps> parse_infeasible_swaps(std::string_view text);

struct EvaluatedProfile {
  DecisionProfile profile;
  Extension extension;  // joint
  DesireReport report;
};

class GameSpecification {
 public:
  const AgentSystemSpec& spec() const { return spec_; }
  std::size_t agent_count() const { return spec_.agents.size(); }

  // Per agent: the individually feasible decisions, canonical order.
  const std::vector<std::vector<Decision>>& feasible_decisions() const {
    return feasible_decisions_;
  }
  // Jointly feasible profiles, canonical order.
  const std::vector<EvaluatedProfile>& profiles() const { return profiles_; }
  std::size_t size() const { return profiles_.size(); }

  std::optional<std::size_t> index_of(const DecisionProfile& p) const;

  const RuleIdSet& unreached(std::size_t profile, std::size_t agent) const {
    return profiles_[profile].report.agents[agent].unreached;
  }
  // profile p1 >=^U_i p2
  bool at_least(std::size_t p1, std::size_t p2, std::size_t agent) const;
  // profile p1 >^U_i p2
  bool better(std::size_t p1, std::size_t p2, std::size_t agent) const;
  ProfileOrder compare(std::size_t p1, std::size_t p2,
                       std::size_t agent) const;
  // Equal unreached sets for every agent.
  bool indistinguishable(std::size_t p1, std::size_t p2) const;

 private:
  friend GameSpecification derive_game(const AgentSystemSpec&, unsigned);

  AgentSystemSpec spec_;
  std::vector<std::vector<Decision>> feasible_decisions_;
  std::vector<EvaluatedProfile> profiles_;
  std::map<DecisionProfile, std::size_t> index_;
};

// Cartesian product of individually feasible decisions filtered by joint
// feasibility. `jobs` > 1 evaluates profiles on worker threads; the result
// does not depend on it.
GameSpecification derive_game(const AgentSystemSpec& spec, unsigned jobs = 1);

struct Exclusion {
  std::size_t profile = 0;         // index of the excluded profile
  DecisionProfile counter;         // improving / counter profile
  std::optional<std::size_t> agent;  // agent whose comparison fails
  bool infeasible_swap = false;    // counter is jointly infeasible
};

struct SolutionReport {
  SolutionConcept solution_concept = SolutionConcept::kPareto;
  std::vector<std::size_t> profiles;  // indexes into game.profiles()
  std::vector<Exclusion> witnesses;   // one per excluded profile
};

SolutionReport pareto(const GameSpecification& game);
SolutionReport strongly_pareto(const GameSpecification& game);
SolutionReport dominant(const GameSpecification& game,
                        InfeasibleSwaps swaps = InfeasibleSwaps::kSkip);
SolutionReport nash(const GameSpecification& game,
                    InfeasibleSwaps swaps = InfeasibleSwaps::kSkip);
SolutionReport solve(const GameSpecification& game, SolutionConcept c,
                     InfeasibleSwaps swaps = InfeasibleSwaps::kSkip);

// Pareto restricted to a subset of the feasible profiles.
std::vector<std::size_t> pareto_among(const GameSpecification& game,
                                      const std::vector<std::size_t>& subset);

// Re-runs the defining condition on a witness; true iff it really excludes.
bool confirms_exclusion(const GameSpecification& game, SolutionConcept c,
                        const Exclusion& w,
                        InfeasibleSwaps swaps = InfeasibleSwaps::kSkip);

}  // namespace bdg
