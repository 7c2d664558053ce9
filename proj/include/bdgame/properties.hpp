#pragma once

// Property suites over extensions, the lifted order, solution concepts, the
// goal-set representation and the two solving pipelines. Each returns a
// CheckReport whose first failure is the counterexample.

#include <cstddef>
#include <cstdint>

#include "bdgame/game.hpp"
#include "bdgame/goals.hpp"

namespace bdg {

// Monotonicity, containment, idempotence, termination and agreement with the
// intersection characterization on random rule instances.
CheckReport check_extension_laws(std::uint64_t seed, std::size_t instances,
                                 std::size_t max_atoms = 6,
                                 std::size_t max_rules = 6);

// Monotonicity of one spec's belief extensions along decision inclusion.
CheckReport check_spec_monotonicity(const AgentSystemSpec& spec);

// Reflexivity, transitivity and antisymmetry of the lifted order over all
// subsets of `rules` ranked rules, for every ranking; identity mode against
// the superset relation.
CheckReport check_order_laws(std::size_t rules = 4);
// The same laws over each agent's own desires (capped at 8 per agent).
CheckReport check_spec_order_laws(const AgentSystemSpec& spec);

// strong-Pareto within Pareto, dominant within Nash, Pareto nonempty, every
// witness re-validates.
CheckReport check_game_laws(const GameSpecification& game);

struct RepresentationResult {
  CheckReport closure;   // both directions on U-closed families
  CheckReport feasible;  // every feasible profile is represented
};

// Families: the closure of each solution concept, of every singleton, and
// the whole feasible set.
RepresentationResult check_representation(const GameSpecification& game);

// Profile-first Pareto equals goals-first Pareto.
CheckReport check_pipeline_equivalence(const GameSpecification& game);

}  // namespace bdg
