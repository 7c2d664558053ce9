#pragma once

// Seeded random and exhaustive instance generators for the property suites.
// Specs are produced as `.bdg` text so every instance can be printed and
// replayed.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bdgame/extension.hpp"
#include "bdgame/model.hpp"

namespace bdg {

class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, n). n must be positive.
  std::size_t below(std::size_t n) { return engine_() % n; }
  std::size_t between(std::size_t lo, std::size_t hi) {
    return lo + below(hi - lo + 1);
  }
  bool coin() { return engine_() & 1; }

 private:
  std::mt19937_64 engine_;
};

// A formula over `atoms` of depth at most `depth`, in `.bdg` syntax.
std::string random_formula(Random& rng, const std::vector<std::string>& atoms,
                           int depth);

struct RandomSpecOptions {
  std::size_t min_agents = 2;
  std::size_t max_agents = 2;
  std::size_t min_atoms = 1;  // decision atoms per agent
  std::size_t max_atoms = 2;
  std::size_t min_world = 1;
  std::size_t max_world = 2;
  std::size_t max_beliefs = 3;  // per agent
  std::size_t max_desires = 3;
  std::size_t max_facts = 1;
  int depth = 2;
  bool ranked = true;
  std::optional<DecisionMode> mode;  // random when empty
};

// A valid spec: facts and belief consequents range over world atoms only.
std::string random_spec_text(Random& rng, const RandomSpecOptions& options);

// Small 2-agent specs: 1 or 2 decision atoms per agent, one world atom, every
// choice of at most 3 rules per agent from a fixed pool, ranked priorities.
std::vector<std::string> exhaustive_spec_texts();

struct RuleInstance {
  Vocabulary vocabulary;
  std::vector<Rule> rules;
  FormulaSet theory;
  FormulaSet extra;  // T' for monotonicity
};

// Up to `max_atoms` atoms and `max_rules` rules of depth <= 2.
RuleInstance random_rule_instance(Random& rng, std::size_t max_atoms,
                                  std::size_t max_rules);

}  // namespace bdg
