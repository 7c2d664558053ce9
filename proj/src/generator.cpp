#include "bdgame/generator.hpp"

#include <sstream>

namespace bdg {

std::string random_formula(Random& rng, const std::vector<std::string>& atoms,
                           int depth) {
  const std::size_t pick = rng.below(depth > 0 ? 10 : 4);
  if (pick == 0 && depth > 0) return "true";
  if (pick < 4) {
    const std::string& a = atoms[rng.below(atoms.size())];
    return rng.coin() ? a : "!" + a;
  }
  const std::string lhs = random_formula(rng, atoms, depth - 1);
  const std::string rhs = random_formula(rng, atoms, depth - 1);
  switch (pick % 4) {
    case 0: return "!(" + lhs + ")";
    case 1: return "(" + lhs + ") & (" + rhs + ")";
    case 2: return "(" + lhs + ") | (" + rhs + ")";
    default: return "(" + lhs + ") -> (" + rhs + ")";
  }
}

std::string random_spec_text(Random& rng, const RandomSpecOptions& options) {
  static constexpr DecisionMode kModes[] = {DecisionMode::kPositiveSubsets,
                                            DecisionMode::kTotalAssignments,
                                            DecisionMode::kLiteralSubsets};
  const DecisionMode mode = options.mode ? *options.mode : kModes[rng.below(3)];
  const std::size_t agents =
      rng.between(options.min_agents, options.max_agents);

  std::vector<std::string> world;
  const std::size_t world_count =
      rng.between(options.min_world, options.max_world);
  for (std::size_t i = 0; i < world_count; ++i) {
    world.push_back("w" + std::to_string(i));
  }

  std::vector<std::vector<std::string>> own(agents);
  std::vector<std::string> all = world;
  for (std::size_t i = 0; i < agents; ++i) {
    const std::size_t n = rng.between(options.min_atoms, options.max_atoms);
    for (std::size_t k = 0; k < n; ++k) {
      own[i].push_back(std::string(1, static_cast<char>('a' + i)) +
                       std::to_string(k));
    }
    all.insert(all.end(), own[i].begin(), own[i].end());
  }

  std::ostringstream out;
  out << "system \"random\"\n";
  out << "option decision_mode = " << to_string(mode) << "\n";
  for (std::size_t i = 0; i < agents; ++i) {
    out << "agent ag" << i << " {\n";
    out << "  atoms";
    for (const auto& a : own[i]) out << " " << a;
    out << "\n";
    out << "  priority " << (options.ranked ? "ranked" : "identity") << "\n";
    const std::size_t facts = rng.between(0, options.max_facts);
    for (std::size_t k = 0; k < facts; ++k) {
      out << "  fact " << random_formula(rng, world, 1) << "\n";
    }
    const std::size_t beliefs = rng.between(0, options.max_beliefs);
    for (std::size_t k = 0; k < beliefs; ++k) {
      out << "  belief " << random_formula(rng, all, options.depth) << " => "
          << random_formula(rng, world, options.depth) << "\n";
    }
    const std::size_t desires = rng.between(0, options.max_desires);
    std::vector<int> ranks(desires);
    for (std::size_t k = 0; k < desires; ++k) ranks[k] = static_cast<int>(k + 1);
    for (std::size_t k = desires; k > 1; --k) {
      std::swap(ranks[k - 1], ranks[rng.below(k)]);
    }
    for (std::size_t k = 0; k < desires; ++k) {
      out << "  desire";
      if (options.ranked) out << " [rank=" << ranks[k] << "]:";
      out << " " << random_formula(rng, all, options.depth) << " => "
          << random_formula(rng, all, options.depth) << "\n";
    }
    if (rng.below(4) == 0) {
      const auto& a = own[i][rng.below(own[i].size())];
      out << "  initial " << (rng.coin() ? "" : "!") << a << "\n";
    }
    out << "}\n";
  }
  out << "world";
  for (const auto& w : world) out << " " << w;
  out << "\n";
  return out.str();
}

std::vector<std::string> exhaustive_spec_texts() {
  // Rule pool for an agent with atoms x (and y, which is x when absent).
  struct PoolRule {
    bool belief;
    std::string text;
  };
  auto pool = [](const std::string& x, const std::string& y) {
    return std::vector<PoolRule>{
        {true, x + " => p"},       {true, y + " => !p"},
        {false, "true => p"},      {false, "true => !" + x},
        {false, y + " => !p"},     {false, "p => " + x},
    };
  };
  // Subsets of at most 3 rules from a pool of 6.
  std::vector<unsigned> subsets;
  for (unsigned mask = 0; mask < 64; ++mask) {
    if (__builtin_popcount(mask) <= 3) subsets.push_back(mask);
  }

  auto block = [&](const std::string& id, const std::vector<std::string>& atoms,
                   unsigned mask) {
    const auto rules = pool(atoms[0], atoms.back());
    std::ostringstream out;
    out << "agent " << id << " {\n  atoms";
    for (const auto& a : atoms) out << " " << a;
    out << "\n  priority ranked\n";
    int rank = 6;
    for (std::size_t k = 0; k < rules.size(); ++k) {
      if (!(mask >> k & 1)) continue;
      if (rules[k].belief) {
        out << "  belief " << rules[k].text << "\n";
      } else {
        out << "  desire [rank=" << rank-- << "]: " << rules[k].text << "\n";
      }
    }
    out << "}\n";
    return out.str();
  };

  std::vector<std::string> out;
  const std::vector<std::vector<std::string>> first = {{"a"}, {"a", "b"}};
  const std::vector<std::vector<std::string>> second = {{"c"}, {"c", "d"}};
  for (const auto& atoms1 : first) {
    for (const auto& atoms2 : second) {
      for (unsigned m1 : subsets) {
        for (unsigned m2 : subsets) {
          out.push_back("system \"exhaustive\"\n"
                        "option decision_mode = literal-subsets\n" +
                        block("ag0", atoms1, m1) + block("ag1", atoms2, m2) +
                        "world p\n");
        }
      }
    }
  }
  return out;
}

RuleInstance random_rule_instance(Random& rng, std::size_t max_atoms,
                                  std::size_t max_rules) {
  std::vector<Atom> atoms;
  std::vector<std::string> names;
  const std::size_t n = rng.between(1, max_atoms);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("p" + std::to_string(i));
    atoms.push_back(Atom{names.back(), std::nullopt});
  }
  RuleInstance inst;
  inst.vocabulary = Vocabulary(std::move(atoms));
  auto formula = [&](int depth) {
    return parse_formula(random_formula(rng, names, depth), inst.vocabulary);
  };
  const std::size_t rules = rng.between(0, max_rules);
  for (std::size_t k = 0; k < rules; ++k) {
    inst.rules.push_back(Rule{"r" + std::to_string(k + 1), formula(2),
                              formula(1), RuleKind::kBelief, 0});
  }
  for (std::size_t k = rng.between(0, 2); k > 0; --k) {
    inst.theory.insert(formula(1));
  }
  for (std::size_t k = rng.between(0, 2); k > 0; --k) {
    inst.extra.insert(formula(1));
  }
  return inst;
}

}  // namespace bdg
