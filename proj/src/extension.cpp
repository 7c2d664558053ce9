#include "bdgame/extension.hpp"

#include <algorithm>
#include <cstdint>

#include "bdgame/error.hpp"

namespace bdg {

FormulaSet Extension::all() const {
  FormulaSet out = base;
  out.insert(derived.begin(), derived.end());
  return out;
}

FormulaSet applicable_consequents(std::span<const Rule> rules,
                                  const FormulaSet& theory,
                                  const Vocabulary& vocabulary) {
  FormulaSet out;
  if (rules.empty()) return out;
  // An inconsistent theory entails every antecedent.
  const bool explode = !consistent(theory, vocabulary);
  for (const auto& rule : rules) {
    if (explode || entails(theory, rule.antecedent, vocabulary)) {
      out.insert(rule.consequent);
    }
  }
  return out;
}

Extension extension(std::span<const Rule> rules, const FormulaSet& base,
                    const Vocabulary& vocabulary) {
  Extension ext;
  ext.base = base;
  FormulaSet current = base;
  std::vector<bool> fired(rules.size(), false);

  for (;;) {
    const bool explode = !consistent(current, vocabulary);
    std::vector<Formula> added;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      if (fired[i]) continue;
      if (explode || entails(current, rules[i].antecedent, vocabulary)) {
        fired[i] = true;
        if (!current.contains(rules[i].consequent)) {
          added.push_back(rules[i].consequent);
        }
      }
    }
    if (added.empty()) {
      ext.consistent = !explode;
      break;
    }
    // All rules applicable in a round fire against the same set.
    for (auto& f : added) {
      current.insert(f);
      ext.derived.insert(std::move(f));
    }
    ++ext.iterations;
  }
  return ext;
}

bool fixpoint_certificate(std::span<const Rule> rules, const FormulaSet& base,
                          const FormulaSet& claimed,
                          const Vocabulary& vocabulary) {
  if (!std::includes(claimed.begin(), claimed.end(), base.begin(),
                     base.end())) {
    return false;
  }
  // Every closed superset meets T u cons(R) in a closed set, so the least
  // closed superset is the intersection of the closed X with
  // T <= X <= T u cons(R).
  std::vector<Formula> candidates;
  for (const auto& r : rules) {
    if (!base.contains(r.consequent) &&
        std::find(candidates.begin(), candidates.end(), r.consequent) ==
            candidates.end()) {
      candidates.push_back(r.consequent);
    }
  }
  if (candidates.size() > 20) {
    throw BoundExceeded("fixpoint certificate over " +
                        std::to_string(candidates.size()) +
                        " candidate consequents");
  }
  const std::uint64_t subsets = std::uint64_t{1} << candidates.size();
  std::uint64_t intersection = subsets - 1;
  for (std::uint64_t s = 0; s < subsets; ++s) {
    FormulaSet x = base;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if ((s >> i) & 1U) x.insert(candidates[i]);
    }
    const FormulaSet fired = applicable_consequents(rules, x, vocabulary);
    const bool closed =
        std::includes(x.begin(), x.end(), fired.begin(), fired.end());
    if (closed) intersection &= s;
  }
  FormulaSet least = base;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if ((intersection >> i) & 1U) least.insert(candidates[i]);
  }
  return least == claimed;
}

}  // namespace bdg
