#pragma once

// Shared helpers for the unit tests: fixture loading and string views of
// library values.

#include <set>
#include <string>
#include <vector>

#include "bdgame/game.hpp"
#include "bdgame/model.hpp"

#ifndef BDGAME_SPECS_DIR
#define BDGAME_SPECS_DIR "specs"
#endif

namespace testing {

inline bdg::AgentSystemSpec fixture(const std::string& name) {
  return bdg::load_spec(std::string(BDGAME_SPECS_DIR) + "/" + name);
}

inline std::set<std::string> texts(const bdg::FormulaSet& s) {
  std::set<std::string> out;
  for (const auto& f : s) out.insert(f.str());
  return out;
}

inline std::vector<std::string> atom_names(const bdg::Vocabulary& v) {
  std::vector<std::string> out;
  for (const auto& a : v.atoms()) out.push_back(a.name);
  return out;
}

// Profile indexes rendered as "<{a}, {!b}>" strings.
inline std::set<std::string> profile_strs(
    const bdg::GameSpecification& game,
    const std::vector<std::size_t>& indexes) {
  std::set<std::string> out;
  for (std::size_t p : indexes) {
    out.insert(game.profiles()[p].profile.str(game.spec().vocabulary));
  }
  return out;
}

inline std::size_t index_of(const bdg::GameSpecification& game,
                            const std::string& profile) {
  for (std::size_t p = 0; p < game.size(); ++p) {
    if (game.profiles()[p].profile.str(game.spec().vocabulary) == profile) {
      return p;
    }
  }
  throw std::runtime_error("no feasible profile " + profile);
}

}  // namespace testing
