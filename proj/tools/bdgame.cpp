// bdgame: command-line front end for agent system specifications.
//
//   bdgame validate FILE
//   bdgame extension [--agent ID --decision LITS] FILE
//   bdgame profiles [--feasible-only] FILE
//   bdgame solve --concept pareto|strong-pareto|dominant|nash FILE
//   bdgame goals --family CONCEPT|--all [--via-goals] FILE
//   bdgame check --property NAME [--random N --seed S] [FILE]
//
// Exit status: 0 success, 1 a check found violations, 2 input errors.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bdgame/error.hpp"
#include "bdgame/game.hpp"
#include "bdgame/generator.hpp"
#include "bdgame/goals.hpp"
#include "bdgame/model.hpp"
#include "bdgame/properties.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace bdg;

constexpr int kExitViolations = 1;
constexpr int kExitInput = 2;

struct RunConfig {
  std::string input;
  std::string command;
  std::string format = "text";
  std::string decision_mode;
  std::string infeasible_swaps = "skip";
  std::optional<std::size_t> max_atoms;
  std::optional<std::size_t> max_decisions;
  std::optional<std::size_t> max_profiles;
  std::optional<std::size_t> max_goal_candidates;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  std::size_t random = 0;

  std::string agent;
  std::string decision;
  bool feasible_only = false;
  std::string solution_concept;
  std::string family;
  bool all = false;
  bool via_goals = false;
  std::string property;
};

struct Output {
  Json json;
  std::ostringstream text;
  int status = 0;
};

Json base_report(const std::string& system, const std::string& command) {
  Json j;
  j["system"] = system;
  j["command"] = command;
  j["profiles"] = Json::array();
  j["solutions"] = Json::object();
  j["goal_sets"] = Json::array();
  j["checks"] = Json::array();
  return j;
}

Json string_list(const FormulaSet& set) {
  Json out = Json::array();
  for (const auto& f : set) out.push_back(f.str());
  return out;
}

Json string_list(const RuleIdSet& set) {
  Json out = Json::array();
  for (const auto& s : set) out.push_back(s);
  return out;
}

std::string ids_str(const RuleIdSet& set) {
  std::string out = "{";
  for (const auto& id : set) out += (out.size() > 1 ? ", " : "") + id;
  return out + "}";
}

Json profile_json(const AgentSystemSpec& spec, const DecisionProfile& profile,
                  const Extension& ext, const DesireReport* report) {
  Json j;
  Json decisions = Json::object();
  for (const auto& d : profile.decisions) {
    Json lits = Json::array();
    for (const auto& l : d.literals) lits.push_back(l.str(spec.vocabulary));
    decisions[spec.agents[d.agent].id] = lits;
  }
  j["decisions"] = decisions;
  j["extension"] = string_list(ext.all());
  j["consistent"] = ext.consistent;
  Json unreached = Json::object();
  if (report) {
    for (std::size_t i = 0; i < spec.agents.size(); ++i) {
      unreached[spec.agents[i].id] = string_list(report->agents[i].unreached);
    }
  }
  j["unreached"] = unreached;
  return j;
}

void profile_text(std::ostream& out, const AgentSystemSpec& spec,
                  std::size_t index, const DecisionProfile& profile,
                  const Extension& ext, const DesireReport* report) {
  out << "[" << index << "] " << profile.str(spec.vocabulary) << "  E = "
      << to_string(ext.all());
  if (!ext.consistent) {
    out << "  INCONSISTENT\n";
    return;
  }
  out << "\n";
  if (!report) return;
  for (std::size_t i = 0; i < spec.agents.size(); ++i) {
    out << "      U(" << spec.agents[i].id
        << ") = " << ids_str(report->agents[i].unreached) << "\n";
  }
}

void add_game_profiles(Output& o, const GameSpecification& game) {
  for (std::size_t p = 0; p < game.size(); ++p) {
    const auto& ep = game.profiles()[p];
    o.json["profiles"].push_back(
        profile_json(game.spec(), ep.profile, ep.extension, &ep.report));
  }
}

Json goal_set_json(const GoalSetEntry& entry) {
  Json j;
  j["positive"] = string_list(entry.goals.positive);
  j["negative"] = string_list(entry.goals.negative);
  j["generators"] = entry.generators;
  return j;
}

void add_check(Output& o, const CheckReport& r) {
  Json j;
  j["name"] = r.name;
  j["passed"] = r.passed;
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  o.json["checks"].push_back(j);
  o.text << r.name << ": " << (r.passed ? "PASS" : "FAIL");
  if (r.counterexample) o.text << "  " << *r.counterexample;
  o.text << "\n";
  constexpr std::size_t kShown = 10;
  std::size_t shown = 0;
  for (const auto& e : r.evidence) {
    if (r.counterexample && e == *r.counterexample) continue;
    if (shown++ < kShown) o.text << "  " << e << "\n";
  }
  if (shown > kShown) o.text << "  ... " << shown - kShown << " more\n";
  if (!r.passed) o.status = kExitViolations;
}

std::string profiles_str(const GameSpecification& game,
                         const std::vector<std::size_t>& indexes) {
  std::string out;
  for (std::size_t p : indexes) {
    out += "  [" + std::to_string(p) + "] " +
           game.profiles()[p].profile.str(game.spec().vocabulary) + "\n";
  }
  return out;
}

AgentSystemSpec configure(AgentSystemSpec spec, const RunConfig& cfg) {
  if (!cfg.decision_mode.empty()) {
    auto mode = parse_decision_mode(cfg.decision_mode);
    if (!mode) throw Error("unknown decision mode '" + cfg.decision_mode + "'");
    spec.options.decision_mode = *mode;
  }
  std::optional<std::size_t> atoms = cfg.max_atoms;
  if (!atoms) {
    if (const char* env = std::getenv("BDGAME_MAX_ATOMS")) {
      try {
        atoms = std::stoul(env);
      } catch (const std::exception&) {
        throw Error(std::string("BDGAME_MAX_ATOMS is not a number: ") + env);
      }
    }
  }
  if (atoms) spec.vocabulary = spec.vocabulary.with_bound(*atoms);
  if (cfg.max_decisions) spec.options.max_decisions = *cfg.max_decisions;
  if (cfg.max_profiles) spec.options.max_profiles = *cfg.max_profiles;
  if (cfg.max_goal_candidates) {
    spec.options.max_goal_candidates = *cfg.max_goal_candidates;
  }
  return spec;
}

// Loads, applies overrides and rejects invalid specs.
AgentSystemSpec load_valid(const RunConfig& cfg) {
  AgentSystemSpec spec = configure(load_spec(cfg.input), cfg);
  spec.vocabulary.check_bound();
  const ValidationReport v = validate_spec(spec);
  if (!v.valid()) {
    std::string msg = "invalid specification:";
    for (const auto& violation : v.violations) msg += "\n  " + violation.str();
    throw Error(msg);
  }
  return spec;
}

InfeasibleSwaps swaps_of(const RunConfig& cfg) {
  auto s = parse_infeasible_swaps(cfg.infeasible_swaps);
  if (!s) throw Error("unknown infeasible-swaps policy '" +
                      cfg.infeasible_swaps + "'");
  return *s;
}

// ---------------------------------------------------------------------------
// Commands

void run_validate(const RunConfig& cfg, Output& o) {
  const AgentSystemSpec spec = configure(load_spec(cfg.input), cfg);
  o.json = base_report(spec.name, "validate");
  const ValidationReport v = validate_spec(spec);
  CheckReport r;
  r.name = "validation";
  for (const auto& violation : v.violations) r.fail(violation.str());
  Json j;
  j["name"] = r.name;
  j["passed"] = r.passed;
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  o.json["checks"].push_back(j);
  o.json["violations"] = Json::array();
  for (const auto& violation : v.violations) {
    o.json["violations"].push_back(violation.str());
  }
  o.json["warnings"] = v.warnings;

  if (v.valid()) o.text << spec.name << ": valid\n";
  for (const auto& violation : v.violations) o.text << violation.str() << "\n";
  for (const auto& w : v.warnings) o.text << "warning: " << w << "\n";
  if (!v.valid()) o.status = kExitInput;
}

void run_extension(const RunConfig& cfg, Output& o) {
  const AgentSystemSpec spec = load_valid(cfg);
  o.json = base_report(spec.name, "extension");
  std::optional<std::size_t> agent;
  if (!cfg.agent.empty()) {
    agent = spec.agent_index(cfg.agent);
    if (!agent) throw Error("unknown agent '" + cfg.agent + "'");
  } else if (!cfg.decision.empty()) {
    if (spec.agents.size() != 1) {
      throw Error("--decision needs --agent when there are several agents");
    }
    agent = 0;
  }

  if (agent) {
    Decision d;
    d.agent = *agent;
    d.literals = spec.agents[*agent].initial_decision;
    if (!cfg.decision.empty()) d = parse_decision(spec, *agent, cfg.decision);
    const Extension e = agent_extension(spec, d);
    Json j;
    j["decisions"] = Json::object();
    Json lits = Json::array();
    for (const auto& l : d.literals) lits.push_back(l.str(spec.vocabulary));
    j["decisions"][spec.agents[*agent].id] = lits;
    j["extension"] = string_list(e.all());
    j["consistent"] = e.consistent;
    j["unreached"] = Json::object();
    j["iterations"] = e.iterations;
    o.json["profiles"].push_back(j);
    o.text << spec.agents[*agent].id << " " << d.str(spec.vocabulary)
           << ": E = " << to_string(e.all()) << "  "
           << (e.consistent ? "consistent" : "INCONSISTENT") << "\n";
    return;
  }

  DecisionProfile initial;
  for (std::size_t i = 0; i < spec.agents.size(); ++i) {
    initial.decisions.push_back(Decision{i, spec.agents[i].initial_decision});
  }
  const Extension joint = joint_extension(spec, initial);
  std::optional<DesireReport> report;
  if (joint.consistent) report = desire_report(spec, joint);
  o.json["profiles"].push_back(
      profile_json(spec, initial, joint, report ? &*report : nullptr));
  profile_text(o.text, spec, 0, initial, joint, report ? &*report : nullptr);
}

void run_profiles(const RunConfig& cfg, Output& o) {
  const AgentSystemSpec spec = load_valid(cfg);
  o.json = base_report(spec.name, "profiles");
  if (cfg.feasible_only) {
    const GameSpecification game = derive_game(spec, cfg.jobs);
    add_game_profiles(o, game);
    for (std::size_t p = 0; p < game.size(); ++p) {
      const auto& ep = game.profiles()[p];
      profile_text(o.text, spec, p, ep.profile, ep.extension, &ep.report);
    }
    return;
  }
  const auto profiles = enumerate_profiles(spec);
  for (std::size_t p = 0; p < profiles.size(); ++p) {
    const Extension e = joint_extension(spec, profiles[p]);
    std::optional<DesireReport> report;
    if (e.consistent) report = desire_report(spec, e);
    const DesireReport* r = report ? &*report : nullptr;
    o.json["profiles"].push_back(profile_json(spec, profiles[p], e, r));
    profile_text(o.text, spec, p, profiles[p], e, r);
  }
}

SolutionConcept concept_of(const std::string& name) {
  auto c = parse_solution_concept(name);
  if (!c) throw Error("unknown solution concept '" + name + "'");
  return *c;
}

void run_solve(const RunConfig& cfg, Output& o) {
  const AgentSystemSpec spec = load_valid(cfg);
  const SolutionConcept c = concept_of(cfg.solution_concept);
  const InfeasibleSwaps swaps = swaps_of(cfg);
  const GameSpecification game = derive_game(spec, cfg.jobs);
  const SolutionReport r = solve(game, c, swaps);

  o.json = base_report(spec.name, "solve");
  add_game_profiles(o, game);
  o.json["solutions"][std::string(to_string(c))] = r.profiles;
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    Json j;
    j["profile"] = w.profile;
    j["counter"] = w.counter.str(spec.vocabulary);
    if (w.agent) j["agent"] = spec.agents[*w.agent].id;
    j["infeasible_swap"] = w.infeasible_swap;
    witnesses.push_back(j);
  }
  o.json["witnesses"] = witnesses;

  o.text << to_string(c) << " (" << r.profiles.size() << " of " << game.size()
         << " feasible profiles, infeasible swaps " << to_string(swaps)
         << ")\n"
         << profiles_str(game, r.profiles);
  for (const auto& w : r.witnesses) {
    o.text << "  excluded [" << w.profile << "] "
           << game.profiles()[w.profile].profile.str(spec.vocabulary) << " by "
           << w.counter.str(spec.vocabulary);
    if (w.agent) o.text << " for " << spec.agents[*w.agent].id;
    if (w.infeasible_swap) o.text << " (infeasible swap)";
    o.text << "\n";
  }
}

void run_goals(const RunConfig& cfg, Output& o) {
  const AgentSystemSpec spec = load_valid(cfg);
  const InfeasibleSwaps swaps = swaps_of(cfg);
  if (cfg.all == !cfg.family.empty() && !cfg.via_goals) {
    throw Error("goals needs exactly one of --family CONCEPT and --all");
  }
  const GameSpecification game = derive_game(spec, cfg.jobs);
  o.json = base_report(spec.name, "goals");
  add_game_profiles(o, game);

  if (cfg.via_goals) {
    const GoalsFirstResult r = goals_first_pareto(game);
    for (const auto& entry : r.feasible_goal_sets) {
      o.json["goal_sets"].push_back(goal_set_json(entry));
    }
    o.json["solutions"]["pareto"] = r.pareto;
    o.text << "goals-first: " << r.candidates << " candidate goal sets, "
           << r.feasible_goal_sets.size() << " feasible\n";
    for (const auto& entry : r.feasible_goal_sets) {
      o.text << "  " << entry.goals.str() << "  goal-based:";
      for (std::size_t p : entry.generators) o.text << " " << p;
      o.text << "\n";
    }
    o.text << "pareto among goal-based profiles:\n"
           << profiles_str(game, r.pareto);
    return;
  }

  std::set<std::size_t> members;
  std::string label = "all";
  if (cfg.all) {
    for (std::size_t p = 0; p < game.size(); ++p) members.insert(p);
  } else {
    const SolutionConcept c = concept_of(cfg.family);
    label = std::string(to_string(c));
    const auto r = solve(game, c, swaps);
    members.insert(r.profiles.begin(), r.profiles.end());
  }
  const ProfileFamily family = u_closure(game, {members, false});
  const std::vector<std::size_t> closed(family.members.begin(),
                                        family.members.end());
  o.json["solutions"][label] = closed;
  o.text << "family " << label << " (U-closed, " << closed.size()
         << " profiles)\n"
         << profiles_str(game, closed);
  const auto entries = delta_goal_sets(game, family);
  for (const auto& entry : entries) {
    o.json["goal_sets"].push_back(goal_set_json(entry));
    o.text << "goal set " << entry.goals.str() << "  from:";
    for (std::size_t p : entry.generators) o.text << " " << p;
    o.text << "\n";
  }
  const CheckReport rep = representation_check(game, family);
  add_check(o, rep);
  o.status = 0;  // informational here; `check` reports violations
}

// Runs one named property on a game; appends to `into` with a label.
void property_on(const std::string& name, const GameSpecification& game,
                 const std::string& label, std::vector<CheckReport>& into) {
  auto merge = [&](const CheckReport& r) {
    CheckReport* target = nullptr;
    for (auto& existing : into) {
      if (existing.name == r.name) target = &existing;
    }
    if (!target) {
      into.push_back(CheckReport{r.name, true, std::nullopt, {}});
      target = &into.back();
    }
    if (!r.passed) {
      for (const auto& e : r.evidence) target->fail(label + ": " + e);
    }
  };
  const AgentSystemSpec& spec = game.spec();
  if (name == "representation") {
    const auto r = check_representation(game);
    merge(r.closure);
    merge(r.feasible);
  } else if (name == "monotonicity") {
    merge(check_spec_monotonicity(spec));
  } else if (name == "order-laws") {
    merge(check_spec_order_laws(spec));
  } else if (name == "pipeline-equivalence") {
    merge(check_pipeline_equivalence(game));
  } else if (name == "game-laws") {
    merge(check_game_laws(game));
  }
}

void run_check(const RunConfig& cfg, Output& o) {
  static const std::vector<std::string> kProperties = {
      "representation", "monotonicity", "order-laws", "pipeline-equivalence",
      "game-laws"};
  std::vector<std::string> names;
  if (cfg.property == "all") {
    names = kProperties;
  } else if (std::find(kProperties.begin(), kProperties.end(), cfg.property) !=
             kProperties.end()) {
    names = {cfg.property};
  } else {
    throw Error("unknown property '" + cfg.property + "'");
  }
  if (cfg.input.empty() && cfg.random == 0) {
    throw Error("check needs a FILE or --random N");
  }

  std::vector<CheckReport> reports;
  std::string system = "random";
  if (!cfg.input.empty()) {
    const AgentSystemSpec spec = load_valid(cfg);
    system = spec.name;
    const GameSpecification game = derive_game(spec, cfg.jobs);
    for (const auto& n : names) property_on(n, game, spec.name, reports);
  }
  if (cfg.random > 0) {
    Random rng(cfg.seed);
    RandomSpecOptions options;
    if (!cfg.decision_mode.empty()) {
      options.mode = parse_decision_mode(cfg.decision_mode);
    }
    for (std::size_t k = 0; k < cfg.random; ++k) {
      const AgentSystemSpec spec =
          configure(parse_spec(random_spec_text(rng, options)), cfg);
      const GameSpecification game = derive_game(spec, cfg.jobs);
      const std::string label = "random #" + std::to_string(k);
      for (const auto& n : names) property_on(n, game, label, reports);
    }
    for (const auto& n : names) {
      if (n == "monotonicity") {
        reports.push_back(check_extension_laws(cfg.seed, cfg.random));
      } else if (n == "order-laws") {
        reports.push_back(check_order_laws(4));
      }
    }
  }
  o.json = base_report(system, "check");
  for (const auto& r : reports) add_check(o, r);
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Belief/desire agent games: extensions, solutions and goals"};
  app.require_subcommand(1);
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--decision-mode", cfg.decision_mode,
                 "positive-subsets, total-assignments or literal-subsets");
  app.add_option("--infeasible-swaps", cfg.infeasible_swaps,
                 "skip or fail")
      ->check(CLI::IsMember({"skip", "fail"}));
  app.add_option("--max-atoms", cfg.max_atoms, "Atom cap for entailment");
  app.add_option("--max-decisions", cfg.max_decisions)
      ->check(CLI::PositiveNumber);
  app.add_option("--max-profiles", cfg.max_profiles)
      ->check(CLI::PositiveNumber);
  app.add_option("--max-goal-candidates", cfg.max_goal_candidates)
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", cfg.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);

  auto file = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("file", cfg.input, "Specification (.bdg)");
    if (required) opt->required()->check(CLI::ExistingFile);
  };

  auto* validate = app.add_subcommand("validate", "Check a specification");
  file(validate, true);

  auto* extension = app.add_subcommand("extension", "Belief extensions");
  extension->add_option("--agent", cfg.agent);
  extension->add_option("--decision", cfg.decision, "Literals, e.g. a,!b");
  file(extension, true);

  auto* profiles = app.add_subcommand("profiles", "Enumerate profiles");
  profiles->add_flag("--feasible-only", cfg.feasible_only);
  file(profiles, true);

  auto* solve_cmd = app.add_subcommand("solve", "Solution concepts");
  solve_cmd->add_option("--concept", cfg.solution_concept)
      ->required()
      ->check(CLI::IsMember({"pareto", "strong-pareto", "dominant", "nash"}));
  file(solve_cmd, true);

  auto* goals = app.add_subcommand("goals", "Joint goal sets");
  goals->add_option("--family", cfg.family, "Solution concept")
      ->check(CLI::IsMember({"pareto", "strong-pareto", "dominant", "nash"}));
  goals->add_flag("--all", cfg.all, "All feasible profiles");
  goals->add_flag("--via-goals", cfg.via_goals, "Goals-first pipeline");
  file(goals, true);

  auto* check = app.add_subcommand("check", "Property suites");
  check->add_option("--property", cfg.property)
      ->required()
      ->check(CLI::IsMember({"representation", "monotonicity", "order-laws",
                             "pipeline-equivalence", "game-laws", "all"}));
  check->add_option("--random", cfg.random, "Random instances");
  check->add_option("--seed", cfg.seed);
  file(check, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  Output out;
  try {
    if (cfg.command == "validate") run_validate(cfg, out);
    if (cfg.command == "extension") run_extension(cfg, out);
    if (cfg.command == "profiles") run_profiles(cfg, out);
    if (cfg.command == "solve") run_solve(cfg, out);
    if (cfg.command == "goals") run_goals(cfg, out);
    if (cfg.command == "check") run_check(cfg, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  if (cfg.format == "json") {
    std::cout << out.json.dump(2) << "\n";
  } else {
    std::cout << out.text.str();
  }
  return out.status;
}
