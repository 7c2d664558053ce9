#include "bdgame/model.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "bdgame/error.hpp"

namespace bdg {

std::string_view to_string(DecisionMode mode) {
  switch (mode) {
    case DecisionMode::kPositiveSubsets: return "positive-subsets";
    case DecisionMode::kTotalAssignments: return "total-assignments";
    case DecisionMode::kLiteralSubsets: return "literal-subsets";
  }
  return "?";
}

std::optional<DecisionMode> parse_decision_mode(std::string_view text) {
  if (text == "positive-subsets") return DecisionMode::kPositiveSubsets;
  if (text == "total-assignments") return DecisionMode::kTotalAssignments;
  if (text == "literal-subsets") return DecisionMode::kLiteralSubsets;
  return std::nullopt;
}

Formula Literal::formula(const Vocabulary& vocabulary) const {
  Formula f = Formula::atom(atom, vocabulary.atom(atom).name);
  return positive ? f : Formula::negation(f);
}

std::string Literal::str(const Vocabulary& vocabulary) const {
  return (positive ? "" : "!") + vocabulary.atom(atom).name;
}

bool PriorityOrder::higher(const std::string& d, const std::string& d2) const {
  if (mode == Mode::kIdentity) return false;
  auto a = ranks.find(d);
  auto b = ranks.find(d2);
  if (a == ranks.end() || b == ranks.end()) return false;
  return a->second > b->second;
}

const Rule* AgentSpec::find_desire(std::string_view rule_id) const {
  for (const auto& d : desires) {
    if (d.id == rule_id) return &d;
  }
  return nullptr;
}

std::optional<std::size_t> AgentSystemSpec::agent_index(
    std::string_view id) const {
  for (std::size_t i = 0; i < agents.size(); ++i) {
    if (agents[i].id == id) return i;
  }
  return std::nullopt;
}

FormulaSet AgentSystemSpec::all_facts() const {
  FormulaSet out;
  for (const auto& a : agents) out.insert(a.facts.begin(), a.facts.end());
  return out;
}

std::vector<Rule> AgentSystemSpec::all_beliefs() const {
  std::vector<Rule> out;
  for (const auto& a : agents) {
    out.insert(out.end(), a.beliefs.begin(), a.beliefs.end());
  }
  return out;
}

std::vector<Rule> AgentSystemSpec::all_desires() const {
  std::vector<Rule> out;
  for (const auto& a : agents) {
    out.insert(out.end(), a.desires.begin(), a.desires.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct RawText {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;  // 1-based column of text[0]
};

struct RawRule {
  std::optional<std::string> id;
  std::optional<int> rank;
  RawText antecedent;
  RawText consequent;
  std::size_t line = 0;
};

struct RawAgent {
  std::string id;
  std::size_t line = 0;
  std::vector<RawText> atoms;
  std::optional<PriorityOrder::Mode> priority;
  std::vector<RawText> facts;
  std::vector<RawRule> beliefs;
  std::vector<RawRule> desires;
  std::vector<RawText> initial;
};

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

bool is_agent_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
  });
}

// Splits `text` (starting at `column`) into whitespace/comma separated words.
std::vector<RawText> words(std::string_view text, std::size_t line,
                           std::size_t column, bool commas = false) {
  std::vector<RawText> out;
  std::size_t i = 0;
  auto sep = [&](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || (commas && c == ',');
  };
  while (i < text.size()) {
    while (i < text.size() && sep(text[i])) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !sep(text[j])) ++j;
    out.push_back({std::string(text.substr(i, j - i)), line, column + i});
    i = j;
  }
  return out;
}

// Trims and returns the 1-based column of the first kept character.
std::string_view trim(std::string_view s, std::size_t& column) {
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  std::size_t e = s.size();
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  column += b;
  return s.substr(b, e - b);
}

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  AgentSystemSpec parse() {
    scan();
    return build();
  }

 private:
  void scan() {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    RawAgent* current = nullptr;
    while (pos <= text_.size()) {
      std::size_t end = text_.find('\n', pos);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view line = text_.substr(pos, end - pos);
      pos = end + 1;
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      std::size_t col = 1;
      line = trim(line, col);
      if (line.empty()) continue;

      std::size_t kw_end = 0;
      while (kw_end < line.size() &&
             !std::isspace(static_cast<unsigned char>(line[kw_end]))) {
        ++kw_end;
      }
      const std::string_view keyword = line.substr(0, kw_end);
      std::size_t rest_col = col + kw_end;
      const std::string_view rest = trim(line.substr(kw_end), rest_col);

      if (current) {
        if (keyword == "}") {
          if (!rest.empty()) fail("unexpected text after '}'", line_no, rest_col);
          current = nullptr;
        } else {
          agent_line(*current, keyword, rest, line_no, col, rest_col);
        }
        continue;
      }
      if (keyword == "system") {
        if (rest.size() < 2 || rest.front() != '"' || rest.back() != '"') {
          fail("expected quoted system name", line_no, rest_col);
        }
        name_ = std::string(rest.substr(1, rest.size() - 2));
      } else if (keyword == "option") {
        option_line(rest, line_no, rest_col);
      } else if (keyword == "agent") {
        auto parts = words(rest, line_no, rest_col);
        if (parts.size() != 2 || parts[1].text != "{") {
          fail("expected 'agent NAME {'", line_no, rest_col);
        }
        if (!is_agent_identifier(parts[0].text)) {
          fail("invalid agent name '" + parts[0].text + "'", line_no,
               parts[0].column);
        }
        for (const auto& a : agents_) {
          if (a.id == parts[0].text) {
            fail("duplicate agent '" + parts[0].text + "'", line_no,
                 parts[0].column);
          }
        }
        agents_.push_back(RawAgent{});
        agents_.back().id = parts[0].text;
        agents_.back().line = line_no;
        current = &agents_.back();
      } else if (keyword == "world") {
        auto atoms = words(rest, line_no, rest_col);
        world_.insert(world_.end(), atoms.begin(), atoms.end());
      } else {
        fail("unknown declaration '" + std::string(keyword) + "'", line_no,
             col);
      }
    }
    if (current) {
      fail("agent '" + current->id + "' is not closed with '}'", current->line);
    }
  }

  void option_line(std::string_view rest, std::size_t line, std::size_t col) {
    const auto eq = rest.find('=');
    if (eq == std::string_view::npos) fail("expected 'option KEY = VALUE'", line, col);
    std::size_t kcol = col;
    const auto key = trim(rest.substr(0, eq), kcol);
    std::size_t vcol = col + eq + 1;
    const auto value = trim(rest.substr(eq + 1), vcol);
    if (key == "decision_mode") {
      auto mode = parse_decision_mode(value);
      if (!mode) {
        fail("unknown decision_mode '" + std::string(value) + "'", line, vcol);
      }
      options_.decision_mode = *mode;
    } else if (key == "max_atoms") {
      max_atoms_ = number(value, line, vcol);
    } else if (key == "max_decisions") {
      options_.max_decisions = number(value, line, vcol);
    } else if (key == "max_profiles") {
      options_.max_profiles = number(value, line, vcol);
    } else if (key == "max_goal_candidates") {
      options_.max_goal_candidates = number(value, line, vcol);
    } else {
      fail("unknown option '" + std::string(key) + "'", line, kcol);
    }
  }

  static std::size_t number(std::string_view text, std::size_t line,
                            std::size_t col) {
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        })) {
      fail("expected a positive integer", line, col);
    }
    const auto n = std::stoull(std::string(text));
    if (n == 0) fail("expected a positive integer", line, col);
    return static_cast<std::size_t>(n);
  }

  void agent_line(RawAgent& agent, std::string_view keyword,
                  std::string_view rest, std::size_t line, std::size_t col,
                  std::size_t rest_col) {
    if (keyword == "atoms") {
      auto atoms = words(rest, line, rest_col);
      agent.atoms.insert(agent.atoms.end(), atoms.begin(), atoms.end());
    } else if (keyword == "priority") {
      if (rest == "ranked") {
        agent.priority = PriorityOrder::Mode::kRanked;
      } else if (rest == "identity") {
        agent.priority = PriorityOrder::Mode::kIdentity;
      } else {
        fail("expected 'priority ranked' or 'priority identity'", line,
             rest_col);
      }
    } else if (keyword == "fact") {
      if (rest.empty()) fail("expected a formula", line, rest_col);
      agent.facts.push_back({std::string(rest), line, rest_col});
    } else if (keyword == "belief") {
      agent.beliefs.push_back(rule_line(rest, line, rest_col, false));
    } else if (keyword == "desire") {
      agent.desires.push_back(rule_line(rest, line, rest_col, true));
    } else if (keyword == "initial") {
      auto lits = words(rest, line, rest_col, true);
      agent.initial.insert(agent.initial.end(), lits.begin(), lits.end());
    } else if (keyword == "agent") {
      fail("agent blocks cannot nest", line, col);
    } else {
      fail("unknown agent declaration '" + std::string(keyword) + "'", line,
           col);
    }
  }

  RawRule rule_line(std::string_view rest, std::size_t line, std::size_t col,
                    bool desire) {
    RawRule rule;
    rule.line = line;
    std::string_view body = rest;
    std::size_t body_col = col;
    if (auto colon = rest.find(':'); colon != std::string_view::npos) {
      std::size_t head_col = col;
      std::string_view head = trim(rest.substr(0, colon), head_col);
      body_col = col + colon + 1;
      body = trim(rest.substr(colon + 1), body_col);
      if (auto bracket = head.find('['); bracket != std::string_view::npos) {
        if (!desire) fail("ranks are only allowed on desires", line, head_col + bracket);
        if (head.back() != ']') fail("expected ']'", line, head_col + head.size());
        std::size_t attr_col = head_col + bracket + 1;
        auto attr = trim(head.substr(bracket + 1, head.size() - bracket - 2),
                         attr_col);
        if (attr.substr(0, 5) != "rank=") {
          fail("expected 'rank=N'", line, attr_col);
        }
        rule.rank = static_cast<int>(number(attr.substr(5), line, attr_col + 5));
        std::size_t id_col = head_col;
        head = trim(head.substr(0, bracket), id_col);
      }
      if (!head.empty()) {
        if (!is_identifier(head)) {
          fail("invalid rule id '" + std::string(head) + "'", line, head_col);
        }
        rule.id = std::string(head);
      }
    }
    const auto arrow = body.find("=>");
    if (arrow == std::string_view::npos) {
      fail("expected 'ANTECEDENT => CONSEQUENT'", line, body_col);
    }
    if (body.find("=>", arrow + 2) != std::string_view::npos) {
      fail("a rule has exactly one '=>'", line,
           body_col + body.find("=>", arrow + 2));
    }
    std::size_t ac = body_col;
    auto ante = trim(body.substr(0, arrow), ac);
    std::size_t cc = body_col + arrow + 2;
    auto cons = trim(body.substr(arrow + 2), cc);
    if (ante.empty()) fail("missing antecedent", line, body_col);
    if (cons.empty()) fail("missing consequent", line, cc);
    rule.antecedent = {std::string(ante), line, ac};
    rule.consequent = {std::string(cons), line, cc};
    return rule;
  }

  AgentSystemSpec build() {
    if (agents_.empty()) fail("at least one agent is required", 1);

    std::vector<Atom> atoms;
    std::map<std::string, std::size_t> declared;  // name -> line
    auto declare = [&](const RawText& w, std::optional<std::string> owner) {
      if (!is_identifier(w.text) || w.text == "true" || w.text == "false") {
        fail("invalid atom name '" + w.text + "'", w.line, w.column);
      }
      if (auto it = declared.find(w.text); it != declared.end()) {
        fail("duplicate atom '" + w.text + "' (first declared on line " +
                 std::to_string(it->second) + ")",
             w.line, w.column);
      }
      declared.emplace(w.text, w.line);
      atoms.push_back(Atom{w.text, std::move(owner)});
    };
    for (const auto& a : agents_) {
      for (const auto& w : a.atoms) declare(w, a.id);
    }
    for (const auto& w : world_) declare(w, std::nullopt);

    AgentSystemSpec spec;
    spec.name = name_;
    spec.options = options_;
    try {
      spec.vocabulary = Vocabulary(std::move(atoms), max_atoms_);
    } catch (const VocabularyOverflow& e) {
      fail(e.what(), 1);
    }
    const Vocabulary& vocab = spec.vocabulary;
    for (AtomId id = 0; id < vocab.size(); ++id) {
      if (vocab.atom(id).is_world()) spec.world_atoms.push_back(id);
    }

    for (std::size_t index = 0; index < agents_.size(); ++index) {
      const RawAgent& raw = agents_[index];
      AgentSpec agent;
      agent.id = raw.id;
      for (const auto& w : raw.atoms) agent.decision_atoms.push_back(*vocab.find(w.text));
      std::sort(agent.decision_atoms.begin(), agent.decision_atoms.end());

      for (const auto& f : raw.facts) agent.facts.insert(formula(f, vocab));

      std::set<std::string> used;
      auto explicit_ids = [&](const std::vector<RawRule>& rules) {
        for (const auto& r : rules) {
          if (r.id && !used.insert(*r.id).second) {
            fail("duplicate rule id '" + *r.id + "' in agent '" + raw.id + "'",
                 r.line);
          }
        }
      };
      explicit_ids(raw.beliefs);
      explicit_ids(raw.desires);
      auto make_rules = [&](const std::vector<RawRule>& rules, RuleKind kind,
                            const char* prefix) {
        std::vector<Rule> out;
        int counter = 0;
        for (const auto& r : rules) {
          Rule rule;
          rule.kind = kind;
          rule.owner = index;
          rule.antecedent = formula(r.antecedent, vocab);
          rule.consequent = formula(r.consequent, vocab);
          if (r.id) {
            rule.id = *r.id;
          } else {
            do {
              rule.id = prefix + std::to_string(++counter);
            } while (used.contains(rule.id));
            used.insert(rule.id);
          }
          out.push_back(std::move(rule));
        }
        return out;
      };
      agent.beliefs = make_rules(raw.beliefs, RuleKind::kBelief, "b");
      agent.desires = make_rules(raw.desires, RuleKind::kDesire, "d");

      bool any_rank = false;
      for (const auto& r : raw.desires) any_rank = any_rank || r.rank.has_value();
      agent.priority.mode = raw.priority.value_or(
          any_rank ? PriorityOrder::Mode::kRanked
                   : PriorityOrder::Mode::kIdentity);
      for (std::size_t i = 0; i < raw.desires.size(); ++i) {
        const auto& r = raw.desires[i];
        if (!r.rank) continue;
        if (agent.priority.mode == PriorityOrder::Mode::kIdentity) {
          fail("rank given under 'priority identity'", r.line);
        }
        agent.priority.ranks[agent.desires[i].id] = *r.rank;
      }

      std::set<Literal> initial;
      for (const auto& w : raw.initial) {
        const bool positive = w.text.empty() || w.text[0] != '!';
        const std::string name = positive ? w.text : w.text.substr(1);
        auto id = vocab.find(name);
        if (!id) fail("undeclared atom '" + name + "'", w.line, w.column);
        if (vocab.atom(*id).owner != raw.id) {
          fail("initial decision literal '" + w.text +
                   "' is not a decision atom of agent '" + raw.id + "'",
               w.line, w.column);
        }
        initial.insert(Literal{*id, positive});
      }
      agent.initial_decision.assign(initial.begin(), initial.end());
      spec.agents.push_back(std::move(agent));
    }
    return spec;
  }

  static Formula formula(const RawText& raw, const Vocabulary& vocab) {
    try {
      return parse_formula(raw.text, vocab);
    } catch (const ParseError& e) {
      std::string what = e.what();
      what = what.substr(0, what.rfind(" at column"));
      fail(what, raw.line, raw.column + e.column - 1);
    } catch (const UndeclaredAtom& e) {
      const auto at = raw.text.find(e.name);
      fail(e.what(), raw.line,
           raw.column + (at == std::string::npos ? 0 : at));
    }
  }

  [[noreturn]] static void fail(const std::string& what, std::size_t line,
                                std::size_t column = 0) {
    throw SpecError(what, line, column);
  }

  std::string_view text_;
  std::string name_;
  SpecOptions options_;
  std::size_t max_atoms_ = Vocabulary::kDefaultBound;
  std::vector<RawAgent> agents_;
  std::vector<RawText> world_;
};

}  // namespace

AgentSystemSpec parse_spec(std::string_view text) {
  return SpecParser(text).parse();
}

AgentSystemSpec load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_spec(buffer.str());
}

std::string print_spec(const AgentSystemSpec& spec) {
  const Vocabulary& vocab = spec.vocabulary;
  std::ostringstream out;
  out << "system \"" << spec.name << "\"\n";
  out << "option decision_mode = " << to_string(spec.options.decision_mode)
      << "\n";
  if (vocab.bound() != Vocabulary::kDefaultBound) {
    out << "option max_atoms = " << vocab.bound() << "\n";
  }
  if (spec.options.max_decisions != SpecOptions::kDefaultMaxDecisions) {
    out << "option max_decisions = " << spec.options.max_decisions << "\n";
  }
  if (spec.options.max_profiles != SpecOptions::kDefaultMaxProfiles) {
    out << "option max_profiles = " << spec.options.max_profiles << "\n";
  }
  if (spec.options.max_goal_candidates !=
      SpecOptions::kDefaultMaxGoalCandidates) {
    out << "option max_goal_candidates = " << spec.options.max_goal_candidates
        << "\n";
  }
  for (const auto& agent : spec.agents) {
    out << "agent " << agent.id << " {\n";
    if (!agent.decision_atoms.empty()) {
      out << "  atoms";
      for (AtomId id : agent.decision_atoms) out << " " << vocab.atom(id).name;
      out << "\n";
    }
    out << "  priority "
        << (agent.priority.mode == PriorityOrder::Mode::kRanked ? "ranked"
                                                                : "identity")
        << "\n";
    for (const auto& f : agent.facts) out << "  fact " << f.str() << "\n";
    for (const auto& r : agent.beliefs) {
      out << "  belief " << r.id << ": " << r.str() << "\n";
    }
    for (const auto& r : agent.desires) {
      out << "  desire " << r.id;
      if (auto it = agent.priority.ranks.find(r.id);
          it != agent.priority.ranks.end()) {
        out << " [rank=" << it->second << "]";
      }
      out << ": " << r.str() << "\n";
    }
    if (!agent.initial_decision.empty()) {
      out << "  initial";
      for (const auto& lit : agent.initial_decision) {
        out << " " << lit.str(vocab);
      }
      out << "\n";
    }
    out << "}\n";
  }
  if (!spec.world_atoms.empty()) {
    out << "world";
    for (AtomId id : spec.world_atoms) out << " " << vocab.atom(id).name;
    out << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Validation

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kNoAgents: return "no-agents";
    case ViolationKind::kBeliefConsequentNotWorld:
      return "belief-consequent-not-in-L_W";
    case ViolationKind::kFactNotWorld: return "fact-not-in-L_W";
    case ViolationKind::kPriorityNotTotal: return "priority-not-total";
    case ViolationKind::kInitialDecisionInconsistent:
      return "initial-decision-inconsistent";
    case ViolationKind::kCrossAgentPriority: return "cross-agent-priority";
    case ViolationKind::kPriorityUnknownRule: return "priority-unknown-rule";
  }
  return "?";
}

std::string Violation::str() const {
  std::string out(to_string(kind));
  if (!agent.empty()) out += " [" + agent + "]";
  if (!subject.empty()) out += ": " + subject;
  return out;
}

ValidationReport validate_spec(const AgentSystemSpec& spec) {
  ValidationReport report;
  const Vocabulary& vocab = spec.vocabulary;
  auto add = [&](ViolationKind kind, const std::string& agent,
                 std::string subject) {
    report.violations.push_back(Violation{kind, agent, std::move(subject)});
  };
  if (spec.agents.empty()) add(ViolationKind::kNoAgents, "", "");

  const Language world = Language::world();
  for (const auto& agent : spec.agents) {
    for (const auto& f : agent.facts) {
      if (!world.contains(f, vocab)) {
        add(ViolationKind::kFactNotWorld, agent.id, f.str());
      }
    }
    for (const auto& r : agent.beliefs) {
      if (!world.contains(r.consequent, vocab)) {
        add(ViolationKind::kBeliefConsequentNotWorld, agent.id,
            r.id + ": " + r.str());
      }
    }

    if (agent.priority.mode == PriorityOrder::Mode::kRanked) {
      std::map<int, std::vector<std::string>> by_rank;
      for (const auto& d : agent.desires) {
        auto it = agent.priority.ranks.find(d.id);
        if (it == agent.priority.ranks.end()) {
          add(ViolationKind::kPriorityNotTotal, agent.id,
              "desire " + d.id + " has no rank");
        } else {
          by_rank[it->second].push_back(d.id);
        }
      }
      for (auto& [rank, ids] : by_rank) {
        if (ids.size() > 1) {
          std::sort(ids.begin(), ids.end());
          std::string list;
          for (const auto& id : ids) list += (list.empty() ? "" : ", ") + id;
          add(ViolationKind::kPriorityNotTotal, agent.id,
              "desires " + list + " share rank " + std::to_string(rank));
        }
      }
    }
    for (const auto& [rule_id, rank] : agent.priority.ranks) {
      if (agent.find_desire(rule_id)) continue;
      bool elsewhere = false;
      for (const auto& other : spec.agents) {
        if (&other != &agent && other.find_desire(rule_id)) elsewhere = true;
      }
      add(elsewhere ? ViolationKind::kCrossAgentPriority
                    : ViolationKind::kPriorityUnknownRule,
          agent.id, rule_id);
    }

    for (std::size_t i = 1; i < agent.initial_decision.size(); ++i) {
      if (agent.initial_decision[i].atom == agent.initial_decision[i - 1].atom) {
        add(ViolationKind::kInitialDecisionInconsistent, agent.id,
            vocab.atom(agent.initial_decision[i].atom).name);
      }
    }
  }
  std::sort(report.violations.begin(), report.violations.end());

  if (!spec.agents.empty() && vocab.size() <= vocab.bound() &&
      !consistent(spec.all_facts(), vocab)) {
    report.warnings.push_back("the facts of all agents are jointly inconsistent");
  }
  return report;
}

}  // namespace bdg
