#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "bdgame/error.hpp"
#include "bdgame/generator.hpp"
#include "bdgame/model.hpp"
#include "testing.hpp"

using namespace bdg;

namespace {

std::vector<ViolationKind> kinds(const ValidationReport& r) {
  std::vector<ViolationKind> out;
  for (const auto& v : r.violations) out.push_back(v.kind);
  return out;
}

const char* kTwoAgents = R"(
system "two"
agent alpha1 {
  atoms a
  priority ranked
  belief a => p
  desire d1 [rank=2]: true => p
  desire d2 [rank=1]: true => q
}
agent alpha2 {
  atoms b
  belief b => q
  desire true => !p
}
world p q
)";

}  // namespace

TEST_CASE("ex2 fixture") {
  const AgentSystemSpec spec = testing::fixture("ex2.bdg");
  REQUIRE(spec.agents.size() == 1);
  const AgentSpec& a = spec.agents[0];
  CHECK(a.id == "alpha1");
  CHECK(a.decision_atoms.size() == 5);
  CHECK(spec.world_atoms.size() == 2);
  CHECK(a.beliefs.size() == 3);
  CHECK(a.desires.size() == 5);
  CHECK(a.initial_decision.size() == 1);
  CHECK(a.priority.higher("b_p", "top_b"));
  CHECK(validate_spec(spec).valid());
  CHECK(validate_spec(spec).warnings.empty());
}

TEST_CASE("structural parse errors") {
  CHECK_THROWS_WITH_AS(parse_spec("system \"x\"\nworld p\n"),
                       doctest::Contains("at least one agent"), SpecError);
  CHECK_THROWS_AS(parse_spec("agent x {\n atoms a\n}\nagent y {\n atoms a\n}\n"),
                  SpecError);
  CHECK_THROWS_AS(parse_spec("agent x {\n atoms a\n belief a => zz\n}\n"),
                  SpecError);
  CHECK_THROWS_AS(parse_spec("agent x {\n atoms a\n"), SpecError);
  CHECK_THROWS_AS(parse_spec("agent x {\n atoms a\n bogus a\n}\n"), SpecError);
  CHECK_THROWS_AS(parse_spec("agent x {\n atoms a\n initial a !a q\n}\nworld q\n"),
                  SpecError);
  CHECK_THROWS_AS(
      parse_spec("agent x {\n atoms a\n priority identity\n"
                 " desire d [rank=1]: true => a\n}\n"),
      SpecError);
  try {
    parse_spec("agent x {\n  atoms a\n  belief a => p &\n}\nworld p\n");
    FAIL("expected a syntax error");
  } catch (const SpecError& e) {
    CHECK(e.line == 3);
    CHECK(e.column > 0);
  }
}

TEST_CASE("auto ids skip explicit labels") {
  const auto spec = parse_spec(
      "agent x {\n atoms a\n desire d2: true => a\n desire a => p\n"
      " desire true => !p\n}\nworld p\n");
  const auto& ds = spec.agents[0].desires;
  REQUIRE(ds.size() == 3);
  CHECK(ds[0].id == "d2");
  CHECK(ds[1].id == "d1");
  CHECK(ds[2].id == "d3");
}

TEST_CASE("validation examples") {
  const auto bad_belief =
      parse_spec("agent x {\n atoms a\n belief true => a\n}\n");
  CHECK(kinds(validate_spec(bad_belief)) ==
        std::vector{ViolationKind::kBeliefConsequentNotWorld});

  const auto tie = parse_spec(
      "agent x {\n atoms a\n priority ranked\n desire [rank=1]: true => a\n"
      " desire [rank=1]: true => !a\n}\n");
  CHECK(kinds(validate_spec(tie)) ==
        std::vector{ViolationKind::kPriorityNotTotal});

  const auto missing = parse_spec(
      "agent x {\n atoms a\n priority ranked\n desire [rank=1]: true => a\n"
      " desire true => !a\n}\n");
  CHECK(kinds(validate_spec(missing)) ==
        std::vector{ViolationKind::kPriorityNotTotal});

  const auto fact = parse_spec("agent x {\n atoms a\n fact a\n}\n");
  CHECK(kinds(validate_spec(fact)) == std::vector{ViolationKind::kFactNotWorld});

  CHECK(kinds(validate_spec(AgentSystemSpec{})) ==
        std::vector{ViolationKind::kNoAgents});
}

TEST_CASE("priority across agents") {
  AgentSystemSpec spec = parse_spec(kTwoAgents);
  spec.agents[0].priority.ranks["d1@alpha2"] = 7;
  const auto unknown = kinds(validate_spec(spec));
  CHECK(std::count(unknown.begin(), unknown.end(),
                   ViolationKind::kPriorityUnknownRule) == 1);
  spec = parse_spec(kTwoAgents);
  spec.agents[1].desires[0].id = "other";
  spec.agents[0].priority.ranks["other"] = 9;
  const auto k = kinds(validate_spec(spec));
  CHECK(std::find(k.begin(), k.end(), ViolationKind::kCrossAgentPriority) !=
        k.end());
}

TEST_CASE("inconsistent initial decision built programmatically") {
  AgentSystemSpec spec = parse_spec("agent x {\n atoms a\n}\n");
  spec.agents[0].initial_decision = {{0, true}, {0, false}};
  CHECK(kinds(validate_spec(spec)) ==
        std::vector{ViolationKind::kInitialDecisionInconsistent});
}

TEST_CASE("contradicting facts only warn") {
  const auto spec = parse_spec(
      "agent x {\n atoms a\n fact p\n}\nagent y {\n atoms b\n fact !p\n}\n"
      "world p\n");
  const auto r = validate_spec(spec);
  CHECK(r.valid());
  CHECK(r.warnings.size() == 1);
}

TEST_CASE("fixtures round-trip through the printer") {
  for (const char* name : {"ex1.bdg", "ex2.bdg", "ex3.bdg", "ex4.bdg",
                           "cooperation.bdg", "prisoners.bdg"}) {
    CAPTURE(name);
    const auto spec = testing::fixture(name);
    CHECK(parse_spec(print_spec(spec)) == spec);
    CHECK(print_spec(parse_spec(print_spec(spec))) == print_spec(spec));
  }
}

TEST_CASE("property: round trip, typing and order independence") {
  Random rng(99);
  for (int n = 0; n < 200; ++n) {
    const std::string text = random_spec_text(rng, RandomSpecOptions{});
    const AgentSystemSpec spec = parse_spec(text);
    CAPTURE(text);
    REQUIRE(parse_spec(print_spec(spec)) == spec);
    const ValidationReport r = validate_spec(spec);
    CHECK(r.valid());
    for (const auto& agent : spec.agents) {
      for (const auto& b : agent.beliefs) {
        CHECK(Language::world().contains(b.consequent, spec.vocabulary));
      }
      for (const auto& f : agent.facts) {
        CHECK(Language::world().contains(f, spec.vocabulary));
      }
    }

    // Reversing the agent blocks keeps the violation multiset.
    AgentSystemSpec reversed = spec;
    std::reverse(reversed.agents.begin(), reversed.agents.end());
    reversed.agents[0].priority.ranks["ghost"] = 1;
    AgentSystemSpec forward = spec;
    forward.agents.back().priority.ranks["ghost"] = 1;
    CHECK(validate_spec(reversed).violations ==
          validate_spec(forward).violations);
  }
}
