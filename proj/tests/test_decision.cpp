#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "bdgame/decision.hpp"
#include "bdgame/error.hpp"
#include "bdgame/game.hpp"
#include "bdgame/generator.hpp"
#include "oracle.hpp"
#include "testing.hpp"

using namespace bdg;

namespace {

DecisionProfile single(const AgentSystemSpec& spec, const char* lits) {
  return DecisionProfile{{parse_decision(spec, 0, lits)}};
}

RuleIdSet unreached_of(const AgentSystemSpec& spec, const char* lits) {
  return desire_report(spec, single(spec, lits)).agents[0].unreached;
}

std::vector<oracle::Desire> oracle_desires(const AgentSpec& agent) {
  std::vector<oracle::Desire> out;
  for (const auto& d : agent.desires) {
    out.push_back({d.id, d.antecedent.str(), d.consequent.str()});
  }
  return out;
}

PriorityOrder ranked(std::map<std::string, int> ranks) {
  return PriorityOrder{PriorityOrder::Mode::kRanked, std::move(ranks)};
}

}  // namespace

TEST_CASE("decision enumeration keeps the initial decision") {
  const auto spec = testing::fixture("ex2.bdg");
  const auto ds = enumerate_decisions(spec, 0);
  CHECK(ds.size() == 16);
  for (const auto& d : ds) {
    CHECK(std::find(d.literals.begin(), d.literals.end(),
                    spec.agents[0].initial_decision[0]) != d.literals.end());
  }
  std::size_t feasible = 0;
  for (const auto& d : ds) feasible += is_feasible_decision(spec, 0, d);
  CHECK(feasible == 10);

  const auto ex4 = testing::fixture("ex4.bdg");
  CHECK(enumerate_decisions(ex4, 0).size() == 2);
  CHECK(enumerate_profiles(ex4).size() == 4);
}

TEST_CASE("decision {a, d, e} is infeasible") {
  const auto spec = testing::fixture("ex2.bdg");
  const Decision d = parse_decision(spec, 0, "a,d,e");
  CHECK_FALSE(is_feasible_decision(spec, 0, d));
  CHECK(testing::texts(agent_extension(spec, d).all()) ==
        std::set<std::string>{"!p", "a", "d", "e", "q", "!q"});
  CHECK_THROWS_AS(desire_report(spec, single(spec, "a,d,e")),
                  InfeasibleProfile);
  CHECK_THROWS_AS(parse_decision(spec, 0, "a,zz"), Error);
}

TEST_CASE("unreached desires of ex2 agree with the oracle") {
  const auto spec = testing::fixture("ex2.bdg");
  const auto names = testing::atom_names(spec.vocabulary);
  const auto desires = oracle_desires(spec.agents[0]);
  for (const auto& d : enumerate_decisions(spec, 0)) {
    const Extension e = agent_extension(spec, d);
    if (!e.consistent) continue;
    CAPTURE(d.str(spec.vocabulary));
    const auto report = desire_report(spec, DecisionProfile{{d}});
    CHECK(report.agents[0].unreached ==
          oracle::unreached(desires, testing::texts(e.all()), names));
  }
}

TEST_CASE("ex2 unreached sets") {
  const auto spec = testing::fixture("ex2.bdg");
  CHECK(unreached_of(spec, "a") == RuleIdSet{"top_b", "top_q"});
  CHECK(unreached_of(spec, "a,b") == RuleIdSet{"b_p", "top_q"});
  CHECK(unreached_of(spec, "a,e") == RuleIdSet{"top_b", "top_q"});
  CHECK(unreached_of(spec, "a,b,c") == RuleIdSet{"b_p"});
  // q is derived and b is not, so only true => b stays open.
  CHECK(unreached_of(spec, "a,c") == RuleIdSet{"top_b"});
  CHECK(unreached_of(spec, "a,d") == RuleIdSet{"top_b"});
}

TEST_CASE("ex2 preferences") {
  const auto spec = testing::fixture("ex2.bdg");
  const auto ac = single(spec, "a,c");
  CHECK(compare_profiles(spec, ac, single(spec, "a"), 0) ==
        ProfileOrder::kBetter);
  CHECK(compare_profiles(spec, ac, single(spec, "a,b,c"), 0) ==
        ProfileOrder::kBetter);
  CHECK(compare_profiles(spec, single(spec, "a"), ac, 0) ==
        ProfileOrder::kWorse);
  CHECK(compare_profiles(spec, ac, single(spec, "a,d"), 0) ==
        ProfileOrder::kEqual);
}

TEST_CASE("lifted order examples") {
  const auto order = ranked({{"x", 3}, {"y", 2}, {"z", 1}});
  CHECK(lifted_geq({"x"}, {"y", "z"}, order));
  CHECK_FALSE(lifted_geq({"y"}, {"x"}, order));
  CHECK(lifted_geq({"x", "z"}, {"z"}, order));
  CHECK(lifted_geq({}, {}, order));
  CHECK(set_preference({"x"}, {"y"}, order) == SetRelation::kSucceeds);
  CHECK(set_preference({"y"}, {"x"}, order) == SetRelation::kPrecedes);
  CHECK(set_preference({"y"}, {"y"}, order) == SetRelation::kEquivalent);

  const PriorityOrder identity;
  CHECK(lifted_geq({"x", "y"}, {"y"}, identity));
  CHECK_FALSE(lifted_geq({"x"}, {"y"}, identity));
  CHECK(set_preference({"x"}, {"y"}, identity) == SetRelation::kIncomparable);
  CHECK(compare_unreached({"x"}, {"y"}, identity) ==
        ProfileOrder::kIncomparable);
  CHECK(compare_unreached({}, {"y"}, identity) == ProfileOrder::kBetter);
}

TEST_CASE("preference over another agent's desires is rejected") {
  const auto spec = testing::fixture("ex4.bdg");
  CHECK_THROWS_AS(set_preference(spec.agents[0], {"top_not_p"}, {}),
                  CrossAgentRule);
  CHECK(set_preference(spec.agents[0], {"top_p"}, {"top_q"}) ==
        SetRelation::kSucceeds);
}

TEST_CASE("lifted order agrees with the oracle on random subsets") {
  Random rng(3);
  const std::vector<std::string> ids{"r0", "r1", "r2", "r3", "r4"};
  for (int n = 0; n < 500; ++n) {
    std::map<std::string, int> ranks;
    std::vector<int> perm{1, 2, 3, 4, 5};
    for (std::size_t i = perm.size(); i > 1; --i) {
      std::swap(perm[i - 1], perm[rng.below(i)]);
    }
    for (std::size_t i = 0; i < ids.size(); ++i) ranks[ids[i]] = perm[i];
    RuleIdSet d1, d2;
    for (const auto& id : ids) {
      if (rng.coin()) d1.insert(id);
      if (rng.coin()) d2.insert(id);
    }
    const bool use_ranks = rng.coin();
    const PriorityOrder order = use_ranks ? ranked(ranks) : PriorityOrder{};
    CHECK(lifted_geq(d1, d2, order) ==
          oracle::lifted_geq(d1, d2, use_ranks ? ranks
                                               : std::map<std::string, int>{}));
  }
}

TEST_CASE("property: desire classification on random games") {
  Random rng(17);
  for (int n = 0; n < 150; ++n) {
    const auto spec = parse_spec(random_spec_text(rng, RandomSpecOptions{}));
    const GameSpecification game = derive_game(spec);
    for (std::size_t p = 0; p < game.size(); ++p) {
      const auto& report = game.profiles()[p].report;
      for (std::size_t i = 0; i < spec.agents.size(); ++i) {
        const AgentDesires& a = report.agents[i];
        CHECK(std::includes(a.unreached.begin(), a.unreached.end(),
                            a.violated.begin(), a.violated.end()));
        CHECK(a.reached.size() + a.unreached.size() + a.inapplicable.size() ==
              spec.agents[i].desires.size());
      }
      for (std::size_t q = 0; q < game.size(); ++q) {
        for (std::size_t i = 0; i < spec.agents.size(); ++i) {
          const RuleIdSet& u1 = game.unreached(p, i);
          const RuleIdSet& u2 = game.unreached(q, i);
          const ProfileOrder o = game.compare(p, q, i);
          if (u1 == u2) CHECK(o == ProfileOrder::kEqual);
          // Fewer unreached desires is never worse.
          if (std::includes(u2.begin(), u2.end(), u1.begin(), u1.end())) {
            CHECK((o == ProfileOrder::kBetter || o == ProfileOrder::kEqual));
          }
        }
      }
    }
  }
}
