#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bdgame/error.hpp"
#include "bdgame/generator.hpp"
#include "bdgame/logic.hpp"
#include "oracle.hpp"

using namespace bdg;

namespace {

Vocabulary vocab() {
  return Vocabulary({{"a", "alpha1"}, {"b", "alpha1"}, {"d", "alpha1"},
                     {"e", "alpha1"}, {"p", std::nullopt},
                     {"q", std::nullopt}, {"r", std::nullopt}});
}

FormulaSet set_of(std::initializer_list<const char*> texts, const Vocabulary& v) {
  FormulaSet out;
  for (const char* t : texts) out.insert(parse_formula(t, v));
  return out;
}

std::vector<std::string> names(const Vocabulary& v) {
  std::vector<std::string> out;
  for (const auto& a : v.atoms()) out.push_back(a.name);
  return out;
}

std::set<std::string> texts(const FormulaSet& s) {
  std::set<std::string> out;
  for (const auto& f : s) out.insert(f.str());
  return out;
}

}  // namespace

TEST_CASE("vocabulary orders atoms by name") {
  Vocabulary v({{"q", std::nullopt}, {"a", "x"}, {"p", std::nullopt}});
  CHECK(v.atom(0).name == "a");
  CHECK(v.atom(2).name == "q");
  CHECK(v.world_mask() == 0b110);
  CHECK(v.agent_mask("x") == 0b001);
  CHECK_THROWS_AS(Vocabulary({{"a", "x"}, {"a", std::nullopt}}), Error);
}

TEST_CASE("parse negation") {
  const auto v = vocab();
  const Formula f = parse_formula("!p", v);
  CHECK(f.kind() == Formula::Kind::kNot);
  CHECK(f.operand().kind() == Formula::Kind::kAtom);
  CHECK(f.operand().str() == "p");
}

TEST_CASE("rule arrow is not formula syntax") {
  const auto v = vocab();
  CHECK_THROWS_AS(parse_formula("b => p", v), ParseError);
  try {
    parse_formula("b => p", v);
  } catch (const ParseError& e) {
    CHECK(e.column == 3);
  }
}

TEST_CASE("precedence: ! over & over | over ->") {
  const auto v = vocab();
  const Formula f = parse_formula("a & !q | r", v);
  // Hand-built tree (a & !q) | r.
  const Formula a = Formula::atom(*v.find("a"), "a");
  const Formula q = Formula::atom(*v.find("q"), "q");
  const Formula r = Formula::atom(*v.find("r"), "r");
  const Formula expected =
      Formula::disjunction(Formula::conjunction(a, Formula::negation(q)), r);
  CHECK(f == expected);
  CHECK(f.kind() == Formula::Kind::kOr);
  CHECK(f.lhs().kind() == Formula::Kind::kAnd);

  const Formula imp = parse_formula("p -> q -> r", v);
  CHECK(imp.rhs().kind() == Formula::Kind::kImplies);
  CHECK(imp.str() == "p -> q -> r");
  CHECK(parse_formula("(p -> q) -> r", v).str() == "(p -> q) -> r");
}

TEST_CASE("parse errors") {
  const auto v = vocab();
  CHECK_THROWS_AS(parse_formula("", v), ParseError);
  CHECK_THROWS_AS(parse_formula("(p & q", v), ParseError);
  CHECK_THROWS_AS(parse_formula("p q", v), ParseError);
  CHECK_THROWS_AS(parse_formula("zz", v), UndeclaredAtom);
  try {
    parse_formula("p & zz", v);
  } catch (const UndeclaredAtom& e) {
    CHECK(e.name == "zz");
  }
}

TEST_CASE("entailment examples") {
  const auto v = vocab();
  CHECK(entails(set_of({"!p", "a"}, v), parse_formula("!p", v), v));
  CHECK(entails(set_of({"p | q", "!p"}, v), parse_formula("q", v), v));
  CHECK(entails(set_of({"!p", "a", "d", "e", "q", "!q"}, v),
                parse_formula("b", v), v));
  CHECK_FALSE(entails(set_of({"p | q"}, v), parse_formula("q", v), v));
  CHECK(entails({}, parse_formula("true", v), v));
}

TEST_CASE("consistency examples") {
  const auto v = vocab();
  CHECK(consistent({}, v));
  CHECK(consistent(set_of({"!p", "a", "d", "q"}, v), v));
  CHECK_FALSE(consistent(set_of({"q", "!q"}, v), v));
}

TEST_CASE("sublanguages") {
  const auto v = vocab();
  CHECK(Language::world().contains(parse_formula("p & q", v), v));
  CHECK_FALSE(Language::world().contains(parse_formula("a & p", v), v));
  CHECK(Language::world().contains(parse_formula("true", v), v));
  CHECK(Language::agent("alpha1").contains(parse_formula("true", v), v));
  CHECK(Language::agent("alpha1").contains(parse_formula("a | !b", v), v));
  CHECK_FALSE(Language::agent("alpha2").contains(parse_formula("a", v), v));
  CHECK(in_sublanguage(parse_formula("a -> p", v), Language::any(), v));
}

TEST_CASE("vocabulary bound") {
  const auto v = vocab().with_bound(3);
  CHECK_THROWS_AS(entails({}, parse_formula("p", v), v), VocabularyOverflow);
  CHECK_THROWS_AS(consistent({}, v), VocabularyOverflow);
}

TEST_CASE("formula set ordering groups literals") {
  const auto v = vocab();
  CHECK(to_string(set_of({"q", "!p", "a", "!q"}, v)) == "{a, !p, !q, q}");
}

TEST_CASE("property: entailment agrees with the oracle and obeys its laws") {
  Random rng(11);
  std::vector<Atom> atoms;
  std::vector<std::string> atom_names;
  for (int i = 0; i < 6; ++i) {
    atom_names.push_back("x" + std::to_string(i));
    atoms.push_back({atom_names.back(), std::nullopt});
  }
  const Vocabulary v(atoms);
  for (int n = 0; n < 1000; ++n) {
    FormulaSet s;
    for (std::size_t k = rng.between(0, 3); k > 0; --k) {
      s.insert(parse_formula(random_formula(rng, atom_names, 2), v));
    }
    const Formula x = parse_formula(random_formula(rng, atom_names, 2), v);
    const Formula y = parse_formula(random_formula(rng, atom_names, 2), v);
    const Formula extra = parse_formula(random_formula(rng, atom_names, 2), v);

    const bool sx = entails(s, x, v);
    REQUIRE(sx == oracle::entails(texts(s), x.str(), atom_names));
    CHECK(consistent(s, v) == !entails(s, Formula::bottom(), v));
    CHECK(consistent(s, v) == oracle::consistent(texts(s), atom_names));

    FormulaSet sx_set = s;
    sx_set.insert(x);
    if (sx && entails(sx_set, y, v)) CHECK(entails(s, y, v));
    FormulaSet bigger = s;
    bigger.insert(extra);
    if (sx) CHECK(entails(bigger, x, v));

    // Printer round trip.
    CHECK(parse_formula(x.str(), v) == x);
  }
}
