#include "bdgame/logic.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "bdgame/error.hpp"

namespace bdg {

// ---------------------------------------------------------------------------
// Vocabulary

Vocabulary::Vocabulary(std::vector<Atom> atoms, std::size_t bound)
    : atoms_(std::move(atoms)), bound_(bound) {
  if (atoms_.size() > kHardLimit) {
    throw VocabularyOverflow("vocabulary has " + std::to_string(atoms_.size()) +
                             " atoms; at most " + std::to_string(kHardLimit) +
                             " are supported");
  }
  std::sort(atoms_.begin(), atoms_.end(),
            [](const Atom& a, const Atom& b) { return a.name < b.name; });
  for (AtomId id = 0; id < atoms_.size(); ++id) {
    const auto& atom = atoms_[id];
    if (!index_.emplace(atom.name, id).second) {
      throw Error("duplicate atom '" + atom.name + "'");
    }
    if (atom.is_world()) world_mask_ |= AtomMask{1} << id;
  }
}

std::optional<AtomId> Vocabulary::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

AtomMask Vocabulary::agent_mask(std::string_view agent) const {
  AtomMask mask = 0;
  for (AtomId id = 0; id < atoms_.size(); ++id) {
    if (atoms_[id].owner && *atoms_[id].owner == agent) {
      mask |= AtomMask{1} << id;
    }
  }
  return mask;
}

Vocabulary Vocabulary::with_bound(std::size_t bound) const {
  Vocabulary copy = *this;
  copy.bound_ = bound;
  return copy;
}

void Vocabulary::check_bound() const {
  if (atoms_.size() > bound_) {
    throw VocabularyOverflow("vocabulary has " + std::to_string(atoms_.size()) +
                             " atoms, above the model-enumeration bound of " +
                             std::to_string(bound_));
  }
}

// ---------------------------------------------------------------------------
// Formula

namespace {

int precedence(Formula::Kind kind) {
  switch (kind) {
    case Formula::Kind::kImplies: return 1;
    case Formula::Kind::kOr: return 2;
    case Formula::Kind::kAnd: return 3;
    case Formula::Kind::kNot: return 4;
    default: return 5;
  }
}

const char* op_token(Formula::Kind kind) {
  switch (kind) {
    case Formula::Kind::kImplies: return " -> ";
    case Formula::Kind::kOr: return " | ";
    case Formula::Kind::kAnd: return " & ";
    default: return "";
  }
}

std::string wrap(const std::string& text, bool parens) {
  return parens ? "(" + text + ")" : text;
}

}  // namespace

Formula::Formula() : Formula(top()) {}

Formula Formula::make(Kind kind, const Formula* lhs, const Formula* rhs) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  if (lhs) {
    node->lhs = lhs->node_;
    node->mask |= lhs->atoms();
  }
  if (rhs) {
    node->rhs = rhs->node_;
    node->mask |= rhs->atoms();
  }
  switch (kind) {
    case Kind::kTrue: node->text = "true"; break;
    case Kind::kFalse: node->text = "false"; break;
    case Kind::kAtom: break;
    case Kind::kNot:
      node->text = "!" + wrap(lhs->str(), precedence(lhs->kind()) < 4);
      break;
    default: {
      const int p = precedence(kind);
      const int pl = precedence(lhs->kind());
      const int pr = precedence(rhs->kind());
      // -> is right-associative; & and | are left-associative.
      const bool left_parens = pl < p || (kind == Kind::kImplies && pl == p);
      const bool right_parens = pr < p || (kind != Kind::kImplies && pr == p);
      node->text = wrap(lhs->str(), left_parens) + op_token(kind) +
                   wrap(rhs->str(), right_parens);
    }
  }
  node->sort_offset = node->text.find_first_not_of("!(");
  if (node->sort_offset == std::string::npos) node->sort_offset = 0;
  return Formula(std::shared_ptr<const Node>(std::move(node)));
}

Formula Formula::top() {
  static const Formula t = make(Kind::kTrue, nullptr, nullptr);
  return t;
}

Formula Formula::bottom() {
  static const Formula f = make(Kind::kFalse, nullptr, nullptr);
  return f;
}

Formula Formula::atom(AtomId id, std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kAtom;
  node->atom = id;
  node->mask = AtomMask{1} << id;
  node->text = std::move(name);
  return Formula(std::shared_ptr<const Node>(std::move(node)));
}

Formula Formula::negation(Formula operand) {
  return make(Kind::kNot, &operand, nullptr);
}
Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return make(Kind::kAnd, &lhs, &rhs);
}
Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return make(Kind::kOr, &lhs, &rhs);
}
Formula Formula::implication(Formula lhs, Formula rhs) {
  return make(Kind::kImplies, &lhs, &rhs);
}

bool Formula::evaluate(AtomMask assignment) const {
  return eval(node_.get(), assignment);
}

bool Formula::eval(const Node* n, AtomMask assignment) {
  switch (n->kind) {
    case Kind::kTrue: return true;
    case Kind::kFalse: return false;
    case Kind::kAtom: return (assignment >> n->atom) & 1U;
    case Kind::kNot: return !eval(n->lhs.get(), assignment);
    case Kind::kAnd:
      return eval(n->lhs.get(), assignment) && eval(n->rhs.get(), assignment);
    case Kind::kOr:
      return eval(n->lhs.get(), assignment) || eval(n->rhs.get(), assignment);
    case Kind::kImplies:
      return !eval(n->lhs.get(), assignment) || eval(n->rhs.get(), assignment);
  }
  return false;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const std::string_view ka =
      std::string_view(a.node_->text).substr(a.node_->sort_offset);
  const std::string_view kb =
      std::string_view(b.node_->text).substr(b.node_->sort_offset);
  if (auto c = ka.compare(kb); c != 0) {
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  const int c = a.node_->text.compare(b.node_->text);
  if (c == 0) return std::strong_ordering::equal;
  return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string to_string(const FormulaSet& set) {
  std::string out = "{";
  bool first = true;
  for (const auto& f : set) {
    if (!first) out += ", ";
    out += f.str();
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { kIdent, kTrue, kFalse, kNot, kAnd, kOr, kImplies, kLParen,
                 kRParen, kEnd };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t column;  // 1-based
};

class FormulaParser {
 public:
  FormulaParser(std::string_view text, const Vocabulary& vocabulary)
      : text_(text), vocabulary_(vocabulary) {
    advance();
  }

  Formula parse() {
    Formula f = implication();
    if (tok_.kind != Tok::kEnd) fail("unexpected '" + std::string(tok_.text) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, tok_.column);
  }

  void advance() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    const std::size_t start = pos_;
    auto make = [&](Tok kind, std::size_t len) {
      tok_ = Token{kind, text_.substr(start, len), start + 1};
      pos_ = start + len;
    };
    if (pos_ >= text_.size()) {
      tok_ = Token{Tok::kEnd, "end of input", start + 1};
      return;
    }
    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_ + 1;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) ||
              text_[end] == '_')) {
        ++end;
      }
      const auto word = text_.substr(start, end - start);
      make(word == "true"    ? Tok::kTrue
           : word == "false" ? Tok::kFalse
                             : Tok::kIdent,
           end - start);
      return;
    }
    switch (c) {
      case '!': make(Tok::kNot, 1); return;
      case '&': make(Tok::kAnd, 1); return;
      case '|': make(Tok::kOr, 1); return;
      case '(': make(Tok::kLParen, 1); return;
      case ')': make(Tok::kRParen, 1); return;
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          make(Tok::kImplies, 2);
          return;
        }
        break;
      default: break;
    }
    tok_ = Token{Tok::kEnd, text_.substr(start, 1), start + 1};
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (tok_.kind == Tok::kImplies) {
      advance();
      return Formula::implication(lhs, implication());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (tok_.kind == Tok::kOr) {
      advance();
      f = Formula::disjunction(f, conjunction());
    }
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (tok_.kind == Tok::kAnd) {
      advance();
      f = Formula::conjunction(f, unary());
    }
    return f;
  }

  Formula unary() {
    if (tok_.kind == Tok::kNot) {
      advance();
      return Formula::negation(unary());
    }
    return primary();
  }

  Formula primary() {
    switch (tok_.kind) {
      case Tok::kTrue: advance(); return Formula::top();
      case Tok::kFalse: advance(); return Formula::bottom();
      case Tok::kIdent: {
        const std::string name(tok_.text);
        auto id = vocabulary_.find(name);
        if (!id) throw UndeclaredAtom(name);
        advance();
        return Formula::atom(*id, name);
      }
      case Tok::kLParen: {
        advance();
        Formula f = implication();
        if (tok_.kind != Tok::kRParen) fail("expected ')'");
        advance();
        return f;
      }
      default:
        fail("expected a formula but found '" + std::string(tok_.text) + "'");
    }
  }

  std::string_view text_;
  const Vocabulary& vocabulary_;
  std::size_t pos_ = 0;
  Token tok_{Tok::kEnd, "", 1};
};

}  // namespace

Formula parse_formula(std::string_view text, const Vocabulary& vocabulary) {
  return FormulaParser(text, vocabulary).parse();
}

// ---------------------------------------------------------------------------
// Entailment

namespace {

// Is there an assignment satisfying every premise and falsifying `negated`
// (when given)? Enumerates only the atoms that occur; the remaining atoms
// cannot change any truth value.
bool satisfiable(const FormulaSet& premises, const Formula* negated,
                 const Vocabulary& vocabulary) {
  vocabulary.check_bound();
  AtomMask used = negated ? negated->atoms() : 0;
  for (const auto& p : premises) used |= p.atoms();

  std::vector<AtomId> positions;
  for (AtomMask m = used; m; m &= m - 1) {
    positions.push_back(static_cast<AtomId>(std::countr_zero(m)));
  }
  const std::uint64_t models = std::uint64_t{1} << positions.size();
  for (std::uint64_t k = 0; k < models; ++k) {
    AtomMask assignment = 0;
    for (std::size_t bit = 0; bit < positions.size(); ++bit) {
      if ((k >> bit) & 1U) assignment |= AtomMask{1} << positions[bit];
    }
    if (negated && negated->evaluate(assignment)) continue;
    bool all = true;
    for (const auto& p : premises) {
      if (!p.evaluate(assignment)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

}  // namespace

bool entails(const FormulaSet& premises, const Formula& conclusion,
             const Vocabulary& vocabulary) {
  return !satisfiable(premises, &conclusion, vocabulary);
}

bool consistent(const FormulaSet& premises, const Vocabulary& vocabulary) {
  return satisfiable(premises, nullptr, vocabulary);
}

bool Language::contains(const Formula& f, const Vocabulary& vocabulary) const {
  switch (kind_) {
    case Kind::kAny: return true;
    case Kind::kWorld: return (f.atoms() & ~vocabulary.world_mask()) == 0;
    case Kind::kAgent:
      return (f.atoms() & ~vocabulary.agent_mask(agent_)) == 0;
  }
  return false;
}

}  // namespace bdg
