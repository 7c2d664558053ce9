#pragma once

// Brute-force reference implementations used as test oracles. They share no
// code with the library: formulas are re-parsed from their printed text and
// evaluated over every assignment of the full atom list.

#include <cctype>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Assignment = std::map<std::string, bool>;

class Evaluator {
 public:
  Evaluator(const std::string& text, const Assignment& v) : s_(text), v_(v) {}

  bool run() {
    bool r = implication();
    skip();
    if (pos_ != s_.size()) throw std::runtime_error("oracle: trailing " + s_);
    return r;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }
  bool eat(const std::string& tok) {
    skip();
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  bool implication() {
    bool l = disjunction();
    if (eat("->")) {
      bool r = implication();
      return !l || r;
    }
    return l;
  }
  bool disjunction() {
    bool l = conjunction();
    while (eat("|")) {
      bool r = conjunction();
      l = l || r;
    }
    return l;
  }
  bool conjunction() {
    bool l = unary();
    while (eat("&")) {
      bool r = unary();
      l = l && r;
    }
    return l;
  }
  bool unary() {
    if (eat("!")) return !unary();
    if (eat("(")) {
      bool r = implication();
      if (!eat(")")) throw std::runtime_error("oracle: missing ) in " + s_);
      return r;
    }
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
            s_[pos_] == '_')) {
      ++pos_;
    }
    const std::string name = s_.substr(start, pos_ - start);
    if (name == "true") return true;
    if (name == "false") return false;
    auto it = v_.find(name);
    if (it == v_.end()) throw std::runtime_error("oracle: unknown atom " + name);
    return it->second;
  }

  std::string s_;
  const Assignment& v_;
  std::size_t pos_ = 0;
};

inline bool eval(const std::string& f, const Assignment& v) {
  return Evaluator(f, v).run();
}

template <typename Fn>
void for_each_assignment(const std::vector<std::string>& atoms, Fn fn) {
  const std::size_t n = std::size_t{1} << atoms.size();
  for (std::size_t m = 0; m < n; ++m) {
    Assignment v;
    for (std::size_t i = 0; i < atoms.size(); ++i) v[atoms[i]] = m >> i & 1;
    fn(v);
  }
}

inline bool entails(const std::set<std::string>& premises,
                    const std::string& conclusion,
                    const std::vector<std::string>& atoms) {
  bool ok = true;
  for_each_assignment(atoms, [&](const Assignment& v) {
    for (const auto& p : premises) {
      if (!eval(p, v)) return;
    }
    if (!eval(conclusion, v)) ok = false;
  });
  return ok;
}

inline bool consistent(const std::set<std::string>& premises,
                       const std::vector<std::string>& atoms) {
  return !entails(premises, "false", atoms);
}

using Rule = std::pair<std::string, std::string>;

// Intersection of every X with T <= X closed under the rules, X
// restricted to T plus rule consequents (any closed superset contains one).
inline std::set<std::string> extension(const std::vector<Rule>& rules,
                                       const std::set<std::string>& base,
                                       const std::vector<std::string>& atoms) {
  std::vector<std::string> extra;
  for (const auto& [a, c] : rules) {
    if (!base.count(c)) {
      bool seen = false;
      for (const auto& e : extra) seen = seen || e == c;
      if (!seen) extra.push_back(c);
    }
  }
  std::set<std::string> meet;
  bool first = true;
  for (std::size_t m = 0; m < (std::size_t{1} << extra.size()); ++m) {
    std::set<std::string> x = base;
    for (std::size_t i = 0; i < extra.size(); ++i) {
      if (m >> i & 1) x.insert(extra[i]);
    }
    bool closed = true;
    for (const auto& [a, c] : rules) {
      if (!x.count(c) && entails(x, a, atoms)) closed = false;
    }
    if (!closed) continue;
    if (first) {
      meet = x;
      first = false;
    } else {
      std::set<std::string> keep;
      for (const auto& f : meet) {
        if (x.count(f)) keep.insert(f);
      }
      meet = keep;
    }
  }
  return meet;
}

// d1 >= d2 under ranks (empty map = identity order).
inline bool lifted_geq(const std::set<std::string>& d1,
                       const std::set<std::string>& d2,
                       const std::map<std::string, int>& ranks) {
  for (const auto& lo : d2) {
    if (d1.count(lo)) continue;
    bool beaten = false;
    for (const auto& hi : d1) {
      if (d2.count(hi)) continue;
      auto a = ranks.find(hi);
      auto b = ranks.find(lo);
      if (a != ranks.end() && b != ranks.end() && a->second > b->second) {
        beaten = true;
      }
    }
    if (!beaten) return false;
  }
  return true;
}

struct Desire {
  std::string id;
  std::string antecedent;
  std::string consequent;
};

// Unreached desires against an extension given as formula strings.
inline std::set<std::string> unreached(const std::vector<Desire>& desires,
                                       const std::set<std::string>& ext,
                                       const std::vector<std::string>& atoms) {
  std::set<std::string> out;
  for (const auto& d : desires) {
    if (entails(ext, d.antecedent, atoms) &&
        !entails(ext, d.consequent, atoms)) {
      out.insert(d.id);
    }
  }
  return out;
}

}  // namespace oracle
