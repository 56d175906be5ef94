#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "randlp/atom_set.hpp"
#include "randlp/errors.hpp"

namespace randlp {

// a <- b_1, ..., b_s, not c_1, ..., not c_t
//
// Bodies are kept sorted so equality and ordering are canonical.
class Rule {
 public:
  Rule() = default;

  Rule(Atom head, std::vector<Atom> pos_body, std::vector<Atom> neg_body)
      : head_(head), pos_(std::move(pos_body)), neg_(std::move(neg_body)) {
    std::sort(pos_.begin(), pos_.end());
    std::sort(neg_.begin(), neg_.end());
    std::vector<Atom> all(pos_);
    all.insert(all.end(), neg_.begin(), neg_.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
      throw InvalidArgument("body atoms of a rule must be pairwise distinct");
  }

  // a <- not b
  static Rule negative(Atom head, Atom body) { return Rule(head, {}, {body}); }

  Atom head() const noexcept { return head_; }
  const std::vector<Atom>& pos_body() const noexcept { return pos_; }
  const std::vector<Atom>& neg_body() const noexcept { return neg_; }

  bool is_positive() const noexcept { return neg_.empty(); }
  bool is_negative() const noexcept { return pos_.empty(); }
  bool is_two_literal() const noexcept { return pos_.empty() && neg_.size() == 1; }
  bool is_pure() const noexcept { return is_two_literal() && neg_[0] != head_; }
  bool is_contradiction() const noexcept { return is_two_literal() && neg_[0] == head_; }

  Atom max_atom() const noexcept {
    Atom m = head_;
    for (auto a : pos_) m = std::max(m, a);
    for (auto a : neg_) m = std::max(m, a);
    return m;
  }

  friend bool operator==(const Rule&, const Rule&) = default;
  friend auto operator<=>(const Rule& a, const Rule& b) {
    if (auto c = a.head_ <=> b.head_; c != 0) return c;
    if (auto c = a.pos_ <=> b.pos_; c != 0) return c;
    return a.neg_ <=> b.neg_;
  }

 private:
  Atom head_;
  std::vector<Atom> pos_;
  std::vector<Atom> neg_;
};

// A finite set of rules over the universe [0, n).
//
// Rules are sorted and deduplicated on construction. The optional symbol
// table names atoms for text I/O; it takes no part in equality.
class Program {
 public:
  Program() = default;

  Program(std::size_t n, std::vector<Rule> rules, std::vector<std::string> names = {})
      : n_(n), rules_(std::move(rules)), names_(std::move(names)) {
    for (const auto& r : rules_)
      if (r.max_atom().index >= n_)
        throw InvalidArgument("rule atom " + std::to_string(r.max_atom().index) +
                              " outside universe of size " + std::to_string(n_));
    if (!names_.empty() && names_.size() != n_)
      throw InvalidArgument("symbol table size does not match universe size");
    std::sort(rules_.begin(), rules_.end());
    rules_.erase(std::unique(rules_.begin(), rules_.end()), rules_.end());
    n2_ = std::all_of(rules_.begin(), rules_.end(),
                      [](const Rule& r) { return r.is_two_literal(); });
  }

  std::size_t universe() const noexcept { return n_; }
  const std::vector<Rule>& rules() const noexcept { return rules_; }
  std::size_t size() const noexcept { return rules_.size(); }
  bool empty() const noexcept { return rules_.empty(); }

  // Every rule has the form a <- not b.
  bool is_n2() const noexcept { return n2_; }
  bool is_positive() const noexcept {
    return std::all_of(rules_.begin(), rules_.end(), [](const Rule& r) { return r.is_positive(); });
  }
  bool is_negative() const noexcept {
    return std::all_of(rules_.begin(), rules_.end(), [](const Rule& r) { return r.is_negative(); });
  }

  const std::vector<std::string>& names() const noexcept { return names_; }
  bool has_names() const noexcept { return !names_.empty(); }

  // Symbol for atom `a`; unnamed programs use a<index>.
  std::string name_of(Atom a) const {
    if (has_names()) return names_.at(a.index);
    return "a" + std::to_string(a.index);
  }

  std::optional<Atom> find(const std::string& name) const {
    for (std::size_t i = 0; i < n_; ++i)
      if (name_of(Atom{static_cast<std::uint32_t>(i)}) == name)
        return Atom{static_cast<std::uint32_t>(i)};
    return std::nullopt;
  }

  friend bool operator==(const Program& a, const Program& b) {
    return a.n_ == b.n_ && a.rules_ == b.rules_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Rule> rules_;
  std::vector<std::string> names_;
  bool n2_ = true;
};

}  // namespace randlp
