#pragma once

// Program text and CSV output.
//
// Program syntax, one rule per statement:
//
//   % comment to end of line
//   #universe 5.          universe size is max(5, atoms seen)
//   #atoms b a c.         pre-intern atoms in this index order
//   a :- not b, c.
//   b.
//
// Atoms are interned in first-appearance order unless #atoms fixes them.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "randlp/errors.hpp"
#include "randlp/program.hpp"

namespace randlp {

namespace detail {

class ProgramParser {
 public:
  explicit ProgramParser(std::string_view text) : text_(text) {}

  Program parse() {
    std::vector<Rule> rules;
    std::unordered_set<std::string> seen;
    for (;;) {
      skip_space();
      if (at_end()) break;
      if (peek() == '#') {
        directive();
        continue;
      }
      const auto line = line_;
      const auto col = col_;
      const Atom head = intern(identifier());
      std::vector<Atom> pos;
      std::vector<Atom> neg;
      skip_space();
      if (match(":-")) {
        do {
          skip_space();
          const auto lit_line = line_;
          const auto lit_col = col_;
          auto word = identifier();
          if (word == "not") {
            neg.push_back(intern(identifier()));
          } else {
            pos.push_back(intern(word));
          }
          std::vector<Atom> all(pos);
          all.insert(all.end(), neg.begin(), neg.end());
          std::sort(all.begin(), all.end());
          if (std::adjacent_find(all.begin(), all.end()) != all.end())
            throw ParseError(lit_line, lit_col,
                             "duplicate body atom in rule starting at " + std::to_string(line) +
                                 ":" + std::to_string(col));
          skip_space();
        } while (match(","));
      }
      expect('.');
      rules.emplace_back(head, std::move(pos), std::move(neg));
    }
    const std::size_t n = std::max(declared_, names_.size());
    std::unordered_set<std::string> taken(names_.begin(), names_.end());
    for (std::size_t i = names_.size(); i < n; ++i) {
      std::string name = "a" + std::to_string(i);
      while (taken.count(name) != 0) name.insert(name.begin(), '_');
      taken.insert(name);
      names_.push_back(name);
    }
    return Program(n, std::move(rules), std::move(names_));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (!at_end()) {
      if (peek() == '%') {
        while (!at_end() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(peek()))) {
        advance();
      } else {
        return;
      }
    }
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, col_, what); }

  bool match(std::string_view tok) {
    if (text_.substr(pos_, tok.size()) != tok) return false;
    for (std::size_t i = 0; i < tok.size(); ++i) advance();
    return true;
  }

  void expect(char c) {
    skip_space();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  std::string identifier() {
    skip_space();
    if (at_end()) fail("expected atom, found end of input");
    const char c = peek();
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_'))
      fail(std::string("expected atom, found '") + c + "'");
    std::string out;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      out.push_back(peek());
      advance();
    }
    return out;
  }

  Atom intern(const std::string& name) {
    if (name == "not") fail("'not' is reserved and cannot name an atom");
    auto [it, inserted] = index_.try_emplace(name, static_cast<std::uint32_t>(names_.size()));
    if (inserted) names_.push_back(name);
    return Atom{it->second};
  }

  void directive() {
    advance();  // '#'
    const auto word = identifier();
    if (word == "universe") {
      skip_space();
      std::size_t value = 0;
      const auto start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) advance();
      if (pos_ == start) fail("expected universe size");
      std::from_chars(text_.data() + start, text_.data() + pos_, value);
      declared_ = std::max(declared_, value);
      expect('.');
    } else if (word == "atoms") {
      skip_space();
      while (!at_end() && peek() != '.') {
        const auto name = identifier();
        if (index_.count(name) != 0) fail("atom '" + name + "' already declared");
        intern(name);
        skip_space();
      }
      expect('.');
    } else {
      fail("unknown directive #" + word);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  std::size_t declared_ = 0;
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

}  // namespace detail

inline Program parse_program(std::string_view text) {
  return detail::ProgramParser(text).parse();
}

inline std::string format_rule(const Program& p, const Rule& r) {
  std::string out = p.name_of(r.head());
  if (!r.pos_body().empty() || !r.neg_body().empty()) {
    out += " :- ";
    bool first = true;
    auto lit = [&](Atom a, bool negated) {
      if (!first) out += ", ";
      first = false;
      if (negated) out += "not ";
      out += p.name_of(a);
    };
    for (auto a : r.pos_body()) lit(a, false);
    for (auto a : r.neg_body()) lit(a, true);
  }
  out += ".";
  return out;
}

// Canonical text: #universe header, an #atoms line when parsing the rules
// alone would not reproduce the atom indices and names, then the rules in
// sorted order, LF line endings.
inline std::string format_program(const Program& p) {
  std::string out = "#universe " + std::to_string(p.universe()) + ".\n";

  std::vector<std::uint32_t> appearance;
  std::vector<bool> seen(p.universe(), false);
  auto note = [&](Atom a) {
    if (!seen[a.index]) {
      seen[a.index] = true;
      appearance.push_back(a.index);
    }
  };
  for (const auto& r : p.rules()) {
    note(r.head());
    for (auto a : r.pos_body()) note(a);
    for (auto a : r.neg_body()) note(a);
  }
  bool identity = true;
  for (std::size_t i = 0; identity && i < appearance.size(); ++i) identity = appearance[i] == i;
  // atoms never mentioned get the parser's fresh names
  std::unordered_set<std::string> taken;
  for (auto i : appearance) taken.insert(p.name_of(Atom{i}));
  for (std::size_t i = appearance.size(); identity && i < p.universe(); ++i) {
    std::string fresh = "a" + std::to_string(i);
    while (taken.count(fresh) != 0) fresh.insert(fresh.begin(), '_');
    taken.insert(fresh);
    identity = p.name_of(Atom{static_cast<std::uint32_t>(i)}) == fresh;
  }
  if (!identity) {
    out += "#atoms";
    for (std::size_t i = 0; i < p.universe(); ++i)
      out += " " + p.name_of(Atom{static_cast<std::uint32_t>(i)});
    out += ".\n";
  }
  for (const auto& r : p.rules()) out += format_rule(p, r) + "\n";
  return out;
}

// Shortest decimal that round-trips to the same double.
inline std::string format_number(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline std::string format_number(std::size_t v) { return std::to_string(v); }

class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::span<const std::string_view> header) : out_(out) {
    row_strings(header);
  }

  template <class... Fields>
  void row(const Fields&... fields) {
    bool first = true;
    ((out_ << (first ? "" : ",") << format_number(fields), first = false), ...);
    out_ << '\n';
  }

 private:
  void row_strings(std::span<const std::string_view> fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) out_ << (i ? "," : "") << fields[i];
    out_ << '\n';
  }

  std::ostream& out_;
};

inline constexpr std::string_view kAvgHeader[] = {
    "n", "c1", "c2", "trials", "avg_answer_sets", "stderr", "theory_finite_n", "theory_limit"};
inline constexpr std::string_view kDistHeader[] = {"k", "empirical_avg", "model_E_Nk", "chi_k"};
inline constexpr std::string_view kConsistencyHeader[] = {
    "n", "c1", "c2", "trials", "empirical_ratio", "pred_full", "pred_gamma"};
inline constexpr std::string_view kCurveHeader[] = {"k", "Pr_k", "E_Nk", "phi_k", "chi_k"};

}  // namespace randlp
