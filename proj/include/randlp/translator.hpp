#pragma once

// Negative normal programs to negative two-literal programs.
//
// Each rule R_i: a <- not c_1, ..., not c_t becomes a <- not e_i together
// with e_i <- c_j for every j, where e_i is a fresh atom. The positive rules
// are then unfolded: c_j is derivable only through some a' <- not e_k with
// a' = c_j, so e_i <- c_j is replaced by e_i <- not e_k for each such k and
// dropped when c_j heads no rule. Facts (t = 0) get an e_i with no defining
// rule, so a <- not e_i always fires.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "randlp/errors.hpp"
#include "randlp/kernel_solver.hpp"
#include "randlp/program.hpp"
#include "randlp/semantics.hpp"

namespace randlp {

struct TranslationResult {
  Program output;
  // Fresh atoms e_i, index n + i, in source rule order.
  std::vector<Atom> aux;
  // origin[i] is the index into the source program's rules() that
  // introduced aux[i].
  std::vector<std::size_t> origin;
  // |P| + sum_R t_R * (largest number of rules sharing one head).
  std::size_t output_size_bound = 0;
};

namespace detail {

inline std::vector<std::string> aux_names(const Program& p) {
  std::vector<std::string> names;
  std::unordered_set<std::string> taken;
  for (std::size_t a = 0; a < p.universe(); ++a) {
    names.push_back(p.name_of(Atom{static_cast<std::uint32_t>(a)}));
    taken.insert(names.back());
  }
  std::string prefix = "_e";
  auto clashes = [&] {
    for (std::size_t i = 0; i < p.size(); ++i)
      if (taken.count(prefix + std::to_string(i)) != 0) return true;
    return false;
  };
  while (clashes()) prefix.insert(prefix.begin(), '_');
  for (std::size_t i = 0; i < p.size(); ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

}  // namespace detail

inline TranslationResult to_two_literal(const Program& p) {
  for (const auto& r : p.rules())
    if (!r.pos_body().empty())
      throw UnsupportedInput(
          "to_two_literal accepts negative programs only; rule with head " +
          p.name_of(r.head()) + " has positive body atoms");

  const auto n = p.universe();
  const auto& rules = p.rules();
  auto aux_of = [&](std::size_t i) { return Atom{static_cast<std::uint32_t>(n + i)}; };

  std::vector<std::vector<std::size_t>> defining(n);  // head -> rule indices
  for (std::size_t i = 0; i < rules.size(); ++i) defining[rules[i].head().index].push_back(i);
  std::size_t max_in = 0;
  for (const auto& d : defining) max_in = std::max(max_in, d.size());

  TranslationResult out;
  std::vector<Rule> two;
  out.output_size_bound = rules.size();
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const auto e = aux_of(i);
    out.aux.push_back(e);
    out.origin.push_back(i);
    two.push_back(Rule::negative(rules[i].head(), e));
    out.output_size_bound += rules[i].neg_body().size() * max_in;
    for (auto c : rules[i].neg_body())
      for (auto k : defining[c.index]) two.push_back(Rule::negative(e, aux_of(k)));
  }
  std::vector<std::string> names;
  if (p.has_names()) names = detail::aux_names(p);
  out.output = Program(n + rules.size(), std::move(two), std::move(names));
  return out;
}

namespace detail {

// Answer sets by full scan, allowing the empty program.
inline std::vector<AtomSet> scan_answer_sets(const Program& p, std::size_t cap) {
  if (p.empty()) return {AtomSet(p.universe())};
  return enumerate_brute_force(p, cap).sets;
}

}  // namespace detail

// P over A_n and P2 over A_n plus `aux` (indices >= n) are equivalent iff
// every answer set of P extends to one of P2 by aux atoms and every answer
// set of P2 minus aux is an answer set of P.
inline bool check_equivalence_modulo_aux(const Program& p, const Program& p2,
                                         const std::vector<Atom>& aux,
                                         std::size_t cap = kDefaultBruteForceCap) {
  const auto n = p.universe();
  if (p2.universe() != n + aux.size())
    throw InvalidArgument("second program must range over the first universe plus aux atoms");
  for (auto a : aux)
    if (a.index < n || a.index >= p2.universe())
      throw InvalidArgument("aux atoms must be the indices above the first universe");

  const auto lhs = detail::scan_answer_sets(p, cap);
  const auto rhs = detail::scan_answer_sets(p2, cap);
  std::set<AtomSet> projected;
  for (const auto& s : rhs) projected.insert(s.restrict_to(n));
  std::set<AtomSet> original(lhs.begin(), lhs.end());
  return projected == original;
}

}  // namespace randlp
