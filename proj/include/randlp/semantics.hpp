#pragma once

// Reference answer-set semantics for normal programs: reduct, least model,
// and the stable-model test. This is the trusted oracle the specialised
// solver is checked against.

#include <cstdint>
#include <vector>

#include "randlp/atom_set.hpp"
#include "randlp/errors.hpp"
#include "randlp/program.hpp"

namespace randlp {

namespace detail {

inline void require_universe(const Program& p, const AtomSet& s) {
  if (p.universe() != s.universe())
    throw InvalidArgument("interpretation universe " + std::to_string(s.universe()) +
                          " does not match program universe " + std::to_string(p.universe()));
}

// Least fixpoint of the immediate-consequence operator over the rules
// selected by `keep`, ignoring negative bodies. Each rule carries a counter
// of positive body atoms not yet derived; deriving an atom decrements the
// counters of the rules watching it.
template <class Keep>
AtomSet least_model_of(const Program& p, Keep&& keep) {
  const auto n = p.universe();
  const auto& rules = p.rules();
  AtomSet model(n);
  std::vector<std::uint32_t> missing(rules.size(), 0);
  std::vector<std::vector<std::uint32_t>> watch(n);
  std::vector<Atom> queue;

  auto derive = [&](Atom a) {
    if (!model.contains(a)) {
      model.insert(a);
      queue.push_back(a);
    }
  };

  for (std::uint32_t i = 0; i < rules.size(); ++i) {
    const auto& r = rules[i];
    if (!keep(r)) continue;
    missing[i] = static_cast<std::uint32_t>(r.pos_body().size());
    if (missing[i] == 0) {
      derive(r.head());
    } else {
      for (auto b : r.pos_body()) watch[b.index].push_back(i);
    }
  }
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (auto ri : watch[queue[qi].index])
      if (--missing[ri] == 0) derive(rules[ri].head());
  }
  return model;
}

inline bool blocked_by(const Rule& r, const AtomSet& s) {
  for (auto c : r.neg_body())
    if (s.contains(c)) return true;
  return false;
}

}  // namespace detail

// S |= R: head in S, or the body is false in S.
inline bool satisfies(const Rule& rule, const AtomSet& s) {
  if (rule.max_atom().index >= s.universe())
    throw InvalidArgument("rule mentions atoms outside the interpretation's universe");
  if (s.contains(rule.head())) return true;
  for (auto b : rule.pos_body())
    if (!s.contains(b)) return true;
  return detail::blocked_by(rule, s);
}

// P^S: drop rules whose negative body meets S, strip the rest to head <- pos_body.
inline Program reduct(const Program& p, const AtomSet& s) {
  detail::require_universe(p, s);
  std::vector<Rule> out;
  for (const auto& r : p.rules())
    if (!detail::blocked_by(r, s)) out.emplace_back(r.head(), r.pos_body(), std::vector<Atom>{});
  return Program(p.universe(), std::move(out), p.names());
}

inline AtomSet least_model(const Program& p) {
  if (!p.is_positive()) throw InvalidArgument("least_model requires a positive program");
  return detail::least_model_of(p, [](const Rule&) { return true; });
}

// S is an answer set iff S is the least model of P^S. Computes the reduct's
// least model in place without materialising P^S.
inline bool is_answer_set_general(const Program& p, const AtomSet& s) {
  detail::require_universe(p, s);
  return detail::least_model_of(p, [&](const Rule& r) { return !detail::blocked_by(r, s); }) == s;
}

}  // namespace randlp
