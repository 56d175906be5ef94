#pragma once

// Answer sets of negative two-literal programs.
//
// For a program made of rules a <- not b, S is an answer set iff
//   (1) no rule b1 <- not b2 has both b1 and b2 outside S, and
//   (2) every a in S has a rule a <- not b with b outside S.
// Equivalently the complement T is a kernel of the digraph with an arc
// a -> b per rule: independent, and absorbing every atom outside it.
// The search below assigns atoms IN (S) or OUT (T) under both conditions.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "randlp/atom_set.hpp"
#include "randlp/errors.hpp"
#include "randlp/program.hpp"
#include "randlp/semantics.hpp"

namespace randlp {

struct AnswerSetCollection {
  std::vector<AtomSet> sets;  // ascending by bitset value
  std::size_t count = 0;
  std::map<std::size_t, std::size_t> size_histogram;
  bool truncated = false;

  void add(AtomSet s) {
    ++size_histogram[s.size()];
    sets.push_back(std::move(s));
    count = sets.size();
  }

  void canonicalize() { std::sort(sets.begin(), sets.end()); }
};

namespace detail {

inline void require_n2(const Program& p, const char* what) {
  if (!p.is_n2())
    throw InvalidArgument(std::string(what) + " requires a negative two-literal program");
  if (p.empty()) throw InvalidArgument(std::string(what) + " requires a nonempty program");
}

}  // namespace detail

inline bool is_answer_set_n2(const Program& p, const AtomSet& s) {
  detail::require_n2(p, "is_answer_set_n2");
  detail::require_universe(p, s);
  std::vector<bool> supported(p.universe(), false);
  for (const auto& r : p.rules()) {
    const Atom a = r.head();
    const Atom b = r.neg_body().front();
    if (s.contains(b)) continue;
    if (!s.contains(a)) return false;  // b1, b2 both outside S
    supported[a.index] = true;
  }
  bool ok = true;
  s.for_each([&](Atom a) { ok = ok && supported[a.index]; });
  return ok;
}

// Conflict-driven search over IN/OUT assignments.
//
// Variable x_a is true when a is IN. Condition (1) gives a binary clause
// (x_a or x_b) per rule a <- not b; condition (2) gives one clause per atom,
// (not x_a or not x_b1 or ... or not x_bk) over its supporters b_i. Learned
// clauses come from first-UIP analysis; branching follows clause activity,
// seeded by atom degree with ties to the lowest index, so the search is
// deterministic. Each model is verified against (1) and (2) and then
// excluded by requiring some member to leave; answer sets are pairwise
// incomparable, so no other answer set is cut off.
// Single use, single threaded; the program must outlive the solver.
class KernelSolver {
 public:
  explicit KernelSolver(const Program& p) : p_(p), n_(p.universe()) {
    detail::require_n2(p, "KernelSolver");
    std::vector<std::vector<std::uint32_t>> supporters(n_);
    watches_.resize(2 * std::size_t{n_});
    value_.assign(n_, kUnassigned);
    level_.assign(n_, 0);
    reason_.assign(n_, kNoReason);
    seen_.assign(n_, 0);
    phase_.assign(n_, kOut);
    activity_.assign(n_, 0.0);
    for (const auto& r : p.rules()) {
      const auto a = r.head().index;
      const auto b = r.neg_body().front().index;
      supporters[a].push_back(b);
      activity_[a] += 1;
      activity_[b] += 1;
      pending_.push_back(a == b ? std::vector<Lit>{in(a)} : std::vector<Lit>{in(a), in(b)});
    }
    for (std::uint32_t a = 0; a < n_; ++a) {
      auto& sup = supporters[a];
      std::sort(sup.begin(), sup.end());
      sup.erase(std::unique(sup.begin(), sup.end()), sup.end());
      std::vector<Lit> c{out(a)};
      for (auto b : sup)
        if (b != a) c.push_back(out(b));
      pending_.push_back(std::move(c));
    }
  }

  // Calls `on_model(const AtomSet&)` for each answer set; stop when it
  // returns false. Returns true iff the search space was exhausted.
  template <class OnModel>
  bool solve(OnModel&& on_model) {
    for (auto& c : pending_)
      if (!add_clause(std::move(c))) return true;
    pending_.clear();

    std::size_t restart_index = 0;
    std::size_t budget = luby(restart_index) * kRestartUnit;
    for (;;) {
      const auto confl = propagate();
      if (confl != kNoReason) {
        ++conflicts_;
        if (decision_level() == 0) return true;
        std::vector<Lit> learnt;
        const auto back = analyze(confl, learnt);
        cancel_until(back);
        if (learnt.size() == 1) {
          enqueue(learnt[0], kNoReason);
        } else {
          const auto ci = attach(std::move(learnt));
          enqueue(clauses_[ci][0], ci);
        }
        bump_ *= 1 / kDecay;
        if (bump_ > 1e100) rescale();
        if (budget > 0 && --budget == 0) {
          cancel_until(0);
          budget = luby(++restart_index) * kRestartUnit;
        }
        continue;
      }

      const auto next = pick_branch();
      if (next == kNone) {
        AtomSet s(n_);
        for (std::uint32_t a = 0; a < n_; ++a)
          if (value_[a] == kIn) s.insert(Atom{a});
        if (!is_answer_set_n2(p_, s))
          throw std::logic_error("KernelSolver produced an assignment that is not an answer set");
        ++models_;
        if (!on_model(static_cast<const AtomSet&>(s))) return false;
        std::vector<Lit> block;
        s.for_each([&](Atom a) { block.push_back(out(a.index)); });
        cancel_until(0);
        if (!add_clause(std::move(block))) return true;
        continue;
      }
      ++decisions_made_;
      trail_lim_.push_back(trail_.size());
      enqueue(phase_[next] == kIn ? in(next) : out(next), kNoReason);
    }
  }

  std::size_t decisions() const noexcept { return decisions_made_; }
  std::size_t conflicts() const noexcept { return conflicts_; }
  std::size_t models() const noexcept { return models_; }

 private:
  using Lit = std::uint32_t;  // 2a: a is IN, 2a + 1: a is OUT
  static constexpr std::uint8_t kUnassigned = 0;
  static constexpr std::uint8_t kIn = 1;
  static constexpr std::uint8_t kOut = 2;
  static constexpr std::uint32_t kNoReason = UINT32_MAX;
  static constexpr std::uint32_t kNone = UINT32_MAX;
  static constexpr std::size_t kRestartUnit = 100;
  static constexpr double kDecay = 0.95;

  static Lit in(std::uint32_t a) { return 2 * a; }
  static Lit out(std::uint32_t a) { return 2 * a + 1; }
  static std::uint32_t var(Lit l) { return l >> 1; }
  static std::uint8_t sign_value(Lit l) { return (l & 1) != 0 ? kOut : kIn; }

  // 1 true, -1 false, 0 unassigned
  int lit_value(Lit l) const {
    const auto v = value_[var(l)];
    if (v == kUnassigned) return 0;
    return v == sign_value(l) ? 1 : -1;
  }

  std::size_t decision_level() const { return trail_lim_.size(); }

  static std::size_t luby(std::size_t i) {
    std::size_t size = 1;
    std::size_t seq = 0;
    while (size < i + 1) {
      ++seq;
      size = 2 * size + 1;
    }
    std::size_t x = i;
    while (size - 1 != x) {
      size = (size - 1) >> 1;
      --seq;
      x = x % size;
    }
    return std::size_t{1} << seq;
  }

  void enqueue(Lit l, std::uint32_t reason) {
    const auto v = var(l);
    value_[v] = sign_value(l);
    level_[v] = static_cast<std::uint32_t>(decision_level());
    reason_[v] = reason;
    trail_.push_back(l);
  }

  void cancel_until(std::size_t lvl) {
    if (decision_level() <= lvl) return;
    for (auto i = trail_.size(); i > trail_lim_[lvl]; --i) {
      const auto v = var(trail_[i - 1]);
      phase_[v] = value_[v];
      value_[v] = kUnassigned;
      reason_[v] = kNoReason;
    }
    trail_.resize(trail_lim_[lvl]);
    trail_lim_.resize(lvl);
    qhead_ = std::min(qhead_, trail_.size());
  }

  std::uint32_t attach(std::vector<Lit> c) {
    const auto ci = static_cast<std::uint32_t>(clauses_.size());
    watches_[c[0]].push_back({ci, c[1]});
    watches_[c[1]].push_back({ci, c[0]});
    clauses_.push_back(std::move(c));
    return ci;
  }

  // Level 0 only. False literals are dropped; returns false on an empty
  // clause or a conflicting unit.
  bool add_clause(std::vector<Lit> c) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    std::vector<Lit> kept;
    for (auto l : c) {
      const int v = lit_value(l);
      if (v == 1) return true;
      if (v == 0) kept.push_back(l);
    }
    if (kept.empty()) return false;
    if (kept.size() == 1) {
      enqueue(kept[0], kNoReason);
      return propagate() == kNoReason;
    }
    attach(std::move(kept));
    return true;
  }

  // Watchers of literal l are the clauses with l among their first two
  // positions; they are visited when l becomes false.
  std::uint32_t propagate() {
    while (qhead_ < trail_.size()) {
      const Lit falsified = trail_[qhead_++] ^ 1;
      auto& ws = watches_[falsified];
      std::size_t i = 0;
      std::size_t j = 0;
      std::uint32_t confl = kNoReason;
      for (; i < ws.size(); ++i) {
        if (lit_value(ws[i].blocker) == 1) {
          ws[j++] = ws[i];
          continue;
        }
        const auto ci = ws[i].clause;
        auto& c = clauses_[ci];
        if (c[0] == falsified) std::swap(c[0], c[1]);
        if (lit_value(c[0]) == 1) {
          ws[j++] = {ci, c[0]};
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < c.size(); ++k) {
          if (lit_value(c[k]) != -1) {
            std::swap(c[1], c[k]);
            watches_[c[1]].push_back({ci, c[0]});
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[j++] = {ci, c[0]};
        if (lit_value(c[0]) == -1) {
          confl = ci;
          for (++i; i < ws.size(); ++i) ws[j++] = ws[i];
          break;
        }
        enqueue(c[0], ci);
      }
      ws.resize(j);
      if (confl != kNoReason) {
        qhead_ = trail_.size();
        return confl;
      }
    }
    return kNoReason;
  }

  void bump(std::uint32_t v) {
    activity_[v] += bump_;
    if (activity_[v] > 1e100) rescale();
  }

  void rescale() {
    for (auto& a : activity_) a *= 1e-100;
    bump_ *= 1e-100;
  }

  // First-UIP learning; returns the backjump level. learnt[0] is the
  // asserting literal and learnt[1] one from the backjump level.
  std::size_t analyze(std::uint32_t confl, std::vector<Lit>& learnt) {
    learnt.assign(1, 0);
    std::size_t open = 0;
    Lit p = 0;
    bool have_p = false;
    auto index = trail_.size();
    const auto current = decision_level();
    for (;;) {
      for (auto q : clauses_[confl]) {
        if (have_p && q == p) continue;
        const auto v = var(q);
        if (seen_[v] != 0 || level_[v] == 0) continue;
        seen_[v] = 1;
        bump(v);
        if (level_[v] >= current) {
          ++open;
        } else {
          learnt.push_back(q);
        }
      }
      do {
        p = trail_[--index];
      } while (seen_[var(p)] == 0);
      have_p = true;
      seen_[var(p)] = 0;
      confl = reason_[var(p)];
      if (--open == 0) break;
    }
    learnt[0] = p ^ 1;

    // Drop literals implied by the rest of the clause through their reason.
    const std::vector<Lit> marked(learnt.begin() + 1, learnt.end());
    std::size_t keep = 1;
    for (std::size_t i = 1; i < learnt.size(); ++i) {
      const auto r = reason_[var(learnt[i])];
      bool redundant = r != kNoReason;
      if (redundant)
        for (auto q : clauses_[r])
          if (var(q) != var(learnt[i]) && seen_[var(q)] == 0 && level_[var(q)] > 0) {
            redundant = false;
            break;
          }
      if (!redundant) learnt[keep++] = learnt[i];
    }
    for (auto l : marked) seen_[var(l)] = 0;
    learnt.resize(keep);

    if (learnt.size() == 1) return 0;
    std::size_t best = 1;
    for (std::size_t i = 2; i < learnt.size(); ++i)
      if (level_[var(learnt[i])] > level_[var(learnt[best])]) best = i;
    std::swap(learnt[1], learnt[best]);
    return level_[var(learnt[1])];
  }

  std::uint32_t pick_branch() const {
    std::uint32_t best = kNone;
    for (std::uint32_t a = 0; a < n_; ++a)
      if (value_[a] == kUnassigned && (best == kNone || activity_[a] > activity_[best])) best = a;
    return best;
  }

  const Program& p_;
  std::uint32_t n_;
  std::vector<std::vector<Lit>> pending_;
  std::vector<std::vector<Lit>> clauses_;
  struct Watch {
    std::uint32_t clause;
    Lit blocker;  // some other literal of the clause; true means skip
  };
  std::vector<std::vector<Watch>> watches_;
  std::vector<std::uint8_t> value_;
  std::vector<std::uint32_t> level_;
  std::vector<std::uint32_t> reason_;
  std::vector<std::uint8_t> seen_;
  std::vector<std::uint8_t> phase_;
  std::vector<double> activity_;
  double bump_ = 1.0;
  std::vector<Lit> trail_;
  std::vector<std::size_t> trail_lim_;
  std::size_t qhead_ = 0;
  std::size_t decisions_made_ = 0;
  std::size_t conflicts_ = 0;
  std::size_t models_ = 0;
};

// All answer sets, or at most `limit` with `truncated` set when more exist.
inline AnswerSetCollection enumerate_answer_sets(const Program& p,
                                                 std::optional<std::size_t> limit = std::nullopt) {
  KernelSolver solver(p);
  AnswerSetCollection out;
  if (limit && *limit == 0) {
    bool any = false;
    solver.solve([&](const AtomSet&) { any = true; return false; });
    out.truncated = any;
    return out;
  }
  std::size_t seen = 0;
  solver.solve([&](const AtomSet& s) {
    ++seen;
    if (limit && seen > *limit) {
      out.truncated = true;
      return false;
    }
    out.add(s);
    return true;
  });
  out.canonicalize();
  return out;
}

inline std::size_t count_answer_sets(const Program& p) {
  KernelSolver solver(p);
  std::size_t c = 0;
  solver.solve([&](const AtomSet&) { ++c; return true; });
  return c;
}

inline bool has_answer_set(const Program& p) {
  KernelSolver solver(p);
  bool any = false;
  solver.solve([&](const AtomSet&) { any = true; return false; });
  return any;
}

inline constexpr std::size_t kDefaultBruteForceCap = 20;

// Scans all 2^n interpretations with the reduct-based checker.
inline AnswerSetCollection enumerate_brute_force(const Program& p,
                                                 std::size_t cap = kDefaultBruteForceCap) {
  if (p.empty()) throw InvalidArgument("enumerate_brute_force requires a nonempty program");
  const auto n = p.universe();
  if (n > cap || n > 63) throw CapExceeded(n, std::min<std::size_t>(cap, 63));
  AnswerSetCollection out;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    auto s = AtomSet::from_mask(n, mask);
    if (is_answer_set_general(p, s)) out.add(std::move(s));
  }
  out.canonicalize();
  return out;
}

}  // namespace randlp
