#pragma once

// Batch experiments over random programs: average answer-set counts,
// answer-set size distributions, and consistency ratios, each set against
// the closed-form predictions.
//
// Trial i of the row (n, c1, c2) draws its program from
//   trial_seed(seed, n, c1, c2, i) = mix(row_seed(seed, n, c1, c2), i)
// so results do not depend on thread count or scheduling. Per-trial
// outcomes are stored by index and reduced in index order.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "randlp/errors.hpp"
#include "randlp/generator.hpp"
#include "randlp/kernel_solver.hpp"
#include "randlp/rng.hpp"
#include "randlp/theory.hpp"

namespace randlp {

enum class SolverKind { Backtracking, BruteForce };

struct ExperimentConfig {
  std::vector<std::size_t> n;
  std::vector<double> c1;
  std::vector<double> c2;
  std::size_t trials = 1;
  Seed seed{};
  double gamma = 0.5;
  std::optional<std::size_t> solver_limit;
  SolverKind solver = SolverKind::Backtracking;
  unsigned threads = 1;
  std::ostream* progress = nullptr;

  void validate() const {
    if (trials < 1) throw InvalidArgument("trials must be at least 1");
    if (n.empty() || c1.empty() || c2.empty())
      throw InvalidArgument("n, c1 and c2 each need at least one value");
    if (!(gamma > 0 && gamma <= 1)) throw InvalidArgument("gamma must lie in (0, 1]");
    for (auto nn : n)
      for (auto a : c1)
        for (auto b : c2) LinearModelParams(nn, a, b);
  }
};

class ExperimentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Seed row_seed(Seed seed, std::size_t n, double c1, double c2) {
  Seed s = mix(seed, n);
  s = mix(s, std::bit_cast<std::uint64_t>(c1));
  return mix(s, std::bit_cast<std::uint64_t>(c2));
}

inline Seed trial_seed(Seed seed, std::size_t n, double c1, double c2, std::size_t trial) {
  return mix(row_seed(seed, n, c1, c2), trial);
}

struct AvgResult {
  std::size_t n = 0;
  double c1 = 0;
  double c2 = 0;
  std::size_t trials = 0;
  double avg_answer_sets = 0;
  double stderr_ = 0;  // sample sd / sqrt(trials)
  double theory_finite_n = 0;
  double theory_limit = 0;  // NaN when c1 = 0
};

struct DistRow {
  std::size_t k = 0;
  double empirical_avg = 0;
  double model_E_Nk = 0;
  double chi_k = 0;
};

struct DistResult {
  std::size_t n = 0;
  double c1 = 0;
  double c2 = 0;
  std::size_t trials = 0;
  std::vector<DistRow> rows;  // k = 0..n
  std::size_t total_answer_sets = 0;
  double difference_rate = 0;  // D(chi, empirical) over k = 1..n-1
};

struct ConsRow {
  std::size_t n = 0;
  double c1 = 0;
  double c2 = 0;
  std::size_t trials = 0;
  double empirical_ratio = 0;
  double pred_full = 0;
  double pred_gamma = 0;
};

struct ConsResult {
  std::vector<ConsRow> rows;
};

// D(f, g) = sum (f - g)^2 / sum f^2
inline double difference_rate(std::span<const double> f, std::span<const double> g) {
  if (f.size() != g.size()) throw InvalidArgument("difference_rate needs equal-length curves");
  double num = 0;
  double den = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    num += (f[i] - g[i]) * (f[i] - g[i]);
    den += f[i] * f[i];
  }
  if (!(den > 0)) throw InvalidArgument("difference_rate: reference curve is identically zero");
  return num / den;
}

namespace detail {

struct TrialOutcome {
  std::vector<std::uint32_t> sizes;  // answer-set sizes
  bool consistent = false;
  std::size_t resamples = 0;  // empty draws rejected before this program
  std::string error;
};

template <class Fn>
std::vector<TrialOutcome> run_trials(const ExperimentConfig& cfg, std::size_t n, double c1,
                                     double c2, Fn&& per_program) {
  const LinearModelParams params(n, c1, c2);
  std::vector<TrialOutcome> out(cfg.trials);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  auto worker = [&] {
    for (;;) {
      const auto i = next.fetch_add(1);
      if (i >= cfg.trials) return;
      try {
        auto g = generate_with_info(params, trial_seed(cfg.seed, n, c1, c2, i));
        out[i].resamples = g.resamples;
        per_program(g.program, out[i]);
      } catch (const std::exception& e) {
        out[i].error = e.what();
      }
      done.fetch_add(1);
    }
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(cfg.threads, static_cast<unsigned>(cfg.trials)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (std::size_t i = 0; i < out.size(); ++i)
    if (!out[i].error.empty())
      throw ExperimentError("row n=" + std::to_string(n) + " c1=" + std::to_string(c1) +
                            " c2=" + std::to_string(c2) + ": trial " + std::to_string(i) +
                            " failed: " + out[i].error);
  if (cfg.progress != nullptr) {
    std::size_t resamples = 0;
    for (const auto& o : out) resamples += o.resamples;
    *cfg.progress << "row n=" << n << " c1=" << c1 << " c2=" << c2 << ": " << cfg.trials
                  << " trials done, " << resamples << " empty draws resampled\n";
  }
  return out;
}

inline void collect_sizes(const ExperimentConfig& cfg, const Program& p, TrialOutcome& o) {
  if (cfg.solver == SolverKind::BruteForce) {
    for (const auto& s : enumerate_brute_force(p).sets)
      o.sizes.push_back(static_cast<std::uint32_t>(s.size()));
    return;
  }
  KernelSolver solver(p);
  bool over = false;
  solver.solve([&](const AtomSet& s) {
    if (cfg.solver_limit && o.sizes.size() >= *cfg.solver_limit) {
      over = true;
      return false;
    }
    o.sizes.push_back(static_cast<std::uint32_t>(s.size()));
    return true;
  });
  if (over)
    throw ExperimentError("solver limit of " + std::to_string(*cfg.solver_limit) +
                          " answer sets exceeded");
}

inline double limit_or_nan(double c1, double c2) {
  return c1 > 0 ? limit_expected_total(c1, c2) : std::nan("");
}

}  // namespace detail

inline std::vector<AvgResult> run_avg_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<AvgResult> results;
  for (auto n : cfg.n)
    for (auto c1 : cfg.c1)
      for (auto c2 : cfg.c2) {
        AvgResult r;
        r.n = n;
        r.c1 = c1;
        r.c2 = c2;
        r.trials = cfg.trials;
        r.theory_finite_n = expected_total(n, c1, c2);
        r.theory_limit = detail::limit_or_nan(c1, c2);
        const auto outcomes = detail::run_trials(
            cfg, n, c1, c2, [&](const Program& p, detail::TrialOutcome& o) { detail::collect_sizes(cfg, p, o); });
        double sum = 0;
        for (const auto& o : outcomes) sum += static_cast<double>(o.sizes.size());
        const double t = static_cast<double>(cfg.trials);
        r.avg_answer_sets = sum / t;
        if (cfg.trials > 1) {
          double ss = 0;
          for (const auto& o : outcomes) {
            const double dev = static_cast<double>(o.sizes.size()) - r.avg_answer_sets;
            ss += dev * dev;
          }
          r.stderr_ = std::sqrt(ss / (t - 1)) / std::sqrt(t);
        }
        results.push_back(r);
      }
  return results;
}

inline DistResult run_dist_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.n.size() != 1 || cfg.c1.size() != 1 || cfg.c2.size() != 1)
    throw InvalidArgument("distribution experiment takes a single (n, c1, c2)");
  DistResult r;
  r.n = cfg.n[0];
  r.c1 = cfg.c1[0];
  r.c2 = cfg.c2[0];
  r.trials = cfg.trials;
  const auto n = r.n;

  std::optional<TheoryParams> tp;
  if (r.c1 > 0) tp = theory_params(n, r.c1, r.c2);
  r.rows.resize(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    auto& row = r.rows[k];
    row.k = k;
    row.model_E_Nk = (k == 0 || k == n) ? 0.0 : expected_count_size_k(n, k, r.c1, r.c2);
    row.chi_k = tp ? chi(static_cast<double>(k), *tp) : std::nan("");
  }

  const auto outcomes = detail::run_trials(
      cfg, n, r.c1, r.c2, [&](const Program& p, detail::TrialOutcome& o) { detail::collect_sizes(cfg, p, o); });
  std::vector<std::size_t> totals(n + 1, 0);
  for (const auto& o : outcomes)
    for (auto s : o.sizes) ++totals[s];
  for (std::size_t k = 0; k <= n; ++k) {
    r.total_answer_sets += totals[k];
    r.rows[k].empirical_avg = static_cast<double>(totals[k]) / static_cast<double>(cfg.trials);
  }

  if (tp && n >= 2) {
    std::vector<double> f;
    std::vector<double> g;
    for (std::size_t k = 1; k < n; ++k) {
      f.push_back(r.rows[k].chi_k);
      g.push_back(r.rows[k].empirical_avg);
    }
    r.difference_rate = difference_rate(f, g);
  } else {
    r.difference_rate = std::nan("");
  }
  return r;
}

// Existence-only solving: each trial stops at its first answer set.
inline ConsResult run_consistency_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  ConsResult result;
  for (auto n : cfg.n)
    for (auto c1 : cfg.c1)
      for (auto c2 : cfg.c2) {
        ConsRow row;
        row.n = n;
        row.c1 = c1;
        row.c2 = c2;
        row.trials = cfg.trials;
        const double expected = expected_total(n, c1, c2);
        row.pred_full = consistency_probability(expected, 1.0);
        row.pred_gamma = consistency_probability(expected, cfg.gamma);
        const auto outcomes =
            detail::run_trials(cfg, n, c1, c2, [&](const Program& p, detail::TrialOutcome& o) {
              o.consistent = cfg.solver == SolverKind::BruteForce
                                 ? enumerate_brute_force(p).count > 0
                                 : has_answer_set(p);
            });
        std::size_t consistent = 0;
        for (const auto& o : outcomes) consistent += o.consistent ? 1 : 0;
        row.empirical_ratio = static_cast<double>(consistent) / static_cast<double>(cfg.trials);
        result.rows.push_back(row);
      }
  return result;
}

}  // namespace randlp
