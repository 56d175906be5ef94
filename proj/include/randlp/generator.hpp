#pragma once

// Random negative two-literal programs under the linear model L(c1, c2):
// every pure rule a <- not b (a != b) is present with probability c1/n and
// every contradiction rule a <- not a with probability c2/n, independently.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "randlp/errors.hpp"
#include "randlp/program.hpp"
#include "randlp/rng.hpp"

namespace randlp {

class LinearModelParams {
 public:
  LinearModelParams(std::size_t n, double c1, double c2) : n_(n), c1_(c1), c2_(c2) {
    if (!std::isfinite(c1) || !std::isfinite(c2) || c1 < 0 || c2 < 0)
      throw InvalidArgument("c1 and c2 must be finite and non-negative");
    if (!(c1 + c2 > 0)) throw InvalidArgument("c1 + c2 must be positive");
    if (!(static_cast<double>(n) > std::max(c1, c2)))
      throw InvalidArgument("n = " + std::to_string(n) + " must exceed max(c1, c2)");
    if (n > std::numeric_limits<std::uint32_t>::max())
      throw InvalidArgument("n too large");
  }

  std::size_t n() const noexcept { return n_; }
  double c1() const noexcept { return c1_; }
  double c2() const noexcept { return c2_; }

  double p() const noexcept { return c1_ / static_cast<double>(n_); }
  double d() const noexcept { return c2_ / static_cast<double>(n_); }
  double q() const noexcept { return 1.0 - p(); }
  double r() const noexcept { return (1.0 - d()) / q(); }

 private:
  std::size_t n_;
  double c1_;
  double c2_;
};

// E[|P|] = n(n-1)p + nd = c1(n-1) + c2
inline double expected_rule_count(const LinearModelParams& params) {
  return params.c1() * static_cast<double>(params.n() - 1) + params.c2();
}

enum class SamplingPath {
  // Geometric gaps between successive included rules; O(expected rules).
  Skip,
  // One Bernoulli draw per candidate rule; O(n^2). Kept as a reference.
  Bernoulli,
};

namespace detail {

// Indices in [0, count) included independently with probability p, in order.
template <class F>
void sample_indices(SplitMix64& rng, std::uint64_t count, double p, SamplingPath path, F&& emit) {
  if (count == 0 || p <= 0) return;
  if (path == SamplingPath::Bernoulli) {
    for (std::uint64_t i = 0; i < count; ++i)
      if (rng.bernoulli(p)) emit(i);
    return;
  }
  const double log_q = std::log1p(-p);
  double pos = -1.0;
  const auto limit = static_cast<double>(count);
  for (;;) {
    pos += 1.0 + std::floor(std::log(rng.uniform_pos()) / log_q);
    if (!(pos < limit)) return;
    emit(static_cast<std::uint64_t>(pos));
  }
}

inline std::vector<Rule> sample_rules(const LinearModelParams& params, SplitMix64& rng,
                                      SamplingPath path) {
  const auto n = static_cast<std::uint64_t>(params.n());
  std::vector<Rule> rules;
  rules.reserve(static_cast<std::size_t>(expected_rule_count(params) * 1.2) + 8);
  if (n >= 2) {
    sample_indices(rng, n * (n - 1), params.p(), path, [&](std::uint64_t j) {
      const auto head = j / (n - 1);
      auto body = j % (n - 1);
      if (body >= head) ++body;
      rules.push_back(Rule::negative(Atom{static_cast<std::uint32_t>(head)},
                                     Atom{static_cast<std::uint32_t>(body)}));
    });
  }
  sample_indices(rng, n, params.d(), path, [&](std::uint64_t a) {
    const Atom atom{static_cast<std::uint32_t>(a)};
    rules.push_back(Rule::negative(atom, atom));
  });
  return rules;
}

}  // namespace detail

struct GenerationResult {
  Program program;
  // Empty draws rejected before this one.
  std::size_t resamples = 0;
};

// Draws a nonempty program. An empty draw is rejected and redrawn from
// mix(seed, attempt), attempt = 0, 1, ...
inline GenerationResult generate_with_info(const LinearModelParams& params, Seed seed,
                                           SamplingPath path = SamplingPath::Skip) {
  GenerationResult out;
  Seed s = seed;
  for (;;) {
    SplitMix64 rng(s);
    auto rules = detail::sample_rules(params, rng, path);
    if (!rules.empty()) {
      out.program = Program(params.n(), std::move(rules));
      return out;
    }
    s = mix(seed, out.resamples);
    ++out.resamples;
  }
}

inline Program generate(const LinearModelParams& params, Seed seed,
                        SamplingPath path = SamplingPath::Skip) {
  return generate_with_info(params, seed, path).program;
}

}  // namespace randlp
