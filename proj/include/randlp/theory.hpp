#pragma once

// Closed-form statistics of random programs under L(c1, c2).
//
// Products mixing huge binomials with tiny probabilities are formed in
// log space and exponentiated last.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "randlp/errors.hpp"
#include "randlp/generator.hpp"

namespace randlp {

namespace detail {

inline void require_c1(double c1) {
  if (!(c1 > 0))
    throw UnsupportedParameters("alpha is undefined for c1 <= 0 (no pure rules)");
}

inline void require_k(std::size_t n, std::size_t k) {
  if (k == 0 || k >= n)
    throw InvalidArgument("k = " + std::to_string(k) + " outside (0, " + std::to_string(n) + ")");
}

inline double log_choose(std::size_t n, std::size_t k) {
  const auto nn = static_cast<double>(n);
  const auto kk = static_cast<double>(k);
  return std::lgamma(nn + 1) - std::lgamma(kk + 1) - std::lgamma(nn - kk + 1);
}

inline double sorted_sum(std::vector<double> terms) {
  std::sort(terms.begin(), terms.end(), [](double a, double b) { return std::fabs(a) < std::fabs(b); });
  double sum = 0;
  for (auto t : terms) sum += t;
  return sum;
}

}  // namespace detail

// Root alpha > 1 of alpha * ln(alpha) = c1: bisection on
// [1, max(e, c1 + 2)] down to 1e-8, then Newton polish.
inline double solve_alpha(double c1) {
  detail::require_c1(c1);
  if (!std::isfinite(c1)) throw InvalidArgument("c1 must be finite");
  auto f = [c1](double a) { return a * std::log(a) - c1; };
  double lo = 1.0;
  double hi = std::max(std::numbers::e, c1 + 2.0);
  while (hi - lo > 1e-8) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0 ? lo : hi) = mid;
  }
  double a = 0.5 * (lo + hi);
  double best = a;
  for (int it = 0; it < 50; ++it) {
    const double step = f(a) / (std::log(a) + 1.0);
    const double next = a - step;
    if (std::fabs(f(next)) < std::fabs(f(best))) best = next;
    if (next == a) break;
    a = next;
  }
  return best;
}

// log Pr(k) = (n-k)(n-k-1) ln q + k ln(1 - q^(n-k)) + (n-k) ln(1 - d)
inline double log_prob_answer_set(std::size_t n, std::size_t k, double c1, double c2) {
  const LinearModelParams params(n, c1, c2);
  detail::require_k(n, k);
  const auto m = static_cast<double>(n - k);
  const double log_q = std::log1p(-params.p());
  const double log_unsupported = m * log_q;  // ln q^(n-k)
  const double log_supported =
      params.p() > 0 ? std::log(-std::expm1(log_unsupported)) : -INFINITY;
  return m * (m - 1) * log_q + static_cast<double>(k) * log_supported +
         m * std::log1p(-params.d());
}

inline double prob_answer_set(std::size_t n, std::size_t k, double c1, double c2) {
  return std::exp(log_prob_answer_set(n, k, c1, c2));
}

// E[N_k] = C(n, k) Pr(k)
inline double expected_count_size_k(std::size_t n, std::size_t k, double c1, double c2) {
  return std::exp(detail::log_choose(n, k) + log_prob_answer_set(n, k, c1, c2));
}

// E[|AS(P)|] = sum_{k=1}^{n-1} E[N_k], summed in ascending magnitude.
inline double expected_total(std::size_t n, double c1, double c2) {
  if (n < 2) throw InvalidArgument("expected_total requires n >= 2");
  std::vector<double> terms;
  terms.reserve(n - 1);
  for (std::size_t k = 1; k < n; ++k) terms.push_back(expected_count_size_k(n, k, c1, c2));
  return detail::sorted_sum(std::move(terms));
}

// lim_{n->inf} E[|AS(P)|] = alpha e^{(c1-c2)/alpha} / (alpha + c1)
inline double limit_expected_total(double c1, double c2) {
  const double alpha = solve_alpha(c1);
  return alpha * std::exp((c1 - c2) / alpha) / (alpha + c1);
}

// Continuous Stirling form of E[N_x]:
//   sqrt(n / (2 pi x (n-x))) (n (1 - q^(n-x)) / x)^x (n r q^(n-x) / (n-x))^(n-x)
inline double log_phi(double x, std::size_t n, double c1, double c2) {
  const LinearModelParams params(n, c1, c2);
  const auto nn = static_cast<double>(n);
  if (!(x > 0 && x < nn)) throw InvalidArgument("phi requires 0 < x < n");
  const double m = nn - x;
  const double log_q = std::log1p(-params.p());
  const double log_r = std::log1p(-params.d()) - log_q;
  const double log_supported =
      params.p() > 0 ? std::log(-std::expm1(m * log_q)) : -INFINITY;
  return 0.5 * std::log(nn / (2 * std::numbers::pi * x * m)) +
         x * (std::log(nn) + log_supported - std::log(x)) +
         m * (std::log(nn) + log_r + m * log_q - std::log(m));
}

inline double phi(double x, std::size_t n, double c1, double c2) {
  return std::exp(log_phi(x, n, c1, c2));
}

struct TheoryParams {
  std::size_t n = 0;
  double c1 = 0;
  double c2 = 0;
  double alpha = 0;
  double x0 = 0;
  double sigma = 0;
  double c0 = 0;
  double delta = 0;
  double phi_x0_direct = 0;
  double phi_x0_asymptotic = 0;
  double limit_expected_total = 0;
};

inline TheoryParams theory_params(std::size_t n, double c1, double c2) {
  detail::require_c1(c1);
  if (n < 2) throw InvalidArgument("theory_params requires n >= 2");
  const LinearModelParams params(n, c1, c2);
  TheoryParams tp;
  tp.n = n;
  tp.c1 = c1;
  tp.c2 = c2;
  const auto nn = static_cast<double>(n);
  const double a = solve_alpha(c1);
  tp.alpha = a;
  tp.x0 = (a - 1) * nn / a;
  tp.sigma = std::sqrt((a - 1) * nn) / (a + c1);
  tp.c0 = std::max(std::sqrt(2.0) * (a + c1) / std::sqrt(a - 1), 1 / std::sqrt(c1));
  tp.delta = tp.c0 * std::sqrt(nn * std::log(nn));
  tp.phi_x0_direct = phi(tp.x0, n, c1, c2);
  tp.phi_x0_asymptotic =
      a * std::exp((c1 - c2) / a) / std::sqrt(2 * std::numbers::pi * (a - 1) * nn);
  tp.limit_expected_total = a * std::exp((c1 - c2) / a) / (a + c1);
  return tp;
}

// Gaussian with peak phi(x0) at x0 and width sigma.
inline double chi(double x, const TheoryParams& tp) {
  const double z = (x - tp.x0) / tp.sigma;
  return tp.phi_x0_direct * std::exp(-0.5 * z * z);
}

// 1 - exp(-gamma E); gamma = 1 is the independence estimate, ~0.5 the
// empirically corrected one.
inline double consistency_probability(double expected_total, double gamma) {
  if (!(expected_total >= 0)) throw InvalidArgument("expected total must be non-negative");
  if (!(gamma > 0 && gamma <= 1)) throw InvalidArgument("gamma must lie in (0, 1]");
  return -std::expm1(-gamma * expected_total);
}

}  // namespace randlp
