#ifndef THIELE_GREEDY_HPP
#define THIELE_GREEDY_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "thiele/continued_fraction.hpp"
#include "thiele/sample_set.hpp"

namespace thiele {

inline constexpr double kDefaultTolerance = 5e-15;

enum class Termination { tolerance_reached, all_points_used, term_cap_reached, no_finite_candidate };

inline std::string_view to_string(Termination t) {
  switch (t) {
  case Termination::tolerance_reached: return "tolerance_reached";
  case Termination::all_points_used: return "all_points_used";
  case Termination::term_cap_reached: return "term_cap_reached";
  case Termination::no_finite_candidate: return "no_finite_candidate";
  }
  return "unknown";
}

struct GreedyResult {
  ContinuedFraction fraction;
  std::size_t points_used;
  Termination termination;
  /// max |C(x) - f(x)| over the samples left unconsumed (0 if none remain).
  double final_max_residual;
};

/// Builds a Thiele continued fraction from the samples, choosing nodes greedily.
///
/// The first node minimizes |f|. Each following node is the unconsumed sample
/// where the current convergent errs the most; a candidate whose inverse
/// difference is not finite is skipped in favour of the next-largest error.
/// Ties go to the lowest sample index. Construction stops once the error over
/// the remaining samples drops below tol * max|f| of those samples, or when
/// max_terms coefficients have been produced.
///
/// The returned fraction stores every consumed node, including the last.
inline GreedyResult thiele_greedy(const SampleSet& samples, double tol = kDefaultTolerance,
                                  std::optional<std::size_t> max_terms = std::nullopt) {
  if (!(tol >= 0.0))
    throw std::invalid_argument("thiele_greedy: tolerance must be non-negative");
  if (max_terms && *max_terms == 0)
    throw std::invalid_argument("thiele_greedy: max_terms must be at least 1");

  const auto xs = samples.xs();
  const auto fs = samples.fs();
  const std::size_t cap = max_terms.value_or(samples.size());

  // Unconsumed sample indices, kept in ascending order for tie-breaking.
  std::vector<std::size_t> pool;
  pool.reserve(samples.size());
  std::size_t first = 0;
  for (std::size_t i = 1; i < samples.size(); ++i)
    if (std::abs(fs[i]) < std::abs(fs[first]))
      first = i;
  for (std::size_t i = 0; i < samples.size(); ++i)
    if (i != first)
      pool.push_back(i);

  std::vector<double> a{fs[first]};
  std::vector<double> z{xs[first]};
  std::vector<double> working(fs.begin(), fs.end());  // indexed by sample

  std::vector<double> err(samples.size(), 0.0);
  auto scan = [&] {
    double worst = 0.0;
    for (std::size_t j : pool) {
      const double e = std::abs(detail::backward_from(a, z, 0, xs[j]) - fs[j]);
      err[j] = std::isnan(e) ? std::numeric_limits<double>::infinity() : e;
      worst = std::max(worst, err[j]);
    }
    return worst;
  };

  Termination why = Termination::all_points_used;
  double residual = 0.0;
  while (true) {
    if (pool.empty()) {
      why = Termination::all_points_used;
      residual = 0.0;
      break;
    }
    residual = scan();
    double fmax = 0.0;
    for (std::size_t j : pool)
      fmax = std::max(fmax, std::abs(fs[j]));
    if (residual < tol * fmax) {
      why = Termination::tolerance_reached;
      break;
    }
    if (a.size() >= cap) {
      why = Termination::term_cap_reached;
      break;
    }

    const double a_last = a.back();
    const double z_last = z.back();
    for (std::size_t j : pool)
      working[j] = (xs[j] - z_last) / (working[j] - a_last);

    std::size_t best_pos = pool.size();
    for (std::size_t p = 0; p < pool.size(); ++p) {
      const std::size_t j = pool[p];
      if (!std::isfinite(working[j]))
        continue;
      if (best_pos == pool.size() || err[j] > err[pool[best_pos]])
        best_pos = p;
    }
    if (best_pos == pool.size()) {
      why = Termination::no_finite_candidate;
      break;
    }
    const std::size_t chosen = pool[best_pos];
    a.push_back(working[chosen]);
    z.push_back(xs[chosen]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best_pos));
  }

  const std::size_t used = a.size();
  return GreedyResult{ContinuedFraction(std::move(a), std::move(z)), used, why, residual};
}

struct ResidualReport {
  std::vector<double> residuals;  // f_i - C(x_i)
  double norm2;
  double norm_max;
};

inline ResidualReport residual_report(const ContinuedFraction& cf, const SampleSet& samples) {
  ResidualReport r{{}, 0.0, 0.0};
  r.residuals.reserve(samples.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double d = samples.f(i) - eval_backward(cf, samples.x(i));
    r.residuals.push_back(d);
    sum += d * d;
    r.norm_max = std::max(r.norm_max, std::abs(d));
    if (std::isnan(d))
      r.norm_max = d;
  }
  r.norm2 = std::sqrt(sum);
  return r;
}

} // namespace thiele

#endif // THIELE_GREEDY_HPP
