#ifndef THIELE_MINIMAX_HPP
#define THIELE_MINIMAX_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "thiele/continued_fraction.hpp"
#include "thiele/greedy.hpp"
#include "thiele/sample_set.hpp"

namespace thiele {

/// Local maxima of |f - C| between consecutive interpolation nodes.
struct ExtremaReport {
  std::vector<double> locations;
  std::vector<double> signed_residuals;  // f(s_k) - C(s_k)
  double leveled_error = 0.0;            // max |residual|
  double level_ratio = 0.0;              // max |residual| / min |residual| - 1
};

/// Fills in the summary statistics of a report from its residuals.
inline ExtremaReport make_extrema_report(std::vector<double> locations, std::vector<double> residuals) {
  if (locations.size() != residuals.size())
    throw std::invalid_argument("extrema report: locations and residuals differ in length");
  ExtremaReport r;
  r.locations = std::move(locations);
  r.signed_residuals = std::move(residuals);
  if (r.signed_residuals.empty())
    return r;
  double hi = 0.0;
  double lo = std::numeric_limits<double>::infinity();
  for (double v : r.signed_residuals) {
    hi = std::max(hi, std::abs(v));
    lo = std::min(lo, std::abs(v));
  }
  r.leveled_error = hi;
  r.level_ratio = hi / lo - 1.0;
  return r;
}

namespace detail {

/// Brent's derivative-free minimization of g on [lo, hi] (golden section with
/// parabolic steps). The search runs in the unit variable t = (x - lo)/(hi - lo)
/// so that tol is relative to the interval width; the stopping width at t is
/// sqrt(eps)|t| + tol/3.
template <class G>
std::pair<double, double> brent_minimize(G&& g, double lo, double hi, double tol) {
  const double width = hi - lo;
  auto at = [&](double t) { return lo + width * t; };
  auto eval = [&](double t) { return g(at(t)); };

  const double golden = 0.5 * (3.0 - std::sqrt(5.0));
  const double eps = std::sqrt(std::numeric_limits<double>::epsilon());
  const double tol3 = tol / 3.0;

  double a = 0.0, b = 1.0;
  double v = a + golden * (b - a);
  double w = v, x = v;
  double d = 0.0, e = 0.0;
  double fx = eval(x);
  double fv = fx, fw = fx;

  for (int iter = 0; iter < 500; ++iter) {
    const double xm = 0.5 * (a + b);
    const double tol1 = eps * std::abs(x) + tol3;
    const double t2 = 2.0 * tol1;
    if (std::abs(x - xm) <= t2 - 0.5 * (b - a))
      break;

    double p = 0.0, q = 0.0, r = 0.0;
    if (std::abs(e) > tol1) {
      r = (x - w) * (fx - fv);
      q = (x - v) * (fx - fw);
      p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0)
        p = -p;
      else
        q = -q;
      r = e;
      e = d;
    }
    if (std::abs(p) >= std::abs(0.5 * q * r) || p <= q * (a - x) || p >= q * (b - x)) {
      e = x < xm ? b - x : a - x;
      d = golden * e;
    } else {
      d = p / q;
      const double u = x + d;
      if (u - a < t2 || b - u < t2)
        d = x < xm ? tol1 : -tol1;
    }
    const double u = std::abs(d) >= tol1 ? x + d : (d > 0.0 ? x + tol1 : x - tol1);
    const double fu = eval(u);

    if (fu <= fx) {
      if (u < x)
        b = x;
      else
        a = x;
      v = w; fv = fw;
      w = x; fw = fx;
      x = u; fx = fu;
    } else {
      if (u < x)
        a = u;
      else
        b = u;
      if (fu <= fw || w == x) {
        v = w; fv = fw;
        w = u; fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u; fv = fu;
      }
    }
  }
  return {at(x), fx};
}

} // namespace detail

/// For each subinterval of the node set augmented with a and b, maximizes
/// |f(x) - C(x)| by Brent's method with abscissa tolerance search_tol relative
/// to the subinterval width. The outer subintervals also consider the
/// endpoints a and b themselves.
template <class F>
ExtremaReport find_extrema(std::span<const double> nodes, double a, double b, const ContinuedFraction& cf, F&& f,
                           double search_tol = 1e-14) {
  if (!(a < b))
    throw std::invalid_argument("find_extrema: need a < b");
  std::vector<double> pts;
  pts.reserve(nodes.size() + 2);
  pts.push_back(a);
  for (double x : nodes) {
    if (!(x >= a && x <= b))
      throw std::invalid_argument("find_extrema: node " + std::to_string(x) + " outside [a, b]");
    pts.push_back(x);
  }
  pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 2)
    throw std::invalid_argument("find_extrema: fewer than two distinct points");

  auto resid = [&](double x) { return static_cast<double>(f(x)) - eval_backward(cf, x); };
  auto neg_abs = [&](double x) {
    const double r = std::abs(resid(x));
    // poles count as maximal error
    return std::isnan(r) ? -std::numeric_limits<double>::infinity() : -r;
  };

  std::vector<double> where;
  std::vector<double> values;
  where.reserve(pts.size() - 1);
  values.reserve(pts.size() - 1);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    auto [x, fx] = detail::brent_minimize(neg_abs, pts[i - 1], pts[i], search_tol);
    if (i == 1 && neg_abs(a) < fx) {
      x = a;
      fx = neg_abs(a);
    }
    // ties go to b
    if (i + 1 == pts.size() && neg_abs(b) <= fx)
      x = b;
    where.push_back(x);
    values.push_back(resid(x));
  }
  return make_extrema_report(std::move(where), std::move(values));
}

struct EquioscillationCheck {
  std::size_t count;
  bool alternating;
  bool leveled;
};

inline EquioscillationCheck equioscillation_check(const ExtremaReport& report, double rel_tol) {
  const auto& r = report.signed_residuals;
  bool alternating = true;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (!(r[i] > 0.0 || r[i] < 0.0))
      alternating = false;
    else if (i > 0 && (r[i] > 0.0) == (r[i - 1] > 0.0))
      alternating = false;
  }
  return {r.size(), alternating, report.level_ratio < rel_tol};
}

struct BrasilConfig {
  double smax = 0.1;   // step-size cap, 0 < smax < 1
  double t = 0.1;      // step proportional to relative spread of local errors
  double tol = 1e-3;   // stop when level_ratio < tol
  std::size_t max_iter = 1000;
  double extremum_search_tol = 1e-14;
  /// Local errors at or below this magnitude are treated as exact
  /// interpolation, which stops the iteration as degenerate.
  double zero_residual_tol = 1e-14;

  void validate() const {
    if (!(smax > 0.0 && smax < 1.0))
      throw std::invalid_argument("brasil: smax must lie in (0, 1)");
    if (!(t > 0.0))
      throw std::invalid_argument("brasil: t must be positive");
    if (!(tol > 0.0))
      throw std::invalid_argument("brasil: tol must be positive");
    if (max_iter < 1)
      throw std::invalid_argument("brasil: max_iter must be at least 1");
    if (!(extremum_search_tol > 0.0))
      throw std::invalid_argument("brasil: extremum_search_tol must be positive");
  }
};

struct BrasilStep {
  double level_ratio;
  double leveled_error;
  double step;  // s used to rescale; 0 on the final iteration
};

struct BrasilResult {
  ContinuedFraction fraction;
  ExtremaReport final_report;
  std::vector<double> nodes;  // sorted interpolation nodes of the final fraction
  std::size_t iterations = 0;
  bool converged = false;
  bool degenerate = false;  // stopped because the local errors could not be rescaled
  std::vector<BrasilStep> trace;
};

/// Rescales subinterval widths between interpolation nodes until the local
/// maxima of |f - C| agree to within cfg.tol.
///
/// Each iteration interpolates f in the current nodes (greedy order, every
/// node consumed), locates one extremum per subinterval of the node set
/// augmented with a and b, and then shrinks subintervals with large local
/// error and widens those with small error by factors (1 - s)^{g_k}.
template <class F>
BrasilResult brasil(std::span<const double> initial_nodes, F&& f, double a, double b, const BrasilConfig& cfg = {}) {
  cfg.validate();
  if (!(a < b))
    throw std::invalid_argument("brasil: need a < b");
  std::vector<double> nodes(initial_nodes.begin(), initial_nodes.end());
  std::sort(nodes.begin(), nodes.end());
  if (nodes.empty())
    throw std::invalid_argument("brasil: no initial nodes");
  if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end())
    throw std::invalid_argument("brasil: initial nodes are not distinct");
  if (!(nodes.front() > a && nodes.back() < b))
    throw std::invalid_argument("brasil: initial nodes must lie strictly inside (a, b)");

  const std::size_t m = nodes.size();
  std::vector<BrasilStep> trace;
  for (std::size_t iter = 1;; ++iter) {
    const SampleSet samples = SampleSet::from_function(nodes, f);
    GreedyResult g = thiele_greedy(samples, 0.0);
    if (g.termination == Termination::no_finite_candidate)
      throw std::runtime_error("brasil: interpolation broke down at iteration " + std::to_string(iter) + " after " +
                               std::to_string(g.points_used) + " of " + std::to_string(m) + " nodes");
    ExtremaReport report = find_extrema(nodes, a, b, g.fraction, f, cfg.extremum_search_tol);
    for (std::size_t k = 0; k < report.signed_residuals.size(); ++k)
      if (!std::isfinite(report.signed_residuals[k]))
        throw std::runtime_error("brasil: non-finite error at x = " + std::to_string(report.locations[k]) +
                                 " in iteration " + std::to_string(iter) + " (pole in the interval)");

    auto finish = [&](bool converged, bool degenerate) {
      trace.push_back({report.level_ratio, report.leveled_error, 0.0});
      return BrasilResult{std::move(g.fraction), std::move(report), nodes, iter, converged, degenerate,
                          std::move(trace)};
    };

    if (report.level_ratio < cfg.tol)
      return finish(true, false);
    if (report.leveled_error <= cfg.zero_residual_tol)
      return finish(true, true);

    const std::size_t nsub = report.signed_residuals.size();
    std::vector<double> r(nsub);
    for (std::size_t k = 0; k < nsub; ++k)
      r[k] = std::abs(report.signed_residuals[k]);
    const double h = std::accumulate(r.begin(), r.end(), 0.0) / static_cast<double>(nsub);
    double spread = 0.0;
    for (double v : r)
      spread = std::max(spread, std::abs(v - h));
    if (spread == 0.0 || h == 0.0)
      return finish(true, true);
    const double s = std::min(cfg.smax, cfg.t * spread / h);
    if (!(s > 0.0 && s <= cfg.smax))
      throw std::logic_error("brasil: step size out of range");

    if (iter >= cfg.max_iter) {
      trace.push_back({report.level_ratio, report.leveled_error, 0.0});
      return BrasilResult{std::move(g.fraction), std::move(report), nodes, iter, false, false, std::move(trace)};
    }
    trace.push_back({report.level_ratio, report.leveled_error, s});

    // Subinterval widths of {a, nodes, b}; there is one extremum per subinterval.
    std::vector<double> lengths(m + 1);
    for (std::size_t k = 0; k <= m; ++k) {
      const double lo = k == 0 ? a : nodes[k - 1];
      const double hi = k == m ? b : nodes[k];
      lengths[k] = std::pow(1.0 - s, (r[k] - h) / spread) * (hi - lo);
    }
    std::vector<double> sorted_lengths(lengths);
    std::sort(sorted_lengths.begin(), sorted_lengths.end());
    const double total = std::accumulate(sorted_lengths.begin(), sorted_lengths.end(), 0.0);

    double partial = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      partial += lengths[i];
      nodes[i] = (a * total + (b - a) * partial) / total;
    }
    for (std::size_t i = 0; i < m; ++i) {
      const bool inside = nodes[i] > a && nodes[i] < b && (i == 0 || nodes[i] > nodes[i - 1]);
      if (!inside)
        throw std::runtime_error("brasil: rescaled nodes collapsed at iteration " + std::to_string(iter));
    }
  }
}

} // namespace thiele

#endif // THIELE_MINIMAX_HPP
