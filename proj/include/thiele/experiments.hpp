#ifndef THIELE_EXPERIMENTS_HPP
#define THIELE_EXPERIMENTS_HPP

#include <chrono>
#include <cmath>
#include <cstddef>
#include <functional>
#include <future>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "thiele/continued_fraction.hpp"
#include "thiele/greedy.hpp"
#include "thiele/io.hpp"
#include "thiele/minimax.hpp"
#include "thiele/nodes.hpp"
#include "thiele/sample_set.hpp"

namespace thiele {

// ---------------------------------------------------------------------------
// Built-in target functions

enum class BuiltinFunction { abs_x, sqrt_x, sin20_ratio, cos_exp };

struct BuiltinInfo {
  BuiltinFunction id;
  std::string_view name;
  double lo;
  double hi;
};

inline constexpr BuiltinInfo kBuiltins[] = {
    {BuiltinFunction::abs_x, "abs_x", -1.0, 1.0},
    {BuiltinFunction::sqrt_x, "sqrt_x", 0.0, 1.0},
    {BuiltinFunction::sin20_ratio, "sin20_ratio", -1.0, 2.0},
    {BuiltinFunction::cos_exp, "cos_exp", -1.0, 1.0},
};

inline double evaluate(BuiltinFunction fn, double x) {
  switch (fn) {
  case BuiltinFunction::abs_x: return std::abs(x);
  case BuiltinFunction::sqrt_x: return std::sqrt(x);
  case BuiltinFunction::sin20_ratio: return std::sin(20.0 * x) / (1.0 + 25.0 * x * x);
  case BuiltinFunction::cos_exp: return std::cos(std::exp(x));
  }
  return std::nan("");
}

inline const BuiltinInfo& builtin(std::string_view name) {
  for (const auto& b : kBuiltins)
    if (b.name == name)
      return b;
  throw std::invalid_argument("unknown function `" + std::string(name) + "`");
}

inline const BuiltinInfo& builtin(BuiltinFunction fn) {
  for (const auto& b : kBuiltins)
    if (b.id == fn)
      return b;
  throw std::invalid_argument("unknown function");
}

// ---------------------------------------------------------------------------
// Interpolation sweeps

struct ExperimentRow {
  std::size_t n = 0;
  double max_interval_error = 0.0;
  double node_residual_2norm = 0.0;
  std::size_t points_used = 0;
  bool poles_in_interval = false;
  double runtime_ms = 0.0;
  double reference_rate = 0.0;  // n^{-1/2} exp(-sqrt(n)), for plotting
};

inline constexpr std::string_view kExperimentHeader =
    "n,max_interval_error,node_residual_2norm,points_used,poles_in_interval,runtime_ms,reference_rate";

inline void write_rows_csv(std::ostream& out, std::span<const ExperimentRow> rows, bool timing = true) {
  out << kExperimentHeader << '\n';
  for (const auto& r : rows)
    out << r.n << ',' << format_double(r.max_interval_error) << ',' << format_double(r.node_residual_2norm) << ','
        << r.points_used << ',' << (r.poles_in_interval ? "true" : "false") << ','
        << format_double(timing ? r.runtime_ms : 0.0) << ',' << format_double(r.reference_rate) << '\n';
}

inline double reference_rate(std::size_t n) {
  const double v = static_cast<double>(n);
  return std::exp(-std::sqrt(v)) / std::sqrt(v);
}

inline std::vector<double> uniform_grid(double a, double b, std::size_t m) {
  if (m < 2)
    throw std::invalid_argument("uniform_grid: need at least two points");
  std::vector<double> g(m);
  for (std::size_t j = 0; j < m; ++j)
    g[j] = j + 1 == m ? b : a + (b - a) * static_cast<double>(j) / static_cast<double>(m - 1);
  return g;
}

/// 0 followed by m points logarithmically spaced on [lo, 1].
inline std::vector<double> log_grid_with_zero(double lo, std::size_t m) {
  if (m < 2 || !(lo > 0.0 && lo < 1.0))
    throw std::invalid_argument("log_grid_with_zero: bad parameters");
  std::vector<double> g{0.0};
  const double l = std::log10(lo);
  for (std::size_t j = 0; j < m; ++j)
    g.push_back(j + 1 == m ? 1.0 : std::pow(10.0, l - l * static_cast<double>(j) / static_cast<double>(m - 1)));
  return g;
}

/// Interpolates f in the given points, then measures the sup-norm error on the
/// grid (ignoring the two grid points of each pole bracket) and the residual
/// 2-norm in the points.
template <class F>
ExperimentRow interpolation_row(std::size_t n, std::vector<double> points, F&& f, std::span<const double> grid,
                                double tol = kDefaultTolerance) {
  const auto start = std::chrono::steady_clock::now();
  const SampleSet samples = SampleSet::from_function(std::move(points), f);
  const GreedyResult g = thiele_greedy(samples, tol);

  const auto cells = pole_cells(g.fraction, grid);
  std::vector<bool> skip(grid.size(), false);
  for (std::size_t c : cells)
    skip[c] = skip[c + 1] = true;
  double sup = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    if (skip[j])
      continue;
    const double e = std::abs(static_cast<double>(f(grid[j])) - eval_backward(g.fraction, grid[j]));
    sup = std::isnan(e) ? e : std::max(sup, e);
    if (std::isnan(sup))
      break;
  }
  const ResidualReport rr = residual_report(g.fraction, samples);
  const auto stop = std::chrono::steady_clock::now();

  ExperimentRow row;
  row.n = n;
  row.max_interval_error = sup;
  row.node_residual_2norm = rr.norm2;
  row.points_used = g.points_used;
  row.poles_in_interval = !cells.empty();
  row.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  row.reference_rate = reference_rate(n);
  return row;
}

struct SweepConfig {
  std::size_t n_min = 0;
  std::size_t n_max = 0;
  std::size_t grid_size = 100000;
  unsigned threads = 0;  // 0: hardware concurrency
};

namespace detail {

template <class RowFn>
std::vector<ExperimentRow> sweep(const SweepConfig& cfg, RowFn&& row_fn) {
  if (cfg.n_min == 0 || cfg.n_max < cfg.n_min)
    throw std::invalid_argument("sweep: bad n range");
  const std::size_t count = cfg.n_max - cfg.n_min + 1;
  std::vector<ExperimentRow> rows(count);
  unsigned workers = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  // Rows are independent; each worker takes every workers-th n.
  std::vector<std::future<void>> jobs;
  for (unsigned w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < count; i += workers)
        rows[i] = row_fn(cfg.n_min + i);
    }));
  for (auto& j : jobs)
    j.get();
  return rows;
}

} // namespace detail

/// |x| interpolated in Newman points, sup-norm on a uniform grid over [-1, 1].
inline std::vector<ExperimentRow> run_newman_abs(SweepConfig cfg = {}) {
  if (cfg.n_min == 0)
    cfg.n_min = 6;
  if (cfg.n_max == 0)
    cfg.n_max = 50;
  const std::vector<double> grid = uniform_grid(-1.0, 1.0, cfg.grid_size);
  auto f = [](double x) { return std::abs(x); };
  return detail::sweep(cfg, [&](std::size_t n) { return interpolation_row(n, newman_points(n), f, grid); });
}

inline ExperimentRow newman_sqrt_row(std::size_t n, std::span<const double> grid) {
  auto f = [](double x) { return std::sqrt(x); };
  return interpolation_row(n, squared_newman_points(n), f, grid);
}

/// sqrt(x) interpolated in squared Newman points, sup-norm on 0 plus a
/// log-spaced grid over [1e-16, 1].
inline std::vector<ExperimentRow> run_newman_sqrt(SweepConfig cfg = {}) {
  if (cfg.n_min == 0)
    cfg.n_min = 5;
  if (cfg.n_max == 0)
    cfg.n_max = 400;
  const std::vector<double> grid = log_grid_with_zero(1e-16, cfg.grid_size);
  return detail::sweep(cfg, [&](std::size_t n) { return newman_sqrt_row(n, grid); });
}

// ---------------------------------------------------------------------------
// Best-approximation case studies

struct MinimaxExperiment {
  BrasilResult result;
  EquioscillationCheck check;
  std::size_t initial_points_used;
  double runtime_ms;
};

struct MinimaxOverrides {
  std::optional<std::size_t> nodes;
  std::optional<double> smax;
  std::optional<double> t;
  std::optional<double> tol;
  std::optional<std::size_t> max_iter;
};

template <class F>
MinimaxExperiment run_minimax(F&& f, double a, double b, std::vector<double> candidates, std::size_t nodes,
                              const BrasilConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const GreedyResult init = thiele_greedy(SampleSet::from_function(std::move(candidates), f), kDefaultTolerance, nodes);
  BrasilResult r = brasil(init.fraction.nodes(), f, a, b, cfg);
  const auto stop = std::chrono::steady_clock::now();
  const EquioscillationCheck check = equioscillation_check(r.final_report, cfg.tol);
  return {std::move(r), check, init.points_used, std::chrono::duration<double, std::milli>(stop - start).count()};
}

namespace detail {
inline BrasilConfig apply(BrasilConfig c, const MinimaxOverrides& o) {
  if (o.smax)
    c.smax = *o.smax;
  if (o.t)
    c.t = *o.t;
  if (o.tol)
    c.tol = *o.tol;
  if (o.max_iter)
    c.max_iter = *o.max_iter;
  return c;
}
} // namespace detail

/// sin(20x)/(1+25x^2) on [-1, 2]; start from the 50-term greedy fraction on
/// 100 first-kind Chebyshev points.
inline MinimaxExperiment run_sin_minimax(const MinimaxOverrides& o = {}) {
  BrasilConfig c;
  c.smax = 0.01;
  c.t = 0.01;
  c.tol = 1e-3;
  c.max_iter = 5000;
  c = detail::apply(c, o);
  auto f = [](double x) { return evaluate(BuiltinFunction::sin20_ratio, x); };
  return run_minimax(f, -1.0, 2.0, chebyshev1(100, -1.0, 2.0), o.nodes.value_or(50), c);
}

/// sqrt(x) on [0, 1]; start from 81 nodes chosen greedily among 1000
/// equispaced points raised to the sixth power, endpoints removed.
inline MinimaxExperiment run_sqrt_minimax(const MinimaxOverrides& o = {}) {
  BrasilConfig c;
  c.smax = 0.1;
  c.t = 0.1;
  c.tol = 2e-4;
  c.max_iter = 5000;
  c = detail::apply(c, o);
  auto f = [](double x) { return std::sqrt(x); };
  return run_minimax(f, 0.0, 1.0, power_grid(1000, 6.0, 0.0, 1.0, true), o.nodes.value_or(81), c);
}

inline void write_extrema_csv(std::ostream& out, const ExtremaReport& r) {
  out << "k,location,signed_residual\n";
  for (std::size_t k = 0; k < r.locations.size(); ++k)
    out << k << ',' << format_double(r.locations[k]) << ',' << format_double(r.signed_residuals[k]) << '\n';
}

} // namespace thiele

#endif // THIELE_EXPERIMENTS_HPP
