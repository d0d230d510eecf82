#ifndef THIELE_NODES_HPP
#define THIELE_NODES_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace thiele {

namespace detail {

inline std::vector<double> sorted_unique(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  if (v.size() < 2)
    throw std::domain_error("node family collapsed to fewer than two distinct points");
  return v;
}

} // namespace detail

/// Newman points (-1, -eta, ..., -eta^{n-1}, 0, eta^{n-1}, ..., 1) with
/// eta = exp(-1/sqrt(n)); 2n+1 points.
inline std::vector<double> newman_points(std::size_t n) {
  if (n == 0)
    throw std::invalid_argument("newman_points: n must be positive");
  const double rate = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<double> v;
  v.reserve(2 * n + 1);
  v.push_back(0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const double p = std::exp(-rate * static_cast<double>(k));
    v.push_back(p);
    v.push_back(-p);
  }
  return detail::sorted_unique(std::move(v));
}

/// Squared Newman points (0, eta^{2(n-1)}, ..., eta^2, 1); n+1 points in [0, 1].
inline std::vector<double> squared_newman_points(std::size_t n) {
  if (n == 0)
    throw std::invalid_argument("squared_newman_points: n must be positive");
  std::vector<double> v;
  v.reserve(n + 1);
  v.push_back(0.0);
  for (double x : newman_points(n))
    if (x > 0.0)
      v.push_back(x * x);
  return detail::sorted_unique(std::move(v));
}

/// First-kind Chebyshev points cos((2k-1)pi/(2m)), k = 1..m, mapped to [a, b].
inline std::vector<double> chebyshev1(std::size_t m, double a, double b) {
  if (m == 0)
    throw std::invalid_argument("chebyshev1: m must be positive");
  if (!(a < b))
    throw std::invalid_argument("chebyshev1: need a < b");
  std::vector<double> v;
  v.reserve(m);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  for (std::size_t k = 1; k <= m; ++k) {
    const double t = std::cos(static_cast<double>(2 * k - 1) * std::numbers::pi / static_cast<double>(2 * m));
    // cos(pi/2) is not exactly zero in floating point
    v.push_back(2 * k - 1 == m ? mid : mid + half * t);
  }
  std::sort(v.begin(), v.end());
  return v;
}

/// m equispaced points on [0, 1] raised to the power p, mapped to [a, b].
/// Duplicates after exponentiation are dropped; with drop_endpoints the
/// smallest and largest remaining points are removed.
inline std::vector<double> power_grid(std::size_t m, double p, double a, double b, bool drop_endpoints) {
  if (m < 2 || (drop_endpoints && m < 3))
    throw std::invalid_argument("power_grid: too few points");
  if (!(a < b))
    throw std::invalid_argument("power_grid: need a < b");
  std::vector<double> v;
  v.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double t = k + 1 == m ? 1.0 : static_cast<double>(k) / static_cast<double>(m - 1);
    v.push_back(a + (b - a) * std::pow(t, p));
  }
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  if (drop_endpoints) {
    if (v.size() < 3)
      throw std::domain_error("power_grid: fewer than three distinct points before dropping endpoints");
    v.erase(v.begin());
    v.pop_back();
  }
  if (v.empty())
    throw std::domain_error("power_grid: no points left");
  return v;
}

} // namespace thiele

#endif // THIELE_NODES_HPP
