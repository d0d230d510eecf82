#ifndef THIELE_CONTINUED_FRACTION_HPP
#define THIELE_CONTINUED_FRACTION_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace thiele {

/// Thiele interpolating continued fraction
///
///   a_0 + (x - z_0) / (a_1 + (x - z_1) / (a_2 + ... + (x - z_{n-1}) / a_n))
///
/// The coefficients a_i are inverse differences of the data. The node list
/// holds z_0..z_{n-1}, optionally followed by the abscissa z_n at which the
/// last coefficient was fixed. z_n never enters evaluation, but it is one of
/// the interpolation points and is kept so that the full node set travels
/// with the fraction.
///
/// Immutable after construction.
class ContinuedFraction {
public:
  ContinuedFraction(std::vector<double> coefficients, std::vector<double> nodes)
      : coefficients_(std::move(coefficients)), nodes_(std::move(nodes)) {
    if (coefficients_.empty())
      throw std::invalid_argument("continued fraction needs at least one coefficient");
    if (nodes_.size() + 1 != coefficients_.size() && nodes_.size() != coefficients_.size())
      throw std::invalid_argument("continued fraction: expected " +
                                  std::to_string(coefficients_.size() - 1) + " or " +
                                  std::to_string(coefficients_.size()) + " nodes, got " +
                                  std::to_string(nodes_.size()));
    for (double a : coefficients_)
      if (!std::isfinite(a))
        throw std::invalid_argument("continued fraction coefficient is not finite");
    for (double z : nodes_)
      if (!std::isfinite(z))
        throw std::invalid_argument("continued fraction node is not finite");
    std::vector<double> sorted(nodes_);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("continued fraction nodes are not pairwise distinct");
  }

  /// Number of coefficients, n + 1.
  [[nodiscard]] std::size_t size() const noexcept { return coefficients_.size(); }
  /// Index n of the last convergent.
  [[nodiscard]] std::size_t order() const noexcept { return coefficients_.size() - 1; }

  [[nodiscard]] std::span<const double> coefficients() const noexcept { return coefficients_; }
  /// All stored nodes, including the terminal one when present.
  [[nodiscard]] std::span<const double> nodes() const noexcept { return nodes_; }
  /// The n nodes that appear in the partial numerators.
  [[nodiscard]] std::span<const double> evaluation_nodes() const noexcept {
    return std::span<const double>(nodes_).first(order());
  }
  [[nodiscard]] bool has_terminal_node() const noexcept { return nodes_.size() == coefficients_.size(); }

  [[nodiscard]] double coefficient(std::size_t i) const { return coefficients_.at(i); }
  [[nodiscard]] double node(std::size_t i) const { return nodes_.at(i); }

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

private:
  std::vector<double> coefficients_;
  std::vector<double> nodes_;
};

/// Numerator/denominator pair of a convergent at a point. The true values are
/// numerator * 2^scale_exponent and denominator * 2^scale_exponent.
struct ConvergentValue {
  double numerator = 0.0;
  double denominator = 1.0;
  int scale_exponent = 0;

  [[nodiscard]] double ratio() const { return numerator / denominator; }
};

namespace detail {

// Suffix a_first + (x - z_first)/(a_{first+1} + ...), innermost first.
inline double backward_from(std::span<const double> a, std::span<const double> z, std::size_t first,
                            double x) noexcept {
  double res = 0.0;
  for (std::size_t i = a.size() - 1; i > first; --i)
    res = (x - z[i - 1]) / (a[i] + res);
  return a[first] + res;
}

} // namespace detail

/// Backward evaluation of the whole fraction. Division by a vanishing partial
/// denominator follows IEEE semantics, so the result is non-finite only at a
/// pole (or at an unattainable node, where 0/0 appears).
inline double eval_backward(const ContinuedFraction& cf, double x) noexcept {
  return detail::backward_from(cf.coefficients(), cf.nodes(), 0, x);
}

/// Tail T_{i,n}(x): backward evaluation starting at coefficient a_i.
inline double eval_tail(const ContinuedFraction& cf, std::size_t i, double x) {
  if (i >= cf.size())
    throw std::out_of_range("eval_tail: index " + std::to_string(i) + " exceeds order " +
                            std::to_string(cf.order()));
  return detail::backward_from(cf.coefficients(), cf.nodes(), i, x);
}

/// Forward three-term recurrence for (A_k(x), B_k(x)).
///
/// The 4-tuple (A_k, B_k, A_{k-1}, B_{k-1}) is rescaled by 2^-+500 whenever a
/// magnitude exceeds 2^500 or all magnitudes fall below 2^-500; the scaling
/// is exact and is tracked in scale_exponent.
inline ConvergentValue eval_convergent_pair(const ContinuedFraction& cf, std::size_t k, double x) {
  if (k >= cf.size())
    throw std::out_of_range("eval_convergent_pair: index " + std::to_string(k) + " exceeds order " +
                            std::to_string(cf.order()));
  constexpr int kStep = 500;
  const double upper = std::ldexp(1.0, kStep);
  const double lower = std::ldexp(1.0, -kStep);

  auto a = cf.coefficients();
  auto z = cf.nodes();
  double a_prev = 1.0, b_prev = 0.0;  // A_{-1}, B_{-1}
  double a_cur = a[0], b_cur = 1.0;   // A_0, B_0
  int scale = 0;
  for (std::size_t i = 1; i <= k; ++i) {
    const double t = x - z[i - 1];
    const double a_next = a[i] * a_cur + t * a_prev;
    const double b_next = a[i] * b_cur + t * b_prev;
    a_prev = a_cur;
    b_prev = b_cur;
    a_cur = a_next;
    b_cur = b_next;

    const double m = std::max({std::abs(a_cur), std::abs(b_cur), std::abs(a_prev), std::abs(b_prev)});
    if (m > upper) {
      a_cur = std::ldexp(a_cur, -kStep);
      b_cur = std::ldexp(b_cur, -kStep);
      a_prev = std::ldexp(a_prev, -kStep);
      b_prev = std::ldexp(b_prev, -kStep);
      scale += kStep;
    } else if (m < lower && m > 0.0) {
      a_cur = std::ldexp(a_cur, kStep);
      b_cur = std::ldexp(b_cur, kStep);
      a_prev = std::ldexp(a_prev, kStep);
      b_prev = std::ldexp(b_prev, kStep);
      scale -= kStep;
    }
  }
  return {a_cur, b_cur, scale};
}

/// Interval [lo, hi] of the scan grid that brackets a sign change of the
/// final denominator.
struct PoleBracket {
  double lo;
  double hi;
};

/// Indices j such that B_n changes sign between grid[j] and grid[j+1] while
/// A_n is nonzero at both. A zero of B exactly on a grid point is attributed
/// to the cell ending there. The grid must be ascending.
inline std::vector<std::size_t> pole_cells(const ContinuedFraction& cf, std::span<const double> grid) {
  std::vector<std::size_t> cells;
  if (grid.size() < 2)
    return cells;
  auto sign = [](double v) { return (v > 0.0) - (v < 0.0); };
  ConvergentValue v0 = eval_convergent_pair(cf, cf.order(), grid[0]);
  for (std::size_t j = 1; j < grid.size(); ++j) {
    const ConvergentValue v1 = eval_convergent_pair(cf, cf.order(), grid[j]);
    const int s0 = sign(v0.denominator);
    const int s1 = sign(v1.denominator);
    const bool change = (s0 * s1 < 0) || (s1 == 0 && s0 != 0);
    if (change && v0.numerator != 0.0 && v1.numerator != 0.0)
      cells.push_back(j - 1);
    v0 = v1;
  }
  return cells;
}

/// Scans a uniform grid of grid_size points on [a, b] for sign changes of
/// B_n(x) at which A_n(x) does not vanish.
inline std::vector<PoleBracket> scan_poles(const ContinuedFraction& cf, double a, double b,
                                           std::size_t grid_size) {
  if (!(a < b))
    throw std::invalid_argument("scan_poles: need a < b");
  if (grid_size < 2)
    throw std::invalid_argument("scan_poles: grid needs at least two points");
  std::vector<double> grid(grid_size);
  for (std::size_t j = 0; j < grid_size; ++j)
    grid[j] = j + 1 == grid_size ? b : a + (b - a) * static_cast<double>(j) / static_cast<double>(grid_size - 1);
  std::vector<PoleBracket> out;
  for (std::size_t j : pole_cells(cf, grid))
    out.push_back({grid[j], grid[j + 1]});
  return out;
}

} // namespace thiele

#endif // THIELE_CONTINUED_FRACTION_HPP
