#ifndef THIELE_SAMPLE_SET_HPP
#define THIELE_SAMPLE_SET_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace thiele {

/// Distinct finite abscissae with their function values.
class SampleSet {
public:
  SampleSet(std::vector<double> xs, std::vector<double> fs) : xs_(std::move(xs)), fs_(std::move(fs)) {
    if (xs_.size() != fs_.size())
      throw std::invalid_argument("sample set: " + std::to_string(xs_.size()) + " abscissae but " +
                                  std::to_string(fs_.size()) + " values");
    if (xs_.empty())
      throw std::invalid_argument("sample set is empty");
    for (std::size_t i = 0; i < xs_.size(); ++i)
      if (!std::isfinite(xs_[i]) || !std::isfinite(fs_[i]))
        throw std::invalid_argument("sample set: non-finite entry at index " + std::to_string(i));

    order_.resize(xs_.size());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::sort(order_.begin(), order_.end(), [&](std::size_t l, std::size_t r) { return xs_[l] < xs_[r]; });
    for (std::size_t i = 1; i < order_.size(); ++i)
      if (xs_[order_[i - 1]] == xs_[order_[i]])
        throw std::invalid_argument("sample set: duplicate abscissa " + std::to_string(xs_[order_[i]]));
  }

  /// Samples f at the given abscissae.
  template <class F>
  static SampleSet from_function(std::vector<double> xs, F&& f) {
    std::vector<double> fs;
    fs.reserve(xs.size());
    for (double x : xs)
      fs.push_back(static_cast<double>(f(x)));
    return SampleSet(std::move(xs), std::move(fs));
  }

  [[nodiscard]] std::size_t size() const noexcept { return xs_.size(); }
  [[nodiscard]] std::span<const double> xs() const noexcept { return xs_; }
  [[nodiscard]] std::span<const double> fs() const noexcept { return fs_; }
  [[nodiscard]] double x(std::size_t i) const { return xs_.at(i); }
  [[nodiscard]] double f(std::size_t i) const { return fs_.at(i); }

  /// Index of the sample with abscissa exactly x, if any.
  [[nodiscard]] std::optional<std::size_t> find(double x) const {
    auto it = std::lower_bound(order_.begin(), order_.end(), x,
                               [&](std::size_t i, double v) { return xs_[i] < v; });
    if (it == order_.end() || xs_[*it] != x)
      return std::nullopt;
    return *it;
  }

private:
  std::vector<double> xs_;
  std::vector<double> fs_;
  std::vector<std::size_t> order_;  // indices sorted by abscissa
};

} // namespace thiele

#endif // THIELE_SAMPLE_SET_HPP
