#ifndef THIELE_UNATTAINABLE_HPP
#define THIELE_UNATTAINABLE_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "thiele/continued_fraction.hpp"
#include "thiele/sample_set.hpp"

namespace thiele {

/// A posteriori check of one interpolation node.
struct NodeDiagnostic {
  std::size_t index;   // position in cf.nodes()
  double value;        // f at the node, from the samples
  double residual;     // eval_backward(cf, z_i) - f(z_i); NaN at 0/0
  double tail_value;   // T_{i+1,n}(z_i); NaN for the terminal node
  bool unattainable;
};

/// Checks every stored node of cf against the samples. A node is flagged when
/// direct evaluation misses its data value by more than tol * max(1, |f|), or
/// when evaluation there is not finite. The tail value is reported for
/// inspection only; a vanishing tail T_{i+1,n}(z_i) marks z_i as a common zero
/// of numerator and denominator.
inline std::vector<NodeDiagnostic> node_diagnostics(const ContinuedFraction& cf, const SampleSet& samples,
                                                    double tol) {
  std::vector<NodeDiagnostic> out;
  const auto nodes = cf.nodes();
  out.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto idx = samples.find(nodes[i]);
    if (!idx)
      throw std::invalid_argument("detect_unattainable: node " + std::to_string(i) + " (x = " +
                                  std::to_string(nodes[i]) + ") is missing from the samples");
    const double f = samples.f(*idx);
    const double r = eval_backward(cf, nodes[i]) - f;
    const double tail =
        i < cf.order() ? eval_tail(cf, i + 1, nodes[i]) : std::numeric_limits<double>::quiet_NaN();
    const bool bad = !std::isfinite(r) || std::abs(r) > tol * std::max(1.0, std::abs(f));
    out.push_back({i, f, r, tail, bad});
  }
  return out;
}

/// Indices of unattainable nodes (see node_diagnostics).
inline std::vector<std::size_t> detect_unattainable(const ContinuedFraction& cf, const SampleSet& samples,
                                                    double tol) {
  std::vector<std::size_t> out;
  for (const auto& d : node_diagnostics(cf, samples, tol))
    if (d.unattainable)
      out.push_back(d.index);
  return out;
}

} // namespace thiele

#endif // THIELE_UNATTAINABLE_HPP
