#ifndef THIELE_TESTS_SUPPORT_HPP
#define THIELE_TESTS_SUPPORT_HPP

#include <cmath>
#include <random>
#include <vector>

#include "thiele/continued_fraction.hpp"
#include "thiele/exact_oracle.hpp"

namespace thiele::test {

inline exact::ContinuedFraction to_exact(const ContinuedFraction& cf) {
  exact::ContinuedFraction e;
  for (double a : cf.coefficients())
    e.coefficients.push_back(exact::from_double(a));
  for (double z : cf.nodes())
    e.nodes.push_back(exact::from_double(z));
  return e;
}

inline std::vector<exact::Rational> to_exact(const std::vector<double>& v) {
  std::vector<exact::Rational> out;
  for (double x : v)
    out.push_back(exact::from_double(x));
  return out;
}

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

/// Value of the exact rational function A/B at x, rounded to double.
inline double exact_value(const exact::RationalFunction& rf, double x) {
  const auto q = exact::from_double(x);
  return exact::to_double(rf.numerator(q) / rf.denominator(q));
}

/// Random fraction with n+1 coefficients of magnitude in [0.1, 10] with random
/// sign and distinct nodes in [-1, 1].
inline ContinuedFraction random_fraction(std::mt19937_64& rng, std::size_t n, double lo = 0.1, double hi = 10.0) {
  std::uniform_real_distribution<double> mag(lo, hi);
  std::uniform_real_distribution<double> pos(-1.0, 1.0);
  std::bernoulli_distribution coin(0.5);
  std::vector<double> a, z;
  for (std::size_t i = 0; i <= n; ++i)
    a.push_back(coin(rng) ? mag(rng) : -mag(rng));
  while (z.size() < n) {
    const double v = pos(rng);
    bool fresh = true;
    for (double w : z)
      fresh = fresh && w != v;
    if (fresh)
      z.push_back(v);
  }
  return ContinuedFraction(std::move(a), std::move(z));
}

/// Distinct random abscissae in [lo, hi].
inline std::vector<double> random_points(std::mt19937_64& rng, std::size_t m, double lo, double hi) {
  std::uniform_real_distribution<double> pos(lo, hi);
  std::vector<double> xs;
  while (xs.size() < m) {
    const double v = pos(rng);
    bool fresh = true;
    for (double w : xs)
      fresh = fresh && std::abs(w - v) > 1e-3 * (hi - lo);
    if (fresh)
      xs.push_back(v);
  }
  return xs;
}

} // namespace thiele::test

#endif // THIELE_TESTS_SUPPORT_HPP
