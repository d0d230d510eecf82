// Interpolates cos(exp(x)) in 100 equispaced points on [-1, 1] and reports
// how many points the greedy construction needed and how well it does in
// between the samples.

#include <cmath>
#include <cstdio>

#include "thiele/thiele.hpp"

int main() {
  auto f = [](double x) { return std::cos(std::exp(x)); };
  const auto samples = thiele::SampleSet::from_function(thiele::uniform_grid(-1.0, 1.0, 100), f);
  const auto g = thiele::thiele_greedy(samples);

  std::printf("points used: %zu of %zu (%s)\n", g.points_used, samples.size(),
              std::string(thiele::to_string(g.termination)).c_str());

  const auto rr = thiele::residual_report(g.fraction, samples);
  std::printf("max residual at samples: %.3e\n", rr.norm_max);

  double worst = 0.0;
  for (double x : thiele::uniform_grid(-1.0, 1.0, 10001))
    worst = std::max(worst, std::abs(f(x) - thiele::eval_backward(g.fraction, x)));
  std::printf("max error on a fine grid: %.3e\n", worst);

  const auto poles = thiele::scan_poles(g.fraction, -1.0, 1.0, 10001);
  std::printf("sign changes of the denominator in [-1, 1]: %zu\n", poles.size());
}
