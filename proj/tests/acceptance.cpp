// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion.
//
//   acceptance [--expect-fail ID]...
//
// Exits zero only when the failing criteria are exactly the expected ones, so a
// known-unattainable criterion still reports FAIL without breaking the build,
// and an unexpected pass or failure is caught.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "support.hpp"
#include "thiele/exact_oracle.hpp"
#include "thiele/thiele.hpp"

namespace {

using namespace thiele;
using Clock = std::chrono::steady_clock;

std::set<int> failed;

void report(int id, const char* name, bool ok, const std::string& detail) {
  std::printf("%s %d %s: %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  if (!ok)
    failed.insert(id);
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

const ExperimentRow& row(const std::vector<ExperimentRow>& rows, std::size_t n) {
  return *std::find_if(rows.begin(), rows.end(), [n](const ExperimentRow& r) { return r.n == n; });
}

void newman_abs() {
  const auto t0 = Clock::now();
  const auto rows = run_newman_abs();
  const double secs = seconds_since(t0);

  const double scale = row(rows, 20).max_interval_error / reference_rate(20);
  double worst_factor = 1.0;
  for (std::size_t n : {10u, 20u, 30u, 40u, 50u}) {
    const double ratio = row(rows, n).max_interval_error / (scale * reference_rate(n));
    worst_factor = std::max({worst_factor, ratio, 1.0 / ratio});
  }
  const double decrease = row(rows, 10).max_interval_error / row(rows, 50).max_interval_error;
  double max_res = 0.0;
  for (const auto& r : rows)
    max_res = std::max(max_res, r.node_residual_2norm);
  bool poles_ok = true;
  for (std::size_t n : {11u, 21u, 31u})
    poles_ok = poles_ok && row(rows, n).poles_in_interval;
  for (const auto& r : rows)
    if (r.n % 2 == 0)
      poles_ok = poles_ok && !r.poles_in_interval;

  const bool ok = worst_factor <= 100.0 && decrease >= 10.0 && max_res < 1e-12 && poles_ok && secs < 60.0;
  report(1, "newman_abs",
         ok,
         fmt("worst factor vs n^-1/2 e^-sqrt(n) %.3g, decrease n=10->50 %.3gx, max residual 2-norm %.3g, "
             "poles odd/even %s, %.2f s",
             worst_factor, decrease, max_res, poles_ok ? "ok" : "wrong", secs));
}

std::vector<ExperimentRow> newman_sqrt() {
  const auto t0 = Clock::now();
  auto rows = run_newman_sqrt();
  const double secs = seconds_since(t0);

  const auto& last = row(rows, 400);
  double max_res = 0.0;
  for (const auto& r : rows)
    max_res = std::max(max_res, r.node_residual_2norm);
  // Root-exponential decrease: strictly decreasing at n = 25, 50, ..., 400 and
  // a negative slope of log(error) against sqrt(n).
  bool decreasing = true;
  double prev = INFINITY;
  for (std::size_t n : {25u, 50u, 100u, 200u, 400u}) {
    decreasing = decreasing && row(rows, n).max_interval_error < prev;
    prev = row(rows, n).max_interval_error;
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& r : rows) {
    const double x = std::sqrt(static_cast<double>(r.n)), y = std::log(r.max_interval_error);
    sx += x, sy += y, sxx += x * x, sxy += x * y;
  }
  const double m = static_cast<double>(rows.size());
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);

  const bool ok = last.points_used >= 100 && last.points_used <= 135 && last.max_interval_error < 1e-9 && decreasing &&
                  slope < 0.0 && max_res < 1e-12 && secs < 300.0;
  report(2, "newman_sqrt", ok,
         fmt("n=400 uses %zu points, error %.3g, log-error slope vs sqrt(n) %.3g, checkpoints %s, "
             "max residual 2-norm %.3g, %.2f s",
             last.points_used, last.max_interval_error, slope, decreasing ? "decreasing" : "not decreasing", max_res,
             secs));
  return rows;
}

void sin_minimax() {
  const auto e = run_sin_minimax();
  const double lev = e.result.final_report.leveled_error;
  const bool ok = e.result.converged && lev >= 5e-9 && lev <= 5e-8 && e.check.count == 51 && e.check.alternating;
  report(3, "sin_minimax", ok,
         fmt("converged %s after %zu iterations (step parameters 0.01), leveled error %.4g, %zu extrema, %s",
             e.result.converged ? "yes" : "no", e.result.iterations, lev, e.check.count,
             e.check.alternating ? "alternating" : "not alternating"));
}

double sqrt_minimax() {
  const auto e = run_sqrt_minimax();
  const double lev = e.result.final_report.leveled_error;
  const bool primary = e.result.converged && lev >= 1e-12 && lev <= 2e-11 && e.check.count == 82 && e.check.alternating;
  const bool fallback = lev < 1e-10 && e.check.count >= 78 && e.check.alternating;
  report(4, "sqrt_minimax", primary || fallback,
         fmt("converged %s after %zu iterations, leveled error %.4g, %zu extrema, %s%s",
             e.result.converged ? "yes" : "no", e.result.iterations, lev, e.check.count,
             e.check.alternating ? "alternating" : "not alternating",
             primary ? "" : (fallback ? " (fallback bound only)" : "")));
  return lev;
}

// Floating-point greedy coefficients against the exact reconstruction in the
// same node order, plus the inverse-difference / residual-ratio identity.
// Instances are non-degenerate: points are jittered cell midpoints (no near
// coincidences) and every greedy step's residual stays above 1e-6 max|f|, so
// the inverse differences are well conditioned. The margin is asserted.
void oracle_equivalence() {
  const std::vector<double (*)(double)> fs = {
      [](double x) { return std::atan(10.0 * x) + 2.0; },
      [](double x) { return std::cos(7.0 * x) + x; },
      [](double x) { return std::sin(6.0 * x) * std::exp(x) + 0.5; },
      [](double x) { return std::sin(8.0 * x) + 1.5; },
      [](double x) { return std::tanh(6.0 * x) + 0.5; },
      [](double x) { return std::exp(std::sin(5.0 * x)); },
      [](double x) { return std::sqrt(x * x + 0.01); },
      [](double x) { return std::atan(3.0 * x) + 2.0; },
  };
  std::mt19937_64 rng(20240501);
  std::uniform_int_distribution<std::size_t> count(2, 9);  // n = count - 1 <= 8
  std::uniform_real_distribution<double> jitter(-0.3, 0.3);
  double worst = 0.0, margin = INFINITY;
  int identity_fail = 0, zero_denominators = 0, instances = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = fs[static_cast<std::size_t>(trial) % fs.size()];
    const std::size_t m = count(rng);
    std::vector<double> pts;
    for (std::size_t j = 0; j < m; ++j)
      pts.push_back(-1.0 + 2.0 / static_cast<double>(m) * (static_cast<double>(j) + 0.5 + jitter(rng)));
    const auto s = SampleSet::from_function(pts, f);
    const auto g = thiele_greedy(s, 0.0);
    ++instances;

    double fmax = 0.0;
    for (double v : s.fs())
      fmax = std::max(fmax, std::abs(v));
    const auto& a = g.fraction.coefficients();
    const auto& z = g.fraction.nodes();
    for (std::size_t k = 1; k < g.fraction.size(); ++k) {
      const ContinuedFraction prev(std::vector<double>(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(k)),
                                   std::vector<double>(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(k - 1)));
      margin = std::min(margin, std::abs(f(z[k]) - eval_backward(prev, z[k])) / fmax);
    }

    std::vector<double> fx;
    for (double x : z)
      fx.push_back(s.f(*s.find(x)));
    const auto xs = test::to_exact(std::vector<double>(z.begin(), z.end()));
    const auto fe = test::to_exact(fx);
    const auto ex = exact::thiele_exact(xs, fe);
    if (ex.breakdown || ex.fraction.coefficients.size() != g.fraction.size()) {
      ++identity_fail;
      continue;
    }
    for (std::size_t i = 0; i < g.fraction.size(); ++i) {
      const double want = exact::to_double(ex.fraction.coefficients[i]);
      const double got = g.fraction.coefficient(i);
      const double err = want == 0.0 ? std::abs(got) : std::abs(got - want) / std::abs(want);
      worst = std::max(worst, err);
    }
    const auto conv = exact::convergent_polynomials(ex.fraction);
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      const auto r_prev = exact::residual_exact(conv, static_cast<int>(i) - 1, xs[i + 1], fe[i + 1]);
      const auto r_cur = exact::residual_exact(conv, static_cast<int>(i), xs[i + 1], fe[i + 1]);
      if (r_cur == 0) {
        ++zero_denominators;
        continue;
      }
      identity_fail += ex.fraction.coefficients[i + 1] != -(xs[i + 1] - xs[i]) * r_prev / r_cur;
    }
  }
  const bool ok = worst < 1e-10 && identity_fail == 0 && zero_denominators == 0 && margin >= 1e-6;
  report(5, "oracle_equivalence", ok,
         fmt("%d instances, smallest step residual %.3g of max|f|, worst relative coefficient error %.3g, "
             "identity failures %d, vanishing residuals %d",
             instances, margin, worst, identity_fail, zero_denominators));
}

void degree_bounds() {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 17), order(0, 12);
  int fails = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = order(rng);
    exact::ContinuedFraction cf;
    for (int i = 0; i <= n; ++i) {
      const int v = num(rng);
      cf.coefficients.emplace_back(v == 0 ? 1 : v, den(rng));
      if (i < n)
        cf.nodes.emplace_back(5 * i - 20, den(rng));
    }
    const auto rf = exact::cfrac_to_rational_exact(cf);
    fails += rf.numerator.degree() > (n + 1) / 2 || rf.denominator.degree() > n / 2;
  }
  report(6, "degree_bounds", fails == 0, fmt("100 exact fractions with n <= 12, %d violations", fails));
}

// Rational data of type (p, q) on 25 equispaced points in [-1, 1], denominator
// bounded away from zero.
void early_termination() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> xs;
  for (int i = 0; i < 25; ++i)
    xs.push_back(-1.0 + 2.0 * i / 24.0);
  constexpr int kTrials = 20;
  int stated_fail = 0, staircase_fail = 0;
  std::string offenders;
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q) {
      std::size_t worst = 0;
      bool tol_reached = true;
      for (int trial = 0; trial < kTrials; ++trial) {
        std::vector<double> P(p + 1), Q(q + 1);
        for (auto& c : P)
          c = u(rng);
        for (auto& c : Q)
          c = 0.3 * u(rng);
        Q[0] = 1.0;
        if (p > 0)
          P[p] = std::copysign(0.5 + std::abs(P[p]), P[p]);
        if (q > 0)
          Q[q] = std::copysign(0.2 + 0.1 * std::abs(Q[q]), Q[q]);
        auto f = [&](double x) {
          double a = 0.0, b = 0.0;
          for (int i = p; i >= 0; --i)
            a = a * x + P[i];
          for (int i = q; i >= 0; --i)
            b = b * x + Q[i];
          return a / b;
        };
        const auto g = thiele_greedy(SampleSet::from_function(xs, f));
        worst = std::max(worst, g.points_used);
        tol_reached = tol_reached && g.termination == Termination::tolerance_reached;
      }
      const std::size_t stated = static_cast<std::size_t>(p + q + 2);
      // C_k has type (ceil(k/2), floor(k/2)), so (p, q) data needs k + 1 =
      // max(2p, 2q + 1) points; allow the same one-point slack.
      const std::size_t staircase = static_cast<std::size_t>(std::max(2 * p, 2 * q + 1) + 1);
      if (!tol_reached || worst > stated) {
        ++stated_fail;
        offenders += fmt(" (%d,%d):%zu>%zu", p, q, worst, stated);
      }
      staircase_fail += !tol_reached || worst > staircase;
    }
  report(7, "early_termination", stated_fail == 0,
         fmt("%d trials per (p,q), pairs over p+q+2:%s; staircase bound max(2p,2q+1)+1 violated by %d pairs",
             kTrials, offenders.empty() ? " none" : offenders.c_str(), staircase_fail));
}

void best_vs_interpolation(const std::vector<ExperimentRow>& sqrt_rows, double minimax_error) {
  const auto& r = row(sqrt_rows, 80);  // 81 squared Newman points
  const double factor = r.max_interval_error / minimax_error;
  report(8, "best_vs_interpolation", factor >= 1.5,
         fmt("greedy sup-norm error with 81 points %.4g, minimax leveled error %.4g, ratio %.3g", r.max_interval_error,
             minimax_error, factor));
}

} // namespace

int main(int argc, char** argv) {
  std::set<int> expected;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--expect-fail" && i + 1 < argc) {
      expected.insert(std::atoi(argv[++i]));
    } else {
      std::fprintf(stderr, "usage: %s [--expect-fail ID]...\n", argv[0]);
      return 2;
    }
  }
  newman_abs();
  const auto sqrt_rows = newman_sqrt();
  sin_minimax();
  const double minimax_error = sqrt_minimax();
  oracle_equivalence();
  degree_bounds();
  early_termination();
  best_vs_interpolation(sqrt_rows, minimax_error);

  auto list = [](const std::set<int>& ids) {
    std::string out;
    for (int id : ids)
      out += (out.empty() ? "" : ",") + std::to_string(id);
    return out.empty() ? std::string("none") : out;
  };
  std::printf("%zu of 8 criteria failed (failed: %s; expected to fail: %s)\n", failed.size(), list(failed).c_str(),
              list(expected).c_str());
  return failed == expected ? 0 : 1;
}
