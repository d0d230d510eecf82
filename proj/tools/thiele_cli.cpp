// Command-line front end: greedy Thiele interpolation of CSV data, evaluation
// of stored fractions, and the interpolation / best-approximation experiments.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "thiele/thiele.hpp"

namespace {

using namespace thiele;

struct InterpolateOpts {
  std::string input;
  std::string output;
  double tol = kDefaultTolerance;
  std::size_t max_terms = 0;  // 0: unlimited
};

struct EvalOpts {
  std::string cfrac;
  std::string points;
  std::string grid;
  std::string output;
};

struct SampleOpts {
  std::string function;
  std::string grid;
  std::string output;
};

struct ExperimentOpts {
  std::string name;
  std::optional<std::size_t> nmax;
  std::optional<double> smax;
  std::optional<double> t;
  std::optional<double> tol;
  std::optional<std::size_t> max_iter;
  std::size_t grid_size = 100000;
  unsigned threads = 0;
  bool no_timing = false;
  std::string out;
};

// Output file, or stdout when the path is empty.
class Sink {
public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_)
        throw std::runtime_error("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
  std::ofstream file_;
};

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ','))
    parts.push_back(item);
  double a = 0.0, b = 0.0, m = 0.0;
  if (parts.size() != 3 || !detail::parse_double(parts[0], a) || !detail::parse_double(parts[1], b) ||
      !detail::parse_double(parts[2], m))
    throw std::invalid_argument("grid must be `a,b,m`, got `" + spec + "`");
  if (!(a < b) || m < 2 || m != static_cast<double>(static_cast<std::size_t>(m)))
    throw std::invalid_argument("grid needs a < b and an integer m >= 2");
  return uniform_grid(a, b, static_cast<std::size_t>(m));
}

// Query points: a CSV whose first column is x (header `x` or `x,f`).
std::vector<double> read_points(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open " + path);
  std::string line;
  std::size_t lineno = 0;
  std::vector<double> xs;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view row = detail::trim(line);
    if (row.empty())
      continue;
    const std::string_view first = row.substr(0, row.find(','));
    if (lineno == 1 && detail::trim(first) == "x")
      continue;
    double x = 0.0;
    if (!detail::parse_double(first, x))
      throw parse_error(path, lineno, "malformed abscissa `" + std::string(first) + "`");
    xs.push_back(x);
  }
  return xs;
}

int cmd_interpolate(const InterpolateOpts& o) {
  const SampleSet samples = read_samples_csv(o.input);
  std::optional<std::size_t> cap;
  if (o.max_terms)
    cap = o.max_terms;
  const GreedyResult g = thiele_greedy(samples, o.tol, cap);
  if (!o.output.empty())
    write_fraction(o.output, g.fraction);
  else
    std::cout << to_json(g.fraction).dump(2) << '\n';

  const ResidualReport rr = residual_report(g.fraction, samples);
  std::ostream& log = o.output.empty() ? std::cerr : std::cout;
  log << "points_used " << g.points_used << '\n'
      << "termination " << to_string(g.termination) << '\n'
      << "final_max_residual " << format_double(g.final_max_residual) << '\n'
      << "residual_2norm " << format_double(rr.norm2) << '\n'
      << "residual_maxnorm " << format_double(rr.norm_max) << '\n';
  return 0;
}

int cmd_eval(const EvalOpts& o) {
  const ContinuedFraction cf = read_fraction(o.cfrac);
  const std::vector<double> xs = o.points.empty() ? parse_grid(o.grid) : read_points(o.points);
  Sink sink(o.output);
  std::ostream& out = sink.stream();
  out << "x,C\n";
  for (double x : xs)
    out << format_double(x) << ',' << format_double(eval_backward(cf, x)) << '\n';
  return 0;
}

int cmd_sample(const SampleOpts& o) {
  const BuiltinInfo& fn = builtin(o.function);
  const std::vector<double> xs = o.grid.empty() ? uniform_grid(fn.lo, fn.hi, 100) : parse_grid(o.grid);
  const SampleSet s = SampleSet::from_function(xs, [&](double x) { return evaluate(fn.id, x); });
  Sink sink(o.output);
  write_samples_csv(sink.stream(), s);
  return 0;
}

void print_minimax(const char* label, const MinimaxExperiment& e) {
  const auto& r = e.result;
  std::cout << "experiment " << label << '\n'
            << "initial_points_used " << e.initial_points_used << '\n'
            << "iterations " << r.iterations << '\n'
            << "converged " << (r.converged ? "true" : "false") << '\n'
            << "degenerate " << (r.degenerate ? "true" : "false") << '\n'
            << "leveled_error " << format_double(r.final_report.leveled_error) << '\n'
            << "level_ratio " << format_double(r.final_report.level_ratio) << '\n'
            << "extrema " << e.check.count << '\n'
            << "alternating " << (e.check.alternating ? "true" : "false") << '\n'
            << "runtime_ms " << format_double(e.runtime_ms) << '\n';
}

int cmd_experiment(const ExperimentOpts& o) {
  if (o.name == "newman_abs" || o.name == "newman_sqrt") {
    SweepConfig cfg;
    cfg.n_max = o.nmax.value_or(0);
    cfg.grid_size = o.grid_size;
    cfg.threads = o.threads;
    const auto rows = o.name == "newman_abs" ? run_newman_abs(cfg) : run_newman_sqrt(cfg);
    Sink sink(o.out);
    write_rows_csv(sink.stream(), rows, !o.no_timing);
    return 0;
  }
  if (o.name == "sin_minimax" || o.name == "sqrt_minimax") {
    MinimaxOverrides ov{o.nmax, o.smax, o.t, o.tol, o.max_iter};
    const MinimaxExperiment e = o.name == "sin_minimax" ? run_sin_minimax(ov) : run_sqrt_minimax(ov);
    print_minimax(o.name.c_str(), e);
    if (!o.out.empty()) {
      std::ofstream out(o.out);
      if (!out)
        throw std::runtime_error("cannot write " + o.out);
      out << to_json(e.result).dump(2) << '\n';
    }
    return e.result.converged ? 0 : 2;
  }
  throw std::invalid_argument("unknown experiment `" + o.name + "`");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Greedy Thiele continued-fraction interpolation and best rational approximation"};
  app.require_subcommand(1);

  InterpolateOpts io;
  auto* interp = app.add_subcommand("interpolate", "Build a continued fraction from x,f samples");
  interp->add_option("--input", io.input, "CSV file with header x,f")->required();
  interp->add_option("--tol", io.tol, "Early-termination tolerance")->capture_default_str();
  interp->add_option("--max-terms", io.max_terms, "Maximum number of coefficients (0: unlimited)");
  interp->add_option("--output", io.output, "Fraction document to write (default: stdout)");

  EvalOpts eo;
  auto* eval = app.add_subcommand("eval", "Evaluate a stored continued fraction");
  eval->add_option("--cfrac", eo.cfrac, "Fraction document")->required();
  auto* pts = eval->add_option("--points", eo.points, "CSV of query points (first column x)");
  auto* grid = eval->add_option("--grid", eo.grid, "Uniform grid a,b,m");
  pts->excludes(grid);
  grid->excludes(pts);
  eval->add_option("--out", eo.output, "Output CSV (default: stdout)");

  SampleOpts so;
  auto* sample = app.add_subcommand("sample", "Write x,f samples of a built-in function");
  sample->add_option("function", so.function, "abs_x, sqrt_x, sin20_ratio or cos_exp")->required();
  sample->add_option("--grid", so.grid, "Uniform grid a,b,m (default: function domain, 100 points)");
  sample->add_option("--out", so.output, "Output CSV (default: stdout)");

  ExperimentOpts xo;
  auto* exp = app.add_subcommand("experiment", "Run one of the reference experiments");
  exp->add_option("name", xo.name, "newman_abs, newman_sqrt, sin_minimax or sqrt_minimax")
      ->required()
      ->check(CLI::IsMember({"newman_abs", "newman_sqrt", "sin_minimax", "sqrt_minimax"}));
  exp->add_option("--nmax", xo.nmax, "Largest n of a sweep, or node count of a minimax run");
  exp->add_option("--smax", xo.smax, "Step-size cap");
  exp->add_option("--t", xo.t, "Step-size proportionality factor");
  exp->add_option("--tol", xo.tol, "Level-ratio convergence threshold");
  exp->add_option("--max-iter", xo.max_iter, "Iteration cap");
  exp->add_option("--grid-size", xo.grid_size, "Evaluation grid size for sweeps")->capture_default_str();
  exp->add_option("--threads", xo.threads, "Worker threads for sweeps (0: all cores)");
  exp->add_flag("--no-timing", xo.no_timing, "Write 0 in the runtime_ms column");
  exp->add_option("--out", xo.out, "Output file (CSV table or JSON result)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*interp)
      return cmd_interpolate(io);
    if (*eval) {
      if (eo.points.empty() && eo.grid.empty())
        throw std::invalid_argument("eval needs --points or --grid");
      return cmd_eval(eo);
    }
    if (*sample)
      return cmd_sample(so);
    if (*exp)
      return cmd_experiment(xo);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
