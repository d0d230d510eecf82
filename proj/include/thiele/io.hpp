#ifndef THIELE_IO_HPP
#define THIELE_IO_HPP

#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "thiele/continued_fraction.hpp"
#include "thiele/minimax.hpp"
#include "thiele/sample_set.hpp"

namespace thiele {

/// Malformed input; the message carries source name and line number.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& source, std::size_t line, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

inline bool parse_double(std::string_view s, double& out) {
  s = trim(s);
  if (!s.empty() && s.front() == '+')
    s.remove_prefix(1);
  if (s.empty())
    return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

} // namespace detail

/// Reads samples from CSV text with header `x,f`.
inline SampleSet read_samples_csv(std::istream& in, const std::string& source = "<input>") {
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line))
    throw parse_error(source, 1, "missing header `x,f`");
  ++lineno;
  {
    std::string_view h = detail::trim(line);
    if (h.size() >= 3 && static_cast<unsigned char>(h[0]) == 0xEF)
      h.remove_prefix(3);  // UTF-8 BOM
    const auto comma = h.find(',');
    if (comma == std::string_view::npos || detail::trim(h.substr(0, comma)) != "x" ||
        detail::trim(h.substr(comma + 1)) != "f")
      throw parse_error(source, lineno, "expected header `x,f`");
  }
  std::vector<double> xs, fs;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view row = detail::trim(line);
    if (row.empty())
      continue;
    const auto comma = row.find(',');
    if (comma == std::string_view::npos)
      throw parse_error(source, lineno, "expected two comma-separated fields");
    double x = 0.0, f = 0.0;
    if (!detail::parse_double(row.substr(0, comma), x) || !detail::parse_double(row.substr(comma + 1), f))
      throw parse_error(source, lineno, "malformed number in row `" + std::string(row) + "`");
    if (!std::isfinite(x) || !std::isfinite(f))
      throw parse_error(source, lineno, "non-finite value");
    xs.push_back(x);
    fs.push_back(f);
  }
  if (xs.empty())
    throw parse_error(source, lineno, "no samples");
  try {
    return SampleSet(std::move(xs), std::move(fs));
  } catch (const std::invalid_argument& e) {
    throw parse_error(source, lineno, e.what());
  }
}

inline SampleSet read_samples_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open " + path);
  return read_samples_csv(in, path);
}

inline void write_samples_csv(std::ostream& out, const SampleSet& s) {
  out << "x,f\n";
  char buf[64];
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto r = std::to_chars(buf, buf + sizeof buf, s.x(i));
    *r.ptr++ = ',';
    r = std::to_chars(r.ptr, buf + sizeof buf, s.f(i));
    out << std::string_view(buf, static_cast<std::size_t>(r.ptr - buf)) << '\n';
  }
}

/// Shortest round-trip decimal, with `inf`/`-inf`/`nan` for non-finite values.
inline std::string format_double(double v) {
  if (std::isnan(v))
    return "nan";
  if (std::isinf(v))
    return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

inline nlohmann::json to_json(const ContinuedFraction& cf) {
  return nlohmann::json{{"a", std::vector<double>(cf.coefficients().begin(), cf.coefficients().end())},
                        {"z", std::vector<double>(cf.nodes().begin(), cf.nodes().end())}};
}

inline ContinuedFraction fraction_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("z"))
    throw std::invalid_argument("fraction document needs arrays \"a\" and \"z\"");
  auto read = [](const nlohmann::json& arr, const char* name) {
    if (!arr.is_array())
      throw std::invalid_argument(std::string("fraction document: \"") + name + "\" is not an array");
    std::vector<double> v;
    for (const auto& e : arr) {
      if (!e.is_number())
        throw std::invalid_argument(std::string("fraction document: non-numeric entry in \"") + name + "\"");
      v.push_back(e.get<double>());
    }
    return v;
  };
  return ContinuedFraction(read(j.at("a"), "a"), read(j.at("z"), "z"));
}

inline void write_fraction(const std::string& path, const ContinuedFraction& cf) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot write " + path);
  out << to_json(cf).dump(2) << '\n';
}

inline ContinuedFraction read_fraction(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open " + path);
  try {
    return fraction_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(path + ": malformed fraction document: " + e.what());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

inline nlohmann::json to_json(const ExtremaReport& r) {
  return nlohmann::json{{"locations", r.locations},
                        {"signed_residuals", r.signed_residuals},
                        {"leveled_error", r.leveled_error},
                        {"level_ratio", r.level_ratio}};
}

/// Fraction document extended with the iteration summary and trace.
inline nlohmann::json to_json(const BrasilResult& r) {
  nlohmann::json j = to_json(r.fraction);
  j["iterations"] = r.iterations;
  j["converged"] = r.converged;
  j["degenerate"] = r.degenerate;
  j["final_report"] = to_json(r.final_report);
  auto& trace = j["trace"] = nlohmann::json::array();
  for (const auto& t : r.trace)
    trace.push_back({{"level_ratio", t.level_ratio}, {"leveled_error", t.leveled_error}, {"step", t.step}});
  return j;
}

} // namespace thiele

#endif // THIELE_IO_HPP
