#ifndef THIELE_EXACT_ORACLE_HPP
#define THIELE_EXACT_ORACLE_HPP

// Exact rational-arithmetic reference for small continued fractions. Used to
// produce ground truth for tests; it shares no code with the floating-point
// evaluation and construction routines.

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace thiele::exact {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline constexpr std::size_t kMaxOrder = 16;

/// Exact value of a finite double.
inline Rational from_double(double v) {
  if (!std::isfinite(v))
    throw std::invalid_argument("exact::from_double: value is not finite");
  if (v == 0.0)
    return Rational(0);
  int e = 0;
  const double m = std::frexp(v, &e);  // v = m * 2^e, 0.5 <= |m| < 1
  const auto mant = static_cast<long long>(std::ldexp(m, 53));
  e -= 53;
  Integer num(mant);
  Integer den(1);
  if (e >= 0)
    num <<= e;
  else
    den <<= -e;
  return Rational(num, den);
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// Dense polynomial, ascending powers, no trailing zeros (zero polynomial is empty).
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Polynomial constant(const Rational& v) { return Polynomial(std::vector<Rational>{v}); }
  /// x - root
  static Polynomial linear(const Rational& root) { return Polynomial(std::vector<Rational>{-root, Rational(1)}); }

  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  [[nodiscard]] const std::vector<Rational>& coefficients() const { return c_; }
  [[nodiscard]] const Rational& leading() const { return c_.back(); }

  [[nodiscard]] Rational operator()(const Rational& x) const {
    Rational r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      r = r * x + *it;
    return r;
  }

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    std::vector<Rational> r(std::max(p.c_.size(), q.c_.size()), Rational(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i)
      r[i] += p.c_[i];
    for (std::size_t i = 0; i < q.c_.size(); ++i)
      r[i] += q.c_[i];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + q * Rational(-1); }
  friend Polynomial operator*(const Polynomial& p, const Rational& s) {
    std::vector<Rational> r(p.c_);
    for (auto& v : r)
      v *= s;
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero())
      return {};
    std::vector<Rational> r(p.c_.size() + q.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i)
      for (std::size_t j = 0; j < q.c_.size(); ++j)
        r[i + j] += p.c_[i] * q.c_[j];
    return Polynomial(std::move(r));
  }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Quotient and remainder of p / d.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& p, const Polynomial& d) {
    if (d.is_zero())
      throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem(p.c_);
    if (p.degree() < d.degree())
      return {Polynomial(), p};
    std::vector<Rational> quo(static_cast<std::size_t>(p.degree() - d.degree() + 1), Rational(0));
    for (int k = p.degree() - d.degree(); k >= 0; --k) {
      const Rational coef = rem[static_cast<std::size_t>(k + d.degree())] / d.leading();
      quo[static_cast<std::size_t>(k)] = coef;
      for (int j = 0; j <= d.degree(); ++j)
        rem[static_cast<std::size_t>(k + j)] -= coef * d.c_[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(d.degree()));
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
  }

  [[nodiscard]] Polynomial monic() const { return is_zero() ? *this : *this * (Rational(1) / leading()); }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0)
      c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Monic greatest common divisor.
inline Polynomial gcd(Polynomial p, Polynomial q) {
  while (!q.is_zero()) {
    auto r = divmod(p, q).second;
    p = std::move(q);
    q = std::move(r);
  }
  return p.monic();
}

struct RationalFunction {
  Polynomial numerator;
  Polynomial denominator;
};

/// Common factor of numerator and denominator and the reduced function.
struct Reduction {
  Polynomial common_factor;  // monic; 1 when already irreducible
  RationalFunction reduced;
};

inline Reduction reduce(const RationalFunction& rf) {
  if (rf.denominator.is_zero())
    throw std::domain_error("rational function with zero denominator");
  Polynomial g = gcd(rf.numerator, rf.denominator);
  if (g.is_zero())
    g = Polynomial::constant(Rational(1));
  return {g, {divmod(rf.numerator, g).first, divmod(rf.denominator, g).first}};
}

/// Continued fraction with exact coefficients. nodes holds z_0..z_{n-1}, and
/// may carry the terminal node z_n.
struct ContinuedFraction {
  std::vector<Rational> coefficients;
  std::vector<Rational> nodes;

  [[nodiscard]] std::size_t order() const { return coefficients.size() - 1; }
};

/// Numerator and denominator polynomials of every convergent, from the
/// three-term recurrence A_k = a_k A_{k-1} + (x - z_{k-1}) A_{k-2}.
/// Entry k + 2 holds (A_k, B_k) for k = -2..n.
inline std::vector<RationalFunction> convergent_polynomials(const ContinuedFraction& cf) {
  if (cf.coefficients.empty())
    throw std::invalid_argument("exact continued fraction has no coefficients");
  if (cf.order() > kMaxOrder)
    throw std::length_error("exact continued fraction exceeds the order guard");
  if (cf.nodes.size() < cf.order())
    throw std::invalid_argument("exact continued fraction has too few nodes");
  std::vector<RationalFunction> out;
  out.push_back({Polynomial(), Polynomial::constant(Rational(1))});
  out.push_back({Polynomial::constant(Rational(1)), Polynomial()});
  out.push_back({Polynomial::constant(cf.coefficients[0]), Polynomial::constant(Rational(1))});
  for (std::size_t k = 1; k <= cf.order(); ++k) {
    const auto& p1 = out[k + 1];
    const auto& p2 = out[k];
    const Polynomial lin = Polynomial::linear(cf.nodes[k - 1]);
    const Rational& a = cf.coefficients[k];
    out.push_back({p1.numerator * a + lin * p2.numerator, p1.denominator * a + lin * p2.denominator});
  }
  return out;
}

/// A_n and B_n of the full fraction.
inline RationalFunction cfrac_to_rational_exact(const ContinuedFraction& cf) {
  return convergent_polynomials(cf).back();
}

/// Backward evaluation of the tail starting at coefficient i. Division by zero
/// yields nullopt, which stands for the point at infinity; (x - z)/infinity = 0.
inline std::optional<Rational> eval_tail(const ContinuedFraction& cf, std::size_t i, const Rational& x) {
  if (i > cf.order())
    throw std::out_of_range("exact::eval_tail: index out of range");
  std::optional<Rational> res = Rational(0);
  for (std::size_t k = cf.order(); k > i; --k) {
    if (!res) {
      res = Rational(0);  // (x - z)/inf
      continue;
    }
    const Rational den = cf.coefficients[k] + *res;
    if (den == 0) {
      res = std::nullopt;
      continue;
    }
    res = (x - cf.nodes[k - 1]) / den;
  }
  if (!res)
    return std::nullopt;
  return cf.coefficients[i] + *res;
}

struct ThieleTable {
  ContinuedFraction fraction;
  /// table[i][k] = phi_i[x_0, ..., x_{i-1}, x_k] for k >= i (nullopt = infinite).
  std::vector<std::vector<std::optional<Rational>>> table;
  /// First index whose inverse difference phi_i[x_0..x_i] is infinite, if any;
  /// the fraction then stops before it.
  std::optional<std::size_t> breakdown;
};

/// Inverse differences in the given node order (no reordering).
inline ThieleTable thiele_exact(const std::vector<Rational>& xs, const std::vector<Rational>& fs) {
  if (xs.size() != fs.size() || xs.empty())
    throw std::invalid_argument("thiele_exact: need matching, non-empty abscissae and values");
  if (xs.size() > kMaxOrder + 1)
    throw std::length_error("thiele_exact: too many points for exact evaluation");
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (xs[i] == xs[j])
        throw std::invalid_argument("thiele_exact: duplicate abscissa");

  const std::size_t m = xs.size();
  ThieleTable out;
  out.table.emplace_back(fs.begin(), fs.end());
  out.fraction.coefficients.push_back(fs[0]);
  out.fraction.nodes.push_back(xs[0]);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    const auto& prev = out.table[i];
    std::vector<std::optional<Rational>> next(m);
    const Rational& a = *prev[i];
    for (std::size_t k = i + 1; k < m; ++k) {
      if (!prev[k]) {
        next[k] = Rational(0);
        continue;
      }
      const Rational den = *prev[k] - a;
      if (den == 0)
        next[k] = std::nullopt;
      else
        next[k] = (xs[k] - xs[i]) / den;
    }
    out.table.push_back(std::move(next));
    if (!out.table.back()[i + 1]) {
      out.breakdown = i + 1;
      break;
    }
    out.fraction.coefficients.push_back(*out.table.back()[i + 1]);
    out.fraction.nodes.push_back(xs[i + 1]);
  }
  return out;
}

/// Linearized residual R_i(x) = f(x) B_i(x) - A_i(x), for i = -2..n.
inline Rational residual_exact(const std::vector<RationalFunction>& convergents, int i, const Rational& x,
                               const Rational& fx) {
  const auto idx = static_cast<std::size_t>(i + 2);
  if (i < -2 || idx >= convergents.size())
    throw std::out_of_range("residual_exact: index out of range");
  const auto& c = convergents[idx];
  return fx * c.denominator(x) - c.numerator(x);
}

/// R_i at each (x_k, f_k).
inline std::vector<Rational> residual_poly_exact(const ContinuedFraction& cf, int i, const std::vector<Rational>& xs,
                                                 const std::vector<Rational>& fs) {
  const auto conv = convergent_polynomials(cf);
  std::vector<Rational> out;
  out.reserve(xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k)
    out.push_back(residual_exact(conv, i, xs[k], fs.at(k)));
  return out;
}

} // namespace thiele::exact

#endif // THIELE_EXACT_ORACLE_HPP
