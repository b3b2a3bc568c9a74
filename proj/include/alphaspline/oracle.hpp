#pragma once

// Exact-rational reference evaluation: the parametrization and the naive
// top-down basis recurrence computed without rounding.  This is the ground
// truth the floating-point evaluators are tested against; it is deliberately
// independent of the span-local triangle (different recursion shape,
// different arithmetic).

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace alphaspline {

using Rational = boost::multiprecision::cpp_rational;

/// Exact parametrization with the same support rule as phi: zero outside
/// [a, b) and zero on an empty span, alpha (x - a) / (x + (alpha - 1) b -
/// alpha a) inside.  alpha must satisfy alpha < 0 or alpha > 1 exactly.
inline Rational oracle_phi(const Rational& alpha, const Rational& x,
                           const Rational& a, const Rational& b) {
  if (alpha >= 0 && alpha <= 1)
    throw std::invalid_argument("oracle alpha must satisfy alpha < 0 or alpha > 1");
  if (!(a < b) || x < a || x >= b) return Rational(0);
  return alpha * (x - a) / (x + (alpha - 1) * b - alpha * a);
}

namespace detail {

struct OracleContext {
  const std::vector<Rational>& t;
  const Rational& alpha;
  const Rational& x;
  std::map<std::pair<int, int>, Rational> memo;  // keyed on (i, degree)

  Rational basis(int i, int k) {
    if (k == 0)
      return (t[static_cast<std::size_t>(i)] <= x &&
              x < t[static_cast<std::size_t>(i + 1)])
                 ? Rational(1)
                 : Rational(0);
    const auto key = std::make_pair(i, k);
    if (const auto it = memo.find(key); it != memo.end()) return it->second;
    const Rational w1 = oracle_phi_nocheck(t[static_cast<std::size_t>(i)],
                                           t[static_cast<std::size_t>(i + k)]);
    const Rational w2 =
        oracle_phi_nocheck(t[static_cast<std::size_t>(i + 1)],
                           t[static_cast<std::size_t>(i + 1 + k)]);
    Rational v = (1 - w2) * basis(i + 1, k - 1);
    if (w1 != 0) v += w1 * basis(i, k - 1);  // zero weight kills the subterm exactly
    memo.emplace(key, v);
    return v;
  }

  Rational oracle_phi_nocheck(const Rational& a, const Rational& b) const {
    if (!(a < b) || x < a || x >= b) return Rational(0);
    return alpha * (x - a) / (x + (alpha - 1) * b - alpha * a);
  }
};

}  // namespace detail

/// Exact value of B_{i,k,alpha}(x) by the naive top-down recurrence with
/// memoization.  Guarded to small inputs (k <= 6 and at most 17 nodes); the
/// floating evaluators are the production path, this is a test instrument.
/// Note the recurrence is used verbatim, so x equal to the last node gives
/// zero (no left-limit extension); probe below t_m when comparing against
/// the floating path's right-end convention.
inline Rational oracle_basis(const std::vector<Rational>& knots, int degree,
                             const Rational& alpha, int i, const Rational& x) {
  const int m = static_cast<int>(knots.size()) - 1;
  if (degree < 0 || degree > 6)
    throw std::invalid_argument("oracle degree must lie in [0, 6]");
  if (m + 1 > 17) throw std::invalid_argument("oracle limited to 17 nodes");
  if (i < 0 || i > m - degree - 1)
    throw std::out_of_range("oracle basis index outside [0, n]");
  if (alpha >= 0 && alpha <= 1)
    throw std::invalid_argument("oracle alpha must satisfy alpha < 0 or alpha > 1");
  for (std::size_t q = 1; q < knots.size(); ++q)
    if (knots[q] < knots[q - 1])
      throw std::invalid_argument("oracle knot vector must be nondecreasing");
  detail::OracleContext ctx{knots, alpha, x, {}};
  return ctx.basis(i, degree);
}

/// Parses "p" or "p/q" into an exact rational; nullopt on malformed text.
inline std::optional<Rational> parse_rational(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t'))
    text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t'))
    text.remove_suffix(1);
  if (text.empty()) return std::nullopt;
  auto parse_int =
      [](std::string_view s) -> std::optional<boost::multiprecision::cpp_int> {
    if (s.empty()) return std::nullopt;
    bool neg = false;
    if (s.front() == '+' || s.front() == '-') {
      neg = s.front() == '-';
      s.remove_prefix(1);
    }
    if (s.empty()) return std::nullopt;
    boost::multiprecision::cpp_int v = 0;
    for (char ch : s) {
      if (ch < '0' || ch > '9') return std::nullopt;
      v = v * 10 + (ch - '0');
    }
    return neg ? -v : v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    const auto v = parse_int(text);
    if (!v) return std::nullopt;
    return Rational(*v);
  }
  const auto num = parse_int(text.substr(0, slash));
  const auto den = parse_int(text.substr(slash + 1));
  if (!num || !den || *den == 0) return std::nullopt;
  return Rational(*num, *den);
}

/// Canonical "p/q" form (q > 0, reduced), "p" when the value is integral.
inline std::string rational_to_string(const Rational& v) {
  std::string s = numerator(v).str();
  if (denominator(v) != 1) s += "/" + denominator(v).str();
  return s;
}

/// One line of a golden probe file: "i k alpha x value" with the three
/// numeric fields in "p/q" form.
struct GoldenProbe {
  int index = 0;
  int degree = 0;
  Rational alpha;
  Rational x;
  Rational value;
};

/// Parses one golden probe line; nullopt on malformed input.
inline std::optional<GoldenProbe> parse_golden_probe(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
    if (pos > start) fields.push_back(line.substr(start, pos - start));
  }
  if (fields.size() != 5) return std::nullopt;
  GoldenProbe probe;
  try {
    probe.index = std::stoi(std::string(fields[0]));
    probe.degree = std::stoi(std::string(fields[1]));
  } catch (const std::exception&) {
    return std::nullopt;
  }
  const auto alpha = parse_rational(fields[2]);
  const auto x = parse_rational(fields[3]);
  const auto value = parse_rational(fields[4]);
  if (!alpha || !x || !value) return std::nullopt;
  probe.alpha = *alpha;
  probe.x = *x;
  probe.value = *value;
  return probe;
}

}  // namespace alphaspline
