#pragma once

// Homographic span parametrization: the scalar building block that every
// basis and curve evaluation in this library is assembled from.

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace alphaspline {

/// Shape parameter of the homographic parametrization.
///
/// Valid values are the two open rays (-inf, 0) and (1, +inf); everything in
/// [0, 1] is rejected exactly (the denominator of the parametrization would
/// vanish inside a span).  The classical linear parametrization, obtained as
/// the |alpha| -> inf limit, is a first-class value of this type rather than
/// a separate code path at call sites.
class Alpha {
 public:
  /// Finite shape value; throws std::invalid_argument unless v < 0 or v > 1.
  explicit Alpha(double v) : value_(v), classical_(false) {
    if (!std::isfinite(v) || (v >= 0.0 && v <= 1.0))
      throw std::invalid_argument("alpha must be finite with alpha < 0 or alpha > 1");
  }

  /// The |alpha| -> inf limit (linear span parametrization).
  static Alpha classical() noexcept { return Alpha(tag_classical{}); }

  bool is_classical() const noexcept { return classical_; }

  /// Finite value; only meaningful when !is_classical().
  double value() const {
    if (classical_)
      throw std::logic_error("classical alpha has no finite value");
    return value_;
  }

  friend bool operator==(const Alpha& a, const Alpha& b) noexcept {
    if (a.classical_ || b.classical_) return a.classical_ && b.classical_;
    return a.value_ == b.value_;
  }
  friend bool operator!=(const Alpha& a, const Alpha& b) noexcept { return !(a == b); }

  /// Accepts a decimal ("-0.5"), a fraction ("-1/2", "8/7"), or the tokens
  /// "inf" / "classical" (case-insensitive) for the classical value.
  /// Returns std::nullopt on malformed input or a value inside [0, 1].
  static std::optional<Alpha> parse(std::string_view text);

  /// Short printable form: the finite value in shortest round-trip decimal,
  /// or "inf" for the classical value.  Used in legends and file names.
  std::string label() const;

 private:
  struct tag_classical {};
  explicit Alpha(tag_classical) : value_(0.0), classical_(true) {}

  double value_;
  bool classical_;
};

/// Conjugate shape value alpha -> 1 - alpha.  Maps (-inf,0) onto (1,+inf)
/// and back, and fixes the classical value.  Involution.
inline Alpha conjugate(Alpha a) noexcept {
  return a.is_classical() ? a : Alpha(1.0 - a.value());
}

/// Nonempty real interval [a, b), the support of one parametrization.
struct Span {
  double a;
  double b;

  Span(double a_, double b_) : a(a_), b(b_) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
      throw std::invalid_argument("span requires finite bounds with a < b");
  }
};

namespace detail {

/// Raw homographic ramp on the closed span [a, b]: 0 at a, 1 at b, strictly
/// increasing in between; no support rule applied.  Preconditions a < b and
/// a <= x <= b make the denominator provably nonzero.  The denominator is
/// grouped as (x - b) + alpha (b - a) so that x == b yields exactly 1 (the
/// numerator and denominator become the same product) and x == a exactly 0.
inline double closed_weight(Alpha alpha, double x, double a, double b) noexcept {
  if (alpha.is_classical()) return (x - a) / (b - a);
  const double v = alpha.value();
  return v * (x - a) / ((x - b) + v * (b - a));
}

/// Support-rule weight used by the recurrence: zero outside [a, b) and zero
/// on an empty or degenerate span (a >= b), otherwise the ramp above.  The
/// degenerate case makes products of the form weight * subterm vanish
/// exactly, which is what the basis recurrence relies on at repeated knots.
inline double weight(Alpha alpha, double x, double a, double b) noexcept {
  if (!(a < b) || x < a || x >= b) return 0.0;
  return closed_weight(alpha, x, a, b);
}

}  // namespace detail

/// Homographic parametrization of the span: phi(x) = alpha (x - a) / D with
/// D = x + (alpha - 1) b - alpha a on [a, b), and 0 outside the span.
/// Classical value: (x - a) / (b - a) on [a, b), 0 outside.
inline double phi(Alpha alpha, double x, const Span& s) noexcept {
  return detail::weight(alpha, x, s.a, s.b);
}

/// Span-independent barycentric form: the value of phi at x = a + l (b - a)
/// is l alpha / (l + alpha - 1) for every span, i.e. phi depends on position
/// inside the span only.  Defined on the closed parameter range l in [0, 1]
/// (value 1 at l = 1; no support rule).  Throws std::domain_error outside.
inline double phi_barycentric(Alpha alpha, double l) {
  if (!(l >= 0.0 && l <= 1.0))
    throw std::domain_error("barycentric parameter must lie in [0, 1]");
  if (alpha.is_classical()) return l;
  const double v = alpha.value();
  // (l - 1) + v, not l + (v - 1): this association is exact at both ends
  // (l = 0 gives a zero numerator, l = 1 gives v / v = 1).
  return l * v / ((l - 1.0) + v);
}

/// Endpoint sides for one-sided derivative limits of phi.
enum class SpanEnd { a_plus, b_minus, a_minus, b_plus };

/// One-sided derivative limits of phi at the span endpoints:
///   a+: alpha / ((alpha - 1)(b - a))      b-: (alpha - 1) / (alpha (b - a))
///   a-: 0                                 b+: 0
/// Classical value: 1 / (b - a) on both inner sides.
inline double phi_derivative_limit(Alpha alpha, const Span& s, SpanEnd end) noexcept {
  const double len = s.b - s.a;
  switch (end) {
    case SpanEnd::a_plus:
      return alpha.is_classical() ? 1.0 / len
                                  : alpha.value() / ((alpha.value() - 1.0) * len);
    case SpanEnd::b_minus:
      return alpha.is_classical() ? 1.0 / len
                                  : (alpha.value() - 1.0) / (alpha.value() * len);
    case SpanEnd::a_minus:
    case SpanEnd::b_plus:
      return 0.0;
  }
  return 0.0;
}

namespace detail {

/// Parses a decimal or a "p/q" fraction; nullopt on malformed text.
inline std::optional<double> parse_real(std::string_view text) {
  auto parse_plain = [](std::string_view s) -> std::optional<double> {
    double out = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last) return std::nullopt;
    return out;
  };
  // trim surrounding blanks
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (text.empty()) return std::nullopt;
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_plain(text);
  const auto num = parse_plain(text.substr(0, slash));
  const auto den = parse_plain(text.substr(slash + 1));
  if (!num || !den || *den == 0.0) return std::nullopt;
  return *num / *den;
}

inline bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i])))
      return false;
  return true;
}

}  // namespace detail

inline std::optional<Alpha> Alpha::parse(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (detail::iequals(text, "inf") || detail::iequals(text, "classical"))
    return Alpha::classical();
  const auto v = detail::parse_real(text);
  if (!v || !std::isfinite(*v) || (*v >= 0.0 && *v <= 1.0)) return std::nullopt;
  return Alpha(*v);
}

inline std::string Alpha::label() const {
  if (classical_) return "inf";
  char buf[32];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, value_);
    if (std::strtod(buf, nullptr) == value_) break;
  }
  return buf;
}

}  // namespace alphaspline
