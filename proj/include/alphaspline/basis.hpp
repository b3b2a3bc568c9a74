#pragma once

// Rational B-spline bases over a knot vector: all-function evaluation via a
// span-local triangle, single-function evaluation, endpoint derivatives,
// the Bernstein special case, and the conjugate symmetry partner.

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "alphaspline/alpha.hpp"
#include "alphaspline/knots.hpp"

namespace alphaspline {

/// A basis family: knot vector, degree k >= 0, and shape value.  The family
/// has n + 1 = m - k functions B_0..B_n, so m >= k + 1 is required.
class BasisSpec {
 public:
  BasisSpec(KnotVector knots, int degree, Alpha alpha)
      : knots_(std::move(knots)), degree_(degree), alpha_(alpha) {
    if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
    if (knots_.max_index() - degree - 1 < 0)
      throw std::invalid_argument("knot vector too short for degree " +
                                  std::to_string(degree));
  }

  const KnotVector& knots() const noexcept { return knots_; }
  int degree() const noexcept { return degree_; }
  Alpha alpha() const noexcept { return alpha_; }

  /// Largest function index n = m - k - 1.
  int last_index() const noexcept { return knots_.max_index() - degree_ - 1; }

  /// Number of basis functions n + 1.
  int size() const noexcept { return last_index() + 1; }

 private:
  KnotVector knots_;
  int degree_;
  Alpha alpha_;
};

/// Values of the k + 1 consecutive basis functions that can be nonzero on
/// one span.  values[s] is B_{first_index + s}; formal indices outside
/// [0, n] (possible near the ends of a vector that is not open) hold 0.
struct BasisValues {
  int span = 0;         ///< span index j with t_j <= x < t_{j+1}
  int first_index = 0;  ///< j - k
  std::vector<double> values;

  /// Value of B_i, zero when i falls outside the active window.
  double value_of(int i) const noexcept {
    const int s = i - first_index;
    if (s < 0 || s >= static_cast<int>(values.size())) return 0.0;
    return values[static_cast<std::size_t>(s)];
  }
};

/// Evaluates every basis function that can be nonzero at x in one pass.
///
/// Works bottom-up inside the span [t_j, t_{j+1}) found for x.  Every weight
/// needed by the triangle has t_i <= t_j <= x < t_{j+1} <= t_{i+r}, so its
/// span is provably nonempty and the raw closed-span ramp applies; at
/// x == t_m the last-span convention turns those weights into exact ones,
/// which realizes the left-limit extension of the basis at the right end of
/// the domain.  Terms whose partner value is zero are skipped, so products
/// with vanished sub-bases are exactly zero and no out-of-range knot is
/// ever touched.  Throws std::domain_error for x outside [t_0, t_m].
inline BasisValues eval_basis_all(const BasisSpec& spec, double x) {
  const auto& t = spec.knots().nodes();
  const Alpha alpha = spec.alpha();
  const int k = spec.degree();
  const int m = spec.knots().max_index();
  const int j = spec.knots().find_span(x);

  BasisValues out;
  out.span = j;
  out.first_index = j - k;
  out.values.assign(static_cast<std::size_t>(k) + 1, 0.0);
  auto& a = out.values;
  a[0] = 1.0;
  for (int r = 1; r <= k; ++r) {
    // in: a[s] = B_{j-r+1+s} of degree r-1; out: a[s] = B_{j-r+s} of degree r
    for (int s = r; s >= 0; --s) {
      const int i = j - r + s;
      const double left = (s >= 1) ? a[static_cast<std::size_t>(s - 1)] : 0.0;
      const double right = (s <= r - 1) ? a[static_cast<std::size_t>(s)] : 0.0;
      if (i < 0 || i > m - 1 - r) {
        // no basis function carries this formal index
        a[static_cast<std::size_t>(s)] = 0.0;
        continue;
      }
      double acc = 0.0;
      if (left != 0.0)
        acc += detail::closed_weight(alpha, x, t[static_cast<std::size_t>(i)],
                                     t[static_cast<std::size_t>(i + r)]) *
               left;
      if (right != 0.0)
        acc += (1.0 - detail::closed_weight(
                          alpha, x, t[static_cast<std::size_t>(i + 1)],
                          t[static_cast<std::size_t>(i + 1 + r)])) *
               right;
      a[static_cast<std::size_t>(s)] = acc;
    }
  }
  return out;
}

/// Value of the single function B_i at x; zero whenever x lies outside the
/// active window of the span (local support).  Throws std::out_of_range for
/// i outside [0, n] and std::domain_error for x outside [t_0, t_m].
inline double eval_basis_single(const BasisSpec& spec, int i, double x) {
  if (i < 0 || i > spec.last_index())
    throw std::out_of_range("basis index outside [0, n]");
  return eval_basis_all(spec, x).value_of(i);
}

/// One-sided derivatives of the whole family at the two ends of the domain
/// of an open knot vector.  Only the two outermost functions have nonzero
/// limits:
///   at t_0+:  B_0' = -k alpha / ((alpha - 1)(t_{k+1} - t_0)) = -B_1'
///   at t_m-:  B_n' =  k (alpha - 1) / (alpha (t_m - t_n))    = -B_{n-1}'
/// with classical limits -+ k / (t_{k+1} - t_0) and +- k / (t_m - t_n).
struct EndpointDerivatives {
  std::vector<double> at_start;  ///< d/dx B_i at t_0+, i = 0..n
  std::vector<double> at_end;    ///< d/dx B_i at t_m-, i = 0..n
};

inline EndpointDerivatives endpoint_derivatives(const BasisSpec& spec) {
  const int k = spec.degree();
  const int n = spec.last_index();
  if (!spec.knots().classify(k).open)
    throw std::domain_error("endpoint derivatives need an open knot vector");
  const auto& t = spec.knots().nodes();
  const double lo_len = t[static_cast<std::size_t>(k + 1)] - t[0];
  const double hi_len = t.back() - t[static_cast<std::size_t>(n)];
  if (!(lo_len > 0.0) || !(hi_len > 0.0))
    throw std::domain_error("end node multiplicity exceeds degree + 1");

  const Alpha alpha = spec.alpha();
  double lo_factor, hi_factor;
  if (alpha.is_classical()) {
    lo_factor = k / lo_len;
    hi_factor = k / hi_len;
  } else {
    const double v = alpha.value();
    lo_factor = k * v / ((v - 1.0) * lo_len);
    hi_factor = k * (v - 1.0) / (v * hi_len);
  }

  EndpointDerivatives d;
  d.at_start.assign(static_cast<std::size_t>(n) + 1, 0.0);
  d.at_end.assign(static_cast<std::size_t>(n) + 1, 0.0);
  d.at_start[0] = -lo_factor;
  if (n >= 1) d.at_start[1] = lo_factor;
  d.at_end[static_cast<std::size_t>(n)] = hi_factor;
  if (n >= 1) d.at_end[static_cast<std::size_t>(n - 1)] = -hi_factor;
  return d;
}

/// Closed form of the basis on a single-span open vector (a repeated k + 1
/// times, then b repeated k + 1 times): the Bernstein family in the warped
/// coordinate w, values C(k,i) w^i (1-w)^{k-i}.  w is the closed-span ramp
/// clamped to [0, 1] outside the span, matching the convention the
/// recurrence uses at the domain ends.
inline std::vector<double> bernstein_closed_form(int degree, Alpha alpha,
                                                 double x, const Span& s) {
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  const double w = x <= s.a   ? 0.0
                   : x >= s.b ? 1.0
                              : detail::closed_weight(alpha, x, s.a, s.b);
  const int k = degree;
  std::vector<double> values(static_cast<std::size_t>(k) + 1);
  double binom = 1.0;
  double wpow = 1.0;
  for (int i = 0; i <= k; ++i) {
    double v = binom * wpow;
    for (int q = 0; q < k - i; ++q) v *= 1.0 - w;
    values[static_cast<std::size_t>(i)] = v;
    binom *= static_cast<double>(k - i) / static_cast<double>(i + 1);
    wpow *= w;
  }
  return values;
}

/// The conjugate-symmetry partner value B_{n-i, k, 1-alpha}(x): on a
/// symmetric knot vector it equals B_{i, k, alpha}(t_0 + t_m - x).  Throws
/// std::domain_error when the knot vector is not symmetric.
inline double symmetry_partner(const BasisSpec& spec, int i, double x) {
  if (i < 0 || i > spec.last_index())
    throw std::out_of_range("basis index outside [0, n]");
  if (!spec.knots().is_symmetric())
    throw std::domain_error("symmetry partner needs a symmetric knot vector");
  BasisSpec partner(spec.knots(), spec.degree(), conjugate(spec.alpha()));
  return eval_basis_single(partner, spec.last_index() - i, x);
}

/// Knot averages xi_i = (t_{i+1} + ... + t_{i+k}) / k for i = 0..n, the
/// collocation abscissae used by the linear-independence check.  On an open
/// vector whose interior nodes are simple these are the two domain ends
/// plus one point inside each nonempty span.  Requires k >= 1.
inline std::vector<double> knot_average_abscissae(const KnotVector& knots,
                                                  int degree) {
  if (degree < 1)
    throw std::invalid_argument("knot averages need degree >= 1");
  const int n = knots.max_index() - degree - 1;
  if (n < 0) throw std::invalid_argument("knot vector too short for degree");
  std::vector<double> xi(static_cast<std::size_t>(n) + 1, 0.0);
  for (int i = 0; i <= n; ++i) {
    double acc = 0.0;
    for (int q = 1; q <= degree; ++q) acc += knots[i + q];
    xi[static_cast<std::size_t>(i)] = acc / degree;
  }
  return xi;
}

}  // namespace alphaspline
