#pragma once

// Spline curves over a control polygon: direct evaluation through the basis,
// the triangular pointwise scheme, endpoint tangents, affine images, and the
// conjugate mirror counterpart on symmetric configurations.

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "alphaspline/basis.hpp"

namespace alphaspline {

/// Cartesian point in dimension N (2 or 3).
template <int N>
struct Point {
  static_assert(N == 2 || N == 3, "curves are planar or spatial");
  std::array<double, N> c{};

  double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

  friend Point operator+(Point a, const Point& b) {
    for (int i = 0; i < N; ++i) a.c[i] += b.c[i];
    return a;
  }
  friend Point operator-(Point a, const Point& b) {
    for (int i = 0; i < N; ++i) a.c[i] -= b.c[i];
    return a;
  }
  friend Point operator*(double s, Point p) {
    for (int i = 0; i < N; ++i) p.c[i] *= s;
    return p;
  }
  friend bool operator==(const Point& a, const Point& b) { return a.c == b.c; }

  double dot(const Point& b) const {
    double acc = 0.0;
    for (int i = 0; i < N; ++i) acc += c[i] * b.c[i];
    return acc;
  }
  double norm() const { return std::sqrt(dot(*this)); }
};

using Point2 = Point<2>;
using Point3 = Point<3>;

/// Affine map p -> L p + shift.
template <int N>
struct AffineMap {
  std::array<std::array<double, N>, N> linear{};
  Point<N> shift{};

  static AffineMap identity() {
    AffineMap map;
    for (int i = 0; i < N; ++i) map.linear[i][i] = 1.0;
    return map;
  }

  static AffineMap translation(const Point<N>& d) {
    AffineMap map = identity();
    map.shift = d;
    return map;
  }

  Point<N> apply(const Point<N>& p) const {
    Point<N> out = shift;
    for (int i = 0; i < N; ++i)
      for (int q = 0; q < N; ++q) out[i] += linear[i][q] * p[q];
    return out;
  }
};

/// Reflection across the perpendicular bisector of the segment [p, q]
/// (a line for N = 2, a plane for N = 3).  Throws std::invalid_argument
/// when p == q, which leaves the bisector undefined.
template <int N>
AffineMap<N> perpendicular_bisector_mirror(const Point<N>& p, const Point<N>& q) {
  Point<N> u = q - p;
  const double len = u.norm();
  if (!(len > 0.0))
    throw std::invalid_argument("bisector mirror needs two distinct points");
  u = (1.0 / len) * u;
  AffineMap<N> map = AffineMap<N>::identity();
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) map.linear[i][j] -= 2.0 * u[i] * u[j];
  const Point<N> mid = 0.5 * (p + q);
  map.shift = 2.0 * mid.dot(u) * u;
  return map;
}

/// A spline curve: basis family plus one control point per basis function.
/// Degree-k curves need n >= k so that every span of the domain carries a
/// full convex window of functions.
template <int N>
class CurveSpec {
 public:
  CurveSpec(BasisSpec basis, std::vector<Point<N>> polygon)
      : basis_(std::move(basis)), polygon_(std::move(polygon)) {
    if (static_cast<int>(polygon_.size()) != basis_.size())
      throw std::invalid_argument(
          "control polygon has " + std::to_string(polygon_.size()) +
          " points but the basis family expects n + 1 = " +
          std::to_string(basis_.size()));
    if (basis_.last_index() < basis_.degree())
      throw std::invalid_argument("curve needs n >= k");
  }

  const BasisSpec& basis() const noexcept { return basis_; }
  const std::vector<Point<N>>& polygon() const noexcept { return polygon_; }

 private:
  BasisSpec basis_;
  std::vector<Point<N>> polygon_;
};

/// Defining sum over the active window: G(x) = sum d_i B_i(x).  On an open
/// vector the window coefficients are a convex combination, so at x = t_0
/// and x = t_m the curve reproduces d_0 and d_n exactly (the coefficients
/// there are exactly one and zero).
template <int N>
Point<N> eval_direct(const CurveSpec<N>& curve, double x) {
  const BasisValues b = eval_basis_all(curve.basis(), x);
  const int n = curve.basis().last_index();
  Point<N> out{};
  for (std::size_t s = 0; s < b.values.size(); ++s) {
    const int i = b.first_index + static_cast<int>(s);
    if (i < 0 || i > n) continue;  // formal window entry without a function
    const double c = b.values[s];
    if (c != 0.0) out = out + c * curve.polygon()[static_cast<std::size_t>(i)];
  }
  return out;
}

/// Triangular pointwise evaluation: starting from the active control points
/// d_{j-k}..d_j, each level r replaces d_i by the convex combination
/// (1 - w_i^{k-r+1}) d_{i-1} + w_i^{k-r+1} d_i, and level k yields G(x).
/// Every weight span in the triangle is nonempty by the same argument as in
/// the basis triangle, and the domain-end conventions carry over, so
/// G(t_0) = d_0 and G(t_m) = d_n hold exactly on open vectors.  On spans
/// where the window is clipped (possible only when the vector is not open)
/// the scheme does not apply and the defining sum is used instead.
template <int N>
Point<N> eval_deboor(const CurveSpec<N>& curve, double x) {
  const BasisSpec& spec = curve.basis();
  const int k = spec.degree();
  const int n = spec.last_index();
  const int j = spec.knots().find_span(x);
  if (j < k || j > n) return eval_direct(curve, x);

  const auto& t = spec.knots().nodes();
  const Alpha alpha = spec.alpha();
  std::array<Point<N>, 32> small;  // avoids allocation for every sane degree
  std::vector<Point<N>> big;
  Point<N>* e = small.data();
  if (k + 1 > static_cast<int>(small.size())) {
    big.resize(static_cast<std::size_t>(k) + 1);
    e = big.data();
  }
  for (int s = 0; s <= k; ++s)
    e[s] = curve.polygon()[static_cast<std::size_t>(j - k + s)];
  for (int r = 1; r <= k; ++r) {
    for (int s = k; s >= r; --s) {
      const int i = j - k + s;
      const double w = detail::closed_weight(
          alpha, x, t[static_cast<std::size_t>(i)],
          t[static_cast<std::size_t>(i + k - r + 1)]);
      e[s] = (1.0 - w) * e[s - 1] + w * e[s];
    }
  }
  return e[k];
}

/// One-sided tangent vectors of the curve at the two ends of an open
/// vector's domain:
///   at t_0+:  k alpha / ((alpha - 1)(t_{k+1} - t_0)) (d_1 - d_0)
///   at t_m-:  k (alpha - 1) / (alpha (t_m - t_n))    (d_n - d_{n-1})
/// (classical factors k / (t_{k+1} - t_0) and k / (t_m - t_n)).
template <int N>
std::pair<Point<N>, Point<N>> endpoint_tangents(const CurveSpec<N>& curve) {
  const EndpointDerivatives d = endpoint_derivatives(curve.basis());
  const int n = curve.basis().last_index();
  Point<N> start{}, end{};
  if (n >= 1) {
    const auto& poly = curve.polygon();
    start = d.at_start[1] * (poly[1] - poly[0]);
    end = d.at_end[static_cast<std::size_t>(n)] *
          (poly[static_cast<std::size_t>(n)] - poly[static_cast<std::size_t>(n - 1)]);
  }
  return {start, end};
}

/// The same curve with every control point moved through an affine map.
/// Evaluating the image curve agrees with mapping evaluations of the
/// original (affine invariance of convex-window evaluation).
template <int N>
CurveSpec<N> affine_image(const CurveSpec<N>& curve, const AffineMap<N>& map) {
  std::vector<Point<N>> moved;
  moved.reserve(curve.polygon().size());
  for (const Point<N>& p : curve.polygon()) moved.push_back(map.apply(p));
  return CurveSpec<N>(curve.basis(), std::move(moved));
}

/// The conjugate-shape counterpart of a mirror-symmetric configuration:
/// same knots and polygon, shape value 1 - alpha.  Preconditions, checked
/// to 1e-12: the knot vector is symmetric and the polygon is its own mirror
/// image across the perpendicular bisector of [d_0, d_n] (d_{n-i} is the
/// reflection of d_i).  The counterpart then traces the reflected curve
/// with the parameter reversed.  Throws std::domain_error on violations.
template <int N>
CurveSpec<N> symmetric_counterpart(const CurveSpec<N>& curve) {
  const BasisSpec& spec = curve.basis();
  if (!spec.knots().is_symmetric())
    throw std::domain_error("counterpart needs a symmetric knot vector");
  const auto& poly = curve.polygon();
  const std::size_t n1 = poly.size();
  const AffineMap<N> mirror =
      perpendicular_bisector_mirror(poly.front(), poly.back());
  double scale = 1.0;
  for (const Point<N>& p : poly)
    for (int i = 0; i < N; ++i) scale = std::max(scale, std::abs(p[i]));
  for (std::size_t i = 0; i < n1; ++i) {
    const Point<N> image = mirror.apply(poly[i]);
    const Point<N> want = poly[n1 - 1 - i];
    for (int q = 0; q < N; ++q)
      if (std::abs(image[q] - want[q]) > 1e-12 * scale)
        throw std::domain_error("control polygon is not mirror symmetric");
  }
  return CurveSpec<N>(BasisSpec(spec.knots(), spec.degree(), conjugate(spec.alpha())),
                      poly);
}

}  // namespace alphaspline
