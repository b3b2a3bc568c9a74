#pragma once

// Uniform sampling of parametrizations, basis families, and curves into a
// tabular series ready for CSV or SVG emission.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "alphaspline/basis.hpp"
#include "alphaspline/curve.hpp"

namespace alphaspline {

/// A sampled table: shared abscissae plus one named value column per trace.
/// Invariants: xs strictly increasing, every column as long as xs.
struct SampleSeries {
  struct Column {
    std::string name;
    std::vector<double> values;
  };

  std::vector<double> xs;
  std::vector<Column> columns;
};

namespace detail {

/// n uniform points covering [lo, hi] with both ends included exactly.
inline std::vector<double> uniform_points(double lo, double hi, int n) {
  if (n < 2) throw std::invalid_argument("sampling needs at least two points");
  if (!(lo < hi)) throw std::invalid_argument("sampling needs lo < hi");
  std::vector<double> xs(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q)
    xs[static_cast<std::size_t>(q)] = lo + (hi - lo) * q / (n - 1);
  xs.front() = lo;
  xs.back() = hi;
  for (std::size_t q = 1; q < xs.size(); ++q)
    if (!(xs[q - 1] < xs[q]))
      throw std::invalid_argument("sample grid too dense for this interval");
  return xs;
}

}  // namespace detail

/// Samples phi (support rule included: zero off [a, b), in particular at
/// and beyond b) on n uniform points covering [lo, hi].
inline SampleSeries sample_phi(Alpha alpha, const Span& span, double lo,
                               double hi, int n) {
  SampleSeries series;
  series.xs = detail::uniform_points(lo, hi, n);
  SampleSeries::Column col;
  col.name = "phi";
  col.values.reserve(series.xs.size());
  for (double x : series.xs) col.values.push_back(phi(alpha, x, span));
  series.columns.push_back(std::move(col));
  return series;
}

/// Samples every basis function on n uniform points covering [t_0, t_m].
/// The final sample sits at t_m and uses the left-limit convention of
/// eval_basis_all.  Columns are named B0..Bn.
inline SampleSeries sample_basis(const BasisSpec& spec, int n) {
  SampleSeries series;
  series.xs = detail::uniform_points(spec.knots().front(), spec.knots().back(), n);
  const int count = spec.size();
  series.columns.resize(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    series.columns[static_cast<std::size_t>(i)].name = "B" + std::to_string(i);
    series.columns[static_cast<std::size_t>(i)].values.assign(series.xs.size(), 0.0);
  }
  for (std::size_t q = 0; q < series.xs.size(); ++q) {
    const BasisValues values = eval_basis_all(spec, series.xs[q]);
    for (std::size_t s = 0; s < values.values.size(); ++s) {
      const int i = values.first_index + static_cast<int>(s);
      if (i < 0 || i >= count) continue;
      series.columns[static_cast<std::size_t>(i)].values[q] = values.values[s];
    }
  }
  return series;
}

/// Samples a curve on n uniform parameter values covering [t_0, t_m]; one
/// column per coordinate, named x, y (and z in dimension three).
template <int N>
SampleSeries sample_curve(const CurveSpec<N>& curve, int n) {
  static const char* const kNames[3] = {"x", "y", "z"};
  SampleSeries series;
  series.xs = detail::uniform_points(curve.basis().knots().front(),
                                     curve.basis().knots().back(), n);
  series.columns.resize(N);
  for (int i = 0; i < N; ++i) {
    series.columns[static_cast<std::size_t>(i)].name = kNames[i];
    series.columns[static_cast<std::size_t>(i)].values.reserve(series.xs.size());
  }
  for (double x : series.xs) {
    const Point<N> p = eval_deboor(curve, x);
    for (int i = 0; i < N; ++i)
      series.columns[static_cast<std::size_t>(i)].values.push_back(p[i]);
  }
  return series;
}

/// Appends the columns of src to dst under a name prefix.  Both series must
/// share identical abscissae (same sampling call parameters).
inline void merge_series(SampleSeries& dst, const SampleSeries& src,
                         const std::string& prefix) {
  if (dst.xs.empty()) {
    dst.xs = src.xs;
  } else if (dst.xs != src.xs) {
    throw std::invalid_argument("cannot merge series with different abscissae");
  }
  for (const SampleSeries::Column& col : src.columns) {
    dst.columns.push_back(col);
    dst.columns.back().name = prefix + col.name;
  }
}

}  // namespace alphaspline
