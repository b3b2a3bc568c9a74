#pragma once

// Deterministic text emission (CSV, SVG) and the token parsing shared by the
// command line and figure configuration files.  All number formatting goes
// through std::to_chars, so output bytes are locale-independent and stable
// across runs.

#include <algorithm>
#include <array>
#include <charconv>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "alphaspline/alpha.hpp"
#include "alphaspline/sampling.hpp"

namespace alphaspline {

namespace detail {

/// Number -> text with enough digits to round-trip (17 significant digits).
inline std::string format_real(double v) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

/// Shorter form for SVG coordinates (sub-pixel exactness is not needed and
/// full precision would triple the file size).
inline std::string format_coord(double v) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 8);
  return std::string(buf, res.ptr);
}

inline std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  return parts;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Parses a comma-separated list of reals; each token may be a decimal or a
/// "p/q" fraction.  Throws std::invalid_argument naming the bad token.
inline std::vector<double> parse_number_list(std::string_view text) {
  std::vector<double> out;
  for (std::string_view token : detail::split(text, ',')) {
    token = detail::trim(token);
    const auto v = detail::parse_real(token);
    if (!v)
      throw std::invalid_argument("malformed number '" + std::string(token) + "'");
    out.push_back(*v);
  }
  if (out.empty()) throw std::invalid_argument("empty number list");
  return out;
}

/// Rows of points with a uniform dimension of 2 or 3.
struct ParsedPoints {
  int dim = 0;
  std::vector<std::array<double, 3>> rows;  // unused third coordinate is 0
};

/// Parses point rows separated by newlines or semicolons, each row being a
/// comma-separated pair or triple.  Blank rows and '#' comments are skipped.
inline ParsedPoints parse_points(std::string_view text) {
  ParsedPoints out;
  std::string normalized(text);
  for (char& ch : normalized)
    if (ch == ';') ch = '\n';
  for (std::string_view row : detail::split(normalized, '\n')) {
    row = detail::trim(row);
    if (row.empty() || row.front() == '#') continue;
    const std::vector<double> coords = parse_number_list(row);
    if (coords.size() != 2 && coords.size() != 3)
      throw std::invalid_argument("point rows need 2 or 3 coordinates");
    if (out.dim == 0) out.dim = static_cast<int>(coords.size());
    if (static_cast<int>(coords.size()) != out.dim)
      throw std::invalid_argument("point rows mix dimensions");
    out.rows.push_back({coords[0], coords[1], coords.size() == 3 ? coords[2] : 0.0});
  }
  if (out.rows.empty()) throw std::invalid_argument("no point rows found");
  return out;
}

/// CSV form of a series: a header row "x,<column names...>" followed by one
/// row per sample, 17-significant-digit numbers, '\n' line ends.  Throws
/// std::invalid_argument on a series with no samples or no columns.
inline std::string emit_csv(const SampleSeries& series) {
  if (series.xs.empty() || series.columns.empty())
    throw std::invalid_argument("refusing to emit an empty series");
  for (const auto& col : series.columns)
    if (col.values.size() != series.xs.size())
      throw std::invalid_argument("series column length mismatch");
  std::string out = "x";
  for (const auto& col : series.columns) {
    out += ',';
    out += col.name;
  }
  out += '\n';
  for (std::size_t q = 0; q < series.xs.size(); ++q) {
    out += detail::format_real(series.xs[q]);
    for (const auto& col : series.columns) {
      out += ',';
      out += detail::format_real(col.values[q]);
    }
    out += '\n';
  }
  return out;
}

/// Parses text produced by emit_csv back into a series (round-trip aid for
/// tests and downstream tooling).
inline SampleSeries parse_csv(std::string_view text) {
  SampleSeries series;
  bool header = true;
  for (std::string_view line : detail::split(text, '\n')) {
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto fields = detail::split(line, ',');
    if (header) {
      if (fields.size() < 2 || detail::trim(fields[0]) != "x")
        throw std::invalid_argument("CSV header must start with x");
      for (std::size_t i = 1; i < fields.size(); ++i)
        series.columns.push_back({std::string(detail::trim(fields[i])), {}});
      header = false;
      continue;
    }
    if (fields.size() != series.columns.size() + 1)
      throw std::invalid_argument("CSV row width mismatch");
    const auto x = detail::parse_real(fields[0]);
    if (!x) throw std::invalid_argument("malformed CSV abscissa");
    series.xs.push_back(*x);
    for (std::size_t i = 1; i < fields.size(); ++i) {
      const auto v = detail::parse_real(fields[i]);
      if (!v) throw std::invalid_argument("malformed CSV value");
      series.columns[i - 1].values.push_back(*v);
    }
  }
  if (series.xs.empty()) throw std::invalid_argument("CSV carries no rows");
  return series;
}

/// Rendering options for emit_svg.
struct SvgStyle {
  int width = 860;
  int height = 560;
  /// When set, columns are consumed in (x, y) pairs and drawn as planar
  /// traces; otherwise every column is drawn against the series abscissae.
  bool parametric = false;
  /// Optional dashed overlay polyline (e.g. a control polygon).
  std::vector<std::array<double, 2>> overlay;
  std::string overlay_label = "control polygon";
};

/// SVG form of a series: one polyline per trace inside a fitted viewBox,
/// with a legend naming every trace.  Byte-deterministic for identical
/// inputs.  Throws std::invalid_argument on empty input or, in parametric
/// mode, an odd column count.
inline std::string emit_svg(const SampleSeries& series, const SvgStyle& style = {}) {
  if (series.xs.empty() || series.columns.empty())
    throw std::invalid_argument("refusing to emit an empty series");
  for (const auto& col : series.columns)
    if (col.values.size() != series.xs.size())
      throw std::invalid_argument("series column length mismatch");
  if (style.parametric && series.columns.size() % 2 != 0)
    throw std::invalid_argument("parametric emission needs column pairs");

  struct Trace {
    std::string label;
    const std::vector<double>* xs;
    const std::vector<double>* ys;
  };
  std::vector<Trace> traces;
  if (style.parametric) {
    for (std::size_t c = 0; c + 1 < series.columns.size(); c += 2) {
      std::string label = series.columns[c].name;
      if (label.size() >= 2 && label.compare(label.size() - 2, 2, ":x") == 0)
        label.resize(label.size() - 2);
      traces.push_back(
          {std::move(label), &series.columns[c].values, &series.columns[c + 1].values});
    }
  } else {
    for (const auto& col : series.columns)
      traces.push_back({col.name, &series.xs, &col.values});
  }

  double x0 = traces.front().xs->front(), x1 = x0;
  double y0 = traces.front().ys->front(), y1 = y0;
  auto grow = [&](double x, double y) {
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  };
  for (const Trace& tr : traces)
    for (std::size_t q = 0; q < tr.xs->size(); ++q) grow((*tr.xs)[q], (*tr.ys)[q]);
  for (const auto& p : style.overlay) grow(p[0], p[1]);
  // pad the box so strokes at the extremes stay visible; guard flat extents
  const double padx = (x1 - x0) > 0.0 ? 0.05 * (x1 - x0) : 1.0;
  const double pady = (y1 - y0) > 0.0 ? 0.05 * (y1 - y0) : 1.0;
  x0 -= padx;
  x1 += padx;
  y0 -= pady;
  y1 += pady;

  const double w = static_cast<double>(style.width);
  const double h = static_cast<double>(style.height);
  auto px = [&](double x) { return (x - x0) / (x1 - x0) * w; };
  auto py = [&](double y) { return h - (y - y0) / (y1 - y0) * h; };

  static const char* const kPalette[10] = {
      "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
      "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " +
         std::to_string(style.width) + " " + std::to_string(style.height) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  if (!style.overlay.empty()) {
    out += "<polyline fill=\"none\" stroke=\"#999999\" stroke-width=\"1\" "
           "stroke-dasharray=\"5 4\" points=\"";
    for (std::size_t q = 0; q < style.overlay.size(); ++q) {
      if (q) out += ' ';
      out += detail::format_coord(px(style.overlay[q][0])) + "," +
             detail::format_coord(py(style.overlay[q][1]));
    }
    out += "\"/>\n";
    for (const auto& p : style.overlay)
      out += "<circle cx=\"" + detail::format_coord(px(p[0])) + "\" cy=\"" +
             detail::format_coord(py(p[1])) + "\" r=\"2.5\" fill=\"#999999\"/>\n";
  }
  for (std::size_t i = 0; i < traces.size(); ++i) {
    out += "<polyline fill=\"none\" stroke=\"";
    out += kPalette[i % 10];
    out += "\" stroke-width=\"1.5\" points=\"";
    const Trace& tr = traces[i];
    for (std::size_t q = 0; q < tr.xs->size(); ++q) {
      if (q) out += ' ';
      out += detail::format_coord(px((*tr.xs)[q])) + "," +
             detail::format_coord(py((*tr.ys)[q]));
    }
    out += "\"/>\n";
  }
  // legend
  double ly = 18.0;
  auto legend_entry = [&](const std::string& color, const std::string& dash,
                          const std::string& label) {
    out += "<line x1=\"12\" y1=\"" + detail::format_coord(ly - 4) +
           "\" x2=\"34\" y2=\"" + detail::format_coord(ly - 4) + "\" stroke=\"" +
           color + "\" stroke-width=\"2\"" + dash + "/>\n";
    out += "<text x=\"40\" y=\"" + detail::format_coord(ly) +
           "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#000000\">" +
           label + "</text>\n";
    ly += 16.0;
  };
  for (std::size_t i = 0; i < traces.size(); ++i)
    legend_entry(kPalette[i % 10], "", traces[i].label);
  if (!style.overlay.empty())
    legend_entry("#999999", " stroke-dasharray=\"5 4\"", style.overlay_label);
  out += "</svg>\n";
  return out;
}

}  // namespace alphaspline
