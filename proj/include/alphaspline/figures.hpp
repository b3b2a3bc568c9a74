#pragma once

// Figure configuration files and the rendering engine behind the `figures`
// subcommand: each [figure] section describes one parametrization, basis
// family, or curve plot, and renders to deterministic CSV/SVG files.

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alphaspline/catalog.hpp"
#include "alphaspline/io.hpp"
#include "alphaspline/sampling.hpp"

namespace alphaspline {

/// One figure: what to sample and where to put it.
struct FigureConfig {
  enum class Kind { phi, basis, curve };

  Kind kind = Kind::phi;
  std::string name;                       ///< output file stem
  std::vector<double> knots;              ///< basis and curve kinds
  int degree = 0;                         ///< basis and curve kinds
  std::vector<std::pair<Alpha, std::string>> alphas;  ///< value + source token
  std::vector<Point2> polygon;            ///< curve kind
  std::optional<Span> span;               ///< phi kind
  std::optional<std::pair<double, double>> domain;  ///< phi kind; default span
  int samples = 400;
  bool csv = true;
  bool svg = true;
};

/// Parses a figure configuration text: '#' comments, one "[figure]" header
/// per entry, "key = value" lines.  Keys: name, kind (phi|basis|curve),
/// knots, degree, alphas, polygon ("x,y; x,y; ..."), span ("a,b"), domain
/// ("lo,hi"), samples, format (csv|svg|csv,svg).  Throws
/// std::invalid_argument with the offending line number.
inline std::vector<FigureConfig> parse_figure_configs(std::string_view text) {
  std::vector<FigureConfig> out;
  int line_no = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("figure config line " + std::to_string(line_no) +
                                ": " + what);
  };
  auto finish = [&](FigureConfig& fig) {
    if (fig.name.empty()) fail("figure needs a name");
    if (fig.alphas.empty()) fail("figure needs at least one alpha");
    if (!fig.csv && !fig.svg) fail("figure disables every format");
    switch (fig.kind) {
      case FigureConfig::Kind::phi:
        if (!fig.span) fail("phi figure needs a span");
        break;
      case FigureConfig::Kind::basis:
        if (fig.knots.empty()) fail("basis figure needs knots");
        break;
      case FigureConfig::Kind::curve:
        if (fig.knots.empty()) fail("curve figure needs knots");
        if (fig.polygon.empty()) fail("curve figure needs a polygon");
        break;
    }
  };

  std::optional<FigureConfig> current;
  for (std::string_view raw : detail::split(text, '\n')) {
    ++line_no;
    std::string_view line = detail::trim(raw);
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = detail::trim(line.substr(0, hash));
    if (line.empty()) continue;
    if (line == "[figure]") {
      if (current) {
        finish(*current);
        out.push_back(std::move(*current));
      }
      current.emplace();
      continue;
    }
    if (!current) fail("key outside a [figure] section");
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail("expected key = value");
    const std::string_view key = detail::trim(line.substr(0, eq));
    const std::string_view value = detail::trim(line.substr(eq + 1));
    if (key == "name") {
      current->name = std::string(value);
    } else if (key == "kind") {
      if (value == "phi")
        current->kind = FigureConfig::Kind::phi;
      else if (value == "basis")
        current->kind = FigureConfig::Kind::basis;
      else if (value == "curve")
        current->kind = FigureConfig::Kind::curve;
      else
        fail("unknown kind '" + std::string(value) + "'");
    } else if (key == "knots") {
      current->knots = parse_number_list(value);
    } else if (key == "degree") {
      const auto v = detail::parse_real(value);
      if (!v || *v < 0 || *v != static_cast<int>(*v)) fail("malformed degree");
      current->degree = static_cast<int>(*v);
    } else if (key == "alphas") {
      for (std::string_view token : detail::split(value, ',')) {
        token = detail::trim(token);
        const auto alpha = Alpha::parse(token);
        if (!alpha) fail("malformed alpha '" + std::string(token) + "'");
        current->alphas.emplace_back(*alpha, std::string(token));
      }
    } else if (key == "polygon") {
      const ParsedPoints pts = parse_points(value);
      if (pts.dim != 2) fail("figure polygons are planar");
      current->polygon.clear();
      for (const auto& row : pts.rows)
        current->polygon.push_back({{row[0], row[1]}});
    } else if (key == "span") {
      const auto v = parse_number_list(value);
      if (v.size() != 2) fail("span needs two numbers");
      current->span.emplace(v[0], v[1]);
    } else if (key == "domain") {
      const auto v = parse_number_list(value);
      if (v.size() != 2 || !(v[0] < v[1])) fail("domain needs lo < hi");
      current->domain = std::make_pair(v[0], v[1]);
    } else if (key == "samples") {
      const auto v = detail::parse_real(value);
      if (!v || *v < 2 || *v != static_cast<int>(*v)) fail("malformed samples");
      current->samples = static_cast<int>(*v);
    } else if (key == "format") {
      current->csv = false;
      current->svg = false;
      for (std::string_view token : detail::split(value, ',')) {
        token = detail::trim(token);
        if (token == "csv")
          current->csv = true;
        else if (token == "svg")
          current->svg = true;
        else
          fail("unknown format '" + std::string(token) + "'");
      }
    } else {
      fail("unknown key '" + std::string(key) + "'");
    }
  }
  if (current) {
    finish(*current);
    out.push_back(std::move(*current));
  }
  return out;
}

namespace detail {

inline std::string sanitize_token(std::string token) {
  for (char& ch : token)
    if (ch == '/' || ch == ' ') ch = '_';
  return token;
}

inline void write_bytes(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace detail

/// Renders one figure into out_dir and returns the file names written.
///
/// phi figures overlay every alpha in a single plot; basis figures write
/// one file set per alpha (a family of n + 1 curves each); curve figures
/// overlay the traces for every alpha with the control polygon behind them.
inline std::vector<std::string> render_figure(const FigureConfig& fig,
                                              const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  std::vector<std::string> written;
  auto emit = [&](const std::string& stem, const SampleSeries& series,
                  const SvgStyle& style) {
    if (fig.csv) {
      detail::write_bytes(out_dir / (stem + ".csv"), emit_csv(series));
      written.push_back(stem + ".csv");
    }
    if (fig.svg) {
      detail::write_bytes(out_dir / (stem + ".svg"), emit_svg(series, style));
      written.push_back(stem + ".svg");
    }
  };

  switch (fig.kind) {
    case FigureConfig::Kind::phi: {
      const auto [lo, hi] =
          fig.domain.value_or(std::make_pair(fig.span->a, fig.span->b));
      SampleSeries merged;
      for (const auto& [alpha, token] : fig.alphas) {
        SampleSeries one = sample_phi(alpha, *fig.span, lo, hi, fig.samples);
        one.columns.front().name = "alpha=" + token;
        merge_series(merged, one, "");
      }
      emit(fig.name, merged, {});
      break;
    }
    case FigureConfig::Kind::basis: {
      for (const auto& [alpha, token] : fig.alphas) {
        const BasisSpec spec(KnotVector(fig.knots), fig.degree, alpha);
        emit(fig.name + "_a" + detail::sanitize_token(token),
             sample_basis(spec, fig.samples), {});
      }
      break;
    }
    case FigureConfig::Kind::curve: {
      SampleSeries merged;
      for (const auto& [alpha, token] : fig.alphas) {
        const CurveSpec<2> curve(BasisSpec(KnotVector(fig.knots), fig.degree, alpha),
                                 fig.polygon);
        merge_series(merged, sample_curve(curve, fig.samples),
                     "alpha=" + token + ":");
      }
      SvgStyle style;
      style.parametric = true;
      for (const Point2& p : fig.polygon) style.overlay.push_back({p[0], p[1]});
      emit(fig.name, merged, style);
      break;
    }
  }
  return written;
}

/// Parses and renders every figure in a configuration file; returns the
/// file names written.
inline std::vector<std::string> render_figure_file(
    const std::filesystem::path& config_path, const std::filesystem::path& out_dir) {
  std::ifstream in(config_path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot read figure config " + config_path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  std::vector<std::string> written;
  for (const FigureConfig& fig : parse_figure_configs(buf.str()))
    for (std::string& name : render_figure(fig, out_dir))
      written.push_back(std::move(name));
  return written;
}

}  // namespace alphaspline
