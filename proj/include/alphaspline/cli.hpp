#pragma once

// Command-line front end: subcommands `phi`, `basis`, `curve`, `figures`,
// and `check`.  Exit codes: 0 success, 1 validation failure (bad input or a
// failed check), 2 internal error.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "alphaspline/checks.hpp"
#include "alphaspline/figures.hpp"
#include "alphaspline/io.hpp"
#include "alphaspline/sampling.hpp"

namespace alphaspline {
namespace cli_detail {

inline std::vector<std::pair<Alpha, std::string>> parse_alphas(
    const std::vector<std::string>& tokens) {
  if (tokens.empty())
    throw std::invalid_argument("at least one --alpha is required");
  std::vector<std::pair<Alpha, std::string>> out;
  out.reserve(tokens.size());
  for (const std::string& token : tokens) {
    const std::optional<Alpha> alpha = Alpha::parse(token);
    if (!alpha)
      throw std::invalid_argument(
          "--alpha '" + token +
          "' is not a real < 0, a real > 1, a fraction p/q, or inf");
    out.emplace_back(*alpha, token);
  }
  return out;
}

inline std::pair<double, double> parse_pair(const std::string& text,
                                            const char* what) {
  const std::vector<double> v = parse_number_list(text);
  if (v.size() != 2)
    throw std::invalid_argument(std::string(what) +
                                " expects two comma-separated numbers");
  return {v[0], v[1]};
}

/// Reads a control polygon given either a file path or inline text
/// ("x,y; x,y; ...").
inline std::vector<Point2> load_polygon(const std::string& arg) {
  std::string text = arg;
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  const ParsedPoints pts = parse_points(text);
  if (pts.dim != 2)
    throw std::invalid_argument("control polygon must be two-dimensional");
  std::vector<Point2> polygon;
  polygon.reserve(pts.rows.size());
  for (const auto& row : pts.rows)
    polygon.push_back(Point2{{row[0], row[1]}});
  return polygon;
}

inline void write_output(const std::string& bytes, const std::string& out) {
  if (out.empty()) {
    std::fwrite(bytes.data(), 1, bytes.size(), stdout);
    return;
  }
  const std::filesystem::path path(out);
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  detail::write_bytes(path, bytes);
}

/// Renders every figure defined in a batch config file into out_dir
/// (current directory when empty) and lists the files written.
inline void run_config_batch(const std::string& config_file,
                             const std::string& out_dir) {
  const std::filesystem::path out = out_dir.empty() ? "." : out_dir;
  for (const std::string& name : render_figure_file(config_file, out))
    std::puts((out / name).string().c_str());
}

struct PhiArgs {
  std::vector<std::string> alphas;
  std::string span, domain, out, format = "csv", config;
  int samples = 400;
};

inline void run_phi(const PhiArgs& a) {
  if (!a.config.empty()) return run_config_batch(a.config, a.out);
  const Span span = [&] {
    const auto [lo, hi] = parse_pair(a.span, "--span");
    return Span(lo, hi);
  }();
  const auto [lo, hi] = a.domain.empty()
                            ? std::pair<double, double>(span.a, span.b)
                            : parse_pair(a.domain, "--domain");
  SampleSeries merged;
  for (const auto& [alpha, token] : parse_alphas(a.alphas)) {
    SampleSeries one = sample_phi(alpha, span, lo, hi, a.samples);
    one.columns.front().name = "alpha=" + token;
    if (merged.xs.empty()) merged = std::move(one);
    else merge_series(merged, one, "");
  }
  write_output(a.format == "svg" ? emit_svg(merged) : emit_csv(merged), a.out);
}

struct BasisArgs {
  std::vector<std::string> alphas;
  std::string knots, out, format = "csv", config;
  int degree = -1, samples = 400;
};

/// One output per alpha: `--out` is used verbatim for a single alpha with a
/// matching extension, and as a stem ("<stem>_a<token>.<format>") otherwise.
inline void run_basis(const BasisArgs& a) {
  if (!a.config.empty()) return run_config_batch(a.config, a.out);
  if (a.degree < 0) throw std::invalid_argument("--degree is required");
  const KnotVector knots(parse_number_list(a.knots));
  const auto alphas = parse_alphas(a.alphas);
  const std::string ext = "." + a.format;
  const bool verbatim = alphas.size() == 1 && !a.out.empty() &&
                        std::filesystem::path(a.out).extension() == ext;
  for (const auto& [alpha, token] : alphas) {
    const SampleSeries series =
        sample_basis(BasisSpec(knots, a.degree, alpha), a.samples);
    const std::string bytes =
        a.format == "svg" ? emit_svg(series) : emit_csv(series);
    if (a.out.empty() && alphas.size() == 1) {
      write_output(bytes, "");
      continue;
    }
    std::filesystem::path path(a.out.empty() ? "basis" : a.out);
    if (!verbatim) {
      if (path.extension() == ext) path.replace_extension();
      path += "_a" + detail::sanitize_token(token) + ext;
    }
    write_output(bytes, path.string());
    std::puts(path.string().c_str());
  }
}

struct CurveArgs {
  std::vector<std::string> alphas;
  std::string knots, polygon, out, format = "csv", config;
  int degree = -1, samples = 400;
};

inline void run_curve(const CurveArgs& a) {
  if (!a.config.empty()) return run_config_batch(a.config, a.out);
  if (a.degree < 0) throw std::invalid_argument("--degree is required");
  if (a.polygon.empty()) throw std::invalid_argument("--polygon is required");
  const KnotVector knots(parse_number_list(a.knots));
  const std::vector<Point2> polygon = load_polygon(a.polygon);
  SampleSeries merged;
  SvgStyle style;
  style.parametric = true;
  for (const Point2& p : polygon) style.overlay.push_back({{p[0], p[1]}});
  for (const auto& [alpha, token] : parse_alphas(a.alphas)) {
    const CurveSpec<2> curve(BasisSpec(knots, a.degree, alpha), polygon);
    const SampleSeries one = sample_curve(curve, a.samples);
    if (merged.xs.empty()) merged.xs = one.xs;
    merge_series(merged, one, "alpha=" + token + ":");
  }
  write_output(a.format == "svg" ? emit_svg(merged, style) : emit_csv(merged),
               a.out);
}

inline int run_check(const std::string& figures_dir) {
  CheckOptions opt;
  opt.figures_dir = figures_dir;
  const std::vector<CheckResult> results = run_acceptance_checks(opt);
  int failed = 0;
  for (const CheckResult& r : results) {
    std::printf("[%2d] %s  %-34s %s\n", r.id, r.pass ? "PASS" : "FAIL",
                r.name.c_str(), r.detail.c_str());
    for (const std::string& w : r.warnings)
      std::printf("          warning: %s\n", w.c_str());
    failed += !r.pass;
  }
  std::printf("%zu/%zu checks passed\n", results.size() - failed,
              results.size());
  return failed == 0 ? 0 : 1;
}

}  // namespace cli_detail

/// Entry point shared by the binary and the in-process CLI tests.
inline int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Rational B-spline bases and curves over a homographic "
               "reparametrization: sampling, figure export, and property "
               "checks"};
  app.require_subcommand(1);

  cli_detail::PhiArgs phi;
  CLI::App* phi_cmd =
      app.add_subcommand("phi", "Sample the reparametrization on a span");
  phi_cmd->add_option("--alpha", phi.alphas,
                      "shape value: a real, a fraction p/q, or inf (repeatable)");
  phi_cmd->add_option("--span", phi.span, "span endpoints a,b");
  phi_cmd->add_option("--domain", phi.domain, "sampling window lo,hi (default: the span)");
  phi_cmd->add_option("--samples", phi.samples, "sample count")->check(CLI::Range(2, 100000000));
  phi_cmd->add_option("--out", phi.out, "output path (default: stdout)");
  phi_cmd->add_option("--format", phi.format)->check(CLI::IsMember({"csv", "svg"}));
  phi_cmd->add_option("--config", phi.config, "render a figure batch file instead");

  cli_detail::BasisArgs basis;
  CLI::App* basis_cmd =
      app.add_subcommand("basis", "Sample all basis functions of a family");
  basis_cmd->add_option("--knots", basis.knots, "comma-separated knot values");
  basis_cmd->add_option("--degree", basis.degree, "degree k >= 0");
  basis_cmd->add_option("--alpha", basis.alphas,
                        "shape value: a real, a fraction p/q, or inf (repeatable)");
  basis_cmd->add_option("--samples", basis.samples, "sample count")->check(CLI::Range(2, 100000000));
  basis_cmd->add_option("--out", basis.out, "output path or stem (one file per alpha)");
  basis_cmd->add_option("--format", basis.format)->check(CLI::IsMember({"csv", "svg"}));
  basis_cmd->add_option("--config", basis.config, "render a figure batch file instead");

  cli_detail::CurveArgs curve;
  CLI::App* curve_cmd =
      app.add_subcommand("curve", "Sample a curve over a control polygon");
  curve_cmd->add_option("--knots", curve.knots, "comma-separated knot values");
  curve_cmd->add_option("--degree", curve.degree, "degree k >= 1");
  curve_cmd->add_option("--alpha", curve.alphas,
                        "shape value: a real, a fraction p/q, or inf (repeatable)");
  curve_cmd->add_option("--polygon", curve.polygon,
                        "control polygon: CSV file or inline \"x,y; x,y; ...\"");
  curve_cmd->add_option("--samples", curve.samples, "sample count")->check(CLI::Range(2, 100000000));
  curve_cmd->add_option("--out", curve.out, "output path (default: stdout)");
  curve_cmd->add_option("--format", curve.format)->check(CLI::IsMember({"csv", "svg"}));
  curve_cmd->add_option("--config", curve.config, "render a figure batch file instead");

  std::string config_dir = "figures", figures_out = "figures_out";
  CLI::App* figures_cmd = app.add_subcommand(
      "figures", "Render every bundled figure configuration");
  figures_cmd->add_option("--config-dir", config_dir, "directory of .toml batch files");
  figures_cmd->add_option("--out", figures_out, "output directory");

  std::string check_figures_dir = "figures";
  CLI::App* check_cmd = app.add_subcommand(
      "check", "Run the acceptance property suites and print a pass/fail table");
  check_cmd->add_option("--figures-dir", check_figures_dir,
                        "figure config directory used by the reproduction check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Collapse CLI11's per-class exit codes onto the documented contract:
    // 0 for --help, 1 for any command-line validation failure.
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*phi_cmd) cli_detail::run_phi(phi);
    else if (*basis_cmd) cli_detail::run_basis(basis);
    else if (*curve_cmd) cli_detail::run_curve(curve);
    else if (*figures_cmd) {
      namespace fs = std::filesystem;
      std::vector<fs::path> configs;
      if (!fs::is_directory(config_dir))
        throw std::invalid_argument("no such config directory: " + config_dir);
      for (const auto& entry : fs::directory_iterator(config_dir))
        if (entry.path().extension() == ".toml") configs.push_back(entry.path());
      std::sort(configs.begin(), configs.end());
      if (configs.empty())
        throw std::invalid_argument("no .toml configs under " + config_dir);
      for (const fs::path& cfg : configs)
        cli_detail::run_config_batch(cfg.string(), figures_out);
    } else if (*check_cmd) {
      return cli_detail::run_check(check_figures_dir);
    }
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::out_of_range& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 2;
  }
  return 0;
}

}  // namespace alphaspline
