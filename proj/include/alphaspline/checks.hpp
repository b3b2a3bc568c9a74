#pragma once

// The acceptance property suites behind the `check` subcommand and the
// acceptance test binary: eleven checks covering partition of unity, oracle
// parity, pointwise-scheme agreement, conjugate symmetry, endpoint
// derivatives, the Bernstein special case, the classical limit, endpoint
// interpolation and mirror images, linear independence, a single-peak
// audit, and deterministic figure reproduction.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "alphaspline/catalog.hpp"
#include "alphaspline/figures.hpp"
#include "alphaspline/oracle.hpp"

namespace alphaspline {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;                  ///< one-line summary of the worst case
  std::vector<std::string> warnings;   ///< audit findings that do not fail
};

struct CheckOptions {
  std::filesystem::path figures_dir = "figures";
  /// Scratch directory for the figure reproduction check; a directory under
  /// the system temp location is used when empty.
  std::filesystem::path work_dir;
};

namespace detail {

/// n points strictly inside (lo, hi), offset so knots are never hit.
inline std::vector<double> interior_grid(double lo, double hi, int n) {
  std::vector<double> xs(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q)
    xs[static_cast<std::size_t>(q)] = lo + (hi - lo) * (q + 0.5) / n;
  return xs;
}

inline std::string worst_text(double worst, double tol) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "worst %.3e (tolerance %.0e)", worst, tol);
  return buf;
}

/// Largest multiplicity among breakpoints strictly inside the domain.
inline int max_interior_multiplicity(const KnotVector& knots) {
  int worst = 0;
  const auto& bp = knots.breakpoints();
  const auto& mult = knots.multiplicities();
  for (std::size_t q = 0; q < bp.size(); ++q)
    if (bp[q] > knots.front() && bp[q] < knots.back())
      worst = std::max(worst, mult[q]);
  return worst;
}

}  // namespace detail

/// Partition of unity: window sums stay within 1e-12 of one on every span
/// carrying a full window, for every reference vector, degree 1..3, and
/// shape value.
inline CheckResult check_partition_of_unity() {
  constexpr double kTol = 1e-12;
  double worst = 0.0;
  for (const auto& named : reference_knot_vectors()) {
    const KnotVector knots(named.nodes);
    for (int k = 1; k <= 3; ++k) {
      const int n = knots.max_index() - k - 1;
      if (n < k) continue;  // no span carries a full window
      for (const Alpha& alpha : reference_alpha_set()) {
        const BasisSpec spec(knots, k, alpha);
        for (int j = k; j <= n; ++j) {
          if (!(knots[j] < knots[j + 1])) continue;
          for (double x : detail::interior_grid(knots[j], knots[j + 1], 200)) {
            double sum = 0.0;
            for (double v : eval_basis_all(spec, x).values) sum += v;
            worst = std::max(worst, std::abs(sum - 1.0));
          }
        }
      }
    }
  }
  return {1, "partition of unity", worst <= kTol,
          detail::worst_text(worst, kTol), {}};
}

/// Oracle parity: the floating evaluator agrees with the exact-rational
/// recurrence within 1e-13 on 200 random probes per reference vector.
/// Probes are dyadic points of [t_0, t_m) so the floating and the exact
/// evaluations see bit-identical inputs.
inline CheckResult check_oracle_parity() {
  constexpr double kTol = 1e-13;
  constexpr int kDegree = 2;
  double worst = 0.0;
  const auto& alphas = reference_finite_alpha_set();
  for (const auto& named : reference_knot_vectors()) {
    const KnotVector knots(named.nodes);
    const int n = knots.max_index() - kDegree - 1;
    std::vector<Rational> exact_knots;
    for (double t : named.nodes) exact_knots.emplace_back(t);
    std::mt19937 rng(0x5eed);
    std::uniform_int_distribution<int> pick_i(0, n);
    std::uniform_int_distribution<int> pick_r(0, 1023);
    for (int probe = 0; probe < 200; ++probe) {
      const Alpha alpha = alphas[static_cast<std::size_t>(probe) % alphas.size()];
      const BasisSpec spec(knots, kDegree, alpha);
      const int i = pick_i(rng);
      const double x =
          knots.front() + (knots.back() - knots.front()) * pick_r(rng) / 1024.0;
      const double computed = eval_basis_single(spec, i, x);
      const Rational expected = oracle_basis(exact_knots, kDegree,
                                             Rational(alpha.value()), i, Rational(x));
      worst = std::max(
          worst, std::abs(computed - expected.convert_to<double>()));
    }
  }
  return {2, "exact-oracle parity", worst <= kTol,
          detail::worst_text(worst, kTol), {}};
}

/// The triangular pointwise scheme agrees with the defining sum to 1e-12
/// relative over every reference curve configuration and shape value.
inline CheckResult check_deboor_vs_direct() {
  constexpr double kTol = 1e-12;
  double worst = 0.0;
  for (const auto& cfg : reference_curve_configs()) {
    const KnotVector knots(cfg.knots);
    for (const Alpha& alpha : reference_alpha_set()) {
      const CurveSpec<2> curve(BasisSpec(knots, cfg.degree, alpha), cfg.polygon);
      const double lo = knots.front(), hi = knots.back();
      for (int q = 0; q < 500; ++q) {
        const double x = q == 499 ? hi : lo + (hi - lo) * q / 499.0;
        const Point2 direct = eval_direct(curve, x);
        const Point2 triangle = eval_deboor(curve, x);
        const double scale =
            std::max({1.0, std::abs(direct[0]), std::abs(direct[1])});
        worst = std::max({worst, std::abs(triangle[0] - direct[0]) / scale,
                          std::abs(triangle[1] - direct[1]) / scale});
      }
    }
  }
  return {3, "pointwise scheme vs defining sum", worst <= kTol,
          detail::worst_text(worst, kTol), {}};
}

/// Conjugate symmetry on the symmetric reference vectors: evaluating at the
/// mirrored abscissa equals the conjugate partner function within 1e-12.
inline CheckResult check_conjugate_symmetry() {
  constexpr double kTol = 1e-12;
  double worst = 0.0;
  const std::vector<Alpha> alphas = {Alpha(-4.0), Alpha(-1.0), Alpha(-0.5),
                                     Alpha(2.0), Alpha(1.5), Alpha(5.0)};
  for (const char* name : {"u4", "u5", "u9"}) {
    const auto& table = reference_knot_vectors();
    const auto it = std::find_if(table.begin(), table.end(),
                                 [&](const auto& e) { return e.name == name; });
    const KnotVector knots(it->nodes);
    const double ends = knots.front() + knots.back();
    for (int k = 1; k <= 3; ++k) {
      for (const Alpha& alpha : alphas) {
        const BasisSpec spec(knots, k, alpha);
        for (double x : detail::interior_grid(knots.front(), knots.back(), 300)) {
          for (int i = 0; i <= spec.last_index(); ++i) {
            const double mirrored = eval_basis_single(spec, i, ends - x);
            const double partner = symmetry_partner(spec, i, x);
            worst = std::max(worst, std::abs(mirrored - partner));
          }
        }
      }
    }
  }
  return {4, "conjugate symmetry", worst <= kTol,
          detail::worst_text(worst, kTol), {}};
}

/// Endpoint derivatives: the closed forms match one-sided finite
/// differences (best of three steps, relative 1e-4) on the open reference
/// vectors, and the degree-2 sample values are reproduced exactly.
inline CheckResult check_endpoint_derivatives() {
  constexpr double kTol = 1e-4;
  // substitution sample: u4, k = 2, alpha = 2 (and the classical factors)
  {
    const KnotVector u4(std::vector<double>{0, 0, 0, 1, 2, 3, 3, 3});
    const auto d = endpoint_derivatives(BasisSpec(u4, 2, Alpha(2.0)));
    const bool exact = d.at_start[0] == -4.0 && d.at_start[1] == 4.0 &&
                       d.at_start[2] == 0.0 && d.at_end[4] == 1.0 &&
                       d.at_end[3] == -1.0 && d.at_end[0] == 0.0;
    const auto dc = endpoint_derivatives(BasisSpec(u4, 2, Alpha::classical()));
    const bool exact_classical = dc.at_start[0] == -2.0 && dc.at_start[1] == 2.0 &&
                                 dc.at_end[4] == 2.0 && dc.at_end[3] == -2.0;
    if (!exact || !exact_classical)
      return {5, "endpoint derivatives", false, "substitution values differ", {}};
  }
  double worst = 0.0;
  const double steps[3] = {1e-4, 1e-5, 1e-6};
  for (const auto& named : reference_knot_vectors()) {
    const KnotVector knots(named.nodes);
    if (!knots.classify(2).open) continue;
    for (const Alpha& alpha : reference_alpha_set()) {
      const BasisSpec spec(knots, 2, alpha);
      const EndpointDerivatives d = endpoint_derivatives(spec);
      double start_scale = 0.0, end_scale = 0.0;
      for (double v : d.at_start) start_scale = std::max(start_scale, std::abs(v));
      for (double v : d.at_end) end_scale = std::max(end_scale, std::abs(v));
      const int n = spec.last_index();
      for (int i = 0; i <= n; ++i) {
        double err_lo = 1e300, err_hi = 1e300;
        // Second-order one-sided stencils keep the truncation error far
        // below the tolerance even where the rational factors are steep.
        for (double h : steps) {
          const double a = knots.front(), b = knots.back();
          const double fd_lo = (-3.0 * eval_basis_single(spec, i, a) +
                                4.0 * eval_basis_single(spec, i, a + h) -
                                eval_basis_single(spec, i, a + 2.0 * h)) /
                               (2.0 * h);
          const double fd_hi = (3.0 * eval_basis_single(spec, i, b) -
                                4.0 * eval_basis_single(spec, i, b - h) +
                                eval_basis_single(spec, i, b - 2.0 * h)) /
                               (2.0 * h);
          err_lo = std::min(err_lo, std::abs(fd_lo - d.at_start[i]));
          err_hi = std::min(err_hi, std::abs(fd_hi - d.at_end[i]));
        }
        const double ref_lo = std::max(std::abs(d.at_start[i]), start_scale);
        const double ref_hi = std::max(std::abs(d.at_end[i]), end_scale);
        worst = std::max({worst, err_lo / ref_lo, err_hi / ref_hi});
      }
    }
  }
  return {5, "endpoint derivatives", worst <= kTol,
          detail::worst_text(worst, kTol), {}};
}

/// The recurrence on a single-span open vector reproduces the Bernstein
/// closed form within 1e-14 for degrees up to eight.
inline CheckResult check_bernstein_equivalence() {
  constexpr double kTol = 1e-14;
  double worst = 0.0;
  const Span spans[2] = {Span(0.0, 1.0), Span(-1.0, 2.0)};
  for (int k = 1; k <= 8; ++k) {
    for (const Span& s : spans) {
      std::vector<double> nodes;
      nodes.insert(nodes.end(), static_cast<std::size_t>(k) + 1, s.a);
      nodes.insert(nodes.end(), static_cast<std::size_t>(k) + 1, s.b);
      const KnotVector knots(nodes);
      for (const Alpha& alpha : reference_alpha_set()) {
        const BasisSpec spec(knots, k, alpha);
        for (int q = 0; q < 500; ++q) {
          const double x =
              q == 499 ? s.b : s.a + (s.b - s.a) * q / 499.0;
          const std::vector<double> closed = bernstein_closed_form(k, alpha, x, s);
          const BasisValues rec = eval_basis_all(spec, x);
          for (int i = 0; i <= k; ++i)
            worst = std::max(
                worst, std::abs(closed[static_cast<std::size_t>(i)] -
                                rec.value_of(i)));
        }
      }
    }
  }
  return {6, "Bernstein special case", worst <= kTol,
          detail::worst_text(worst, kTol), {}};
}

/// Classical recovery: the distance to the classical basis shrinks
/// strictly along alpha = 1e2, 1e4, 1e6 and ends below 1e-4.
inline CheckResult check_classical_recovery() {
  constexpr double kTol = 1e-4;
  constexpr int kDegree = 2;
  double worst_final = 0.0;
  bool monotone = true;
  for (const auto& named : reference_knot_vectors()) {
    const KnotVector knots(named.nodes);
    const BasisSpec classical(knots, kDegree, Alpha::classical());
    double previous = 1e300;
    double err = 0.0;
    for (double a : {1e2, 1e4, 1e6}) {
      const BasisSpec spec(knots, kDegree, Alpha(a));
      err = 0.0;
      for (double x :
           detail::interior_grid(knots.front(), knots.back(), 400)) {
        const BasisValues got = eval_basis_all(spec, x);
        const BasisValues want = eval_basis_all(classical, x);
        for (std::size_t s = 0; s < got.values.size(); ++s)
          err = std::max(err, std::abs(got.values[s] - want.values[s]));
      }
      monotone = monotone && err < previous;
      previous = err;
    }
    worst_final = std::max(worst_final, err);
  }
  const bool pass = monotone && worst_final <= kTol;
  std::string detail_text = detail::worst_text(worst_final, kTol);
  detail_text += monotone ? ", strictly decreasing" : ", NOT decreasing";
  return {7, "classical limit recovery", pass, detail_text, {}};
}

/// Curve geometry: exact endpoint interpolation, convex-hull coefficients
/// (nonnegative within 1e-14, summing to one within 1e-12), local control
/// as exact equality outside a moved point's influence interval, affine
/// invariance within 1e-10, and mirror symmetry through the conjugate
/// counterpart within 1e-10.
inline CheckResult check_curve_geometry() {
  constexpr double kTol = 1e-10;
  const auto& table = reference_curve_configs();

  // Endpoint interpolation must be exact for both evaluators.
  for (const auto& cfg : table) {
    const KnotVector knots(cfg.knots);
    for (const Alpha& alpha : reference_alpha_set()) {
      const CurveSpec<2> curve(BasisSpec(knots, cfg.degree, alpha), cfg.polygon);
      const Point2 d0 = cfg.polygon.front();
      const Point2 dn = cfg.polygon.back();
      if (!(eval_direct(curve, knots.front()) == d0 &&
            eval_deboor(curve, knots.front()) == d0 &&
            eval_direct(curve, knots.back()) == dn &&
            eval_deboor(curve, knots.back()) == dn))
        return {8, "curve geometry", false,
                "interpolation not exact on " + cfg.name, {}};
    }
  }

  // Convex-hull coefficients along every configuration.
  double worst_neg = 0.0, worst_sum = 0.0;
  for (const auto& cfg : table) {
    const KnotVector knots(cfg.knots);
    for (const Alpha& alpha : reference_alpha_set()) {
      const BasisSpec spec(knots, cfg.degree, alpha);
      for (int q = 0; q < 400; ++q) {
        const double x = knots.front() +
                         (knots.back() - knots.front()) * q / 399.0;
        double sum = 0.0;
        for (double v : eval_basis_all(spec, x).values) {
          worst_neg = std::max(worst_neg, -v);
          sum += v;
        }
        worst_sum = std::max(worst_sum, std::abs(sum - 1.0));
      }
    }
  }
  if (worst_neg > 1e-14 || worst_sum > 1e-12)
    return {8, "curve geometry", false,
            "hull coefficients: " + detail::worst_text(std::max(worst_neg, worst_sum), 1e-12),
            {}};

  // Local control: moving one control point leaves samples outside its
  // influence interval identical to the last bit.
  for (const char* name : {"alpha_sweep", "degree_b_k3", "local_p2", "mirror_1"}) {
    const auto it = std::find_if(table.begin(), table.end(),
                                 [&](const auto& e) { return e.name == name; });
    const KnotVector knots(it->knots);
    const int k = it->degree;
    for (const Alpha& alpha :
         {Alpha(-4.0), Alpha(-0.5), Alpha(1.5), Alpha(5.0), Alpha::classical()}) {
      const CurveSpec<2> base(BasisSpec(knots, k, alpha), it->polygon);
      const int n = static_cast<int>(it->polygon.size()) - 1;
      for (int j = 0; j <= n; ++j) {
        std::vector<Point2> moved = it->polygon;
        moved[static_cast<std::size_t>(j)] =
            moved[static_cast<std::size_t>(j)] + Point2{{17.0, -29.0}};
        const CurveSpec<2> perturbed(BasisSpec(knots, k, alpha), moved);
        const double lo = knots[j], hi = knots[j + k + 1];
        // The influence interval is open except at a clamped left edge
        // (t_j = t_{j+k}), where the basis function is nonzero at t_j
        // itself.  The right end t_m stays influenced through the
        // left-limit convention whenever the window reaches it.
        const bool left_edge_active = knots[j] == knots[j + k];
        for (int q = 0; q < 400; ++q) {
          const double x = knots.front() +
                           (knots.back() - knots.front()) * q / 399.0;
          const bool outside =
              x < lo || (x == lo && !left_edge_active) ||
              (x >= hi && !(x == knots.back() && hi == knots.back()));
          if (!outside) continue;
          if (!(eval_deboor(base, x) == eval_deboor(perturbed, x) &&
                eval_direct(base, x) == eval_direct(perturbed, x)))
            return {8, "curve geometry", false,
                    "local control broken on " + it->name + " at j=" +
                        std::to_string(j),
                    {}};
        }
      }
    }
  }

  // Affine invariance: mapping the polygon commutes with evaluation.
  double worst_affine = 0.0;
  {
    AffineMap<2> map;
    map.linear = {{{{0.8, -0.6}}, {{0.6, 0.8}}}};  // rotation
    map.linear[0][0] *= 1.7;                        // plus anisotropic scale
    map.linear[1][1] *= 0.9;
    map.shift = {{-3.25, 11.5}};
    for (const auto& cfg : table) {
      const KnotVector knots(cfg.knots);
      for (const Alpha& alpha : {Alpha(-1.0), Alpha(2.0), Alpha::classical()}) {
        const CurveSpec<2> curve(BasisSpec(knots, cfg.degree, alpha), cfg.polygon);
        const CurveSpec<2> image = affine_image(curve, map);
        for (double x : detail::interior_grid(knots.front(), knots.back(), 200)) {
          const Point2 a = map.apply(eval_deboor(curve, x));
          const Point2 b = eval_deboor(image, x);
          worst_affine = std::max({worst_affine, std::abs(a[0] - b[0]),
                                   std::abs(a[1] - b[1])});
        }
      }
    }
  }
  if (worst_affine > kTol)
    return {8, "curve geometry", false,
            "affine invariance: " + detail::worst_text(worst_affine, kTol), {}};

  // Mirror symmetry through the conjugate counterpart.
  double worst = worst_affine;
  for (const char* name : {"mirror_1", "mirror_4"}) {
    const auto it = std::find_if(table.begin(), table.end(),
                                 [&](const auto& e) { return e.name == name; });
    const KnotVector knots(it->knots);
    const double ends = knots.front() + knots.back();
    const AffineMap<2> mirror = perpendicular_bisector_mirror(
        it->polygon.front(), it->polygon.back());
    for (const Alpha& alpha :
         {Alpha(-4.0), Alpha(-1.0), Alpha(-0.5), Alpha(-0.2), Alpha::classical()}) {
      const CurveSpec<2> curve(BasisSpec(knots, it->degree, alpha), it->polygon);
      const CurveSpec<2> counterpart = symmetric_counterpart(curve);
      for (double x : detail::interior_grid(knots.front(), knots.back(), 300)) {
        const Point2 image = mirror.apply(eval_deboor(curve, x));
        const Point2 other = eval_deboor(counterpart, ends - x);
        worst = std::max({worst, std::abs(image[0] - other[0]),
                          std::abs(image[1] - other[1])});
      }
    }
  }
  return {8, "curve geometry", worst <= kTol,
          detail::worst_text(worst, kTol), {}};
}

/// Linear independence: the collocation matrix at the knot averages stays
/// comfortably nonsingular (smallest singular value above 1e-10) on the
/// open reference vectors whose interior multiplicities do not exceed the
/// degree.
inline CheckResult check_linear_independence() {
  constexpr double kTol = 1e-10;
  constexpr int kDegree = 2;
  double worst = 1e300;
  for (const auto& named : reference_knot_vectors()) {
    const KnotVector knots(named.nodes);
    if (!knots.classify(kDegree).open) continue;
    if (detail::max_interior_multiplicity(knots) > kDegree) continue;
    const std::vector<double> xi = knot_average_abscissae(knots, kDegree);
    for (const Alpha& alpha : reference_alpha_set()) {
      const BasisSpec spec(knots, kDegree, alpha);
      const int n1 = spec.size();
      Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n1, n1);
      for (int q = 0; q < n1; ++q) {
        const BasisValues values =
            eval_basis_all(spec, xi[static_cast<std::size_t>(q)]);
        for (std::size_t s = 0; s < values.values.size(); ++s) {
          const int i = values.first_index + static_cast<int>(s);
          if (i >= 0 && i < n1) a(q, i) = values.values[s];
        }
      }
      const Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
      worst = std::min(worst, svd.singularValues().minCoeff());
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "smallest singular value %.3e (floor %.0e)",
                worst, kTol);
  return {9, "linear independence", worst > kTol, buf, {}};
}

/// Single-peak audit: on a 2000-point grid inside each support, every basis
/// function rises then falls (ties below 1e-13).  Violations fail only on
/// vectors whose interior multiplicities stay within the degree; beyond
/// that they are reported as warnings.
inline CheckResult check_unimodality() {
  constexpr double kTieTol = 1e-13;
  CheckResult result{10, "single-peak audit", true, "", {}};
  long checked = 0;
  for (const auto& named : reference_knot_vectors()) {
    const KnotVector knots(named.nodes);
    for (int k = 1; k <= 3; ++k) {
      if (knots.max_index() - k - 1 < 0) continue;
      const bool hard = detail::max_interior_multiplicity(knots) <= k;
      for (const Alpha& alpha : reference_alpha_set()) {
        const BasisSpec spec(knots, k, alpha);
        for (int i = 0; i <= spec.last_index(); ++i) {
          const double lo = knots[i], hi = knots[i + k + 1];
          if (!(lo < hi)) continue;
          ++checked;
          bool seen_down = false;
          bool violated = false;
          double prev = 0.0;
          bool first = true;
          for (double x : detail::interior_grid(lo, hi, 2000)) {
            const double v = eval_basis_single(spec, i, x);
            if (!first) {
              if (v < prev - kTieTol) seen_down = true;
              else if (v > prev + kTieTol && seen_down) violated = true;
            }
            prev = v;
            first = false;
          }
          if (violated) {
            const std::string what = named.name + " k=" + std::to_string(k) +
                                     " alpha=" + alpha.label() +
                                     " B" + std::to_string(i);
            if (hard) {
              result.pass = false;
              result.detail = "second peak on " + what;
            } else {
              result.warnings.push_back("second peak on " + what);
            }
          }
        }
      }
    }
  }
  if (result.detail.empty())
    result.detail = std::to_string(checked) + " functions audited, " +
                    std::to_string(result.warnings.size()) + " warnings";
  return result;
}

/// Figure reproduction: every bundled figure configuration renders, the two
/// runs produce identical file sets with identical bytes, and the phi,
/// basis, and curve families are all represented.
inline CheckResult check_figure_reproduction(const CheckOptions& opt) {
  namespace fs = std::filesystem;
  const fs::path work = opt.work_dir.empty()
                            ? fs::temp_directory_path() / "alphaspline_check"
                            : opt.work_dir;
  std::vector<fs::path> configs;
  if (fs::is_directory(opt.figures_dir))
    for (const auto& entry : fs::directory_iterator(opt.figures_dir))
      if (entry.path().extension() == ".toml") configs.push_back(entry.path());
  std::sort(configs.begin(), configs.end());
  if (configs.empty())
    return {11, "figure reproduction", false,
            "no figure configs under " + opt.figures_dir.string(), {}};

  auto render_all = [&](const fs::path& dir) {
    fs::remove_all(dir);
    std::vector<std::string> names;
    for (const fs::path& cfg : configs)
      for (std::string& name : render_figure_file(cfg, dir))
        names.push_back(std::move(name));
    std::sort(names.begin(), names.end());
    return names;
  };
  const auto read_bytes = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };

  const std::vector<std::string> run1 = render_all(work / "run1");
  const std::vector<std::string> run2 = render_all(work / "run2");
  if (run1 != run2 || run1.empty())
    return {11, "figure reproduction", false, "file sets differ between runs", {}};
  for (const std::string& name : run1)
    if (read_bytes(work / "run1" / name) != read_bytes(work / "run2" / name))
      return {11, "figure reproduction", false, name + " differs between runs", {}};

  long phi_files = 0, basis_files = 0, curve_files = 0;
  for (const std::string& name : run1) {
    phi_files += name.rfind("phi", 0) == 0;
    basis_files += name.rfind("basis", 0) == 0;
    curve_files += name.rfind("curve", 0) == 0;
  }
  const bool covered = phi_files >= 3 && basis_files >= 50 && curve_files >= 18;
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "%zu files byte-identical across runs (%ld phi, %ld basis, %ld curve)",
                run1.size(), phi_files, basis_files, curve_files);
  return {11, "figure reproduction", covered, buf, {}};
}

/// Runs all eleven acceptance checks in order.
inline std::vector<CheckResult> run_acceptance_checks(const CheckOptions& opt = {}) {
  std::vector<CheckResult> results;
  results.push_back(check_partition_of_unity());
  results.push_back(check_oracle_parity());
  results.push_back(check_deboor_vs_direct());
  results.push_back(check_conjugate_symmetry());
  results.push_back(check_endpoint_derivatives());
  results.push_back(check_bernstein_equivalence());
  results.push_back(check_classical_recovery());
  results.push_back(check_curve_geometry());
  results.push_back(check_linear_independence());
  results.push_back(check_unimodality());
  results.push_back(check_figure_reproduction(opt));
  return results;
}

}  // namespace alphaspline
