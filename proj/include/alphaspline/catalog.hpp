#pragma once

// The bundled reference configurations: the knot-vector families u0..u13
// used by the basis figures and property suites, the curve test cases
// behind the curve figures, and the standard shape-value sets.

#include <string>
#include <vector>

#include "alphaspline/alpha.hpp"
#include "alphaspline/curve.hpp"

namespace alphaspline {

struct NamedKnotVector {
  std::string name;
  std::vector<double> nodes;
};

/// The fourteen reference knot vectors.  u0..u3 are periodic for degree 2
/// (u0 uniform, u1/u2 with a repeated node, u3 non-uniform); u4..u8 are
/// open with varying interior spacing; u9..u13 are open with interior nodes
/// of multiplicity one to three.
inline const std::vector<NamedKnotVector>& reference_knot_vectors() {
  static const std::vector<NamedKnotVector> table = {
      {"u0", {0, 1, 2, 3, 4, 5, 6}},
      {"u1", {0, 1, 2, 3, 3, 5, 6}},
      {"u2", {0, 1, 1, 2, 4, 5, 6}},
      {"u3", {0, 1, 1.5, 2, 3.5, 5, 6}},
      {"u4", {0, 0, 0, 1, 2, 3, 3, 3}},
      {"u5", {0, 0, 0, 0.4, 2.6, 3, 3, 3}},
      {"u6", {0, 0, 0, 1.8, 2.2, 3, 3, 3}},
      {"u7", {0, 0, 0, 1, 1, 3, 3, 3}},
      {"u8", {0, 0, 0, 2, 2, 3, 3, 3}},
      {"u9", {0, 0, 0, 0.75, 1.5, 2.25, 3, 3, 3}},
      {"u10", {0, 0, 0, 0.75, 0.75, 2.25, 3, 3, 3}},
      {"u11", {0, 0, 0, 0.75, 0.75, 0.75, 3, 3, 3}},
      {"u12", {0, 0, 0, 0.75, 2.25, 2.25, 3, 3, 3}},
      {"u13", {0, 0, 0, 2.25, 2.25, 2.25, 3, 3, 3}},
  };
  return table;
}

struct ReferenceCurveConfig {
  std::string name;
  std::vector<double> knots;
  int degree;
  std::vector<Point2> polygon;
};

/// The nineteen reference curve configurations: a shape-value sweep, two
/// degree sweeps, three local-control variants (one moved control point
/// each), and seven mirror-symmetric configurations.
inline const std::vector<ReferenceCurveConfig>& reference_curve_configs() {
  static const std::vector<ReferenceCurveConfig> table = [] {
    std::vector<ReferenceCurveConfig> t;
    const std::vector<Point2> sweep_poly = {{{0, 2}},  {{1.5, 5}}, {{2.5, 4}},
                                            {{3, 1}},  {{5, 4}},   {{7, 1}},
                                            {{8, 4}},  {{10, 4}}};
    t.push_back({"alpha_sweep",
                 {0, 0, 0, 0, 1, 2, 3, 4, 5, 5, 5, 5},
                 3,
                 sweep_poly});

    const std::vector<Point2> deg_a = {{{0, 0}}, {{3, 9}}, {{6, 3}}, {{9, 6}}};
    t.push_back({"degree_a_k1", {0, 0, 1, 2, 3, 3}, 1, deg_a});
    t.push_back({"degree_a_k2", {0, 0, 0, 1.5, 3, 3, 3}, 2, deg_a});
    t.push_back({"degree_a_k3", {0, 0, 0, 0, 3, 3, 3, 3}, 3, deg_a});

    const std::vector<Point2> deg_b = {{{1, 3}}, {{0, 5}}, {{5, 5}},
                                       {{3, 0}}, {{8, 0}}, {{7, 3}}};
    t.push_back({"degree_b_k1", {0, 0, 1, 2, 3, 4, 5, 5}, 1, deg_b});
    t.push_back({"degree_b_k2", {0, 0, 0, 1.25, 2.5, 3.75, 5, 5, 5}, 2, deg_b});
    t.push_back({"degree_b_k3",
                 {0, 0, 0, 0, 5.0 / 3.0, 10.0 / 3.0, 5, 5, 5, 5},
                 3,
                 deg_b});
    t.push_back({"degree_b_k4", {0, 0, 0, 0, 0, 2.5, 5, 5, 5, 5, 5}, 4, deg_b});
    t.push_back({"degree_b_k5", {0, 0, 0, 0, 0, 0, 5, 5, 5, 5, 5, 5}, 5, deg_b});

    const std::vector<double> local_knots = {0, 0, 0, 0, 1, 2, 3, 4, 4, 4, 4};
    std::vector<Point2> local = {{{0, 4}}, {{5, 4}},  {{5, 8}}, {{11, 7.5}},
                                 {{6, 2}}, {{12, 0}}, {{2, 0}}};
    t.push_back({"local_p1", local_knots, 3, local});
    local[4] = {{9, 3}};
    t.push_back({"local_p2", local_knots, 3, local});
    local[4] = {{12, 4}};
    t.push_back({"local_p3", local_knots, 3, local});

    const std::vector<double> mirror_u1 = {0, 0, 0, 0, 1, 2, 3, 3, 3, 3};
    t.push_back({"mirror_1",
                 mirror_u1,
                 3,
                 {{{4, 0}}, {{0, 11}}, {{6, 14}}, {{10, 14}}, {{16, 11}}, {{12, 0}}}});
    const std::vector<Point2> mirror_p2 = {{{4, 0}},   {{0, 11}},  {{8, 14}},
                                           {{8, 14}},  {{16, 11}}, {{12, 0}}};
    t.push_back({"mirror_2", mirror_u1, 3, mirror_p2});
    t.push_back({"mirror_3", {0, 0, 0, 0, 2, 2, 4, 4, 4, 4}, 3, mirror_p2});

    const std::vector<double> mirror_u4 = {0, 0, 0, 0, 1, 2,  3,  4,  5,
                                           6, 7, 8, 9, 10, 11, 11, 11, 11};
    const std::vector<Point2> mirror_p4 = {
        {{0, 5}}, {{0, 4}}, {{1, 4}}, {{2, 4}}, {{2, 6}}, {{4, 6}}, {{5, 5}},
        {{5, 1}}, {{4, 0}}, {{2, 0}}, {{2, 2}}, {{1, 2}}, {{0, 2}}, {{0, 1}}};
    t.push_back({"mirror_4", mirror_u4, 3, mirror_p4});
    std::vector<Point2> mirror_p5 = mirror_p4;
    mirror_p5[6] = {{5, 3}};
    mirror_p5[7] = {{5, 3}};
    t.push_back({"mirror_5", mirror_u4, 3, mirror_p5});
    t.push_back({"mirror_6",
                 {0, 0, 0, 0, 1, 2, 3, 4, 5, 5, 6, 7, 8, 9, 10, 10, 10, 10},
                 3,
                 mirror_p5});
    t.push_back({"mirror_7",
                 {0, 0, 0, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 10, 10, 10},
                 3,
                 {{{0, 2}}, {{0, 3}}, {{1, 4}}, {{3, 4}}, {{5, 4}}, {{6, 3}},
                  {{6, 2}}, {{6, 1}}, {{5, 0}}, {{3, 0}}, {{1, 0}}, {{0, 1}},
                  {{0, 2}}}});
    return t;
  }();
  return table;
}

/// Shape values exercised by the property suites: four negative-ray values,
/// their conjugates on the positive ray, and the classical limit.
inline const std::vector<Alpha>& reference_alpha_set() {
  static const std::vector<Alpha> set = {
      Alpha(-4.0), Alpha(-1.0),      Alpha(-0.5), Alpha(-0.2), Alpha(1.2),
      Alpha(1.5),  Alpha(2.0),       Alpha(5.0),  Alpha::classical()};
  return set;
}

/// The finite members of reference_alpha_set (for exact-arithmetic runs).
inline const std::vector<Alpha>& reference_finite_alpha_set() {
  static const std::vector<Alpha> set = {Alpha(-4.0), Alpha(-1.0), Alpha(-0.5),
                                         Alpha(-0.2), Alpha(1.2),  Alpha(1.5),
                                         Alpha(2.0),  Alpha(5.0)};
  return set;
}

}  // namespace alphaspline
