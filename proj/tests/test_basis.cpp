#include <catch2/catch_amalgamated.hpp>

#include <alphaspline/basis.hpp>
#include <alphaspline/catalog.hpp>

using namespace alphaspline;

namespace {
BasisSpec u4_spec(Alpha alpha) {
  return BasisSpec(KnotVector(std::vector<double>{0, 0, 0, 1, 2, 3, 3, 3}), 2,
                   alpha);
}
}  // namespace

TEST_CASE("basis family dimensions") {
  const BasisSpec spec = u4_spec(Alpha(2.0));
  CHECK(spec.degree() == 2);
  CHECK(spec.last_index() == 4);
  CHECK(spec.size() == 5);
  CHECK(spec.alpha() == Alpha(2.0));
  CHECK(spec.knots().max_index() == 7);
  CHECK_THROWS_AS(BasisSpec(KnotVector(std::vector<double>{0, 1}), 1, Alpha(2.0)),
                  std::invalid_argument);  // n = m - k - 1 < 0
}

TEST_CASE("degree-zero functions are span indicators") {
  const BasisSpec spec(KnotVector(std::vector<double>{0, 1}), 0, Alpha(2.0));
  CHECK(eval_basis_single(spec, 0, 0.5) == 1.0);
  CHECK(eval_basis_single(spec, 0, 0.0) == 1.0);
  CHECK(eval_basis_single(spec, 0, 1.0) == 1.0);  // left-limit convention

  const BasisSpec steps(KnotVector(std::vector<double>{0, 1, 2, 3, 4, 5, 6}), 0,
                        Alpha(-1.0));
  CHECK(eval_basis_single(steps, 2, 2.5) == 1.0);
  CHECK(eval_basis_single(steps, 3, 2.5) == 0.0);
  CHECK(eval_basis_single(steps, 2, 3.0) == 0.0);
}

TEST_CASE("frozen rational value at a generic point") {
  // family over (0,0,0,1,2,3,3,3), degree 2, shape value 2, index 1 at 1/2:
  // the exact recurrence gives 28/45.
  CHECK_THAT(eval_basis_single(u4_spec(Alpha(2.0)), 1, 0.5),
             Catch::Matchers::WithinAbs(28.0 / 45.0, 1e-14));
}

TEST_CASE("open vectors start and end with exact interpolation weights") {
  for (const Alpha& alpha : reference_alpha_set()) {
    const BasisSpec spec = u4_spec(alpha);
    CHECK(eval_basis_single(spec, 0, 0.0) == 1.0);
    for (int i = 1; i <= 4; ++i) CHECK(eval_basis_single(spec, i, 0.0) == 0.0);
    CHECK(eval_basis_single(spec, 4, 3.0) == 1.0);
    for (int i = 0; i < 4; ++i) CHECK(eval_basis_single(spec, i, 3.0) == 0.0);

    const BasisValues at_start = eval_basis_all(spec, 0.0);
    CHECK(at_start.first_index == 0);
    CHECK(at_start.values[0] == 1.0);
    CHECK(at_start.values[1] == 0.0);
    CHECK(at_start.values[2] == 0.0);
  }
}

TEST_CASE("span-local evaluation agrees with single evaluation everywhere") {
  for (const auto& entry : reference_knot_vectors()) {
    const KnotVector knots(entry.nodes);
    for (int k = 1; k <= 3; ++k) {
      if (knots.max_index() - k - 1 < 0) continue;
      const BasisSpec spec(knots, k, Alpha(2.0));
      for (int q = 0; q <= 50; ++q) {
        const double x =
            knots.front() + (knots.back() - knots.front()) * q / 50.0;
        const BasisValues all = eval_basis_all(spec, x);
        for (int i = 0; i <= spec.last_index(); ++i)
          CHECK_THAT(all.value_of(i),
                     Catch::Matchers::WithinAbs(eval_basis_single(spec, i, x),
                                                1e-14));
      }
    }
  }
}

TEST_CASE("window sums are one on full-window spans") {
  const BasisSpec spec(KnotVector(std::vector<double>{0, 1, 2, 3, 4, 5, 6}), 2,
                       Alpha(-1.0));
  const BasisValues at = eval_basis_all(spec, 2.5);
  CHECK(at.values.size() == 3);
  double sum = 0.0;
  for (double v : at.values) {
    CHECK(v > 0.0);
    sum += v;
  }
  CHECK_THAT(sum, Catch::Matchers::WithinAbs(1.0, 1e-12));
}

TEST_CASE("evaluation rejects bad indices and points") {
  const BasisSpec spec = u4_spec(Alpha(2.0));
  CHECK_THROWS_AS(eval_basis_single(spec, -1, 0.5), std::out_of_range);
  CHECK_THROWS_AS(eval_basis_single(spec, 5, 0.5), std::out_of_range);
  CHECK_THROWS_AS(eval_basis_single(spec, 0, -0.5), std::domain_error);
  CHECK_THROWS_AS(eval_basis_all(spec, 3.5), std::domain_error);
}

TEST_CASE("endpoint derivative closed forms at degree two") {
  // shape value 2 over (0,0,0,1,2,3,3,3): start factor k a/((a-1) span) = 4,
  // end factor k (a-1)/(a span) = 1.
  const EndpointDerivatives d = endpoint_derivatives(u4_spec(Alpha(2.0)));
  CHECK(d.at_start == std::vector<double>{-4.0, 4.0, 0.0, 0.0, 0.0});
  CHECK(d.at_end == std::vector<double>{0.0, 0.0, 0.0, -1.0, 1.0});

  const EndpointDerivatives dc = endpoint_derivatives(u4_spec(Alpha::classical()));
  CHECK(dc.at_start == std::vector<double>{-2.0, 2.0, 0.0, 0.0, 0.0});
  CHECK(dc.at_end == std::vector<double>{0.0, 0.0, 0.0, -2.0, 2.0});

  CHECK_THROWS_AS(
      endpoint_derivatives(BasisSpec(
          KnotVector(std::vector<double>{0, 1, 2, 3, 4, 5, 6}), 2, Alpha(2.0))),
      std::domain_error);
}

TEST_CASE("single-span families reduce to the explicit closed form") {
  const Span s(-1.0, 2.0);
  std::vector<double> nodes{-1, -1, -1, -1, 2, 2, 2, 2};
  const BasisSpec spec(KnotVector(nodes), 3, Alpha(-0.5));
  for (double x : {-1.0, -0.25, 0.5, 1.75, 2.0}) {
    const std::vector<double> closed = bernstein_closed_form(3, Alpha(-0.5), x, s);
    REQUIRE(closed.size() == 4);
    double sum = 0.0;
    for (int i = 0; i <= 3; ++i) {
      sum += closed[static_cast<std::size_t>(i)];
      CHECK_THAT(closed[static_cast<std::size_t>(i)],
                 Catch::Matchers::WithinAbs(eval_basis_single(spec, i, x), 1e-14));
    }
    CHECK_THAT(sum, Catch::Matchers::WithinAbs(1.0, 1e-13));
  }
  CHECK(bernstein_closed_form(3, Alpha(-0.5), -1.0, s) ==
        std::vector<double>{1.0, 0.0, 0.0, 0.0});
  CHECK(bernstein_closed_form(3, Alpha(-0.5), 2.0, s) ==
        std::vector<double>{0.0, 0.0, 0.0, 1.0});
}

TEST_CASE("mirrored evaluation equals the conjugate partner") {
  const BasisSpec spec = u4_spec(Alpha(-1.0));
  // frozen exact values at x = 7/10 (mirror point 23/10):
  //   index 2 -> 196/459, index 3 -> 4228/7803, index 4 -> 9/289
  const struct {
    int i;
    double value;
  } frozen[] = {{2, 196.0 / 459.0}, {3, 4228.0 / 7803.0}, {4, 9.0 / 289.0}};
  for (const auto& f : frozen) {
    CHECK_THAT(symmetry_partner(spec, f.i, 0.7),
               Catch::Matchers::WithinAbs(f.value, 1e-13));
    CHECK_THAT(eval_basis_single(spec, f.i, 3.0 - 0.7),
               Catch::Matchers::WithinAbs(f.value, 1e-13));
  }

  CHECK_THROWS_AS(
      symmetry_partner(BasisSpec(KnotVector(std::vector<double>{0, 1, 2, 3, 3, 5, 6}),
                                 2, Alpha(2.0)),
                       0, 1.0),
      std::domain_error);
}

TEST_CASE("knot averages interleave the domain") {
  const std::vector<double> xi =
      knot_average_abscissae(KnotVector(std::vector<double>{0, 0, 0, 1, 2, 3, 3, 3}), 2);
  CHECK(xi == std::vector<double>{0.0, 0.5, 1.5, 2.5, 3.0});
}
