#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include <alphaspline/alpha.hpp>

using namespace alphaspline;

TEST_CASE("shape values accept only the two admissible rays") {
  CHECK_NOTHROW(Alpha(2.0));
  CHECK_NOTHROW(Alpha(-0.5));
  CHECK_NOTHROW(Alpha(1.0000001));
  CHECK_THROWS_AS(Alpha(0.0), std::invalid_argument);
  CHECK_THROWS_AS(Alpha(1.0), std::invalid_argument);
  CHECK_THROWS_AS(Alpha(0.5), std::invalid_argument);
  CHECK_THROWS_AS(Alpha(std::numeric_limits<double>::quiet_NaN()),
                  std::invalid_argument);
  CHECK_THROWS_AS(Alpha(std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
  CHECK(Alpha::classical().is_classical());
  CHECK_THROWS_AS(Alpha::classical().value(), std::logic_error);
}

TEST_CASE("parsing accepts decimals, fractions, and the classical tokens") {
  CHECK(*Alpha::parse("2") == Alpha(2.0));
  CHECK(*Alpha::parse("-1/2") == Alpha(-0.5));
  CHECK(*Alpha::parse("8/7") == Alpha(8.0 / 7.0));
  CHECK(Alpha::parse("inf")->is_classical());
  CHECK(Alpha::parse("INF")->is_classical());
  CHECK(Alpha::parse("classical")->is_classical());
  CHECK_FALSE(Alpha::parse("0.5").has_value());
  CHECK_FALSE(Alpha::parse("1").has_value());
  CHECK_FALSE(Alpha::parse("abc").has_value());
  CHECK_FALSE(Alpha::parse("3/0").has_value());
  CHECK_FALSE(Alpha::parse("").has_value());
}

TEST_CASE("labels are short round-trip forms") {
  CHECK(Alpha(2.0).label() == "2");
  CHECK(Alpha(-0.5).label() == "-0.5");
  CHECK(Alpha::classical().label() == "inf");
}

TEST_CASE("conjugation pairs the two rays and fixes the classical value") {
  CHECK(conjugate(Alpha(2.0)) == Alpha(-1.0));
  CHECK(conjugate(Alpha(-4.0)) == Alpha(5.0));
  CHECK(conjugate(conjugate(Alpha(1.5))) == Alpha(1.5));
  CHECK(conjugate(Alpha::classical()).is_classical());
}

TEST_CASE("reparametrization takes its textbook values") {
  const Span unit(0.0, 1.0);
  CHECK(phi(Alpha(2.0), 0.5, unit) == 2.0 / 3.0);
  CHECK(phi(Alpha(-1.0), 0.5, unit) == 1.0 / 3.0);
  CHECK(phi(Alpha(5.0), 0.75, unit) == 15.0 / 19.0);
  CHECK(phi(Alpha::classical(), 2.0, Span(1.0, 3.0)) == 0.5);
}

TEST_CASE("reparametrization vanishes outside the half-open span") {
  const Span s(0.25, 1.5);
  for (const Alpha& a : {Alpha(2.0), Alpha(-0.5), Alpha::classical()}) {
    CHECK(phi(a, 0.2, s) == 0.0);
    CHECK(phi(a, 1.5, s) == 0.0);  // right end excluded
    CHECK(phi(a, 2.0, s) == 0.0);
    CHECK(phi(a, 0.25, s) == 0.0);  // ramp starts at zero
    CHECK(phi(a, 1.0, s) > 0.0);
  }
}

TEST_CASE("closed ramp hits the endpoints exactly") {
  const double spans[][2] = {{0.0, 1.0}, {0.1, 0.3}, {-2.5, 7.0}, {1e-3, 2e-3}};
  for (const auto& ab : spans) {
    for (const Alpha& a :
         {Alpha(2.0), Alpha(-1.0 / 3.0), Alpha(-4.0), Alpha(1.0 + 1e-9),
          Alpha::classical()}) {
      CHECK(detail::closed_weight(a, ab[0], ab[0], ab[1]) == 0.0);
      CHECK(detail::closed_weight(a, ab[1], ab[0], ab[1]) == 1.0);
    }
  }
}

TEST_CASE("closed ramp is strictly increasing across the span") {
  const Span s(0.0, 3.0);
  for (const Alpha& a : {Alpha(2.0), Alpha(-0.5), Alpha(-4.0), Alpha(5.0)}) {
    double prev = -1.0;
    for (int q = 0; q <= 64; ++q) {
      const double x = 3.0 * q / 64.0;
      const double w = detail::closed_weight(a, x, s.a, s.b);
      CHECK(w > prev);
      CHECK(w >= 0.0);
      CHECK(w <= 1.0);
      prev = w;
    }
  }
}

TEST_CASE("barycentric form agrees with the span form") {
  const Span s(0.5, 2.75);
  for (const Alpha& a : {Alpha(2.0), Alpha(-0.5), Alpha(-1.0 / 3.0)}) {
    for (int q = 0; q < 32; ++q) {
      const double l = q / 32.0;  // l = 1 excluded: support rule differs there
      const double x = s.a + l * (s.b - s.a);
      CHECK_THAT(phi(a, x, s),
                 Catch::Matchers::WithinAbs(phi_barycentric(a, l), 1e-14));
    }
    CHECK(phi_barycentric(a, 0.0) == 0.0);
    CHECK(phi_barycentric(a, 1.0) == 1.0);
  }
  CHECK(phi_barycentric(Alpha::classical(), 0.375) == 0.375);
  CHECK_THROWS_AS(phi_barycentric(Alpha(2.0), -0.1), std::domain_error);
  CHECK_THROWS_AS(phi_barycentric(Alpha(2.0), 1.1), std::domain_error);
}

TEST_CASE("one-sided endpoint slopes follow the closed forms") {
  const Span unit(0.0, 1.0);
  CHECK(phi_derivative_limit(Alpha(2.0), unit, SpanEnd::a_plus) == 2.0);
  CHECK(phi_derivative_limit(Alpha(2.0), unit, SpanEnd::b_minus) == 0.5);
  CHECK(phi_derivative_limit(Alpha(2.0), unit, SpanEnd::a_minus) == 0.0);
  CHECK(phi_derivative_limit(Alpha(2.0), unit, SpanEnd::b_plus) == 0.0);
  CHECK(phi_derivative_limit(Alpha::classical(), Span(1.0, 3.0),
                             SpanEnd::a_plus) == 0.5);
  CHECK(phi_derivative_limit(Alpha::classical(), Span(1.0, 3.0),
                             SpanEnd::b_minus) == 0.5);

  // The inner slopes swap under conjugation.
  for (const Alpha& a : {Alpha(-4.0), Alpha(1.5), Alpha(5.0)}) {
    CHECK_THAT(phi_derivative_limit(a, unit, SpanEnd::a_plus),
               Catch::Matchers::WithinRel(
                   phi_derivative_limit(conjugate(a), unit, SpanEnd::b_minus),
                   1e-15));
  }

  // And they match finite differences from inside the span.
  for (const Alpha& a : {Alpha(2.0), Alpha(-0.5)}) {
    const double h = 1e-7;
    const double fd_a = (phi(a, h, unit) - 0.0) / h;
    const double fd_b = (detail::closed_weight(a, 1.0, 0.0, 1.0) -
                         detail::closed_weight(a, 1.0 - h, 0.0, 1.0)) /
                        h;
    CHECK_THAT(fd_a, Catch::Matchers::WithinRel(
                         phi_derivative_limit(a, unit, SpanEnd::a_plus), 1e-5));
    CHECK_THAT(fd_b, Catch::Matchers::WithinRel(
                         phi_derivative_limit(a, unit, SpanEnd::b_minus), 1e-5));
  }
}

TEST_CASE("spans validate their bounds") {
  CHECK_THROWS_AS(Span(1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Span(2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Span(0.0, std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
}
