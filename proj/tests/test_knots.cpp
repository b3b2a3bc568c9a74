#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <alphaspline/catalog.hpp>
#include <alphaspline/knots.hpp>

using namespace alphaspline;

namespace {
const std::vector<double>& reference_nodes(const std::string& name) {
  for (const auto& entry : reference_knot_vectors())
    if (entry.name == name) return entry.nodes;
  throw std::logic_error("unknown reference vector " + name);
}
}  // namespace

TEST_CASE("construction validates order and records multiplicities") {
  const KnotVector plain(std::vector<double>{0, 1, 2, 3, 4, 5, 6});
  CHECK(plain.max_index() == 6);
  CHECK(plain.breakpoints().size() == 7);
  for (int m : plain.multiplicities()) CHECK(m == 1);

  const KnotVector open(std::vector<double>{0, 0, 0, 1, 2, 3, 3, 3});
  CHECK(open.breakpoints() == std::vector<double>{0, 1, 2, 3});
  CHECK(open.multiplicities() == std::vector<int>{3, 1, 1, 3});

  CHECK_THROWS_WITH(KnotVector(std::vector<double>{0, 2, 1}),
                    Catch::Matchers::ContainsSubstring("index 2"));
  CHECK_THROWS_AS(KnotVector(std::vector<double>{1}), std::invalid_argument);
  CHECK_THROWS_AS(KnotVector(std::vector<double>{0, std::nan("")}),
                  std::invalid_argument);
}

TEST_CASE("breakpoint expansion reproduces the nodes") {
  for (const auto& entry : reference_knot_vectors()) {
    const KnotVector knots(entry.nodes);
    std::vector<double> expanded;
    for (std::size_t q = 0; q < knots.breakpoints().size(); ++q)
      expanded.insert(expanded.end(),
                      static_cast<std::size_t>(knots.multiplicities()[q]),
                      knots.breakpoints()[q]);
    CHECK(expanded == entry.nodes);
  }
}

TEST_CASE("exact multiplicity counting") {
  const KnotVector open(reference_nodes("u4"));
  CHECK(open.multiplicity(0.0) == 3);
  CHECK(open.multiplicity(1.0) == 1);
  CHECK(open.multiplicity(0.5) == 0);
  CHECK(open.multiplicity(3.0) == 3);
}

TEST_CASE("span lookup uses the left-limit convention at the right end") {
  const KnotVector plain(reference_nodes("u0"));
  CHECK(plain.find_span(2.5) == 2);
  CHECK(plain.find_span(0.0) == 0);
  CHECK(plain.find_span(6.0) == 5);

  const KnotVector open(reference_nodes("u4"));
  CHECK(open.find_span(0.0) == 2);
  CHECK(open.find_span(3.0) == 4);
  CHECK(open.find_span(2.999999) == 4);

  CHECK_THROWS_AS(plain.find_span(-0.1), std::domain_error);
  CHECK_THROWS_AS(plain.find_span(6.1), std::domain_error);
  CHECK_THROWS_AS(KnotVector(std::vector<double>{1, 1}).find_span(1.0),
                  std::domain_error);
}

TEST_CASE("span lookup agrees with a linear scan") {
  std::mt19937 rng(7);
  for (const auto& entry : reference_knot_vectors()) {
    const KnotVector knots(entry.nodes);
    std::uniform_real_distribution<double> dist(knots.front(), knots.back());
    for (int probe = 0; probe < 1000; ++probe) {
      const double x = dist(rng);
      const int j = knots.find_span(x);
      REQUIRE(knots[j] <= x);
      REQUIRE(x < knots[j + 1]);
    }
  }
}

TEST_CASE("taxonomy of the reference vectors at degree two") {
  const KnotTaxonomy u0 = KnotVector(reference_nodes("u0")).classify(2);
  CHECK_FALSE(u0.open);
  CHECK(u0.periodic);
  CHECK(u0.uniform);
  CHECK(u0.symmetric);

  const KnotTaxonomy u3 = KnotVector(reference_nodes("u3")).classify(2);
  CHECK_FALSE(u3.uniform);

  const KnotTaxonomy u4 = KnotVector(reference_nodes("u4")).classify(2);
  CHECK(u4.open);
  CHECK_FALSE(u4.periodic);
  CHECK(u4.uniform);
  CHECK(u4.symmetric);

  const KnotTaxonomy u5 = KnotVector(reference_nodes("u5")).classify(2);
  CHECK(u5.open);
  CHECK_FALSE(u5.uniform);
  CHECK(u5.symmetric);

  CHECK_FALSE(KnotVector(std::vector<double>{0, 1, 2, 3, 3, 5, 6})
                  .is_symmetric());
}

TEST_CASE("end-node flags need enough nodes to be meaningful") {
  const KnotVector tiny(std::vector<double>{0, 0, 1, 1});
  CHECK(tiny.classify(1).open);
  const KnotTaxonomy too_high = tiny.classify(2);  // m = 3 <= 2k
  CHECK_FALSE(too_high.open);
  CHECK_FALSE(too_high.periodic);
  CHECK_THROWS_AS(tiny.classify(-1), std::invalid_argument);
}

TEST_CASE("taxonomy is invariant under increasing affine node maps") {
  for (const auto& entry : reference_knot_vectors()) {
    const KnotVector knots(entry.nodes);
    std::vector<double> mapped;
    for (double t : entry.nodes) mapped.push_back(2.5 * t - 7.0);
    const KnotVector image(mapped);
    for (int k = 1; k <= 3; ++k) {
      const KnotTaxonomy a = knots.classify(k);
      const KnotTaxonomy b = image.classify(k);
      CHECK(a.open == b.open);
      CHECK(a.periodic == b.periodic);
      CHECK(a.uniform == b.uniform);
      CHECK(a.symmetric == b.symmetric);
    }
  }
}
