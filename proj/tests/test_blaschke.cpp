#include <random>

#include "helpers.hpp"
#include "hbspace/blaschke.hpp"
#include "hbspace/error.hpp"

using namespace hb;
using testing::max_diff;

namespace {

std::vector<double> geometric_zeros(int count) {
  std::vector<double> z;
  for (int n = 1; n <= count; ++n) z.push_back(1.0 - std::pow(4.0, -n));
  return z;
}

}  // namespace

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(BlaschkeSpec({0.5, 0.5}), Error);
  CHECK_THROWS_AS(BlaschkeSpec({0.6, 0.5}), Error);
  CHECK_THROWS_AS(BlaschkeSpec({0.0}), Error);
  CHECK_THROWS_AS(BlaschkeSpec({1.0}), Error);
  CHECK_THROWS_AS(BlaschkeSpec({0.5}, 0), Error);
  CHECK_THROWS_AS(BlaschkeSpec::geometric(1.0, 3), Error);
  CHECK_THROWS_AS(BlaschkeSpec::from_complements({0.1, 0.2}), Error);

  const auto g = BlaschkeSpec::geometric(4.0, 30);
  CHECK(g.count() == 30);
  CHECK(g.complements()[29] == std::pow(4.0, -30));
  CHECK(g.zeros()[0] == 0.75);
  CHECK(g.truncated(5).count() == 5);
  CHECK(g.with_power(2).power() == 2);
  const auto c = BlaschkeSpec::from_complements({0.25, 0.0625}, 3);
  CHECK(c.zeros()[1] == 0.9375);
  CHECK(c.power() == 3);
}

TEST_CASE("blaschke_eval") {
  CHECK(std::abs(blaschke_eval(BlaschkeSpec({0.75}), 0.0) - 0.75) < 1e-15);
  CHECK(std::abs(blaschke_eval(BlaschkeSpec({0.75, 0.9375}), 0.75)) < 1e-15);
  const auto zs = geometric_zeros(8);
  const BlaschkeSpec B(zs);
  CHECK(std::abs(blaschke_eval(B, 0.86)) >= 0.01);
  CHECK(std::abs(blaschke_eval(B, 0.86) - oracle::blaschke(zs, 0.86)) < 1e-12);

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 200; ++t) {
    const cplx z = std::polar(std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));
    CHECK(std::abs(blaschke_eval(B, z) - oracle::blaschke(zs, z)) < 1e-12);
    CHECK(std::abs(blaschke_eval_complement(B, 1.0 - z) - oracle::blaschke(zs, z)) < 1e-12);
  }
}

TEST_CASE("blaschke invariants") {
  const auto zs = geometric_zeros(8);
  const BlaschkeSpec B(zs);
  const BlaschkeSpec B2 = B.with_power(2);
  double prod = 1.0;
  for (double w : zs) prod *= w;
  CHECK(std::abs(blaschke_eval(B, 0.0) - prod) < 1e-12);
  CHECK(std::abs(blaschke_eval(B2, 0.0) - prod * prod) < 1e-12);
  for (int m = 0; m < 4096; ++m) {
    const cplx z = oracle::unit_root(m, 4096);
    CHECK(std::abs(blaschke_eval(B, z)) <= 1.0 + 1e-12);
    CHECK(std::abs(blaschke_eval(B2, 0.7 * z) - std::pow(blaschke_eval(B, 0.7 * z), 2)) < 1e-12);
  }
}

TEST_CASE("pseudo_hyperbolic") {
  const cplx w(0.3, -0.4);
  CHECK(pseudo_hyperbolic(0.0, w) == doctest::Approx(0.5));
  CHECK(pseudo_hyperbolic(w, w) == 0.0);
  CHECK(pseudo_hyperbolic(0.75, 0.9375) == doctest::Approx(0.1875 / 0.296875).epsilon(1e-14));
  const cplx z(-0.2, 0.1);
  CHECK(pseudo_hyperbolic(z, w) == doctest::Approx(pseudo_hyperbolic(w, z)).epsilon(1e-14));
  CHECK_THROWS_AS(pseudo_hyperbolic(1.0, 0.0), Error);
  CHECK_THROWS_AS(pseudo_hyperbolic(0.0, cplx(0, -1)), Error);
}

TEST_CASE("blaschke_series") {
  CHECK(max_diff(blaschke_series(BlaschkeSpec({0.5}), 2), oracle::Vec{0.5, -0.75, -0.375}) < 1e-15);
  CHECK(max_diff(blaschke_series(BlaschkeSpec({}), 4), oracle::Vec{1.0}) == 0.0);

  const auto zs = geometric_zeros(8);
  const BlaschkeSpec B(zs);
  const auto s = blaschke_series(B, 512);
  CHECK(std::abs(eval(s, 0.3) - blaschke_eval(B, 0.3)) < 1e-9);

  const auto s2 = blaschke_series(B.with_power(2), 200);
  CHECK(max_diff(s2, oracle::blaschke_series(zs, 200, 2)) < 1e-10);
  CHECK(max_diff(blaschke_series(BlaschkeSpec({0.2, 0.5, 0.9}), 60), oracle::blaschke_series({0.2, 0.5, 0.9}, 60)) <
        1e-13);
}

TEST_CASE("gap floor") {
  const auto zs = geometric_zeros(8);
  const BlaschkeSpec B(zs);
  const auto floors = lemma_bp_floor(B, 64);
  REQUIRE(floors.size() == 7);
  for (const auto& g : floors) {
    CHECK(g.minimum > 0.0);
    CHECK(g.argmin_r >= zs[static_cast<std::size_t>(g.n - 1)]);
    CHECK(g.argmin_r <= zs[static_cast<std::size_t>(g.n)]);
    // Brute force on the same r-grid.
    const double wn = zs[static_cast<std::size_t>(g.n - 1)];
    const double wn1 = zs[static_cast<std::size_t>(g.n)];
    double mn = INFINITY;
    for (int i = 0; i < 64; ++i) {
      const double r = wn + (wn1 - wn) * i / 63.0;
      mn = std::min(mn, std::abs(oracle::blaschke(zs, r * wn)));
    }
    CHECK(g.minimum == doctest::Approx(mn).epsilon(1e-9));
  }

  // A single zero: dense sampling of |(w - r w)/(1 - w^2 r)| on [0.75, 1).
  const BlaschkeSpec one({0.75});
  double mn = INFINITY;
  for (int i = 0; i < 10000; ++i) {
    const double r = 0.75 + 0.25 * i / 10000.0;
    mn = std::min(mn, std::abs((0.75 - 0.75 * r) / (1.0 - 0.5625 * r)));
  }
  const double lib = min_modulus_on_segment(one, 0.75, 0.75, 1.0 - 0.25 / 10000.0, 10000);
  CHECK(lib == doctest::Approx(mn).epsilon(1e-6));
}

TEST_CASE("lemma constants and separation") {
  const BlaschkeSpec B = BlaschkeSpec::geometric(4.0, 8);
  const LemmaConstants c = lemma_constants(B);
  CHECK(c.alpha == doctest::Approx(0.25));
  CHECK(c.beta == doctest::Approx(0.25));
  CHECK(c.ratio_condition);
  CHECK(c.half_gap == doctest::Approx(0.25));
  CHECK(c.first_zero_term == doctest::Approx(0.0625));
  const auto zs = geometric_zeros(8);
  double sep = INFINITY;
  for (std::size_t j = 0; j < zs.size(); ++j) {
    double p = 1.0;
    for (std::size_t k = 0; k < zs.size(); ++k) {
      if (k != j) p *= std::abs(zs[k] - zs[j]) / (1.0 - zs[k] * zs[j]);
    }
    sep = std::min(sep, p);
  }
  CHECK(c.separation == doctest::Approx(sep).epsilon(1e-9));
  CHECK(c.separation > 0.2);
  CHECK_FALSE(lemma_constants(BlaschkeSpec({0.1, 0.2})).ratio_condition);
  CHECK_THROWS_AS(lemma_constants(BlaschkeSpec({0.5})), Error);
}
