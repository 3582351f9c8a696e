#include <random>

#include "helpers.hpp"
#include "hbspace/error.hpp"
#include "hbspace/toeplitz.hpp"

using namespace hb;
using testing::max_diff;
using testing::ts;

TEST_CASE("apply_analytic") {
  const TruncatedSeries f{0.3, cplx(1, -2), 4.0};
  CHECK(max_diff(apply_analytic({1.0}, f, 2), f) == 0.0);
  CHECK(max_diff(apply_analytic({0.0, 1.0}, {1.0, 2.0}, 2), oracle::Vec{0.0, 1.0, 2.0}) == 0.0);
  const auto bk = apply_analytic(ts(oracle::b0_coeffs(40)), ts(oracle::kernel(0.5, 40)), 40);
  CHECK(std::abs(eval(bk, 0.3) - oracle::b0(0.3) / (1.0 - 0.5 * 0.3)) < 1e-9);
}

TEST_CASE("apply_coanalytic") {
  CHECK(max_diff(apply_coanalytic({0.0, 1.0}, {1.0, 2.0, 3.0}), oracle::Vec{2.0, 3.0, 0.0}) == 0.0);
  const TruncatedSeries h{cplx(0.2, 0.7), 3.0, -1.0};
  CHECK(max_diff(apply_coanalytic(h, {1.0}), oracle::Vec{cplx(0.2, -0.7)}) == 0.0);

  const auto k = oracle::kernel(0.5, 60);
  const auto r = apply_coanalytic(ts(oracle::b0_coeffs(60)), ts(k));
  CHECK(r.degree() == 60);
  oracle::Vec expect(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) expect[i] = std::conj(oracle::b0(0.5)) * k[i];
  CHECK(max_diff(r, expect) < 1e-8);

  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    const auto hh = oracle::random_vec(rng, 1 + t);
    const auto f = oracle::random_vec(rng, 40);
    const auto dense = oracle::matvec(oracle::coanalytic_matrix(hh, 40), f);
    CHECK(max_diff(apply_coanalytic(ts(hh), ts(f)), dense) < 1e-12);
  }
}

TEST_CASE("solve_coanalytic_triangular") {
  const TruncatedSeries g{cplx(1, 2), -3.0, 0.5};
  CHECK(max_diff(solve_coanalytic_triangular({1.0}, g), g) == 0.0);
  CHECK(max_diff(solve_coanalytic_triangular({2.0}, {4.0, 6.0}), oracle::Vec{2.0, 3.0}) == 0.0);

  // a0 x = T_conj(b0) k_{1/2} gives x = conj(phi0(1/2)) k_{1/2} = k_{1/2}.
  const int N = 80;
  const auto k = ts(oracle::kernel(0.5, N));
  const auto rhs = apply_coanalytic(ts(oracle::b0_coeffs(N)), k);
  const auto x = solve_coanalytic_triangular(ts(oracle::a0_coeffs(N)), rhs);
  CHECK(max_diff(x, k) < 1e-8);

  CHECK_THROWS_AS(solve_coanalytic_triangular({0.0, 1.0}, g), Error);
  try {
    solve_coanalytic_triangular({-1.0, 1.0}, g);
    FAIL("expected SingularDiagonal");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularDiagonal);
  }
  try {
    solve_coanalytic_triangular({cplx(1.0, 0.5)}, g);
    FAIL("expected NonRealLeadingCoefficient");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonRealLeadingCoefficient);
  }
}

TEST_CASE("solver agrees with dense elimination") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    auto a = oracle::random_vec(rng, 10);
    a[0] = 1.0 + std::abs(a[0]);
    const auto g = oracle::random_vec(rng, 30);
    const auto x = solve_coanalytic_triangular(ts(a), ts(g));
    const auto dense = oracle::dense_solve(oracle::coanalytic_matrix(a, 30), g);
    CHECK(max_diff(x, dense) <= 1e-9 * (1.0 + oracle::norm2(dense)));
  }
}

TEST_CASE("adjoint identity") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto h = ts(oracle::random_vec(rng, 1 + t % 64));
    const auto f = ts(oracle::random_vec(rng, 1 + (t * 7) % 64));
    const int N = h.degree() + f.degree();
    const auto g = ts(oracle::random_vec(rng, N));
    const cplx lhs = h2_inner(apply_analytic(h, f, N), g);
    const cplx rhs = h2_inner(f.resized(N), apply_coanalytic(h, g));
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("co-analytic symbols commute and compose") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    const auto h = ts(oracle::random_vec(rng, 1 + t % 20));
    const auto k = ts(oracle::random_vec(rng, 1 + (t * 3) % 20));
    const auto f = ts(oracle::random_vec(rng, 50));
    const auto lhs = apply_coanalytic(h, apply_coanalytic(k, f));
    const auto rhs = apply_coanalytic(cauchy_product(h, k, f.degree()), f);
    CHECK(max_diff(lhs, rhs) <= 1e-10 * std::max(1.0, rhs.max_abs()));
    CHECK(max_diff(lhs, apply_coanalytic(k, apply_coanalytic(h, f))) <= 1e-10 * std::max(1.0, rhs.max_abs()));
  }
}

TEST_CASE("contraction") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const int d = 1 + t % 16;
    auto h = ts(oracle::random_vec(rng, d));
    h = (1.0 / oracle::sampled_sup(testing::vec(h), grid_size_for(d))) * h;
    const auto f = ts(oracle::random_vec(rng, 64));
    CHECK(apply_coanalytic(h, f).h2_norm() <= f.h2_norm() * (1.0 + 1e-10));
  }
}

TEST_CASE("eigenvector property") {
  std::mt19937_64 rng(6);
  for (double w : {0.0, 0.3, -0.5, 0.7, 0.9}) {
    for (const cplx wc : {cplx(w), std::polar(std::abs(w), 0.8)}) {
      const int N = 400;
      const auto h = ts(oracle::random_vec(rng, 12));
      const auto k = oracle::kernel(wc, N);
      const auto r = apply_coanalytic(h, ts(k));
      const cplx hw = std::conj(oracle::horner(testing::vec(h), wc));
      // Compare below the truncation edge, where the tail has not yet reached.
      double d = 0.0;
      for (int i = 0; i + 12 <= N; ++i) d = std::max(d, std::abs(r[static_cast<std::size_t>(i)] - hw * k[i]));
      CHECK(d < 1e-12);
    }
  }
}
