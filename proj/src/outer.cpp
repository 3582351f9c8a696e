#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "hbspace/error.hpp"
#include "hbspace/spaces.hpp"

namespace hb {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kHalfWidth = 5;  // fit window is 2K+1 samples
constexpr int kFitPoints = 2 * kHalfWidth + 1;

using Poly = std::array<double, kFitPoints>;  // coefficients in s = offset / K

// Dense solve with partial pivoting; the system is the small Vandermonde fit.
Poly solve_dense(std::array<std::array<double, kFitPoints>, kFitPoints> m, Poly rhs) {
  constexpr int n = kFitPoints;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    std::swap(m[col], m[piv]);
    std::swap(rhs[col], rhs[piv]);
    for (int r = col + 1; r < n; ++r) {
      const double f = m[r][col] / m[col][col];
      for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  Poly x{};
  for (int r = n - 1; r >= 0; --r) {
    double s = rhs[r];
    for (int c = r + 1; c < n; ++c) s -= m[r][c] * x[c];
    x[r] = s / m[r][r];
  }
  return x;
}

// Taylor coefficients of p about x: t[j] = p^{(j)}(x) / j!.
Poly taylor_at(const Poly& p, double x) {
  Poly t = p;
  for (int j = 0; j < kFitPoints; ++j) {
    for (int i = kFitPoints - 2; i >= j; --i) t[i] += x * t[i + 1];
  }
  return t;
}

double wrap_angle(double t) {
  t = std::fmod(t, kTwoPi);
  return t < 0 ? t + kTwoPi : t;
}

// Signed distance from a to b on the circle, in (-pi, pi].
double circle_offset(double a, double b) {
  double d = std::fmod(a - b, kTwoPi);
  if (d > std::numbers::pi) d -= kTwoPi;
  if (d <= -std::numbers::pi) d += kTwoPi;
  return d;
}

}  // namespace

namespace detail {

std::vector<BoundaryZero> locate_boundary_zeros(std::span<const double> w, GridPhase phase) {
  const int M = static_cast<int>(w.size());
  std::vector<BoundaryZero> zeros;
  if (M < 2 * kFitPoints) return zeros;
  const double wmax = *std::max_element(w.begin(), w.end());
  if (!(wmax > 0)) return zeros;
  const double step = kTwoPi / M;
  const double shift = phase == GridPhase::Staggered ? 0.5 : 0.0;
  auto at = [&](int m) { return w[static_cast<std::size_t>(((m % M) + M) % M)]; };

  std::array<std::array<double, kFitPoints>, kFitPoints> vander{};
  for (int i = 0; i < kFitPoints; ++i) {
    const double s = static_cast<double>(i - kHalfWidth) / kHalfWidth;
    double p = 1.0;
    for (int j = 0; j < kFitPoints; ++j, p *= s) vander[i][j] = p;
  }

  for (int m = 0; m < M; ++m) {
    const double v = at(m);
    if (v > at(m - 1) || v > at(m + 1) || v > 1e-3 * wmax) continue;

    Poly rhs{};
    for (int i = 0; i < kFitPoints; ++i) rhs[i] = at(m + i - kHalfWidth);
    const Poly p = solve_dense(vander, rhs);

    // Newton on p' from the sampled minimum.
    double x = 0.0;
    for (int it = 0; it < 60; ++it) {
      const Poly t = taylor_at(p, x);
      if (!(t[2] > 0)) break;
      const double dx = t[1] / (2.0 * t[2]);
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    if (!(std::abs(x * kHalfWidth) <= 1.0)) continue;

    const Poly t = taylor_at(p, x);
    const double pmin = std::max(t[0], 0.0);
    // Curvature per grid step squared: c2 in s-units divided by K^2.
    const double c2_step = std::abs(t[2]) / (kHalfWidth * kHalfWidth);
    if (!(pmin <= 1e-12 * wmax) || !(pmin <= 1e-6 * c2_step)) continue;

    int order = 0;
    for (int j = 1; j <= 3; ++j) {
      if (std::abs(t[static_cast<std::size_t>(2 * j)]) > 1e-8 * wmax) {
        order = j;
        break;
      }
    }
    if (order == 0) continue;

    const double angle = wrap_angle((m + shift + x * kHalfWidth) * step);
    const bool dup = std::any_of(zeros.begin(), zeros.end(), [&](const BoundaryZero& z) {
      return std::abs(circle_offset(z.angle, angle)) < 0.5 * step;
    });
    if (!dup) zeros.push_back({angle, order});
  }
  return zeros;
}

}  // namespace detail

TruncatedSeries outer_from_modulus_squared(const BoundaryGrid& grid, int degree) {
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "outer: negative degree");
  detail::check_grid(grid.size(), degree);
  const int M = grid.size();

  double scale = 0.0;
  for (const cplx& s : grid.samples()) scale = std::max(scale, std::abs(s));
  std::vector<double> w(static_cast<std::size_t>(M));
  for (int m = 0; m < M; ++m) {
    const cplx s = grid[static_cast<std::size_t>(m)];
    if (std::abs(s.imag()) > 1e-12 * scale || s.real() < -1e-12 * scale) {
      throw Error(ErrorCode::InvalidArgument, "outer: samples must be nonnegative reals");
    }
    w[static_cast<std::size_t>(m)] = std::max(s.real(), 0.0);
  }
  const double wmax = *std::max_element(w.begin(), w.end());
  if (!(wmax > 0)) throw Error(ErrorCode::NotLogIntegrable, "outer: modulus vanishes identically");
  const double floor = 1e-14 * wmax;
  const auto low = std::count_if(w.begin(), w.end(), [&](double v) { return v <= floor; });
  if (10 * low >= M) {
    throw Error(ErrorCode::NotLogIntegrable,
                "outer: modulus is negligible on at least 10% of the circle (b looks extreme)");
  }

  const auto zeros = detail::locate_boundary_zeros(w, grid.phase());
  const double step = kTwoPi / M;

  std::vector<double> smooth(w.size());
  std::vector<char> near_zero(w.size(), 0);
  for (int m = 0; m < M; ++m) {
    const double th = grid.angle(m);
    double fac = 1.0;
    for (const auto& z : zeros) {
      const double d = circle_offset(th, z.angle);
      if (std::abs(d) < 0.125 * step) near_zero[static_cast<std::size_t>(m)] = 1;
      fac *= std::pow(std::abs(2.0 * std::sin(0.5 * d)), 2 * z.order);
    }
    if (!near_zero[static_cast<std::size_t>(m)]) smooth[static_cast<std::size_t>(m)] = w[static_cast<std::size_t>(m)] / fac;
  }
  // Samples sitting on a zero carry no information after division; rebuild
  // them by Lagrange interpolation through the 2K neighbours.
  for (int m = 0; m < M; ++m) {
    if (!near_zero[static_cast<std::size_t>(m)]) continue;
    double v = 0.0;
    for (int i = -kHalfWidth; i <= kHalfWidth; ++i) {
      if (i == 0) continue;
      double lag = 1.0;
      for (int j = -kHalfWidth; j <= kHalfWidth; ++j) {
        if (j == 0 || j == i) continue;
        lag *= static_cast<double>(-j) / (i - j);
      }
      v += lag * smooth[static_cast<std::size_t>(((m + i) % M + M) % M)];
    }
    smooth[static_cast<std::size_t>(m)] = v;
  }

  const double smax = *std::max_element(smooth.begin(), smooth.end());
  const double sfloor = 1e-14 * smax;
  std::vector<cplx> u(w.size());
  for (std::size_t m = 0; m < w.size(); ++m) u[m] = 0.5 * std::log(std::max(smooth[m], sfloor));

  const TruncatedSeries uh = from_grid(BoundaryGrid(std::move(u), grid.phase()), degree);
  std::vector<cplx> L(static_cast<std::size_t>(degree) + 1);
  L[0] = uh[0].real();
  for (int k = 1; k <= degree; ++k) L[static_cast<std::size_t>(k)] = 2.0 * uh[static_cast<std::size_t>(k)];
  TruncatedSeries g = series_exp(TruncatedSeries(std::move(L)), degree);

  for (const auto& z : zeros) {
    const TruncatedSeries factor{cplx{1.0}, -std::polar(1.0, -z.angle)};
    for (int j = 0; j < z.order; ++j) g = cauchy_product(g, factor, degree);
  }
  return g;
}

}  // namespace hb
