#include "hbspace/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hbspace/error.hpp"

namespace hb {

namespace {

void require_finite(std::span<const cplx> v, const char* what) {
  for (const cplx& c : v) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw Error(ErrorCode::InvalidArgument, std::string(what) + ": non-finite entry");
    }
  }
}

void require_degree(int degree, const char* what) {
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, std::string(what) + ": negative degree");
}

double phase_offset(GridPhase phase) { return phase == GridPhase::Staggered ? 0.5 : 0.0; }

}  // namespace

TruncatedSeries::TruncatedSeries() : c_(1) {}

TruncatedSeries::TruncatedSeries(std::vector<cplx> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw Error(ErrorCode::InvalidArgument, "TruncatedSeries: no coefficients");
  require_finite(c_, "TruncatedSeries");
}

TruncatedSeries::TruncatedSeries(std::initializer_list<cplx> coeffs)
    : TruncatedSeries(std::vector<cplx>(coeffs)) {}

TruncatedSeries TruncatedSeries::zero(int degree) {
  require_degree(degree, "TruncatedSeries::zero");
  return TruncatedSeries(std::vector<cplx>(static_cast<std::size_t>(degree) + 1));
}

TruncatedSeries TruncatedSeries::resized(int degree) const {
  require_degree(degree, "TruncatedSeries::resized");
  std::vector<cplx> c(static_cast<std::size_t>(degree) + 1);
  std::copy_n(c_.begin(), std::min(c.size(), c_.size()), c.begin());
  return TruncatedSeries(std::move(c));
}

double TruncatedSeries::max_abs() const noexcept {
  double m = 0.0;
  for (const cplx& c : c_) m = std::max(m, std::abs(c));
  return m;
}

double TruncatedSeries::h2_norm_sq() const noexcept {
  double s = 0.0;
  for (const cplx& c : c_) s += std::norm(c);
  return s;
}

double TruncatedSeries::h2_norm() const noexcept { return std::sqrt(h2_norm_sq()); }

TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) {
  const int n = std::max(f.degree(), g.degree());
  std::vector<cplx> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = f.coeff(k) + g.coeff(k);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) {
  const int n = std::max(f.degree(), g.degree());
  std::vector<cplx> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = f.coeff(k) - g.coeff(k);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(cplx s, const TruncatedSeries& f) {
  std::vector<cplx> c(f.coeffs().begin(), f.coeffs().end());
  for (cplx& x : c) x *= s;
  return TruncatedSeries(std::move(c));
}

cplx h2_inner(const TruncatedSeries& f, const TruncatedSeries& g) {
  cplx s{};
  const int n = std::min(f.degree(), g.degree());
  for (int k = 0; k <= n; ++k) s += f.coeff(k) * std::conj(g.coeff(k));
  return s;
}

BoundaryGrid::BoundaryGrid(std::vector<cplx> samples, GridPhase phase)
    : s_(std::move(samples)), phase_(phase) {
  if (!is_power_of_two(static_cast<long long>(s_.size()))) {
    throw Error(ErrorCode::GridTooSmall, "BoundaryGrid: size must be a power of two, got " +
                                             std::to_string(s_.size()));
  }
  require_finite(s_, "BoundaryGrid");
}

BoundaryGrid BoundaryGrid::sample(const std::function<cplx(cplx)>& fn, int size, GridPhase phase) {
  if (!is_power_of_two(size)) {
    throw Error(ErrorCode::GridTooSmall, "grid size must be a power of two");
  }
  std::vector<cplx> s(static_cast<std::size_t>(size));
  const double off = phase_offset(phase);
  for (int m = 0; m < size; ++m) {
    const double theta = 2.0 * std::numbers::pi * (m + off) / size;
    s[static_cast<std::size_t>(m)] = fn(std::polar(1.0, theta));
  }
  return BoundaryGrid(std::move(s), phase);
}

double BoundaryGrid::angle(int m) const noexcept {
  return 2.0 * std::numbers::pi * (m + phase_offset(phase_)) / size();
}

double BoundaryGrid::max_abs() const noexcept {
  double m = 0.0;
  for (const cplx& c : s_) m = std::max(m, std::abs(c));
  return m;
}

bool is_power_of_two(long long n) noexcept { return n > 0 && (n & (n - 1)) == 0; }

int grid_size_for(int degree) {
  require_degree(degree, "grid_size_for");
  long long m = 1;
  while (m < 4LL * (degree + 1)) m <<= 1;
  return static_cast<int>(m);
}

cplx eval(const TruncatedSeries& f, cplx z) noexcept {
  cplx acc{};
  for (int k = f.degree(); k >= 0; --k) acc = acc * z + f[static_cast<std::size_t>(k)];
  return acc;
}

TruncatedSeries cauchy_product(const TruncatedSeries& f, const TruncatedSeries& g, int degree) {
  require_degree(degree, "cauchy_product");
  std::vector<cplx> c(static_cast<std::size_t>(degree) + 1);
  const int df = std::min(f.degree(), degree);
  for (int i = 0; i <= df; ++i) {
    const cplx fi = f[static_cast<std::size_t>(i)];
    if (fi == cplx{}) continue;
    const int jmax = std::min(g.degree(), degree - i);
    for (int j = 0; j <= jmax; ++j) c[static_cast<std::size_t>(i + j)] += fi * g[static_cast<std::size_t>(j)];
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_reciprocal(const TruncatedSeries& f, int degree) {
  require_degree(degree, "series_reciprocal");
  const double tol = 1e-12 * f.max_abs();
  const cplx f0 = f[0];
  if (std::abs(f0) <= tol || f0 == cplx{}) {
    throw Error(ErrorCode::ZeroConstantTerm, "series_reciprocal: constant term is (numerically) zero");
  }
  std::vector<cplx> g(static_cast<std::size_t>(degree) + 1);
  const cplx inv0 = 1.0 / f0;
  g[0] = inv0;
  for (int k = 1; k <= degree; ++k) {
    cplx s{};
    const int jmax = std::min(k, f.degree());
    for (int j = 1; j <= jmax; ++j) s += f[static_cast<std::size_t>(j)] * g[static_cast<std::size_t>(k - j)];
    g[static_cast<std::size_t>(k)] = -s * inv0;
  }
  return TruncatedSeries(std::move(g));
}

TruncatedSeries series_exp(const TruncatedSeries& f, int degree) {
  require_degree(degree, "series_exp");
  std::vector<cplx> g(static_cast<std::size_t>(degree) + 1);
  g[0] = std::exp(f[0]);
  // g' = f' g, coefficientwise: k g_k = sum_{j=1}^{k} j f_j g_{k-j}.
  std::vector<cplx> jf(static_cast<std::size_t>(std::min(f.degree(), degree)) + 1);
  for (std::size_t j = 1; j < jf.size(); ++j) jf[j] = static_cast<double>(j) * f[j];
  for (int k = 1; k <= degree; ++k) {
    cplx s{};
    const int jmax = std::min(k, static_cast<int>(jf.size()) - 1);
    for (int j = 1; j <= jmax; ++j) s += jf[static_cast<std::size_t>(j)] * g[static_cast<std::size_t>(k - j)];
    g[static_cast<std::size_t>(k)] = s / static_cast<double>(k);
  }
  return TruncatedSeries(std::move(g));
}

TruncatedSeries rational_series(const TruncatedSeries& num, const TruncatedSeries& den, int degree) {
  return cauchy_product(num, series_reciprocal(den, degree), degree);
}

namespace detail {

void check_grid(int size, int degree) {
  if (!is_power_of_two(size) || static_cast<long long>(size) < 4LL * (degree + 1)) {
    throw Error(ErrorCode::GridTooSmall,
                "grid of size " + std::to_string(size) + " cannot carry degree " +
                    std::to_string(degree) + " (need a power of two >= 4(N+1))");
  }
}

}  // namespace detail

BoundaryGrid to_grid(const TruncatedSeries& f, int size, GridPhase phase) {
  detail::check_grid(size, f.degree());
  std::vector<cplx> buf(static_cast<std::size_t>(size));
  const double off = phase_offset(phase);
  for (int k = 0; k <= f.degree(); ++k) {
    cplx c = f[static_cast<std::size_t>(k)];
    if (off != 0.0) c *= std::polar(1.0, 2.0 * std::numbers::pi * k * off / size);
    buf[static_cast<std::size_t>(k)] = c;
  }
  detail::fft(buf, /*inverse=*/true);
  return BoundaryGrid(std::move(buf), phase);
}

TruncatedSeries from_grid(const BoundaryGrid& g, int degree) {
  detail::check_grid(g.size(), degree);
  std::vector<cplx> buf(g.samples().begin(), g.samples().end());
  detail::fft(buf, /*inverse=*/false);
  const double off = phase_offset(g.phase());
  const double scale = 1.0 / g.size();
  std::vector<cplx> c(static_cast<std::size_t>(degree) + 1);
  for (int k = 0; k <= degree; ++k) {
    cplx v = buf[static_cast<std::size_t>(k)] * scale;
    if (off != 0.0) v *= std::polar(1.0, -2.0 * std::numbers::pi * k * off / g.size());
    c[static_cast<std::size_t>(k)] = v;
  }
  return TruncatedSeries(std::move(c));
}

double sup_on_grid(const TruncatedSeries& f, int size, GridPhase phase) {
  const int m = std::max(size, grid_size_for(f.degree()));
  return to_grid(f, m, phase).max_abs();
}

}  // namespace hb
