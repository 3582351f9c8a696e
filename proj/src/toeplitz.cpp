#include "hbspace/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "hbspace/error.hpp"

namespace hb {

TruncatedSeries apply_analytic(const TruncatedSeries& h, const TruncatedSeries& f, int degree) {
  return cauchy_product(h, f, degree);
}

TruncatedSeries apply_coanalytic(const TruncatedSeries& h, const TruncatedSeries& f) {
  const int n = f.degree();
  const int dh = h.degree();
  std::vector<cplx> hc(static_cast<std::size_t>(std::min(dh, n)) + 1);
  for (std::size_t j = 0; j < hc.size(); ++j) hc[j] = std::conj(h[j]);

  std::vector<cplx> r(static_cast<std::size_t>(n) + 1);
  const auto fc = f.coeffs();
  for (int k = 0; k <= n; ++k) {
    cplx s{};
    const int jmax = std::min(static_cast<int>(hc.size()) - 1, n - k);
    for (int j = 0; j <= jmax; ++j) s += hc[static_cast<std::size_t>(j)] * fc[static_cast<std::size_t>(k + j)];
    r[static_cast<std::size_t>(k)] = s;
  }
  return TruncatedSeries(std::move(r));
}

TruncatedSeries solve_coanalytic_triangular(const TruncatedSeries& a, const TruncatedSeries& g) {
  const double scale = a.max_abs();
  const cplx a0 = a[0];
  if (std::abs(a0.imag()) > 1e-12 * std::max(scale, 1e-300)) {
    throw Error(ErrorCode::NonRealLeadingCoefficient, "solve_coanalytic_triangular: a_0 is not real");
  }
  if (!(a0.real() > 1e-12 * scale)) {
    throw Error(ErrorCode::SingularDiagonal, "solve_coanalytic_triangular: a_0 is not positive");
  }
  const double diag = a0.real();

  const int n = g.degree();
  std::vector<cplx> ac(static_cast<std::size_t>(std::min(a.degree(), n)) + 1);
  for (std::size_t j = 0; j < ac.size(); ++j) ac[j] = std::conj(a[j]);

  std::vector<cplx> x(static_cast<std::size_t>(n) + 1);
  for (int k = n; k >= 0; --k) {
    cplx s = g[static_cast<std::size_t>(k)];
    const int jmax = std::min(static_cast<int>(ac.size()) - 1, n - k);
    for (int j = 1; j <= jmax; ++j) s -= ac[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(k + j)];
    x[static_cast<std::size_t>(k)] = s / diag;
  }
  return TruncatedSeries(std::move(x));
}

}  // namespace hb
