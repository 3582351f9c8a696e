#pragma once

// Truncated Taylor series on the unit disk and their boundary samples.
//
// A TruncatedSeries holds c_0..c_N. Products and quotients are truncated to
// a caller-chosen degree. BoundaryGrid holds M samples on the unit circle,
// taken at 2*pi*m/M (aligned) or 2*pi*(m + 1/2)/M (staggered). Transforms
// between the two go through an in-house radix-2 FFT.

#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace hb {

using cplx = std::complex<double>;

class TruncatedSeries {
 public:
  /// The zero series of degree 0.
  TruncatedSeries();
  explicit TruncatedSeries(std::vector<cplx> coeffs);
  TruncatedSeries(std::initializer_list<cplx> coeffs);

  static TruncatedSeries zero(int degree);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  std::span<const cplx> coeffs() const noexcept { return c_; }
  const cplx& operator[](std::size_t k) const { return c_[k]; }

  /// Coefficient k, or zero for k beyond the stored degree.
  cplx coeff(int k) const noexcept {
    return (k >= 0 && k <= degree()) ? c_[static_cast<std::size_t>(k)] : cplx{};
  }

  /// Truncates or zero-pads to the given degree.
  TruncatedSeries resized(int degree) const;

  double max_abs() const noexcept;
  double h2_norm_sq() const noexcept;
  double h2_norm() const noexcept;

 private:
  std::vector<cplx> c_;
};

TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries operator*(cplx s, const TruncatedSeries& f);

/// H^2 inner product: sum_k f_k conj(g_k).
cplx h2_inner(const TruncatedSeries& f, const TruncatedSeries& g);

enum class GridPhase { Aligned, Staggered };

class BoundaryGrid {
 public:
  explicit BoundaryGrid(std::vector<cplx> samples, GridPhase phase = GridPhase::Aligned);

  /// Samples fn(e^{i theta_m}) on an M-point grid.
  static BoundaryGrid sample(const std::function<cplx(cplx)>& fn, int size,
                             GridPhase phase = GridPhase::Aligned);

  int size() const noexcept { return static_cast<int>(s_.size()); }
  GridPhase phase() const noexcept { return phase_; }
  std::span<const cplx> samples() const noexcept { return s_; }
  const cplx& operator[](std::size_t m) const { return s_[m]; }

  double angle(int m) const noexcept;
  double max_abs() const noexcept;

 private:
  std::vector<cplx> s_;
  GridPhase phase_;
};

bool is_power_of_two(long long n) noexcept;

/// Smallest power of two M with M >= 4(N+1).
int grid_size_for(int degree);

/// Horner evaluation. Callers keep |z| <= 1.
cplx eval(const TruncatedSeries& f, cplx z) noexcept;

TruncatedSeries cauchy_product(const TruncatedSeries& f, const TruncatedSeries& g, int degree);

/// 1/f to the given degree. Throws ZeroConstantTerm when
/// |f_0| <= 1e-12 * max|f_k|.
TruncatedSeries series_reciprocal(const TruncatedSeries& f, int degree);

TruncatedSeries series_exp(const TruncatedSeries& f, int degree);

/// num/den as a series; den must have a nonzero constant term.
TruncatedSeries rational_series(const TruncatedSeries& num, const TruncatedSeries& den,
                                int degree);

/// Throws GridTooSmall unless M is a power of two with M >= 4(N+1).
BoundaryGrid to_grid(const TruncatedSeries& f, int size, GridPhase phase = GridPhase::Aligned);
TruncatedSeries from_grid(const BoundaryGrid& g, int degree);

/// max_m |f(e^{i theta_m})|; the grid is enlarged to satisfy the oversampling rule.
double sup_on_grid(const TruncatedSeries& f, int size, GridPhase phase = GridPhase::Aligned);

namespace detail {
/// In-place radix-2 DFT. Forward uses e^{-2 pi i km/M}; neither direction scales.
void fft(std::span<cplx> data, bool inverse);
void check_grid(int size, int degree);
}  // namespace detail

}  // namespace hb
