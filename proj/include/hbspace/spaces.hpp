#pragma once

// Pairs (b, a), the companion f+ and the H(b) norm for non-extreme b.
//
// For b in the unit ball of H^infinity with log(1 - |b|^2) integrable on the
// circle, a is the outer function with a(0) > 0 and |a|^2 + |b|^2 = 1 there.
// f+ is the unique H^2 function with T_conj(b) f = T_conj(a) f+, and
//   ||f||_{H(b)}^2 = ||f||_{H^2}^2 + ||f+||_{H^2}^2.

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hbspace/series.hpp"

namespace hb {

/// (sqrt(5) - 1) / 2
inline constexpr double kGoldenTau = 0.618033988749894848204586834366;

/// Outer function g with |g|^2 = w on the grid and g(0) > 0.
///
/// Zeros of w on the circle are located from the samples, divided out as
/// |1 - e^{-i t0} z|^{2m} factors and multiplied back as (1 - e^{-i t0} z)^m,
/// so the FFT only ever sees a smooth log-modulus. Remaining samples are
/// floored at 1e-14 max(w) before taking logarithms.
///
/// Throws NotLogIntegrable if 10% or more of the samples sit at or below the
/// floor, and InvalidArgument for negative or complex samples.
TruncatedSeries outer_from_modulus_squared(const BoundaryGrid& w, int degree);

struct BoundaryZero {
  double angle;  // radians in [0, 2 pi)
  int order;     // w vanishes like |theta - angle|^{2 order}
};

namespace detail {
std::vector<BoundaryZero> locate_boundary_zeros(std::span<const double> w, GridPhase phase);
}

/// The triple (b, a, phi = b/a) at a fixed truncation degree.
class Pair {
 public:
  Pair(TruncatedSeries b, TruncatedSeries a, TruncatedSeries phi, int grid_size,
       double identity_defect, double product_defect);

  const TruncatedSeries& b() const noexcept { return b_; }
  const TruncatedSeries& a() const noexcept { return a_; }
  const TruncatedSeries& phi() const noexcept { return phi_; }
  int degree() const noexcept { return b_.degree(); }
  int grid_size() const noexcept { return grid_size_; }

  /// max over the grid of | |a|^2 + |b|^2 - 1 |
  double identity_defect() const noexcept { return identity_defect_; }
  /// max_k |(a phi)_k - b_k|
  double product_defect() const noexcept { return product_defect_; }

 private:
  TruncatedSeries b_;
  TruncatedSeries a_;
  TruncatedSeries phi_;
  int grid_size_;
  double identity_defect_;
  double product_defect_;
};

/// Builds the pair from b's Taylor coefficients, sampling b on the grid
/// through its truncated series.
Pair pair_from_b(const TruncatedSeries& b, int degree, int grid_size, double tolerance = 1e-8);

/// Builds the pair from b's Taylor coefficients and its exact boundary values.
/// Use this when the truncated series of b is a poor proxy on the circle
/// (Blaschke factors with zeros close to 1).
///
/// Throws NotInUnitBall if sup|b| > 1 + 1e-10 on the grid, NotLogIntegrable
/// if 1 - |b|^2 vanishes on 10% or more of the grid, and ResidualTooLarge if
/// either pair identity misses the tolerance.
Pair pair_from_b(const TruncatedSeries& b, const BoundaryGrid& b_boundary, int degree,
                 double tolerance = 1e-8);

/// Reassembles a pair from stored coefficients and re-checks its identities.
Pair pair_from_coefficients(TruncatedSeries b, TruncatedSeries a, TruncatedSeries phi,
                            int grid_size, double tolerance = 1e-8);

/// Cauchy kernel k_w(z) = 1/(1 - conj(w) z). Throws OutsideDisk if |w| >= 1.
TruncatedSeries cauchy_kernel(cplx w, int degree);

/// f_r(z) = f(r z), r in [0, 1].
TruncatedSeries dilate(const TruncatedSeries& f, double r);

class HbElement {
 public:
  HbElement(TruncatedSeries f, TruncatedSeries fplus, double residual);

  const TruncatedSeries& f() const noexcept { return f_; }
  const TruncatedSeries& fplus() const noexcept { return fplus_; }
  /// ||T_conj(a) f+ - T_conj(b) f||_{H^2}
  double residual() const noexcept { return residual_; }
  double hb_norm_sq() const noexcept { return hb_norm_sq_; }
  double hb_norm() const noexcept;

 private:
  TruncatedSeries f_;
  TruncatedSeries fplus_;
  double residual_;
  double hb_norm_sq_;
};

/// f+ by triangular solve against the pair's a. deg(f) must not exceed the
/// pair degree. Throws ResidualTooLarge if the solve residual exceeds
/// tolerance * max(1, ||T_conj(b) f||).
HbElement make_hb_element(const TruncatedSeries& f, const Pair& pair, double tolerance = 1e-8);

/// f+ = T_conj(phi) f, the second route. Exact for polynomials.
TruncatedSeries fplus_via_phi(const TruncatedSeries& f, const TruncatedSeries& phi);

/// sum_k |f_k|^2 + sum_k |sum_j f_{j+k} conj(phi_j)|^2 over the stored coefficients.
double hb_norm_coefficient_formula(const TruncatedSeries& f, const TruncatedSeries& phi);

/// Sarason's example b0(z) = tau z / (1 - tau^2 z) and its companion
/// a0(z) = tau (1 - z) / (1 - tau^2 z); phi0 = z / (1 - z).
TruncatedSeries sarason_b0_series(int degree);
TruncatedSeries sarason_a0_series(int degree);
cplx sarason_b0(cplx z);

std::string render_pair(const Pair& pair);
Pair parse_pair(std::string_view text, double tolerance = 1e-8);
void write_pair_file(const std::filesystem::path& path, const Pair& pair);
Pair read_pair_file(const std::filesystem::path& path, double tolerance = 1e-8);

}  // namespace hb
