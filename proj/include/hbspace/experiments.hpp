#pragma once

// Reproducible numerical experiments: the dilation blow-up for b = b0 B^2,
// divergence of partial sums in H(b), the monotone-dilation property for b0
// and its failure for b0 B^2, and Toeplitz approximation T_conj(h_n) f -> f.

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "hbspace/blaschke.hpp"
#include "hbspace/series.hpp"
#include "hbspace/spaces.hpp"

namespace hb {

class Curve {
 public:
  /// x strictly increasing, equal lengths, all finite.
  Curve(std::vector<double> x, std::vector<double> y, std::string label);

  const std::vector<double>& x() const noexcept { return x_; }
  const std::vector<double>& y() const noexcept { return y_; }
  const std::string& label() const noexcept { return label_; }
  std::size_t size() const noexcept { return x_.size(); }

 private:
  std::vector<double> x_;
  std::vector<double> y_;
  std::string label_;
};

/// "x,y,label" header, then one row per point of every curve, %.17g.
std::string to_csv(std::span<const Curve> curves);
std::string to_csv(const Curve& curve);

/// Coefficients uniform in the complex box [-1,1] x [-1,1].
TruncatedSeries random_polynomial(std::mt19937_64& rng, int degree);

// --- data of the blow-up construction ------------------------------------

/// Zeros w_n = 1 - 4^{-n}, n = 1..count, power 1.
BlaschkeSpec blowup_zeros(int count);

/// BSpec text for b0 B^2 with `count` zeros.
std::string blowup_bspec_text(int count);

/// f = sum_{n=1}^{count} 2^{-n} k_{w_n}, truncated to the given degree.
TruncatedSeries blowup_function(int count, int degree);

/// phi = phi0 * inner at the real point 1 - c, from the complement c, for
/// b = b0 * inner with inner a Blaschke product (its power included).
double blowup_phi_complement(const BlaschkeSpec& inner, double c);

/// Exact ||sum c_n k_{x_n}||^2_{H(b)} for b = b0 * inner and real nodes
/// x_n = 1 - e_n: sum_{n,m} c_n c_m (1 + phi(x_n) phi(x_m)) / (e_n + e_m - e_n e_m).
/// Pass an empty spec for b0 alone.
double kernel_combination_hb_norm_sq(const BlaschkeSpec& inner, std::span<const double> coeffs,
                                     std::span<const double> node_complements);

/// Same Gram sum without the phi term: the H^2 norm squared.
double kernel_combination_h2_norm_sq(std::span<const double> coeffs,
                                     std::span<const double> node_complements);

/// y(r) = sum_{n=1}^{n_terms} 2^{-n} B(r w_n)^2 r w_n / (1 - r w_n), B on
/// the zeros 1 - 4^{-n}, n <= n_terms. Evaluated on complements.
Curve blowup_exact_curve(int n_terms, std::span<const double> r_values);

/// Least-squares slope of log y against log 1/(1 - x).
double loglog_slope(const Curve& curve);

/// y(r) = Re (f_r)+(0) through the truncated pipeline.
Curve blowup_series_curve(const Pair& pair, const TruncatedSeries& f, std::span<const double> r_values);

struct DivergenceCurves {
  Curve partial_norms;     // ||s_n f||_{H(b)}
  Curve cesaro_norms;      // ||sigma_n f||_{H(b)}
  Curve coefficient_sums;  // Re sum_{j<=n} f_j conj(phi_j)
};

/// n = 1..n_max. s_n f and sigma_n f are polynomials, so their f+ is
/// T_conj(phi) applied exactly; both are updated incrementally in n.
/// Requires n_max <= pair degree.
DivergenceCurves divergence_curves(const Pair& pair, const TruncatedSeries& f, int n_max);

struct MonotonicityReport {
  std::uint64_t seed = 0;
  int trials = 0;
  int degree = 0;
  double max_ratio = 0.0;     // max over trials and r of ||f_r|| / ||f||
  int worst_trial = -1;
  double worst_r = 0.0;
  bool holds = false;         // max_ratio <= 1 + 1e-8
};

MonotonicityReport sarason_monotonicity_check(const Pair& pair, int trials, int degree,
                                              std::span<const double> r_grid, std::uint64_t seed);

struct ContrastWitness {
  std::string function;  // e.g. "k_w3" or "sum 2^-n k_wn"
  double r = 0.0;
  double ratio = 0.0;    // ||f_r||_{H(b)} / ||f||_{H(b)}
};

struct ContrastReport {
  ContrastWitness best;
  bool found = false;    // best.ratio > 1
  std::vector<ContrastWitness> rows;
};

/// With B the product over `zeros` (power 1), searches kernels k_{w_n} and the
/// combination sum 2^{-n} k_{w_n} for a dilation that increases the
/// H(b0 B^2) norm. Norms are the exact Gram sums.
ContrastReport sarason_contrast(const BlaschkeSpec& zeros, std::span<const double> r_values);

struct ToeplitzApproxResult {
  Curve curve;                 // ||T_conj(h_n) f - f||_{H(b)}
  std::vector<double> budget;  // sqrt(||T f - f||^2 + ||T f+ - f+||^2), same n
  std::vector<double> residuals;
};

ToeplitzApproxResult toeplitz_approx_curve(const Pair& pair, const HbElement& f_elt,
                                           std::span<const int> n_values, double tolerance = 1e-8);

}  // namespace hb
