#pragma once

// Finite Blaschke products with zeros on (0, 1), normalized so every factor
// (w - z)/(1 - w z) is positive at the origin.
//
// Zeros are stored together with their complements delta = 1 - w. Zeros of
// the form 1 - base^{-n} keep delta exact even once w itself rounds to 1.0,
// and evaluation near z = 1 runs entirely on complements:
//   (w - z)/(1 - w z) = (c - delta)/(c + delta (1 - c)),  c = 1 - z.

#include <vector>

#include "hbspace/series.hpp"

namespace hb {

class BlaschkeSpec {
 public:
  /// Zeros strictly increasing in (0, 1); power >= 1.
  explicit BlaschkeSpec(std::vector<double> zeros, int power = 1);

  /// Zeros w_n = 1 - base^{-n}, n = 1..count. base > 1.
  static BlaschkeSpec geometric(double base, int count, int power = 1);

  /// Builds from complements 1 - w_n, strictly decreasing in (0, 1).
  static BlaschkeSpec from_complements(std::vector<double> deltas, int power = 1);

  const std::vector<double>& zeros() const noexcept { return zeros_; }
  const std::vector<double>& complements() const noexcept { return deltas_; }
  int power() const noexcept { return power_; }
  int count() const noexcept { return static_cast<int>(zeros_.size()); }

  BlaschkeSpec with_power(int power) const;
  /// The first n zeros.
  BlaschkeSpec truncated(int n) const;

 private:
  BlaschkeSpec(std::vector<double> zeros, std::vector<double> deltas, int power);

  std::vector<double> zeros_;
  std::vector<double> deltas_;
  int power_;
};

/// B(z)^power.
cplx blaschke_eval(const BlaschkeSpec& spec, cplx z);

/// B(1 - c)^power, computed from the complement c without forming 1 - c.
cplx blaschke_eval_complement(const BlaschkeSpec& spec, cplx c);

/// rho(z, w) = |z - w| / |1 - conj(w) z|. Throws OutsideDisk unless |z|, |w| < 1.
double pseudo_hyperbolic(cplx z, cplx w);

/// Taylor coefficients of B^power to degree N, one factor at a time through
/// g_k = w g_{k-1} + w f_k - f_{k-1}.
TruncatedSeries blaschke_series(const BlaschkeSpec& spec, int degree);

struct GapFloor {
  int n;           // gap index, 1-based: r ranges over [w_n, w_{n+1}]
  double minimum;  // min over the r-grid of |B(r w_n)|
  double argmin_r;
};

/// For n = 1..count-1, minimum of |B(r w_n)| over samples_per_gap uniform
/// points r in [w_n, w_{n+1}].
std::vector<GapFloor> lemma_bp_floor(const BlaschkeSpec& spec, int samples_per_gap);

/// min of |B(r w)| over `samples` uniform points r in [r_lo, r_hi].
double min_modulus_on_segment(const BlaschkeSpec& spec, double w, double r_lo, double r_hi,
                              int samples);

struct LemmaConstants {
  double alpha;             // min (1 - w_{k+1})/(1 - w_k)
  double beta;              // max of the same ratio
  bool ratio_condition;     // 0 < alpha and beta < 1/2
  double separation;        // min_j prod_{k != j} rho(w_k, w_j)
  double half_gap;          // (1 - 2 beta)/2
  double first_zero_term;   // w_1 alpha / 3
};

/// Requires at least two zeros.
LemmaConstants lemma_constants(const BlaschkeSpec& spec);

}  // namespace hb
