#pragma once

// Constructive polynomial approximation in H(b) for non-extreme b.
//
// Given f in H(b) and eps > 0: take polynomial g1, g2 close to f, f+ in H^2;
// pick h in a H^infinity, outer, |h| = min(1, n|a|), with h(0) close enough
// to 1 that T_conj(h) barely moves f and f+; truncate f to a polynomial p;
// then q = T_conj(h) p is a polynomial with ||f - q||_{H(b)} <= 6 eps.

#include <string>

#include "hbspace/series.hpp"
#include "hbspace/spaces.hpp"
#include "hbspace/textio.hpp"

namespace hb {

/// sigma_n(f): coefficient k is (1 - k/(n+1)) f_k for k <= n. n may exceed
/// deg f, in which case the result keeps the degree of f.
TruncatedSeries cesaro_mean(const TruncatedSeries& f, int n);

/// Smallest n with ||f - sigma_n(f)||_{H^2} <= eps; past deg f the error is
/// sqrt(sum k^2 |f_k|^2)/(n+1), so the search is closed-form there.
int cesaro_order_for(const TruncatedSeries& f, double eps);

struct OuterChoice {
  TruncatedSeries h;   // coefficients 0..N of h, |h| = min(1, n|a|) on the circle
  TruncatedSeries h0;  // coefficients 0..N of h/a, |h/a| = min(n, 1/|a|)
  double h0_sup;       // max of |h/a| over the grid samples
  double h_sup;        // max of |h| over the grid samples
  int grid_size;
};

/// Builds h = a h0 with h0 the outer function of modulus min(n, 1/|a|),
/// whose logarithm stays bounded even where a vanishes. Everything is done on
/// a grid of at least 64 n points (capped at 2^22): boundary samples of h have
/// modulus min(1, n|a|) there, and the first N+1 Fourier coefficients are
/// kept. T_conj(h) applied to data of degree <= N sees only those.
OuterChoice choose_h_factored(const Pair& pair, int n_outer);

TruncatedSeries choose_h(const Pair& pair, int n_outer);

/// 2 (1 - Re h(0)) (sup |g|)^2 with sup taken on an M-point grid (enlarged
/// to the oversampling rule if needed). Throws NotContraction if
/// sup |h| > 1 + 1e-8 there.
double toeplitz_tail_bound(const TruncatedSeries& h, const TruncatedSeries& g, int size);

struct ApproxBudget {
  double f_shift;      // ||f - T_conj(h) f||_{H^2}
  double fplus_shift;  // ||f+ - T_conj(h) f+||_{H^2}
  double truncation;   // ||h/a||_inf ||f - p||_{H^2}
};

struct ApproxReport {
  double epsilon = 0.0;
  int n_outer = 0;
  int g1_order = 0;
  int g2_order = 0;
  double g1_sup = 0.0;  // grid sups with the safety factor applied
  double g2_sup = 0.0;
  double h_over_a_sup = 0.0;
  /// 2(1 - Re h(0)) <= eps^2/(g1_sup^2 + g2_sup^2) held at the chosen n_outer
  bool tail_condition = false;
  TruncatedSeries h;
  TruncatedSeries p;
  TruncatedSeries q;
  double achieved_error = 0.0;
  ApproxBudget budget{};
  /// achieved_error <= 6 eps, by measurement
  bool certified = false;
};

struct ApproxOptions {
  int max_log2_outer = 20;
  double sup_safety = 1.001;
  double tolerance = 1e-8;
};

/// Runs the four-step construction. n_outer doubles from 1 until either the
/// tail condition holds or both measured shifts are within 3 eps.
/// Throws BudgetExceeded if no n_outer <= 2^max_log2_outer qualifies.
ApproxReport approximate(const HbElement& f_elt, const Pair& pair, double epsilon,
                         const ApproxOptions& options = {});

io::Document report_document(const ApproxReport& report);

}  // namespace hb
