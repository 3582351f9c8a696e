#pragma once

// Toeplitz operators with analytic symbol h (multiplication) and co-analytic
// symbol conj(h) (the adjoint), acting on truncated coefficient vectors.
//
// In coefficient space T_conj(h) is upper triangular:
//   (T_conj(h) f)_k = sum_{j>=0} conj(h_j) f_{k+j}.
// Indices past deg(f) are taken as zero, which is exact for polynomials.

#include "hbspace/series.hpp"

namespace hb {

/// T_h f = h f, truncated to the given degree.
TruncatedSeries apply_analytic(const TruncatedSeries& h, const TruncatedSeries& f, int degree);

/// T_conj(h) f. The result has the degree of f.
TruncatedSeries apply_coanalytic(const TruncatedSeries& h, const TruncatedSeries& f);

/// Solves T_conj(a) x = g by back substitution from the top index down.
/// Requires a_0 real and positive (pair normalization).
///
/// Throws SingularDiagonal if a_0 <= 1e-12 max|a_k| and
/// NonRealLeadingCoefficient if Im a_0 is not negligible.
TruncatedSeries solve_coanalytic_triangular(const TruncatedSeries& a, const TruncatedSeries& g);

}  // namespace hb
