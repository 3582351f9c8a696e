#pragma once

#include <doctest.h>

#include "hbspace/series.hpp"
#include "oracles.hpp"

namespace testing {

inline hb::TruncatedSeries ts(const oracle::Vec& v) { return hb::TruncatedSeries(v); }

inline oracle::Vec vec(const hb::TruncatedSeries& f) {
  return oracle::Vec(f.coeffs().begin(), f.coeffs().end());
}

/// max_k |f_k - g_k|, missing entries read as zero.
inline double max_diff(const hb::TruncatedSeries& f, const oracle::Vec& g) {
  double d = 0.0;
  const std::size_t n = std::max(static_cast<std::size_t>(f.degree()) + 1, g.size());
  for (std::size_t k = 0; k < n; ++k) {
    const hb::cplx gk = k < g.size() ? g[k] : hb::cplx{};
    d = std::max(d, std::abs(f.coeff(static_cast<int>(k)) - gk));
  }
  return d;
}

inline double max_diff(const hb::TruncatedSeries& f, const hb::TruncatedSeries& g) {
  return max_diff(f, vec(g));
}

}  // namespace testing
