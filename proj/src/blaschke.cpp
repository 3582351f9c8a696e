#include "hbspace/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hbspace/error.hpp"

namespace hb {

namespace {

void check_power(int power) {
  if (power < 1) throw Error(ErrorCode::InvalidArgument, "Blaschke power must be >= 1");
}

cplx ipow(cplx v, int p) {
  cplx r{1.0};
  for (int i = 0; i < p; ++i) r *= v;
  return r;
}

// Factor value at the real point x = 1 - c for the zero with complement d.
double real_factor(double c, double d) { return (c - d) / (c + d - c * d); }

}  // namespace

BlaschkeSpec::BlaschkeSpec(std::vector<double> zeros, std::vector<double> deltas, int power)
    : zeros_(std::move(zeros)), deltas_(std::move(deltas)), power_(power) {
  check_power(power_);
  for (std::size_t k = 0; k < deltas_.size(); ++k) {
    if (!(deltas_[k] > 0.0 && deltas_[k] < 1.0)) {
      throw Error(ErrorCode::InvalidArgument, "Blaschke zeros must lie in (0, 1)");
    }
    if (k > 0 && !(deltas_[k] < deltas_[k - 1])) {
      throw Error(ErrorCode::InvalidArgument, "Blaschke zeros must be strictly increasing");
    }
  }
}

BlaschkeSpec::BlaschkeSpec(std::vector<double> zeros, int power) : power_(power) {
  check_power(power);
  std::vector<double> d(zeros.size());
  for (std::size_t k = 0; k < zeros.size(); ++k) {
    if (!(zeros[k] > 0.0 && zeros[k] < 1.0)) {
      throw Error(ErrorCode::InvalidArgument, "Blaschke zeros must lie in (0, 1)");
    }
    if (k > 0 && !(zeros[k] > zeros[k - 1])) {
      throw Error(ErrorCode::InvalidArgument, "Blaschke zeros must be strictly increasing");
    }
    d[k] = 1.0 - zeros[k];
  }
  zeros_ = std::move(zeros);
  deltas_ = std::move(d);
}

BlaschkeSpec BlaschkeSpec::geometric(double base, int count, int power) {
  if (!(base > 1.0) || !std::isfinite(base)) {
    throw Error(ErrorCode::InvalidArgument, "geometric Blaschke base must exceed 1");
  }
  if (count < 0) throw Error(ErrorCode::InvalidArgument, "geometric Blaschke count must be >= 0");
  std::vector<double> d(static_cast<std::size_t>(count));
  for (int n = 1; n <= count; ++n) d[static_cast<std::size_t>(n - 1)] = std::pow(base, -n);
  if (count > 0 && !(d.back() > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "geometric Blaschke zeros underflow");
  }
  return from_complements(std::move(d), power);
}

BlaschkeSpec BlaschkeSpec::from_complements(std::vector<double> deltas, int power) {
  std::vector<double> z(deltas.size());
  for (std::size_t k = 0; k < deltas.size(); ++k) z[k] = 1.0 - deltas[k];
  return BlaschkeSpec(std::move(z), std::move(deltas), power);
}

BlaschkeSpec BlaschkeSpec::with_power(int power) const { return BlaschkeSpec(zeros_, deltas_, power); }

BlaschkeSpec BlaschkeSpec::truncated(int n) const {
  if (n < 0 || n > count()) throw Error(ErrorCode::InvalidArgument, "truncated: bad zero count");
  return BlaschkeSpec(std::vector<double>(zeros_.begin(), zeros_.begin() + n),
                      std::vector<double>(deltas_.begin(), deltas_.begin() + n), power_);
}

cplx blaschke_eval(const BlaschkeSpec& spec, cplx z) { return blaschke_eval_complement(spec, 1.0 - z); }

cplx blaschke_eval_complement(const BlaschkeSpec& spec, cplx c) {
  cplx v{1.0};
  for (double d : spec.complements()) v *= (c - d) / (c + d * (1.0 - c));
  return ipow(v, spec.power());
}

double pseudo_hyperbolic(cplx z, cplx w) {
  if (!(std::abs(z) < 1.0) || !(std::abs(w) < 1.0)) {
    throw Error(ErrorCode::OutsideDisk, "pseudo_hyperbolic: points must lie in the open disk");
  }
  return std::abs(z - w) / std::abs(1.0 - std::conj(w) * z);
}

TruncatedSeries blaschke_series(const BlaschkeSpec& spec, int degree) {
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "blaschke_series: negative degree");
  std::vector<cplx> f(static_cast<std::size_t>(degree) + 1);
  f[0] = 1.0;
  std::vector<cplx> g(f.size());
  for (int rep = 0; rep < spec.power(); ++rep) {
    for (double w : spec.zeros()) {
      g[0] = w * f[0];
      for (std::size_t k = 1; k < f.size(); ++k) g[k] = w * g[k - 1] + w * f[k] - f[k - 1];
      std::swap(f, g);
    }
  }
  return TruncatedSeries(std::move(f));
}

double min_modulus_on_segment(const BlaschkeSpec& spec, double w, double r_lo, double r_hi,
                              int samples) {
  if (samples < 2) throw Error(ErrorCode::InvalidArgument, "need at least two samples");
  if (!(0.0 <= r_lo && r_lo <= r_hi && r_hi <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "segment must satisfy 0 <= r_lo <= r_hi <= 1");
  }
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    const double r = r_lo + (r_hi - r_lo) * i / (samples - 1);
    best = std::min(best, std::abs(blaschke_eval(spec, r * w)));
  }
  return best;
}

std::vector<GapFloor> lemma_bp_floor(const BlaschkeSpec& spec, int samples_per_gap) {
  if (samples_per_gap < 2) throw Error(ErrorCode::InvalidArgument, "need at least two samples per gap");
  const auto& d = spec.complements();
  std::vector<GapFloor> out;
  for (std::size_t n = 0; n + 1 < d.size(); ++n) {
    GapFloor gf{static_cast<int>(n) + 1, std::numeric_limits<double>::infinity(), 0.0};
    for (int i = 0; i < samples_per_gap; ++i) {
      // r runs uniformly from w_n to w_{n+1}; so does its complement.
      const double cr = d[n] + (d[n + 1] - d[n]) * i / (samples_per_gap - 1);
      const double c = cr + d[n] - cr * d[n];  // 1 - r w_n
      double v = 1.0;
      for (double dk : d) v *= real_factor(c, dk);
      v = std::pow(std::abs(v), spec.power());
      if (v < gf.minimum) {
        gf.minimum = v;
        gf.argmin_r = 1.0 - cr;
      }
    }
    out.push_back(gf);
  }
  return out;
}

LemmaConstants lemma_constants(const BlaschkeSpec& spec) {
  const auto& d = spec.complements();
  if (d.size() < 2) throw Error(ErrorCode::InvalidArgument, "lemma constants need two or more zeros");
  LemmaConstants lc{};
  lc.alpha = std::numeric_limits<double>::infinity();
  lc.beta = 0.0;
  for (std::size_t k = 0; k + 1 < d.size(); ++k) {
    const double q = d[k + 1] / d[k];
    lc.alpha = std::min(lc.alpha, q);
    lc.beta = std::max(lc.beta, q);
  }
  lc.ratio_condition = lc.alpha > 0.0 && lc.beta < 0.5;
  lc.separation = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < d.size(); ++j) {
    double p = 1.0;
    for (std::size_t k = 0; k < d.size(); ++k) {
      if (k != j) p *= std::abs(d[j] - d[k]) / (d[k] + d[j] - d[k] * d[j]);
    }
    lc.separation = std::min(lc.separation, p);
  }
  lc.half_gap = (1.0 - 2.0 * lc.beta) / 2.0;
  lc.first_zero_term = spec.zeros().front() * lc.alpha / 3.0;
  return lc;
}

}  // namespace hb
