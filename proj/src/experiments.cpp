#include "hbspace/experiments.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "hbspace/approx.hpp"
#include "hbspace/error.hpp"
#include "hbspace/textio.hpp"
#include "hbspace/toeplitz.hpp"

namespace hb {

namespace {

// B(1 - c) for real c in (0, 1], all arithmetic on complements.
double blaschke_real_complement(const BlaschkeSpec& spec, double c) {
  double v = 1.0;
  for (double d : spec.complements()) v *= (c - d) / (c + d - c * d);
  return std::pow(v, spec.power());
}

void check_r(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw Error(ErrorCode::InvalidArgument, "r must lie in [0, 1)");
}

}  // namespace

Curve::Curve(std::vector<double> x, std::vector<double> y, std::string label)
    : x_(std::move(x)), y_(std::move(y)), label_(std::move(label)) {
  if (x_.size() != y_.size()) throw Error(ErrorCode::InvalidArgument, "Curve: x and y differ in length");
  for (std::size_t i = 0; i < x_.size(); ++i) {
    if (!std::isfinite(x_[i]) || !std::isfinite(y_[i])) {
      throw Error(ErrorCode::InvalidArgument, "Curve '" + label_ + "': non-finite point");
    }
    if (i > 0 && !(x_[i] > x_[i - 1])) {
      throw Error(ErrorCode::InvalidArgument, "Curve '" + label_ + "': x must be strictly increasing");
    }
  }
}

std::string to_csv(std::span<const Curve> curves) {
  std::ostringstream ss;
  ss << "x,y,label\n";
  for (const Curve& c : curves) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      ss << io::format_double(c.x()[i]) << ',' << io::format_double(c.y()[i]) << ',' << c.label() << '\n';
    }
  }
  return ss.str();
}

std::string to_csv(const Curve& curve) { return to_csv(std::span<const Curve>(&curve, 1)); }

TruncatedSeries random_polynomial(std::mt19937_64& rng, int degree) {
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "random_polynomial: negative degree");
  auto unit = [&] { return 2.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53 - 1.0; };
  std::vector<cplx> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) {
    const double re = unit();
    x = cplx(re, unit());
  }
  return TruncatedSeries(std::move(c));
}

BlaschkeSpec blowup_zeros(int count) { return BlaschkeSpec::geometric(4.0, count, 1); }

std::string blowup_bspec_text(int count) {
  return "b0 * blaschke:geometric:base=4,count=" + std::to_string(count) + " ^2";
}

TruncatedSeries blowup_function(int count, int degree) {
  const BlaschkeSpec z = blowup_zeros(count);
  std::vector<cplx> c(static_cast<std::size_t>(degree) + 1);
  double weight = 1.0;
  for (double w : z.zeros()) {
    weight *= 0.5;
    double p = weight;
    for (auto& x : c) {
      x += p;
      p *= w;
    }
  }
  return TruncatedSeries(std::move(c));
}

double blowup_phi_complement(const BlaschkeSpec& inner, double c) {
  return (1.0 - c) / c * blaschke_real_complement(inner, c);
}

double kernel_combination_hb_norm_sq(const BlaschkeSpec& inner, std::span<const double> coeffs,
                                     std::span<const double> node_complements) {
  if (coeffs.size() != node_complements.size()) {
    throw Error(ErrorCode::InvalidArgument, "kernel combination: size mismatch");
  }
  std::vector<double> phi(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) phi[i] = blowup_phi_complement(inner, node_complements[i]);
  double s = 0.0;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    for (std::size_t m = 0; m < coeffs.size(); ++m) {
      const double en = node_complements[n];
      const double em = node_complements[m];
      s += coeffs[n] * coeffs[m] * (1.0 + phi[n] * phi[m]) / (en + em - en * em);
    }
  }
  return s;
}

double kernel_combination_h2_norm_sq(std::span<const double> coeffs,
                                     std::span<const double> node_complements) {
  if (coeffs.size() != node_complements.size()) {
    throw Error(ErrorCode::InvalidArgument, "kernel combination: size mismatch");
  }
  double s = 0.0;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    for (std::size_t m = 0; m < coeffs.size(); ++m) {
      const double en = node_complements[n];
      const double em = node_complements[m];
      s += coeffs[n] * coeffs[m] / (en + em - en * em);
    }
  }
  return s;
}

Curve blowup_exact_curve(int n_terms, std::span<const double> r_values) {
  if (n_terms < 1) throw Error(ErrorCode::InvalidArgument, "blowup: n_terms must be >= 1");
  const BlaschkeSpec B = blowup_zeros(n_terms);
  const auto& d = B.complements();
  std::vector<double> xs, ys;
  for (double r : r_values) {
    check_r(r);
    const double cr = 1.0 - r;
    double y = 0.0;
    double weight = 1.0;
    for (int n = 0; n < n_terms; ++n) {
      weight *= 0.5;
      const double e = cr + d[static_cast<std::size_t>(n)] - cr * d[static_cast<std::size_t>(n)];
      const double bv = blaschke_real_complement(B, e);
      y += weight * bv * bv * (1.0 - e) / e;
    }
    xs.push_back(r);
    ys.push_back(y);
  }
  return Curve(std::move(xs), std::move(ys), "blowup_exact");
}

double loglog_slope(const Curve& curve) {
  const std::size_t n = curve.size();
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "loglog_slope: need two or more points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(curve.y()[i] > 0) || !(curve.x()[i] < 1.0)) {
      throw Error(ErrorCode::InvalidArgument, "loglog_slope: need y > 0 and x < 1");
    }
    const double X = -std::log1p(-curve.x()[i]);
    const double Y = std::log(curve.y()[i]);
    sx += X;
    sy += Y;
    sxx += X * X;
    sxy += X * Y;
  }
  const double den = n * sxx - sx * sx;
  if (!(std::abs(den) > 0)) throw Error(ErrorCode::InvalidArgument, "loglog_slope: degenerate abscissae");
  return (n * sxy - sx * sy) / den;
}

Curve blowup_series_curve(const Pair& pair, const TruncatedSeries& f, std::span<const double> r_values) {
  std::vector<double> xs, ys;
  for (double r : r_values) {
    check_r(r);
    const HbElement e = make_hb_element(dilate(f, r), pair);
    xs.push_back(r);
    ys.push_back(e.fplus()[0].real());
  }
  return Curve(std::move(xs), std::move(ys), "blowup_series");
}

DivergenceCurves divergence_curves(const Pair& pair, const TruncatedSeries& f, int n_max) {
  if (n_max < 1 || n_max > pair.degree()) {
    throw Error(ErrorCode::InvalidArgument, "divergence_curves: need 1 <= n_max <= pair degree");
  }
  const auto N = static_cast<std::size_t>(n_max) + 1;
  std::vector<cplx> phic(N);
  for (std::size_t j = 0; j < N; ++j) phic[j] = std::conj(pair.phi()[j]);

  // g[k] = sum_{j<=n} f_j conj(phi_{j-k}); gm is the same with j f_j.
  std::vector<cplx> g(N), gm(N);
  std::vector<double> xs, partial, cesaro, sums;
  double h2 = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    const cplx fn = f.coeff(n);
    if (fn != cplx{}) {
      for (int k = 0; k <= n; ++k) {
        const cplx t = fn * phic[static_cast<std::size_t>(n - k)];
        g[static_cast<std::size_t>(k)] += t;
        gm[static_cast<std::size_t>(k)] += static_cast<double>(n) * t;
      }
    }
    h2 += std::norm(fn);
    if (n == 0) continue;

    double plus_s = 0.0;
    double plus_c = 0.0;
    double h2_c = 0.0;
    const double inv = 1.0 / (n + 1.0);
    for (int k = 0; k <= n; ++k) {
      const auto i = static_cast<std::size_t>(k);
      plus_s += std::norm(g[i]);
      plus_c += std::norm(g[i] - gm[i] * inv);
      const double wk = 1.0 - k * inv;
      h2_c += wk * wk * std::norm(f.coeff(k));
    }
    xs.push_back(n);
    partial.push_back(std::sqrt(h2 + plus_s));
    cesaro.push_back(std::sqrt(h2_c + plus_c));
    sums.push_back(g[0].real());
  }
  return DivergenceCurves{Curve(xs, std::move(partial), "partial_sum_norm"),
                          Curve(xs, std::move(cesaro), "cesaro_norm"),
                          Curve(xs, std::move(sums), "coefficient_sum")};
}

MonotonicityReport sarason_monotonicity_check(const Pair& pair, int trials, int degree,
                                              std::span<const double> r_grid, std::uint64_t seed) {
  if (trials < 0) throw Error(ErrorCode::InvalidArgument, "trials must be >= 0");
  MonotonicityReport rep;
  rep.seed = seed;
  rep.trials = trials;
  rep.degree = degree;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const TruncatedSeries f = random_polynomial(rng, degree);
    const double base = make_hb_element(f, pair).hb_norm();
    for (double r : r_grid) {
      check_r(r);
      const double ratio = make_hb_element(dilate(f, r), pair).hb_norm() / base;
      if (ratio > rep.max_ratio) {
        rep.max_ratio = ratio;
        rep.worst_trial = t;
        rep.worst_r = r;
      }
    }
  }
  rep.holds = rep.max_ratio <= 1.0 + 1e-8;
  return rep;
}

ContrastReport sarason_contrast(const BlaschkeSpec& zeros, std::span<const double> r_values) {
  const BlaschkeSpec inner = zeros.with_power(2);
  const auto& d = zeros.complements();

  struct Candidate {
    std::string name;
    std::vector<double> coeffs;
    std::vector<double> nodes;
  };
  std::vector<Candidate> cands;
  for (std::size_t n = 0; n < d.size(); ++n) {
    cands.push_back({"k_w" + std::to_string(n + 1), {1.0}, {d[n]}});
  }
  {
    Candidate all{"sum 2^-n k_wn", {}, {}};
    double w = 1.0;
    for (double dn : d) {
      w *= 0.5;
      all.coeffs.push_back(w);
      all.nodes.push_back(dn);
    }
    if (!d.empty()) cands.push_back(std::move(all));
  }

  ContrastReport rep;
  rep.best.ratio = 0.0;
  for (const Candidate& c : cands) {
    const double base = kernel_combination_hb_norm_sq(inner, c.coeffs, c.nodes);
    for (double r : r_values) {
      check_r(r);
      const double cr = 1.0 - r;
      std::vector<double> nodes(c.nodes.size());
      for (std::size_t i = 0; i < nodes.size(); ++i) nodes[i] = cr + c.nodes[i] - cr * c.nodes[i];
      const double ratio = std::sqrt(kernel_combination_hb_norm_sq(inner, c.coeffs, nodes) / base);
      ContrastWitness w{c.name, r, ratio};
      rep.rows.push_back(w);
      if (ratio > rep.best.ratio) rep.best = w;
    }
  }
  rep.found = rep.best.ratio > 1.0;
  return rep;
}

ToeplitzApproxResult toeplitz_approx_curve(const Pair& pair, const HbElement& f_elt,
                                           std::span<const int> n_values, double tolerance) {
  std::vector<double> xs, ys, budget, residuals;
  const TruncatedSeries& f = f_elt.f();
  const TruncatedSeries& fp = f_elt.fplus();
  for (int n : n_values) {
    const TruncatedSeries h = choose_h(pair, n);
    const TruncatedSeries diff = apply_coanalytic(h, f) - f;
    const HbElement e = make_hb_element(diff, pair, tolerance);
    const double plus_shift = (apply_coanalytic(h, fp) - fp).h2_norm_sq();
    xs.push_back(n);
    ys.push_back(e.hb_norm());
    budget.push_back(std::sqrt(diff.h2_norm_sq() + plus_shift));
    residuals.push_back(e.residual());
  }
  return ToeplitzApproxResult{Curve(std::move(xs), std::move(ys), "toeplitz_approx"), std::move(budget),
                              std::move(residuals)};
}

}  // namespace hb
