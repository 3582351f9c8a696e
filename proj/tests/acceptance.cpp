// Acceptance run: one PASS/FAIL line per criterion. With an argument (e.g.
// "9b") only that criterion runs. Exit status is nonzero if any line fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hbspace/approx.hpp"
#include "hbspace/blaschke.hpp"
#include "hbspace/bspec.hpp"
#include "hbspace/experiments.hpp"
#include "hbspace/spaces.hpp"
#include "hbspace/toeplitz.hpp"

using namespace hb;

namespace {

constexpr double kTau = 0.618033988749894848204586834366;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::vector<double> r_grid_4(int lo, int hi) {
  std::vector<double> r;
  for (int k = lo; k <= hi; ++k) r.push_back(1.0 - std::pow(4.0, -k));
  return r;
}

const std::vector<double> kRGrid{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99};

const Pair& b0_default() {
  static const Pair p = pair_from_bspec(parse_bspec("b0"), 1024, 8192);
  return p;
}

// 100 seeded polynomials of degree 0..64.
std::vector<TruncatedSeries> corpus() {
  std::mt19937_64 rng(20240601);
  std::vector<TruncatedSeries> out;
  for (int t = 0; t < 100; ++t) {
    const int d = static_cast<int>(rng() % 65);
    out.push_back(random_polynomial(rng, d));
  }
  return out;
}

Outcome c1() {
  const auto rs = r_grid_4(3, 10);
  const Curve c = blowup_exact_curve(30, rs);
  const double s = loglog_slope(c);
  return {s >= 0.4 && s <= 0.6, fmt("slope=%.4f", s)};
}

Outcome c2() {
  const Pair p = pair_from_bspec(parse_bspec("b0"), 1024, 8192);
  double ea = std::abs(p.a()[0] - kTau);
  for (int k = 1; k <= 20; ++k) ea = std::max(ea, std::abs(p.a()[static_cast<std::size_t>(k)] + std::pow(kTau, 2 * k)));
  double ep = std::abs(p.phi()[0]);
  for (int k = 1; k <= p.degree(); ++k) ep = std::max(ep, std::abs(p.phi()[static_cast<std::size_t>(k)] - 1.0));
  const bool ok = ea <= 1e-8 && ep <= 1e-8 && p.identity_defect() <= 1e-8;
  return {ok, fmt("a_err=%.2e", ea) + fmt(" phi_err=%.2e", ep) + fmt(" identity_defect=%.2e", p.identity_defect())};
}

Outcome c3() {
  const Pair& p = b0_default();
  double worst = 0.0;
  for (const auto& f : corpus()) {
    const double eq34 = hb_norm_coefficient_formula(f, p.phi());
    const double eq21 = make_hb_element(f, p).hb_norm_sq();
    worst = std::max(worst, std::abs(eq34 - eq21) / eq21);
  }
  return {worst <= 1e-8, fmt("max_rel_diff=%.2e over 100 polynomials", worst)};
}

Outcome c4() {
  const Pair& p = b0_default();
  double worst = 0.0;
  for (const auto& f : corpus()) {
    const auto a = make_hb_element(f, p).fplus();
    const auto b = fplus_via_phi(f, p.phi());
    worst = std::max(worst, (a - b).max_abs());
  }
  const Pair p400 = pair_from_bspec(parse_bspec("b0"), 400, 4096);
  double kerr = 0.0;
  for (double w : {0.3, 0.5, 0.7, 0.9}) {
    const double phi = w / (1.0 - w);
    const double expect = (1.0 + phi * phi) / (1.0 - w * w);
    kerr = std::max(kerr, std::abs(make_hb_element(cauchy_kernel(w, 400), p400).hb_norm_sq() - expect));
  }
  return {worst <= 1e-8 && kerr <= 1e-6, fmt("fplus_route_diff=%.2e", worst) + fmt(" kernel_identity_err=%.2e", kerr)};
}

Outcome c5() {
  std::mt19937_64 rng(5);
  const int M = 1 << 14;
  int failures = 0;
  double min_gap = INFINITY;
  for (int t = 0; t < 1000; ++t) {
    // Contractions from small h(0) up to nearly 1.
    TruncatedSeries h = random_polynomial(rng, 1 + t % 12);
    h = (1.0 / (sup_on_grid(h, M) * (1.0 + 1e-5))) * h;
    const double pull = (t % 10) / 10.0;
    h = ((1.0 - pull) * h) + TruncatedSeries{pull};
    const TruncatedSeries g = random_polynomial(rng, t % 33);
    const double lhs = (apply_coanalytic(h, g) - g).h2_norm_sq();
    const double rhs = toeplitz_tail_bound(h, g, M);
    if (!(lhs <= rhs + 1e-10)) ++failures;
    min_gap = std::min(min_gap, rhs + 1e-10 - lhs);
  }
  return {failures == 0, std::to_string(failures) + " of 1000 violate" + fmt(", min_slack=%.3e", min_gap)};
}

Outcome c6() {
  std::string d;
  bool ok = true;
  for (const char* b : {"b0", "b0 * blaschke:geometric:base=4,count=6 ^2"}) {
    const Pair p = pair_from_bspec(parse_bspec(b), 400, 4096);
    const HbElement f = make_hb_element(cauchy_kernel(0.9, 400), p);
    for (double eps : {0.1, 0.05, 0.025}) {
      const ApproxReport r = approximate(f, p, eps);
      ok = ok && r.achieved_error <= 6.0 * eps;
      d += fmt(" %.3f", r.achieved_error) + fmt("/%.2f", 6.0 * eps);
    }
    d += ";";
  }
  return {ok, "achieved/bound:" + d};
}

Outcome c7() {
  const MonotonicityReport m = sarason_monotonicity_check(b0_default(), 100, 64, kRGrid, 0);
  std::vector<double> rc = kRGrid;
  const BlaschkeSpec z = blowup_zeros(8);
  for (double w : z.zeros()) rc.push_back(w);
  std::sort(rc.begin(), rc.end());
  rc.erase(std::unique(rc.begin(), rc.end()), rc.end());
  const ContrastReport c = sarason_contrast(z, rc);
  return {m.holds && c.found, fmt("b0_max_ratio=%.6f", m.max_ratio) + fmt(" contrast_ratio=%.3f", c.best.ratio) +
                                  " (" + c.best.function + fmt(", r=%.6f)", c.best.r)};
}

Outcome c8() {
  const auto floors = lemma_bp_floor(blowup_zeros(8), 64);
  double mn = INFINITY;
  for (const auto& g : floors) mn = std::min(mn, g.minimum);
  return {mn >= 1e-3 && !floors.empty(), fmt("floor=%.4f", mn)};
}

struct Divergence {
  DivergenceCurves curves;
  double ref_norm;
  double series_norm;
};

const Divergence& divergence() {
  static const Divergence d = [] {
    const int N = 4096;
    const Pair p = pair_from_bspec(parse_bspec(blowup_bspec_text(6)), N, 32768);
    const TruncatedSeries f = blowup_function(6, N);
    std::vector<double> coeffs, nodes;
    double w = 1.0;
    const BlaschkeSpec z = blowup_zeros(6);
    for (double e : z.complements()) {
      w *= 0.5;
      coeffs.push_back(w);
      nodes.push_back(e);
    }
    // f+ = sum c_n conj(phi(w_n)) k_{w_n} = 0 since B vanishes at every w_n.
    const double ref = std::sqrt(kernel_combination_hb_norm_sq(z.with_power(2), coeffs, nodes));
    return Divergence{divergence_curves(p, f, 2048), ref, make_hb_element(f, p).hb_norm()};
  }();
  return d;
}

Outcome c9a() {
  const Divergence& d = divergence();
  const auto& y = d.curves.partial_norms.y();
  const auto it = std::max_element(y.begin(), y.end());
  const double ratio = *it / d.ref_norm;
  return {ratio > 10.0, fmt("max ||s_n f|| = %.3f", *it) + fmt(" at n=%.0f", d.curves.partial_norms.x()[static_cast<std::size_t>(it - y.begin())]) +
                            fmt(", ||f|| = %.4f", d.ref_norm) + fmt(" (truncated %.4f)", d.series_norm) +
                            fmt(", ratio %.2f", ratio)};
}

Outcome c9b() {
  const Divergence& d = divergence();
  const auto& y = d.curves.coefficient_sums.y();
  int decreases = 0;
  for (std::size_t i = 1; i < y.size(); ++i) decreases += y[i] < y[i - 1];
  const double s8 = y[7];
  const double top = *std::max_element(y.begin(), y.end());
  const bool reach = s8 > 0 ? top >= 10.0 * s8 : false;
  return {decreases == 0 && reach, std::to_string(decreases) + " decreasing steps" + fmt(", S_8=%.4f", s8) +
                                       fmt(", max S_n=%.4f", top) + fmt(", S_2048=%.4f", y.back())};
}

Outcome c10() {
  const Pair p = pair_from_bspec(parse_bspec("b0"), 400, 4096);
  const HbElement f = make_hb_element(cauchy_kernel(0.5, 400), p);
  const std::vector<int> ns{1, 2, 4, 8, 16, 32, 64, 128, 256};
  const auto r = toeplitz_approx_curve(p, f, ns);
  const auto& y = r.curve.y();
  bool mono = true;
  for (std::size_t i = 1; i < y.size(); ++i) mono = mono && y[i] <= y[i - 1] + 1e-10;
  return {mono && y.back() < 0.01, std::string(mono ? "nonincreasing" : "NOT monotone") + fmt(", y(1)=%.4f", y.front()) +
                                       fmt(", y(256)=%.5f", y.back())};
}

struct Criterion {
  const char* id;
  const char* name;
  std::function<Outcome()> run;
  double time_limit;  // seconds, 0 for none
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {"1", "blow-up exponent", c1, 1.0},
      {"2", "pair correctness", c2, 1.0},
      {"3", "norm-formula equivalence", c3, 5.0},
      {"4", "f+ cross-validation and kernel identity", c4, 0.0},
      {"5", "Toeplitz tail inequality, 1000 trials", c5, 10.0},
      {"6", "constructive approximation within 6 eps", c6, 30.0},
      {"7", "dilation monotonicity for b0, contrast for b0 B^2", c7, 0.0},
      {"8", "Blaschke floor between zeros", c8, 0.0},
      {"9a", "partial-sum norms exceed 10 ||f||", c9a, 0.0},
      {"9b", "coefficient partial sums nondecreasing, 10x S_8", c9b, 0.0},
      {"10", "Toeplitz approximation curve", c10, 0.0},
  };
  const std::string only = argc > 1 ? argv[1] : "";
  bool any = false;
  bool all_ok = true;
  for (const Criterion& c : all) {
    if (!only.empty() && only != c.id) continue;
    any = true;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.time_limit <= 0.0 || secs < c.time_limit;
    const bool ok = o.pass && in_time;
    all_ok = all_ok && ok;
    std::printf("%s criterion %s: %s: %s [%.2fs%s]\n", ok ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs,
                in_time ? "" : fmt(", limit %.0fs exceeded", c.time_limit).c_str());
    std::fflush(stdout);
  }
  if (!any) {
    std::fprintf(stderr, "unknown criterion '%s'\n", only.c_str());
    return 2;
  }
  return all_ok ? 0 : 1;
}
