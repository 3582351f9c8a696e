#include "hbspace/approx.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "hbspace/error.hpp"
#include "hbspace/toeplitz.hpp"

namespace hb {

namespace {

constexpr int kMaxOuterGrid = 1 << 22;

int next_pow2(long long n) {
  long long m = 1;
  while (m < n) m <<= 1;
  return static_cast<int>(m);
}

// tail[m] = sum_{k > m} |f_k|^2, for m = -1..deg f (stored at m + 1).
std::vector<double> tail_sums(const TruncatedSeries& f) {
  const int n = f.degree();
  std::vector<double> t(static_cast<std::size_t>(n) + 2, 0.0);
  for (int m = n - 1; m >= -1; --m) {
    t[static_cast<std::size_t>(m + 1)] = t[static_cast<std::size_t>(m + 2)] + std::norm(f.coeff(m + 1));
  }
  return t;
}

TruncatedSeries partial_sum(const TruncatedSeries& f, int m) { return f.resized(m); }

}  // namespace

TruncatedSeries cesaro_mean(const TruncatedSeries& f, int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "cesaro_mean: n must be >= 0");
  const int top = std::min(n, f.degree());
  std::vector<cplx> c(static_cast<std::size_t>(top) + 1);
  for (int k = 0; k <= top; ++k) {
    c[static_cast<std::size_t>(k)] = (1.0 - static_cast<double>(k) / (n + 1)) * f[static_cast<std::size_t>(k)];
  }
  return TruncatedSeries(std::move(c));
}

int cesaro_order_for(const TruncatedSeries& f, double eps) {
  if (!(eps > 0)) throw Error(ErrorCode::InvalidArgument, "cesaro_order_for: eps must be positive");
  const int deg = f.degree();
  const auto tail = tail_sums(f);
  // ||f - sigma_n||^2 = (sum_{k<=n} k^2 |f_k|^2)/(n+1)^2 + sum_{k>n} |f_k|^2.
  double moment = 0.0;
  for (int n = 0; n <= deg; ++n) {
    moment += static_cast<double>(n) * n * std::norm(f[static_cast<std::size_t>(n)]);
    const double err2 = moment / ((n + 1.0) * (n + 1.0)) + tail[static_cast<std::size_t>(n + 1)];
    if (err2 <= eps * eps) return n;
  }
  const double need = std::sqrt(moment) / eps - 1.0;
  const double n = std::max(static_cast<double>(deg + 1), std::ceil(need));
  if (n > 1e9) throw Error(ErrorCode::BudgetExceeded, "cesaro_order_for: order exceeds 1e9");
  return static_cast<int>(n);
}

OuterChoice choose_h_factored(const Pair& pair, int n_outer) {
  if (n_outer < 1) throw Error(ErrorCode::InvalidArgument, "choose_h: n_outer must be >= 1");
  const int N = pair.degree();
  const int M = std::min(kMaxOuterGrid, std::max(pair.grid_size(), next_pow2(64LL * n_outer)));
  const BoundaryGrid ag = to_grid(pair.a(), M);
  const auto Ms = static_cast<std::size_t>(M);
  const double n = n_outer;

  // log|h0| - log n = log min(1, 1/(n|a|)): bounded above by 0, below by
  // -log n, so no zero of a reaches the logarithm.
  std::vector<cplx> v(Ms);
  for (std::size_t m = 0; m < Ms; ++m) {
    const double na = n * std::abs(ag[m]);
    v[m] = na > 1.0 ? -std::log(na) : 0.0;
  }
  // Analytic completion on the full grid: keep frequency 0 and M/2, double
  // 1..M/2-1, drop the negative ones.
  detail::fft(v, false);
  for (std::size_t k = 0; k < Ms; ++k) {
    const double wk = (k == 0 || k == Ms / 2) ? 1.0 : (k < Ms / 2 ? 2.0 : 0.0);
    v[k] *= wk / M;
  }
  detail::fft(v, true);

  std::vector<cplx> h0g(Ms), hg(Ms);
  double h0_sup = 0.0;
  double h_sup = 0.0;
  for (std::size_t m = 0; m < Ms; ++m) {
    h0g[m] = n * std::exp(v[m]);
    hg[m] = ag[m] * h0g[m];
    h0_sup = std::max(h0_sup, std::abs(h0g[m]));
    h_sup = std::max(h_sup, std::abs(hg[m]));
  }
  TruncatedSeries h = from_grid(BoundaryGrid(std::move(hg)), N);
  TruncatedSeries h0 = from_grid(BoundaryGrid(std::move(h0g)), N);
  // Only rounding can push the samples past 1.
  if (h_sup > 1.0) {
    h = (1.0 / h_sup) * h;
    h0 = (1.0 / h_sup) * h0;
    h0_sup /= h_sup;
    h_sup = 1.0;
  }
  return OuterChoice{std::move(h), std::move(h0), h0_sup, h_sup, M};
}

TruncatedSeries choose_h(const Pair& pair, int n_outer) { return choose_h_factored(pair, n_outer).h; }

double toeplitz_tail_bound(const TruncatedSeries& h, const TruncatedSeries& g, int size) {
  const double hs = sup_on_grid(h, size);
  if (hs > 1.0 + 1e-8) {
    throw Error(ErrorCode::NotContraction, "toeplitz_tail_bound: sup |h| = " + io::format_double(hs) + " > 1");
  }
  const double gs = sup_on_grid(g, size);
  return 2.0 * (1.0 - h[0].real()) * gs * gs;
}

ApproxReport approximate(const HbElement& f_elt, const Pair& pair, double epsilon,
                         const ApproxOptions& options) {
  if (!(epsilon > 0) || !std::isfinite(epsilon)) {
    throw Error(ErrorCode::InvalidArgument, "approximate: epsilon must be positive");
  }
  const TruncatedSeries& f = f_elt.f();
  const TruncatedSeries& fp = f_elt.fplus();
  if (f.degree() > pair.degree()) {
    throw Error(ErrorCode::InvalidArgument, "approximate: deg f exceeds the pair degree");
  }

  ApproxReport rep;
  rep.epsilon = epsilon;

  // Step 1: polynomial stand-ins for f and f+.
  rep.g1_order = cesaro_order_for(f, epsilon);
  rep.g2_order = cesaro_order_for(fp, epsilon);
  const TruncatedSeries g1 = cesaro_mean(f, rep.g1_order);
  const TruncatedSeries g2 = cesaro_mean(fp, rep.g2_order);
  const int sup_grid = pair.grid_size();
  rep.g1_sup = options.sup_safety * sup_on_grid(g1, sup_grid);
  rep.g2_sup = options.sup_safety * sup_on_grid(g2, sup_grid);
  const double gsq = rep.g1_sup * rep.g1_sup + rep.g2_sup * rep.g2_sup;
  const double tail_target = gsq > 0 ? epsilon * epsilon / gsq : INFINITY;

  // Step 2: h in a H^infinity with h(0) near 1.
  bool found = false;
  OuterChoice oc;
  for (int e = 0; e <= options.max_log2_outer && !found; ++e) {
    const int n = 1 << e;
    oc = choose_h_factored(pair, n);
    const double lhs = 2.0 * (1.0 - oc.h[0].real());
    rep.tail_condition = lhs <= tail_target;
    rep.budget.f_shift = (f - apply_coanalytic(oc.h, f)).h2_norm();
    rep.budget.fplus_shift = (fp - apply_coanalytic(oc.h, fp)).h2_norm();
    const bool measured = rep.budget.f_shift <= 3.0 * epsilon && rep.budget.fplus_shift <= 3.0 * epsilon;
    if (rep.tail_condition || measured) {
      rep.n_outer = n;
      found = true;
    }
  }
  if (!found) {
    throw Error(ErrorCode::BudgetExceeded,
                "approximate: no n_outer <= 2^" + std::to_string(options.max_log2_outer) +
                    " brings T_conj(h) within budget; eps is too small for this degree/grid");
  }
  rep.h = oc.h;
  rep.h_over_a_sup = options.sup_safety * oc.h0_sup;

  // Step 3: Taylor truncation of f.
  const auto tail = tail_sums(f);
  int m = f.degree();
  for (int k = 0; k <= f.degree(); ++k) {
    if (rep.h_over_a_sup * std::sqrt(tail[static_cast<std::size_t>(k + 1)]) <= epsilon) {
      m = k;
      break;
    }
  }
  rep.p = partial_sum(f, m);
  rep.budget.truncation = rep.h_over_a_sup * std::sqrt(tail[static_cast<std::size_t>(m + 1)]);

  // Step 4: the approximant, and its error measured in H(b).
  rep.q = apply_coanalytic(rep.h, rep.p);
  const HbElement diff = make_hb_element(f - rep.q, pair, options.tolerance);
  rep.achieved_error = diff.hb_norm();
  rep.certified = rep.achieved_error <= 6.0 * epsilon;
  return rep;
}

io::Document report_document(const ApproxReport& r) {
  io::Document doc;
  doc.set("epsilon", r.epsilon);
  doc.set("bound", 6.0 * r.epsilon);
  doc.set("achieved_error", r.achieved_error);
  doc.set("certified", std::string(r.certified ? "true" : "false"));
  doc.set("n_outer", static_cast<long long>(r.n_outer));
  doc.set("tail_condition", std::string(r.tail_condition ? "true" : "false"));
  doc.set("g1_order", static_cast<long long>(r.g1_order));
  doc.set("g2_order", static_cast<long long>(r.g2_order));
  doc.set("g1_sup", r.g1_sup);
  doc.set("g2_sup", r.g2_sup);
  doc.set("h_over_a_sup", r.h_over_a_sup);
  doc.set("budget_f_shift", r.budget.f_shift);
  doc.set("budget_fplus_shift", r.budget.fplus_shift);
  doc.set("budget_truncation", r.budget.truncation);
  doc.set("degree_p", static_cast<long long>(r.p.degree()));
  doc.set("degree_q", static_cast<long long>(r.q.degree()));
  doc.add_block("h", r.h);
  doc.add_block("p", r.p);
  doc.add_block("q", r.q);
  return doc;
}

}  // namespace hb
