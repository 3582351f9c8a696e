#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "hbspace/approx.hpp"
#include "hbspace/blaschke.hpp"
#include "hbspace/bspec.hpp"
#include "hbspace/error.hpp"
#include "hbspace/experiments.hpp"
#include "hbspace/spaces.hpp"
#include "hbspace/textio.hpp"
#include "hbspace/toeplitz.hpp"

namespace hb::cli {

namespace {

struct Common {
  std::string b = "b0";
  std::string pair_file;
  int degree = 1024;
  int grid = 8192;
  double tol = 1e-8;
  std::uint64_t seed = 0;
  bool json = false;
  std::string out;
};

struct FunctionArgs {
  std::string file;
  double kernel = NAN;
};

struct Options {
  Common c;
  FunctionArgs f;
  int terms = 30;
  std::string r_exponents = "3..10";
  int diverge_zeros = 6;
  int n_max = 0;
  int trials = 100;
  int poly_degree = 64;
  int contrast_zeros = 8;
  double eps = 0.1;
  std::vector<int> n_values;
  std::string zero_spec = "geometric:base=4,count=8";
  int samples = 64;
};

// Signals a non-Error failure that should map to exit code 2.
struct NumericalFailure {
  std::string message;
};

nlohmann::json scalar_json(const std::string& v) {
  if (v == "true") return true;
  if (v == "false") return false;
  char* end = nullptr;
  const double d = std::strtod(v.c_str(), &end);
  if (!v.empty() && end == v.c_str() + v.size()) {
    if (v.find_first_of(".eEn") == std::string::npos) return std::strtoll(v.c_str(), nullptr, 10);
    return d;
  }
  return v;
}

nlohmann::json to_json(const io::Document& doc) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : doc.scalars) j[k] = scalar_json(v);
  for (const auto& [name, s] : doc.blocks) {
    nlohmann::json arr = nlohmann::json::array();
    for (const cplx& c : s.coeffs()) arr.push_back({c.real(), c.imag()});
    j[name] = std::move(arr);
  }
  return j;
}

void emit(const io::Document& doc, const Common& c, std::ostream& out) {
  if (c.json) {
    out << to_json(doc).dump(2) << '\n';
  } else {
    out << io::render(doc);
  }
}

void add_common(CLI::App* sub, Common& c, bool with_pair) {
  if (with_pair) {
    sub->add_option("--b", c.b, "b as a product of atoms, e.g. \"b0 * blaschke:geometric:base=4,count=6 ^2\"");
    sub->add_option("--pair", c.pair_file, "read the pair from a file instead of --b");
    sub->add_option("--grid", c.grid, "boundary grid size (power of two)");
    sub->add_option("--tol", c.tol, "tolerance for pair identities and solve residuals");
  }
  sub->add_option("--degree", c.degree, "truncation degree N");
  sub->add_option("--seed", c.seed, "random seed");
  sub->add_flag("--json", c.json, "print the report as JSON");
  sub->add_option("--out", c.out, "output file (written atomically)");
}

void add_function(CLI::App* sub, FunctionArgs& f) {
  sub->add_option("--f", f.file, "coefficient file for f");
  sub->add_option("--kernel", f.kernel, "use f = k_w for this real w in (-1, 1)");
}

Pair load_pair(const Common& c) {
  if (!c.pair_file.empty()) return read_pair_file(c.pair_file, c.tol);
  return pair_from_bspec(parse_bspec(c.b), c.degree, c.grid, c.tol);
}

TruncatedSeries load_function(const FunctionArgs& f, int degree) {
  const bool has_file = !f.file.empty();
  const bool has_kernel = !std::isnan(f.kernel);
  if (has_file == has_kernel) throw Error(ErrorCode::InvalidArgument, "give exactly one of --f and --kernel");
  if (has_kernel) return cauchy_kernel(f.kernel, degree);
  return io::read_coefficients_file(f.file);
}

void pair_fields(io::Document& doc, const Pair& p) {
  doc.set("degree", static_cast<long long>(p.degree()));
  doc.set("grid_size", static_cast<long long>(p.grid_size()));
  doc.set("identity_defect", p.identity_defect());
  doc.set("product_defect", p.product_defect());
}

std::vector<double> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) throw Error(ErrorCode::InvalidArgument, "expected a range 'a..b'");
  const int a = std::stoi(s.substr(0, dots));
  const int b = std::stoi(s.substr(dots + 2));
  if (a < 1 || b < a || b > 26) throw Error(ErrorCode::InvalidArgument, "range must satisfy 1 <= a <= b <= 26");
  std::vector<double> r;
  for (int k = a; k <= b; ++k) r.push_back(1.0 - std::pow(4.0, -k));
  return r;
}

std::vector<double> default_r_grid() { return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99}; }

int dispatch(const std::string& cmd, const Options& o, std::ostream& out) {
  const Common& c = o.c;
  const FunctionArgs& fa = o.f;
  io::Document doc;

  if (cmd == "pair") {
    const Pair p = load_pair(c);
    pair_fields(doc, p);
    doc.set("a0", p.a()[0].real());
    if (!c.out.empty()) write_pair_file(c.out, p);
    else {
      doc.add_block("b", p.b());
      doc.add_block("a", p.a());
      doc.add_block("phi", p.phi());
    }
    emit(doc, c, out);
    return 0;
  }

  if (cmd == "norm" || cmd == "fplus") {
    const Pair p = load_pair(c);
    const TruncatedSeries f = load_function(fa, p.degree());
    const HbElement e = make_hb_element(f, p, c.tol);
    const TruncatedSeries alt = fplus_via_phi(f, p.phi());
    pair_fields(doc, p);
    doc.set("h2_norm_sq", f.h2_norm_sq());
    doc.set("fplus_norm_sq", e.fplus().h2_norm_sq());
    doc.set("hb_norm_sq", e.hb_norm_sq());
    doc.set("coefficient_formula", hb_norm_coefficient_formula(f, p.phi()));
    doc.set("fplus_route_difference", (e.fplus() - alt).max_abs());
    doc.set("residual", e.residual());
    if (cmd == "fplus") {
      if (!c.out.empty()) io::write_coefficients_file(c.out, e.fplus());
      else doc.add_block("fplus", e.fplus());
    }
    emit(doc, c, out);
    return 0;
  }

  if (cmd == "blowup") {
    const int terms = o.terms;
    const auto rs = parse_range(o.r_exponents);
    const Curve curve = blowup_exact_curve(terms, rs);
    const double slope = loglog_slope(curve);
    if (!c.out.empty()) io::write_file_atomic(c.out, to_csv(curve));
    doc.set("terms", static_cast<long long>(terms));
    doc.set("slope", slope);
    doc.set("y_first", curve.y().front());
    doc.set("y_last", curve.y().back());
    emit(doc, c, out);
    return 0;
  }

  if (cmd == "diverge") {
    const int zeros = o.diverge_zeros;
    int n_max = o.n_max;
    const Pair p = pair_from_bspec(parse_bspec(blowup_bspec_text(zeros)), c.degree, c.grid, c.tol);
    if (n_max <= 0) n_max = c.degree / 2;
    const TruncatedSeries f = blowup_function(zeros, c.degree);
    const DivergenceCurves dc = divergence_curves(p, f, n_max);
    std::vector<double> coeffs, nodes;
    double w = 1.0;
    const BlaschkeSpec bz = blowup_zeros(zeros);
    for (double d : bz.complements()) {
      w *= 0.5;
      coeffs.push_back(w);
      nodes.push_back(d);
    }
    const double ref = std::sqrt(kernel_combination_h2_norm_sq(coeffs, nodes));
    const auto& y = dc.partial_norms.y();
    const auto it = std::max_element(y.begin(), y.end());
    pair_fields(doc, p);
    doc.set("zeros", static_cast<long long>(zeros));
    doc.set("n_max", static_cast<long long>(n_max));
    doc.set("reference_norm", ref);
    doc.set("max_partial_norm", *it);
    doc.set("argmax_n", static_cast<long long>(it - y.begin() + 1));
    doc.set("growth_ratio", *it / ref);
    doc.set("final_cesaro_norm", dc.cesaro_norms.y().back());
    doc.set("final_coefficient_sum", dc.coefficient_sums.y().back());
    if (!c.out.empty()) {
      const std::vector<Curve> cs{dc.partial_norms, dc.cesaro_norms, dc.coefficient_sums};
      io::write_file_atomic(c.out, to_csv(cs));
    }
    emit(doc, c, out);
    return 0;
  }

  if (cmd == "sarason") {
    const int trials = o.trials;
    const int pdeg = o.poly_degree;
    const int zeros = o.contrast_zeros;
    const Pair p = pair_from_bspec(parse_bspec("b0"), c.degree, c.grid, c.tol);
    const auto rg = default_r_grid();
    const MonotonicityReport mr = sarason_monotonicity_check(p, trials, pdeg, rg, c.seed);
    std::vector<double> rc = rg;
    const BlaschkeSpec z = blowup_zeros(zeros);
    for (double w : z.zeros()) rc.push_back(w);
    std::sort(rc.begin(), rc.end());
    rc.erase(std::unique(rc.begin(), rc.end()), rc.end());
    const ContrastReport cr = sarason_contrast(z, rc);
    pair_fields(doc, p);
    doc.set("seed", static_cast<long long>(mr.seed));
    doc.set("trials", static_cast<long long>(mr.trials));
    doc.set("poly_degree", static_cast<long long>(mr.degree));
    doc.set("max_ratio", mr.max_ratio);
    doc.set("monotone", std::string(mr.holds ? "true" : "false"));
    doc.set("contrast_zeros", static_cast<long long>(zeros));
    doc.set("contrast_max_ratio", cr.best.ratio);
    doc.set("contrast_r", cr.best.r);
    doc.set("contrast_function", "\"" + cr.best.function + "\"");
    doc.set("contrast_found", std::string(cr.found ? "true" : "false"));
    emit(doc, c, out);
    if (!c.out.empty()) io::write_file_atomic(c.out, io::render(doc));
    return 0;
  }

  if (cmd == "approx") {
    const double eps = o.eps;
    const Pair p = load_pair(c);
    const TruncatedSeries f = load_function(fa, p.degree());
    const HbElement e = make_hb_element(f, p, c.tol);
    ApproxOptions opt;
    opt.tolerance = c.tol;
    const ApproxReport rep = approximate(e, p, eps, opt);
    io::Document rd = report_document(rep);
    if (!c.out.empty()) io::write_file_atomic(c.out, io::render(rd));
    pair_fields(doc, p);
    for (const auto& [k, v] : rd.scalars) doc.set(k, v);
    emit(doc, c, out);
    if (!rep.certified) throw NumericalFailure{"achieved error exceeds 6 eps"};
    return 0;
  }

  if (cmd == "toeplitz-approx") {
    const Pair p = load_pair(c);
    const TruncatedSeries f = load_function(fa, p.degree());
    const HbElement e = make_hb_element(f, p, c.tol);
    std::vector<int> ns = o.n_values;
    if (ns.empty()) {
      for (int n = 1; n <= 256; n *= 2) ns.push_back(n);
    }
    const ToeplitzApproxResult r = toeplitz_approx_curve(p, e, ns, c.tol);
    double budget_gap = 0.0;
    for (std::size_t i = 0; i < r.budget.size(); ++i) {
      budget_gap = std::max(budget_gap, std::abs(r.budget[i] - r.curve.y()[i]));
    }
    pair_fields(doc, p);
    doc.set("first", r.curve.y().front());
    doc.set("last", r.curve.y().back());
    doc.set("budget_identity_gap", budget_gap);
    if (!c.out.empty()) io::write_file_atomic(c.out, to_csv(r.curve));
    emit(doc, c, out);
    return 0;
  }

  if (cmd == "lemma-bp") {
    const int samples = o.samples;
    const BSpec spec = parse_bspec("blaschke:" + o.zero_spec);
    const BlaschkeSpec& B = spec.atoms().front().blaschke;
    const auto floors = lemma_bp_floor(B, samples);
    double floor_min = INFINITY;
    std::ostringstream csv;
    csv << "n,minimum,argmin_r\n";
    for (const auto& g : floors) {
      floor_min = std::min(floor_min, g.minimum);
      csv << g.n << ',' << io::format_double(g.minimum) << ',' << io::format_double(g.argmin_r) << '\n';
    }
    doc.set("zeros", static_cast<long long>(B.count()));
    doc.set("samples_per_gap", static_cast<long long>(samples));
    doc.set("floor", floor_min);
    if (B.count() >= 2) {
      const LemmaConstants lc = lemma_constants(B);
      doc.set("alpha", lc.alpha);
      doc.set("beta", lc.beta);
      doc.set("ratio_condition", std::string(lc.ratio_condition ? "true" : "false"));
      doc.set("separation", lc.separation);
      doc.set("half_gap", lc.half_gap);
      doc.set("first_zero_term", lc.first_zero_term);
    }
    if (!c.out.empty()) io::write_file_atomic(c.out, csv.str());
    emit(doc, c, out);
    return 0;
  }

  throw Error(ErrorCode::InvalidArgument, "unknown subcommand");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerics for de Branges-Rovnyak spaces H(b) with non-extreme b"};
  app.require_subcommand(1);

  Options o;

  auto* pair = app.add_subcommand("pair", "construct the pair (b, a, phi)");
  add_common(pair, o.c, true);

  auto* norm = app.add_subcommand("norm", "H(b) norm of f");
  add_common(norm, o.c, true);
  add_function(norm, o.f);

  auto* fplus = app.add_subcommand("fplus", "the companion f+ of f");
  add_common(fplus, o.c, true);
  add_function(fplus, o.f);

  auto* blowup = app.add_subcommand("blowup", "dilation blow-up curve for b0 B^2 (exact sum)");
  add_common(blowup, o.c, false);
  blowup->add_option("--terms", o.terms, "number of terms and zeros");
  blowup->add_option("--r-exponents", o.r_exponents, "r = 1 - 4^-k for k in a..b");

  auto* diverge = app.add_subcommand("diverge", "partial-sum and Cesaro norms on the blow-up data");
  add_common(diverge, o.c, true);
  diverge->add_option("--zeros", o.diverge_zeros, "number of Blaschke zeros 1 - 4^-n");
  diverge->add_option("--n-max", o.n_max, "largest partial-sum index (default degree/2)");

  auto* sarason = app.add_subcommand("sarason", "dilation monotonicity for b0 and its failure for b0 B^2");
  add_common(sarason, o.c, true);
  sarason->add_option("--trials", o.trials, "random polynomials");
  sarason->add_option("--poly-degree", o.poly_degree, "degree of the random polynomials");
  sarason->add_option("--zeros", o.contrast_zeros, "zeros of the contrast Blaschke product");

  auto* approx = app.add_subcommand("approx", "constructive polynomial approximation");
  add_common(approx, o.c, true);
  add_function(approx, o.f);
  approx->add_option("--eps", o.eps, "target epsilon")->check(CLI::PositiveNumber);

  auto* tapprox = app.add_subcommand("toeplitz-approx", "||T_conj(h_n) f - f||_{H(b)} over n");
  add_common(tapprox, o.c, true);
  add_function(tapprox, o.f);
  tapprox->add_option("--n-values", o.n_values, "values of n (default 1,2,4,...,256)")->delimiter(',');

  auto* lbp = app.add_subcommand("lemma-bp", "floor of |B(r w_n)| between consecutive zeros");
  add_common(lbp, o.c, false);
  lbp->add_option("--zeros", o.zero_spec, "geometric:base=B,count=n or zeros=[...]");
  lbp->add_option("--samples", o.samples, "samples per gap");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "ERROR:" << to_string(ErrorCode::InvalidArgument) << ":" << e.what() << '\n';
    return 1;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return dispatch(cmd, o, out);
  } catch (const Error& e) {
    err << "ERROR:" << to_string(e.code()) << ":" << e.what() << '\n';
    return is_numerical(e.code()) ? 2 : 1;
  } catch (const NumericalFailure& e) {
    err << "ERROR:" << to_string(ErrorCode::ResidualTooLarge) << ":" << e.message << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "ERROR:" << to_string(ErrorCode::InvalidArgument) << ":" << e.what() << '\n';
    return 1;
  }
}

}  // namespace hb::cli
