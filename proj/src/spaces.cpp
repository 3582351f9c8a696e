#include "hbspace/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hbspace/error.hpp"
#include "hbspace/textio.hpp"
#include "hbspace/toeplitz.hpp"

namespace hb {

namespace {

double identity_defect_on(const TruncatedSeries& a, const BoundaryGrid& b_boundary) {
  const BoundaryGrid ag = to_grid(a, b_boundary.size(), b_boundary.phase());
  double d = 0.0;
  for (int m = 0; m < b_boundary.size(); ++m) {
    const auto i = static_cast<std::size_t>(m);
    d = std::max(d, std::abs(std::norm(ag[i]) + std::norm(b_boundary[i]) - 1.0));
  }
  return d;
}

double product_defect_of(const TruncatedSeries& b, const TruncatedSeries& a,
                         const TruncatedSeries& phi) {
  const TruncatedSeries ap = cauchy_product(a, phi, b.degree());
  double d = 0.0;
  for (int k = 0; k <= b.degree(); ++k) d = std::max(d, std::abs(ap.coeff(k) - b.coeff(k)));
  return d;
}

void check_tolerance(double tolerance) {
  if (!(tolerance > 0) || !std::isfinite(tolerance)) {
    throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  }
}

Pair checked_pair(TruncatedSeries b, TruncatedSeries a, TruncatedSeries phi,
                  const BoundaryGrid& b_boundary, double tolerance) {
  const double idef = identity_defect_on(a, b_boundary);
  const double pdef = product_defect_of(b, a, phi);
  if (!(idef <= tolerance)) {
    throw Error(ErrorCode::ResidualTooLarge,
                "pair identity |a|^2 + |b|^2 = 1 misses tolerance on the grid (defect " +
                    io::format_double(idef) + ")");
  }
  if (!(pdef <= tolerance)) {
    throw Error(ErrorCode::ResidualTooLarge,
                "pair product a*phi = b misses tolerance (defect " + io::format_double(pdef) + ")");
  }
  const int M = b_boundary.size();
  return Pair(std::move(b), std::move(a), std::move(phi), M, idef, pdef);
}

}  // namespace

Pair::Pair(TruncatedSeries b, TruncatedSeries a, TruncatedSeries phi, int grid_size,
           double identity_defect, double product_defect)
    : b_(std::move(b)),
      a_(std::move(a)),
      phi_(std::move(phi)),
      grid_size_(grid_size),
      identity_defect_(identity_defect),
      product_defect_(product_defect) {
  if (a_.degree() != b_.degree() || phi_.degree() != b_.degree()) {
    throw Error(ErrorCode::InvalidArgument, "Pair: b, a and phi must share one degree");
  }
  if (!(a_[0].real() > 0) || std::abs(a_[0].imag()) > 1e-12 * a_.max_abs()) {
    throw Error(ErrorCode::InvalidArgument, "Pair: a(0) must be real and positive");
  }
}

Pair pair_from_b(const TruncatedSeries& b, int degree, int grid_size, double tolerance) {
  detail::check_grid(grid_size, degree);
  const TruncatedSeries bn = b.resized(degree);
  return pair_from_b(bn, to_grid(bn, grid_size), degree, tolerance);
}

Pair pair_from_b(const TruncatedSeries& b, const BoundaryGrid& b_boundary, int degree,
                 double tolerance) {
  check_tolerance(tolerance);
  detail::check_grid(b_boundary.size(), degree);
  const int M = b_boundary.size();

  const double sup = b_boundary.max_abs();
  if (sup > 1.0 + 1e-10) {
    throw Error(ErrorCode::NotInUnitBall,
                "sup |b| on the grid is " + io::format_double(sup) + " > 1");
  }
  std::vector<cplx> w(static_cast<std::size_t>(M));
  int flat = 0;
  for (int m = 0; m < M; ++m) {
    const double v = std::max(0.0, 1.0 - std::norm(b_boundary[static_cast<std::size_t>(m)]));
    if (v <= 1e-12) ++flat;
    w[static_cast<std::size_t>(m)] = v;
  }
  if (10 * flat >= M) {
    throw Error(ErrorCode::NotLogIntegrable,
                "1 - |b|^2 vanishes on at least 10% of the circle (b looks extreme)");
  }

  TruncatedSeries a = outer_from_modulus_squared(BoundaryGrid(std::move(w), b_boundary.phase()), degree);
  const TruncatedSeries bn = b.resized(degree);
  TruncatedSeries phi = cauchy_product(bn, series_reciprocal(a, degree), degree);
  return checked_pair(bn, std::move(a), std::move(phi), b_boundary, tolerance);
}

Pair pair_from_coefficients(TruncatedSeries b, TruncatedSeries a, TruncatedSeries phi,
                            int grid_size, double tolerance) {
  check_tolerance(tolerance);
  detail::check_grid(grid_size, b.degree());
  const BoundaryGrid bg = to_grid(b, grid_size);
  return checked_pair(std::move(b), std::move(a), std::move(phi), bg, tolerance);
}

TruncatedSeries cauchy_kernel(cplx w, int degree) {
  if (!(std::abs(w) < 1.0)) throw Error(ErrorCode::OutsideDisk, "cauchy_kernel: |w| must be < 1");
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "cauchy_kernel: negative degree");
  std::vector<cplx> c(static_cast<std::size_t>(degree) + 1);
  const cplx wc = std::conj(w);
  cplx p{1.0};
  for (auto& x : c) {
    x = p;
    p *= wc;
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries dilate(const TruncatedSeries& f, double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw Error(ErrorCode::InvalidArgument, "dilate: r must lie in [0, 1]");
  std::vector<cplx> c(f.coeffs().begin(), f.coeffs().end());
  double p = 1.0;
  for (auto& x : c) {
    x *= p;
    p *= r;
  }
  return TruncatedSeries(std::move(c));
}

HbElement::HbElement(TruncatedSeries f, TruncatedSeries fplus, double residual)
    : f_(std::move(f)),
      fplus_(std::move(fplus)),
      residual_(residual),
      hb_norm_sq_(f_.h2_norm_sq() + fplus_.h2_norm_sq()) {}

double HbElement::hb_norm() const noexcept { return std::sqrt(hb_norm_sq_); }

HbElement make_hb_element(const TruncatedSeries& f, const Pair& pair, double tolerance) {
  check_tolerance(tolerance);
  if (f.degree() > pair.degree()) {
    throw Error(ErrorCode::InvalidArgument,
                "deg f = " + std::to_string(f.degree()) + " exceeds the pair degree " +
                    std::to_string(pair.degree()));
  }
  const TruncatedSeries g = apply_coanalytic(pair.b(), f);
  TruncatedSeries fplus = solve_coanalytic_triangular(pair.a(), g);
  const double residual = (apply_coanalytic(pair.a(), fplus) - g).h2_norm();
  if (!(residual <= tolerance * std::max(1.0, g.h2_norm()))) {
    throw Error(ErrorCode::ResidualTooLarge,
                "f+ solve residual " + io::format_double(residual) + " exceeds tolerance");
  }
  return HbElement(f, std::move(fplus), residual);
}

TruncatedSeries fplus_via_phi(const TruncatedSeries& f, const TruncatedSeries& phi) {
  return apply_coanalytic(phi, f);
}

double hb_norm_coefficient_formula(const TruncatedSeries& f, const TruncatedSeries& phi) {
  const int n = f.degree();
  double outer = 0.0;
  double inner_total = 0.0;
  for (int k = 0; k <= n; ++k) {
    outer += std::norm(f.coeff(k));
    cplx s{};
    for (int j = 0; j + k <= n && j <= phi.degree(); ++j) s += f.coeff(j + k) * std::conj(phi.coeff(j));
    inner_total += std::norm(s);
  }
  return outer + inner_total;
}

TruncatedSeries sarason_b0_series(int degree) {
  const double t2 = kGoldenTau * kGoldenTau;
  return rational_series(TruncatedSeries{0.0, kGoldenTau}, TruncatedSeries{1.0, -t2}, degree);
}

TruncatedSeries sarason_a0_series(int degree) {
  const double t2 = kGoldenTau * kGoldenTau;
  return rational_series(TruncatedSeries{kGoldenTau, -kGoldenTau}, TruncatedSeries{1.0, -t2}, degree);
}

cplx sarason_b0(cplx z) { return kGoldenTau * z / (1.0 - kGoldenTau * kGoldenTau * z); }

std::string render_pair(const Pair& pair) {
  io::Document doc;
  doc.set("degree", static_cast<long long>(pair.degree()));
  doc.set("grid_size", static_cast<long long>(pair.grid_size()));
  doc.set("identity_defect", pair.identity_defect());
  doc.set("product_defect", pair.product_defect());
  doc.add_block("b", pair.b());
  doc.add_block("a", pair.a());
  doc.add_block("phi", pair.phi());
  return io::render(doc);
}

Pair parse_pair(std::string_view text, double tolerance) {
  const io::Document doc = io::parse_document(text);
  const long long degree = doc.integer("degree");
  const long long grid = doc.integer("grid_size");
  const TruncatedSeries& b = doc.block("b");
  const TruncatedSeries& a = doc.block("a");
  const TruncatedSeries& phi = doc.block("phi");
  if (b.degree() != degree || a.degree() != degree || phi.degree() != degree) {
    throw Error(ErrorCode::ParseError, "pair file: block lengths disagree with 'degree'");
  }
  if (grid <= 0 || grid > (1LL << 30)) throw Error(ErrorCode::ParseError, "pair file: bad grid_size");
  return pair_from_coefficients(b, a, phi, static_cast<int>(grid), tolerance);
}

void write_pair_file(const std::filesystem::path& path, const Pair& pair) {
  io::write_file_atomic(path, render_pair(pair));
}

Pair read_pair_file(const std::filesystem::path& path, double tolerance) {
  return parse_pair(io::read_file(path), tolerance);
}

}  // namespace hb
