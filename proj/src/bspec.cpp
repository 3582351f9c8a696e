#include "hbspace/bspec.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>

#include "hbspace/error.hpp"
#include "hbspace/textio.hpp"

namespace hb {

namespace {

constexpr int kCheckGrid = 4096;

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  std::vector<BAtom> parse() {
    std::vector<BAtom> atoms;
    atoms.push_back(term());
    skip_ws();
    while (pos_ < s_.size()) {
      expect('*');
      atoms.push_back(term());
      skip_ws();
    }
    return atoms;
  }

 private:
  BAtom term() {
    skip_ws();
    BAtom a = atom();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      const double k = number();
      if (k != std::floor(k) || k < 1 || k > 64) throw ParseError(at, "power must be an integer in 1..64");
      a.power = static_cast<int>(k);
    }
    return a;
  }

  BAtom atom() {
    BAtom a;
    a.position = pos_;
    if (accept("b0")) {
      const double t = kGoldenTau;
      a.kind = BAtom::Kind::Rational;
      a.num = TruncatedSeries{0.0, t};
      a.den = TruncatedSeries{1.0, -t * t};
    } else if (accept("scalar:")) {
      a.kind = BAtom::Kind::Scalar;
      a.scalar = number();
    } else if (accept("rational:")) {
      a.kind = BAtom::Kind::Rational;
      expect_word("num=");
      a.num = TruncatedSeries(as_complex(list()));
      expect(',');
      expect_word("den=");
      const std::size_t at = pos_;
      a.den = TruncatedSeries(as_complex(list()));
      check_denominator(a.den, at);
    } else if (accept("blaschke:")) {
      a.kind = BAtom::Kind::Blaschke;
      if (accept("geometric:")) {
        expect_word("base=");
        const std::size_t at = pos_;
        const double base = number();
        expect(',');
        expect_word("count=");
        const std::size_t cat = pos_;
        const double count = number();
        if (count != std::floor(count) || count < 0 || count > 512) {
          throw ParseError(cat, "count must be an integer in 0..512");
        }
        if (!(base > 1.0)) throw ParseError(at, "base must exceed 1");
        a.blaschke = BlaschkeSpec::geometric(base, static_cast<int>(count));
      } else if (accept("zeros=")) {
        const std::size_t at = pos_;
        try {
          a.blaschke = BlaschkeSpec(list());
        } catch (const Error& e) {
          throw ParseError(at, e.what());
        }
      } else {
        throw ParseError(pos_, "expected 'geometric:' or 'zeros=' after 'blaschke:'");
      }
    } else {
      throw ParseError(pos_, "expected an atom: b0, scalar:, rational: or blaschke:");
    }
    return a;
  }

  std::vector<double> list() {
    expect('[');
    std::vector<double> v;
    skip_ws();
    if (peek() == ']') {
      ++pos_;
      return v;
    }
    for (;;) {
      skip_ws();
      v.push_back(number());
      skip_ws();
      if (peek() == ']') {
        ++pos_;
        return v;
      }
      expect(',');
    }
  }

  double number() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.' || s_[pos_] == 'e' ||
            s_[pos_] == 'E' || s_[pos_] == '-' || s_[pos_] == '+')) {
      ++pos_;
    }
    if (pos_ == start) throw ParseError(start, "expected a number");
    const std::string tok(s_.substr(start, pos_ - start));
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (end != tok.c_str() + tok.size() || !std::isfinite(v)) {
      throw ParseError(start, "bad number '" + tok + "'");
    }
    return v;
  }

  static std::vector<cplx> as_complex(const std::vector<double>& v) {
    return std::vector<cplx>(v.begin(), v.end());
  }

  // The denominator must not vanish on the closed disk: no zero on the
  // circle, and winding number zero around the origin.
  static void check_denominator(const TruncatedSeries& den, std::size_t at) {
    if (den.max_abs() == 0.0) throw ParseError(at, "denominator is zero");
    double minabs = INFINITY;
    double winding = 0.0;
    cplx prev = eval(den, 1.0);
    for (int m = 1; m <= kCheckGrid; ++m) {
      const cplx cur = eval(den, std::polar(1.0, 2.0 * std::numbers::pi * m / kCheckGrid));
      minabs = std::min(minabs, std::abs(cur));
      winding += std::arg(cur / prev);
      prev = cur;
    }
    if (minabs <= 1e-12 * den.max_abs() || std::abs(winding) > std::numbers::pi) {
      throw Error(ErrorCode::InvalidArgument,
                  "rational atom at position " + std::to_string(at) +
                      " has a pole in the closed unit disk");
    }
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(std::string_view word) {
    if (s_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  void expect_word(std::string_view word) {
    skip_ws();
    if (!accept(word)) throw ParseError(pos_, "expected '" + std::string(word) + "'");
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) throw ParseError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

cplx ipow(cplx v, int p) {
  cplx r{1.0};
  for (int i = 0; i < p; ++i) r *= v;
  return r;
}

TruncatedSeries series_power(const TruncatedSeries& f, int p, int degree) {
  TruncatedSeries r = TruncatedSeries{1.0}.resized(degree);
  for (int i = 0; i < p; ++i) r = cauchy_product(r, f, degree);
  return r;
}

// Atom value from z and its complement c = 1 - z, kept separate so boundary
// samples near z = 1 lose nothing to cancellation.
cplx atom_value(const BAtom& a, cplx z, cplx c) {
  switch (a.kind) {
    case BAtom::Kind::Scalar:
      return ipow(a.scalar, a.power);
    case BAtom::Kind::Rational:
      return ipow(eval(a.num, z) / eval(a.den, z), a.power);
    case BAtom::Kind::Blaschke:
      return ipow(blaschke_eval_complement(a.blaschke, c), a.power);
  }
  return 0.0;
}

}  // namespace

BSpec::BSpec(std::string text, std::vector<BAtom> atoms) : text_(std::move(text)), atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw Error(ErrorCode::InvalidArgument, "BSpec: no atoms");
}

TruncatedSeries BSpec::series(int degree) const {
  TruncatedSeries r = TruncatedSeries{1.0}.resized(degree);
  for (const BAtom& a : atoms_) {
    TruncatedSeries f;
    switch (a.kind) {
      case BAtom::Kind::Scalar:
        f = TruncatedSeries{a.scalar};
        break;
      case BAtom::Kind::Rational:
        f = rational_series(a.num, a.den, degree);
        break;
      case BAtom::Kind::Blaschke:
        f = blaschke_series(a.blaschke, degree);
        break;
    }
    r = cauchy_product(r, series_power(f, a.power, degree), degree);
  }
  return r;
}

cplx BSpec::eval(cplx z) const {
  cplx v{1.0};
  for (const BAtom& a : atoms_) v *= atom_value(a, z, 1.0 - z);
  return v;
}

BoundaryGrid BSpec::boundary(int size, GridPhase phase) const {
  if (!is_power_of_two(size)) throw Error(ErrorCode::GridTooSmall, "grid size must be a power of two");
  const double off = phase == GridPhase::Staggered ? 0.5 : 0.0;
  std::vector<cplx> s(static_cast<std::size_t>(size));
  for (int m = 0; m < size; ++m) {
    const double th = 2.0 * std::numbers::pi * (m + off) / size;
    const double sh = std::sin(0.5 * th);
    const cplx z = std::polar(1.0, th);
    const cplx c{2.0 * sh * sh, -std::sin(th)};
    cplx v{1.0};
    for (const BAtom& a : atoms_) v *= atom_value(a, z, c);
    s[static_cast<std::size_t>(m)] = v;
  }
  return BoundaryGrid(std::move(s), phase);
}

BSpec parse_bspec(std::string_view text) {
  BSpec spec{std::string(text), Parser(text).parse()};
  const double sup = spec.boundary(kCheckGrid).max_abs();
  if (sup > 1.0 + 1e-10) {
    throw Error(ErrorCode::NotInUnitBall,
                "b = '" + std::string(text) + "' has sup modulus " + io::format_double(sup) + " > 1");
  }
  return spec;
}

Pair pair_from_bspec(const BSpec& spec, int degree, int grid_size, double tolerance) {
  detail::check_grid(grid_size, degree);
  return pair_from_b(spec.series(degree), spec.boundary(grid_size), degree, tolerance);
}

}  // namespace hb
