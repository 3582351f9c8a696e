#pragma once

// Textual descriptions of b as a product of atoms.
//
//   expr  := term ('*' term)*
//   term  := atom ('^' k)?
//   atom  := 'b0'
//          | 'scalar:' c
//          | 'rational:num=[' list '],den=[' list ']'
//          | 'blaschke:geometric:base=' B ',count=' n
//          | 'blaschke:zeros=[' list ']'
//
// Lists hold real numbers separated by commas. Whitespace is allowed between
// tokens. b0 is tau z / (1 - tau^2 z).

#include <string>
#include <string_view>
#include <vector>

#include "hbspace/blaschke.hpp"
#include "hbspace/series.hpp"
#include "hbspace/spaces.hpp"

namespace hb {

struct BAtom {
  enum class Kind { Rational, Scalar, Blaschke };
  Kind kind = Kind::Scalar;
  TruncatedSeries num;
  TruncatedSeries den;
  double scalar = 0.0;
  BlaschkeSpec blaschke{{}};
  int power = 1;
  std::size_t position = 0;
};

class BSpec {
 public:
  BSpec(std::string text, std::vector<BAtom> atoms);

  const std::string& text() const noexcept { return text_; }
  const std::vector<BAtom>& atoms() const noexcept { return atoms_; }

  /// Taylor coefficients of the product to the given degree.
  TruncatedSeries series(int degree) const;
  /// Direct evaluation of the product, |z| <= 1.
  cplx eval(cplx z) const;
  /// Exact boundary samples of b on an M-point grid.
  BoundaryGrid boundary(int size, GridPhase phase = GridPhase::Aligned) const;

 private:
  std::string text_;
  std::vector<BAtom> atoms_;
};

/// Throws ParseError with the offending position, InvalidArgument for
/// rational atoms with a pole in the closed disk, and NotInUnitBall when the
/// product exceeds 1 + 1e-10 in modulus on a 4096-point boundary grid.
BSpec parse_bspec(std::string_view text);

/// Pair for b, sampling b exactly on the boundary.
Pair pair_from_bspec(const BSpec& spec, int degree, int grid_size, double tolerance = 1e-8);

}  // namespace hb
