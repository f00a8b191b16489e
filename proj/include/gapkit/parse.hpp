#pragma once

// Text input: integer polynomial expressions in x (and y for forms),
// coefficient lists, and algebraic-number selectors.

#include <optional>
#include <string>

#include "gapkit/poly.hpp"

namespace gapkit {

/// Univariate integer polynomial. Accepts expressions such as
/// "x^4 - x^3 - 4*x^2 + 4*x + 1" or a coefficient list "[1, -1, -4, 4, 1]"
/// (high degree first). The variable may be x or a.
IntPoly parse_poly(const std::string& text);
/// Polynomial in a or x (detected when var is 0) with rational coefficients.
RatPoly parse_rat_poly(const std::string& text, char var = 0);
/// Binary form in x and y; a univariate expression is homogenized to its degree.
BinForm parse_form(const std::string& text);

/// Parsed "POLY@root~1.83", "POLY@root≈1.83+0.5i", "POLY@index2", "POLY@residue3".
struct AlgSpec {
  IntPoly poly;
  std::optional<int> index;
  std::optional<double> approx_re;
  double approx_im = 0.0;
  std::optional<Int> residue;
};

AlgSpec parse_alg_spec(const std::string& text);

}  // namespace gapkit
