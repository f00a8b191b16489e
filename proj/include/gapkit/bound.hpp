#pragma once

// A certified constant: an enclosure of the true quantity plus the direction
// in which it is reported (upper bounds are read off hi, lower bounds off lo).

#include <optional>
#include <string>

#include "gapkit/interval.hpp"

namespace gapkit {

enum class Rounding { Up, Down, Exact };

std::string to_string(Rounding r);

struct Bound {
  Interval enc;
  Rounding dir = Rounding::Up;
  std::optional<Rat> exact;
  std::string provenance;

  static Bound upper(const Interval& x, std::string prov = {});
  static Bound lower(const Interval& x, std::string prov = {});
  static Bound of(const Rat& q, std::string prov = {}, mpfr_prec_t prec = 128);

  /// The reported endpoint (hi for Up, lo for Down, the value itself for Exact).
  const BigFloat& value() const;
  /// Degenerate interval at the reported value, for feeding into later formulas.
  Interval point() const;
  Rat to_rat() const;
  double approx() const { return value().to_double(); }
  std::string str(int digits = 17) const;
};

/// x^(num/2) for x >= 0, exact square root when num is odd.
Interval pow_half(const Interval& x, unsigned long num);

/// Larger of two upper bounds (provenance of the winner is kept).
Bound max_upper(const Bound& a, const Bound& b);
/// Larger of two lower bounds.
Bound max_lower(const Bound& a, const Bound& b);

}  // namespace gapkit
