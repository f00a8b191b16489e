#include "gapkit/bound.hpp"

namespace gapkit {

std::string to_string(Rounding r) {
  switch (r) {
    case Rounding::Up: return "up";
    case Rounding::Down: return "down";
    case Rounding::Exact: return "exact";
  }
  return "?";
}

Bound Bound::upper(const Interval& x, std::string prov) { return Bound{x, Rounding::Up, std::nullopt, std::move(prov)}; }

Bound Bound::lower(const Interval& x, std::string prov) {
  return Bound{x, Rounding::Down, std::nullopt, std::move(prov)};
}

Bound Bound::of(const Rat& q, std::string prov, mpfr_prec_t prec) {
  return Bound{Interval(q, prec), Rounding::Exact, q, std::move(prov)};
}

const BigFloat& Bound::value() const { return dir == Rounding::Down ? enc.lo() : enc.hi(); }

Interval Bound::point() const {
  if (exact) return Interval(*exact, enc.prec());
  return Interval::point(value());
}

Rat Bound::to_rat() const { return exact ? *exact : value().to_rat(); }

std::string Bound::str(int digits) const {
  if (exact) return gapkit::to_string(*exact);
  return dir == Rounding::Down ? enc.lower_str(digits) : enc.upper_str(digits);
}

Interval pow_half(const Interval& x, unsigned long num) {
  Interval r = x.pow(num / 2);
  if (num % 2) r = r * x.sqrt();
  return r;
}

Bound max_upper(const Bound& a, const Bound& b) { return a.value() >= b.value() ? a : b; }

Bound max_lower(const Bound& a, const Bound& b) { return a.value() >= b.value() ? a : b; }

}  // namespace gapkit
