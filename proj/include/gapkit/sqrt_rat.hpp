#pragma once

// Exact numbers of the shape q * sqrt(n), q rational, n a nonnegative integer.
// Half-integral exponents in the constants produce these; rounding is directed.

#include "gapkit/interval.hpp"

namespace gapkit {

class SqrtRat {
 public:
  SqrtRat() : q_(0), n_(1) {}
  SqrtRat(Rat q, Int n);
  static SqrtRat of_rat(const Rat& q) { return SqrtRat(q, Int(1)); }
  /// base^(num/2) for base > 0.
  static SqrtRat half_power(const Int& base, long num);

  const Rat& coeff() const { return q_; }
  const Int& radicand() const { return n_; }
  bool is_rational() const { return n_ == 1 || q_ == 0; }

  SqrtRat operator*(const SqrtRat& o) const { return SqrtRat(q_ * o.q_, n_ * o.n_); }
  SqrtRat inverse() const;  // 1/(q sqrt n) = sqrt(n)/(q n)

  /// Rational r with r <= value and value - r <= 2^-bits * |q| (roughly).
  Rat round_down(unsigned bits = 64) const;
  Rat round_up(unsigned bits = 64) const;
  Interval enclosure(mpfr_prec_t prec) const;
  std::string str() const;

  friend bool operator==(const SqrtRat& a, const SqrtRat& b) { return a.q_ == b.q_ && a.n_ == b.n_; }

 private:
  Rat q_;
  Int n_;
};

}  // namespace gapkit
