#include "gapkit/sqrt_rat.hpp"

namespace gapkit {

SqrtRat::SqrtRat(Rat q, Int n) : q_(std::move(q)), n_(std::move(n)) {
  if (n_ < 0) throw HypothesisError("SqrtRat radicand must be nonnegative");
  if (n_ == 0) {
    q_ = 0;
    n_ = 1;
    return;
  }
  // pull out square factors we can find cheaply
  if (is_square(n_)) {
    q_ *= isqrt(n_);
    n_ = 1;
    return;
  }
  for (unsigned long p = 2; p < 2000 && p * p <= n_; ++p) {
    Int pp = Int(p) * p;
    while (mpz_divisible_p(n_.get_mpz_t(), pp.get_mpz_t())) {
      n_ /= pp;
      q_ *= p;
    }
  }
  q_.canonicalize();
}

SqrtRat SqrtRat::half_power(const Int& base, long num) {
  if (base <= 0) throw HypothesisError("half_power needs a positive base");
  long whole = num >= 0 ? num / 2 : -((-num + 1) / 2);
  long rem = num - 2 * whole;  // 0 or 1
  Rat q = pow_rat(Rat(base), whole);
  return SqrtRat(q, rem ? base : Int(1));
}

SqrtRat SqrtRat::inverse() const {
  if (q_ == 0) throw HypothesisError("inverse of zero");
  return SqrtRat(Rat(1) / (q_ * n_), n_);
}

static Rat scaled_root(const Int& n, unsigned bits, bool up) {
  Int scale = pow_int(Int(2), bits);
  Int big = n * scale * scale;
  Int r = isqrt(big);
  if (up && r * r != big) r += 1;
  return make_rat(r, scale);
}

Rat SqrtRat::round_down(unsigned bits) const {
  if (n_ == 1) return q_;
  return q_ >= 0 ? Rat(q_ * scaled_root(n_, bits, false)) : Rat(q_ * scaled_root(n_, bits, true));
}

Rat SqrtRat::round_up(unsigned bits) const {
  if (n_ == 1) return q_;
  return q_ >= 0 ? Rat(q_ * scaled_root(n_, bits, true)) : Rat(q_ * scaled_root(n_, bits, false));
}

Interval SqrtRat::enclosure(mpfr_prec_t prec) const {
  return Interval(q_, prec) * Interval(n_, prec).sqrt();
}

std::string SqrtRat::str() const {
  if (n_ == 1) return q_.get_str();
  return q_.get_str() + "*sqrt(" + n_.get_str() + ")";
}

}  // namespace gapkit
