#pragma once

// Certified real intervals with dyadic endpoints (MPFR, directed rounding),
// complex boxes built from them, and a plain round-to-nearest float used by
// the iterative root finders.

#include <mpfr.h>

#include <string>

#include "gapkit/numeric.hpp"

namespace gapkit {

/// Widens the MPFR exponent range once so that constants like e^(10^7) stay
/// representable. Called implicitly by every constructor below.
void ensure_mpfr_range();

class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 64);
  BigFloat(double v, mpfr_prec_t prec);
  BigFloat(const Int& v, mpfr_prec_t prec);
  BigFloat(const Rat& v, mpfr_prec_t prec);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  Rat to_rat() const;  // exact
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  long exponent() const { return mpfr_get_exp(v_); }
  BigFloat with_prec(mpfr_prec_t p) const;

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat operator-() const;
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_); }

  BigFloat abs() const;
  BigFloat sqrt() const;
  std::string str(int digits = 20) const;

 private:
  mpfr_t v_;
};

/// Closed interval [lo, hi]. All arithmetic rounds outward, so the true value
/// of any expression evaluated on contained inputs lies in the result.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 128);
  Interval(const Int& v, mpfr_prec_t prec);
  Interval(const Rat& v, mpfr_prec_t prec);
  Interval(long v, mpfr_prec_t prec) : Interval(Int(v), prec) {}
  Interval(const BigFloat& lo, const BigFloat& hi);
  static Interval point(const BigFloat& v) { return Interval(v, v); }
  static Interval hull(const Interval& a, const Interval& b);
  static Interval pi(mpfr_prec_t prec);
  static Interval log2_const(mpfr_prec_t prec);

  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }
  mpfr_prec_t prec() const { return lo_.prec(); }
  Rat lower() const { return lo_.to_rat(); }
  Rat upper() const { return hi_.to_rat(); }
  BigFloat mid() const;
  BigFloat width() const;  // rounded up
  double approx() const { return mid().to_double(); }

  bool contains(const Rat& r) const;
  bool contains(const Interval& o) const;
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool positive() const { return lo_.sign() > 0; }
  bool negative() const { return hi_.sign() < 0; }
  bool overlaps(const Interval& o) const { return !(hi_ < o.lo_ || o.hi_ < lo_); }
  bool certainly_lt(const Interval& o) const { return hi_ < o.lo_; }
  bool certainly_gt(const Interval& o) const { return lo_ > o.hi_; }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  /// Throws PrecisionError when b straddles zero.
  friend Interval operator/(const Interval& a, const Interval& b);
  Interval operator-() const;

  Interval abs() const;
  Interval sqr() const;
  Interval sqrt() const;  // requires lo >= 0 (negative part clipped when hi >= 0)
  Interval log() const;   // requires lo > 0
  Interval exp() const;
  Interval pow(unsigned long n) const;
  /// x^e for x > 0 and rational e, via exp(e log x).
  Interval pow(const Rat& e) const;
  Interval pow(const Interval& e) const;
  Interval with_prec(mpfr_prec_t p) const;

  static Interval max(const Interval& a, const Interval& b);
  static Interval min(const Interval& a, const Interval& b);

  /// Shortest decimal string whose value is >= hi (up) or <= lo (down).
  std::string upper_str(int digits = 17) const;
  std::string lower_str(int digits = 17) const;
  std::string str(int digits = 17) const;

 private:
  BigFloat lo_, hi_;
};

/// Rectangle re x im in the complex plane.
struct ComplexBox {
  Interval re, im;

  ComplexBox() = default;
  ComplexBox(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}
  static ComplexBox real(const Interval& r) { return {r, Interval(0L, r.prec())}; }
  static ComplexBox point(const BigFloat& r, const BigFloat& i) {
    return {Interval::point(r), Interval::point(i)};
  }

  mpfr_prec_t prec() const { return re.prec(); }
  ComplexBox operator+(const ComplexBox& o) const { return {re + o.re, im + o.im}; }
  ComplexBox operator-(const ComplexBox& o) const { return {re - o.re, im - o.im}; }
  ComplexBox operator-() const { return {-re, -im}; }
  ComplexBox operator*(const ComplexBox& o) const;
  ComplexBox operator/(const ComplexBox& o) const;
  ComplexBox conj() const { return {re, -im}; }
  Interval abs() const;
  Interval norm2() const { return re.sqr() + im.sqr(); }
  bool overlaps(const ComplexBox& o) const { return re.overlaps(o.re) && im.overlaps(o.im); }
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  std::string str(int digits = 17) const;
};

inline ComplexBox operator*(const Interval& a, const ComplexBox& z) { return {a * z.re, a * z.im}; }

}  // namespace gapkit
