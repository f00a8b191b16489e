#pragma once

// Dense univariate polynomials over Z and Q, binary forms and 2x2 integer
// matrices. Coefficient vectors are stored low degree first.

#include <string>
#include <vector>

#include "gapkit/interval.hpp"

namespace gapkit {

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> low_to_high);
  IntPoly(std::initializer_list<long> low_to_high);
  static IntPoly from_high(std::vector<Int> high_to_low);
  static IntPoly constant(const Int& c) { return IntPoly(std::vector<Int>{c}); }
  static IntPoly monomial(const Int& c, int k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Int operator[](int i) const { return (i >= 0 && i <= degree()) ? c_[i] : Int(0); }
  const std::vector<Int>& coeffs() const { return c_; }
  const Int& lc() const;

  Int height() const;
  Int content() const;
  /// Divided by its content and sign-normalized so the leading coefficient is positive.
  IntPoly primitive() const;
  IntPoly derivative() const;

  Int eval(const Int& x) const;
  Rat eval(const Rat& x) const;
  /// y^n * P(x/y) for n >= deg P.
  Int eval_hom(const Int& x, const Int& y, int n) const;
  Interval eval(const Interval& x) const;
  ComplexBox eval(const ComplexBox& z) const;
  IntPoly compose(const IntPoly& g) const;

  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator-() const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator*(const Int& k) const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return !(*this == o); }

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Int> c_;
};

/// Polynomial over Q, used for arithmetic in Q[x]/(f).
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> low_to_high);
  explicit RatPoly(const IntPoly& p);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rat operator[](int i) const { return (i >= 0 && i <= degree()) ? c_[i] : Rat(0); }
  const std::vector<Rat>& coeffs() const { return c_; }

  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly operator*(const Rat& k) const;
  bool operator==(const RatPoly& o) const { return c_ == o.c_; }

  /// Remainder modulo a nonzero integer polynomial.
  RatPoly rem(const IntPoly& f) const;
  Int common_denominator() const;
  /// Multiplied by its common denominator.
  IntPoly numerator_poly() const;
  ComplexBox eval(const ComplexBox& z) const;
  Rat eval(const Rat& x) const;
  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

IntPoly reciprocal(const IntPoly& p);
/// Sylvester resultant, P's rows first: Res(P,Q) = lc(P)^deg Q * prod Q(roots of P).
Int resultant(const IntPoly& p, const IntPoly& q);
/// Determinant by fraction-free elimination.
Int det_bareiss(std::vector<std::vector<Int>> m);
/// Primitive gcd over Q (content 1, positive leading coefficient); gcd(0,0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);
/// Exact division over Z. Returns false if b does not divide a in Z[x].
bool divide_exact(const IntPoly& a, const IntPoly& b, IntPoly* quotient);
IntPoly squarefree_part(const IntPoly& p);
bool is_squarefree(const IntPoly& p);
/// Univariate discriminant (-1)^(n(n-1)/2) Res(P, P') / lc(P).
Int discriminant(const IntPoly& p);

/// 2x2 integer matrix (s u; t v), acting on column vectors.
struct IntMat2 {
  Int s, u, t, v;

  static IntMat2 identity() { return {1, 0, 0, 1}; }
  Int det() const { return s * v - t * u; }
  Int content() const;
  IntMat2 primitive() const;  // divided by positive content
  IntMat2 operator*(const IntMat2& o) const;
  IntMat2 operator-() const { return {-s, -u, -t, -v}; }
  IntMat2 adjugate() const { return {v, -u, -t, s}; }
  bool operator==(const IntMat2& o) const { return s == o.s && u == o.u && t == o.t && v == o.v; }
  bool operator<(const IntMat2& o) const;
  bool is_scalar() const { return u == 0 && t == 0 && s == v; }
  std::string str() const;
};

/// Homogeneous binary form sum_i c_i x^i y^(d-i).
class BinForm {
 public:
  BinForm() = default;
  BinForm(int degree, std::vector<Int> coeffs_by_x_power);
  /// Homogenizes p to degree deg p.
  static BinForm from_poly(const IntPoly& p);
  static BinForm from_poly(const IntPoly& p, int degree);

  int degree() const { return d_; }
  /// coefficient of x^i y^(d-i)
  const Int& coeff(int i) const { return c_.at(static_cast<size_t>(i)); }
  const std::vector<Int>& coeffs() const { return c_; }
  IntPoly dehomogenize() const { return IntPoly(c_); }  // F(x, 1)
  Int height() const;
  Int eval(const Int& x, const Int& y) const;
  bool operator==(const BinForm& o) const { return d_ == o.d_ && c_ == o.c_; }
  BinForm operator*(const Int& k) const;
  std::string str() const;

 private:
  int d_ = 0;
  std::vector<Int> c_;
};

/// F_M(x, y) = F(sx + uy, tx + vy).
BinForm form_action(const BinForm& f, const IntMat2& m);
/// Discriminant of a form of degree >= 2.
Int discriminant(const BinForm& f);
Int poly_height(const IntPoly& p);
Int poly_height(const BinForm& f);

}  // namespace gapkit
