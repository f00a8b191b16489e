#include "gapkit/poly.hpp"

#include <algorithm>
#include <sstream>

namespace gapkit {

// ------------------------------------------------------------------ IntPoly

IntPoly::IntPoly(std::vector<Int> low_to_high) : c_(std::move(low_to_high)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> low_to_high) {
  for (long v : low_to_high) c_.emplace_back(v);
  trim();
}

IntPoly IntPoly::from_high(std::vector<Int> high_to_low) {
  std::reverse(high_to_low.begin(), high_to_low.end());
  return IntPoly(std::move(high_to_low));
}

IntPoly IntPoly::monomial(const Int& c, int k) {
  std::vector<Int> v(static_cast<size_t>(k) + 1, Int(0));
  v.back() = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPoly::lc() const {
  if (c_.empty()) throw HypothesisError("leading coefficient of the zero polynomial");
  return c_.back();
}

Int IntPoly::height() const {
  Int h = 0;
  for (const auto& a : c_)
    if (abs_int(a) > h) h = abs_int(a);
  return h;
}

Int IntPoly::content() const {
  Int g = 0;
  for (const auto& a : c_) g = gcd_int(g, a);
  return g;
}

IntPoly IntPoly::primitive() const {
  if (is_zero()) return *this;
  Int g = content();
  if (lc() < 0) g = -g;
  std::vector<Int> v;
  v.reserve(c_.size());
  for (const auto& a : c_) v.push_back(a / g);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::derivative() const {
  std::vector<Int> v;
  for (size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * static_cast<unsigned long>(i));
  return IntPoly(std::move(v));
}

Int IntPoly::eval(const Int& x) const {
  Int r = 0;
  for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

Rat IntPoly::eval(const Rat& x) const {
  Rat r = 0;
  for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

Int IntPoly::eval_hom(const Int& x, const Int& y, int n) const {
  if (n < degree()) throw HypothesisError("eval_hom: homogenizing degree below the polynomial degree");
  Int r = 0, ypow = 1;
  std::vector<Int> ypows(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    ypows[static_cast<size_t>(i)] = ypow;
    ypow *= y;
  }
  Int xpow = 1;
  for (int i = 0; i <= n; ++i) {
    r += (*this)[i] * xpow * ypows[static_cast<size_t>(n - i)];
    xpow *= x;
  }
  return r;
}

Interval IntPoly::eval(const Interval& x) const {
  Interval r(0L, x.prec());
  for (size_t i = c_.size(); i-- > 0;) r = r * x + Interval(c_[i], x.prec());
  return r;
}

ComplexBox IntPoly::eval(const ComplexBox& z) const {
  mpfr_prec_t p = z.prec();
  ComplexBox r{Interval(0L, p), Interval(0L, p)};
  for (size_t i = c_.size(); i-- > 0;) {
    r = r * z;
    r.re = r.re + Interval(c_[i], p);
  }
  return r;
}

IntPoly IntPoly::compose(const IntPoly& g) const {
  IntPoly r;
  for (size_t i = c_.size(); i-- > 0;) r = r * g + IntPoly::constant(c_[i]);
  return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<Int> v(std::max(c_.size(), o.c_.size()), Int(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator-() const {
  std::vector<Int> v;
  for (const auto& a : c_) v.push_back(-a);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Int> v(c_.size() + o.c_.size() - 1, Int(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const Int& k) const {
  std::vector<Int> v;
  for (const auto& a : c_) v.push_back(a * k);
  return IntPoly(std::move(v));
}

template <class T>
static std::string poly_string(const std::vector<T>& c, const std::string& var) {
  if (c.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    T a = c[i];
    bool neg = a < 0;
    if (neg) a = -a;
    if (first)
      out << (neg ? "-" : "");
    else
      out << (neg ? " - " : " + ");
    bool unit = (a == 1);
    if (i == 0 || !unit) {
      out << a.get_str();
      if (i > 0) out << "*";
    }
    if (i >= 1) out << var;
    if (i >= 2) out << "^" << i;
    first = false;
  }
  return out.str();
}

std::string IntPoly::str(const std::string& var) const { return poly_string(c_, var); }

// ------------------------------------------------------------------ RatPoly

RatPoly::RatPoly(std::vector<Rat> low_to_high) : c_(std::move(low_to_high)) { trim(); }

RatPoly::RatPoly(const IntPoly& p) {
  for (const auto& a : p.coeffs()) c_.emplace_back(a);
}

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return RatPoly(std::move(v));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + o * Rat(-1); }

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rat> v(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return RatPoly(std::move(v));
}

RatPoly RatPoly::operator*(const Rat& k) const {
  std::vector<Rat> v;
  for (const auto& a : c_) v.push_back(a * k);
  return RatPoly(std::move(v));
}

RatPoly RatPoly::rem(const IntPoly& f) const {
  if (f.is_zero()) throw HypothesisError("remainder by the zero polynomial");
  std::vector<Rat> r = c_;
  int n = f.degree();
  Rat lcf(f.lc());
  for (int i = static_cast<int>(r.size()) - 1; i >= n; --i) {
    if (r[static_cast<size_t>(i)] == 0) continue;
    Rat q = r[static_cast<size_t>(i)] / lcf;
    for (int j = 0; j <= n; ++j) r[static_cast<size_t>(i - n + j)] -= q * f[j];
  }
  if (static_cast<int>(r.size()) > n) r.resize(static_cast<size_t>(std::max(n, 0)));
  return RatPoly(std::move(r));
}

Int RatPoly::common_denominator() const {
  Int d = 1;
  for (const auto& a : c_) d = lcm_int(d, a.get_den());
  return d;
}

IntPoly RatPoly::numerator_poly() const {
  Int d = common_denominator();
  std::vector<Int> v;
  for (const auto& a : c_) v.push_back(Int(a * d));
  return IntPoly(std::move(v));
}

ComplexBox RatPoly::eval(const ComplexBox& z) const {
  mpfr_prec_t p = z.prec();
  ComplexBox r{Interval(0L, p), Interval(0L, p)};
  for (size_t i = c_.size(); i-- > 0;) {
    r = r * z;
    r.re = r.re + Interval(c_[i], p);
  }
  return r;
}

Rat RatPoly::eval(const Rat& x) const {
  Rat r = 0;
  for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

std::string RatPoly::str(const std::string& var) const { return poly_string(c_, var); }

// ---------------------------------------------------------------- algorithms

IntPoly reciprocal(const IntPoly& p) {
  std::vector<Int> v = p.coeffs();
  std::reverse(v.begin(), v.end());
  return IntPoly(std::move(v));
}

Int det_bareiss(std::vector<std::vector<Int>> m) {
  size_t n = m.size();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = t;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Int resultant(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) throw HypothesisError("resultant of the zero polynomial");
  int m = p.degree(), n = q.degree();
  if (m == 0) return pow_int(p.lc(), static_cast<unsigned long>(n));
  if (n == 0) return pow_int(q.lc(), static_cast<unsigned long>(m));
  size_t sz = static_cast<size_t>(m + n);
  std::vector<std::vector<Int>> s(sz, std::vector<Int>(sz, Int(0)));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s[static_cast<size_t>(r)][static_cast<size_t>(r + i)] = p[m - i];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s[static_cast<size_t>(n + r)][static_cast<size_t>(r + i)] = q[n - i];
  return det_bareiss(std::move(s));
}

// pseudo-remainder of a by b over Z
static IntPoly prem(const IntPoly& a, const IntPoly& b) {
  IntPoly r = a;
  int db = b.degree();
  while (!r.is_zero() && r.degree() >= db) {
    IntPoly t = IntPoly::monomial(r.lc(), r.degree() - db) * b;
    r = r * b.lc() - t;
  }
  return r;
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  IntPoly x = a.primitive(), y = b.primitive();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = prem(x, y);
    x = y;
    y = r.is_zero() ? r : r.primitive();
  }
  return x.primitive();
}

bool divide_exact(const IntPoly& a, const IntPoly& b, IntPoly* quotient) {
  if (b.is_zero()) throw HypothesisError("division by the zero polynomial");
  std::vector<Int> r = a.coeffs();
  int n = b.degree();
  if (a.degree() < n) {
    if (quotient) *quotient = IntPoly();
    return a.is_zero();
  }
  std::vector<Int> q(static_cast<size_t>(a.degree() - n + 1), Int(0));
  for (int i = a.degree(); i >= n; --i) {
    Int& top = r[static_cast<size_t>(i)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.lc().get_mpz_t())) return false;
    Int c = top / b.lc();
    q[static_cast<size_t>(i - n)] = c;
    for (int j = 0; j <= n; ++j) r[static_cast<size_t>(i - n + j)] -= c * b[j];
  }
  for (const auto& x : r)
    if (x != 0) return false;
  if (quotient) *quotient = IntPoly(std::move(q));
  return true;
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.degree() <= 0) return p.primitive();
  IntPoly g = gcd(p, p.derivative());
  IntPoly pp = p.primitive(), q;
  if (!divide_exact(pp * g.lc(), g, &q)) throw InvariantError("gcd does not divide its argument");
  return q.primitive();
}

bool is_squarefree(const IntPoly& p) { return gcd(p, p.derivative()).degree() == 0; }

Int discriminant(const IntPoly& p) {
  int n = p.degree();
  if (n < 1) throw HypothesisError("discriminant needs degree >= 1");
  if (n == 1) return 1;
  Int r = resultant(p, p.derivative());
  Int d = r / p.lc();
  if ((n * (n - 1) / 2) % 2 == 1) d = -d;
  return d;
}

// ------------------------------------------------------------------- IntMat2

Int IntMat2::content() const { return gcd_int(gcd_int(s, u), gcd_int(t, v)); }

IntMat2 IntMat2::primitive() const {
  Int g = content();
  if (g == 0) return *this;
  return {s / g, u / g, t / g, v / g};
}

IntMat2 IntMat2::operator*(const IntMat2& o) const {
  return {s * o.s + u * o.t, s * o.u + u * o.v, t * o.s + v * o.t, t * o.u + v * o.v};
}

bool IntMat2::operator<(const IntMat2& o) const {
  if (s != o.s) return s < o.s;
  if (u != o.u) return u < o.u;
  if (t != o.t) return t < o.t;
  return v < o.v;
}

std::string IntMat2::str() const {
  return "(" + s.get_str() + " " + u.get_str() + "; " + t.get_str() + " " + v.get_str() + ")";
}

// ------------------------------------------------------------------- BinForm

BinForm::BinForm(int degree, std::vector<Int> coeffs) : d_(degree), c_(std::move(coeffs)) {
  if (degree < 0) throw HypothesisError("negative form degree");
  if (static_cast<int>(c_.size()) > degree + 1) {
    for (size_t i = static_cast<size_t>(degree) + 1; i < c_.size(); ++i)
      if (c_[i] != 0) throw HypothesisError("form coefficient beyond its degree");
  }
  c_.resize(static_cast<size_t>(degree) + 1, Int(0));
}

BinForm BinForm::from_poly(const IntPoly& p) { return from_poly(p, std::max(p.degree(), 0)); }

BinForm BinForm::from_poly(const IntPoly& p, int degree) { return BinForm(degree, p.coeffs()); }

Int BinForm::height() const {
  Int h = 0;
  for (const auto& a : c_)
    if (abs_int(a) > h) h = abs_int(a);
  return h;
}

Int BinForm::eval(const Int& x, const Int& y) const { return IntPoly(c_).eval_hom(x, y, d_); }

BinForm BinForm::operator*(const Int& k) const {
  std::vector<Int> v;
  for (const auto& a : c_) v.push_back(a * k);
  return BinForm(d_, std::move(v));
}

std::string BinForm::str() const {
  std::ostringstream out;
  bool first = true;
  for (int i = d_; i >= 0; --i) {
    Int a = c_[static_cast<size_t>(i)];
    if (a == 0) continue;
    bool neg = a < 0;
    if (neg) a = -a;
    out << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    bool mono = (i > 0 || d_ - i > 0);
    if (a != 1 || !mono) {
      out << a.get_str();
      if (mono) out << "*";
    }
    bool wrote = false;
    if (i > 0) {
      out << "x";
      if (i > 1) out << "^" << i;
      wrote = true;
    }
    if (d_ - i > 0) {
      if (wrote) out << "*";
      out << "y";
      if (d_ - i > 1) out << "^" << (d_ - i);
    }
    first = false;
  }
  if (first) return "0";
  return out.str();
}

BinForm form_action(const BinForm& f, const IntMat2& m) {
  int d = f.degree();
  IntPoly a(std::vector<Int>{m.u, m.s});  // s x + u
  IntPoly b(std::vector<Int>{m.v, m.t});  // t x + v
  std::vector<IntPoly> apow{IntPoly::constant(1)}, bpow{IntPoly::constant(1)};
  for (int i = 1; i <= d; ++i) {
    apow.push_back(apow.back() * a);
    bpow.push_back(bpow.back() * b);
  }
  IntPoly acc;
  for (int i = 0; i <= d; ++i) {
    if (f.coeff(i) == 0) continue;
    acc = acc + apow[static_cast<size_t>(i)] * bpow[static_cast<size_t>(d - i)] * f.coeff(i);
  }
  return BinForm(d, acc.coeffs());
}

Int discriminant(const BinForm& f) {
  int d = f.degree();
  if (d < 2) throw HypothesisError("form discriminant needs degree >= 2");
  bool allZero = true;
  for (const auto& c : f.coeffs())
    if (c != 0) allZero = false;
  if (allZero) return 0;
  BinForm g = f;
  // a unimodular shear moves a nonzero value into the leading coefficient
  for (long k = 0; g.coeff(d) == 0; ++k) g = form_action(f, IntMat2{1, 0, Int(k), 1});
  IntPoly p = g.dehomogenize();
  Int r = resultant(p, p.derivative());
  Int disc = r / p.lc();
  if ((d * (d - 1) / 2) % 2 == 1) disc = -disc;
  return disc;
}

Int poly_height(const IntPoly& p) { return p.height(); }
Int poly_height(const BinForm& f) { return f.height(); }

}  // namespace gapkit
