#include "gapkit/interval.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace gapkit {

void ensure_mpfr_range() {
  static std::once_flag once;
  std::call_once(once, [] {
    mpfr_set_emax(mpfr_get_emax_max());
    mpfr_set_emin(mpfr_get_emin_min());
  });
}

// ---------------------------------------------------------------- BigFloat

BigFloat::BigFloat(mpfr_prec_t prec) {
  ensure_mpfr_range();
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(double v, mpfr_prec_t prec) : BigFloat(prec) { mpfr_set_d(v_, v, MPFR_RNDN); }
BigFloat::BigFloat(const Int& v, mpfr_prec_t prec) : BigFloat(prec) {
  mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}
BigFloat::BigFloat(const Rat& v, mpfr_prec_t prec) : BigFloat(prec) {
  mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, o.prec());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

Rat BigFloat::to_rat() const {
  if (!mpfr_number_p(v_)) throw PrecisionError("non-finite float has no rational value");
  Rat r;
  mpfr_get_q(r.get_mpq_t(), v_);
  return r;
}

BigFloat BigFloat::with_prec(mpfr_prec_t p) const {
  BigFloat r(p);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

static mpfr_prec_t pmax(const BigFloat& a, const BigFloat& b) { return std::max(a.prec(), b.prec()); }

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(pmax(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(pmax(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(pmax(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(pmax(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
BigFloat BigFloat::operator-() const {
  BigFloat r(prec());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}
BigFloat BigFloat::abs() const {
  BigFloat r(prec());
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}
BigFloat BigFloat::sqrt() const {
  BigFloat r(prec());
  mpfr_sqrt(r.v_, v_, MPFR_RNDN);
  return r;
}

static std::string format_mpfr(mpfr_srcptr v, int digits, mpfr_rnd_t rnd) {
  if (mpfr_zero_p(v)) return "0";
  if (mpfr_inf_p(v)) return mpfr_sgn(v) > 0 ? "inf" : "-inf";
  if (mpfr_nan_p(v)) return "nan";
  mpfr_exp_t e;
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v, rnd);
  std::string m(s);
  mpfr_free_str(s);
  std::string sign;
  if (!m.empty() && m[0] == '-') {
    sign = "-";
    m.erase(0, 1);
  }
  std::ostringstream out;
  long exp10 = static_cast<long>(e) - 1;
  if (exp10 >= -6 && exp10 < 21) {
    // plain positional notation
    std::string digitsStr = m;
    while (digitsStr.size() > 1 && digitsStr.back() == '0' &&
           static_cast<long>(digitsStr.size()) > exp10 + 1)
      digitsStr.pop_back();
    if (exp10 >= 0) {
      if (static_cast<long>(digitsStr.size()) <= exp10 + 1) {
        digitsStr.append(static_cast<size_t>(exp10 + 1) - digitsStr.size(), '0');
        out << sign << digitsStr;
      } else {
        out << sign << digitsStr.substr(0, static_cast<size_t>(exp10 + 1)) << '.'
            << digitsStr.substr(static_cast<size_t>(exp10 + 1));
      }
    } else {
      out << sign << "0." << std::string(static_cast<size_t>(-exp10 - 1), '0') << digitsStr;
    }
  } else {
    std::string frac = m.substr(1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    out << sign << m[0];
    if (!frac.empty()) out << '.' << frac;
    out << 'e' << (exp10 >= 0 ? "+" : "") << exp10;
  }
  return out.str();
}

std::string BigFloat::str(int digits) const { return format_mpfr(v_, digits, MPFR_RNDN); }

// ---------------------------------------------------------------- Interval

Interval::Interval(mpfr_prec_t prec) : lo_(prec), hi_(prec) {}

Interval::Interval(const Int& v, mpfr_prec_t prec) : lo_(prec), hi_(prec) {
  mpfr_set_z(lo_.get(), v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi_.get(), v.get_mpz_t(), MPFR_RNDU);
}

Interval::Interval(const Rat& v, mpfr_prec_t prec) : lo_(prec), hi_(prec) {
  mpfr_set_q(lo_.get(), v.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_.get(), v.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const BigFloat& lo, const BigFloat& hi) : lo_(lo), hi_(hi) {
  if (lo_.prec() != hi_.prec()) {
    mpfr_prec_t p = std::max(lo.prec(), hi.prec());
    lo_ = BigFloat(p);
    hi_ = BigFloat(p);
    mpfr_set(lo_.get(), lo.get(), MPFR_RNDD);
    mpfr_set(hi_.get(), hi.get(), MPFR_RNDU);
  }
  if (hi_ < lo_) throw InvariantError("interval with lo > hi");
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  mpfr_prec_t p = std::max(a.prec(), b.prec());
  Interval r(p);
  mpfr_min(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_max(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::pi(mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_const_pi(r.lo_.get(), MPFR_RNDD);
  mpfr_const_pi(r.hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::log2_const(mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_const_log2(r.lo_.get(), MPFR_RNDD);
  mpfr_const_log2(r.hi_.get(), MPFR_RNDU);
  return r;
}

BigFloat Interval::mid() const {
  BigFloat r(prec() + 2);
  mpfr_add(r.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(r.get(), r.get(), 1, MPFR_RNDN);
  return r;
}

BigFloat Interval::width() const {
  BigFloat r(prec());
  mpfr_sub(r.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return r;
}

bool Interval::contains(const Rat& r) const {
  return mpfr_cmp_q(lo_.get(), r.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), r.get_mpq_t()) >= 0;
}

bool Interval::contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }

static mpfr_prec_t pmax(const Interval& a, const Interval& b) { return std::max(a.prec(), b.prec()); }

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(pmax(a, b));
  mpfr_add(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_add(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(pmax(a, b));
  mpfr_sub(r.lo_.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
  mpfr_sub(r.hi_.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::operator-() const {
  Interval r(prec());
  mpfr_neg(r.lo_.get(), hi_.get(), MPFR_RNDD);
  mpfr_neg(r.hi_.get(), lo_.get(), MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  mpfr_prec_t p = pmax(a, b);
  Interval r(p);
  BigFloat t(p);
  const BigFloat* xs[2] = {&a.lo_, &a.hi_};
  const BigFloat* ys[2] = {&b.lo_, &b.hi_};
  bool first = true;
  for (auto* x : xs)
    for (auto* y : ys) {
      mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDD);
      if (first || t < r.lo_) mpfr_set(r.lo_.get(), t.get(), MPFR_RNDD);
      mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDU);
      if (first || t > r.hi_) mpfr_set(r.hi_.get(), t.get(), MPFR_RNDU);
      first = false;
    }
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw PrecisionError("interval division by an enclosure of zero");
  mpfr_prec_t p = pmax(a, b);
  Interval r(p);
  BigFloat t(p);
  const BigFloat* xs[2] = {&a.lo_, &a.hi_};
  const BigFloat* ys[2] = {&b.lo_, &b.hi_};
  bool first = true;
  for (auto* x : xs)
    for (auto* y : ys) {
      mpfr_div(t.get(), x->get(), y->get(), MPFR_RNDD);
      if (first || t < r.lo_) mpfr_set(r.lo_.get(), t.get(), MPFR_RNDD);
      mpfr_div(t.get(), x->get(), y->get(), MPFR_RNDU);
      if (first || t > r.hi_) mpfr_set(r.hi_.get(), t.get(), MPFR_RNDU);
      first = false;
    }
  return r;
}

Interval Interval::abs() const {
  if (lo_.sign() >= 0) return *this;
  if (hi_.sign() <= 0) return -*this;
  Interval r(prec());
  mpfr_set_zero(r.lo_.get(), 1);
  mpfr_max(r.hi_.get(), hi_.get(), (-lo_).get(), MPFR_RNDU);
  return r;
}

Interval Interval::sqr() const {
  Interval a = abs();
  Interval r(prec());
  mpfr_sqr(r.lo_.get(), a.lo_.get(), MPFR_RNDD);
  mpfr_sqr(r.hi_.get(), a.hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::sqrt() const {
  if (hi_.sign() < 0) throw HypothesisError("sqrt of a negative interval");
  Interval r(prec());
  if (lo_.sign() > 0) mpfr_sqrt(r.lo_.get(), lo_.get(), MPFR_RNDD);
  mpfr_sqrt(r.hi_.get(), hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::log() const {
  if (lo_.sign() <= 0) throw PrecisionError("log of an interval not bounded away from zero");
  Interval r(prec());
  mpfr_log(r.lo_.get(), lo_.get(), MPFR_RNDD);
  mpfr_log(r.hi_.get(), hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::exp() const {
  Interval r(prec());
  mpfr_exp(r.lo_.get(), lo_.get(), MPFR_RNDD);
  mpfr_exp(r.hi_.get(), hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::pow(unsigned long n) const {
  if (n == 0) return Interval(1L, prec());
  Interval base = *this;
  if (n % 2 == 0) base = abs();
  if (base.lo_.sign() >= 0 || n % 2 == 1) {
    // monotone on the relevant range
    Interval r(prec());
    mpfr_pow_ui(r.lo_.get(), base.lo_.get(), n, MPFR_RNDD);
    mpfr_pow_ui(r.hi_.get(), base.hi_.get(), n, MPFR_RNDU);
    return r;
  }
  throw InvariantError("unreachable pow branch");
}

Interval Interval::pow(const Rat& e) const {
  if (e.get_den() == 1 && e >= 0 && e.get_num().fits_ulong_p()) return pow(e.get_num().get_ui());
  if (e.get_den() == 1 && e < 0 && Int(-e.get_num()).fits_ulong_p())
    return Interval(1L, prec()) / pow(Int(-e.get_num()).get_ui());
  return (Interval(e, prec()) * log()).exp();
}

Interval Interval::pow(const Interval& e) const { return (e * log()).exp(); }

Interval Interval::with_prec(mpfr_prec_t p) const {
  Interval r(p);
  mpfr_set(r.lo_.get(), lo_.get(), MPFR_RNDD);
  mpfr_set(r.hi_.get(), hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::max(const Interval& a, const Interval& b) {
  Interval r(pmax(a, b));
  mpfr_max(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_max(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return r;
}

Interval Interval::min(const Interval& a, const Interval& b) {
  Interval r(pmax(a, b));
  mpfr_min(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
  mpfr_min(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
  return r;
}

std::string Interval::upper_str(int digits) const { return format_mpfr(hi_.get(), digits, MPFR_RNDU); }
std::string Interval::lower_str(int digits) const { return format_mpfr(lo_.get(), digits, MPFR_RNDD); }
std::string Interval::str(int digits) const {
  return "[" + lower_str(digits) + ", " + upper_str(digits) + "]";
}

// -------------------------------------------------------------- ComplexBox

ComplexBox ComplexBox::operator*(const ComplexBox& o) const {
  return {re * o.re - im * o.im, re * o.im + im * o.re};
}

ComplexBox ComplexBox::operator/(const ComplexBox& o) const {
  Interval n = o.norm2();
  return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
}

Interval ComplexBox::abs() const { return norm2().sqrt(); }

std::string ComplexBox::str(int digits) const {
  return re.str(digits) + " + i*" + im.str(digits);
}

}  // namespace gapkit
