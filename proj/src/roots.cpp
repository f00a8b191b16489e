#include "gapkit/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gapkit/sqrt_rat.hpp"

namespace gapkit {

namespace {

struct CF {
  BigFloat re, im;
};

CF cadd(const CF& a, const CF& b) { return {a.re + b.re, a.im + b.im}; }
CF csub(const CF& a, const CF& b) { return {a.re - b.re, a.im - b.im}; }
CF cmul(const CF& a, const CF& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
CF cdiv(const CF& a, const CF& b) {
  BigFloat n = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}
BigFloat cabs2(const CF& a) { return a.re * a.re + a.im * a.im; }

CF with_prec(const CF& z, mpfr_prec_t p) { return {z.re.with_prec(p), z.im.with_prec(p)}; }

// p(z) and p'(z) by Horner
void horner(const IntPoly& p, const std::vector<BigFloat>& c, const CF& z, CF& val, CF& der) {
  mpfr_prec_t prec = z.re.prec();
  val = {BigFloat(prec), BigFloat(prec)};
  der = {BigFloat(prec), BigFloat(prec)};
  for (int i = p.degree(); i >= 0; --i) {
    der = cadd(cmul(der, z), val);
    val = cmul(val, z);
    val.re = val.re + c[static_cast<size_t>(i)];
  }
}

// One run of Aberth iterations; returns true when corrections fell below 2^-(prec-12).
bool aberth(const IntPoly& p, std::vector<CF>& z, mpfr_prec_t prec, int max_iter) {
  size_t n = z.size();
  std::vector<BigFloat> c;
  for (int i = 0; i <= p.degree(); ++i) c.emplace_back(p[i], prec);
  for (auto& w : z) w = with_prec(w, prec);
  BigFloat tol(1.0, prec);
  mpfr_mul_2si(tol.get(), tol.get(), -2 * (static_cast<long>(prec) - 12), MPFR_RNDN);
  for (int it = 0; it < max_iter; ++it) {
    bool small = true;
    for (size_t i = 0; i < n; ++i) {
      CF val, der;
      horner(p, c, z[i], val, der);
      if (val.re.is_zero() && val.im.is_zero()) continue;
      CF ratio = cdiv(val, der);  // Newton step
      CF sum{BigFloat(prec), BigFloat(prec)};
      for (size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        CF diff = csub(z[i], z[j]);
        if (diff.re.is_zero() && diff.im.is_zero()) diff.re = BigFloat(1e-30, prec);
        sum = cadd(sum, cdiv(CF{BigFloat(1.0, prec), BigFloat(prec)}, diff));
      }
      CF one{BigFloat(1.0, prec), BigFloat(prec)};
      CF denom = csub(one, cmul(ratio, sum));
      CF step = (denom.re.is_zero() && denom.im.is_zero()) ? ratio : cdiv(ratio, denom);
      z[i] = csub(z[i], step);
      BigFloat scale = cabs2(z[i]) + BigFloat(1.0, prec);
      if (cabs2(step) > tol * scale) small = false;
    }
    if (small) return true;
  }
  return false;
}

struct CertResult {
  bool ok = false;
  std::vector<RootEnclosure> roots;
};

CertResult certify(const IntPoly& p, std::vector<CF>& z, mpfr_prec_t prec) {
  size_t n = z.size();
  CertResult res;
  // snap nearly-real approximations onto the axis
  BigFloat snap(1.0, prec);
  mpfr_mul_2si(snap.get(), snap.get(), -static_cast<long>(prec) / 2, MPFR_RNDN);
  std::vector<bool> real(n, false);
  for (size_t i = 0; i < n; ++i) {
    BigFloat m = z[i].re.abs() + BigFloat(1.0, prec);
    if (z[i].im.abs() < snap * m) {
      z[i].im = BigFloat(prec);
      real[i] = true;
    }
  }
  Interval lc(p.lc(), prec);
  std::vector<Interval> rad;
  for (size_t i = 0; i < n; ++i) {
    ComplexBox zi = ComplexBox::point(z[i].re, z[i].im);
    ComplexBox val = p.eval(zi);
    ComplexBox den{lc, Interval(0L, prec)};
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      ComplexBox d = zi - ComplexBox::point(z[j].re, z[j].im);
      if (d.contains_zero()) return res;
      den = den * d;
    }
    if (den.contains_zero()) return res;
    Interval r;
    try {
      r = Interval(static_cast<long>(n), prec) * (val / den).abs();
    } catch (const PrecisionError&) {
      return res;
    }
    rad.push_back(r);
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      ComplexBox d = ComplexBox::point(z[i].re, z[i].im) - ComplexBox::point(z[j].re, z[j].im);
      if (!(d.abs().lo() > (rad[i] + rad[j]).hi())) return res;
    }
  for (size_t i = 0; i < n; ++i) {
    if (!real[i] && !(z[i].im.abs() > rad[i].hi())) return res;
    RootEnclosure e;
    e.real = real[i];
    e.center_re = z[i].re;
    e.center_im = z[i].im;
    e.radius = rad[i].hi();
    Interval r(-rad[i].hi(), rad[i].hi());
    Interval cr = Interval::point(z[i].re) + r;
    Interval ci = real[i] ? Interval(0L, prec) : Interval::point(z[i].im) + r;
    e.box = ComplexBox(cr, ci);
    res.roots.push_back(std::move(e));
  }
  res.ok = true;
  return res;
}

bool wide_enough(const std::vector<RootEnclosure>& roots, unsigned bits) {
  for (const auto& e : roots) {
    BigFloat lim(1.0, e.radius.prec());
    mpfr_mul_2si(lim.get(), lim.get(), -static_cast<long>(bits), MPFR_RNDN);
    BigFloat scale = e.center_re.abs() + e.center_im.abs() + BigFloat(1.0, e.radius.prec());
    if (e.radius > lim * scale) return false;
  }
  return true;
}

// Runs iterate/certify with growing precision until enclosures reach `bits`.
std::vector<RootEnclosure> solve(const IntPoly& p, std::vector<CF> z, unsigned bits,
                                 std::vector<CF>* final_z) {
  mpfr_prec_t prec = z.empty() ? 64 : std::max<mpfr_prec_t>(64, z[0].re.prec());
  mpfr_prec_t target = static_cast<mpfr_prec_t>(bits) + 32;
  for (int attempt = 0; attempt < 16; ++attempt) {
    aberth(p, z, prec, 400 + 40 * p.degree());
    std::vector<CF> zc = z;
    CertResult c = certify(p, zc, prec);
    if (c.ok && wide_enough(c.roots, bits)) {
      if (final_z) *final_z = zc;
      return c.roots;
    }
    prec = (c.ok && prec < target) ? target : 2 * prec;
  }
  throw PrecisionError("root isolation did not certify within the precision budget");
}

bool less_root(const RootEnclosure& a, const RootEnclosure& b) {
  if (a.box.re.certainly_lt(b.box.re)) return true;
  if (b.box.re.certainly_lt(a.box.re)) return false;
  return a.center_im < b.center_im;
}

}  // namespace

RootSet isolate_roots(const IntPoly& p, unsigned bits) {
  int n = p.degree();
  if (n < 1) throw HypothesisError("isolate_roots needs degree >= 1");
  if (!is_squarefree(p)) throw HypothesisError("isolate_roots needs a squarefree polynomial");
  mpfr_prec_t prec = 64;
  // starting points on a circle of Cauchy-bound radius
  double R = 0;
  double lcd = std::fabs(p.lc().get_d());
  for (int i = 0; i < n; ++i) R = std::max(R, std::fabs(p[i].get_d()) / lcd);
  R = std::min(1.0 + R, 1e300);
  // shrink toward a typical root modulus
  double geo = std::pow(std::fabs(p[0].get_d()) / lcd + 1e-300, 1.0 / n);
  double start = std::max(std::min(R, std::max(geo, 0.5)), 1e-6);
  std::vector<CF> z;
  for (int k = 0; k < n; ++k) {
    double ang = 2.0 * M_PI * k / n + 0.4;
    z.push_back({BigFloat(start * std::cos(ang), prec), BigFloat(start * std::sin(ang), prec)});
  }
  std::vector<CF> zf;
  std::vector<RootEnclosure> roots = solve(p, z, std::max(bits, 64u), &zf);
  std::sort(roots.begin(), roots.end(), less_root);
  return RootSet(p, std::move(roots), bits);
}

RootSet RootSet::refine(unsigned bits) const {
  if (bits <= bits_) return *this;
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits) + 32;
  std::vector<CF> z;
  for (const auto& e : roots_) z.push_back({e.center_re.with_prec(prec), e.center_im.with_prec(prec)});
  std::vector<RootEnclosure> fresh = solve(p_, z, bits, nullptr);
  // match by containment so indices keep their meaning
  std::vector<RootEnclosure> out(roots_.size());
  std::vector<bool> used(roots_.size(), false);
  for (auto& e : fresh) {
    int hit = -1;
    for (size_t j = 0; j < roots_.size(); ++j)
      if (roots_[j].box.re.contains(e.box.re) && roots_[j].box.im.contains(e.box.im)) {
        if (hit >= 0) throw InvariantError("refined root lies in two old enclosures");
        hit = static_cast<int>(j);
      }
    if (hit < 0 || used[static_cast<size_t>(hit)])
      throw InvariantError("refined root enclosure does not nest in the previous one");
    used[static_cast<size_t>(hit)] = true;
    out[static_cast<size_t>(hit)] = std::move(e);
  }
  return RootSet(p_, std::move(out), bits);
}

int RootSet::locate(const ComplexBox& b) const {
  int hit = -1;
  for (size_t j = 0; j < roots_.size(); ++j) {
    if (roots_[j].box.overlaps(b)) {
      if (hit >= 0) return -1;
      hit = static_cast<int>(j);
    }
  }
  return hit;
}

int RootSet::nearest(double re, double im) const {
  int best = -1;
  double bd = 0;
  for (size_t j = 0; j < roots_.size(); ++j) {
    double dr = roots_[j].approx_re() - re, di = roots_[j].approx_im() - im;
    double d = dr * dr + di * di;
    if (best < 0 || d < bd) {
      best = static_cast<int>(j);
      bd = d;
    }
  }
  return best;
}

RootSet RootCache::get(unsigned bits) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!best_) best_ = std::make_shared<RootSet>(isolate_roots(p_, std::max(bits, 128u)));
  if (best_->bits() < bits) best_ = std::make_shared<RootSet>(best_->refine(std::max(bits, 2 * best_->bits())));
  return *best_;
}

// p = content * prod g_i^i with g_i squarefree and pairwise coprime
static std::vector<std::pair<IntPoly, int>> squarefree_factors(const IntPoly& p) {
  auto quo = [](const IntPoly& x, const IntPoly& y) {
    IntPoly q;
    if (!divide_exact(x * y.lc(), y, &q)) throw InvariantError("squarefree decomposition");
    return q.primitive();
  };
  auto radical = [&](const IntPoly& x) {
    if (x.degree() < 1) return IntPoly::constant(1);
    return quo(x, gcd(x, x.derivative()));
  };
  std::vector<std::pair<IntPoly, int>> out;
  IntPoly rest = p.primitive();
  for (int i = 1; rest.degree() > 0; ++i) {
    IntPoly g = gcd(rest, rest.derivative());
    IntPoly gi = quo(radical(rest), radical(g));
    if (gi.degree() > 0) out.emplace_back(gi, i);
    rest = g;
  }
  return out;
}

Interval mahler_measure(const IntPoly& p, unsigned bits) {
  if (p.is_zero()) throw HypothesisError("Mahler measure of the zero polynomial");
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits) + 32;
  if (p.degree() == 0) return Interval(abs_int(p.lc()), prec);
  // M is multiplicative: |content| * prod M(g_i)^i
  Interval m(abs_int(p.content()), prec);
  Interval one(1L, prec);
  Int lcprod = 1;
  for (const auto& [g, mult] : squarefree_factors(p)) {
    RootSet rs = isolate_roots(g, bits);
    Interval mg(abs_int(g.lc()), prec);
    for (const auto& r : rs.roots()) mg = mg * Interval::max(one, r.abs());
    m = m * mg.pow(static_cast<unsigned long>(mult));
    lcprod *= pow_int(g.lc(), static_cast<unsigned long>(mult));
  }
  if (abs_int(lcprod * p.content()) != abs_int(p.lc()))
    throw InvariantError("squarefree factors do not reproduce the leading coefficient");
  return m;
}

Interval mahler_measure(const BinForm& f, unsigned bits) { return mahler_measure(f.dehomogenize(), bits); }

Interval house(const IntPoly& p, unsigned bits) {
  if (p.degree() < 1) throw HypothesisError("house of a constant polynomial");
  RootSet rs = isolate_roots(squarefree_part(p), bits);
  Interval h = rs[0].abs();
  for (const auto& r : rs.roots()) h = Interval::max(h, r.abs());
  return h;
}

Rat root_separation_lower_bound(const IntPoly& p, const IntPoly& q) {
  int r = p.degree();
  if (r < std::max(1, q.degree())) throw HypothesisError("need deg P >= max(1, deg Q)");
  if (gcd(p, q).degree() > 0) throw HypothesisError("P and Q are not coprime");
  Int h = std::max(p.height(), q.height());
  SqrtRat v = SqrtRat::half_power(Int(r + 1), 1 - 3 * r);
  v = v * SqrtRat::of_rat(pow_rat(Rat(2), 1 - r) * pow_rat(Rat(h), -2 * r));
  return v.round_down(64);
}

}  // namespace gapkit
