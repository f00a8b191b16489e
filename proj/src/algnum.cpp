#include "gapkit/algnum.hpp"

#include <algorithm>
#include <map>

namespace gapkit {

// ------------------------------------------------------------ irreducibility

namespace {

// groups root indices into real singletons and conjugate pairs
std::vector<std::vector<int>> conjugation_units(const RootSet& rs) {
  std::vector<std::vector<int>> units;
  std::vector<bool> seen(rs.size(), false);
  for (size_t i = 0; i < rs.size(); ++i) {
    if (seen[i]) continue;
    seen[i] = true;
    if (rs[i].real) {
      units.push_back({static_cast<int>(i)});
      continue;
    }
    int j = rs.locate(rs[i].box.conj());
    if (j < 0 || seen[static_cast<size_t>(j)] || j == static_cast<int>(i))
      throw PrecisionError("could not pair complex conjugate roots");
    seen[static_cast<size_t>(j)] = true;
    units.push_back({static_cast<int>(i), j});
  }
  return units;
}

// lc * prod_{i in S} (x - root_i) as boxes, low degree first
std::vector<ComplexBox> subset_product(const RootSet& rs, const std::vector<int>& idx, const Int& lc,
                                       mpfr_prec_t prec) {
  std::vector<ComplexBox> c{ComplexBox::real(Interval(lc, prec))};
  for (int i : idx) {
    const ComplexBox& r = rs[static_cast<size_t>(i)].box;
    std::vector<ComplexBox> n(c.size() + 1, ComplexBox::real(Interval(0L, prec)));
    for (size_t k = 0; k < c.size(); ++k) {
      n[k + 1] = n[k + 1] + c[k];
      n[k] = n[k] - c[k] * r;
    }
    c = std::move(n);
  }
  return c;
}

enum class Probe { NoFactor, Factor, Unsure };

Probe probe_subset(const IntPoly& f, const RootSet& rs, const std::vector<int>& idx) {
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(rs.bits()) + 32;
  auto c = subset_product(rs, idx, f.lc(), prec);
  std::vector<Int> coeffs;
  for (const auto& z : c) {
    if (!z.im.contains_zero()) return Probe::NoFactor;
    Int lo = ceil_rat(z.re.lower()), hi = floor_rat(z.re.upper());
    if (lo > hi) return Probe::NoFactor;  // no integer inside
    if (lo != hi) return Probe::Unsure;
    coeffs.push_back(lo);
  }
  IntPoly g = IntPoly(coeffs).primitive();
  return divide_exact(f, g, nullptr) ? Probe::Factor : Probe::NoFactor;
}

}  // namespace

bool is_irreducible(const IntPoly& fin) {
  IntPoly f = fin.primitive();
  int d = f.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  if (!is_squarefree(f)) return false;
  unsigned bits = 64;
  for (int attempt = 0; attempt < 10; ++attempt, bits *= 2) {
    RootSet rs = isolate_roots(f, bits);
    auto units = conjugation_units(rs);
    size_t u = units.size();
    bool unsure = false;
    // every proper factor has a conjugation-closed root set; it suffices to probe |S| <= d/2
    for (unsigned long mask = 1; mask < (1ul << u); ++mask) {
      std::vector<int> idx;
      for (size_t k = 0; k < u; ++k)
        if (mask & (1ul << k)) idx.insert(idx.end(), units[k].begin(), units[k].end());
      if (static_cast<int>(idx.size()) * 2 > d) continue;
      Probe pr = probe_subset(f, rs, idx);
      if (pr == Probe::Factor) return false;
      if (pr == Probe::Unsure) unsure = true;
    }
    if (!unsure) return true;
  }
  throw PrecisionError("irreducibility test undecided");
}

// -------------------------------------------------------------------- AlgNum

AlgNum::AlgNum(const IntPoly& f, int index) : f_(f.primitive()), idx_(index) {
  if (f_.degree() < 1) throw HypothesisError("algebraic number needs a polynomial of degree >= 1");
  if (!is_irreducible(f_)) throw HypothesisError("polynomial " + f_.str() + " is reducible over Q");
  if (index < 0 || index >= f_.degree()) throw HypothesisError("root index out of range");
  cache_ = std::make_shared<RootCache>(f_);
}

AlgNum AlgNum::nearest(const IntPoly& f, double re, double im) {
  AlgNum a(f, 0);
  a.idx_ = a.conjugates(128).nearest(re, im);
  return a;
}

AlgNum AlgNum::from_spec(const AlgSpec& spec) {
  if (spec.index) return AlgNum(spec.poly, *spec.index);
  if (spec.approx_re) return nearest(spec.poly, *spec.approx_re, spec.approx_im);
  if (spec.residue) throw HypothesisError("residue selector needs the p-adic constructor");
  // default: largest real root, else index 0
  AlgNum a(spec.poly, 0);
  RootSet rs = a.conjugates();
  for (size_t i = rs.size(); i-- > 0;)
    if (rs[i].real) return AlgNum(spec.poly, static_cast<int>(i));
  return a;
}

bool AlgNum::is_real() const {
  RootSet rs = conjugates();
  return rs[static_cast<size_t>(idx_)].real;
}

ComplexBox AlgNum::value(unsigned bits) const {
  RootSet rs = conjugates(bits);
  return rs[static_cast<size_t>(idx_)].box;
}

Interval AlgNum::real_value(unsigned bits) const {
  RootSet rs = conjugates(bits);
  const auto& r = rs[static_cast<size_t>(idx_)];
  if (!r.real) throw HypothesisError("algebraic number is not real");
  return r.box.re;
}

AlgNum AlgNum::conjugate(int index) const {
  if (index < 0 || index >= degree()) throw HypothesisError("conjugate index out of range");
  AlgNum a = *this;
  a.idx_ = index;
  return a;
}

std::string AlgNum::str() const {
  RootSet rs = conjugates();
  const auto& r = rs[static_cast<size_t>(idx_)];
  std::string s = f_.str() + "@root~" + r.center_re.str(12);
  if (!r.real) s += (r.center_im.sign() >= 0 ? "+" : "") + r.center_im.str(12) + "i";
  return s;
}

// ------------------------------------------------------------ field elements

IntPoly minimal_polynomial_of(const IntPoly& f, const RatPoly& hin) {
  int d = f.degree();
  RatPoly h = hin.rem(f);
  Int den = h.common_denominator();
  IntPoly H = h.numerator_poly();
  if (H.degree() <= 0) {
    // rational value H0/den
    return IntPoly(std::vector<Int>{-H[0], den}).primitive();
  }
  // N(y) = Res_x(f(x), den*y - H(x)) has degree d in y; interpolate from d+1 values
  std::vector<Rat> xs, ys;
  for (int k = 0; k <= d; ++k) {
    IntPoly g = IntPoly::constant(den * k) - H;
    xs.emplace_back(k);
    ys.emplace_back(resultant(f, g));
  }
  // Newton divided differences
  std::vector<Rat> coef = ys;
  for (int j = 1; j <= d; ++j)
    for (int i = d; i >= j; --i)
      coef[static_cast<size_t>(i)] = (coef[static_cast<size_t>(i)] - coef[static_cast<size_t>(i - 1)]) /
                                     (xs[static_cast<size_t>(i)] - xs[static_cast<size_t>(i - j)]);
  RatPoly acc(std::vector<Rat>{coef[static_cast<size_t>(d)]});
  for (int i = d - 1; i >= 0; --i)
    acc = acc * RatPoly(std::vector<Rat>{-xs[static_cast<size_t>(i)], Rat(1)}) +
          RatPoly(std::vector<Rat>{coef[static_cast<size_t>(i)]});
  IntPoly N = acc.numerator_poly();
  return squarefree_part(N).primitive();
}

AlgNum image(const AlgNum& alpha, const RatPoly& h) {
  IntPoly g = minimal_polynomial_of(alpha.minpoly(), h);
  AlgNum beta(g, 0);
  for (unsigned bits = 128; bits <= 1u << 16; bits *= 2) {
    ComplexBox v = h.rem(alpha.minpoly()).eval(alpha.value(bits));
    int j = beta.conjugates(bits).locate(v);
    if (j >= 0) return beta.conjugate(j);
  }
  throw PrecisionError("could not locate the image root");
}

std::vector<Rat> power_table(const AlgNum& alpha, int r) {
  int d = alpha.degree();
  RatPoly x = RatPoly(IntPoly::monomial(1, r)).rem(alpha.minpoly());
  std::vector<Rat> out(static_cast<size_t>(d), Rat(0));
  for (int i = 0; i < d; ++i) out[static_cast<size_t>(i)] = x[i];
  return out;
}

Rat c8(const AlgNum& alpha) {
  Rat m = 0;
  for (const auto& a : power_table(alpha, alpha.degree()))
    if (abs_rat(a) > m) m = abs_rat(a);
  return 1 + m;
}

bool verify_power_rep(const AlgNum& alpha, const AlgNum& beta, const RatPoly& h) {
  const IntPoly& f = alpha.minpoly();
  const IntPoly& g = beta.minpoly();
  // g(h(x)) mod f by Horner in Q[x]/(f)
  RatPoly acc;
  for (int i = g.degree(); i >= 0; --i)
    acc = ((acc * h).rem(f) + RatPoly(std::vector<Rat>{Rat(g[i])})).rem(f);
  if (!acc.is_zero()) return false;
  // h(alpha) is now some root of g; confirm it is the selected one
  for (unsigned bits = 128; bits <= 1u << 14; bits *= 2) {
    ComplexBox v = h.eval(alpha.value(bits));
    int j = beta.conjugates(bits).locate(v);
    if (j >= 0) return j == beta.index();
  }
  throw PrecisionError("could not separate the embedding of h(alpha)");
}

IntPoly scaled_minpoly(const IntPoly& f) {
  int d = f.degree();
  Int c = f.lc();
  std::vector<Int> v(static_cast<size_t>(d) + 1);
  v[static_cast<size_t>(d)] = 1;
  for (int k = 1; k <= d; ++k) v[static_cast<size_t>(d - k)] = f[d - k] * pow_int(c, static_cast<unsigned long>(k - 1));
  return IntPoly(std::move(v));
}

Int theta_upper_bound(const AlgNum& alpha) {
  if (alpha.degree() == 1) return 1;
  Int disc = discriminant(scaled_minpoly(alpha.minpoly()));
  return std::max(Int(1), isqrt(abs_int(disc)));
}

Interval c9_enclosure(const AlgNum& alpha, const AlgNum& beta, unsigned bits) {
  RootSet ra = alpha.conjugates(bits);
  RootSet rb = beta.conjugates(bits);
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits) + 32;
  Interval one(1L, prec);
  Interval hb = rb[0].abs();
  for (const auto& r : rb.roots()) hb = Interval::max(hb, r.abs());
  int d = alpha.degree();
  Interval best(0L, prec);
  for (int j = 0; j < d; ++j) {
    Interval prod = one;
    for (int i = 0; i < d; ++i) {
      if (i == j) continue;
      Interval num = one + ra[static_cast<size_t>(i)].abs();
      Interval den = (ra[static_cast<size_t>(i)].box - ra[static_cast<size_t>(j)].box).abs();
      prod = prod * num / den;
    }
    best = Interval::max(best, prod);
  }
  return Interval(static_cast<long>(d), prec) * hb * best;
}

Rat c9(const AlgNum& alpha, const AlgNum& beta, unsigned bits) {
  return c9_enclosure(alpha, beta, bits).upper();
}

Int denominator_scalar(const PowerBasisRep& rep) {
  Int d = 1;
  for (const auto& b : rep.b) d = lcm_int(d, b.get_den());
  return d;
}

namespace {

Int round_nearest(const BigFloat& v) {
  Rat r = v.to_rat();
  return floor_rat(r + Rat(1, 2));
}

}  // namespace

PowerRepResult power_rep(const AlgNum& alpha, const AlgNum& beta, unsigned max_bits) {
  int d = alpha.degree();
  int e = beta.degree();
  if (d % e != 0)
    return NotInField{"degree " + std::to_string(e) + " does not divide " + std::to_string(d)};
  if (beta.minpoly() == alpha.minpoly() && beta.index() == alpha.index()) {
    PowerBasisRep rep;
    rep.b.assign(static_cast<size_t>(d), Rat(0));
    if (d > 1)
      rep.b[1] = 1;
    else
      rep.b[0] = Rat(-alpha.minpoly()[0], alpha.minpoly()[1]);
    rep.denom = denominator_scalar(rep);
    return rep;
  }
  if (d == 1) {
    // alpha rational: Q(alpha) = Q
    if (e != 1) return NotInField{"alpha is rational"};
    PowerBasisRep rep;
    rep.b = {Rat(-beta.minpoly()[0], beta.minpoly()[1])};
    rep.b[0].canonicalize();
    rep.denom = denominator_scalar(rep);
    return rep;
  }
  Int theta = theta_upper_bound(alpha);
  Int cb = beta.lc();
  bool cplx = !alpha.is_real() || !beta.is_real();
  size_t extra = cplx ? 2 : 1;
  for (unsigned nbits = 64; nbits <= max_bits; nbits *= 2) {
    unsigned bits = nbits + 64;
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits) + 32;
    ComplexBox a = alpha.value(bits);
    ComplexBox b = beta.value(bits);
    Interval c9v = c9_enclosure(alpha, beta, 128);
    // powers of alpha
    std::vector<ComplexBox> vals;
    ComplexBox pw = ComplexBox::real(Interval(1L, prec));
    for (int i = 0; i < d; ++i) {
      vals.push_back(pw);
      pw = pw * a;
    }
    vals.push_back(b);
    BigFloat N(1.0, prec);
    mpfr_mul_2ui(N.get(), N.get(), nbits, MPFR_RNDN);
    Interval Ni = Interval::point(N);
    IntMatrix rows;
    Interval eps(0L, prec);
    for (size_t i = 0; i <= static_cast<size_t>(d); ++i) {
      IntVec row(static_cast<size_t>(d) + 1 + extra, Int(0));
      row[i] = 1;
      Interval re = Ni * vals[i].re;
      row[static_cast<size_t>(d) + 1] = round_nearest(re.mid());
      eps = Interval::max(eps, Interval::point(re.width()));
      if (cplx) {
        Interval im = Ni * vals[i].im;
        row[static_cast<size_t>(d) + 2] = round_nearest(im.mid());
        eps = Interval::max(eps, Interval::point(im.width()));
      }
      rows.push_back(std::move(row));
    }
    LllResult red = lll_reduce(rows);
    for (const auto& v : red.basis) {
      const Int& last = v[static_cast<size_t>(d)];
      if (last == 0) continue;
      std::vector<Rat> coeffs;
      for (int i = 0; i < d; ++i) coeffs.push_back(make_rat(-v[static_cast<size_t>(i)], last));
      RatPoly h(coeffs);
      if (verify_power_rep(alpha, beta, h)) {
        PowerBasisRep rep;
        rep.b = coeffs;
        rep.denom = denominator_scalar(rep);
        return rep;
      }
    }
    // no candidate: certify that no relation of norm <= W exists
    Interval W2 = Interval(Int(theta * theta * cb * cb), prec) *
                  (Interval(static_cast<long>(d), prec) * c9v.sqr() + Interval(1L, prec));
    Interval tail = (eps + Interval(Rat(1, 2), prec)).sqr() *
                    Interval(static_cast<long>(extra) * (d + 1), prec);
    Interval L2 = W2 * (Interval(1L, prec) + tail);
    if (Interval(red.min_gs_norm2(), prec).certainly_gt(L2))
      return NotInField{"lattice certificate: no integer relation within the height bound"};
  }
  throw PrecisionError("power_rep undecided within the precision budget");
}

Rat liouville_c6(const AlgNum& alpha, unsigned bits) {
  RootSet rs = alpha.conjugates(bits);
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits) + 32;
  Interval prod(abs_int(alpha.lc()), prec);
  for (size_t i = 0; i < rs.size(); ++i) {
    if (static_cast<int>(i) == alpha.index()) continue;
    prod = prod * (Interval(1L, prec) + rs[i].abs());
  }
  return (Interval(1L, prec) / prod).lower();
}

bool is_galois(const AlgNum& alpha) {
  for (int j = 0; j < alpha.degree(); ++j) {
    if (std::holds_alternative<NotInField>(power_rep(alpha, alpha.conjugate(j)))) return false;
  }
  return true;
}

// -------------------------------------------------------------------- p-adic

PadicAlgNum::PadicAlgNum(IntPoly f, Int p, Int r0)
    : f_(std::move(f)), p_(std::move(p)), r0_(std::move(r0)), cache_(std::make_shared<Cache>()) {
  r0_ = mod_pos(r0_, p_);
  cache_->k = 1;
  cache_->value = r0_;
}

Int PadicAlgNum::lift(unsigned long k) const {
  if (k == 0) return 0;
  std::lock_guard<std::mutex> lock(cache_->mu);
  IntPoly df = f_.derivative();
  while (cache_->k < k) {
    unsigned long nk = 2 * cache_->k;
    Int mod = pow_int(p_, nk);
    Int a = cache_->value;
    Int fa = mod_pos(f_.eval(a), mod);
    Int inv = inv_mod(mod_pos(df.eval(a), mod), mod);
    cache_->value = mod_pos(a - fa * inv, mod);
    cache_->k = nk;
  }
  return mod_pos(cache_->value, pow_int(p_, k));
}

PadicAlgNum hensel_root(const IntPoly& f, const Int& p, const Int& r0) {
  if (!is_probable_prime(p)) throw HypothesisError("p must be prime");
  if (mod_pos(f.eval(r0), p) != 0) throw HypothesisError("Hensel condition violated: f(r0) != 0 mod p");
  if (mod_pos(f.derivative().eval(r0), p) == 0)
    throw HypothesisError("Hensel condition violated: f'(r0) == 0 mod p");
  return PadicAlgNum(f.primitive(), p, r0);
}

PadicAlgNum padic_image(const PadicAlgNum& xi, const RatPoly& h) {
  IntPoly g = minimal_polynomial_of(xi.minpoly(), h);
  const Int& p = xi.prime();
  Int res = 0;
  Int r = xi.residue();
  for (int i = h.degree(); i >= 0; --i) {
    Rat c = h[i];
    if (mpz_divisible_p(c.get_den().get_mpz_t(), p.get_mpz_t()))
      throw HypothesisError("coefficient denominator divisible by p");
    Int cv = mod_pos(c.get_num() * inv_mod(c.get_den(), p), p);
    res = mod_pos(res * r + cv, p);
  }
  return hensel_root(g, p, res);
}

Rat PadicAbs::value() const { return pow_rat(Rat(prime), -static_cast<long>(valuation)); }
Rat PadicAbsPoly::value() const { return pow_rat(Rat(prime), -valuation); }

PadicAbs padic_abs_linear(const PadicAlgNum& xi, const Int& x, const Int& y, unsigned long k) {
  PadicAbs out;
  out.prime = xi.prime();
  Int mod = pow_int(xi.prime(), k);
  Int v = mod_pos(y * xi.lift(k) - x, mod);
  if (v == 0) {
    out.exact = false;
    out.valuation = k;
    return out;
  }
  out.valuation = valuation(v, xi.prime());
  return out;
}

PadicAbsPoly padic_abs_poly(const PadicAlgNum& xi, const RatPoly& g, unsigned long k) {
  PadicAbsPoly out;
  out.prime = xi.prime();
  Int den = g.common_denominator();
  IntPoly G = g.numerator_poly();
  long vd = static_cast<long>(valuation(den, xi.prime()));
  Int mod = pow_int(xi.prime(), k);
  Int v = mod_pos(G.eval(xi.lift(k)), mod);
  if (v == 0) {
    out.exact = false;
    out.valuation = static_cast<long>(k) - vd;
    return out;
  }
  out.valuation = static_cast<long>(valuation(v, xi.prime())) - vd;
  return out;
}

Rat liouville_c7(const PadicAlgNum& xi) {
  int d = xi.degree();
  Int c = abs_int(xi.lc());
  return make_rat(Int(1), pow_int(c, static_cast<unsigned long>(d + 1)) * (d + 1) * xi.minpoly().height());
}

}  // namespace gapkit
