#include "gapkit/minpair.hpp"

#include <algorithm>

namespace gapkit {

std::string to_string(PairMode m) { return m == PairMode::Exact ? "exact" : "siegel-bounded"; }

namespace {

RatPoly reduced_h(const IntPoly& f, const RatPoly& h) {
  RatPoly hr = h.rem(f);
  if (hr.degree() <= 0) throw HypothesisError("beta is rational");
  return hr;
}

// sign so that lc(Q) > 0 (Q never vanishes on a nonzero kernel vector)
IntVec normalize_sign(IntVec a, int s) {
  for (int j = s; j >= 0; --j) {
    const Int& q = a[static_cast<size_t>(s + 1 + j)];
    if (q == 0) continue;
    if (q < 0)
      for (auto& x : a) x = -x;
    break;
  }
  return a;
}

Rat siegel_bound(const LinearSystem& sys) {
  long N = 2 * sys.s + 2;
  long M = static_cast<long>(sys.rank);
  Int A = 1;
  for (const auto& row : sys.scaled)
    for (const auto& x : row) A = std::max(A, abs_int(x));
  Int NA = A * N;
  if ((M % (N - M)) == 0) return Rat(pow_int(NA, static_cast<unsigned long>(M / (N - M))));
  Interval v = Interval(NA, 128).pow(Rat(M, N - M));
  return Rat(ceil_rat(v.upper()));
}

}  // namespace

LinearSystem build_system(const IntPoly& f, const RatPoly& h, int s) {
  int d = f.degree();
  if (s < 1 || 2 * s > d) throw HypothesisError("system degree s must satisfy 1 <= s <= d/2");
  RatPoly hr = h.rem(f);
  LinearSystem sys;
  sys.s = s;
  size_t n = static_cast<size_t>(2 * s + 2);
  sys.rational.assign(static_cast<size_t>(d), std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i <= s; ++i) sys.rational[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  for (int j = 0; j <= s; ++j) {
    RatPoly col = (hr * RatPoly(IntPoly::monomial(1, j))).rem(f);
    for (int k = 0; k < d; ++k) sys.rational[static_cast<size_t>(k)][static_cast<size_t>(s + 1 + j)] = col[k];
  }
  sys.scale = hr.common_denominator() * pow_int(abs_int(f.lc()), static_cast<unsigned long>(s));
  for (const auto& row : sys.rational) {
    IntVec out;
    for (const auto& x : row) {
      Rat y = x * sys.scale;
      if (y.get_den() != 1) throw InvariantError("scaled system is not integral");
      out.push_back(y.get_num());
    }
    sys.scaled.push_back(std::move(out));
  }
  sys.rank = matrix_rank(sys.scaled);
  return sys;
}

LinearSystem build_system(const AlgNum& alpha, const PowerBasisRep& rep, int s) {
  return build_system(alpha.minpoly(), rep.as_poly(), s);
}

std::pair<IntPoly, IntPoly> split_kernel_vector(const IntVec& a, int s) {
  auto mid = a.begin() + s + 1;
  return {IntPoly(IntVec(a.begin(), mid)), IntPoly(IntVec(mid, a.end()))};
}

MinimalPair find_pair(const IntPoly& fin, const RatPoly& h, PairMode mode) {
  IntPoly f = fin.primitive();
  reduced_h(f, h);
  int d = f.degree();
  for (int r = 1; 2 * r <= d; ++r) {
    LinearSystem sys = build_system(f, h, r);
    size_t n = static_cast<size_t>(2 * r + 2);
    if (sys.rank == n) continue;
    IntMatrix ker = integer_kernel(sys.scaled, n);
    MinimalPair mp;
    mp.r = r;
    mp.minimality = mode;
    mp.kernel_dim = static_cast<int>(ker.size());
    mp.siegel_bound = siegel_bound(sys);
    IntVec best;
    if (mode == PairMode::Siegel) {
      best = normalize_sign(ker[0], r);
    } else {
      Int bound = max_norm(ker[0]);
      for (const auto& v : ker) bound = std::min(bound, max_norm(v));
      Int bestNorm = bound + 1;
      for (auto& v : enumerate_max_norm(ker, bound)) {
        IntVec w = normalize_sign(std::move(v), r);
        Int m = max_norm(w);
        if (m < bestNorm || (m == bestNorm && w < best)) {
          bestNorm = m;
          best = std::move(w);
        }
      }
      if (best.empty()) throw InvariantError("kernel enumeration returned nothing");
    }
    std::tie(mp.P, mp.Q) = split_kernel_vector(best, r);
    mp.height = max_norm(best);
    return mp;
  }
  throw InvariantError("no kernel up to degree d/2");
}

MinimalPair find_pair(const AlgNum& alpha, const AlgNum& beta, PairMode mode) {
  PowerRepResult rep = power_rep(alpha, beta);
  if (auto* nf = std::get_if<NotInField>(&rep)) throw HypothesisError("beta is not in Q(alpha): " + nf->reason);
  return find_pair(alpha.minpoly(), std::get<PowerBasisRep>(rep).as_poly(), mode);
}

PairReport verify_pair(const IntPoly& fin, const RatPoly& h, const IntPoly& P, const IntPoly& Q,
                       const std::optional<std::pair<IntPoly, IntPoly>>& candidate) {
  IntPoly f = fin.primitive();
  int d = f.degree();
  PairReport rep;
  RatPoly hr = h.rem(f);
  auto vanishes = [&](const IntPoly& a, const IntPoly& b) {
    return (RatPoly(a) + hr * RatPoly(b)).rem(f).is_zero();
  };
  rep.vanishing = !(P.is_zero() && Q.is_zero()) && vanishes(P, Q);
  if (!rep.vanishing) rep.failures.push_back("P(alpha) + beta Q(alpha) != 0");
  IntPoly g = gcd(P, Q);
  rep.coprime = !g.is_zero() && g.degree() == 0;
  if (!rep.coprime) rep.failures.push_back("P and Q have a common factor " + g.str());
  int r = std::max(P.degree(), Q.degree());
  rep.degree = r >= 1 && 2 * r <= d;
  if (!rep.degree) rep.failures.push_back("r = " + std::to_string(r) + " outside [1, d/2]");
  if (candidate) {
    const auto& [Ph, Qh] = *candidate;
    bool ok = std::max(Ph.degree(), Qh.degree()) <= d - 1 - r && vanishes(Ph, Qh) &&
              (Ph * Q - Qh * P).is_zero();
    IntPoly G;
    if (ok && !(Ph.is_zero() && Qh.is_zero())) {
      if (!P.is_zero())
        ok = divide_exact(Ph, P, &G) && G * Q == Qh;
      else
        ok = divide_exact(Qh, Q, &G) && G * P == Ph;
    }
    rep.part3 = ok;
    if (ok)
      rep.G = G;
    else
      rep.failures.push_back("candidate pair is not a multiple G (P, Q)");
  }
  return rep;
}

PairReport verify_pair(const AlgNum& alpha, const AlgNum& beta, const IntPoly& P, const IntPoly& Q,
                       const std::optional<std::pair<IntPoly, IntPoly>>& candidate) {
  PowerRepResult rep = power_rep(alpha, beta);
  if (auto* nf = std::get_if<NotInField>(&rep)) {
    PairReport out;
    out.failures.push_back("beta is not in Q(alpha): " + nf->reason);
    return out;
  }
  return verify_pair(alpha.minpoly(), std::get<PowerBasisRep>(rep).as_poly(), P, Q, candidate);
}

IntPoly wronskian(const IntPoly& P, const IntPoly& Q) { return P * Q.derivative() - Q * P.derivative(); }

C12Result c12(const IntPoly& fin, const RatPoly& h, const MinimalPair& pair, unsigned bits) {
  IntPoly f = fin.primitive();
  int d = f.degree();
  int s = d / 2;
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits) + 32;
  RatPoly hr = reduced_h(f, h);
  AlgNum alpha(f, 0);
  AlgNum beta(minimal_polynomial_of(f, hr), 0);
  Interval C9 = c9_enclosure(alpha, beta, bits);
  Rat C8 = c8(alpha);
  Int D = hr.common_denominator();
  Int c = abs_int(f.lc());
  Interval base = Interval(Int(D * pow_int(c, static_cast<unsigned long>(s)) * (2 * s + 2)), prec) * C9 *
                  Interval(Rat(1 + s * pow_rat(C8, s)), prec);
  unsigned long e = static_cast<unsigned long>(d / (2 * s + 2 - d));
  Interval closed = base.pow(e) * pow_half(Interval(2L, prec), static_cast<unsigned long>(d));
  C12Result out;
  out.closed_form = Bound::upper(closed, "closed form");
  out.tautological = pair.height;
  Bound taut = Bound::of(Rat(pair.height), "height of the computed pair", prec);
  if (pair.minimality == PairMode::Exact && closed.certainly_lt(taut.enc))
    out.value = out.closed_form;
  else
    out.value = taut;
  return out;
}

WronskianBound c13(const AlgNum& alpha, const MinimalPair& pair, const Bound& c12v, unsigned bits) {
  IntPoly W = wronskian(pair.P, pair.Q);
  if (W.is_zero()) throw InvariantError("Wronskian vanishes identically");
  int d = alpha.degree();
  WronskianBound out;
  Interval wa;
  for (;; bits *= 2) {
    wa = W.eval(alpha.value(bits)).abs();
    if (wa.positive()) break;
    if (bits > (1u << 15)) throw PrecisionError("could not separate W(alpha) from 0");
  }
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits) + 32;
  out.direct = Bound::lower(wa, "enclosure of |W(alpha)|");
  Interval C12 = c12v.point().with_prec(prec);
  Interval a = Interval(Rat(Int(d) * d * d, 2), prec) * C12.sqr();
  Interval M = mahler_measure(alpha.minpoly(), bits);
  Interval mx = Interval::max(Interval(1L, prec), alpha.value(bits).abs());
  Interval q = Interval(pow_int(abs_int(alpha.lc()), static_cast<unsigned long>(d - 1)), prec) * M / mx;
  unsigned long e = static_cast<unsigned long>(d - 1);
  Interval formula = Interval(1L, prec) / (a.pow(e) * q.pow(e));
  out.formula = Bound::lower(formula, "closed form");
  out.value = max_lower(out.direct, out.formula);
  return out;
}

WronskianBound c14(const PadicAlgNum& xi, const MinimalPair& pair, const Bound& c12v) {
  IntPoly W = wronskian(pair.P, pair.Q);
  if (W.is_zero()) throw InvariantError("Wronskian vanishes identically");
  int d = xi.degree();
  mpfr_prec_t prec = 160;
  WronskianBound out;
  out.direct = Bound::of(Rat(0), "valuation of W(alpha) not determined", prec);
  for (unsigned long k = 64; k <= 1024; k *= 4) {
    PadicAbsPoly v = padic_abs_poly(xi, RatPoly(W), k);
    if (v.exact) {
      out.direct = Bound::of(v.value(), "exact |W(alpha)|_p", prec);
      break;
    }
  }
  Interval C12 = c12v.point().with_prec(prec);
  Interval H(xi.minpoly().height(), prec);
  Interval den = pow_half(Interval(Int(d + 1), prec), static_cast<unsigned long>(d - 1)) *
                 pow_half(Interval(Int(d), prec), static_cast<unsigned long>(d)) *
                 H.pow(static_cast<unsigned long>(2 * d - 2)) *
                 (Interval(Rat(Int(d) * d, 2), prec) * C12.sqr()).pow(static_cast<unsigned long>(d));
  out.formula = Bound::lower(Interval(1L, prec) / den, "closed form");
  out.value = max_lower(out.direct, out.formula);
  return out;
}

}  // namespace gapkit
