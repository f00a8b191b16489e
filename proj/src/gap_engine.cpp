#include "gapkit/gap_engine.hpp"

#include <algorithm>

namespace gapkit {

std::string to_string(Metric m) { return m == Metric::Archimedean ? "archimedean" : "p-adic"; }

std::string to_string(VerdictKind v) {
  switch (v) {
    case VerdictKind::GapHolds: return "GapHolds";
    case VerdictKind::MobiusCase: return "MobiusCase";
    case VerdictKind::Both: return "Both";
    case VerdictKind::Violation: return "Violation";
    case VerdictKind::Abstain: return "Abstain";
    case VerdictKind::NotApplicable: return "NotApplicable";
  }
  return "?";
}

std::string MobiusRelation::str() const {
  return "(" + s.get_str() + "*a + " + t.get_str() + ")/(" + u.get_str() + "*a + " + v.get_str() + ")";
}

ApproxPair reduced_pair(Int x, Int y) {
  Int g = gcd_int(x, y);
  if (g == 0) throw HypothesisError("(0, 0) is not a rational number");
  x /= g;
  y /= g;
  if (y < 0 || (y == 0 && x < 0)) {
    x = -x;
    y = -y;
  }
  return {x, y};
}

namespace {

constexpr mpfr_prec_t kPrec = 160;

Interval iv(const Rat& q, mpfr_prec_t prec = kPrec) { return Interval(q, prec); }
Interval iv(long q, mpfr_prec_t prec = kPrec) { return Interval(q, prec); }

Interval log_of(const Bound& b, mpfr_prec_t prec = kPrec) { return b.point().with_prec(prec).log(); }

void check_mu(int d, const Rat& mu) {
  if (d < 3) throw HypothesisError("degree must be at least 3");
  if (!(mu > Rat(d + 2, 2) && mu < Rat(d)))
    throw HypothesisError("mu must satisfy d/2 + 1 < mu < d (d = " + std::to_string(d) + ", mu = " + to_string(mu) +
                          ")");
}

// (P, Q) with deg P >= deg Q, r = deg P >= 1, coprime
void order_pair(IntPoly& P, IntPoly& Q) {
  if (P.degree() < Q.degree()) std::swap(P, Q);
  if (P.degree() < 1) throw HypothesisError("pair must have degree at least 1");
  IntPoly g = gcd(P, Q);
  if (g.degree() >= 1) throw HypothesisError("P and Q have the common factor " + g.str());
}

Bound pick_max(const std::vector<std::pair<std::string, Interval>>& branches, std::map<std::string, Bound>* parts,
               const std::string& label) {
  Bound best;
  bool first = true;
  for (const auto& [name, val] : branches) {
    Bound b = Bound::upper(val, label + " branch " + name);
    if (parts) (*parts)[label + "." + name] = b;
    if (first || b.value() > best.value()) best = b;
    first = false;
  }
  return best;
}

}  // namespace

// ------------------------------------------------------------ vanishing gap

SqrtRat c15(long r) {
  if (r < 1) throw HypothesisError("C15 needs r >= 1");
  return SqrtRat::half_power(Int(r + 1), 3 * r * r + 2 * r) *
         SqrtRat::of_rat(Rat(pow_int(2, static_cast<unsigned long>(r * r))));
}

Int resultant_gcd_bound(const IntPoly& Pin, const IntPoly& Qin) {
  IntPoly P = Pin, Q = Qin;
  order_pair(P, Q);
  int r = P.degree(), s = std::max(Q.degree(), 0);
  return abs_int(pow_int(P.lc(), static_cast<unsigned long>(r - s)) * resultant(P, Q));
}

Rat two_forms_constant(const IntPoly& Pin, const IntPoly& Qin, unsigned bits) {
  IntPoly P = Pin, Q = Qin;
  order_pair(P, Q);
  long r = P.degree();
  Int H = std::max(P.height(), Q.height());
  if (Q.degree() <= 0) {
    // 1 / (2 sqrt(r+1) maxH)
    return SqrtRat(make_rat(Int(1), 2 * H * (r + 1)), Int(r + 1)).round_down(bits);
  }
  SqrtRat v = SqrtRat::half_power(Int(r + 1), 3 * r).inverse() *
              SqrtRat::of_rat(make_rat(Int(1), pow_int(2, static_cast<unsigned long>(r)) *
                                                   pow_int(H, static_cast<unsigned long>(2 * r + 1))));
  return v.round_down(bits);
}

VanishingImage vanishing_gap(const IntPoly& P, const IntPoly& Q, const Int& x1, const Int& y1) {
  if (gcd_int(x1, y1) != 1) throw HypothesisError("(x1, y1) must be coprime");
  int r = std::max(P.degree(), Q.degree());
  if (r < 1) throw HypothesisError("pair must have degree at least 1");
  IntPoly g = gcd(P, Q);
  if (g.degree() >= 1) throw HypothesisError("P and Q have the common factor " + g.str());
  Int pv = P.eval_hom(x1, y1, r), qv = Q.eval_hom(x1, y1, r);
  if (qv == 0) throw HypothesisError("Q vanishes at x1/y1");
  VanishingImage out;
  out.image = reduced_pair(-pv, qv);
  Int H1 = std::max(abs_int(x1), abs_int(y1));
  Int maxH = std::max(P.height(), Q.height());
  out.lower_bound = Rat(pow_int(H1, static_cast<unsigned long>(r))) /
                    (c15(r).round_up(64) * Rat(pow_int(maxH, static_cast<unsigned long>(2 * r * r + 3 * r))));
  if (Rat(out.image.height()) < out.lower_bound)
    throw InvariantError("vanishing gap height bound failed at " + x1.get_str() + "/" + y1.get_str());
  return out;
}

ApproxPair derived_approx(const ApproxPair& p, const MobiusRelation& rel) {
  Int den = rel.u * p.x + rel.v * p.y;
  if (den == 0) throw HypothesisError("derived approximation has zero denominator");
  return reduced_pair(rel.s * p.x + rel.t * p.y, den);
}

bool transport_identity_holds(const AlgNum& alpha, const ApproxPair& p, const MobiusRelation& rel, unsigned bits) {
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits) + 32;
  Interval a = alpha.real_value(bits).with_prec(prec);
  Interval s(rel.s, prec), t(rel.t, prec), u(rel.u, prec), v(rel.v, prec);
  Interval ap = (s * a + t) / (u * a + v);
  ApproxPair q = derived_approx(p, rel);
  Interval xy(make_rat(p.x, p.y), prec);
  Interval lhs = ap - Interval(make_rat(q.x, q.y), prec);
  Interval rhs = Interval(Int(rel.s * rel.v - rel.t * rel.u), prec) / ((u * a + v) * (u * xy + v)) * (a - xy);
  return lhs.overlaps(rhs);
}

std::optional<MobiusRelation> mobius_from_pair(const IntPoly& f, const RatPoly& h, const MinimalPair& pair) {
  if (pair.r != 1) return std::nullopt;
  MobiusRelation m{-pair.P[1], -pair.P[0], pair.Q[1], pair.Q[0]};
  if (m.u < 0 || (m.u == 0 && m.v < 0)) m = {-m.s, -m.t, -m.u, -m.v};
  if (m.det() == 0) throw InvariantError("degenerate Mobius relation");
  RatPoly lhs = RatPoly(IntPoly(std::vector<Int>{m.t, m.s}));
  RatPoly rhs = h * RatPoly(IntPoly(std::vector<Int>{m.v, m.u}));
  if (!(lhs - rhs).rem(f).is_zero()) throw InvariantError("Mobius relation does not verify");
  return m;
}

std::optional<MobiusRelation> mobius_relation(const IntPoly& fin, const RatPoly& h) {
  IntPoly f = fin.primitive();
  if (h.rem(f).degree() <= 0) throw HypothesisError("beta is rational");
  LinearSystem sys = build_system(f, h, 1);
  if (sys.rank == 4) return std::nullopt;
  IntMatrix ker = integer_kernel(sys.scaled, 4);
  // two independent relations would give two Mobius maps alpha -> beta, forcing deg alpha <= 2
  if (ker.size() != 1) throw InvariantError("Mobius relation is not unique");
  MinimalPair pair;
  pair.r = 1;
  std::tie(pair.P, pair.Q) = split_kernel_vector(ker[0], 1);
  return mobius_from_pair(f, h, pair);
}

std::optional<MobiusRelation> mobius_relation(const AlgNum& alpha, const AlgNum& beta) {
  PowerRepResult rep = power_rep(alpha, beta);
  if (auto* nf = std::get_if<NotInField>(&rep)) throw HypothesisError("beta is not in Q(alpha): " + nf->reason);
  return mobius_relation(alpha.minpoly(), std::get<PowerBasisRep>(rep).as_poly());
}

// --------------------------------------------------------------- constants

namespace {

MinimalPair pair_for(const IntPoly& f, const RatPoly& h) {
  try {
    return find_pair(f, h, PairMode::Exact);
  } catch (const PrecisionError&) {
    return find_pair(f, h, PairMode::Siegel);
  }
}

// log of the closing branch shared by both metrics, before the 1/(2mu - d) root:
// d^2 mu/4 log 2 + (3d^2+4d) mu/8 log(d/2+1) + (d^2+3d) mu/2 log C12 + rest
Interval closing_log(int d, const Rat& mu, const Interval& logC12) {
  Rat dd(d);
  return iv(dd * dd * mu / 4) * iv(2).log() +
         iv((3 * dd * dd + 4 * dd) * mu / 8) * iv(Rat(d + 2, 2)).log() + iv((dd * dd + 3 * dd) * mu / 2) * logC12;
}

GapConstants arch_constants(const AlgNum& alpha, const AlgNum& beta, const RatPoly& h, const Rat& mu,
                            const Rat& c0, unsigned bits) {
  int d = alpha.degree();
  check_mu(d, mu);
  if (!alpha.is_real()) throw HypothesisError("the Archimedean gap principle needs a real alpha");
  if (c0 <= 0) throw HypothesisError("C0 must be positive");
  const IntPoly& f = alpha.minpoly();
  GapConstants k;
  k.metric = Metric::Archimedean;
  k.d = d;
  k.mu = mu;
  k.c0 = c0;
  k.pair = pair_for(f, h);
  k.mobius = mobius_from_pair(f, h, k.pair);
  C12Result c12r = c12(f, h, k.pair, bits);
  Bound C12 = c12r.value;
  WronskianBound w = c13(alpha, k.pair, C12, bits);
  Bound C13 = w.value;
  Bound C6 = Bound::of(liouville_c6(alpha, bits), "Liouville constant, rounded down");
  C6.dir = Rounding::Down;
  k.parts["C6"] = C6;
  k.parts["C12"] = C12;
  k.parts["C12.closed"] = c12r.closed_form;
  k.parts["C13"] = C13;
  k.parts["C13.direct"] = w.direct;
  k.parts["C13.formula"] = w.formula;

  Interval mx = Interval::max(iv(1), alpha.real_value(bits).abs().with_prec(kPrec));
  Interval babs = beta.real_value(bits).abs().with_prec(kPrec);
  Interval C0 = iv(c0), c12 = C12.point().with_prec(kPrec);
  Interval c2 = C0 * pow_half(iv(2), static_cast<unsigned long>(d + 2)) * (iv(2) + babs) * c12 *
                pow_half(mx, static_cast<unsigned long>(d));
  k.c_big = Bound::upper(c2, "C2");

  Rat inv_mu = 1 / mu;
  Interval logC0 = C0.log(), logC12 = c12.log(), logC13 = log_of(C13), logC6 = log_of(C6), logmx = mx.log();
  std::vector<std::pair<std::string, Interval>> br;
  br.emplace_back("C0^(1/mu)", C0.pow(inv_mu));
  br.emplace_back("Wronskian", (pow_half(iv(2), static_cast<unsigned long>(d + 6)) * iv(Rat(d + 2, 2)) * C0 *
                                c12.sqr() / C13.point().with_prec(kPrec) * mx.pow(static_cast<unsigned long>(d)))
                                   .pow(inv_mu));
  Interval L = closing_log(d, mu, logC12) + logC0 - logC6 - logC13 + iv(2) * logC12 + iv(d) * logmx;
  br.emplace_back("closing", (L / iv(2 * mu - d)).exp());
  int r = k.pair.r;
  if (r >= 2) {
    Interval L4 = iv(r + 2) * iv(2).log() + iv(r + 1).log() + logC0 - logC6 - logC13 +
                  iv(Rat((2 * r * r + 3 * r)) * mu + 2) * logC12 + iv(mu) * c15(r).enclosure(kPrec).log() +
                  iv(2 * r) * logmx;
    br.emplace_back("closing at r", (L4 / iv(r * mu - d)).exp());
  }
  k.c_small = pick_max(br, &k.parts, "C1");
  return k;
}

GapConstants padic_constants(const PadicAlgNum& xi, const RatPoly& h, const Rat& mu, const Rat& c0) {
  int d = xi.degree();
  check_mu(d, mu);
  if (c0 <= 0) throw HypothesisError("C0 must be positive");
  const IntPoly& f = xi.minpoly();
  if (h.rem(f).degree() <= 0) throw HypothesisError("beta is rational");
  GapConstants k;
  k.metric = Metric::Padic;
  k.d = d;
  k.mu = mu;
  k.c0 = c0;
  k.pair = pair_for(f, h);
  k.mobius = mobius_from_pair(f, h, k.pair);
  C12Result c12r = c12(f, h, k.pair);
  Bound C12 = c12r.value;
  WronskianBound w = c14(xi, k.pair, C12);
  Bound C14 = w.value;
  Bound C7 = Bound::of(liouville_c7(xi), "p-adic Liouville constant");
  k.parts["C7"] = C7;
  k.parts["C12"] = C12;
  k.parts["C12.closed"] = c12r.closed_form;
  k.parts["C14"] = C14;
  k.parts["C14.direct"] = w.direct;
  k.parts["C14.formula"] = w.formula;

  Int ca = abs_int(f.lc());
  Int cb = minimal_polynomial_of(f, h).lc();
  Interval C0 = iv(c0), c12 = C12.point().with_prec(kPrec), c14v = C14.point().with_prec(kPrec);
  Interval c4 = iv(d + 2) * C0 * c12 * pow_half(Interval(ca, kPrec), static_cast<unsigned long>(d)) *
                Interval(cb, kPrec);
  k.c_big = Bound::upper(c4, "C4");

  Rat inv_mu = 1 / mu;
  Interval logC0 = C0.log(), logC12 = c12.log(), logC14 = c14v.log(), logC7 = log_of(C7);
  Interval logca = Interval(ca, kPrec).log();
  std::vector<std::pair<std::string, Interval>> br;
  br.emplace_back("C0^(1/mu)", C0.pow(inv_mu));
  br.emplace_back("Wronskian",
                  (iv(2) * C0 / c14v * pow_half(Interval(ca, kPrec), static_cast<unsigned long>(3 * d - 4))).pow(inv_mu));
  Interval L = closing_log(d, mu, logC12) + iv(d - 1) * logca + logC0 - logC7 - logC14;
  br.emplace_back("closing", (L / iv(2 * mu - d)).exp());
  int r = k.pair.r;
  if (r >= 2) {
    Interval L4 = iv(2).log() + iv(d - 1) * logca + logC0 - logC7 +
                  iv(Rat(2 * r * r + 3 * r) * mu) * logC12 - logC14 + iv(mu) * c15(r).enclosure(kPrec).log();
    br.emplace_back("closing at r", (L4 / iv(r * mu - d)).exp());
  }
  k.c_small = pick_max(br, &k.parts, "C3");
  return k;
}

}  // namespace

GapConstants archimedean_constants(const AlgNum& alpha, const AlgNum& beta, const Rat& mu, const Rat& c0,
                                   unsigned bits) {
  PowerRepResult rep = power_rep(alpha, beta);
  if (auto* nf = std::get_if<NotInField>(&rep)) throw HypothesisError("beta is not in Q(alpha): " + nf->reason);
  RatPoly h = std::get<PowerBasisRep>(rep).as_poly();
  if (h.degree() <= 0) throw HypothesisError("beta is rational");
  return arch_constants(alpha, beta, h, mu, c0, bits);
}

GapConstants nonarchimedean_constants(const PadicAlgNum& xi, const RatPoly& h, const Rat& mu, const Rat& c0) {
  return padic_constants(xi, h, mu, c0);
}

Bound c11(const std::vector<ComplexBox>& roots, const Rat& mu, const Rat& c0) {
  if (roots.size() < 2) throw HypothesisError("C11 needs at least two roots");
  Interval best = iv(0);
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j) {
      Interval dist = (roots[i] - roots[j]).abs().with_prec(kPrec);
      if (!dist.positive()) throw PrecisionError("roots not separated in C11");
      best = Interval::max(best, (iv(2 * c0) / dist).pow(1 / mu));
    }
  return Bound::upper(best, "max over root pairs of (2 C0 / |alpha_i - alpha_j|)^(1/mu)");
}

Bound c11(const std::vector<PadicAlgNum>& roots, const Rat& mu, const Rat& c0) {
  if (roots.size() < 2) throw HypothesisError("C11 needs at least two roots");
  Interval best = iv(0);
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j) {
      const Int& p = roots[i].prime();
      long v = -1;
      for (unsigned long k = 64; k <= 4096 && v < 0; k *= 4) {
        Int diff = mod_pos(roots[i].lift(k) - roots[j].lift(k), pow_int(p, k));
        if (diff != 0) v = static_cast<long>(valuation(diff, p));
      }
      if (v < 0) throw PrecisionError("p-adic roots agree to the working precision");
      best = Interval::max(best, (iv(2 * c0) * Interval(pow_int(p, static_cast<unsigned long>(v)), kPrec)).pow(1 / mu));
    }
  return Bound::upper(best, "max over root pairs of (2 C0 / |alpha_i - alpha_j|_p)^(1/mu)");
}

ThueSiegelParams thue_siegel_params(long d, const Interval& log_max_mahler) {
  if (d < 3) throw HypothesisError("Thue-Siegel parameters need d >= 3");
  const mpfr_prec_t prec = 256;
  ThueSiegelParams p;
  p.d = static_cast<int>(d);
  p.a = Rat(1, 500);
  Rat dd(d);
  Rat a2 = p.a * p.a;
  Rat t2 = 2 / (dd + a2);
  p.t = Interval(t2, prec).sqrt();
  p.tau = Interval(2 * p.a, prec) * p.t;
  p.lambda = Interval(2, prec) / (Interval(1 - 2 * p.a, prec) * p.t);
  p.delta = 6 * a2 / ((dd + a2) * (dd - 1));
  p.delta_inv = 1 / p.delta;
  p.A = Interval(Int(250000), prec) * (log_max_mahler.with_prec(prec) + Interval(Rat(d, 2), prec));
  // lambda^2 = 2 (d + a^2) / (1 - 2a)^2, compared with 1.42^2 d exactly, and on enclosures
  Rat lambda2 = 2 * (dd + a2) / ((1 - 2 * p.a) * (1 - 2 * p.a));
  Rat bound2 = Rat(142 * 142, 10000) * dd;
  Interval lam_bound = Interval(Rat(142, 100), prec) * Interval(dd, prec).sqrt();
  p.lambda_ok = lambda2 < bound2 && p.lambda.certainly_lt(lam_bound);
  p.delta_ok = p.delta_inv < 41667 * dd * dd;
  // (2 + sqrt(2d^3 + 2d^2 - 4d)) / (d(d+1)) < t < sqrt(2/d)
  Interval lo = (Interval(2, prec) + Interval(2 * dd * dd * dd + 2 * dd * dd - 4 * dd, prec).sqrt()) /
                Interval(dd * (dd + 1), prec);
  p.t_interval_ok = lo.certainly_lt(p.t) && t2 < 2 / dd;
  // sqrt(2 - d t^2) < tau < t - 2/d, all sides squared exactly (both sides positive)
  Rat tau2 = 4 * a2 * t2;
  bool tau_lower = 2 - dd * t2 < tau2;
  bool tau_upper = t2 * (1 - 2 * p.a) * (1 - 2 * p.a) > 4 / (dd * dd);
  Interval sq = Interval(2 - dd * t2, prec).sqrt();
  p.tau_interval_ok = tau_lower && tau_upper && sq.certainly_lt(p.tau) &&
                      p.tau.certainly_lt(p.t - Interval(2 / dd, prec));
  return p;
}

Interval thue_siegel_conclusion(const ThueSiegelParams& p, const Interval& A1, const Interval& A2,
                                const Interval& logH1) {
  mpfr_prec_t prec = 256;
  Interval log4 = Interval(4, prec).log();
  return Interval(p.delta_inv, prec) * (log4 + A1.with_prec(prec) + logH1.with_prec(prec)) -
         (log4 + A2.with_prec(prec));
}

CountBound count_bound(const Int& d, const Rat& mu, const Int& gamma) {
  Rat E = mu - Rat(d) / 2;
  if (!(E > 1)) throw HypothesisError("count bound needs mu - d/2 > 1");
  for (mpfr_prec_t prec = 64; prec <= 8192; prec *= 2) {
    Interval num = Interval(Rat(1151, 100), prec) + Interval(Rat(3, 2), prec) * Interval(d, prec).log() +
                   Interval(mu, prec).log();
    Interval v = Interval(1L, prec) + num / Interval(E, prec).log();
    Int lo = floor_rat(v.lower()), hi = floor_rat(v.upper());
    if (lo == hi) return CountBound{lo, gamma * lo, v};
  }
  throw PrecisionError("count bound floor could not be certified");
}

Bound c16(const C16Inputs& in, std::map<std::string, Bound>* parts) {
  int d = in.d;
  const Rat& mu = in.mu;
  // mu > 1.42 sqrt d  <=>  mu^2 > 1.42^2 d
  if (!(mu > 0 && mu * mu > Rat(142 * 142, 10000) * d))
    throw HypothesisError("C16 needs mu > 1.42 sqrt(d)");
  Interval log4eA = iv(2).log() * iv(2) + in.A.with_prec(kPrec);
  Interval logC0 = iv(in.c0).log();
  if (!(logC0 + log4eA).positive()) throw HypothesisError("C16 needs C0 > (4 e^A)^-1");
  Interval k = iv(Rat(142, 100)) * iv(d).sqrt();
  std::vector<std::pair<std::string, Interval>> br;
  br.emplace_back("C11", in.c11.point().with_prec(kPrec));
  if (!in.c_small.empty()) {
    Interval m = in.c_small[0].point().with_prec(kPrec);
    for (const auto& b : in.c_small) m = Interval::max(m, b.point().with_prec(kPrec));
    br.emplace_back("pairwise C1/C3", m);
  }
  br.emplace_back("Thue-Siegel hypothesis", ((logC0 + k * log4eA) / (iv(mu) - k)).exp());
  if (!in.c_big.empty()) {
    Interval m = in.c_big[0].point().with_prec(kPrec);
    for (const auto& b : in.c_big) m = Interval::max(m, b.point().with_prec(kPrec));
    Rat E = mu - Rat(d, 2);
    br.emplace_back("C^(2/(E-1))", (iv(2) * m.log() / iv(E - 1)).exp());
  }
  return pick_max(br, parts, "C16");
}

// ---------------------------------------------------------------- verdicts

GapInstance archimedean_instance(const AlgNum& alpha, const AlgNum& beta, const Rat& mu, const Rat& c0) {
  PowerRepResult rep = power_rep(alpha, beta);
  if (auto* nf = std::get_if<NotInField>(&rep)) throw HypothesisError("beta is not in Q(alpha): " + nf->reason);
  GapInstance inst;
  inst.metric = Metric::Archimedean;
  inst.f = alpha.minpoly();
  inst.h = std::get<PowerBasisRep>(rep).as_poly();
  if (inst.h.degree() <= 0) throw HypothesisError("beta is rational");
  inst.alpha = alpha;
  inst.beta = beta;
  inst.constants = arch_constants(alpha, beta, inst.h, mu, c0, 128);
  return inst;
}

GapInstance padic_instance(const PadicAlgNum& xi, const RatPoly& h, const Rat& mu, const Rat& c0) {
  GapInstance inst;
  inst.metric = Metric::Padic;
  inst.f = xi.minpoly();
  inst.h = h.rem(xi.minpoly());
  inst.palpha = xi;
  inst.pbeta = padic_image(xi, inst.h);
  inst.constants = padic_constants(xi, inst.h, mu, c0);
  return inst;
}

Certainty approximation_certified(const GapInstance& inst, int target, const ApproxPair& p, unsigned max_bits) {
  const Rat& mu = inst.constants.mu;
  const Rat& c0 = inst.constants.c0;
  Int H = p.height();
  if (inst.metric == Metric::Archimedean) {
    if (p.y == 0) return Certainty::No;
    const AlgNum& a = target == 1 ? *inst.alpha : *inst.beta;
    for (unsigned bits = 128; bits <= max_bits; bits *= 2) {
      mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits) + 32;
      Interval diff = (a.real_value(bits).with_prec(prec) - Interval(make_rat(p.x, p.y), prec)).abs();
      Interval thr = Interval(c0, prec) * (-Interval(mu, prec) * Interval(H, prec).log()).exp();
      if (diff.certainly_lt(thr)) return Certainty::Yes;
      if (diff.lo() >= thr.hi()) return Certainty::No;
    }
    return Certainty::Unknown;
  }
  const PadicAlgNum& a = target == 1 ? *inst.palpha : *inst.pbeta;
  for (unsigned long k = 64; k <= max_bits; k *= 2) {
    mpfr_prec_t prec = 192;
    Interval thr = Interval(c0, prec) * (-Interval(mu, prec) * Interval(H, prec).log()).exp();
    PadicAbs v = padic_abs_linear(a, p.x, p.y, k);
    Interval val(v.value(), prec);
    if (val.certainly_lt(thr)) return Certainty::Yes;
    if (v.exact && val.lo() >= thr.hi()) return Certainty::No;
  }
  return Certainty::Unknown;
}

Verdict check_gap_dichotomy(const GapInstance& inst, const ApproxPair& pair1, const ApproxPair& pair2,
                            unsigned max_bits) {
  const GapConstants& k = inst.constants;
  Verdict out;
  Int H1 = pair1.height(), H2 = pair2.height();
  if (H2 < H1) {
    out.detail = "H2 < H1";
    return out;
  }
  if (Interval(H1, kPrec).lo() < k.c_small.value()) {
    out.detail = "H1 below " + std::string(k.metric == Metric::Archimedean ? "C1" : "C3");
    return out;
  }
  Certainty a1 = approximation_certified(inst, 1, pair1, max_bits);
  Certainty a2 = approximation_certified(inst, 2, pair2, max_bits);
  if (a1 == Certainty::No || a2 == Certainty::No) {
    out.detail = "approximation hypothesis fails";
    return out;
  }
  if (a1 == Certainty::Unknown || a2 == Certainty::Unknown) {
    out.kind = VerdictKind::Abstain;
    out.detail = "approximation hypothesis undecided";
    return out;
  }
  bool mob = false;
  if (k.mobius) {
    const MobiusRelation& m = *k.mobius;
    Int den = m.u * pair1.x + m.v * pair1.y;
    mob = den != 0 && pair2.x * den == pair2.y * (m.s * pair1.x + m.t * pair1.y);
  }
  Certainty gap = Certainty::Unknown;
  Rat E = k.mu - Rat(k.d, 2);
  for (mpfr_prec_t prec = 128; prec <= static_cast<mpfr_prec_t>(max_bits); prec *= 2) {
    out.gap_lhs = Interval(H2, prec).log() + k.c_big.point().with_prec(prec).log();
    out.gap_rhs = Interval(E, prec) * Interval(H1, prec).log();
    if (out.gap_lhs.certainly_gt(out.gap_rhs)) {
      gap = Certainty::Yes;
      break;
    }
    if (out.gap_lhs.hi() <= out.gap_rhs.lo()) {
      gap = Certainty::No;
      break;
    }
  }
  if (gap == Certainty::Yes) {
    out.kind = mob ? VerdictKind::Both : VerdictKind::GapHolds;
  } else if (mob) {
    out.kind = VerdictKind::MobiusCase;
    if (gap == Certainty::Unknown) out.detail = "gap inequality undecided";
  } else if (gap == Certainty::No) {
    out.kind = VerdictKind::Violation;
    out.detail = "neither alternative holds for " + pair1.str() + ", " + pair2.str();
  } else {
    out.kind = VerdictKind::Abstain;
    out.detail = "gap inequality undecided";
  }
  return out;
}

ClassicGapReport classic_gap_check(const std::vector<ApproxPair>& pairs, const Rat& mu) {
  ClassicGapReport rep;
  for (size_t i = 0; i + 1 < pairs.size(); ++i) {
    const Int& y1 = pairs[i].y;
    const Int& y2 = pairs[i + 1].y;
    if (y1 < 1 || !(y2 > y1)) throw HypothesisError("classic gap check needs strictly increasing denominators");
    bool decided = false;
    for (mpfr_prec_t prec = 128; prec <= 2048 && !decided; prec *= 2) {
      Interval lhs = Interval(Int(2 * y2), prec).log();
      Interval rhs = Interval(mu - 1, prec) * Interval(y1, prec).log();
      if (lhs.certainly_gt(rhs)) {
        decided = true;
      } else if (lhs.hi() <= rhs.lo()) {
        decided = true;
        rep.failures.push_back("2*" + y2.get_str() + " <= " + y1.get_str() + "^(mu-1)");
      }
    }
    if (!decided) rep.failures.push_back("undecided at " + y1.get_str() + ", " + y2.get_str());
    ++rep.checked;
  }
  return rep;
}

}  // namespace gapkit
