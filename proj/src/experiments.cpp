#include "gapkit/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <random>

namespace gapkit {

namespace {

Rat pow10(unsigned long e) { return Rat(pow_int(10, e)); }

// heights between lo and hi only; outside that window the hypotheses fail anyway
std::vector<ApproxPair> in_window(const std::vector<ApproxPair>& v, const Interval& lo, const Rat& hi) {
  std::vector<ApproxPair> out;
  for (const auto& p : v) {
    Int H = p.height();
    if (Interval(H, 128).lo() < lo.hi() || Rat(H) > hi) continue;
    out.push_back(p);
  }
  return out;
}

Int smallest_simple_root(const IntPoly& f, const Int& p) {
  IntPoly df = f.derivative();
  for (Int r = 0; r < p; ++r)
    if (mod_pos(f.eval(r), p) == 0 && mod_pos(df.eval(r), p) != 0) return r;
  throw HypothesisError("no simple root mod p");
}

SweepInstance arch_instance(const std::string& name, const IntPoly& f, double root, const RatPoly& h, const Rat& mu,
                            const Rat& c0, size_t ncf) {
  AlgNum alpha = AlgNum::nearest(f, root);
  AlgNum beta = image(alpha, h);
  SweepInstance s;
  s.name = name;
  s.inst = archimedean_instance(alpha, beta, mu, c0);
  Interval lo = s.inst.constants.c_small.point();
  // |x - y alpha| < 1/y makes a convergent admissible while H^(mu-2) stays below C0 / 4
  Rat hi = Interval(c0 / 4, 128).pow(1 / (mu - 2)).lower();
  s.alpha_approx = in_window(convergents(alpha, ncf), lo, hi);
  s.beta_approx = in_window(convergents(beta, ncf), lo, hi);
  if (s.inst.constants.mobius)
    for (const auto& p : s.alpha_approx) s.beta_approx.push_back(derived_approx(p, *s.inst.constants.mobius));
  return s;
}

SweepInstance padic_sweep_instance(const std::string& name, const IntPoly& f, const Int& p, const Int& r0,
                                   const RatPoly& h, const Rat& mu, const Rat& c0, unsigned long kmax) {
  PadicAlgNum xi = hensel_root(f, p, r0);
  SweepInstance s;
  s.name = name;
  s.inst = padic_instance(xi, h, mu, c0);
  std::vector<unsigned long> ks;
  for (unsigned long k = 2; k <= kmax; ++k) ks.push_back(k);
  Interval lo = s.inst.constants.c_small.point();
  Rat hi = Rat(pow_int(p, kmax));
  s.alpha_approx = in_window(padic_approximations(xi, ks), lo, hi);
  s.beta_approx = in_window(padic_approximations(*s.inst.pbeta, ks), lo, hi);
  if (s.inst.constants.mobius)
    for (const auto& a : s.alpha_approx) s.beta_approx.push_back(derived_approx(a, *s.inst.constants.mobius));
  return s;
}

}  // namespace

std::vector<SweepInstance> sweep_instances() {
  IntPoly cubic = parse_poly("x^3 - 3*x - 1");
  IntPoly quartic = parse_poly("x^4 - x^3 - 4*x^2 + 4*x + 1");
  RatPoly h = parse_rat_poly("x^2 - 2");
  std::vector<SweepInstance> out;
  out.push_back(arch_instance("cubic-real", cubic, 1.879, h, Rat(11, 4), pow10(30), 160));
  out.push_back(arch_instance("quartic-real", quartic, 1.827, h, Rat(7, 2), pow10(150), 400));
  out.push_back(padic_sweep_instance("cubic-17adic", cubic, Int(17), Int(3), h, Rat(11, 4), pow10(30), 60));
  Int p = 31;
  out.push_back(padic_sweep_instance("quartic-31adic", quartic, p, smallest_simple_root(quartic, p), h, Rat(7, 2),
                                     pow10(150), 130));
  return out;
}

double SweepReport::abstention_rate() const {
  size_t decided = certified + violations + abstentions;
  return decided == 0 ? 0.0 : static_cast<double>(abstentions) / static_cast<double>(decided);
}

SweepReport run_sweep(unsigned seed, size_t per_instance) {
  auto t0 = std::chrono::steady_clock::now();
  SweepReport rep;
  std::mt19937 rng(seed);
  for (const auto& s : sweep_instances()) {
    std::vector<std::pair<ApproxPair, ApproxPair>> cands;
    for (const auto& a : s.alpha_approx)
      for (const auto& b : s.beta_approx)
        if (b.height() >= a.height()) cands.emplace_back(a, b);
    std::shuffle(cands.begin(), cands.end(), rng);
    // Mobius-derived partners first so both alternatives are exercised
    if (s.inst.constants.mobius) {
      const MobiusRelation& m = *s.inst.constants.mobius;
      std::stable_partition(cands.begin(), cands.end(),
                            [&](const auto& c) { return derived_approx(c.first, m) == c.second; });
    }
    if (cands.size() > per_instance) cands.resize(per_instance);
    bool mob = s.inst.constants.mobius.has_value();
    bool arch = s.inst.metric == Metric::Archimedean;
    for (const auto& [a, b] : cands) {
      Verdict v = check_gap_dichotomy(s.inst, a, b);
      rep.by_instance[s.name][v.kind]++;
      switch (v.kind) {
        case VerdictKind::GapHolds:
        case VerdictKind::MobiusCase:
        case VerdictKind::Both:
          ++rep.certified;
          ++(mob ? rep.certified_mobius : rep.certified_plain);
          ++(arch ? rep.certified_arch : rep.certified_padic);
          break;
        case VerdictKind::Violation: ++rep.violations; break;
        case VerdictKind::Abstain: ++rep.abstentions; break;
        case VerdictKind::NotApplicable: ++rep.not_applicable; break;
      }
      rep.records.push_back({s.name, a, b, std::move(v)});
    }
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace gapkit
