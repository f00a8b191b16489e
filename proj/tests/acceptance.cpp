// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "gapkit/experiments.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace gapkit;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Check {
  std::ostringstream why;
  bool ok = true;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      why << " [" << what << "]";
    }
  }
};

bool run(int n, const std::function<void(Check&)>& body) {
  Check c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.why << " [exception: " << e.what() << "]";
  }
  std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << n << c.why.str() << std::endl;
  return c.ok;
}

void quartic_pair(Check& c) {
  auto t0 = Clock::now();
  IntPoly f = parse_poly("x^4 - x^3 - 4*x^2 + 4*x + 1");
  AlgNum a = AlgNum::nearest(f, 2 * std::cos(2 * M_PI / 15));
  AlgNum b = AlgNum::nearest(f, 2 * std::cos(4 * M_PI / 15));
  MinimalPair mp = find_pair(a, b);
  c.require(mp.minimality == PairMode::Exact, "exact mode");
  c.require(mp.r == 2, "r = 2");
  c.require(mp.height <= 2, "H <= 2");
  c.require(verify_pair(a, b, parse_poly("-x^2 + 2"), IntPoly::constant(1)).ok(), "(-x^2+2, 1)");
  c.require(verify_pair(a, b, parse_poly("-x^2 + 2*x - 1"), parse_poly("x^2 - x - 1")).ok(), "(-x^2+2x-1, x^2-x-1)");
  double s = since(t0);
  c.require(s < 5, "runtime");
  c.why << " (" << s << " s)";
}

void count_bounds(Check& c) {
  auto certified = [](const CountBound& b) {
    return b.value.lower() >= Rat(b.inner_floor) && b.value.upper() < Rat(b.inner_floor + 1);
  };
  CountBound a = count_bound(Int(3), Rat(11, 4), Int(24));
  c.require(a.inner_floor == 64 && a.bound == 1536, "64 / 1536");
  c.require(certified(a), "floor certified at d = 3");
  Int big = pow_int(10, 14);
  CountBound b = count_bound(big, Rat(3 * big + 2, 4), Int(24));
  c.require(b.inner_floor == 3 && b.bound == 72, "3 / 72");
  c.require(certified(b), "floor certified at d = 10^14");
}

void d12_identities(Check& c) {
  BinForm F = d12_family(Int(3), Int(1));
  IdentityReport r = verify_729(F);
  c.require(r.unimodular_ok == 12, "12 unimodular identities");
  c.require(r.scaled_ok == 12, "12 identities with factor 729");
  std::vector<Int> f729 = F.coeffs();
  for (auto& x : f729) x *= 729;
  for (const auto& m : d12_unimodular_maps())
    c.require(oracle::compose(F.coeffs(), m.s, m.u, m.t, m.v) == F.coeffs(), "expansion " + m.str());
  for (const auto& m : d12_scaled_maps())
    c.require(oracle::compose(F.coeffs(), m.s, m.u, m.t, m.v) == f729, "expansion " + m.str());
}

void automorphisms(Check& c) {
  BinForm F = d12_family(Int(3), Int(1));
  EnhancedAut g = aut_prime(F);
  c.require(g.order() == 24, "order 24");
  c.require(g.structure == "D_12", "D_12");
  c.require(g.contains(IntMat2{0, 1, 1, 0}), "(0 1; 1 0)");
  c.require(g.contains(IntMat2{1, 1, -1, 2}), "(1 1; -1 2)");
  c.require(check_group_axioms(g).ok(), "group axioms");
  BinForm T = parse_form("x^3 - 2*y^3");
  EnhancedAut h = aut_prime(T);
  std::set<oracle::Mat> lib, pm{{1, 0, 0, 1}, {-1, 0, 0, -1}};
  for (const auto& e : h.elements) lib.insert({e.m.s, e.m.u, e.m.t, e.m.v});
  c.require(lib == pm, "x^3 - 2y^3 gives +-I");
  c.require(oracle::brute_aut(T, 10) == pm, "brute force over [-10, 10]");
}

void sweep(Check& c) {
  SweepReport r = run_sweep(1, 100);
  c.require(r.certified >= 200, "at least 200 certified");
  c.require(r.certified_mobius > 0 && r.certified_plain > 0, "with and without Mobius relations");
  c.require(r.certified_arch > 0 && r.certified_padic > 0, "both metrics");
  c.require(r.violations == 0, "no violations");
  c.require(r.abstention_rate() < 0.05, "abstention below 5%");
  c.require(r.seconds < 120, "runtime");
  size_t p17 = 0;
  auto it = r.by_instance.find("cubic-17adic");
  if (it != r.by_instance.end())
    for (auto k : {VerdictKind::GapHolds, VerdictKind::MobiusCase, VerdictKind::Both})
      if (it->second.count(k)) p17 += it->second.at(k);
  c.require(p17 > 0, "x^3 - 3x - 1 at p = 17");
  c.why << " (" << r.certified << " certified, " << r.violations << " violations, abstention "
        << r.abstention_rate() * 100 << "%, " << r.seconds << " s)";
}

void properties(Check& c) {
  std::vector<props::Result> all{props::resultant_divisibility(1),
                                 props::two_forms_lower_bound(1),
                                 props::vanishing_image(1),
                                 props::power_basis_coefficients(1),
                                 props::liouville_archimedean(200),
                                 props::liouville_padic(props::padic_samples(), 200),
                                 props::lewis_mahler_on_solutions(),
                                 props::discriminant_scaling(1)};
  for (const auto& r : all) c.require(r.ok(200), r.summary());
}

void thue_siegel(Check& c) {
  for (long d = 3; d <= 1000; ++d) {
    ThueSiegelParams p = thue_siegel_params(d, Interval(0L, 128));
    std::string at = " at d = " + std::to_string(d);
    c.require(p.lambda_ok, "lambda" + at);
    c.require(p.delta_ok, "delta" + at);
    c.require(p.t_interval_ok && p.tau_interval_ok, "t, tau" + at);
    if (!c.ok) return;
  }
}

void padic(Check& c) {
  PadicAlgNum a = hensel_root(parse_poly("x^3 - 3*x - 1"), Int(17), Int(3));
  c.require(a.lift(2) == 207, "lift 207 mod 289");
  PadicAbs v = padic_abs_linear(a, Int(3), Int(1), 2);
  c.require(v.exact && v.value() == Rat(1, 17), "|alpha - 3|_17 = 1/17");
  props::Result r = props::liouville_padic({a}, 50);
  c.require(r.ok(200), r.summary());
}

void census_soundness(Check& c) {
  struct Case {
    BinForm F;
    long m, B;
    Rat mu;
  };
  std::vector<Case> cases{{parse_form("x^3 - 3*x*y^2 - y^3"), 3, 200, Rat(11, 4)},
                          {d12_family(Int(3), Int(1)), 3, 30, Rat(8)},
                          {parse_form("x^3 - 2*y^3"), 10, 200, Rat(11, 4)}};
  for (const auto& k : cases) {
    Census s = census({k.F, Int(k.m), Int(k.B)}, k.mu);
    std::string tag = " for " + k.F.str();
    c.require(s.c5.value.enc.lower() > 0, "C5" + tag);
    c.require(s.aut.order() > 0, "#Aut'" + tag);
    c.require(s.bound > 0 && s.bound == Int(s.aut.order()) * s.count.inner_floor, "bound" + tag);
    c.require(Int(s.large_count) <= s.bound && s.bound_ok, "large count" + tag);
    c.require(s.orbit_closed, "orbit closure" + tag);
  }
}

}  // namespace

int main() {
  bool all = true;
  all &= run(1, quartic_pair);
  all &= run(2, count_bounds);
  all &= run(3, d12_identities);
  all &= run(4, automorphisms);
  all &= run(5, sweep);
  all &= run(6, properties);
  all &= run(7, thue_siegel);
  all &= run(8, padic);
  all &= run(9, census_soundness);
  return all ? 0 : 1;
}
