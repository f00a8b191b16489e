#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gapkit/minpair.hpp"
#include "oracles.hpp"

using namespace gapkit;

namespace {

const IntPoly kQuartic = parse_poly("x^4 - x^3 - 4*x^2 + 4*x + 1");

// P(alpha) + h(alpha) Q(alpha) == 0 decided by reduction modulo f
bool vanishes(const IntPoly& f, const RatPoly& h, const IntPoly& P, const IntPoly& Q) {
  return (RatPoly(P) + h * RatPoly(Q)).rem(f).is_zero();
}

// every (P, Q) with deg <= s and coefficients in [-H, H], at least one nonzero
size_t count_vanishing(const IntPoly& f, const RatPoly& h, int s, long H) {
  size_t n = 2 * static_cast<size_t>(s + 1), found = 0;
  std::vector<long> c(n, -H);
  for (;;) {
    std::vector<Int> p(c.begin(), c.begin() + s + 1), q(c.begin() + s + 1, c.end());
    IntPoly P(p), Q(q);
    if (!(P.is_zero() && Q.is_zero()) && vanishes(f, h, P, Q)) ++found;
    size_t i = 0;
    while (i < n && c[i] == H) c[i++] = -H;
    if (i == n) break;
    ++c[i];
  }
  return found;
}

}  // namespace

TEST_CASE("linear system kernel contains the example pair") {
  RatPoly h = parse_rat_poly("x^2 - 2");
  LinearSystem sys = build_system(kQuartic, h, 2);
  CHECK(sys.s == 2);
  IntVec v{2, 0, -1, 1, 0, 0};  // P = -x^2 + 2, Q = 1
  for (const auto& row : sys.scaled) {
    Int dot = 0;
    for (size_t j = 0; j < v.size(); ++j) dot += row[j] * v[j];
    CHECK(dot == 0);
  }
  auto [P, Q] = split_kernel_vector(v, 2);
  CHECK(P == parse_poly("-x^2 + 2"));
  CHECK(Q == IntPoly::constant(1));
}

TEST_CASE("quartic example: r = 2, height 2") {
  AlgNum a = AlgNum::nearest(kQuartic, 1.827);
  AlgNum b = AlgNum::nearest(kQuartic, 2 * std::cos(4 * M_PI / 15));
  MinimalPair mp = find_pair(a, b);
  CHECK(mp.r == 2);
  CHECK(mp.height <= 2);
  CHECK(mp.minimality == PairMode::Exact);
  RatPoly h = parse_rat_poly("x^2 - 2");
  CHECK(vanishes(kQuartic, h, mp.P, mp.Q));
  // brute force: nothing of degree 1 vanishes, nothing of degree 2 and height 1 does
  CHECK(count_vanishing(kQuartic, h, 1, 3) == 0);
  CHECK(count_vanishing(kQuartic, h, 2, 1) == 0);

  CHECK(verify_pair(a, b, parse_poly("-x^2 + 2"), IntPoly::constant(1)).ok());
  CHECK(verify_pair(a, b, parse_poly("-x^2 + 2*x - 1"), parse_poly("x^2 - x - 1")).ok());
  MinimalPair sg = find_pair(a, b, PairMode::Siegel);
  CHECK(sg.r == 2);
  CHECK(vanishes(kQuartic, h, sg.P, sg.Q));
  CHECK(Rat(sg.height) <= sg.siegel_bound);
}

TEST_CASE("cubic fields force r = 1") {
  IntPoly f = parse_poly("x^3 - 3*x - 1");
  RatPoly h = parse_rat_poly("x^2 - 2");
  MinimalPair mp = find_pair(f, h);
  CHECK(mp.r == 1);
  CHECK(vanishes(f, h, mp.P, mp.Q));
  CHECK(verify_pair(f, h, mp.P, mp.Q).ok());
}

TEST_CASE("a Mobius image gives the linear pair") {
  IntPoly f = parse_poly("x^3 - 2");
  AlgNum a = AlgNum::nearest(f, 1.26);
  // beta = (2 alpha + 1)/(alpha + 1): 1/(alpha+1) = (alpha^2 - alpha + 1)/3
  RatPoly h = parse_rat_poly("x^2 - x + 1") * Rat(1, 3) * parse_rat_poly("2*x + 1");
  h = h.rem(f);
  MinimalPair mp = find_pair(f, h);
  CHECK(mp.r == 1);
  // (P, Q) = +-(-(2x+1), x+1) up to sign
  bool plus = mp.P == parse_poly("-2*x - 1") && mp.Q == parse_poly("x + 1");
  bool minus = mp.P == parse_poly("2*x + 1") && mp.Q == parse_poly("-x - 1");
  CHECK((plus || minus));
  CHECK(mp.height == 2);
  CHECK_THROWS_AS(find_pair(f, parse_rat_poly("3")), HypothesisError);
}

TEST_CASE("verify_pair failures and divisibility") {
  IntPoly f = parse_poly("x^3 - 3*x - 1");
  RatPoly h = parse_rat_poly("x^2 - 2");
  PairReport bad = verify_pair(f, h, IntPoly::constant(1), IntPoly::constant(1));
  CHECK_FALSE(bad.vanishing);
  CHECK_FALSE(bad.ok());

  // degree 4 field with a Mobius relation: beta = (2 alpha + 1)/(alpha + 1), alpha^4 = 2
  IntPoly g = parse_poly("x^4 - 2");
  // 1/(alpha+1) = alpha^3 - alpha^2 + alpha - 1
  RatPoly inv = parse_rat_poly("x^3 - x^2 + x - 1");
  RatPoly hb = (inv * parse_rat_poly("2*x + 1")).rem(g);
  MinimalPair mp = find_pair(g, hb);
  REQUIRE(mp.r == 1);
  IntPoly G = parse_poly("x + 1");
  PairReport rep = verify_pair(g, hb, mp.P, mp.Q, std::make_pair(mp.P * G, mp.Q * G));
  CHECK(rep.ok());
  REQUIRE(rep.part3);
  CHECK(*rep.part3);
  REQUIRE(rep.G);
  CHECK(*rep.G == G);
}

TEST_CASE("Wronskian") {
  CHECK(wronskian(parse_poly("-x^2 + 2"), IntPoly::constant(1)) == parse_poly("2*x"));
  CHECK(wronskian(parse_poly("x"), IntPoly::constant(1)) == IntPoly::constant(-1));
  CHECK(wronskian(parse_poly("x^2 + 1"), parse_poly("x^2 + 1")).is_zero());
}

TEST_CASE("height and Wronskian constants") {
  AlgNum a = AlgNum::nearest(kQuartic, 1.827);
  RatPoly h = parse_rat_poly("x^2 - 2");
  MinimalPair mp = find_pair(kQuartic, h);
  C12Result k = c12(kQuartic, h, mp);
  CHECK(k.tautological == mp.height);
  CHECK(k.value.approx() >= mp.height.get_d());
  CHECK(k.value.approx() <= k.closed_form.approx());
  WronskianBound w = c13(a, mp, k.value);
  CHECK(w.value.approx() > 0);
  // direct value is a lower bound for |W(alpha)|
  Interval av = a.real_value();
  Interval W = wronskian(mp.P, mp.Q).eval(av).abs();
  CHECK(w.direct.value() <= W.lo());
  CHECK(w.value.value() <= W.lo());

  PadicAlgNum xi = hensel_root(parse_poly("x^3 - 3*x - 1"), Int(17), Int(3));
  MinimalPair pp{parse_poly("-x^2 + 2"), IntPoly::constant(1), 2, Int(2)};
  WronskianBound wp = c14(xi, pp, Bound::of(Rat(2)));
  CHECK(wp.direct.to_rat() == 1);  // |2 alpha|_17 = 1
  CHECK(wp.value.to_rat() == 1);
}
