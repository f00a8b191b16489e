#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gapkit/algnum.hpp"
#include "oracles.hpp"

using namespace gapkit;

namespace {

const char* kQuartic = "x^4 - x^3 - 4*x^2 + 4*x + 1";

AlgNum cbrt2() { return AlgNum::nearest(parse_poly("x^3 - 2"), 1.26); }

std::vector<Rat> rats(std::initializer_list<long> v) {
  std::vector<Rat> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("irreducibility") {
  CHECK(is_irreducible(parse_poly(kQuartic)));
  CHECK(is_irreducible(parse_poly("x^3 - 2")));
  CHECK_FALSE(is_irreducible(parse_poly("x^4 + 4")));  // (x^2+2x+2)(x^2-2x+2)
  CHECK_FALSE(is_irreducible(parse_poly("x^3 - 1")));
  CHECK(is_irreducible(parse_poly("x^5 - x - 1")));
  CHECK_THROWS_AS(AlgNum(parse_poly("x^2 - 4"), 0), HypothesisError);
}

TEST_CASE("selecting an embedding") {
  AlgNum a = AlgNum::parse(std::string(kQuartic) + "@root~1.827");
  CHECK(a.is_real());
  CHECK(a.real_value().approx() == doctest::Approx(2 * std::cos(2 * M_PI / 15)).epsilon(1e-14));
  // the embedding agrees with a 50-digit value of 2cos(2pi/15)
  Rat ref("18270909152852017910042551439706343558816209187549/10000000000000000000000000000000000000000000000000");
  CHECK(abs_rat(a.real_value(200).lower() - ref) < Rat(Int(1), pow_int(10, 48)));
  AlgNum i = AlgNum::parse("x^2 + 1@index1");
  CHECK_FALSE(i.is_real());
}

TEST_CASE("power table") {
  AlgNum a = cbrt2();
  CHECK(power_table(a, 3) == rats({2, 0, 0}));
  CHECK(power_table(a, 4) == rats({0, 2, 0}));
  CHECK(power_table(a, 1) == rats({0, 1, 0}));
  CHECK(power_table(a, 0) == rats({1, 0, 0}));
  AlgNum q = AlgNum::nearest(parse_poly(kQuartic), 1.827);
  for (int r = 0; r <= 12; ++r) CHECK(power_table(q, r) == oracle::power_mod(q.minpoly().coeffs(), r));
}

TEST_CASE("C8") {
  CHECK(c8(cbrt2()) == 3);
  CHECK(c8(AlgNum::nearest(parse_poly("x^3 - 3*x - 1"), 1.879)) == 4);
  CHECK(c8(AlgNum::nearest(parse_poly(kQuartic), 1.827)) == 5);
}

TEST_CASE("power-basis representation") {
  AlgNum a = AlgNum::nearest(parse_poly(kQuartic), 1.827);
  AlgNum b = AlgNum::nearest(parse_poly(kQuartic), 2 * std::cos(4 * M_PI / 15));
  auto rep = power_rep(a, b);
  REQUIRE(std::holds_alternative<PowerBasisRep>(rep));
  CHECK(std::get<PowerBasisRep>(rep).b == rats({-2, 0, 1, 0}));
  CHECK(verify_power_rep(a, b, parse_rat_poly("x^2 - 2")));
  CHECK_FALSE(verify_power_rep(a, b, parse_rat_poly("x^2 - 1")));

  auto self = power_rep(a, a);
  REQUIRE(std::holds_alternative<PowerBasisRep>(self));
  CHECK(std::get<PowerBasisRep>(self).b == rats({0, 1, 0, 0}));

  AlgNum sqrt2 = AlgNum::nearest(parse_poly("x^2 - 2"), 1.414);
  CHECK(std::holds_alternative<NotInField>(power_rep(cbrt2(), sqrt2)));

  // random elements of Q(alpha) for the cyclic cubic are recovered exactly
  AlgNum c = AlgNum::nearest(parse_poly("x^3 - 3*x - 1"), 1.879);
  oracle::Rng rng(11);
  for (int i = 0; i < 12; ++i) {
    std::vector<Rat> h{Rat(rng.in(-4, 4)), Rat(rng.in(-4, 4), rng.in(1, 3)), Rat(rng.in(-3, 3))};
    if (h[1] == 0 && h[2] == 0) continue;
    for (auto& x : h) x.canonicalize();
    AlgNum beta = image(c, RatPoly(h));
    auto r = power_rep(c, beta);
    REQUIRE(std::holds_alternative<PowerBasisRep>(r));
    CHECK(std::get<PowerBasisRep>(r).b == h);
  }
}

TEST_CASE("minimal polynomial of an image") {
  IntPoly f = parse_poly("x^3 - 3*x - 1");
  CHECK(minimal_polynomial_of(f, parse_rat_poly("x^2 - 2")) == parse_poly("x^3 - 3*x + 1"));  // 2cos(2pi/9) from 2cos(pi/9)
  CHECK(minimal_polynomial_of(parse_poly("x^3 - 2"), parse_rat_poly("x + 1")) == parse_poly("x^3 - 3*x^2 + 3*x - 3"));
  CHECK(minimal_polynomial_of(parse_poly("x^3 - 2"), parse_rat_poly("x^3")) == parse_poly("x - 2"));
}

TEST_CASE("denominator scalar") {
  CHECK(denominator_scalar(PowerBasisRep{rats({-2, 0, 1, 0}), 1}) == 1);
  CHECK(denominator_scalar(PowerBasisRep{{Rat(1, 2), Rat(1, 3)}, 6}) == 6);
  CHECK(denominator_scalar(PowerBasisRep{{Rat(1, 2), Rat(1, 2), Rat(0)}, 2}) == 2);
}

TEST_CASE("index bound") {
  CHECK(theta_upper_bound(cbrt2()) == 10);
  CHECK(scaled_minpoly(parse_poly("2*x^3 - 1")) == parse_poly("x^3 - 4"));
  // disc 81 gives the bound 9
  CHECK(theta_upper_bound(AlgNum::nearest(parse_poly("x^3 - 3*x - 1"), 1.879)) == 9);
}

TEST_CASE("C9 and C6") {
  AlgNum a = AlgNum::nearest(parse_poly(kQuartic), 1.827);
  AlgNum b = image(a, parse_rat_poly("x^2 - 2"));
  Rat c9v = c9(a, b);
  CHECK(c9v > 0);
  CHECK(c9_enclosure(a, b).upper() <= c9v);
  // C6 = (|c| prod_{i != sel} (1 + |alpha_i|))^-1 for 2^(1/3): other roots have modulus 2^(1/3)
  double m = std::cbrt(2.0);
  CHECK(liouville_c6(cbrt2()).get_d() == doctest::Approx(1 / ((1 + m) * (1 + m))).epsilon(1e-12));
  CHECK(liouville_c6(cbrt2()) < Rat(1) / ((1 + Rat(m)) * (1 + Rat(m))) + Rat(1, 1000000));
}

TEST_CASE("Galois test") {
  CHECK(is_galois(AlgNum::nearest(parse_poly("x^3 - 3*x - 1"), 1.879)));
  CHECK(is_galois(AlgNum::nearest(parse_poly(kQuartic), 1.827)));
  CHECK_FALSE(is_galois(cbrt2()));
}

TEST_CASE("Hensel lifting") {
  IntPoly f = parse_poly("x^3 - 3*x - 1");
  PadicAlgNum a = hensel_root(f, Int(17), Int(3));
  CHECK(a.lift(2) == 207);
  CHECK(mod_pos(f.eval(a.lift(40)), pow_int(17, 40)) == 0);
  // exhaustive roots mod 289 lying over 3
  std::vector<long> over3;
  for (long x = 0; x < 289; ++x)
    if (mod_pos(f.eval(Int(x)), Int(289)) == 0 && x % 17 == 3) over3.push_back(x);
  CHECK(over3 == std::vector<long>{207});
  PadicAlgNum b = hensel_root(f, Int(17), Int(4));
  CHECK(mod_pos(b.lift(1), Int(17)) == 4);
  CHECK_THROWS_AS(hensel_root(parse_poly("x^2 - 2"), Int(2), Int(0)), HypothesisError);
  CHECK_THROWS_AS(hensel_root(f, Int(17), Int(5)), HypothesisError);
}

TEST_CASE("p-adic absolute values") {
  PadicAlgNum a = hensel_root(parse_poly("x^3 - 3*x - 1"), Int(17), Int(3));
  PadicAbs v = padic_abs_linear(a, Int(3), Int(1), 2);
  CHECK(v.exact);
  CHECK(v.value() == Rat(1, 17));
  CHECK(padic_abs_linear(a, Int(1), Int(0)).value() == 1);
  CHECK(padic_abs_linear(a, Int(0), Int(1)).value() == 1);
  // y alpha - x with x = lift mod 17^5: valuation exactly 5 or more, reported as a bound at k = 5
  PadicAbs w = padic_abs_linear(a, a.lift(5), Int(1), 5);
  CHECK_FALSE(w.exact);
  CHECK(w.value() == Rat(1, 1419857));
  PadicAbsPoly g = padic_abs_poly(a, parse_rat_poly("2*x"));
  CHECK(g.exact);
  CHECK(g.value() == 1);
  CHECK(padic_abs_poly(a, parse_rat_poly("x/17")).value() == 17);
  CHECK(liouville_c7(a) == Rat(1, 4 * 3));
}

TEST_CASE("p-adic image") {
  PadicAlgNum a = hensel_root(parse_poly("x^3 - 3*x - 1"), Int(17), Int(3));
  PadicAlgNum b = padic_image(a, parse_rat_poly("x^2 - 2"));
  CHECK(b.minpoly() == parse_poly("x^3 - 3*x + 1"));
  Int m = pow_int(17, 20);
  CHECK(mod_pos(a.lift(20) * a.lift(20) - 2 - b.lift(20), m) == 0);
}
