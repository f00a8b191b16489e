#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gapkit/lattice.hpp"
#include "gapkit/parse.hpp"
#include "gapkit/roots.hpp"
#include "gapkit/sqrt_rat.hpp"
#include "oracles.hpp"

using namespace gapkit;

TEST_CASE("heights") {
  CHECK(parse_form("3*x^3 - 5*x*y^2 + y^3").height() == 5);
  CHECK(parse_poly("x^4 - x^3 - 4*x^2 + 4*x + 1").height() == 4);
  CHECK(IntPoly::constant(7).height() == 7);
}

TEST_CASE("parser accepts expressions and coefficient lists") {
  IntPoly a = parse_poly("x^4 - x^3 - 4*x^2 + 4*x + 1");
  IntPoly b = parse_poly("[1, -1, -4, 4, 1]");
  CHECK(a == b);
  CHECK(parse_poly("a^2 - 2") == IntPoly({-2, 0, 1}));
  BinForm F = parse_form("x^3 - 3*x*y^2 - y^3");
  CHECK(F.coeffs() == std::vector<Int>{-1, -3, 0, 1});
  RatPoly h = parse_rat_poly("1/2*x^2 - 2");
  CHECK(h[2] == Rat(1, 2));
  AlgSpec s = parse_alg_spec("x^3 - 3*x - 1@residue3");
  REQUIRE(s.residue);
  CHECK(*s.residue == 3);
  CHECK_THROWS(parse_poly("x^^2"));
}

TEST_CASE("resultant against the Sylvester determinant") {
  IntPoly p = parse_poly("x^2 - 2"), q = parse_poly("x - 1");
  CHECK(resultant(p, q) == -1);
  CHECK(oracle::sylvester(p, q) == -1);
  CHECK(resultant(p, p) == 0);
  IntPoly c = parse_poly("x^3 - 2"), x = parse_poly("x");
  CHECK(resultant(c, x) == oracle::sylvester(c, x));
  CHECK(resultant(c, x) == 2);  // product of the roots of x^3 - 2
  oracle::Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    IntPoly a = rng.poly(static_cast<int>(rng.in(1, 5)), 9), b = rng.poly(static_cast<int>(rng.in(1, 5)), 9);
    CHECK(resultant(a, b) == oracle::sylvester(a, b));
  }
}

TEST_CASE("discriminants") {
  CHECK(discriminant(parse_form("x^3 - 3*x*y^2 - y^3")) == 81);
  CHECK(discriminant(parse_form("x^2 + x*y + y^2")) == -3);
  CHECK(discriminant(parse_form("x^3 - 2*y^3")) == -108);
  BinForm F = parse_form("2*x^3 + x^2*y - 3*x*y^2 + 5*y^3");
  CHECK(discriminant(form_action(F, IntMat2{2, 1, 1, 1})) == discriminant(F));
  CHECK(discriminant(F) == oracle::form_discriminant(F));
}

TEST_CASE("form substitution") {
  BinForm F = parse_form("x^3 + y^3");
  CHECK(form_action(F, IntMat2{0, 1, 1, 0}) == F);
  BinForm G = parse_form("x^3 - 2*y^3");
  CHECK(form_action(G, IntMat2::identity()) == G);
  CHECK(form_action(G, IntMat2{-1, 0, 0, -1}) == G * Int(-1));
  IntMat2 M{2, -1, 3, 5};
  CHECK(form_action(G, M).coeffs() == oracle::compose(G.coeffs(), M.s, M.u, M.t, M.v));
}

TEST_CASE("reciprocal polynomial") {
  CHECK(reciprocal(parse_poly("2*x^3 + 3*x - 1")) == parse_poly("-x^3 + 3*x^2 + 2"));
  CHECK(reciprocal(parse_poly("x^2 + 1")) == parse_poly("x^2 + 1"));
  CHECK(reciprocal(parse_poly("x")) == IntPoly::constant(1));
}

TEST_CASE("gcd, exact division, squarefree part") {
  IntPoly a = parse_poly("x^3 - x"), b = parse_poly("x^2 + 2*x + 1");
  CHECK(gcd(a, b) == parse_poly("x + 1"));
  IntPoly q;
  CHECK(divide_exact(a, parse_poly("x - 1"), &q));
  CHECK(q == parse_poly("x^2 + x"));
  CHECK_FALSE(divide_exact(a, parse_poly("2*x - 1"), &q));
  CHECK(squarefree_part(parse_poly("x^3 - x^2")) == parse_poly("x^2 - x"));
  CHECK_FALSE(is_squarefree(parse_poly("x^3 - x^2")));
}

TEST_CASE("root isolation") {
  RootSet r2 = isolate_roots(parse_poly("x^2 - 2"));
  REQUIRE(r2.size() == 2);
  CHECK(r2[0].real);
  CHECK(r2[1].real);
  CHECK(r2[1].box.re.overlaps(Interval(Rat(2), 128).sqrt()));

  RootSet r3 = isolate_roots(parse_poly("x^3 - 3*x - 1"));
  REQUIRE(r3.size() == 3);
  const double expect[] = {-1.532088886, -0.347296355, 1.879385242};
  for (int i = 0; i < 3; ++i) {
    CHECK(r3[i].real);
    CHECK(r3[i].approx_re() == doctest::Approx(expect[i]).epsilon(1e-9));
  }
  RootSet ri = isolate_roots(parse_poly("x^2 + 1"));
  REQUIRE(ri.size() == 2);
  CHECK_FALSE(ri[0].real);
  CHECK(std::abs(std::abs(ri[0].approx_im()) - 1) < 1e-12);

  // every floating-point root lies in exactly one enclosure
  oracle::Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    IntPoly p = rng.poly(static_cast<int>(rng.in(2, 7)), 8);
    if (!is_squarefree(p)) continue;
    RootSet rs = isolate_roots(p);
    for (auto z : oracle::roots(p.coeffs())) {
      int hits = 0;
      for (size_t k = 0; k < rs.size(); ++k) {
        double dr = rs[k].approx_re() - static_cast<double>(z.real());
        double di = rs[k].approx_im() - static_cast<double>(z.imag());
        if (std::hypot(dr, di) <= rs[k].radius.to_double() + 1e-9) ++hits;
      }
      CHECK(hits == 1);
    }
  }
  CHECK_THROWS_AS(isolate_roots(parse_poly("x^2 - 2*x + 1")), HypothesisError);
}

TEST_CASE("Mahler measure and house") {
  CHECK(mahler_measure(parse_poly("x^2 - 2")).contains(Rat(2)));
  CHECK(mahler_measure(parse_poly("x^3 - 2")).contains(Rat(2)));
  CHECK(mahler_measure(parse_poly("x^2 - 2")).width().to_double() < 1e-20);
  CHECK(mahler_measure(IntPoly::constant(5)).contains(Rat(5)));
  CHECK(house(parse_poly("x^2 - 2")).overlaps(Interval(Rat(2), 128).sqrt()));
  CHECK(house(parse_poly("x^3 - 2")).overlaps(Interval(Rat(2), 128).pow(Rat(1, 3))));
  CHECK(house(parse_poly("x^3 - 2")).width().to_double() < 1e-20);
  CHECK(house(parse_poly("x - 5")).contains(Rat(5)));
}

TEST_CASE("root separation lower bound") {
  Rat b = root_separation_lower_bound(parse_poly("x^2 - 2"), parse_poly("x"));
  CHECK(b > 0);
  CHECK(Interval(b, 128).certainly_lt(Interval(Rat(2), 128).sqrt()));
  Rat e = root_separation_lower_bound(parse_poly("x"), parse_poly("x + 1"));
  CHECK(e <= Rat(1, 2));
  CHECK(e > 0);
}

TEST_CASE("interval arithmetic is outward rounded") {
  Interval third = Interval(1L, 64) / Interval(3L, 64);
  CHECK(third.contains(Rat(1, 3)));
  CHECK_FALSE(third.lower() == third.upper());
  Interval pi = Interval::pi(128);
  CHECK(pi.lower() < Rat("3141592653589793239/1000000000000000000"));
  CHECK(pi.upper() > Rat("3141592653589793238/1000000000000000000"));
  Interval e = Interval(1L, 128).exp();
  CHECK(e.log().contains(Rat(1)));
  CHECK_THROWS_AS(Interval(1L, 64) / Interval(Rat(0), 64), PrecisionError);
  CHECK(Interval(Rat(8), 128).pow(Rat(1, 3)).contains(Rat(2)));
}

TEST_CASE("exact square-root numbers") {
  SqrtRat a = SqrtRat::half_power(Int(2), 5);  // 2^(5/2) = 4 sqrt 2
  CHECK(a.coeff() == 4);
  CHECK(a.radicand() == 2);
  CHECK(a.round_down() * a.round_down() < 32);
  CHECK(a.round_up() * a.round_up() > 32);
  CHECK(SqrtRat::half_power(Int(4), 33).is_rational());
  CHECK(SqrtRat::half_power(Int(4), 33).coeff() == pow_int(2, 33));
  SqrtRat inv = a.inverse();
  CHECK((inv * a).coeff() * Rat((inv * a).radicand()) == 1);
}

TEST_CASE("lattice reduction and kernels") {
  IntMatrix rows{{1, 0, 0, 12345}, {0, 1, 0, 54321}, {0, 0, 1, 11111}};
  LllResult r = lll_reduce(rows);
  CHECK(r.basis.size() == 3);
  // the reduced basis spans the same lattice: Gram determinant unchanged
  CHECK(r.gram_dets.back() > 0);
  IntMatrix A{{1, 2, 3}, {4, 5, 6}};
  CHECK(matrix_rank(A) == 2);
  IntMatrix K = integer_kernel(A, 3);
  REQUIRE(K.size() == 1);
  for (size_t i = 0; i < A.size(); ++i) {
    Int dot = 0;
    for (size_t j = 0; j < 3; ++j) dot += A[i][j] * K[0][j];
    CHECK(dot == 0);
  }
  CHECK(max_norm(K[0]) == 2);  // (1, -2, 1)
  auto vs = enumerate_max_norm(IntMatrix{{1, 0}, {0, 1}}, Int(1));
  CHECK(vs.size() == 4);  // (1,0), (0,1), (1,1), (1,-1) up to sign
  CHECK_THROWS_AS(lll_reduce(IntMatrix{{1, 2}, {2, 4}}), InvariantError);
}

TEST_CASE("number-theoretic helpers") {
  CHECK(valuation(Int(204), Int(17)) == 1);
  CHECK(mod_pos(Int(-3), Int(17)) == 14);
  CHECK(inv_mod(Int(7), Int(17)) * 7 % 17 == 1);
  CHECK(floor_rat(Rat(-7, 2)) == -4);
  CHECK(ceil_rat(Rat(-7, 2)) == -3);
  CHECK(isqrt(Int(108)) == 10);
}
