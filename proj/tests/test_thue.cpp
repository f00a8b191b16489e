#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gapkit/thue.hpp"
#include "oracles.hpp"

using namespace gapkit;

namespace {

// naive scan of the box, sign normalized
std::vector<std::pair<long, long>> naive_solutions(const BinForm& F, long m, long B) {
  std::vector<std::pair<long, long>> out;
  for (long x = 0; x <= B; ++x)
    for (long y = -B; y <= B; ++y) {
      if (x == 0 && y <= 0) continue;
      if (gcd_int(x, y) != 1) continue;
      Int v = abs_int(F.eval(x, y));
      if (v > 0 && v <= m) out.emplace_back(x, y);
    }
  return out;
}

std::set<std::pair<long, long>> as_set(const std::vector<Solution>& s) {
  std::set<std::pair<long, long>> out;
  for (const auto& e : s) out.emplace(e.x.get_si(), e.y.get_si());
  return out;
}

}  // namespace

TEST_CASE("sign normalization") {
  CHECK(normalize_sign(Int(-1), Int(-1)) == std::make_pair(Int(1), Int(1)));
  CHECK(normalize_sign(Int(0), Int(-3)) == std::make_pair(Int(0), Int(3)));
  CHECK(normalize_sign(Int(2), Int(-3)) == std::make_pair(Int(2), Int(-3)));
}

TEST_CASE("enumeration against a naive scan") {
  BinForm F = parse_form("x^3 - 2*y^3");
  auto sols = enumerate_primitive({F, Int(1), Int(100)});
  std::set<std::pair<long, long>> expect{{1, 0}, {1, 1}};
  CHECK(as_set(sols) == expect);
  auto naive = naive_solutions(F, 1, 100);
  CHECK(std::set<std::pair<long, long>>(naive.begin(), naive.end()) == expect);

  const char* forms[] = {"x^3 - 3*x*y^2 - y^3", "2*x^3 + x^2*y - 3*x*y^2 + 5*y^3", "x^4 - x^3*y - 4*x^2*y^2 + 4*x*y^3 + y^4"};
  for (const char* s : forms) {
    BinForm G = parse_form(s);
    for (long m : {1L, 3L, 10L}) {
      auto got = enumerate_primitive({G, Int(m), Int(60)});
      auto ref = naive_solutions(G, m, 60);
      CHECK(as_set(got) == std::set<std::pair<long, long>>(ref.begin(), ref.end()));
      for (size_t i = 1; i < got.size(); ++i) CHECK(got[i - 1].height() <= got[i].height());
    }
  }
  CHECK_THROWS_AS(enumerate_primitive({parse_form("x^3 + y^3"), Int(1), Int(10)}), HypothesisError);
  CHECK_THROWS_AS(enumerate_primitive({F, Int(0), Int(10)}), HypothesisError);
  CHECK_THROWS_AS(enumerate_primitive({F, Int(1), Int(100000)}, 1000), HypothesisError);
}

TEST_CASE("Lewis-Mahler constant") {
  Bound c = lewis_mahler_c10(parse_form("x^3 - 2*y^3"));
  CHECK(c.approx() == doctest::Approx(4 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(c.enc.lo() <= Interval(Rat(16, 3), 128).sqrt().hi());
  CHECK(c.enc.hi() >= Interval(Rat(16, 3), 128).sqrt().lo());
  CHECK_THROWS_AS(lewis_mahler_c10(parse_form("x^3 - x*y^2 + x^2*y")), HypothesisError);
}

TEST_CASE("root assignment") {
  BinForm F = parse_form("x^3 - 2*y^3");
  RootAssignment a = assign_root(F, Int(1), Int(1));
  CHECK(a.side == Side::Inverse);  // |2^(-1/3) - 1| < |2^(1/3) - 1|
  CHECK(a.unique);
  CHECK(a.distance.approx() == doctest::Approx(1 - std::cbrt(0.5)).epsilon(1e-12));
  RootAssignment b = assign_root(F, Int(1), Int(0));
  CHECK_FALSE(b.unique);  // all three inverse roots have modulus 2^(-1/3)
  RootAssignment c = assign_root(F, Int(29), Int(23));
  CHECK(c.side == Side::Inverse);  // 5.97e-4 against 9.49e-4 on the alpha side
  CHECK(c.unique);
  for (const auto& s : enumerate_primitive({F, Int(5), Int(200)})) {
    RootAssignment r = assign_root(F, s.x, s.y);
    if (r.unique) CHECK(lewis_mahler_holds(F, s, lewis_mahler_c10(F)) == Certainty::Yes);
  }
}

TEST_CASE("convergents") {
  AlgNum a = AlgNum::nearest(parse_poly("x^3 - 2"), 1.26);
  auto c = convergents(a, 4);
  REQUIRE(c.size() == 4);
  CHECK(c[0] == ApproxPair{Int(1), Int(1)});
  CHECK(c[1] == ApproxPair{Int(4), Int(3)});
  CHECK(c[2] == ApproxPair{Int(5), Int(4)});
  CHECK(c[3] == ApproxPair{Int(29), Int(23)});
  for (const auto& p : convergents(a, 30)) {
    double q = p.y.get_d();
    CHECK(std::fabs(std::cbrt(2.0) - p.x.get_d() / q) < 1 / (q * q) + 1e-15);
  }
}

TEST_CASE("p-adic approximations") {
  PadicAlgNum xi = hensel_root(parse_poly("x^3 - 3*x - 1"), Int(17), Int(3));
  std::vector<unsigned long> ks{2, 4, 6, 8, 10};
  auto v = padic_approximations(xi, ks);
  REQUIRE(v.size() == ks.size());
  for (size_t i = 0; i < ks.size(); ++i) {
    CHECK(oracle::padic_valuation(xi.lift(ks[i] + 4), v[i].x, v[i].y, Int(17), ks[i] + 4) >= ks[i]);
    // height close to p^(k/2) by Minkowski
    CHECK(v[i].height() <= 2 * isqrt(pow_int(17, ks[i])) + 2);
    CHECK(v[i].y != 0);
  }
}

TEST_CASE("C5 and its parts") {
  BinForm F = parse_form("x^3 - 3*x*y^2 - y^3");
  C5Result r = c5(F, Int(1), Rat(11, 4));
  CHECK(r.galois);
  CHECK(r.value.value() >= r.lewis_mahler.value());
  REQUIRE(r.alpha_family);
  CHECK(r.value.value() >= r.alpha_family->value.value());
  C5Result lm = c5(F, Int(1), Rat(11, 4), false);
  CHECK_FALSE(lm.alpha_family);
  // (C10 m)^(1/(d - mu)) = C10^4 here
  CHECK(lm.lewis_mahler.approx() >= std::pow(lm.c10.approx(), 4) * (1 - 1e-12));
  CHECK_THROWS_AS(c5(F, Int(1), Rat(5, 2)), HypothesisError);
  CHECK_THROWS_AS(c5(F, Int(1), Rat(3)), HypothesisError);
}

TEST_CASE("census of the cyclic cubic") {
  ThueProblem pr{parse_form("x^3 - 3*x*y^2 - y^3"), Int(3), Int(200)};
  Census c = census(pr, Rat(11, 4));
  CHECK(c.applicable);
  CHECK(c.aut.order() == 6);
  CHECK(c.count.inner_floor == 64);
  CHECK(c.bound == 6 * 64);
  CHECK(c.large_count == 0);
  CHECK(c.bound_ok);
  CHECK(c.orbit_closed);
  CHECK(c.gyory == 75);
  auto naive = naive_solutions(pr.F, 3, 200);
  CHECK(c.entries.size() == naive.size());
  size_t grouped = 0;
  for (const auto& o : c.solution_orbits) grouped += o.size();
  CHECK(grouped == c.entries.size());
  // each orbit is closed under the unimodular elements
  for (const auto& orbit : c.solution_orbits) {
    std::set<std::pair<Int, Int>> pts;
    for (size_t i : orbit) pts.insert({c.entries[i].sol.x, c.entries[i].sol.y});
    for (const auto& e : c.aut.elements) {
      if (abs_int(e.det) != 1) continue;
      for (size_t i : orbit) {
        const Solution& s = c.entries[i].sol;
        auto im = normalize_sign(e.m.s * s.x + e.m.u * s.y, e.m.t * s.x + e.m.v * s.y);
        if (std::max(abs_int(im.first), abs_int(im.second)) <= pr.B) CHECK(pts.count(im) == 1);
      }
    }
  }
}

TEST_CASE("census of the D12 form") {
  ThueProblem pr{d12_family(Int(3), Int(1)), Int(3), Int(30)};
  Census c = census(pr, Rat(8));
  CHECK(c.aut.order() == 24);
  CHECK(c.large_count == 0);
  CHECK(c.bound_ok);
  CHECK(c.orbit_closed);
  CHECK(c.bound == 24 * c.count.inner_floor);
  CHECK(c.root_orbits.gamma == 12);
}

TEST_CASE("census outside the Galois hypothesis") {
  Census c = census({parse_form("x^3 - 2*y^3"), Int(1), Int(100)}, Rat(11, 4));
  CHECK_FALSE(c.applicable);
  CHECK(c.aut.order() == 2);
  CHECK(c.entries.size() == 2);
  CHECK(c.large_count == 0);
  CHECK(c.orbit_closed);
}
