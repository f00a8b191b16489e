#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gapkit/autgroup.hpp"
#include "oracles.hpp"

using namespace gapkit;

namespace {

std::set<oracle::Mat> as_set(const EnhancedAut& g) {
  std::set<oracle::Mat> out;
  for (const auto& e : g.elements) out.insert({e.m.s, e.m.u, e.m.t, e.m.v});
  return out;
}

std::vector<Int> scaled(const BinForm& F, long k) {
  std::vector<Int> c = F.coeffs();
  for (auto& x : c) x *= k;
  return c;
}

}  // namespace

TEST_CASE("D12 family") {
  BinForm F = d12_family(Int(3), Int(1));
  CHECK(F.degree() == 12);
  CHECK_THROWS_AS(d12_family(Int(1), Int(1)), HypothesisError);
  CHECK_THROWS_AS(d12_family(Int(6), Int(2)), HypothesisError);
  IdentityReport rep = verify_729(F);
  CHECK(rep.unimodular_ok == 12);
  CHECK(rep.scaled_ok == 12);
  CHECK(rep.ok());
  // the same identities by schoolbook expansion
  for (const auto& m : d12_unimodular_maps()) {
    CHECK(m.det() * m.det() == 1);
    CHECK(oracle::compose(F.coeffs(), m.s, m.u, m.t, m.v) == F.coeffs());
  }
  for (const auto& m : d12_scaled_maps()) {
    CHECK(m.det() * m.det() == 9);
    CHECK(oracle::compose(F.coeffs(), m.s, m.u, m.t, m.v) == scaled(F, 729));
  }
  // another member of the family
  CHECK(verify_729(d12_family(Int(13), Int(1))).ok());
}

TEST_CASE("Aut' of the D12 instance") {
  BinForm F = d12_family(Int(3), Int(1));
  EnhancedAut g = aut_prime(F);
  CHECK(g.order() == 24);
  CHECK(g.structure == "D_12");
  CHECK(g.contains(IntMat2{0, 1, 1, 0}));
  CHECK(g.contains(IntMat2{1, 1, -1, 2}));
  CHECK(aut_rational_class(g) == "D6");
  GroupCheck chk = check_group_axioms(g);
  CHECK(chk.ok());
  CHECK(chk.has_identity);
  CHECK(chk.has_minus_identity);
  CHECK(as_set(g) == oracle::brute_aut(F, 3));
  CHECK(aut_order(IntMat2{0, 1, 1, 0}) == 2);
  CHECK(aut_order(IntMat2{1, 1, -1, 2}) == 12);
}

TEST_CASE("Aut' of x^3 - 2y^3") {
  BinForm F = parse_form("x^3 - 2*y^3");
  EnhancedAut g = aut_prime(F);
  CHECK(g.order() == 2);
  CHECK(g.structure == "C_2");
  CHECK(aut_rational_class(g) == "C2");
  std::set<oracle::Mat> expect{{1, 0, 0, 1}, {-1, 0, 0, -1}};
  CHECK(as_set(g) == expect);
  CHECK(oracle::brute_aut(F, 10) == expect);
}

TEST_CASE("Aut' of the cyclic cubic") {
  BinForm F = parse_form("x^3 - 3*x*y^2 - y^3");
  EnhancedAut g = aut_prime(F);
  CHECK(g.order() == 6);
  CHECK(g.structure == "C_6");
  CHECK(check_group_axioms(g).ok());
  CHECK(as_set(g) == oracle::brute_aut(F, 4));
  for (const auto& e : g.elements) {
    // F_M = sign |D|^(3/2) F, checked squared
    BinForm FM = form_action(F, e.m);
    Int D3 = pow_int(abs_int(e.det), 3);
    for (int i = 0; i <= 3; ++i) CHECK(FM.coeff(i) * FM.coeff(i) == D3 * F.coeff(i) * F.coeff(i));
  }
}

TEST_CASE("membership and composition") {
  BinForm F = parse_form("x^3 - 3*x*y^2 - y^3");
  CHECK(aut_member(F, IntMat2::identity()));
  CHECK(aut_member(F, IntMat2{-2, 0, 0, -2}));  // primitive part is -I
  CHECK_FALSE(aut_member(F, IntMat2{1, 1, 0, 1}));
  CHECK(aut_compose(IntMat2{2, 0, 0, 2}, IntMat2{0, 1, 1, 0}) == IntMat2{0, 1, 1, 0});
  CHECK(aut_order(IntMat2::identity()) == 1);
  CHECK(aut_order(IntMat2{1, 1, 0, 1}, 20) == 0);
  CHECK_THROWS_AS(aut_prime(parse_form("x^3 - y^3")), HypothesisError);
  CHECK_THROWS_AS(aut_prime(parse_form("x^2 + y^2")), HypothesisError);
}

TEST_CASE("root orbits") {
  EnhancedAut d12 = aut_prime(d12_family(Int(3), Int(1)));
  OrbitPartition o = root_orbit_partition(d12);
  CHECK(o.gamma == 12);
  CHECK(o.blocks.size() == 1);
  for (int g : o.gamma_i) CHECK(g == 12);

  BinForm C = parse_form("x^3 - 3*x*y^2 - y^3");
  EnhancedAut gc = aut_prime(C);
  OrbitPartition oc = root_orbit_partition(gc);
  CHECK(oc.gamma == 3);
  std::vector<AlgNum> roots;
  for (int i = 0; i < 3; ++i) roots.emplace_back(C.dehomogenize(), i);
  OrbitPartition pw = root_orbit_partition(roots);
  CHECK(pw.gamma == 3);
  CHECK(pw.blocks.size() == oc.blocks.size());

  EnhancedAut gt = aut_prime(parse_form("x^3 - 2*y^3"));
  CHECK(root_orbit_partition(gt).gamma == 1);

  // images of roots under Aut' are roots again, and -I fixes every root
  for (const auto& e : gc.elements)
    for (int i = 0; i < 3; ++i) CHECK(mobius_image_index(C, e.m, i) >= 0);
  for (int i = 0; i < 3; ++i) CHECK(mobius_image_index(C, IntMat2{-1, 0, 0, -1}, i) == i);
  CHECK(mobius_image_index(C, IntMat2{1, 1, 0, 1}, 0) == -1);
}

TEST_CASE("group structure names") {
  std::vector<AutElement> cyc{{IntMat2::identity(), 1, 1, 1}, {IntMat2{-1, 0, 0, -1}, 1, -1, 2}};
  CHECK(group_structure(cyc) == "C_2");
  std::vector<AutElement> dih{{IntMat2::identity(), 1, 1, 1},
                              {IntMat2{-1, 0, 0, -1}, 1, -1, 2},
                              {IntMat2{0, 1, 1, 0}, -1, 1, 2},
                              {IntMat2{0, -1, -1, 0}, -1, -1, 2}};
  CHECK(group_structure(dih) == "D_2");
}
