#pragma once

// The group Aut'|F| of a binary form: primitive integer matrices M0 with
// F_M0 = eps |det M0|^(d/2) F, composed as primitive parts of products
// (the 1/sqrt|det| scaling is left implicit). Also root orbits under integer
// Mobius maps and the degree-12 dihedral family.

#include <optional>
#include <string>
#include <vector>

#include "gapkit/algnum.hpp"

namespace gapkit {

struct AutElement {
  IntMat2 m;       // primitive, (s u; t v) acting as F(s x + u y, t x + v y)
  Int det;         // D = sv - tu
  int sign = 1;    // F_M0 = sign |D|^(d/2) F
  int order = 1;   // order in Aut'
  std::string str() const;
};

/// Exact membership test: F_M0^2 = D^d F^2 for the primitive part of m.
std::optional<AutElement> aut_member(const BinForm& F, const IntMat2& m);

/// Product in Aut': primitive part of a*b.
IntMat2 aut_compose(const IntMat2& a, const IntMat2& b);
/// Smallest k with aut_compose^k(m) = I (0 if none up to `limit`).
int aut_order(const IntMat2& m, int limit = 48);

struct EnhancedAut {
  BinForm form;
  std::vector<AutElement> elements;  // sorted by matrix
  std::string structure;             // "C_n" or "D_n"
  size_t order() const { return elements.size(); }
  bool contains(const IntMat2& m) const;
  /// Elements whose |det| is a perfect square, i.e. the ones with rational entries after scaling.
  std::vector<AutElement> rational_subgroup() const;
};

/// Throws HypothesisError when F is reducible or of degree < 3.
EnhancedAut aut_prime(const BinForm& F, unsigned bits = 128);

/// "C_n" when every det is positive, else "D_(n/2)".
std::string group_structure(const std::vector<AutElement>& elements);
/// Class among C1, C2, C3, C4, C6, D1, D2, D3, D4, D6 of the rational subgroup.
std::string aut_rational_class(const EnhancedAut& aut);

struct GroupCheck {
  bool closed = true, inverses = true, has_identity = false, has_minus_identity = false;
  bool orders_ok = true;  // every order in {1,2,3,4,6,8,12}
  bool determinant_law = true;  // |D|^d c_d^2 = F(s,t)^2
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
GroupCheck check_group_axioms(const EnhancedAut& aut);

struct OrbitPartition {
  std::vector<std::vector<int>> blocks;  // root indices
  std::vector<int> gamma_i;              // size of the block holding root i
  int gamma = 0;
};
/// Orbits of the roots of F(x, 1) under the Mobius action of Aut'|F|.
OrbitPartition root_orbit_partition(const EnhancedAut& aut, unsigned bits = 128);
/// Orbits among a list of numbers in one field, from pairwise integer Mobius relations.
OrbitPartition root_orbit_partition(const std::vector<AlgNum>& alphas);

/// Where the Mobius map of m sends root i of F(x, 1); -1 if it is not a root.
int mobius_image_index(const BinForm& F, const IntMat2& m, int i, unsigned bits = 128);

/// a(x^12+y^12) - 6a xy(x^10+y^10) + ... ; needs a = 3b mod 10 and gcd(a, b) = 1.
BinForm d12_family(const Int& a, const Int& b);
/// The twelve unimodular maps fixing every d12_family form.
std::vector<IntMat2> d12_unimodular_maps();
/// The twelve det +-3 maps with F_M = 729 F.
std::vector<IntMat2> d12_scaled_maps();

struct IdentityReport {
  int unimodular_ok = 0, scaled_ok = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty() && unimodular_ok == 12 && scaled_ok == 12; }
};
IdentityReport verify_729(const BinForm& F);

}  // namespace gapkit
