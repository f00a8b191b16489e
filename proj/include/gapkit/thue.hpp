#pragma once

// Thue inequalities 0 < |F(x, y)| <= m: box enumeration, root assignment,
// the large-solution threshold C5 and the census against the counting bound.
// Also the approximation generators used by the gap experiments.

#include <optional>
#include <string>
#include <vector>

#include "gapkit/autgroup.hpp"
#include "gapkit/gap_engine.hpp"

namespace gapkit {

struct ThueProblem {
  BinForm F;
  Int m;
  Int B;  // search box H(x, y) <= B
};

struct Solution {
  Int x, y;
  Int value;  // F(x, y)
  Int height() const { return std::max(abs_int(x), abs_int(y)); }
  bool operator==(const Solution& o) const { return x == o.x && y == o.y; }
};

/// (x, y) ~ (-x, -y): first nonzero coordinate made positive.
std::pair<Int, Int> normalize_sign(const Int& x, const Int& y);

/// All primitive solutions with H <= B, sorted by height then (x, y).
/// Throws HypothesisError for m < 1 or reducible F, and when more than `budget` candidates would be tried.
std::vector<Solution> enumerate_primitive(const ThueProblem& problem, unsigned long budget = 50000000UL);

/// 2^(d-1) d^((d-1)/2) M(F)^(d-2) / |D(F)|^(1/2); needs c_0 c_d != 0.
Bound lewis_mahler_c10(const BinForm& F, unsigned bits = 128);

enum class Side { Alpha, Inverse };  // |alpha - x/y|  or  |1/alpha - y/x|
std::string to_string(Side s);

struct RootAssignment {
  int index = -1;  // root of F(x, 1) in isolation order
  Side side = Side::Alpha;
  Interval distance;
  bool unique = false;  // minimum separated from every other candidate
};
RootAssignment assign_root(const BinForm& F, const Int& x, const Int& y, unsigned bits = 128);

/// Certifies min distance <= C10 |F(x, y)| / H^d using the lower end of C10.
Certainty lewis_mahler_holds(const BinForm& F, const Solution& s, const Bound& c10, unsigned bits = 128);

struct C16Family {
  std::vector<AlgNum> roots;  // the real members; complex ones are handled by `complex_cut`
  Bound complex_cut;          // beyond this height no non-real member has an approximation
  Bound c11;
  Bound value;
  std::map<std::string, Bound> parts;
};
/// C16 for the real roots of f with C0, adjusted for the non-real roots.
C16Family c16_family(const IntPoly& f, const Rat& mu, const Rat& c0);

struct C5Result {
  Bound c10;
  Bound lewis_mahler;  // (C10 m)^(1/(d - mu)), nudged up so the inequality is strict
  std::optional<C16Family> alpha_family, inverse_family;
  Bound value;
  bool galois = false;
};
/// Needs d/2 + 1 < mu < d. The C16 branches use C0 = 1 and are skipped when `with_c16` is false.
C5Result c5(const BinForm& F, const Int& m, const Rat& mu, bool with_c16 = true);

struct CensusEntry {
  Solution sol;
  RootAssignment root;
  int orbit = -1;
  bool large = false;  // H >= C5
};

struct Census {
  ThueProblem problem;
  Rat mu;
  EnhancedAut aut;
  OrbitPartition root_orbits;
  C5Result c5;
  CountBound count;  // gamma = #Aut'
  Int bound;         // #Aut' * floor(...)
  long gyory = 0;    // 25 d, for comparison
  bool applicable = false;  // Galois hypothesis holds
  std::vector<CensusEntry> entries;
  std::vector<std::vector<size_t>> solution_orbits;  // indices into entries
  size_t large_count = 0;
  bool bound_ok = false;
  bool orbit_closed = false;
  std::vector<std::string> notes;
};
Census census(const ThueProblem& problem, const Rat& mu, bool with_c16 = true);

/// First `count` continued-fraction convergents of a real irrational alpha, each with |alpha - p/q| < 1/q^2 certified.
std::vector<ApproxPair> convergents(const AlgNum& alpha, size_t count);

/// Reduced vectors of {x = y alpha mod p^k} for each k: |y alpha - x|_p <= p^-k with H about p^(k/2).
std::vector<ApproxPair> padic_approximations(const PadicAlgNum& xi, const std::vector<unsigned long>& ks);

}  // namespace gapkit
