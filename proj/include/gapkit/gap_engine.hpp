#pragma once

// Gap principles for pairs of rational approximations to alpha and to
// beta in Q(alpha): the vanishing case, the Archimedean and p-adic constant
// sets, uniqueness thresholds, Thue-Siegel parameters and the counting bound.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gapkit/minpair.hpp"
#include "gapkit/sqrt_rat.hpp"

namespace gapkit {

enum class Metric { Archimedean, Padic };
std::string to_string(Metric m);

/// beta = (s alpha + t) / (u alpha + v), sv - tu != 0.
struct MobiusRelation {
  Int s, t, u, v;
  Int det() const { return s * v - t * u; }
  /// The same map as a matrix (s t; u v).
  IntMat2 matrix() const { return IntMat2{s, t, u, v}; }
  std::string str() const;
};

struct ApproxPair {
  Int x, y;  // coprime, y > 0 unless y = 0 is forced
  Int height() const { return std::max(abs_int(x), abs_int(y)); }
  bool operator==(const ApproxPair& o) const { return x == o.x && y == o.y; }
  std::string str() const { return x.get_str() + "/" + y.get_str(); }
};
/// Reduces and moves the sign into x.
ApproxPair reduced_pair(Int x, Int y);

// ------------------------------------------------------------ vanishing gap

/// 2^(r^2) (r+1)^((3r^2+2r)/2).
SqrtRat c15(long r);

/// |c_P^(r-s) Res(P, Q)| for coprime P, Q, where P is the one of larger degree r >= 1.
Int resultant_gcd_bound(const IntPoly& P, const IntPoly& Q);

/// Lower bound for C(P, Q) of the two-forms lemma, rounded down.
Rat two_forms_constant(const IntPoly& P, const IntPoly& Q, unsigned bits = 64);

struct VanishingImage {
  ApproxPair image;  // x2/y2 = -P(x1,y1)/Q(x1,y1)
  Rat lower_bound;   // H1^r / (C15 maxH^(2r^2+3r)), rounded down
};
/// Throws HypothesisError when Q(x1/y1) = 0 and InvariantError if the height bound fails.
VanishingImage vanishing_gap(const IntPoly& P, const IntPoly& Q, const Int& x1, const Int& y1);

/// (s x + t y) / (u x + v y) reduced.
ApproxPair derived_approx(const ApproxPair& p, const MobiusRelation& rel);
/// Checks alpha' - x'/y' = (sv - tu) / ((u alpha + v)(u x/y + v)) (alpha - x/y) on enclosures.
bool transport_identity_holds(const AlgNum& alpha, const ApproxPair& p, const MobiusRelation& rel,
                              unsigned bits = 128);

/// Relation read off the r = 1 minimal pair, or nullopt when r >= 2.
std::optional<MobiusRelation> mobius_relation(const IntPoly& f, const RatPoly& h);
std::optional<MobiusRelation> mobius_relation(const AlgNum& alpha, const AlgNum& beta);

// --------------------------------------------------------------- constants

struct GapConstants {
  Metric metric = Metric::Archimedean;
  int d = 0;
  Rat mu, c0;
  MinimalPair pair;
  std::optional<MobiusRelation> mobius;
  Bound c_small;  // C1 or C3
  Bound c_big;    // C2 or C4
  /// Intermediate constants (C6, C7, C12, C13, C14, branch values) by label.
  std::map<std::string, Bound> parts;
};

/// Throws HypothesisError unless d >= 3, alpha is real and d/2 + 1 < mu < d.
GapConstants archimedean_constants(const AlgNum& alpha, const AlgNum& beta, const Rat& mu, const Rat& c0,
                                   unsigned bits = 128);
/// beta = h(alpha) in Q(alpha), alpha in Z_p.
GapConstants nonarchimedean_constants(const PadicAlgNum& xi, const RatPoly& h, const Rat& mu, const Rat& c0);

/// max_{i != j} (2 C0 / |alpha_i - alpha_j|)^(1/mu), rounded up.
Bound c11(const std::vector<ComplexBox>& roots, const Rat& mu, const Rat& c0);
Bound c11(const std::vector<PadicAlgNum>& roots, const Rat& mu, const Rat& c0);

struct ThueSiegelParams {
  int d = 0;
  Rat a;
  Interval t, tau, lambda;
  Rat delta, delta_inv;
  Interval A;  // 500^2 (log max M + d/2)
  bool lambda_ok = false;     // lambda < 1.42 sqrt d
  bool delta_ok = false;      // delta^-1 < 41667 d^2
  bool t_interval_ok = false;
  bool tau_interval_ok = false;
};
ThueSiegelParams thue_siegel_params(long d, const Interval& log_max_mahler);
/// Upper bound for log H2 from the Thue-Siegel conclusion.
Interval thue_siegel_conclusion(const ThueSiegelParams& p, const Interval& A1, const Interval& A2,
                                const Interval& logH1);

struct CountBound {
  Int inner_floor;  // floor(1 + (11.51 + 1.5 log d + log mu) / log(mu - d/2))
  Int bound;        // gamma * inner_floor
  Interval value;   // the quantity under the floor
};
/// Certified floor; throws HypothesisError unless mu - d/2 > 1.
CountBound count_bound(const Int& d, const Rat& mu, const Int& gamma);

struct C16Inputs {
  int d = 0;
  Rat mu, c0;
  Bound c11;
  std::vector<Bound> c_small;  // pairwise C1 / C3
  std::vector<Bound> c_big;    // pairwise C2 / C4
  Interval A;
};
/// Max of the four adjustments; branch values land in `parts` when given.
Bound c16(const C16Inputs& in, std::map<std::string, Bound>* parts = nullptr);

// ---------------------------------------------------------------- verdicts

enum class VerdictKind { GapHolds, MobiusCase, Both, Violation, Abstain, NotApplicable };
std::string to_string(VerdictKind v);

struct Verdict {
  VerdictKind kind = VerdictKind::NotApplicable;
  std::string detail;
  Interval gap_lhs, gap_rhs;  // log H2 + log C_big  vs  (mu - d/2) log H1
};

/// An instance of either gap principle with its constants.
struct GapInstance {
  Metric metric = Metric::Archimedean;
  IntPoly f;
  RatPoly h;
  std::optional<AlgNum> alpha, beta;
  std::optional<PadicAlgNum> palpha, pbeta;
  GapConstants constants;
};
GapInstance archimedean_instance(const AlgNum& alpha, const AlgNum& beta, const Rat& mu, const Rat& c0);
GapInstance padic_instance(const PadicAlgNum& xi, const RatPoly& h, const Rat& mu, const Rat& c0);

enum class Certainty { Yes, No, Unknown };
/// Whether |target - x/y| (or |y target - x|_p) < C0 / H^mu; target 1 is alpha, 2 is beta.
Certainty approximation_certified(const GapInstance& inst, int target, const ApproxPair& p,
                                  unsigned max_bits = 4096);

/// Applies the dichotomy to (pair1 ~ alpha, pair2 ~ beta); abstains instead of guessing.
Verdict check_gap_dichotomy(const GapInstance& inst, const ApproxPair& pair1, const ApproxPair& pair2,
                            unsigned max_bits = 4096);

struct ClassicGapReport {
  size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
/// 2 y2 > y1^(mu - 1) for consecutive pairs (strictly increasing denominators required).
ClassicGapReport classic_gap_check(const std::vector<ApproxPair>& pairs, const Rat& mu);

}  // namespace gapkit
