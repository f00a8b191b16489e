#pragma once

// Minimal pairs (P, Q) with P(alpha) + beta Q(alpha) = 0 and the constants
// attached to them: the height bound C12 and the Wronskian lower bounds C13
// (complex embedding) and C14 (p-adic embedding).
//
// Everything that only depends on the field is phrased in terms of the
// minimal polynomial f of alpha and h in Q[x] with beta = h(alpha).

#include <optional>
#include <string>
#include <vector>

#include "gapkit/algnum.hpp"
#include "gapkit/bound.hpp"

namespace gapkit {

enum class PairMode { Exact, Siegel };
std::string to_string(PairMode m);

struct MinimalPair {
  IntPoly P, Q;
  int r = 0;
  Int height;  // max{H(P), H(Q)}
  PairMode minimality = PairMode::Exact;
  Rat siegel_bound;  // (N A)^(M/(N-M)) rounded up, for the system at degree r
  int kernel_dim = 0;
};

/// d x (2s+2) system whose kernel encodes Phat(alpha) + beta Qhat(alpha) = 0
/// with deg Phat, deg Qhat <= s. Column i < s+1 is the coefficient of x^i in
/// Phat, column s+1+j that of x^j in Qhat.
struct LinearSystem {
  int s = 0;
  std::vector<std::vector<Rat>> rational;
  Int scale;         // denominator_scalar * c_alpha^s
  IntMatrix scaled;  // scale * rational, integral
  size_t rank = 0;
};

LinearSystem build_system(const IntPoly& f, const RatPoly& h, int s);
LinearSystem build_system(const AlgNum& alpha, const PowerBasisRep& rep, int s);

/// Kernel vector -> (P, Q) and back.
std::pair<IntPoly, IntPoly> split_kernel_vector(const IntVec& a, int s);

/// Throws HypothesisError when beta = h(alpha) is rational.
MinimalPair find_pair(const IntPoly& f, const RatPoly& h, PairMode mode = PairMode::Exact);
/// Throws HypothesisError when beta is not in Q(alpha) or rational.
MinimalPair find_pair(const AlgNum& alpha, const AlgNum& beta, PairMode mode = PairMode::Exact);

struct PairReport {
  bool vanishing = false;
  bool coprime = false;
  bool degree = false;
  std::optional<bool> part3;  // set when a candidate pair was supplied
  std::optional<IntPoly> G;   // Phat = G P, Qhat = G Q
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks vanishing, coprimality, 1 <= r <= d/2 and, for an optional
/// candidate of max degree <= d-1-r, the divisibility Phat = G P, Qhat = G Q.
PairReport verify_pair(const IntPoly& f, const RatPoly& h, const IntPoly& P, const IntPoly& Q,
                       const std::optional<std::pair<IntPoly, IntPoly>>& candidate = std::nullopt);
PairReport verify_pair(const AlgNum& alpha, const AlgNum& beta, const IntPoly& P, const IntPoly& Q,
                       const std::optional<std::pair<IntPoly, IntPoly>>& candidate = std::nullopt);

/// P Q' - Q P'.
IntPoly wronskian(const IntPoly& P, const IntPoly& Q);

struct C12Result {
  Bound closed_form;  // upper bound from the Siegel-lemma argument
  Int tautological;   // max{H(P), H(Q)} of the computed pair
  Bound value;        // the smaller sound one
};
C12Result c12(const IntPoly& f, const RatPoly& h, const MinimalPair& pair, unsigned bits = 128);

struct WronskianBound {
  Bound direct;   // from evaluating W at alpha
  Bound formula;  // closed form in terms of d, C12, M(alpha), ...
  Bound value;    // max of the two
};
/// Lower bound for |W(alpha)| in the complex embedding of alpha.
WronskianBound c13(const AlgNum& alpha, const MinimalPair& pair, const Bound& c12v, unsigned bits = 128);
/// Lower bound for |W(alpha)|_p.
WronskianBound c14(const PadicAlgNum& xi, const MinimalPair& pair, const Bound& c12v);

}  // namespace gapkit
