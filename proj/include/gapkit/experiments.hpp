#pragma once

// The dichotomy sweep: fixed instances of both gap principles, fed with
// continued-fraction, p-adic lattice and Mobius-derived approximations.

#include <map>
#include <string>
#include <vector>

#include "gapkit/thue.hpp"

namespace gapkit {

struct SweepInstance {
  std::string name;
  GapInstance inst;
  std::vector<ApproxPair> alpha_approx, beta_approx;
};

/// The cubic x^3 - 3x - 1 (with a Mobius relation) and the quartic with roots
/// 2cos(2 pi k/15) (without one), each over R and over Q_p.
std::vector<SweepInstance> sweep_instances();

struct SweepRecord {
  std::string instance;
  ApproxPair pair1, pair2;
  Verdict verdict;
};

struct SweepReport {
  std::vector<SweepRecord> records;
  std::map<std::string, std::map<VerdictKind, size_t>> by_instance;
  size_t certified = 0;         // verdicts GapHolds, MobiusCase, Both
  size_t certified_mobius = 0;  // ... on instances with a Mobius relation
  size_t certified_plain = 0;
  size_t certified_arch = 0, certified_padic = 0;
  size_t violations = 0, abstentions = 0, not_applicable = 0;
  double seconds = 0;
  /// Abstentions over all pairs whose hypotheses were not refuted.
  double abstention_rate() const;
};

/// Up to `per_instance` pairs (H1 <= H2) drawn per instance with a seeded generator.
SweepReport run_sweep(unsigned seed = 1, size_t per_instance = 80);

}  // namespace gapkit
