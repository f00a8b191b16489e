#pragma once

// Integer lattices: exact integral LLL, saturated integer kernels and
// short-vector enumeration in the max norm.

#include <vector>

#include "gapkit/numeric.hpp"

namespace gapkit {

using IntVec = std::vector<Int>;
using IntMatrix = std::vector<IntVec>;  // row-major

struct LllResult {
  IntMatrix basis;
  /// Gram determinants d_0 = 1, d_1, ..., d_n; |b*_i|^2 = d_i / d_{i-1}.
  std::vector<Int> gram_dets;
  Rat min_gs_norm2() const;
};

/// Integral LLL (delta = 99/100) on linearly independent rows.
/// Throws InvariantError if the rows are dependent.
LllResult lll_reduce(IntMatrix rows);

/// Rank of an integer matrix (exact).
size_t matrix_rank(const IntMatrix& a);

/// LLL-reduced basis of { x in Z^n : A x = 0 } for an m x n integer matrix.
IntMatrix integer_kernel(const IntMatrix& a, size_t ncols);

/// All nonzero lattice vectors v (one of each pair +-v) with max|v_i| <= bound.
/// `max_count` guards against explosion; throws PrecisionError when exceeded.
std::vector<IntVec> enumerate_max_norm(const IntMatrix& basis, const Int& bound,
                                       size_t max_count = 200000);

Int max_norm(const IntVec& v);
Int norm2(const IntVec& v);

}  // namespace gapkit
