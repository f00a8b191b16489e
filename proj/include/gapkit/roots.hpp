#pragma once

// Certified isolation of all complex roots of a squarefree integer polynomial.
//
// Approximations come from Aberth iteration in MPFR; each one is then wrapped
// in a disk of radius n*|p(z_i) / (c_n prod_{j!=i} (z_i - z_j))| evaluated in
// interval arithmetic. Pairwise disjoint disks contain exactly one root each.
// A disk centred on the real axis therefore holds a real root, and a disk
// clear of the axis holds a non-real one.

#include <memory>
#include <mutex>
#include <vector>

#include "gapkit/poly.hpp"

namespace gapkit {

struct RootEnclosure {
  ComplexBox box;  // contains exactly one root of the polynomial
  bool real = false;
  // disk data: centre (exact dyadic) and radius (upper bound)
  BigFloat center_re, center_im, radius;

  Interval abs() const { return real ? box.re.abs() : box.abs(); }
  double approx_re() const { return center_re.to_double(); }
  double approx_im() const { return center_im.to_double(); }
};

/// All roots of one polynomial, ordered by real part and then imaginary part.
/// Refinement keeps the order and returns a new value.
class RootSet {
 public:
  RootSet() = default;
  RootSet(IntPoly p, std::vector<RootEnclosure> roots, unsigned bits)
      : p_(std::move(p)), roots_(std::move(roots)), bits_(bits) {}

  const IntPoly& poly() const { return p_; }
  const std::vector<RootEnclosure>& roots() const { return roots_; }
  const RootEnclosure& operator[](size_t i) const { return roots_.at(i); }
  size_t size() const { return roots_.size(); }
  unsigned bits() const { return bits_; }
  RootSet refine(unsigned bits) const;
  /// Index of the unique root whose enclosure meets the box, or -1 if none or several.
  int locate(const ComplexBox& b) const;
  /// Root nearest to a complex number (by approximate centres).
  int nearest(double re, double im) const;

 private:
  IntPoly p_;
  std::vector<RootEnclosure> roots_;
  unsigned bits_ = 0;
};

/// Enclosures with width roughly 2^-bits relative to the root size.
/// Throws HypothesisError for non-squarefree or constant input.
RootSet isolate_roots(const IntPoly& p, unsigned bits = 128);

/// Thread-safe memo of a polynomial's root set; refines monotonically.
class RootCache {
 public:
  explicit RootCache(IntPoly p) : p_(std::move(p)) {}
  RootSet get(unsigned bits) const;

 private:
  IntPoly p_;
  mutable std::mutex mu_;
  mutable std::shared_ptr<RootSet> best_;
};

Interval mahler_measure(const IntPoly& p, unsigned bits = 128);
Interval mahler_measure(const BinForm& f, unsigned bits = 128);
Interval house(const IntPoly& p, unsigned bits = 128);
/// 2^(1-r) (r+1)^((1-3r)/2) max(H(P),H(Q))^(-2r), rounded down.
Rat root_separation_lower_bound(const IntPoly& p, const IntPoly& q);

}  // namespace gapkit
