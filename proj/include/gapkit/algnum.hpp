#pragma once

// Algebraic numbers given by a minimal polynomial and a selected embedding,
// Archimedean or p-adic, plus the power-basis constants built on them.

#include <memory>
#include <mutex>
#include <optional>
#include <variant>

#include "gapkit/lattice.hpp"
#include "gapkit/parse.hpp"
#include "gapkit/roots.hpp"

namespace gapkit {

bool is_irreducible(const IntPoly& f);

class AlgNum {
 public:
  AlgNum() = default;
  /// f is made primitive with positive leading coefficient; irreducibility is checked.
  /// `index` refers to the root order (real part, then imaginary part).
  AlgNum(const IntPoly& f, int index);
  static AlgNum nearest(const IntPoly& f, double re, double im = 0.0);
  static AlgNum from_spec(const AlgSpec& spec);
  static AlgNum parse(const std::string& text) { return from_spec(parse_alg_spec(text)); }

  const IntPoly& minpoly() const { return f_; }
  int degree() const { return f_.degree(); }
  const Int& lc() const { return f_.lc(); }
  int index() const { return idx_; }
  bool is_real() const;

  RootSet conjugates(unsigned bits = 128) const { return cache_->get(bits); }
  ComplexBox value(unsigned bits = 128) const;
  Interval real_value(unsigned bits = 128) const;  // throws if not real
  /// The same number field element viewed at another conjugate.
  AlgNum conjugate(int index) const;
  std::string str() const;
  bool operator==(const AlgNum& o) const { return f_ == o.f_ && idx_ == o.idx_; }

 private:
  IntPoly f_;
  int idx_ = 0;
  std::shared_ptr<RootCache> cache_;
};

/// Minimal polynomial (primitive, positive leading coefficient) of h(alpha).
IntPoly minimal_polynomial_of(const IntPoly& f, const RatPoly& h);
/// h(alpha) as an AlgNum with its embedding located by enclosure.
AlgNum image(const AlgNum& alpha, const RatPoly& h);

/// Coefficients a_{r,0..d-1} of alpha^r in the power basis.
std::vector<Rat> power_table(const AlgNum& alpha, int r);
/// 1 + max_i |a_{d,i}|.
Rat c8(const AlgNum& alpha);

struct PowerBasisRep {
  std::vector<Rat> b;  // beta = sum b_i alpha^i
  Int denom;           // lcm of denominators
  RatPoly as_poly() const { return RatPoly(b); }
};

struct NotInField {
  std::string reason;
};

using PowerRepResult = std::variant<PowerBasisRep, NotInField>;

/// beta as a polynomial in alpha of degree < d, or a certified NotInField.
/// Throws PrecisionError when neither could be certified within max_bits.
PowerRepResult power_rep(const AlgNum& alpha, const AlgNum& beta, unsigned max_bits = 4096);
/// Exact check of a claimed representation: minpoly_beta(h(x)) = 0 mod f and the embeddings match.
bool verify_power_rep(const AlgNum& alpha, const AlgNum& beta, const RatPoly& h);

/// Upper bound for d house(beta) max_j prod_{i!=j} (1+|alpha_i|)/|alpha_i - alpha_j|, rounded up.
Rat c9(const AlgNum& alpha, const AlgNum& beta, unsigned bits = 128);
Interval c9_enclosure(const AlgNum& alpha, const AlgNum& beta, unsigned bits = 128);
Int denominator_scalar(const PowerBasisRep& rep);
/// isqrt(|disc(minpoly of c_alpha alpha)|), an upper bound for the index theta_alpha.
Int theta_upper_bound(const AlgNum& alpha);
/// Minimal polynomial of c_alpha * alpha (monic).
IntPoly scaled_minpoly(const IntPoly& f);
/// (|c_alpha| prod_{i != sel} (1 + |alpha_i|))^-1 rounded down.
Rat liouville_c6(const AlgNum& alpha, unsigned bits = 128);
/// True when every root of f lies in Q(alpha) (checked with power_rep).
bool is_galois(const AlgNum& alpha);

/// Simple root of f in Z_p selected by a Hensel witness r0.
class PadicAlgNum {
 public:
  PadicAlgNum() = default;
  PadicAlgNum(IntPoly f, Int p, Int r0);

  const IntPoly& minpoly() const { return f_; }
  int degree() const { return f_.degree(); }
  const Int& prime() const { return p_; }
  const Int& residue() const { return r0_; }
  const Int& lc() const { return f_.lc(); }
  /// alpha mod p^k, in [0, p^k).
  Int lift(unsigned long k) const;

 private:
  struct Cache {
    std::mutex mu;
    unsigned long k = 1;
    Int value;
  };
  IntPoly f_;
  Int p_, r0_;
  std::shared_ptr<Cache> cache_;
};

/// Throws HypothesisError when f(r0) != 0 or f'(r0) == 0 mod p.
PadicAlgNum hensel_root(const IntPoly& f, const Int& p, const Int& r0);
/// h(alpha) in Z_p with its own minimal polynomial and residue.
PadicAlgNum padic_image(const PadicAlgNum& xi, const RatPoly& h);

/// |y alpha - x|_p, exact when the valuation is below k.
struct PadicAbs {
  bool exact = true;
  unsigned long valuation = 0;  // exact value, or lower bound when !exact
  Int prime;
  Rat value() const;            // p^-v (upper bound when !exact)
};
PadicAbs padic_abs_linear(const PadicAlgNum& xi, const Int& x, const Int& y, unsigned long k = 64);
/// |g(alpha)|_p for g in Q[x]; valuation may be negative through denominators.
struct PadicAbsPoly {
  bool exact = true;
  long valuation = 0;
  Int prime;
  Rat value() const;
};
PadicAbsPoly padic_abs_poly(const PadicAlgNum& xi, const RatPoly& g, unsigned long k = 64);
/// (c_d^(d+1) (d+1) H(f))^-1.
Rat liouville_c7(const PadicAlgNum& xi);

}  // namespace gapkit
