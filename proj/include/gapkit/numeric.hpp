#pragma once

// Exact integers and rationals plus the handful of number-theoretic helpers
// every other module leans on.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gapkit {

using Int = mpz_class;
using Rat = mpq_class;

/// Thrown when a theorem or operation hypothesis is violated by the input.
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a certified decision could not be reached within the precision
/// budget. Callers may retry with a larger budget; nothing was guessed.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an internal invariant fails an exact check.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }
inline Rat abs_rat(const Rat& a) { return a < 0 ? Rat(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm_int(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat pow_rat(const Rat& base, long e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("pow_rat: zero to a negative power");
    return pow_rat(Rat(1) / base, -e);
  }
  Rat r(pow_int(base.get_num(), static_cast<unsigned long>(e)),
        pow_int(base.get_den(), static_cast<unsigned long>(e)));
  r.canonicalize();
  return r;
}

/// floor(sqrt(n)) for n >= 0.
inline Int isqrt(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt of negative");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline bool is_square(const Int& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int floor_rat(const Rat& r) { return floor_div(r.get_num(), r.get_den()); }
inline Int ceil_rat(const Rat& r) { return -floor_div(-r.get_num(), r.get_den()); }

/// Nonnegative residue of a modulo m (m > 0).
inline Int mod_pos(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

/// p-adic valuation of a nonzero integer.
inline unsigned long valuation(const Int& a, const Int& p) {
  if (a == 0) throw std::domain_error("valuation of zero");
  Int t = a;
  return mpz_remove(t.get_mpz_t(), t.get_mpz_t(), p.get_mpz_t());
}

inline bool is_probable_prime(const Int& p) {
  return p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 30) > 0;
}

/// Inverse of a modulo m; throws if not invertible.
inline Int inv_mod(const Int& a, const Int& m) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::domain_error("inv_mod: not invertible");
  return r;
}

inline std::string to_string(const Int& a) { return a.get_str(); }
inline std::string to_string(const Rat& a) { return a.get_str(); }

}  // namespace gapkit
