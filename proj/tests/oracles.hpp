#pragma once

// Reference computations used to cross-check the library. Deliberately naive:
// rational Gaussian elimination, schoolbook expansion, floating-point roots.

#include <complex>
#include <random>
#include <set>
#include <vector>

#include "gapkit/poly.hpp"

namespace oracle {

using gapkit::Int;
using gapkit::Rat;

inline Rat det(std::vector<std::vector<Rat>> m) {
  size_t n = m.size();
  Rat d = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rat k = m[r][c] / m[c][c];
      for (size_t j = c; j < n; ++j) m[r][j] -= k * m[c][j];
    }
  }
  return d;
}

// coefficients low to high, exact degrees taken from the vectors
inline Int sylvester(const std::vector<Int>& p, const std::vector<Int>& q) {
  size_t m = p.size() - 1, n = q.size() - 1, N = m + n;
  if (N == 0) return 1;
  std::vector<std::vector<Rat>> s(N, std::vector<Rat>(N, Rat(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j <= m; ++j) s[i][i + j] = Rat(p[m - j]);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j <= n; ++j) s[n + i][i + j] = Rat(q[n - j]);
  Rat d = det(s);
  return d.get_num();
}

inline Int sylvester(const gapkit::IntPoly& p, const gapkit::IntPoly& q) {
  return sylvester(p.coeffs(), q.coeffs());
}

// discriminant of a form with nonzero leading coefficient, from its univariate part
inline Int form_discriminant(const gapkit::BinForm& F) {
  std::vector<Int> f = F.coeffs();
  int d = F.degree();
  std::vector<Int> df;
  for (int i = 1; i <= d; ++i) df.push_back(f[static_cast<size_t>(i)] * i);
  Int res = sylvester(f, df);
  Int sign = (d * (d - 1) / 2) % 2 == 0 ? 1 : -1;
  return sign * res / f.back();
}

inline std::vector<Int> mul(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> c(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// coefficients (by power of x) of F(s x + u y, t x + v y)
inline std::vector<Int> compose(const std::vector<Int>& c, const Int& s, const Int& u, const Int& t, const Int& v) {
  size_t d = c.size() - 1;
  std::vector<std::vector<Int>> lp(d + 1), mp(d + 1);
  lp[0] = mp[0] = {Int(1)};
  for (size_t k = 1; k <= d; ++k) {
    lp[k] = mul(lp[k - 1], {u, s});  // powers of (s x + u y), indexed by x power
    mp[k] = mul(mp[k - 1], {v, t});
  }
  std::vector<Int> out(d + 1, Int(0));
  for (size_t i = 0; i <= d; ++i) {
    if (c[i] == 0) continue;
    auto term = mul(lp[i], mp[d - i]);
    for (size_t k = 0; k <= d; ++k) out[k] += c[i] * term[k];
  }
  return out;
}

struct Mat {
  Int s, u, t, v;
  bool operator<(const Mat& o) const {
    if (s != o.s) return s < o.s;
    if (u != o.u) return u < o.u;
    if (t != o.t) return t < o.t;
    return v < o.v;
  }
  bool operator==(const Mat& o) const { return s == o.s && u == o.u && t == o.t && v == o.v; }
};

// every primitive (s u; t v) with entries in [-B, B] and F_M = +-|det|^(d/2) F
inline std::set<Mat> brute_aut(const gapkit::BinForm& F, long B) {
  std::set<Mat> out;
  const auto& c = F.coeffs();
  int d = F.degree();
  for (long s = -B; s <= B; ++s)
    for (long u = -B; u <= B; ++u)
      for (long t = -B; t <= B; ++t)
        for (long v = -B; v <= B; ++v) {
          long D = s * v - t * u;
          if (D == 0) continue;
          if (gapkit::gcd_int(gapkit::gcd_int(s, u), gapkit::gcd_int(t, v)) != 1) continue;
          Int Dd = gapkit::pow_int(Int(D < 0 ? -D : D), static_cast<unsigned long>(d));
          // cheap filter on the x^d and y^d coefficients: F(s,t) and F(u,v)
          Int a = F.eval(s, t), b = F.eval(u, v);
          if (a * a != Dd * c.back() * c.back() || b * b != Dd * c.front() * c.front()) continue;
          // F_M must be a single multiple lambda F with lambda^2 = |D|^d
          auto fm = compose(c, s, u, t, v);
          size_t k = 0;
          while (c[k] == 0) ++k;
          if (fm[k] % c[k] != 0) continue;
          Int lambda = fm[k] / c[k];
          if (lambda * lambda != Dd) continue;
          bool ok = true;
          for (size_t i = 0; i < fm.size() && ok; ++i) ok = fm[i] == lambda * c[i];
          if (ok) out.insert({s, u, t, v});
        }
  return out;
}

// x^r mod f over Q, low to high, length deg f
inline std::vector<Rat> power_mod(const std::vector<Int>& f, int r) {
  size_t d = f.size() - 1;
  std::vector<Rat> cur(d, Rat(0));
  if (d == 1) {
    cur[0] = gapkit::pow_rat(gapkit::make_rat(-f[0], f[1]), r);
    return cur;
  }
  cur[0] = 1;
  for (int k = 0; k < r; ++k) {
    Rat top = cur[d - 1];
    for (size_t i = d - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (size_t i = 0; i < d; ++i) cur[i] -= top * Rat(f[i]) / Rat(f[d]);
  }
  return cur;
}

using cld = std::complex<long double>;

// Durand-Kerner; f low to high with nonzero leading coefficient
inline std::vector<cld> roots(const std::vector<Int>& f) {
  size_t d = f.size() - 1;
  std::vector<cld> a(d + 1);
  for (size_t i = 0; i <= d; ++i) a[i] = static_cast<long double>(f[i].get_d() / f[d].get_d());
  auto eval = [&](cld z) {
    cld acc = 0;
    for (size_t i = d + 1; i-- > 0;) acc = acc * z + a[i];
    return acc;
  };
  std::vector<cld> z(d);
  for (size_t i = 0; i < d; ++i) z[i] = std::pow(cld(0.4L, 0.9L), static_cast<long double>(i));
  for (int it = 0; it < 2000; ++it) {
    long double moved = 0;
    for (size_t i = 0; i < d; ++i) {
      cld den = 1;
      for (size_t j = 0; j < d; ++j)
        if (j != i) den *= z[i] - z[j];
      cld step = eval(z[i]) / den;
      z[i] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-17L) break;
  }
  return z;
}

// v_p(y L - x) where L is alpha mod p^k; k is returned when p^k divides it
inline unsigned long padic_valuation(const Int& L, const Int& x, const Int& y, const Int& p, unsigned long k) {
  Int pk = gapkit::pow_int(p, k);
  Int w = gapkit::mod_pos(y * L - x, pk);
  if (w == 0) return k;
  unsigned long v = 0;
  while (w % p == 0) {
    w /= p;
    ++v;
  }
  return v;
}

struct Rng {
  std::mt19937_64 g;
  explicit Rng(uint64_t seed) : g(seed) {}
  long in(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }
  gapkit::IntPoly poly(int deg, long h, bool nonzero_lead = true) {
    std::vector<Int> c;
    for (int i = 0; i <= deg; ++i) c.push_back(in(-h, h));
    while (nonzero_lead && c.back() == 0) c.back() = in(-h, h);
    return gapkit::IntPoly(c);
  }
};

}  // namespace oracle
