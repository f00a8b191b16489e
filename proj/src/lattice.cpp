#include "gapkit/lattice.hpp"

#include <cmath>
#include <functional>

namespace gapkit {

namespace {

Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// nearest integer to a/b, b > 0
Int round_div(const Int& a, const Int& b) {
  Int twice = 2 * a + b;
  return floor_div(twice, 2 * b);
}

}  // namespace

Int max_norm(const IntVec& v) {
  Int m = 0;
  for (const auto& x : v)
    if (abs_int(x) > m) m = abs_int(x);
  return m;
}

Int norm2(const IntVec& v) { return dot(v, v); }

Rat LllResult::min_gs_norm2() const {
  Rat best;
  for (size_t i = 1; i < gram_dets.size(); ++i) {
    Rat v = make_rat(gram_dets[i], gram_dets[i - 1]);
    if (i == 1 || v < best) best = v;
  }
  return best;
}

LllResult lll_reduce(IntMatrix b) {
  size_t n = b.size();
  LllResult res;
  if (n == 0) {
    res.gram_dets = {Int(1)};
    return res;
  }
  // 1-based bookkeeping as in the classical integral formulation
  std::vector<Int> d(n + 1, Int(0));
  std::vector<std::vector<Int>> lam(n + 1, std::vector<Int>(n + 1, Int(0)));
  d[0] = 1;
  d[1] = dot(b[0], b[0]);
  if (d[1] == 0) throw InvariantError("LLL input has a zero row");
  auto B = [&](size_t i) -> IntVec& { return b[i - 1]; };

  auto red = [&](size_t k, size_t l) {
    if (abs_int(2 * lam[k][l]) > d[l]) {
      Int q = round_div(lam[k][l], d[l]);
      IntVec& bk = B(k);
      const IntVec& bl = B(l);
      for (size_t c = 0; c < bk.size(); ++c) bk[c] -= q * bl[c];
      lam[k][l] -= q * d[l];
      for (size_t i = 1; i < l; ++i) lam[k][i] -= q * lam[l][i];
    }
  };

  size_t kmax = 1;
  auto swap_k = [&](size_t k) {
    std::swap(B(k), B(k - 1));
    for (size_t j = 1; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
    Int l = lam[k][k - 1];
    Int nb = (d[k - 2] * d[k] + l * l) / d[k - 1];
    for (size_t i = k + 1; i <= kmax; ++i) {
      Int t = lam[i][k];
      lam[i][k] = (d[k] * lam[i][k - 1] - l * t) / d[k - 1];
      lam[i][k - 1] = (nb * t + l * lam[i][k]) / d[k];
    }
    d[k - 1] = nb;
  };

  size_t k = 2;
  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      for (size_t j = 1; j <= k; ++j) {
        Int u = dot(B(k), B(j));
        for (size_t i = 1; i < j; ++i) u = (d[i] * u - lam[k][i] * lam[j][i]) / d[i - 1];
        if (j < k)
          lam[k][j] = u;
        else
          d[k] = u;
      }
      if (d[k] == 0) throw InvariantError("LLL input rows are linearly dependent");
    }
    red(k, k - 1);
    // Lovasz: d_k d_{k-2} >= (delta d_{k-1}^2 - lambda^2), delta = 99/100
    Int lhs = 100 * d[k] * d[k - 2];
    Int rhs = 99 * d[k - 1] * d[k - 1] - 100 * lam[k][k - 1] * lam[k][k - 1];
    if (lhs < rhs) {
      swap_k(k);
      if (k > 2) --k;
    } else {
      for (size_t l = k - 1; l-- > 1;) red(k, l);
      ++k;
    }
  }
  res.basis = std::move(b);
  res.gram_dets.assign(d.begin(), d.begin() + static_cast<long>(n) + 1);
  return res;
}

size_t matrix_rank(const IntMatrix& a) {
  if (a.empty()) return 0;
  std::vector<std::vector<Rat>> m;
  for (const auto& row : a) {
    std::vector<Rat> r;
    for (const auto& x : row) r.emplace_back(x);
    m.push_back(std::move(r));
  }
  size_t rows = m.size(), cols = m[0].size(), rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (size_t i = rank + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[rank][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

IntMatrix integer_kernel(const IntMatrix& a, size_t ncols) {
  size_t rank = matrix_rank(a);
  size_t k = ncols - rank;
  if (k == 0) return {};
  Int amax = 1;
  for (const auto& row : a)
    for (const auto& x : row)
      if (abs_int(x) > amax) amax = abs_int(x);
  Int scale = amax * Int(static_cast<unsigned long>(ncols + 1)) * 1024;
  for (int attempt = 0; attempt < 12; ++attempt) {
    IntMatrix rows;
    for (size_t j = 0; j < ncols; ++j) {
      IntVec r(ncols + a.size(), Int(0));
      r[j] = 1;
      for (size_t i = 0; i < a.size(); ++i) r[ncols + i] = scale * a[i][j];
      rows.push_back(std::move(r));
    }
    LllResult red = lll_reduce(std::move(rows));
    bool ok = true;
    IntMatrix out;
    for (size_t i = 0; i < k && ok; ++i) {
      for (size_t c = ncols; c < red.basis[i].size(); ++c)
        if (red.basis[i][c] != 0) ok = false;
      out.emplace_back(red.basis[i].begin(), red.basis[i].begin() + static_cast<long>(ncols));
    }
    if (ok) return out;
    scale *= scale;
  }
  throw PrecisionError("integer kernel: scaling did not separate the kernel");
}

std::vector<IntVec> enumerate_max_norm(const IntMatrix& basis, const Int& bound, size_t max_count) {
  std::vector<IntVec> out;
  size_t k = basis.size();
  if (k == 0) return out;
  size_t n = basis[0].size();
  // floating Gram-Schmidt of the (reduced) basis; exactness restored by the final filter
  using LD = long double;
  std::vector<std::vector<LD>> bf(k, std::vector<LD>(n));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < n; ++j) bf[i][j] = static_cast<LD>(basis[i][j].get_d());
  std::vector<std::vector<LD>> mu(k, std::vector<LD>(k, 0));
  std::vector<std::vector<LD>> bs = bf;
  std::vector<LD> bn(k);
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < i; ++j) {
      LD num = 0;
      for (size_t c = 0; c < n; ++c) num += bf[i][c] * bs[j][c];
      mu[i][j] = num / bn[j];
      for (size_t c = 0; c < n; ++c) bs[i][c] -= mu[i][j] * bs[j][c];
    }
    bn[i] = 0;
    for (size_t c = 0; c < n; ++c) bn[i] += bs[i][c] * bs[i][c];
  }
  LD B = static_cast<LD>(bound.get_d());
  LD R2 = B * B * static_cast<LD>(n) * (1 + 1e-9L) + 1e-6L;
  std::vector<long> x(k, 0);
  std::vector<LD> partial(k + 1, 0);
  std::function<void(long)> rec = [&](long level) {
    size_t i = static_cast<size_t>(level);
    LD c = 0;
    for (size_t j = i + 1; j < k; ++j) c -= mu[j][i] * static_cast<LD>(x[j]);
    LD rem = R2 - partial[i + 1];
    if (rem < 0) return;
    LD w = std::sqrt(rem / bn[i]) + 1e-9L;
    long lo = static_cast<long>(std::ceil(c - w - 1e-9L));
    long hi = static_cast<long>(std::floor(c + w + 1e-9L));
    for (long xi = lo; xi <= hi; ++xi) {
      x[i] = xi;
      LD dlt = static_cast<LD>(xi) - c;
      partial[i] = partial[i + 1] + dlt * dlt * bn[i];
      if (i == 0) {
        // skip zero and keep one of each +-pair: first nonzero coefficient from the top positive
        bool zero = true, positive = false;
        for (size_t j = k; j-- > 0;)
          if (x[j] != 0) {
            zero = false;
            positive = x[j] > 0;
            break;
          }
        if (zero || !positive) continue;
        IntVec v(n, Int(0));
        for (size_t j = 0; j < k; ++j)
          if (x[j] != 0)
            for (size_t c2 = 0; c2 < n; ++c2) v[c2] += basis[j][c2] * x[j];
        if (max_norm(v) <= bound) {
          out.push_back(std::move(v));
          if (out.size() > max_count) throw PrecisionError("lattice enumeration exceeded its budget");
        }
      } else {
        rec(level - 1);
      }
    }
    x[i] = 0;
  };
  rec(static_cast<long>(k) - 1);
  return out;
}

}  // namespace gapkit
