#include "gapkit/thue.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace gapkit {

std::string to_string(Side s) { return s == Side::Alpha ? "alpha" : "inverse"; }

std::pair<Int, Int> normalize_sign(const Int& x, const Int& y) {
  if (x < 0 || (x == 0 && y < 0)) return {-x, -y};
  return {x, y};
}

namespace {

IntPoly checked_root_poly(const BinForm& F) {
  int d = F.degree();
  if (d < 3) throw HypothesisError("Thue inequalities need degree at least 3");
  IntPoly f = F.dehomogenize();
  if (f.degree() != d || !is_irreducible(f)) throw HypothesisError("F must be irreducible over Q");
  return f;
}

IntPoly reversed(const IntPoly& f) {
  std::vector<Int> c = f.coeffs();
  std::reverse(c.begin(), c.end());
  return IntPoly(c);
}

void check_mu_range(int d, const Rat& mu) {
  if (!(mu > Rat(d + 2, 2) && mu < Rat(d))) throw HypothesisError("mu must satisfy d/2 + 1 < mu < d");
}

}  // namespace

std::vector<Solution> enumerate_primitive(const ThueProblem& pr, unsigned long budget) {
  if (pr.m < 1) throw HypothesisError("m must be at least 1");
  if (pr.B < 1) throw HypothesisError("box bound must be at least 1");
  const BinForm& F = pr.F;
  IntPoly f = checked_root_poly(F);
  int d = F.degree();
  RootSet rs = isolate_roots(f.primitive(), 128);
  const Int& cd = F.coeff(d);
  // |F(x, y)| <= m forces |x - alpha_k y| <= (m / |c_d|)^(1/d) for some k
  Rat R = Interval(make_rat(pr.m, abs_int(cd)), 128).pow(Rat(1, d)).upper();
  std::vector<Solution> out;
  auto consider = [&](const Int& x, const Int& y) {
    if (gcd_int(x, y) != 1) return;
    Int v = F.eval(x, y);
    if (v == 0 || abs_int(v) > pr.m) return;
    auto [a, b] = normalize_sign(x, y);
    out.push_back({a, b, F.eval(a, b)});
  };
  consider(Int(1), Int(0));
  unsigned long tried = 0;
  for (Int y = 1; y <= pr.B; ++y) {
    std::vector<std::pair<Int, Int>> ranges;
    for (size_t k = 0; k < rs.size(); ++k) {
      const ComplexBox& z = rs[k].box;
      if (!rs[k].real && Rat(z.im.abs().lower()) * y > R) continue;
      Int lo = std::max(Int(-pr.B), floor_rat(z.re.lower() * y - R));
      Int hi = std::min(Int(pr.B), ceil_rat(z.re.upper() * y + R));
      if (lo <= hi) ranges.emplace_back(lo, hi);
    }
    std::sort(ranges.begin(), ranges.end());
    Int next = -pr.B - 1;
    for (const auto& [lo, hi] : ranges) {
      for (Int x = std::max(lo, next); x <= hi; ++x) {
        if (++tried > budget) throw HypothesisError("enumeration budget exceeded");
        consider(x, y);
      }
      next = std::max(next, Int(hi + 1));
    }
  }
  std::sort(out.begin(), out.end(), [](const Solution& a, const Solution& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return std::make_pair(a.x, a.y) < std::make_pair(b.x, b.y);
  });
  return out;
}

Bound lewis_mahler_c10(const BinForm& F, unsigned bits) {
  int d = F.degree();
  if (F.coeff(0) == 0 || F.coeff(d) == 0) throw HypothesisError("Lewis-Mahler needs c_0 c_d != 0");
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits) + 32;
  Int D = discriminant(F);
  if (D == 0) throw HypothesisError("F has zero discriminant");
  Interval M = mahler_measure(F, bits).with_prec(prec);
  Interval v = Interval(pow_int(2, static_cast<unsigned long>(d - 1)), prec) *
               pow_half(Interval(Int(d), prec), static_cast<unsigned long>(d - 1)) *
               M.pow(static_cast<unsigned long>(d - 2)) / Interval(abs_int(D), prec).sqrt();
  return Bound::upper(v, "2^(d-1) d^((d-1)/2) M(F)^(d-2) / |D(F)|^(1/2)");
}

RootAssignment assign_root(const BinForm& F, const Int& x, const Int& y, unsigned bits) {
  if (x == 0 && y == 0) throw HypothesisError("(0, 0) has no root assignment");
  IntPoly f = F.dehomogenize().primitive();
  RootAssignment best;
  for (; bits <= 4096; bits *= 2) {
    RootSet rs = isolate_roots(f, bits);
    mpfr_prec_t prec = rs[0].box.prec();
    struct Cand {
      int k;
      Side side;
      Interval dist;
    };
    std::vector<Cand> cands;
    for (size_t k = 0; k < rs.size(); ++k) {
      const ComplexBox& z = rs[k].box;
      if (y != 0)
        cands.push_back({static_cast<int>(k), Side::Alpha,
                         (z - ComplexBox::real(Interval(make_rat(x, y), prec))).abs()});
      if (x != 0) {
        ComplexBox one = ComplexBox::real(Interval(1L, prec));
        cands.push_back({static_cast<int>(k), Side::Inverse,
                         (one / z - ComplexBox::real(Interval(make_rat(y, x), prec))).abs()});
      }
    }
    size_t bi = 0;
    for (size_t i = 1; i < cands.size(); ++i)
      if (cands[i].dist.hi() < cands[bi].dist.hi()) bi = i;
    bool unique = true;
    for (size_t i = 0; i < cands.size(); ++i)
      if (i != bi && !cands[bi].dist.certainly_lt(cands[i].dist)) unique = false;
    best = {cands[bi].k, cands[bi].side, cands[bi].dist, unique};
    if (unique) break;
  }
  return best;
}

Certainty lewis_mahler_holds(const BinForm& F, const Solution& s, const Bound& c10, unsigned bits) {
  RootAssignment a = assign_root(F, s.x, s.y, bits);
  mpfr_prec_t prec = a.distance.prec();
  Interval rhs = Interval::point(c10.enc.lo()).with_prec(prec) * Interval(abs_int(s.value), prec) /
                 Interval(s.height(), prec).pow(static_cast<unsigned long>(F.degree()));
  if (a.distance.hi() <= rhs.lo()) return Certainty::Yes;
  if (a.distance.lo() > rhs.hi()) return Certainty::No;
  return Certainty::Unknown;
}

C16Family c16_family(const IntPoly& fin, const Rat& mu, const Rat& c0) {
  IntPoly f = fin.primitive();
  int d = f.degree();
  AlgNum base(f, 0);
  RootSet rs = base.conjugates(128);
  C16Family fam;
  mpfr_prec_t prec = 160;
  Interval cut(0L, prec);
  std::vector<ComplexBox> boxes;
  for (size_t k = 0; k < rs.size(); ++k) {
    if (rs[k].real) {
      fam.roots.emplace_back(f, static_cast<int>(k));
      boxes.push_back(rs[k].box);
      continue;
    }
    // |alpha - x/y| >= |Im alpha| > C0 / H^mu once H > (C0 / |Im alpha|)^(1/mu)
    Interval im = Interval::point(rs[k].box.im.abs().lo()).with_prec(prec);
    cut = Interval::max(cut, (Interval(c0, prec) / im).pow(1 / mu));
  }
  fam.complex_cut = Bound::upper(cut, "height beyond which non-real roots have no approximations");
  fam.c11 = boxes.size() >= 2 ? c11(boxes, mu, c0) : Bound::of(Rat(0), "fewer than two real roots");
  C16Inputs in;
  in.d = d;
  in.mu = mu;
  in.c0 = c0;
  in.c11 = fam.c11;
  for (size_t i = 0; i < fam.roots.size(); ++i)
    for (size_t j = 0; j < fam.roots.size(); ++j) {
      if (i == j) continue;
      GapConstants k = archimedean_constants(fam.roots[i], fam.roots[j], mu, c0);
      in.c_small.push_back(k.c_small);
      in.c_big.push_back(k.c_big);
    }
  in.A = thue_siegel_params(d, mahler_measure(f).log()).A;
  Bound v = c16(in, &fam.parts);
  fam.parts["complex cut"] = fam.complex_cut;
  fam.value = v.value() >= fam.complex_cut.value() ? v : fam.complex_cut;
  return fam;
}

C5Result c5(const BinForm& F, const Int& m, const Rat& mu, bool with_c16) {
  IntPoly f = checked_root_poly(F);
  int d = F.degree();
  check_mu_range(d, mu);
  if (m < 1) throw HypothesisError("m must be at least 1");
  C5Result r;
  r.c10 = lewis_mahler_c10(F);
  mpfr_prec_t prec = 160;
  Interval lm = (r.c10.point().with_prec(prec) * Interval(m, prec)).pow(1 / (Rat(d) - mu));
  // nudged so that C5^(d - mu) > C10 m holds strictly
  lm = lm * Interval(1 + Rat(1, Int(1) << 40), prec);
  r.lewis_mahler = Bound::upper(lm, "(C10 m)^(1/(d - mu))");
  r.value = r.lewis_mahler;
  r.galois = is_galois(AlgNum(f, 0));
  if (with_c16 && r.galois) {
    r.alpha_family = c16_family(f, mu, Rat(1));
    r.inverse_family = c16_family(reversed(f), mu, Rat(1));
    r.value = max_upper(max_upper(r.value, r.alpha_family->value), r.inverse_family->value);
  }
  return r;
}

Census census(const ThueProblem& problem, const Rat& mu, bool with_c16) {
  Census c;
  c.problem = problem;
  c.mu = mu;
  const BinForm& F = problem.F;
  int d = F.degree();
  std::vector<Solution> sols = enumerate_primitive(problem);
  c.aut = aut_prime(F);
  c.root_orbits = root_orbit_partition(c.aut);
  c.c5 = c5(F, problem.m, mu, with_c16);
  c.applicable = c.c5.galois;
  if (!c.applicable) c.notes.push_back("F(x, 1) does not generate a Galois extension; the bound does not apply");
  if (!with_c16) c.notes.push_back("C5 holds only the Lewis-Mahler branch");
  c.count = count_bound(Int(d), mu, Int(static_cast<long>(c.aut.order())));
  c.bound = c.count.bound;
  c.gyory = 25L * d;

  std::map<std::pair<Int, Int>, size_t> where;
  for (const auto& s : sols) {
    CensusEntry e;
    e.sol = s;
    e.root = assign_root(F, s.x, s.y);
    e.large = !(Interval(s.height(), 160).lo() < c.c5.value.value());
    if (e.large) ++c.large_count;
    where[{s.x, s.y}] = c.entries.size();
    c.entries.push_back(std::move(e));
  }
  c.bound_ok = Int(static_cast<long>(c.large_count)) <= c.bound;

  size_t n = c.entries.size();
  std::vector<size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<size_t(size_t)> find = [&](size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  c.orbit_closed = true;
  for (size_t i = 0; i < n; ++i) {
    const Solution& s = c.entries[i].sol;
    for (const auto& el : c.aut.elements) {
      const IntMat2& M = el.m;
      Int X = M.s * s.x + M.u * s.y, Y = M.t * s.x + M.v * s.y;
      Int FX = F.eval(X, Y);
      if (FX * FX != pow_int(abs_int(el.det), static_cast<unsigned long>(d)) * s.value * s.value) {
        c.orbit_closed = false;
        c.notes.push_back("scaling law fails for " + M.str() + " at (" + s.x.get_str() + ", " + s.y.get_str() + ")");
      }
      if (abs_int(el.det) != 1) continue;
      auto key = normalize_sign(X, Y);
      auto it = where.find(key);
      if (it != where.end()) {
        size_t a = find(i), b = find(it->second);
        if (a != b) parent[a] = b;
      } else if (std::max(abs_int(X), abs_int(Y)) <= problem.B) {
        c.orbit_closed = false;
        c.notes.push_back("image " + key.first.get_str() + ", " + key.second.get_str() + " missing from the census");
      }
    }
  }
  std::map<size_t, std::vector<size_t>> groups;
  for (size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
  for (auto& [root, block] : groups) {
    for (size_t i : block) c.entries[i].orbit = static_cast<int>(c.solution_orbits.size());
    c.solution_orbits.push_back(std::move(block));
  }
  return c;
}

std::vector<ApproxPair> convergents(const AlgNum& alpha, size_t count) {
  for (unsigned bits = 256; bits <= (1u << 16); bits *= 2) {
    Interval x = alpha.real_value(bits);
    Int p0 = 0, p1 = 1, q0 = 1, q1 = 0;
    std::vector<ApproxPair> out;
    bool ok = true;
    while (out.size() < count) {
      Int a = floor_rat(x.lower());
      if (floor_rat(x.upper()) != a) {
        ok = false;
        break;
      }
      Int p = a * p1 + p0, q = a * q1 + q0;
      out.push_back({p, q});
      p0 = p1;
      p1 = p;
      q0 = q1;
      q1 = q;
      Interval frac = x - Interval(a, x.prec());
      if (!frac.positive()) {
        ok = false;
        break;
      }
      x = Interval(1L, x.prec()) / frac;
    }
    if (!ok) continue;
    Interval a = alpha.real_value(bits);
    for (const auto& c : out) {
      Interval err = (a - Interval(make_rat(c.x, c.y), a.prec())).abs() * Interval(Int(c.y * c.y), a.prec());
      if (!err.certainly_lt(Interval(1L, a.prec()))) throw InvariantError("convergent quality check failed");
    }
    return out;
  }
  throw PrecisionError("continued fraction needs more precision");
}

std::vector<ApproxPair> padic_approximations(const PadicAlgNum& xi, const std::vector<unsigned long>& ks) {
  std::vector<ApproxPair> out;
  for (unsigned long k : ks) {
    Int pk = pow_int(xi.prime(), k);
    LllResult red = lll_reduce({{pk, Int(0)}, {xi.lift(k), Int(1)}});
    const IntVec& v = red.basis[0];
    if (v[1] == 0) continue;
    out.push_back(reduced_pair(v[0], v[1]));
  }
  return out;
}

}  // namespace gapkit
