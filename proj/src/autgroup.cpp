#include "gapkit/autgroup.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "gapkit/gap_engine.hpp"

namespace gapkit {

std::string AutElement::str() const {
  return m.str() + " det " + det.get_str() + " sign " + (sign > 0 ? "+" : "-") + " order " + std::to_string(order);
}

IntMat2 aut_compose(const IntMat2& a, const IntMat2& b) { return (a * b).primitive(); }

int aut_order(const IntMat2& m, int limit) {
  IntMat2 p = m.primitive();
  IntMat2 acc = p;
  for (int k = 1; k <= limit; ++k) {
    if (acc == IntMat2::identity()) return k;
    acc = aut_compose(acc, p);
  }
  return 0;
}

std::optional<AutElement> aut_member(const BinForm& F, const IntMat2& m) {
  IntMat2 p = m.primitive();
  Int D = p.det();
  if (D == 0) return std::nullopt;
  int d = F.degree();
  BinForm FM = form_action(F, p);
  int i = 0;
  while (i <= d && F.coeff(i) == 0) ++i;
  if (i > d) throw HypothesisError("zero form");
  if (FM.coeff(i) % F.coeff(i) != 0) return std::nullopt;
  Int lambda = FM.coeff(i) / F.coeff(i);
  if (lambda == 0 || !(FM == F * lambda)) return std::nullopt;
  if (lambda * lambda != pow_int(abs_int(D), static_cast<unsigned long>(d))) return std::nullopt;
  AutElement e;
  e.m = p;
  e.det = D;
  e.sign = lambda > 0 ? 1 : -1;
  e.order = aut_order(p);
  return e;
}

bool EnhancedAut::contains(const IntMat2& m) const {
  IntMat2 p = m.primitive();
  return std::any_of(elements.begin(), elements.end(), [&](const AutElement& e) { return e.m == p; });
}

std::vector<AutElement> EnhancedAut::rational_subgroup() const {
  std::vector<AutElement> out;
  for (const auto& e : elements)
    if (is_square(abs_int(e.det))) out.push_back(e);
  return out;
}

std::string group_structure(const std::vector<AutElement>& elements) {
  bool reflection = std::any_of(elements.begin(), elements.end(), [](const AutElement& e) { return e.det < 0; });
  size_t n = elements.size();
  return reflection ? "D_" + std::to_string(n / 2) : "C_" + std::to_string(n);
}

std::string aut_rational_class(const EnhancedAut& aut) {
  std::string s = group_structure(aut.rational_subgroup());
  s.erase(std::remove(s.begin(), s.end(), '_'), s.end());
  return s;
}

namespace {

IntPoly root_poly(const BinForm& F) {
  int d = F.degree();
  if (d < 3) throw HypothesisError("Aut' needs a form of degree at least 3");
  IntPoly f = F.dehomogenize();
  if (f.degree() != d) throw HypothesisError("F is divisible by y, hence reducible");
  if (!is_irreducible(f)) throw HypothesisError("F is reducible over Q");
  return f;
}

int image_in(const RootSet& rs, const IntMat2& m, int i) {
  const ComplexBox& z = rs[static_cast<size_t>(i)].box;
  mpfr_prec_t prec = z.prec();
  auto c = [&](const Int& k) { return ComplexBox::real(Interval(k, prec)); };
  ComplexBox den = c(m.t) * z + c(m.v);
  if (den.contains_zero()) return -1;
  return rs.locate((c(m.s) * z + c(m.u)) / den);
}

}  // namespace

int mobius_image_index(const BinForm& F, const IntMat2& m, int i, unsigned bits) {
  IntPoly f = F.dehomogenize().primitive();
  for (; bits <= 8192; bits *= 2) {
    int j = image_in(isolate_roots(f, bits), m, i);
    if (j >= 0) return j;
  }
  return -1;
}

EnhancedAut aut_prime(const BinForm& F, unsigned bits) {
  IntPoly f = root_poly(F);
  int d = f.degree();
  AlgNum a1(f, 0);
  EnhancedAut out;
  out.form = F;
  std::set<IntMat2> seen;
  auto add = [&](const IntMat2& m) {
    for (const IntMat2& c : {m.primitive(), (-m).primitive()}) {
      if (seen.count(c)) continue;
      if (auto e = aut_member(F, c)) {
        seen.insert(c);
        out.elements.push_back(*e);
      }
    }
  };
  add(IntMat2::identity());
  // every element sends alpha_1 to some alpha_j by its Mobius action, and that map is unique
  for (int j = 1; j < d; ++j) {
    AlgNum aj = a1.conjugate(j);
    PowerRepResult rep = power_rep(a1, aj, std::max(bits, 4096u));
    if (std::holds_alternative<NotInField>(rep)) continue;
    auto rel = mobius_relation(f, std::get<PowerBasisRep>(rep).as_poly());
    if (rel) add(rel->matrix());
  }
  std::sort(out.elements.begin(), out.elements.end(),
            [](const AutElement& a, const AutElement& b) { return a.m < b.m; });
  out.structure = group_structure(out.elements);
  if (out.order() > 24) throw InvariantError("Aut' has more than 24 elements");
  return out;
}

GroupCheck check_group_axioms(const EnhancedAut& aut) {
  GroupCheck g;
  const BinForm& F = aut.form;
  int d = F.degree();
  const Int& cd = F.coeff(d);
  for (const auto& a : aut.elements) {
    if (a.m == IntMat2::identity()) g.has_identity = true;
    if (a.m == -IntMat2::identity()) g.has_minus_identity = true;
    static const std::set<int> allowed{1, 2, 3, 4, 6, 8, 12};
    if (!allowed.count(a.order)) {
      g.orders_ok = false;
      g.failures.push_back("order " + std::to_string(a.order) + " of " + a.m.str());
    }
    Int fst = F.eval(a.m.s, a.m.t);
    if (pow_int(abs_int(a.det), static_cast<unsigned long>(d)) * cd * cd != fst * fst) {
      g.determinant_law = false;
      g.failures.push_back("determinant law fails for " + a.m.str());
    }
    bool inv = false;
    for (const auto& b : aut.elements) {
      IntMat2 c = aut_compose(a.m, b.m);
      if (!aut.contains(c)) {
        g.closed = false;
        g.failures.push_back("product " + a.m.str() + " * " + b.m.str() + " missing");
      }
      if (c == IntMat2::identity()) inv = true;
    }
    if (!inv) {
      g.inverses = false;
      g.failures.push_back("no inverse for " + a.m.str());
    }
  }
  if (!g.has_identity) g.failures.push_back("identity missing");
  if (!g.has_minus_identity) g.failures.push_back("-identity missing");
  return g;
}

namespace {

OrbitPartition from_union_find(std::vector<int> parent) {
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  int n = static_cast<int>(parent.size());
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
  OrbitPartition out;
  out.gamma_i.assign(static_cast<size_t>(n), 0);
  for (auto& [root, block] : groups) {
    for (int i : block) out.gamma_i[static_cast<size_t>(i)] = static_cast<int>(block.size());
    out.gamma = std::max(out.gamma, static_cast<int>(block.size()));
    out.blocks.push_back(std::move(block));
  }
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

}  // namespace

OrbitPartition root_orbit_partition(const EnhancedAut& aut, unsigned bits) {
  IntPoly f = aut.form.dehomogenize().primitive();
  int d = f.degree();
  std::vector<int> parent(static_cast<size_t>(d));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  RootSet rs = isolate_roots(f, bits);
  for (const auto& e : aut.elements)
    for (int i = 0; i < d; ++i) {
      int j = image_in(rs, e.m, i);
      for (unsigned b = bits * 2; j < 0 && b <= 8192; b *= 2) {
        rs = isolate_roots(f, b);
        j = image_in(rs, e.m, i);
      }
      if (j < 0) throw PrecisionError("could not locate the image of root " + std::to_string(i));
      parent[static_cast<size_t>(find(i))] = find(j);
    }
  return from_union_find(std::move(parent));
}

OrbitPartition root_orbit_partition(const std::vector<AlgNum>& alphas) {
  int n = static_cast<int>(alphas.size());
  std::vector<int> parent(static_cast<size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (find(i) == find(j)) continue;
      const AlgNum& a = alphas[static_cast<size_t>(i)];
      const AlgNum& b = alphas[static_cast<size_t>(j)];
      if (a.degree() != b.degree()) continue;
      PowerRepResult rep = power_rep(a, b);
      if (std::holds_alternative<NotInField>(rep)) continue;
      if (mobius_relation(a.minpoly(), std::get<PowerBasisRep>(rep).as_poly()))
        parent[static_cast<size_t>(find(i))] = find(j);
    }
  return from_union_find(std::move(parent));
}

BinForm d12_family(const Int& a, const Int& b) {
  if (gcd_int(a, b) != 1) throw HypothesisError("d12_family needs gcd(a, b) = 1");
  if (mod_pos(a - 3 * b, Int(10)) != 0) throw HypothesisError("d12_family needs a = 3b mod 10");
  auto exact = [](const Int& num, long den) {
    if (num % den != 0) throw InvariantError("d12_family coefficient is not integral");
    return Int(num / den);
  };
  Int c2 = exact(231 * a + 2 * b, 5);
  Int c3 = -(176 * a + 2 * b);
  Int c4 = exact(495 * a + 5 * b, 2);
  Int c5 = 2 * b;
  Int c6 = -exact(1122 * a + 29 * b, 5);
  // symmetric in x and y
  std::vector<Int> c{a, -6 * a, c2, c3, c4, c5, c6, c5, c4, c3, c2, -6 * a, a};
  return BinForm(12, c);
}

namespace {

std::vector<IntMat2> mats(const std::vector<std::array<long, 4>>& rows) {
  std::vector<IntMat2> out;
  for (const auto& r : rows) out.push_back(IntMat2{r[0], r[1], r[2], r[3]});
  return out;
}

}  // namespace

// (s, u, t, v) for F(s x + u y, t x + v y)
std::vector<IntMat2> d12_unimodular_maps() {
  return mats({{1, 0, 0, 1},
               {0, 1, -1, 1},
               {-1, 1, -1, 0},
               {-1, 0, 0, -1},
               {0, -1, 1, -1},
               {1, -1, 1, 0},
               {0, 1, 1, 0},
               {-1, 1, 0, 1},
               {-1, 0, -1, 1},
               {0, -1, -1, 0},
               {1, -1, 0, -1},
               {1, 0, 1, -1}});
}

std::vector<IntMat2> d12_scaled_maps() {
  return mats({{1, 1, -1, 2},
               {-1, 2, -2, 1},
               {-2, 1, -1, -1},
               {-1, -1, 1, -2},
               {1, -2, 2, -1},
               {2, -1, 1, 1},
               {-1, 2, 1, 1},
               {-2, 1, -1, 2},
               {-1, -1, -2, 1},
               {1, -2, -1, -1},
               {2, -1, 1, -2},
               {1, 1, 2, -1}});
}

IdentityReport verify_729(const BinForm& F) {
  IdentityReport rep;
  for (const auto& m : d12_unimodular_maps()) {
    if (form_action(F, m) == F)
      ++rep.unimodular_ok;
    else
      rep.failures.push_back("F o " + m.str() + " != F");
  }
  for (const auto& m : d12_scaled_maps()) {
    if (form_action(F, m) == F * Int(729))
      ++rep.scaled_ok;
    else
      rep.failures.push_back("F o " + m.str() + " != 729 F");
  }
  return rep;
}

}  // namespace gapkit
