#include "gapkit/parse.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace gapkit {

namespace {

// sparse bivariate polynomial over Q: (deg in main variable, deg in y) -> coefficient
using Sparse = std::map<std::pair<int, int>, Rat>;

Sparse sp_add(Sparse a, const Sparse& b, int sign) {
  for (const auto& [k, v] : b) {
    a[k] += sign > 0 ? v : Rat(-v);
    if (a[k] == 0) a.erase(k);
  }
  return a;
}

Sparse sp_mul(const Sparse& a, const Sparse& b) {
  Sparse r;
  for (const auto& [ka, va] : a)
    for (const auto& [kb, vb] : b) {
      auto k = std::make_pair(ka.first + kb.first, ka.second + kb.second);
      r[k] += va * vb;
      if (r[k] == 0) r.erase(k);
    }
  return r;
}

Sparse sp_const(const Rat& c) {
  Sparse s;
  if (c != 0) s[{0, 0}] = c;
  return s;
}

class Parser {
 public:
  Parser(std::string text, char mainVar) : s_(std::move(text)), main_(mainVar) {}

  Sparse parse() {
    Sparse r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw HypothesisError("polynomial parse error at position " + std::to_string(pos_) + ": " + what +
                          " in \"" + s_ + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  Sparse expr() {
    Sparse r;
    bool first = true;
    for (;;) {
      skip();
      int sign = 1;
      if (peek('+') || peek('-')) {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      r = sp_add(r, term(), sign);
      first = false;
    }
    return r;
  }

  Sparse term() {
    Sparse r = power();
    for (;;) {
      skip();
      if (peek('*')) {
        ++pos_;
        r = sp_mul(r, power());
      } else if (peek('/')) {
        ++pos_;
        Sparse d = power();
        if (d.size() != 1 || d.begin()->first != std::make_pair(0, 0)) fail("division by a non-constant");
        r = sp_mul(r, sp_const(Rat(1) / d.begin()->second));
      } else if (pos_ < s_.size() &&
                 (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(')) {
        r = sp_mul(r, power());  // implicit product, e.g. 3x
      } else {
        break;
      }
    }
    return r;
  }

  Sparse power() {
    Sparse base = primary();
    if (peek('^')) {
      ++pos_;
      skip();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      int e = std::stoi(s_.substr(start, pos_ - start));
      Sparse r = sp_const(1);
      for (int i = 0; i < e; ++i) r = sp_mul(r, base);
      return r;
    }
    return base;
  }

  Sparse primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Sparse r = expr();
      if (!peek(')')) fail("expected )");
      ++pos_;
      return r;
    }
    if (c == '-') {
      ++pos_;
      return sp_mul(sp_const(-1), power());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return sp_const(Rat(Int(s_.substr(start, pos_ - start))));
    }
    if (c == main_ || c == 'y') {
      ++pos_;
      Sparse s;
      s[c == 'y' ? std::make_pair(0, 1) : std::make_pair(1, 0)] = 1;
      return s;
    }
    fail(std::string("unknown symbol '") + c + "'");
  }

  std::string s_;
  char main_;
  size_t pos_ = 0;
};

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\n");
  return s.substr(a, b - a + 1);
}

bool is_list(const std::string& t) { return !t.empty() && t.front() == '['; }

std::vector<Int> parse_list(const std::string& t) {
  if (t.back() != ']') throw HypothesisError("coefficient list must end with ]");
  std::vector<Int> out;
  std::stringstream ss(t.substr(1, t.size() - 2));
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    try {
      out.emplace_back(item);
    } catch (const std::exception&) {
      throw HypothesisError("bad coefficient '" + item + "'");
    }
  }
  return out;
}

char detect_var(const std::string& t) {
  for (char c : t)
    if (c == 'a') return 'a';
  return 'x';
}

}  // namespace

RatPoly parse_rat_poly(const std::string& text, char var) {
  std::string t = trim(text);
  if (is_list(t)) {
    std::vector<Int> hi = parse_list(t);
    IntPoly p = IntPoly::from_high(hi);
    return RatPoly(p);
  }
  Sparse s = Parser(t, var ? var : detect_var(t)).parse();
  int deg = 0;
  for (const auto& [k, v] : s) {
    if (k.second != 0) throw HypothesisError("unexpected variable y in univariate input");
    deg = std::max(deg, k.first);
  }
  std::vector<Rat> c(static_cast<size_t>(deg) + 1, Rat(0));
  for (const auto& [k, v] : s) c[static_cast<size_t>(k.first)] = v;
  return RatPoly(std::move(c));
}

IntPoly parse_poly(const std::string& text) {
  std::string t = trim(text);
  if (is_list(t)) return IntPoly::from_high(parse_list(t));
  RatPoly r = parse_rat_poly(t, detect_var(t));
  if (r.common_denominator() != 1) throw HypothesisError("polynomial must have integer coefficients");
  return r.numerator_poly();
}

BinForm parse_form(const std::string& text) {
  std::string t = trim(text);
  if (is_list(t)) {
    std::vector<Int> hi = parse_list(t);
    int d = static_cast<int>(hi.size()) - 1;
    std::reverse(hi.begin(), hi.end());
    return BinForm(d, hi);
  }
  Sparse s = Parser(t, 'x').parse();
  int total = -1;
  bool hasY = false;
  for (const auto& [k, v] : s) {
    if (v.get_den() != 1) throw HypothesisError("form must have integer coefficients");
    if (k.second > 0) hasY = true;
    int tot = k.first + k.second;
    if (hasY && total >= 0 && tot != total && k.second > 0)
      throw HypothesisError("form is not homogeneous");
    total = std::max(total, tot);
  }
  if (s.empty()) throw HypothesisError("zero form");
  std::vector<Int> c(static_cast<size_t>(total) + 1, Int(0));
  for (const auto& [k, v] : s) {
    if (hasY && k.first + k.second != total) throw HypothesisError("form is not homogeneous");
    c[static_cast<size_t>(k.first)] = v.get_num();
  }
  return BinForm(total, c);
}

AlgSpec parse_alg_spec(const std::string& text) {
  AlgSpec spec;
  std::string t = trim(text);
  size_t at = t.rfind('@');
  std::string polyText = at == std::string::npos ? t : t.substr(0, at);
  spec.poly = parse_poly(polyText);
  if (at == std::string::npos) return spec;
  std::string sel = trim(t.substr(at + 1));
  auto strip = [&](const std::string& prefix) {
    if (sel.rfind(prefix, 0) == 0) {
      sel = trim(sel.substr(prefix.size()));
      return true;
    }
    return false;
  };
  if (strip("index")) {
    spec.index = std::stoi(sel);
  } else if (strip("residue")) {
    spec.residue = Int(sel);
  } else {
    if (!(strip("root\xe2\x89\x88") || strip("root~") || strip("root=") || strip("root")))
      throw HypothesisError("unknown root selector '" + sel + "'");
    // "re", "re+imi", "re-imi"
    size_t split = std::string::npos;
    for (size_t i = 1; i < sel.size(); ++i)
      if ((sel[i] == '+' || sel[i] == '-') && sel[i - 1] != 'e' && sel[i - 1] != 'E') split = i;
    if (!sel.empty() && sel.back() == 'i') {
      if (split == std::string::npos) {
        spec.approx_re = 0.0;
        spec.approx_im = std::stod(sel.substr(0, sel.size() - 1));
      } else {
        spec.approx_re = std::stod(sel.substr(0, split));
        std::string im = sel.substr(split, sel.size() - 1 - split);
        spec.approx_im = (im == "+" || im == "-") ? (im == "+" ? 1.0 : -1.0) : std::stod(im);
      }
    } else {
      spec.approx_re = std::stod(sel);
    }
  }
  return spec;
}

}  // namespace gapkit
