#include "npzeta/intpoly.hpp"

#include <cctype>
#include <sstream>

#include "npzeta/modarith.hpp"

namespace npzeta {

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;
  int nvars;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool peek_digit() {
    skip_ws();
    return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
  }
  Int read_int() {
    skip_ws();
    size_t start = i;
    std::string digits;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
    if (digits.empty()) throw ParseError("expected integer", start);
    return Int(digits);
  }
  long read_small_int(const char* what) {
    size_t start = i;
    Int v = read_int();
    if (v > 1000000) throw ParseError(std::string(what) + " too large", start);
    return v.convert_to<long>();
  }

  // var factor: xK or xK^E
  void read_factor(Exponents& e) {
    skip_ws();
    size_t start = i;
    if (i >= s.size() || s[i] != 'x') throw ParseError("expected variable factor", i);
    ++i;
    long k = read_small_int("variable index");
    if (k < 1) throw ParseError("variable index must be >= 1", start);
    if (k > nvars) throw ParseError("variable index out of range", start);
    long exp = 1;
    skip_ws();
    if (i < s.size() && s[i] == '^') {
      ++i;
      size_t epos = i;
      exp = read_small_int("exponent");
      if (exp < 1) throw ParseError("exponent must be >= 1", epos);
    }
    e[static_cast<size_t>(k - 1)] += static_cast<int>(exp);
  }

  // term: [int][*]var-factors | int
  void read_term(IntPoly& out, bool negate) {
    skip_ws();
    Int coeff(1);
    bool have_coeff = false;
    if (peek_digit()) {
      coeff = read_int();
      have_coeff = true;
      skip_ws();
      if (i < s.size() && s[i] == '*') {
        ++i;
        skip_ws();
      }
    }
    Exponents e(static_cast<size_t>(nvars), 0);
    bool have_factor = false;
    skip_ws();
    while (i < s.size() && s[i] == 'x') {
      read_factor(e);
      have_factor = true;
      skip_ws();
      if (i < s.size() && s[i] == '*') {
        ++i;
        skip_ws();
        if (i >= s.size() || s[i] != 'x') throw ParseError("expected variable factor after '*'", i);
      }
    }
    if (!have_coeff && !have_factor) throw ParseError("expected term", i);
    out.add_term(e, negate ? -coeff : coeff);
  }

  IntPoly run() {
    IntPoly out(nvars);
    skip_ws();
    bool negate = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      negate = s[i] == '-';
      ++i;
    }
    read_term(out, negate);
    skip_ws();
    while (i < s.size()) {
      if (s[i] == '+' || s[i] == '-') {
        negate = s[i] == '-';
        ++i;
        read_term(out, negate);
        skip_ws();
      } else {
        throw ParseError("unexpected character", i);
      }
    }
    return out;
  }
};

}  // namespace

IntPoly IntPoly::parse(const std::string& text, int nvars) {
  Parser p{text, 0, nvars};
  return p.run();
}

void IntPoly::add_term(const Exponents& e, const Int& c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("IntPoly: exponent vector length mismatch");
  for (int v : e)
    if (v < 0) throw std::invalid_argument("IntPoly: negative exponent");
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Int IntPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

std::vector<Exponents> IntPoly::support() const {
  std::vector<Exponents> out;
  out.reserve(terms_.size());
  for (auto& [e, c] : terms_) out.push_back(e);
  return out;
}

int IntPoly::total_degree() const {
  int d = 0;
  for (auto& [e, c] : terms_) {
    int s = 0;
    for (int v : e) s += v;
    d = std::max(d, s);
  }
  return d;
}

Int IntPoly::eval(const std::vector<Int>& x) const {
  if (static_cast<int>(x.size()) != nvars_) throw std::invalid_argument("IntPoly::eval: arity mismatch");
  Int acc(0);
  for (auto& [e, c] : terms_) {
    Int t = c;
    for (int v = 0; v < nvars_; ++v)
      for (int k = 0; k < e[static_cast<size_t>(v)]; ++k) t *= x[static_cast<size_t>(v)];
    acc += t;
  }
  return acc;
}

uint64_t IntPoly::eval_mod(std::span<const uint64_t> x, uint64_t m) const {
  uint64_t acc = 0;
  for (auto& [e, c] : terms_) {
    Int cr = c % m;
    if (cr < 0) cr += m;
    uint64_t t = cr.convert_to<uint64_t>();
    for (int v = 0; v < nvars_; ++v) {
      int ev = e[static_cast<size_t>(v)];
      if (ev) t = mul_mod(t, pow_mod(x[static_cast<size_t>(v)] % m, static_cast<uint64_t>(ev), m), m);
    }
    acc += t;
    if (acc >= m) acc -= m;
  }
  return acc;
}

IntPoly IntPoly::derivative(int var) const {
  if (var < 0 || var >= nvars_) throw std::invalid_argument("IntPoly::derivative: bad variable");
  IntPoly out(nvars_);
  for (auto& [e, c] : terms_) {
    int ev = e[static_cast<size_t>(var)];
    if (ev == 0) continue;
    Exponents e2 = e;
    e2[static_cast<size_t>(var)] -= 1;
    out.add_term(e2, c * ev);
  }
  return out;
}

IntPoly IntPoly::scaled(const Int& c) const {
  IntPoly out(nvars_);
  for (auto& [e, k] : terms_) out.add_term(e, k * c);
  return out;
}

IntPoly IntPoly::shifted(const std::vector<Int>& y) const {
  if (static_cast<int>(y.size()) != nvars_) throw std::invalid_argument("IntPoly::shifted: arity mismatch");
  IntPoly out(nvars_);
  // binomial expansion of each term, variable by variable
  for (auto& [e, c] : terms_) {
    std::vector<std::pair<Exponents, Int>> parts{{Exponents(static_cast<size_t>(nvars_), 0), c}};
    for (int v = 0; v < nvars_; ++v) {
      int ev = e[static_cast<size_t>(v)];
      if (ev == 0) continue;
      std::vector<Int> binom(static_cast<size_t>(ev) + 1);
      binom[0] = 1;
      for (int k = 1; k <= ev; ++k) binom[static_cast<size_t>(k)] = binom[static_cast<size_t>(k - 1)] * (ev - k + 1) / k;
      std::vector<std::pair<Exponents, Int>> next;
      for (auto& [pe, pc] : parts) {
        for (int j = ev; j >= 0; --j) {
          // x^j * y^(ev-j) contribution
          Exponents ne = pe;
          ne[static_cast<size_t>(v)] += j;
          Int nc = pc * binom[static_cast<size_t>(j)];
          Int yfac(1);
          for (int k = 0; k < ev - j; ++k) yfac *= y[static_cast<size_t>(v)];
          next.emplace_back(std::move(ne), nc * yfac);
        }
      }
      parts = std::move(next);
    }
    for (auto& [pe, pc] : parts) out.add_term(pe, pc);
  }
  return out;
}

IntPoly IntPoly::reduced_mod(uint64_t p) const {
  IntPoly out(nvars_);
  for (auto& [e, c] : terms_) {
    Int r = c % p;
    if (r < 0) r += p;
    if (r != 0) out.add_term(e, r);
  }
  return out;
}

IntPoly IntPoly::disjoint_sum(const IntPoly& f, const IntPoly& g) {
  IntPoly out(f.nvars_ + g.nvars_);
  for (auto& [e, c] : f.terms_) {
    Exponents ne = e;
    ne.resize(static_cast<size_t>(out.nvars_), 0);
    out.add_term(ne, c);
  }
  for (auto& [e, c] : g.terms_) {
    Exponents ne(static_cast<size_t>(f.nvars_), 0);
    ne.insert(ne.end(), e.begin(), e.end());
    out.add_term(ne, c);
  }
  return out;
}

IntPoly IntPoly::disjoint_product(const IntPoly& f, const IntPoly& g) {
  IntPoly out(f.nvars_ + g.nvars_);
  for (auto& [ef, cf] : f.terms_)
    for (auto& [eg, cg] : g.terms_) {
      Exponents ne = ef;
      ne.insert(ne.end(), eg.begin(), eg.end());
      out.add_term(ne, cf * cg);
    }
  return out;
}

IntPoly IntPoly::identify_last_two_vars() const {
  if (nvars_ < 2) throw std::invalid_argument("identify_last_two_vars: need at least two variables");
  IntPoly out(nvars_ - 1);
  for (auto& [e, c] : terms_) {
    Exponents ne(e.begin(), e.end() - 1);
    ne.back() += e.back();
    out.add_term(ne, c);
  }
  return out;
}

std::string IntPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : terms_) {
    Int a = c < 0 ? Int(-c) : c;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    bool any_var = false;
    for (int v : e)
      if (v) any_var = true;
    if (!any_var || a != 1) os << a.str();
    bool printed = !any_var || a != 1;
    for (int v = 0; v < nvars_; ++v) {
      int ev = e[static_cast<size_t>(v)];
      if (!ev) continue;
      if (printed) os << "*";
      os << "x" << (v + 1);
      if (ev > 1) os << "^" << ev;
      printed = true;
    }
    first = false;
  }
  return os.str();
}

uint64_t evaluate_mod(const IntPoly& f, const std::vector<uint64_t>& x, uint64_t p, int m) {
  if (!is_prime_u64(p)) throw std::invalid_argument("evaluate_mod: modulus base is not prime");
  if (m < 1) throw std::invalid_argument("evaluate_mod: exponent must be >= 1");
  uint64_t modulus = ipow_checked(p, static_cast<unsigned>(m));
  for (uint64_t xi : x)
    if (xi >= modulus) throw std::invalid_argument("evaluate_mod: residue out of range");
  return f.eval_mod(std::span<const uint64_t>(x.data(), x.size()), modulus);
}

}  // namespace npzeta
