#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "npzeta/common.hpp"

namespace npzeta {

using Exponents = std::vector<int>;

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// Sparse multivariate polynomial over Z. Terms are kept in lexicographic
// order of the exponent vectors and never store a zero coefficient, so
// iteration order (and every derived output) is deterministic.
class IntPoly {
 public:
  explicit IntPoly(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw std::invalid_argument("IntPoly: nvars must be >= 1");
  }

  // Grammar: terms joined by +/-; a term is [int][*]var-factors or a bare
  // integer; a var factor is xK or xK^E with K >= 1, E >= 1. Whitespace is
  // ignored. Example: "x1^2*x2 - 3*x1 + 7".
  static IntPoly parse(const std::string& text, int nvars);

  int nvars() const { return nvars_; }
  const std::map<Exponents, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  void add_term(const Exponents& e, const Int& c);
  Int coeff(const Exponents& e) const;
  bool vanishes_at_origin() const { return terms_.count(Exponents(nvars_, 0)) == 0; }
  std::vector<Exponents> support() const;
  int total_degree() const;

  Int eval(const std::vector<Int>& x) const;
  // f(x) mod m with every intermediate reduced; m need not be validated here.
  uint64_t eval_mod(std::span<const uint64_t> x, uint64_t m) const;

  IntPoly derivative(int var) const;
  IntPoly scaled(const Int& c) const;
  IntPoly shifted(const std::vector<Int>& y) const;  // f(x + y)
  IntPoly reduced_mod(uint64_t p) const;             // coefficients in [0,p), zeros dropped

  // Combinators used by the sigma-property harnesses.
  static IntPoly disjoint_sum(const IntPoly& f, const IntPoly& g);      // f(x) + g(y)
  static IntPoly disjoint_product(const IntPoly& f, const IntPoly& g);  // f(x) * g(y)
  IntPoly identify_last_two_vars() const;  // f(x1,...,x_{n-1},x_{n-1})

  bool operator==(const IntPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  std::string str() const;

 private:
  int nvars_;
  std::map<Exponents, Int> terms_;
};

// The spec-level operation: validates that p is prime, m >= 1 and the
// residues lie in [0, p^m).
uint64_t evaluate_mod(const IntPoly& f, const std::vector<uint64_t>& x, uint64_t p, int m);

}  // namespace npzeta
