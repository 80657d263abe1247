#pragma once

#include "npzeta/verify.hpp"

namespace npzeta {

// Built-in definable equivalence-relation families on residues mod p^n:
//   congruence:   x ~ y  iff  x = y mod p^n
//   solutions(f): solution residues are their own classes, all non-solutions
//                 are merged into a single extra class
//   image(f):     x ~ y  iff  f(x) = f(y) mod p^n
struct EqRelFamily {
  enum class Kind { Congruence, Solutions, Image } kind;
  int nvars;
  IntPoly poly;  // unused for Congruence

  static EqRelFamily congruence(int nvars) {
    return EqRelFamily{Kind::Congruence, nvars, IntPoly(nvars)};
  }
  static EqRelFamily solutions(IntPoly f) {
    int n = f.nvars();
    return EqRelFamily{Kind::Solutions, n, std::move(f)};
  }
  static EqRelFamily image(IntPoly f) {
    int n = f.nvars();
    return EqRelFamily{Kind::Image, n, std::move(f)};
  }
  std::string str() const;
};

struct ClassCounts {
  uint64_t p;
  std::vector<Int> values;  // a_1 .. a_M
};

// a_n = number of equivalence classes mod p^n, computed with a disjoint-set
// structure over the enumerated residues. The predicate is audited on sampled
// triples for reflexivity, symmetry and transitivity.
ClassCounts class_counts(const EqRelFamily& family, uint64_t p, int M,
                         uint64_t budget = default_budget(), uint64_t audit_seed = 1);

// Fits each Poincare series sum a_n T^n (with a_0 = 1) against candidate
// denominator factors from the associated polynomial's fan rays plus
// {(0,1),(nvars,1)}; passes when every prime fits with the same factor set.
VerificationReport uniform_rationality_report(const EqRelFamily& family,
                                              const std::vector<uint64_t>& primes, int M,
                                              uint64_t budget = default_budget());

}  // namespace npzeta
