#pragma once

#include <map>
#include <memory>

#include "npzeta/intpoly.hpp"

namespace npzeta {

// Support of the indicator Phi: the full box O^n, a shifted box y + (pO)^n,
// or a finite union of residue classes mod p^r.
struct BoxSupport {
  enum class Kind { Full, Shifted, Union };
  Kind kind = Kind::Full;
  std::vector<long long> shift;                   // Shifted
  int level = 0;                                  // Union: classes are mod p^level
  std::vector<std::vector<uint64_t>> classes;     // Union

  static BoxSupport full() { return BoxSupport{}; }
  static BoxSupport shifted(std::vector<long long> y) {
    BoxSupport b;
    b.kind = Kind::Shifted;
    b.shift = std::move(y);
    return b;
  }
  static BoxSupport union_classes(int level, std::vector<std::vector<uint64_t>> classes) {
    BoxSupport b;
    b.kind = Kind::Union;
    b.level = level;
    b.classes = std::move(classes);
    return b;
  }
  std::string str() const;
};

// E = p^{-mn} * sum over x in Phi mod p^m of exp(2 pi i f(x)/p^m).
Complex exp_sum(const IntPoly& f, uint64_t p, int m, const BoxSupport& phi = BoxSupport::full(),
                uint64_t budget = default_budget(), int threads = 1);

// Same sum over (F_p[t]/t^m)^n with the standard additive character of
// F_p((t)): the phase is the t^{m-1} coefficient of f(x), divided by p.
Complex exp_sum_laurent(const IntPoly& f, uint64_t p, int m,
                        const BoxSupport& phi = BoxSupport::full(),
                        uint64_t budget = default_budget(), int threads = 1);

struct PoincareCoeffs {
  uint64_t p;
  std::vector<Int> values;  // N_0 .. N_M, N_0 = 1
};
PoincareCoeffs poincare_coeffs(const IntPoly& f, uint64_t p, int M,
                               uint64_t budget = default_budget());

// Multiplicative characters of (Z/p^c)^x for odd p (or p = 2, c = 1), indexed
// by the exponent along a fixed primitive root.
class CharGroup {
 public:
  CharGroup(uint64_t p, int c);
  uint64_t p() const { return p_; }
  int c() const { return c_; }
  uint64_t modulus() const { return modulus_; }
  uint64_t order() const { return phi_; }
  uint64_t generator() const { return g_; }
  uint64_t dlog(uint64_t unit) const;

 private:
  uint64_t p_;
  int c_;
  uint64_t modulus_;
  uint64_t phi_;
  uint64_t g_;
  std::vector<uint32_t> dlog_;
};

class Character {
 public:
  Character(std::shared_ptr<const CharGroup> grp, uint64_t index);
  uint64_t p() const { return grp_->p(); }
  int conductor() const { return conductor_; }
  uint64_t index() const { return index_; }
  uint64_t order() const;
  bool is_trivial() const { return index_ == 0; }
  // chi(v) for v mod p^{c'} with conductor <= c' <= c; chi(0) = 0 and
  // chi vanishes on non-units.
  Complex eval(uint64_t v) const;
  Character inverse() const;
  // index split as (j mod p-1, k mod p^{c-1})
  std::pair<uint64_t, uint64_t> index_pair() const;
  // g_chi = p^{1-c(chi)}/(p-1) * sum over units v mod p^{c(chi)} of
  // chi(v) exp(2 pi i v / p^{c(chi)}).
  Complex gauss_sum() const;
  const CharGroup& group() const { return *grp_; }

 private:
  std::shared_ptr<const CharGroup> grp_;
  uint64_t index_;
  int conductor_;
};

struct CharTableEntry {
  Character chi;
  bool trivial;
  Complex gauss;  // unset (0) for the trivial character
};
std::vector<CharTableEntry> character_table(uint64_t p, int c);

struct ZetaCoeffs {
  uint64_t p;
  uint64_t chi_index;
  int chi_conductor;
  std::vector<Complex> coeffs;          // c_0 .. c_K
  std::vector<Rational> exact;          // filled when chi is trivial
  bool exact_valid = false;
  std::vector<int> stability_level;     // modulus exponent used per coefficient
};

// c_k = p^{-Ln} sum over {x mod p^L in Phi : ord f(x) = k} of chi(ac f(x)),
// computed at the stability level L = k + c(chi).
ZetaCoeffs zeta_coeffs(const IntPoly& f, uint64_t p, const Character& chi, int K,
                       const BoxSupport& phi = BoxSupport::full(),
                       uint64_t budget = default_budget());

// One full-box pass at modulus p^level: shells[k] maps the angular component
// ac(f(x)) mod p^{level-k} to the number of x mod p^level with ord f(x) = k.
struct ShellTally {
  uint64_t p;
  int level;
  int nvars;
  std::vector<std::map<uint64_t, uint64_t>> shells;
  uint64_t deep_count;  // ord f >= level
};
ShellTally shell_tally(const IntPoly& f, uint64_t p, int level, const BoxSupport& phi,
                       uint64_t budget = default_budget());

struct JetCount {
  Int count;
  bool exact;           // count is a pure power of p
  Rational codim;       // exact codimension when exact
  double codim_approx;  // mn - log_p count
};
// Solutions of f = 0 in (F_p[t]/t^m)^n; origin mode forces the constant
// coefficients to zero.
JetCount jet_count(const IntPoly& f, uint64_t p, int m, bool origin_mode,
                   uint64_t budget = default_budget());

}  // namespace npzeta
