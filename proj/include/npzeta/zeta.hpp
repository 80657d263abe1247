#pragma once

#include <optional>

#include "npzeta/algnum.hpp"
#include "npzeta/fan.hpp"
#include "npzeta/padic.hpp"

namespace npzeta {

struct FaceZetaPart {
  int face_id;
  RationalFunction L;
  RationalFunction S;
  uint64_t torus_zeros;
};

// Explicit Igusa zeta function of a polynomial that is non-degenerate at p,
// assembled face by face: Z = L_Delta + sum over proper faces of L_tau S_tau,
// with the twist factor (p^{s+1}-p)/(p^{s+1}-1) rewritten as p(1-t)/(p-t).
struct DHZeta {
  uint64_t p = 0;
  int nvars = 0;
  RationalFunction Z;
  RationalFunction L_delta;
  uint64_t torus_zeros_delta = 0;
  std::vector<FaceZetaPart> parts;
  std::vector<std::pair<long, long>> denom_pairs;  // distinct (nu, N) across the fan
};

DHZeta dh_zeta(const IntPoly& f, uint64_t p, uint64_t budget = default_budget());

// Exact value that may live in Q(p^(1/d)); rational whenever possible.
struct AlgValue {
  bool rational = true;
  Rational rat;
  AlgReal alg;
  double approx = 0.0;
  static AlgValue of(const AlgReal& v);
  static AlgValue zero() { return AlgValue{}; }
};

struct PoleEntry {
  Rational s0;
  int order;
  AlgValue leading;  // lim (p^{s-s0}-1)^order Z(s)
};

struct PoleReport {
  std::vector<PoleEntry> poles;  // real poles, largest first
  std::optional<Rational> largest_real;
  std::optional<Rational> largest_nontrivial;  // excluding s = -1
  Rational sigma;
  int expected_order = 0;  // kappa + delta_{sigma,1}
  int actual_order = 0;    // multiplicity of the pole at s = -sigma
  AlgValue leading_at_sigma;  // with the expected normalization; 0 when actual < expected
  bool order_matches = false;
};

PoleReport zeta_poles_and_leading(const DHZeta& Z, const Rational& sigma, int kappa);

// P(T) with P(p^{-n} t) = (1 - t Z(t))/(1 - t).
RationalFunction poincare_from_zeta(const DHZeta& Z, int n);

// Exponential sum E_Phi(u p^{-m}) assembled from the zeta side: trivial
// character terms from the exact rational function, twisted terms from
// truncated coefficient tallies and Gauss sums. Full box only.
Complex exp_sum_from_zeta(const IntPoly& f, uint64_t p, uint64_t u, int m,
                          uint64_t budget = default_budget());

struct FitResult {
  RationalFunction rf;                            // in the series variable
  std::vector<std::pair<long, long>> factors;     // chosen (a, b): (1 - p^a T^b)
  QPoly numerator;
};

// Smallest subset of candidate denominator factors (1 - p^a T^b) together
// with a numerator reproducing every given coefficient; the last three
// coefficients are never used for the numerator and act as validation.
std::optional<FitResult> fit_rational(const std::vector<Rational>& series,
                                      std::vector<std::pair<long, long>> candidates, uint64_t p);

struct AsymptoticFit {
  std::vector<Complex> coefficients;
  double residual = 0.0;
  int dominant = -1;  // index into candidates; -1 for the zero fit
  bool ill_conditioned = false;
};

// Least squares for E_m ~ sum of a_{lambda,beta} lambda^m m^beta.
AsymptoticFit asymptotic_fit(const std::vector<std::pair<int, Complex>>& values,
                             const std::vector<std::pair<double, int>>& candidates);

}  // namespace npzeta
