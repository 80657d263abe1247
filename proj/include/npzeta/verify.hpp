#pragma once

#include <json.hpp>

#include "npzeta/zeta.hpp"

namespace npzeta {

using njson = nlohmann::ordered_json;

// Structured outcome of an identity/bound/conjecture check. The pass flag is
// a pure function of the records and the stated tolerance.
struct VerificationReport {
  std::string check;
  njson params = njson::object();
  njson records = njson::array();
  njson fitted = njson::object();
  bool pass = false;
  double tolerance = 0.0;
  std::vector<std::string> notes;

  njson to_json() const;
  std::string records_csv() const;
};

VerificationReport nondegeneracy_check(const IntPoly& f, uint64_t p,
                                       uint64_t budget = default_budget());

// Compares the direct sum E_{m,p}(f) against the face decomposition
// (1-1/p)^n sum over faces of (A_tau + B_tau (p-1)^{-n} sum of phi(f_tau)).
VerificationReport ds_decomposition_check(const IntPoly& f, uint64_t p, int m,
                                          double tolerance = 1e-9,
                                          uint64_t budget = default_budget());

// Exponential sum via the decomposition identity; valid when f is
// non-degenerate at p and the box is full.
Complex decomposition_exp_sum(const IntPoly& f, const NewtonPolyhedron& np, uint64_t p, int m,
                              uint64_t budget = default_budget());

// Records C(p,m) = |E| p^{sigma m} m^{-(kappa-1)} over the grid and tests the
// large-prime maximum against the small-prime maximum times the slack.
VerificationReport bound_harness(const IntPoly& f, const std::vector<uint64_t>& primes,
                                 const std::vector<int>& m_range, const Rational& sigma, int kappa,
                                 const BoxSupport& phi = BoxSupport::full(), double slack = 1.5,
                                 uint64_t budget = default_budget(), int threads = 1);

VerificationReport ff_bound_check_thm214(const IntPoly& f, const std::vector<uint64_t>& primes,
                                         double slack = 1.5, uint64_t budget = default_budget());
VerificationReport ff_bound_check_lemma252(const IntPoly& f_tau, const std::vector<uint64_t>& primes,
                                           double slack = 1.5, uint64_t budget = default_budget());
VerificationReport ff_bound_check_weil(int d_max, const std::vector<uint64_t>& primes,
                                       double tolerance = 1e-9);
VerificationReport ff_bound_check_gauss(const std::vector<uint64_t>& primes,
                                        double tolerance = 1e-9);

// nu(a) >= sigma N(a) + sigma - sigma(f_tau) for all |a|_inf <= R, tau = F(a).
VerificationReport cluckers_scan(const IntPoly& f, long R);

// Randomized checks of the sigma calculus (sum, product, identification) and
// the critical-locus bound with a heuristically estimated dimension.
VerificationReport sigma_property_check(uint64_t seed, int cases,
                                        uint64_t budget = default_budget());

struct NumericalWitness {
  std::vector<int> indices;  // 1-based into entries
  long d;                    // d > 1, d | N_i for all chosen i
};
struct NumericalData {
  std::vector<std::pair<long, long>> entries;  // (N_i, nu_i)
  std::vector<NumericalWitness> witnesses;
  Rational exponent;  // sigma(f) or lct_Z(f), supplied by the caller
};
VerificationReport numerical_conjecture_check(const NumericalData& data);

// Leading-coefficient growth of the zeta function across primes.
VerificationReport dh_conjecture_trend(const IntPoly& f, const std::vector<uint64_t>& primes,
                                       double slack = 1.5, uint64_t budget = default_budget());

VerificationReport shifted_bound_harness(const IntPoly& f,
                                         const std::vector<std::vector<long long>>& points,
                                         const std::vector<uint64_t>& primes,
                                         const std::vector<int>& m_range,
                                         const std::vector<std::optional<Rational>>& exponents = {},
                                         double slack = 1.5, uint64_t budget = default_budget());

}  // namespace npzeta
