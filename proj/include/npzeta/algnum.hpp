#pragma once

#include "npzeta/qpoly.hpp"

namespace npzeta {

// Element of Q(gamma) with gamma = p^(1/d), represented by a polynomial in
// gamma of degree < d. x^d - p is Eisenstein at p, hence irreducible, so this
// is a field for every d >= 1.
class AlgReal {
 public:
  AlgReal() : p_(0), d_(1), c_(1, Rational(0)) {}
  AlgReal(uint64_t p, int d, const Rational& value) : p_(p), d_(d), c_(static_cast<size_t>(d), Rational(0)) {
    c_[0] = value;
  }
  static AlgReal gamma_power(uint64_t p, int d, long e);  // gamma^e, e of either sign

  uint64_t root_p() const { return p_; }
  int root_degree() const { return d_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // throws when not rational
  double approx() const;

  AlgReal operator+(const AlgReal& o) const;
  AlgReal operator-(const AlgReal& o) const;
  AlgReal operator*(const AlgReal& o) const;
  AlgReal operator/(const AlgReal& o) const;
  AlgReal operator-() const;
  bool operator==(const AlgReal& o) const;

  std::string str() const;

 private:
  void check_compat(const AlgReal& o) const;
  uint64_t p_;
  int d_;
  std::vector<Rational> c_;
};

}  // namespace npzeta
