#pragma once

#include <optional>
#include <vector>

#include "npzeta/common.hpp"

namespace npzeta {

// Dense univariate polynomial over Q. Coefficient i belongs to t^i; no
// trailing zero coefficients are stored.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(const Rational& c) {
    if (c != 0) coeffs_.push_back(c);
  }
  explicit QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static QPoly monomial(const Rational& c, int deg);
  static QPoly one() { return QPoly(Rational(1)); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<size_t>(i)];
  }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly operator*(const Rational& c) const;
  QPoly operator-() const { return *this * Rational(-1); }
  bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }

  Rational eval(const Rational& x) const;
  QPoly derivative() const;

  // Euclidean division: *this = q*d + r with deg r < deg d.
  std::pair<QPoly, QPoly> divmod(const QPoly& d) const;

  static QPoly gcd(QPoly a, QPoly b);  // monic

  // t -> c * t
  QPoly scale_var(const Rational& c) const;

  std::string str(const std::string& var = "t") const;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Rational> coeffs_;
};

// Quotient of two QPoly, kept normalized: gcd(num,den) = 1 and the lowest
// nonzero coefficient of the denominator is positive.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(QPoly::one()) {}
  explicit RationalFunction(const Rational& c) : num_(QPoly(c)), den_(QPoly::one()) {}
  RationalFunction(QPoly num, QPoly den);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  bool operator==(const RationalFunction& o) const;

  Rational eval(const Rational& x) const;  // throws if denominator vanishes
  RationalFunction scale_var(const Rational& c) const;

  std::string str(const std::string& var = "t") const;

 private:
  QPoly num_, den_;
};

// First K+1 Taylor coefficients of R around 0; requires den(0) != 0.
std::vector<Rational> series_expand(const RationalFunction& R, int K);

}  // namespace npzeta
