#include "npzeta/qpoly.hpp"

#include <sstream>

namespace npzeta {

QPoly QPoly::monomial(const Rational& c, int deg) {
  if (c == 0) return QPoly();
  std::vector<Rational> v(static_cast<size_t>(deg) + 1, Rational(0));
  v.back() = c;
  return QPoly(std::move(v));
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return QPoly(std::move(v));
}

QPoly QPoly::operator-(const QPoly& o) const {
  std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] -= o.coeffs_[i];
  return QPoly(std::move(v));
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  return QPoly(std::move(v));
}

QPoly QPoly::operator*(const Rational& c) const {
  if (c == 0) return QPoly();
  std::vector<Rational> v = coeffs_;
  for (auto& x : v) x *= c;
  return QPoly(std::move(v));
}

Rational QPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

QPoly QPoly::derivative() const {
  if (coeffs_.size() <= 1) return QPoly();
  std::vector<Rational> v(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return QPoly(std::move(v));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& d) const {
  if (d.is_zero()) throw std::invalid_argument("QPoly::divmod: division by zero polynomial");
  std::vector<Rational> rem = coeffs_;
  int dd = d.degree();
  Rational lead = d.coeffs_.back();
  if (static_cast<int>(rem.size()) - 1 < dd) return {QPoly(), *this};
  std::vector<Rational> q(rem.size() - static_cast<size_t>(dd), Rational(0));
  for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
    if (rem[static_cast<size_t>(i)] == 0) continue;
    Rational c = rem[static_cast<size_t>(i)] / lead;
    q[static_cast<size_t>(i - dd)] = c;
    for (int j = 0; j <= dd; ++j) rem[static_cast<size_t>(i - dd + j)] -= c * d.coeffs_[static_cast<size_t>(j)];
  }
  return {QPoly(std::move(q)), QPoly(std::move(rem))};
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
  auto monic = [](QPoly p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / p.coeffs_.back());
  };
  a = monic(std::move(a));
  b = monic(std::move(b));
  while (!b.is_zero()) {
    QPoly r = a.divmod(b).second;
    a = std::move(b);
    b = monic(std::move(r));
  }
  return a;
}

QPoly QPoly::scale_var(const Rational& c) const {
  std::vector<Rational> v = coeffs_;
  Rational f(1);
  for (size_t i = 0; i < v.size(); ++i) {
    v[i] *= f;
    f *= c;
  }
  return QPoly(std::move(v));
}

std::string QPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    Rational c = coeffs_[i];
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rational a = abs(c);
    if (i == 0 || a != 1) os << rat_str(a);
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

RationalFunction::RationalFunction(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("RationalFunction: zero denominator");
  if (num_.is_zero()) {
    den_ = QPoly::one();
    return;
  }
  QPoly g = QPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
  // lowest nonzero denominator coefficient made +1-signed, constant part positive
  Rational low(0);
  for (int i = 0; i <= den_.degree(); ++i) {
    if (den_.coeff(i) != 0) {
      low = den_.coeff(i);
      break;
    }
  }
  if (low < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}
RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw std::invalid_argument("RationalFunction: division by zero");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

bool RationalFunction::operator==(const RationalFunction& o) const {
  return (num_ * o.den_) == (o.num_ * den_);
}

Rational RationalFunction::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (d == 0) throw std::domain_error("RationalFunction::eval: pole at evaluation point");
  return num_.eval(x) / d;
}

RationalFunction RationalFunction::scale_var(const Rational& c) const {
  return RationalFunction(num_.scale_var(c), den_.scale_var(c));
}

std::string RationalFunction::str(const std::string& var) const {
  if (den_ == QPoly::one()) return num_.str(var);
  return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

std::vector<Rational> series_expand(const RationalFunction& R, int K) {
  if (K < 0) throw std::invalid_argument("series_expand: negative order");
  const QPoly& den = R.den();
  Rational d0 = den.coeff(0);
  if (d0 == 0) throw std::domain_error("series_expand: denominator constant term is zero");
  std::vector<Rational> c(static_cast<size_t>(K) + 1, Rational(0));
  for (int k = 0; k <= K; ++k) {
    Rational acc = R.num().coeff(k);
    for (int j = 1; j <= k && j <= den.degree(); ++j) acc -= den.coeff(j) * c[static_cast<size_t>(k - j)];
    c[static_cast<size_t>(k)] = acc / d0;
  }
  return c;
}

}  // namespace npzeta
