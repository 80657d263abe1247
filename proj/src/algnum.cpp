#include "npzeta/algnum.hpp"

#include <cmath>
#include <sstream>

namespace npzeta {

namespace {

// inverse of a mod (x^d - p) via extended Euclid over Q[x]
QPoly field_inverse(const QPoly& a, uint64_t p, int d) {
  std::vector<Rational> mpoly(static_cast<size_t>(d) + 1, Rational(0));
  mpoly[0] = Rational(-static_cast<long>(p));
  mpoly[static_cast<size_t>(d)] = Rational(1);
  QPoly r0{std::move(mpoly)}, r1 = a;
  QPoly s0, s1 = QPoly::one();
  while (!r1.is_zero()) {
    auto [q, r2] = r0.divmod(r1);
    QPoly s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0) throw std::logic_error("AlgReal: modulus not coprime (should be irreducible)");
  return s0 * (Rational(1) / r0.coeff(0));
}

}  // namespace

AlgReal AlgReal::gamma_power(uint64_t p, int d, long e) {
  AlgReal out(p, d, Rational(0));
  long q = e >= 0 ? e / d : -((-e + d - 1) / d);
  long r = e - q * d;  // 0 <= r < d
  out.c_[static_cast<size_t>(r)] = rat_pow(Rational(static_cast<long>(p)), q);
  return out;
}

bool AlgReal::is_zero() const {
  for (auto& v : c_)
    if (v != 0) return false;
  return true;
}

bool AlgReal::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational AlgReal::rational_value() const {
  if (!is_rational()) throw std::domain_error("AlgReal: value is not rational");
  return c_[0];
}

double AlgReal::approx() const {
  double g = p_ > 0 ? std::pow(static_cast<double>(p_), 1.0 / d_) : 0.0;
  double acc = 0.0, gp = 1.0;
  for (auto& v : c_) {
    acc += to_double(v) * gp;
    gp *= g;
  }
  return acc;
}

void AlgReal::check_compat(const AlgReal& o) const {
  if (p_ == 0 || o.p_ == 0) return;  // default-constructed zero adopts the other context
  if (p_ != o.p_ || d_ != o.d_) throw std::invalid_argument("AlgReal: mixed root contexts");
}

AlgReal AlgReal::operator+(const AlgReal& o) const {
  check_compat(o);
  AlgReal out = p_ ? *this : o;
  const AlgReal& other = p_ ? o : *this;
  for (size_t i = 0; i < other.c_.size() && i < out.c_.size(); ++i) out.c_[i] += other.c_[i];
  return out;
}

AlgReal AlgReal::operator-(const AlgReal& o) const { return *this + (-o); }

AlgReal AlgReal::operator-() const {
  AlgReal out = *this;
  for (auto& v : out.c_) v = -v;
  return out;
}

AlgReal AlgReal::operator*(const AlgReal& o) const {
  check_compat(o);
  if (p_ == 0) return o.p_ == 0 ? *this : AlgReal(o.p_, o.d_, Rational(0));
  if (o.p_ == 0) return AlgReal(p_, d_, Rational(0));
  std::vector<Rational> prod(static_cast<size_t>(2 * d_ - 1), Rational(0));
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j) prod[static_cast<size_t>(i + j)] += c_[static_cast<size_t>(i)] * o.c_[static_cast<size_t>(j)];
  AlgReal out(p_, d_, Rational(0));
  Rational pr(static_cast<long>(p_));
  for (int k = static_cast<int>(prod.size()) - 1; k >= 0; --k) {
    if (k < d_) {
      out.c_[static_cast<size_t>(k)] += prod[static_cast<size_t>(k)];
    } else {
      prod[static_cast<size_t>(k - d_)] += prod[static_cast<size_t>(k)] * pr;  // gamma^d = p
    }
  }
  return out;
}

AlgReal AlgReal::operator/(const AlgReal& o) const {
  check_compat(o);
  if (o.is_zero()) throw std::invalid_argument("AlgReal: division by zero");
  if (o.is_rational()) {
    AlgReal out = *this;
    for (auto& v : out.c_) v /= o.c_[0];
    return out;
  }
  QPoly inv = field_inverse(QPoly(o.c_), o.p_, o.d_);
  AlgReal oi(o.p_, o.d_, Rational(0));
  for (int i = 0; i <= inv.degree(); ++i) oi.c_[static_cast<size_t>(i)] = inv.coeff(i);
  return *this * oi;
}

bool AlgReal::operator==(const AlgReal& o) const { return (*this - o).is_zero(); }

std::string AlgReal::str() const {
  if (is_rational()) return rat_str(c_.empty() ? Rational(0) : c_[0]);
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << " + ";
    os << rat_str(c_[i]);
    if (i) os << "*" << p_ << "^(" << i << "/" << d_ << ")";
  }
  os << ")";
  return os.str();
}

}  // namespace npzeta
