#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace npzeta {

using Int = boost::multiprecision::cpp_int;
// Always canonical: lowest terms, positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::string rat_str(const Rational& r) {
  return r.str();
}

inline Int rat_num(const Rational& r) { return numerator(r); }
inline Int rat_den(const Rational& r) { return denominator(r); }

// q^e for integer e of either sign, as an exact rational.
inline Rational rat_pow(const Rational& q, long e) {
  if (e == 0) return Rational(1);
  Rational base = e > 0 ? q : Rational(1) / q;
  unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
  Rational acc(1);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

// Thrown when an enumeration would exceed the configured step budget.
struct BudgetError : std::runtime_error {
  uint64_t needed;
  uint64_t limit;
  BudgetError(uint64_t needed_, uint64_t limit_)
      : std::runtime_error("enumeration budget exceeded: need " + std::to_string(needed_) +
                           " steps, limit " + std::to_string(limit_)),
        needed(needed_),
        limit(limit_) {}
};

constexpr uint64_t kDefaultBudget = 100'000'000ull;

inline uint64_t default_budget() {
  static const uint64_t value = [] {
    if (const char* env = std::getenv("NPZETA_BUDGET")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) return static_cast<uint64_t>(v);
    }
    return kDefaultBudget;
  }();
  return value;
}

inline void check_budget(uint64_t steps, uint64_t budget) {
  if (steps > budget) throw BudgetError(steps, budget);
}

// Default absolute tolerance for comparing accumulated unit-modulus sums.
inline double sum_tolerance(uint64_t summands) {
  return 1e-9 * std::sqrt(static_cast<double>(summands ? summands : 1));
}

// Sums fn over [0,total) in a fixed number of chunks, each chunk in index
// order and the chunks reduced in index order, so the result is bit-identical
// for every thread count.
Complex chunked_complex_sum(uint64_t total, int threads,
                            const std::function<Complex(uint64_t, uint64_t)>& chunk_sum);

}  // namespace npzeta
