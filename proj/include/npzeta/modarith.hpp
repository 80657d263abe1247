#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace npzeta {

inline uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

inline uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m) {
  if (m == 1) return 0;
  uint64_t acc = 1;
  base %= m;
  while (exp) {
    if (exp & 1) acc = mul_mod(acc, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return acc;
}

uint64_t inv_mod(uint64_t a, uint64_t m);  // requires gcd(a,m)=1

bool is_prime_u64(uint64_t n);

// p^m with overflow check; throws std::overflow_error past 2^62.
uint64_t ipow_checked(uint64_t p, unsigned m);

std::vector<std::pair<uint64_t, int>> factorize_u64(uint64_t n);

// Generator of (Z/p^c)^x for odd prime p (any c >= 1), or of (Z/2)^x.
uint64_t primitive_root_mod_prime_power(uint64_t p, int c);

}  // namespace npzeta
