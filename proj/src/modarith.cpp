#include "npzeta/modarith.hpp"

namespace npzeta {

uint64_t inv_mod(uint64_t a, uint64_t m) {
  int64_t t = 0, newt = 1;
  int64_t r = static_cast<int64_t>(m), newr = static_cast<int64_t>(a % m);
  while (newr != 0) {
    int64_t q = r / newr;
    int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw std::invalid_argument("inv_mod: arguments not coprime");
  if (t < 0) t += static_cast<int64_t>(m);
  return static_cast<uint64_t>(t);
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
    if (n % d == 0) return n == d;
  }
  // deterministic Miller-Rabin for 64-bit inputs
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (a % n == 0) continue;
    uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

uint64_t ipow_checked(uint64_t p, unsigned m) {
  uint64_t acc = 1;
  const uint64_t limit = 1ull << 62;
  for (unsigned i = 0; i < m; ++i) {
    if (acc > limit / p) throw std::overflow_error("ipow_checked: modulus exceeds 2^62");
    acc *= p;
  }
  return acc;
}

std::vector<std::pair<uint64_t, int>> factorize_u64(uint64_t n) {
  std::vector<std::pair<uint64_t, int>> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) n /= d, ++e;
      out.emplace_back(d, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

uint64_t primitive_root_mod_prime_power(uint64_t p, int c) {
  if (p == 2) {
    if (c == 1) return 1;
    throw std::invalid_argument("primitive root: (Z/2^c)^x is not cyclic for c >= 2 in this sense");
  }
  auto factors = factorize_u64(p - 1);
  uint64_t g = 0;
  for (uint64_t cand = 2; cand < p; ++cand) {
    bool ok = true;
    for (auto& [q, e] : factors) {
      if (pow_mod(cand, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      g = cand;
      break;
    }
  }
  if (g == 0) throw std::logic_error("primitive root not found");
  if (c == 1) return g;
  // g generates mod p; g or g+p generates mod p^c for every c >= 2
  uint64_t p2 = p * p;
  if (pow_mod(g, p - 1, p2) == 1) g += p;
  return g;
}

}  // namespace npzeta
