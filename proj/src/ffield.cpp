#include "npzeta/ffield.hpp"

#include <cmath>

#include "npzeta/modarith.hpp"

namespace npzeta {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void require_prime(uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("expected a prime");
}

uint64_t checked_torus_size(int n, uint64_t p, uint64_t budget) {
  uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= (p - 1);
    check_budget(total, budget);
  }
  return total;
}

// Iterate x over (F_p^x)^n in lexicographic order.
template <typename Fn>
void for_each_torus_point(int n, uint64_t p, Fn&& fn) {
  std::vector<uint64_t> x(static_cast<size_t>(n), 1);
  for (;;) {
    fn(x);
    int i = n - 1;
    while (i >= 0) {
      if (++x[static_cast<size_t>(i)] < p) break;
      x[static_cast<size_t>(i)] = 1;
      --i;
    }
    if (i < 0) break;
  }
}

template <typename Fn>
void for_each_affine_point(int n, uint64_t p, Fn&& fn) {
  std::vector<uint64_t> x(static_cast<size_t>(n), 0);
  for (;;) {
    fn(x);
    int i = n - 1;
    while (i >= 0) {
      if (++x[static_cast<size_t>(i)] < p) break;
      x[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
  }
}

}  // namespace

uint64_t torus_zero_count(const IntPoly& f, uint64_t p, uint64_t budget) {
  require_prime(p);
  checked_torus_size(f.nvars(), p, budget);
  IntPoly fr = f.reduced_mod(p);
  if (fr.is_zero()) {
    // identically zero on the torus
    uint64_t total = 1;
    for (int i = 0; i < f.nvars(); ++i) total *= (p - 1);
    return total;
  }
  uint64_t count = 0;
  for_each_torus_point(f.nvars(), p, [&](const std::vector<uint64_t>& x) {
    if (fr.eval_mod(std::span<const uint64_t>(x.data(), x.size()), p) == 0) ++count;
  });
  return count;
}

Complex torus_char_sum(const IntPoly& f, uint64_t p, uint64_t budget) {
  require_prime(p);
  checked_torus_size(f.nvars(), p, budget);
  IntPoly fr = f.reduced_mod(p);
  std::vector<Complex> roots(p);
  for (uint64_t k = 0; k < p; ++k)
    roots[k] = Complex(std::cos(kTwoPi * static_cast<double>(k) / static_cast<double>(p)),
                       std::sin(kTwoPi * static_cast<double>(k) / static_cast<double>(p)));
  Complex acc(0.0, 0.0);
  for_each_torus_point(f.nvars(), p, [&](const std::vector<uint64_t>& x) {
    acc += roots[fr.eval_mod(std::span<const uint64_t>(x.data(), x.size()), p)];
  });
  return acc;
}

std::set<uint64_t> critical_values_mod_p(const IntPoly& f, uint64_t p, uint64_t budget) {
  require_prime(p);
  uint64_t total = 1;
  for (int i = 0; i < f.nvars(); ++i) {
    total *= p;
    check_budget(total, budget);
  }
  std::vector<IntPoly> grads;
  for (int v = 0; v < f.nvars(); ++v) grads.push_back(f.derivative(v).reduced_mod(p));
  IntPoly fr = f.reduced_mod(p);
  std::set<uint64_t> values;
  for_each_affine_point(f.nvars(), p, [&](const std::vector<uint64_t>& x) {
    std::span<const uint64_t> xs(x.data(), x.size());
    for (auto& g : grads)
      if (g.eval_mod(xs, p) != 0) return;
    values.insert(fr.eval_mod(xs, p));
  });
  return values;
}

uint64_t critical_point_count_mod_p(const IntPoly& f, uint64_t p, uint64_t budget) {
  require_prime(p);
  uint64_t total = 1;
  for (int i = 0; i < f.nvars(); ++i) {
    total *= p;
    check_budget(total, budget);
  }
  std::vector<IntPoly> grads;
  for (int v = 0; v < f.nvars(); ++v) grads.push_back(f.derivative(v).reduced_mod(p));
  uint64_t count = 0;
  for_each_affine_point(f.nvars(), p, [&](const std::vector<uint64_t>& x) {
    std::span<const uint64_t> xs(x.data(), x.size());
    for (auto& g : grads)
      if (g.eval_mod(xs, p) != 0) return;
    ++count;
  });
  return count;
}

Complex power_char_sum(uint64_t d, uint64_t xi, uint64_t p) {
  require_prime(p);
  Complex acc(0.0, 0.0);
  for (uint64_t u = 0; u < p; ++u) {
    uint64_t v = mul_mod(pow_mod(u, d, p), xi % p, p);
    double theta = kTwoPi * static_cast<double>(v) / static_cast<double>(p);
    acc += Complex(std::cos(theta), std::sin(theta));
  }
  return acc;
}

NondegeneracyScan nondegeneracy_scan(const IntPoly& f, const NewtonPolyhedron& np, uint64_t p,
                                     uint64_t budget) {
  require_prime(p);
  NondegeneracyScan scan;
  IntPoly fr = f.reduced_mod(p);
  scan.newton_preserved = false;
  if (!fr.is_zero() && fr.vanishes_at_origin()) {
    NewtonPolyhedron npr = NewtonPolyhedron::build(fr);
    auto facet_key = [](const NewtonPolyhedron& q) {
      std::vector<std::pair<std::vector<long>, long>> k;
      for (auto& fc : q.facets()) k.emplace_back(fc.normal, fc.offset);
      return k;
    };
    scan.newton_preserved = facet_key(npr) == facet_key(np);
  }

  const int n = f.nvars();
  checked_torus_size(n, p, budget / std::max<size_t>(np.faces().size(), 1));
  scan.overall = scan.newton_preserved;
  for (auto& tau : np.faces()) {
    IntPoly ftau = face_polynomial(f, np, tau);
    std::vector<IntPoly> grads;
    for (int v = 0; v < n; ++v) grads.push_back(ftau.derivative(v).reduced_mod(p));
    uint64_t bad = 0;
    for_each_torus_point(n, p, [&](const std::vector<uint64_t>& x) {
      std::span<const uint64_t> xs(x.data(), x.size());
      for (auto& g : grads)
        if (g.eval_mod(xs, p) != 0) return;
      ++bad;
    });
    scan.verdicts.push_back(FaceVerdict{tau.id, bad == 0, bad});
    if (bad != 0) scan.overall = false;
  }
  return scan;
}

bool is_nondegenerate_at(const IntPoly& f, uint64_t p, uint64_t budget) {
  NewtonPolyhedron np = NewtonPolyhedron::build(f);
  return nondegeneracy_scan(f, np, p, budget).overall;
}

}  // namespace npzeta
