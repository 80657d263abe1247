#include "npzeta/fan.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace npzeta {

namespace {

// Solve G * lambda = x over Q, G given by columns; empty result when x is not
// in the column span.
std::optional<std::vector<Rational>> rational_solve(const std::vector<std::vector<long>>& cols,
                                                    const std::vector<Rational>& x) {
  size_t n = x.size(), k = cols.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(k + 1, Rational(0)));
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < k; ++c) m[r][c] = Rational(cols[c][r]);
    m[r][k] = x[r];
  }
  size_t rank = 0;
  std::vector<int> pivot_of_col(k, -1);
  for (size_t c = 0; c < k && rank < n; ++c) {
    size_t pivot = rank;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) continue;
    std::swap(m[rank], m[pivot]);
    Rational inv = Rational(1) / m[rank][c];
    for (size_t cc = 0; cc <= k; ++cc) m[rank][cc] *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == rank) continue;
      Rational f = m[r][c];
      if (f == 0) continue;
      for (size_t cc = 0; cc <= k; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    pivot_of_col[c] = static_cast<int>(rank);
    ++rank;
  }
  // consistency: rows past rank must have zero rhs
  for (size_t r = rank; r < n; ++r)
    if (m[r][k] != 0) return std::nullopt;
  std::vector<Rational> lambda(k, Rational(0));
  for (size_t c = 0; c < k; ++c)
    if (pivot_of_col[c] >= 0) lambda[c] = m[static_cast<size_t>(pivot_of_col[c])][k];
  // with independent columns each column has a pivot; verify
  for (size_t c = 0; c < k; ++c)
    if (pivot_of_col[c] < 0) return std::nullopt;
  return lambda;
}

// gcd of all k x k minors of the n x k generator matrix = index of the
// generated lattice inside (span cap Z^n).
Int lattice_index(const std::vector<std::vector<long>>& gens, int n) {
  int k = static_cast<int>(gens.size());
  Int g(0);
  std::vector<int> rows;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(rows.size()) == k) {
      // determinant of the k x k submatrix, fraction-free
      std::vector<std::vector<Int>> m(static_cast<size_t>(k), std::vector<Int>(static_cast<size_t>(k)));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = gens[static_cast<size_t>(j)][static_cast<size_t>(rows[static_cast<size_t>(i)])];
      // Bareiss
      Int prev(1);
      Int sign(1);
      for (int c = 0; c < k; ++c) {
        int pivot = -1;
        for (int r = c; r < k; ++r)
          if (m[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0) {
            pivot = r;
            break;
          }
        if (pivot < 0) return;  // singular, minor 0
        if (pivot != c) {
          std::swap(m[static_cast<size_t>(pivot)], m[static_cast<size_t>(c)]);
          sign = -sign;
        }
        for (int r = c + 1; r < k; ++r) {
          for (int cc = c + 1; cc < k; ++cc)
            m[static_cast<size_t>(r)][static_cast<size_t>(cc)] =
                (m[static_cast<size_t>(r)][static_cast<size_t>(cc)] * m[static_cast<size_t>(c)][static_cast<size_t>(c)] -
                 m[static_cast<size_t>(r)][static_cast<size_t>(c)] * m[static_cast<size_t>(c)][static_cast<size_t>(cc)]) /
                prev;
          m[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
        }
        prev = m[static_cast<size_t>(c)][static_cast<size_t>(c)];
      }
      Int det = sign * m[static_cast<size_t>(k - 1)][static_cast<size_t>(k - 1)];
      g = boost::multiprecision::gcd(g, abs(det));
      return;
    }
    for (int r = start; r < n; ++r) {
      rows.push_back(r);
      rec(r + 1);
      rows.pop_back();
    }
  };
  rec(0);
  return g;
}

struct FanContext {
  const NewtonPolyhedron& np;
  // rays of the closed normal cone of each face = normals of facets containing it
  std::vector<std::vector<long>> rays_of(const Face& tau) const {
    std::vector<std::vector<long>> out;
    for (auto& fc : np.facets()) {
      bool contains = true;
      for (int i : tau.touching)
        if (dotl_e(fc.normal, np.supp()[static_cast<size_t>(i)]) != fc.offset) {
          contains = false;
          break;
        }
      if (contains)
        for (int d : tau.free_dirs)
          if (fc.normal[static_cast<size_t>(d)] != 0) {
            contains = false;
            break;
          }
      if (contains) out.push_back(fc.normal);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  static long dotl_e(const std::vector<long>& a, const Exponents& s) {
    long acc = 0;
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * s[i];
    return acc;
  }

  // Pulling triangulation on the face lattice: split off the first ray
  // against the facets of the normal cone, which are the normal cones of the
  // faces covering tau.
  std::vector<std::vector<std::vector<long>>> triangulate(const Face& tau) const {
    auto rays = rays_of(tau);
    size_t k = static_cast<size_t>(np.nvars() - tau.dim);
    if (rays.size() < k) throw std::logic_error("triangulate: rank-deficient normal cone");
    if (rays.size() == k) return {rays};
    const std::vector<long>& v0 = rays.front();
    std::vector<std::vector<std::vector<long>>> out;
    for (auto& cover : np.faces()) {
      if (cover.is_improper || cover.dim != tau.dim + 1) continue;
      if (!np.face_contains_face(cover, tau)) continue;
      auto cover_rays = rays_of(cover);
      if (std::find(cover_rays.begin(), cover_rays.end(), v0) != cover_rays.end()) continue;
      for (auto simplex : triangulate(cover)) {
        simplex.push_back(v0);
        std::sort(simplex.begin(), simplex.end());
        out.push_back(std::move(simplex));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

std::vector<std::vector<long>> parallelepiped_points(const std::vector<std::vector<long>>& gens, int n) {
  // candidates in the integer box [0, sum of generators]
  std::vector<long> ub(static_cast<size_t>(n), 0);
  for (auto& g : gens)
    for (int c = 0; c < n; ++c) ub[static_cast<size_t>(c)] += g[static_cast<size_t>(c)];
  uint64_t cells = 1;
  for (int c = 0; c < n; ++c) {
    cells *= static_cast<uint64_t>(ub[static_cast<size_t>(c)] + 1);
    if (cells > 4'000'000ull) throw std::overflow_error("parallelepiped enumeration box too large");
  }
  std::vector<std::vector<long>> out;
  std::vector<long> x(static_cast<size_t>(n), 0);
  std::function<void(int)> rec = [&](int c) {
    if (c == n) {
      std::vector<Rational> xr(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) xr[static_cast<size_t>(i)] = Rational(x[static_cast<size_t>(i)]);
      auto lambda = rational_solve(gens, xr);
      if (!lambda) return;
      for (auto& l : *lambda)
        if (l <= 0 || l > 1) return;  // all-strict pattern: lambda in (0,1]
      out.push_back(x);
      return;
    }
    for (long v = 0; v <= ub[static_cast<size_t>(c)]; ++v) {
      x[static_cast<size_t>(c)] = v;
      rec(c + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  Int expect = lattice_index(gens, n);
  if (Int(out.size()) != expect) throw std::logic_error("parallelepiped point count does not match lattice index");
  return out;
}

}  // namespace

std::vector<HalfOpenCone> decompose_face_cone(const NewtonPolyhedron& np, const Face& tau) {
  if (tau.is_improper) throw std::invalid_argument("decompose_face_cone: improper face");
  const int n = np.nvars();
  FanContext ctx{np};
  auto simplices = ctx.triangulate(tau);
  auto all_rays = ctx.rays_of(tau);
  const size_t k = static_cast<size_t>(n - tau.dim);

  // generic reference point in the relative interior of the closed cone
  std::vector<Rational> w(static_cast<size_t>(n), Rational(0));
  const auto tau_key = std::make_pair(tau.touching, tau.free_dirs);
  for (long salt = 1;; ++salt) {
    Rational q(1, 997 + salt);
    for (int c = 0; c < n; ++c) w[static_cast<size_t>(c)] = Rational(0);
    for (size_t i = 0; i < all_rays.size(); ++i) {
      Rational coef = Rational(1) + Rational(static_cast<long>(i) + 1) * q;
      for (int c = 0; c < n; ++c) w[static_cast<size_t>(c)] += coef * Rational(all_rays[i][static_cast<size_t>(c)]);
    }
    bool generic = true;
    for (auto& simplex : simplices) {
      auto mu = rational_solve(simplex, w);
      if (!mu) throw std::logic_error("decompose_face_cone: reference point escapes span");
      for (auto& m : *mu)
        if (m == 0) {
          generic = false;
          break;
        }
      if (!generic) break;
    }
    if (generic) break;
    if (salt > 4096) throw std::logic_error("decompose_face_cone: no generic reference found");
  }

  std::vector<HalfOpenCone> out;
  for (auto& simplex : simplices) {
    auto mu = *rational_solve(simplex, w);
    // facets of the simplex pointing away from w are excluded (owned by the
    // neighbour across the wall); this makes the closed tiling exact
    std::vector<bool> must_be_positive(simplex.size(), false);
    for (size_t i = 0; i < simplex.size(); ++i)
      if (mu[i] < 0) must_be_positive[i] = true;
    // peel off the boundary of the closed normal cone by splitting on the
    // exact support pattern: a relatively open face stays iff a point in its
    // relative interior still has first meet locus tau
    const size_t kk = simplex.size();
    for (uint64_t mask = 1; mask < (1ull << kk); ++mask) {
      bool superset = true;
      for (size_t i = 0; i < kk; ++i)
        if (must_be_positive[i] && !(mask & (1ull << i))) {
          superset = false;
          break;
        }
      if (!superset) continue;
      std::vector<long> probe(static_cast<size_t>(n), 0);
      std::vector<std::vector<long>> gens;
      for (size_t i = 0; i < kk; ++i)
        if (mask & (1ull << i)) {
          gens.push_back(simplex[i]);
          for (int c = 0; c < n; ++c) probe[static_cast<size_t>(c)] += simplex[i][static_cast<size_t>(c)];
        }
      if (np.first_meet_key(probe) != tau_key) continue;
      HalfOpenCone cone;
      cone.generators = gens;
      cone.strict.assign(gens.size(), true);
      cone.parallelepiped = parallelepiped_points(gens, n);
      out.push_back(std::move(cone));
    }
  }
  (void)k;
  return out;
}

ConeGF face_gf(const NewtonPolyhedron& np, const Face& tau) {
  auto cones = decompose_face_cone(np, tau);

  auto nu_of = [](const std::vector<long>& v) {
    long acc = 0;
    for (long x : v) acc += x;
    return acc;
  };

  // per-cone fraction, then everything over the least common denominator
  struct Fraction {
    std::map<std::pair<long, long>, Int> num;      // (nu, N) -> coeff
    std::map<std::pair<long, long>, int> den;      // factor -> multiplicity
  };
  std::vector<Fraction> parts;
  std::map<std::pair<long, long>, int> lcm_den;
  for (auto& cone : cones) {
    Fraction f;
    for (auto& h : cone.parallelepiped) {
      auto key = std::make_pair(nu_of(h), np.offset_of(h));
      f.num[key] += 1;
    }
    for (auto& g : cone.generators) f.den[{nu_of(g), np.offset_of(g)}] += 1;
    for (auto& [fact, mult] : f.den) {
      auto it = lcm_den.find(fact);
      if (it == lcm_den.end() || it->second < mult) lcm_den[fact] = mult;
    }
    parts.push_back(std::move(f));
  }

  std::map<std::pair<long, long>, Int> num;
  for (auto& f : parts) {
    std::map<std::pair<long, long>, Int> acc = f.num;
    for (auto& [fac, mult] : lcm_den) {
      int have = 0;
      if (auto it = f.den.find(fac); it != f.den.end()) have = it->second;
      for (int rep = have; rep < mult; ++rep) {
        // multiply acc by (1 - u^nu t^N)
        std::map<std::pair<long, long>, Int> next = acc;
        for (auto& [key, c] : acc) {
          auto shifted = std::make_pair(key.first + fac.first, key.second + fac.second);
          next[shifted] -= c;
        }
        for (auto it = next.begin(); it != next.end();)
          it = it->second == 0 ? next.erase(it) : std::next(it);
        acc = std::move(next);
      }
    }
    for (auto& [key, c] : acc) num[key] += c;
  }

  ConeGF gf;
  for (auto& [key, c] : num)
    if (c != 0) gf.numerator.push_back(ConeGFTerm{key.first, key.second, c});
  for (auto& [fac, mult] : lcm_den)
    for (int i = 0; i < mult; ++i) gf.denominator.push_back(fac);
  std::sort(gf.denominator.begin(), gf.denominator.end());
  return gf;
}

RationalFunction evaluate_gf_t(const ConeGF& gf, uint64_t q) {
  if (q < 2) throw std::invalid_argument("evaluate_gf: q must be >= 2");
  Rational qi = Rational(1, static_cast<long>(q));
  long maxN = 0;
  for (auto& t : gf.numerator) maxN = std::max(maxN, t.N);
  std::vector<Rational> num(static_cast<size_t>(maxN) + 1, Rational(0));
  for (auto& t : gf.numerator) num[static_cast<size_t>(t.N)] += Rational(t.coeff) * rat_pow(qi, t.nu);
  QPoly num_poly{std::move(num)};
  QPoly den_poly = QPoly::one();
  for (auto& [nu, N] : gf.denominator) {
    if (nu < 1) throw std::logic_error("evaluate_gf: denominator factor with nu < 1");
    Rational c = rat_pow(qi, nu);
    if (N == 0) {
      den_poly = den_poly * (Rational(1) - c);
    } else {
      std::vector<Rational> fac(static_cast<size_t>(N) + 1, Rational(0));
      fac[0] = Rational(1);
      fac[static_cast<size_t>(N)] = -c;
      den_poly = den_poly * QPoly(std::move(fac));
    }
  }
  return RationalFunction(std::move(num_poly), std::move(den_poly));
}

Rational evaluate_gf_at1(const ConeGF& gf, uint64_t q) {
  if (q < 2) throw std::invalid_argument("evaluate_gf: q must be >= 2");
  Rational qi = Rational(1, static_cast<long>(q));
  Rational num(0);
  for (auto& t : gf.numerator) num += Rational(t.coeff) * rat_pow(qi, t.nu);
  Rational den(1);
  for (auto& [nu, N] : gf.denominator) den *= Rational(1) - rat_pow(qi, nu);
  return num / den;
}

std::pair<Rational, Rational> truncated_cone_sums(const NewtonPolyhedron& np, const Face& tau,
                                                  uint64_t q, int m) {
  if (m < 1) throw std::invalid_argument("truncated_cone_sums: m must be >= 1");
  ConeGF gf = face_gf(np, tau);
  RationalFunction R = evaluate_gf_t(gf, q);
  Rational total = evaluate_gf_at1(gf, q);
  auto series = series_expand(R, m - 1);
  Rational head(0);
  for (auto& c : series) head += c;
  return {total - head, series[static_cast<size_t>(m - 1)]};
}

std::vector<RayData> fan_rays(const NewtonPolyhedron& np) {
  std::vector<RayData> out;
  for (auto& fc : np.facets()) {
    long nu = 0;
    for (long v : fc.normal) nu += v;
    out.push_back(RayData{fc.normal, fc.offset, nu});
  }
  return out;
}

std::vector<Rational> candidate_poles(const std::vector<RayData>& rays) {
  std::set<Rational> acc;
  for (auto& r : rays)
    if (r.N > 0) acc.insert(Rational(-r.nu) / Rational(r.N));
  return std::vector<Rational>(acc.begin(), acc.end());
}

std::vector<std::vector<long>> cone_lattice_points_in_box(const HalfOpenCone& cone, long bound) {
  std::vector<std::vector<long>> out;
  size_t k = cone.generators.size();
  size_t n = cone.generators.empty() ? 0 : cone.generators[0].size();
  // generators are componentwise >= 0 and nonzero, so the search is bounded
  std::function<void(size_t, std::vector<long>)> rec = [&](size_t i, std::vector<long> x) {
    for (size_t c = 0; c < n; ++c)
      if (x[c] > bound) return;
    if (i == k) {
      for (auto& h : cone.parallelepiped) {
        std::vector<long> pt(n);
        bool ok = true;
        for (size_t c = 0; c < n; ++c) {
          pt[c] = x[c] + h[c];
          if (pt[c] > bound) ok = false;
        }
        if (ok) out.push_back(std::move(pt));
      }
      return;
    }
    for (;;) {
      rec(i + 1, x);
      bool grew = false;
      for (size_t c = 0; c < n; ++c) {
        x[c] += cone.generators[i][c];
        if (x[c] > bound) grew = true;
      }
      if (grew) break;
    }
  };
  rec(0, std::vector<long>(n, 0));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace npzeta
