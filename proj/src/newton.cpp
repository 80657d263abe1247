#include "npzeta/newton.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace npzeta {

namespace {

long vec_gcd(const std::vector<long>& v) {
  long g = 0;
  for (long x : v) g = std::gcd(g, std::abs(x));
  return g;
}

long dot(const std::vector<long>& a, const Exponents& s) {
  long acc = 0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * s[i];
  return acc;
}

// Fraction-free Gaussian elimination; returns rank.
int rank_of(std::vector<std::vector<Int>> m) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[static_cast<size_t>(rank)], m[static_cast<size_t>(pivot)]);
    for (int r = rank + 1; r < rows; ++r) {
      Int a = m[static_cast<size_t>(r)][static_cast<size_t>(c)];
      if (a == 0) continue;
      Int b = m[static_cast<size_t>(rank)][static_cast<size_t>(c)];
      for (int cc = c; cc < cols; ++cc)
        m[static_cast<size_t>(r)][static_cast<size_t>(cc)] =
            m[static_cast<size_t>(r)][static_cast<size_t>(cc)] * b -
            m[static_cast<size_t>(rank)][static_cast<size_t>(cc)] * a;
    }
    ++rank;
  }
  return rank;
}

// One-dimensional kernel vector of a rank-(n-1) set of integer rows, made
// primitive integer. Empty when the rank is not n-1.
std::vector<long> kernel_vector(const std::vector<std::vector<long>>& rows, int n) {
  // Solve rows * x = 0 by rational elimination.
  std::vector<std::vector<Rational>> m;
  for (auto& r : rows) {
    std::vector<Rational> rr(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) rr[static_cast<size_t>(i)] = Rational(r[static_cast<size_t>(i)]);
    m.push_back(std::move(rr));
  }
  int rank = 0;
  std::vector<int> pivot_col;
  for (int c = 0; c < n && rank < static_cast<int>(m.size()); ++c) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(m.size()); ++r)
      if (m[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[static_cast<size_t>(rank)], m[static_cast<size_t>(pivot)]);
    Rational inv = Rational(1) / m[static_cast<size_t>(rank)][static_cast<size_t>(c)];
    for (int cc = 0; cc < n; ++cc) m[static_cast<size_t>(rank)][static_cast<size_t>(cc)] *= inv;
    for (int r = 0; r < static_cast<int>(m.size()); ++r) {
      if (r == rank) continue;
      Rational f = m[static_cast<size_t>(r)][static_cast<size_t>(c)];
      if (f == 0) continue;
      for (int cc = 0; cc < n; ++cc)
        m[static_cast<size_t>(r)][static_cast<size_t>(cc)] -= f * m[static_cast<size_t>(rank)][static_cast<size_t>(cc)];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  if (rank != n - 1) return {};
  // free column = the one not among pivots
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
  int free_col = -1;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[static_cast<size_t>(c)]) {
      free_col = c;
      break;
    }
  std::vector<Rational> x(static_cast<size_t>(n), Rational(0));
  x[static_cast<size_t>(free_col)] = Rational(1);
  for (int r = 0; r < rank; ++r) {
    int pc = pivot_col[static_cast<size_t>(r)];
    x[static_cast<size_t>(pc)] = -m[static_cast<size_t>(r)][static_cast<size_t>(free_col)];
  }
  // clear denominators, make primitive
  Int lcm_den(1);
  for (auto& v : x) lcm_den = boost::multiprecision::lcm(lcm_den, rat_den(v));
  std::vector<long> out(static_cast<size_t>(n));
  for (int c = 0; c < n; ++c) {
    Rational v = x[static_cast<size_t>(c)] * Rational(lcm_den);
    out[static_cast<size_t>(c)] = rat_num(v).convert_to<long>();
  }
  long g = vec_gcd(out);
  if (g > 1)
    for (auto& v : out) v /= g;
  return out;
}

}  // namespace

int lattice_rank(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Int>> m;
  for (auto& r : rows) {
    std::vector<Int> rr;
    rr.reserve(r.size());
    for (long v : r) rr.emplace_back(v);
    m.push_back(std::move(rr));
  }
  return rank_of(std::move(m));
}

NewtonPolyhedron NewtonPolyhedron::build(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("newton_polyhedron: zero polynomial");
  if (!f.vanishes_at_origin()) throw std::invalid_argument("newton_polyhedron: f(0) != 0");
  return from_support(f.support(), f.nvars());
}

NewtonPolyhedron NewtonPolyhedron::from_support(std::vector<Exponents> supp, int nvars) {
  if (supp.empty()) throw std::invalid_argument("newton_polyhedron: empty support");
  std::sort(supp.begin(), supp.end());
  supp.erase(std::unique(supp.begin(), supp.end()), supp.end());
  NewtonPolyhedron np;
  np.nvars_ = nvars;
  np.supp_ = std::move(supp);
  np.compute_facets();
  np.compute_faces();
  return np;
}

long NewtonPolyhedron::offset_of(const std::vector<long>& a) const {
  long best = dot(a, supp_[0]);
  for (size_t i = 1; i < supp_.size(); ++i) best = std::min(best, dot(a, supp_[i]));
  return best;
}

void NewtonPolyhedron::compute_facets() {
  const int n = nvars_;
  std::set<std::vector<long>> seen;
  std::vector<Facet> found;

  auto try_normal = [&](std::vector<long> a) {
    long g = vec_gcd(a);
    if (g == 0) return;
    for (auto& v : a) v /= g;
    bool nonneg = true, positive_somewhere = false;
    for (long v : a) {
      if (v < 0) nonneg = false;
      if (v > 0) positive_somewhere = true;
    }
    if (!nonneg) {
      // flip if uniformly nonpositive
      bool nonpos = true;
      for (long v : a)
        if (v > 0) nonpos = false;
      if (!nonpos) return;
      for (auto& v : a) v = -v;
      positive_somewhere = true;
    }
    if (!positive_somewhere) return;
    if (seen.count(a)) return;
    seen.insert(a);
    long off = offset_of(a);
    // contact set must have affine dimension n-1
    std::vector<std::vector<long>> dirs;
    Exponents base;
    bool have_base = false;
    for (auto& s : supp_) {
      if (dot(a, s) != off) continue;
      if (!have_base) {
        base = s;
        have_base = true;
      } else {
        std::vector<long> d(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] = s[static_cast<size_t>(i)] - base[static_cast<size_t>(i)];
        dirs.push_back(std::move(d));
      }
    }
    for (int i = 0; i < n; ++i) {
      if (a[static_cast<size_t>(i)] == 0) {
        std::vector<long> d(static_cast<size_t>(n), 0);
        d[static_cast<size_t>(i)] = 1;
        dirs.push_back(std::move(d));
      }
    }
    if (lattice_rank(dirs) == n - 1) found.push_back(Facet{std::move(a), off});
  };

  if (n == 1) {
    try_normal({1});
  } else {
    // Candidate normals from all affinely spanning subsets of
    // Supp union {coordinate rays}: choose k support points (k-1 difference
    // directions) and n-k coordinate rays, take the rank-(n-1) kernel.
    const int m = static_cast<int>(supp_.size());
    std::vector<int> pts;
    std::vector<int> rays;

    std::function<void(int, int)> choose_rays = [&](int start, int need) {
      if (need == 0) {
        std::vector<std::vector<long>> rows;
        for (size_t i = 1; i < pts.size(); ++i) {
          std::vector<long> d(static_cast<size_t>(n));
          for (int c = 0; c < n; ++c)
            d[static_cast<size_t>(c)] = supp_[static_cast<size_t>(pts[i])][static_cast<size_t>(c)] -
                                        supp_[static_cast<size_t>(pts[0])][static_cast<size_t>(c)];
          rows.push_back(std::move(d));
        }
        for (int r : rays) {
          std::vector<long> d(static_cast<size_t>(n), 0);
          d[static_cast<size_t>(r)] = 1;
          rows.push_back(std::move(d));
        }
        auto a = kernel_vector(rows, n);
        if (!a.empty()) try_normal(std::move(a));
        return;
      }
      for (int r = start; r < n; ++r) {
        rays.push_back(r);
        choose_rays(r + 1, need - 1);
        rays.pop_back();
      }
    };

    std::function<void(int, int)> choose_pts = [&](int start, int k) {
      if (static_cast<int>(pts.size()) == k) {
        choose_rays(0, n - k);
        return;
      }
      for (int i = start; i < m; ++i) {
        pts.push_back(i);
        choose_pts(i + 1, k);
        pts.pop_back();
      }
    };

    for (int k = 1; k <= std::min(n, m); ++k) {
      pts.clear();
      choose_pts(0, k);
    }
  }

  std::sort(found.begin(), found.end(), [](const Facet& a, const Facet& b) {
    return a.normal != b.normal ? a.normal < b.normal : a.offset < b.offset;
  });
  facets_ = std::move(found);
  if (facets_.empty()) throw std::logic_error("newton_polyhedron: no facets found");
}

std::pair<std::vector<int>, std::vector<int>> NewtonPolyhedron::first_meet_key(const std::vector<long>& a) const {
  long off = offset_of(a);
  std::vector<int> touching;
  for (size_t i = 0; i < supp_.size(); ++i)
    if (dot(a, supp_[i]) == off) touching.push_back(static_cast<int>(i));
  std::vector<int> free_dirs;
  for (int i = 0; i < nvars_; ++i)
    if (a[static_cast<size_t>(i)] == 0) free_dirs.push_back(i);
  return {std::move(touching), std::move(free_dirs)};
}

Face NewtonPolyhedron::make_face(std::vector<long> witness) const {
  Face f;
  auto key = first_meet_key(witness);
  f.touching = std::move(key.first);
  f.free_dirs = std::move(key.second);
  f.witness = std::move(witness);
  std::vector<std::vector<long>> dirs;
  const Exponents& base = supp_[static_cast<size_t>(f.touching[0])];
  for (size_t i = 1; i < f.touching.size(); ++i) {
    std::vector<long> d(static_cast<size_t>(nvars_));
    for (int c = 0; c < nvars_; ++c)
      d[static_cast<size_t>(c)] =
          supp_[static_cast<size_t>(f.touching[i])][static_cast<size_t>(c)] - base[static_cast<size_t>(c)];
    dirs.push_back(std::move(d));
  }
  for (int r : f.free_dirs) {
    std::vector<long> d(static_cast<size_t>(nvars_), 0);
    d[static_cast<size_t>(r)] = 1;
    dirs.push_back(std::move(d));
  }
  f.dim = lattice_rank(dirs);
  f.is_compact = f.free_dirs.empty();
  f.is_improper = true;
  for (long v : f.witness)
    if (v != 0) f.is_improper = false;
  return f;
}

void NewtonPolyhedron::compute_faces() {
  // Closure of the facet set under meets. F(a) meet F(b) is nonempty exactly
  // when N(a+b) = N(a)+N(b), and then equals F(a+b).
  std::map<std::pair<std::vector<int>, std::vector<int>>, Face> by_key;

  auto insert_witness = [&](std::vector<long> w) -> bool {
    auto key = first_meet_key(w);
    if (by_key.count(key)) return false;
    Face f = make_face(std::move(w));
    by_key.emplace(std::move(key), std::move(f));
    return true;
  };

  insert_witness(std::vector<long>(static_cast<size_t>(nvars_), 0));  // improper face
  for (auto& fc : facets_) insert_witness(fc.normal);

  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Face> snapshot;
    snapshot.reserve(by_key.size());
    for (auto& [k, f] : by_key) snapshot.push_back(f);
    for (size_t i = 0; i < snapshot.size(); ++i) {
      for (size_t j = i + 1; j < snapshot.size(); ++j) {
        const auto& a = snapshot[i].witness;
        const auto& b = snapshot[j].witness;
        std::vector<long> ab(static_cast<size_t>(nvars_));
        for (int c = 0; c < nvars_; ++c) ab[static_cast<size_t>(c)] = a[static_cast<size_t>(c)] + b[static_cast<size_t>(c)];
        if (offset_of(ab) != offset_of(a) + offset_of(b)) continue;  // empty intersection
        if (insert_witness(std::move(ab))) grew = true;
      }
    }
  }

  faces_.clear();
  for (auto& [k, f] : by_key) faces_.push_back(std::move(f));
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.touching != b.touching) return a.touching < b.touching;
    return a.free_dirs < b.free_dirs;
  });
  for (size_t i = 0; i < faces_.size(); ++i) faces_[i].id = static_cast<int>(i);
  if (!faces_.back().is_improper) throw std::logic_error("newton_polyhedron: improper face not maximal");
}

NewtonPolyhedron::Weight NewtonPolyhedron::weight(const std::vector<long>& a) const {
  if (static_cast<int>(a.size()) != nvars_) throw std::invalid_argument("weight: arity mismatch");
  long nu = 0;
  for (long v : a) {
    if (v < 0) throw std::invalid_argument("weight: negative component");
    nu += v;
  }
  const Face& f = first_meet_locus(a);
  return Weight{nu, offset_of(a), f.id};
}

const Face& NewtonPolyhedron::face_by_key(const std::vector<int>& touching, const std::vector<int>& free_dirs) const {
  for (auto& f : faces_)
    if (f.touching == touching && f.free_dirs == free_dirs) return f;
  throw std::invalid_argument("face_by_key: no such face");
}

const Face& NewtonPolyhedron::first_meet_locus(const std::vector<long>& a) const {
  auto key = first_meet_key(a);
  return face_by_key(key.first, key.second);
}

bool NewtonPolyhedron::face_contains_face(const Face& outer, const Face& inner) const {
  return std::includes(outer.touching.begin(), outer.touching.end(), inner.touching.begin(), inner.touching.end()) &&
         std::includes(outer.free_dirs.begin(), outer.free_dirs.end(), inner.free_dirs.begin(), inner.free_dirs.end());
}

SigmaKappa NewtonPolyhedron::sigma_kappa() const {
  SigmaKappa out;
  bool have = false;
  Rational tstar(0);  // 1/sigma = max over facets with N>0 of N/nu
  for (auto& fc : facets_) {
    if (fc.offset <= 0) continue;
    long nu = 0;
    for (long v : fc.normal) nu += v;
    Rational t = Rational(fc.offset) / Rational(nu);
    if (!have || t > tstar) tstar = t, have = true;
  }
  if (!have) {
    out.sigma_infinite = true;
    out.lct = Rational(1);
    return out;
  }
  out.sigma = Rational(1) / tstar;
  out.lct = out.sigma < 1 ? out.sigma : Rational(1);
  // smallest face through the diagonal point: sum of all active facet normals
  std::vector<long> w(static_cast<size_t>(nvars_), 0);
  for (auto& fc : facets_) {
    long nu = 0;
    for (long v : fc.normal) nu += v;
    // active iff tstar * nu == offset
    if (Rational(nu) * tstar == Rational(fc.offset)) {
      for (int i = 0; i < nvars_; ++i) w[static_cast<size_t>(i)] += fc.normal[static_cast<size_t>(i)];
    }
  }
  const Face& tau0 = first_meet_locus(w);
  out.tau0_face_id = tau0.id;
  out.kappa = nvars_ - tau0.dim;
  return out;
}

Rational NewtonPolyhedron::face_sigma(const Face& tau) const {
  std::vector<Exponents> sub;
  sub.reserve(tau.touching.size());
  for (int i : tau.touching) sub.push_back(supp_[static_cast<size_t>(i)]);
  NewtonPolyhedron np = from_support(std::move(sub), nvars_);
  SigmaKappa sk = np.sigma_kappa();
  if (sk.sigma_infinite) throw std::logic_error("face_sigma: unexpected infinite sigma");
  return sk.sigma;
}

IntPoly face_polynomial(const IntPoly& f, const NewtonPolyhedron& np, const Face& tau) {
  if (tau.id < 0 || tau.id >= static_cast<int>(np.faces().size()))
    throw std::invalid_argument("face_polynomial: face not of this polyhedron");
  const Face& own = np.faces()[static_cast<size_t>(tau.id)];
  if (own.touching != tau.touching || own.free_dirs != tau.free_dirs)
    throw std::invalid_argument("face_polynomial: face not of this polyhedron");
  IntPoly out(f.nvars());
  for (int i : tau.touching) {
    const Exponents& e = np.supp()[static_cast<size_t>(i)];
    out.add_term(e, f.coeff(e));
  }
  return out;
}

std::optional<std::pair<std::vector<long>, long>> support_hyperplane(const IntPoly& f) {
  if (f.is_zero()) return std::nullopt;
  if (!f.vanishes_at_origin()) return std::nullopt;  // any hyperplane through 0 in Supp would force b = 0
  NewtonPolyhedron np = NewtonPolyhedron::build(f);
  size_t nsupp = np.supp().size();
  for (auto& fc : np.facets()) {
    if (fc.offset <= 0) continue;
    size_t touch = 0;
    for (auto& s : np.supp())
      if (std::inner_product(fc.normal.begin(), fc.normal.end(), s.begin(), 0L) == fc.offset) ++touch;
    if (touch == nsupp) return std::make_pair(fc.normal, fc.offset);
  }
  return std::nullopt;
}

}  // namespace npzeta
