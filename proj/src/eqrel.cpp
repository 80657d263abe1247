#include "npzeta/eqrel.hpp"

#include <random>

#include "npzeta/modarith.hpp"

namespace npzeta {

namespace {

// Disjoint sets over 0..n-1 with path halving and union by size.
class UnionFind {
 public:
  explicit UnionFind(size_t n) : parent_(n), size_(n, 1), sets_(n) {
    for (size_t i = 0; i < n; ++i) parent_[i] = static_cast<uint32_t>(i);
  }
  uint32_t find(uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(uint32_t a, uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --sets_;
  }
  size_t count() const { return sets_; }

 private:
  std::vector<uint32_t> parent_;
  std::vector<uint32_t> size_;
  size_t sets_;
};

// decode flat index -> residue tuple mod p^n
void decode_residue(uint64_t idx, uint64_t mod, int nvars, std::vector<uint64_t>& x) {
  for (int v = 0; v < nvars; ++v) {
    x[static_cast<size_t>(v)] = idx % mod;
    idx /= mod;
  }
}

struct Predicate {
  const EqRelFamily& fam;
  uint64_t mod;
  // x ~ y at level mod
  bool operator()(const std::vector<uint64_t>& x, const std::vector<uint64_t>& y) const {
    switch (fam.kind) {
      case EqRelFamily::Kind::Congruence:
        return x == y;
      case EqRelFamily::Kind::Solutions: {
        bool sx = fam.poly.eval_mod(std::span<const uint64_t>(x.data(), x.size()), mod) == 0;
        bool sy = fam.poly.eval_mod(std::span<const uint64_t>(y.data(), y.size()), mod) == 0;
        if (sx != sy) return false;
        return sx ? x == y : true;
      }
      case EqRelFamily::Kind::Image:
        return fam.poly.eval_mod(std::span<const uint64_t>(x.data(), x.size()), mod) ==
               fam.poly.eval_mod(std::span<const uint64_t>(y.data(), y.size()), mod);
    }
    return false;
  }
};

}  // namespace

std::string EqRelFamily::str() const {
  switch (kind) {
    case Kind::Congruence:
      return "congruence";
    case Kind::Solutions:
      return "solutions(" + poly.str() + ")";
    case Kind::Image:
      return "image(" + poly.str() + ")";
  }
  return "?";
}

ClassCounts class_counts(const EqRelFamily& family, uint64_t p, int M, uint64_t budget,
                         uint64_t audit_seed) {
  if (!is_prime_u64(p)) throw std::invalid_argument("class_counts: p must be prime");
  if (M < 1) throw std::invalid_argument("class_counts: M must be >= 1");
  ClassCounts out;
  out.p = p;
  const int n = family.nvars;
  uint64_t spent = 0;
  for (int level = 1; level <= M; ++level) {
    uint64_t mod = ipow_checked(p, static_cast<unsigned>(level));
    uint64_t total = 1;
    for (int v = 0; v < n; ++v) {
      if (total > budget / mod + 1) throw BudgetError(budget + 1, budget);
      total *= mod;
    }
    spent += total;
    check_budget(spent, budget);
    if (total > (1ull << 31)) throw BudgetError(total, 1ull << 31);

    UnionFind uf(total);
    std::vector<uint64_t> x(static_cast<size_t>(n));
    switch (family.kind) {
      case EqRelFamily::Kind::Congruence:
        break;  // identity relation on residues
      case EqRelFamily::Kind::Solutions: {
        // chain together all non-solutions
        int64_t prev = -1;
        for (uint64_t idx = 0; idx < total; ++idx) {
          decode_residue(idx, mod, n, x);
          if (family.poly.eval_mod(std::span<const uint64_t>(x.data(), x.size()), mod) == 0) continue;
          if (prev >= 0) uf.unite(static_cast<uint32_t>(prev), static_cast<uint32_t>(idx));
          prev = static_cast<int64_t>(idx);
        }
        break;
      }
      case EqRelFamily::Kind::Image: {
        // bucket by the value of f
        std::map<uint64_t, uint32_t> first_with_value;
        for (uint64_t idx = 0; idx < total; ++idx) {
          decode_residue(idx, mod, n, x);
          uint64_t v = family.poly.eval_mod(std::span<const uint64_t>(x.data(), x.size()), mod);
          auto [it, inserted] = first_with_value.emplace(v, static_cast<uint32_t>(idx));
          if (!inserted) uf.unite(it->second, static_cast<uint32_t>(idx));
        }
        break;
      }
    }
    out.values.push_back(Int(uf.count()));

    // sampled audit of the equivalence axioms
    Predicate pred{family, mod};
    std::mt19937_64 rng(audit_seed ^ (static_cast<uint64_t>(level) << 32) ^ p);
    std::uniform_int_distribution<uint64_t> pick(0, total - 1);
    std::vector<uint64_t> a(static_cast<size_t>(n)), b(static_cast<size_t>(n)), c(static_cast<size_t>(n));
    for (int trial = 0; trial < 32; ++trial) {
      decode_residue(pick(rng), mod, n, a);
      decode_residue(pick(rng), mod, n, b);
      decode_residue(pick(rng), mod, n, c);
      if (!pred(a, a)) throw std::logic_error("class_counts: reflexivity audit failed");
      if (pred(a, b) != pred(b, a)) throw std::logic_error("class_counts: symmetry audit failed");
      if (pred(a, b) && pred(b, c) && !pred(a, c))
        throw std::logic_error("class_counts: transitivity audit failed");
    }
  }
  return out;
}

VerificationReport uniform_rationality_report(const EqRelFamily& family,
                                              const std::vector<uint64_t>& primes, int M,
                                              uint64_t budget) {
  VerificationReport rep;
  rep.check = "eqrel-uniform-rationality";
  rep.params = {{"family", family.str()}, {"nmax", M}};

  // candidate denominator factors (1 - p^a T^b)
  std::vector<std::pair<long, long>> candidates{{0, 1}, {family.nvars, 1}};
  if (family.kind != EqRelFamily::Kind::Congruence && !family.poly.is_zero() &&
      family.poly.vanishes_at_origin()) {
    NewtonPolyhedron np = NewtonPolyhedron::build(family.poly);
    for (auto& ray : fan_rays(np)) {
      if (ray.N < 1) continue;
      candidates.emplace_back(static_cast<long>(family.nvars) * ray.N - ray.nu, ray.N);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  {
    njson cj = njson::array();
    for (auto& [a, b] : candidates) cj.push_back({{"a", a}, {"b", b}});
    rep.params["candidates"] = cj;
  }

  bool all_fit = true;
  bool uniform = true;
  std::optional<std::vector<std::pair<long, long>>> first_factors;
  for (uint64_t p : primes) {
    ClassCounts counts = class_counts(family, p, M, budget);
    std::vector<Rational> series;
    series.push_back(Rational(1));  // a_0: everything is equivalent at level 0
    for (auto& a : counts.values) series.push_back(Rational(a));
    auto fit = fit_rational(series, candidates, p);
    njson rec;
    rec["p"] = p;
    njson cj = njson::array();
    for (auto& a : counts.values) cj.push_back(a.str());
    rec["counts"] = cj;
    if (fit) {
      njson fj = njson::array();
      for (auto& [a, b] : fit->factors) fj.push_back({{"a", a}, {"b", b}});
      rec["factors"] = fj;
      rec["rational"] = fit->rf.str("T");
      if (!first_factors)
        first_factors = fit->factors;
      else if (*first_factors != fit->factors)
        uniform = false;
    } else {
      rec["factors"] = nullptr;
      all_fit = false;
      rep.notes.push_back("no rational fit at p = " + std::to_string(p));
    }
    rep.records.push_back(std::move(rec));
  }
  rep.fitted["uniform_factors"] = uniform;
  rep.pass = all_fit && uniform;
  return rep;
}

}  // namespace npzeta
