#include "npzeta/padic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "npzeta/modarith.hpp"

namespace npzeta {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void require_prime(uint64_t p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("expected a prime");
}

// Residues mod p^m compatible with a box support, presented as a list of
// base residues fixed below p^fixed plus free digits above.
struct BoxGrid {
  uint64_t p;
  int m, n;
  int fixed;                                   // digits below p^fixed are pinned
  uint64_t modulus;                            // p^m
  uint64_t fixed_mod;                          // p^fixed
  uint64_t free_per_var;                       // p^(m-fixed)
  std::vector<std::vector<uint64_t>> bases;    // residues mod p^fixed, per variable

  uint64_t total() const {
    uint64_t t = static_cast<uint64_t>(bases.size());
    for (int i = 0; i < n; ++i) t *= free_per_var;
    return t;
  }
  uint64_t free_total() const {
    uint64_t t = 1;
    for (int i = 0; i < n; ++i) t *= free_per_var;
    return t;
  }
  // decode flat free-digit index into x given a base
  void decode(const std::vector<uint64_t>& base, uint64_t idx, std::vector<uint64_t>& x) const {
    for (int v = 0; v < n; ++v) {
      x[static_cast<size_t>(v)] = base[static_cast<size_t>(v)] + fixed_mod * (idx % free_per_var);
      idx /= free_per_var;
    }
  }
};

BoxGrid make_box_grid(const BoxSupport& phi, uint64_t p, int m, int n) {
  BoxGrid g;
  g.p = p;
  g.m = m;
  g.n = n;
  g.modulus = ipow_checked(p, static_cast<unsigned>(m));
  switch (phi.kind) {
    case BoxSupport::Kind::Full:
      g.fixed = 0;
      g.bases.push_back(std::vector<uint64_t>(static_cast<size_t>(n), 0));
      break;
    case BoxSupport::Kind::Shifted: {
      if (static_cast<int>(phi.shift.size()) != n)
        throw std::invalid_argument("box support: shift arity mismatch");
      g.fixed = std::min(1, m);
      std::vector<uint64_t> base(static_cast<size_t>(n));
      for (int v = 0; v < n; ++v) {
        long long r = phi.shift[static_cast<size_t>(v)] % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        base[static_cast<size_t>(v)] = static_cast<uint64_t>(r);
      }
      g.bases.push_back(std::move(base));
      break;
    }
    case BoxSupport::Kind::Union: {
      if (phi.level < 1) throw std::invalid_argument("box support: union level must be >= 1");
      g.fixed = std::min(phi.level, m);
      uint64_t fm = ipow_checked(p, static_cast<unsigned>(g.fixed));
      std::vector<std::vector<uint64_t>> bases;
      for (auto& cls : phi.classes) {
        if (static_cast<int>(cls.size()) != n)
          throw std::invalid_argument("box support: class arity mismatch");
        std::vector<uint64_t> base(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) base[static_cast<size_t>(v)] = cls[static_cast<size_t>(v)] % fm;
        bases.push_back(std::move(base));
      }
      std::sort(bases.begin(), bases.end());
      bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
      if (bases.empty()) throw std::invalid_argument("box support: empty union");
      g.bases = std::move(bases);
      break;
    }
  }
  g.fixed_mod = ipow_checked(p, static_cast<unsigned>(g.fixed));
  g.free_per_var = ipow_checked(p, static_cast<unsigned>(m - g.fixed));
  return g;
}

// exp(2 pi i v / modulus); a lookup table below this size, sincos above.
constexpr uint64_t kRootTableLimit = 1ull << 22;

struct Phase {
  uint64_t modulus;
  std::vector<Complex> table;
  explicit Phase(uint64_t mod) : modulus(mod) {
    if (mod <= kRootTableLimit) {
      table.resize(mod);
      for (uint64_t k = 0; k < mod; ++k) {
        double theta = kTwoPi * static_cast<double>(k) / static_cast<double>(mod);
        table[k] = Complex(std::cos(theta), std::sin(theta));
      }
    }
  }
  Complex operator()(uint64_t v) const {
    if (!table.empty()) return table[v];
    double theta = kTwoPi * static_cast<double>(v) / static_cast<double>(modulus);
    return Complex(std::cos(theta), std::sin(theta));
  }
};

// f compiled against a fixed modulus, grouped by the exponent of the last
// variable so the innermost loop is a short Horner evaluation.
struct CompiledPoly {
  uint64_t modulus;
  int n;
  int last_deg;
  // terms as (coeff mod modulus, exponents)
  std::vector<std::pair<uint64_t, Exponents>> terms;

  CompiledPoly(const IntPoly& f, uint64_t mod) : modulus(mod), n(f.nvars()), last_deg(0) {
    for (auto& [e, c] : f.terms()) {
      Int cr = c % mod;
      if (cr < 0) cr += mod;
      uint64_t cm = cr.convert_to<uint64_t>();
      if (cm == 0) continue;
      terms.emplace_back(cm, e);
      last_deg = std::max(last_deg, e[static_cast<size_t>(n - 1)]);
    }
  }

  // dense coefficients in the last variable for a fixed prefix x_1..x_{n-1}
  void inner_coeffs(const std::vector<uint64_t>& x, std::vector<uint64_t>& out) const {
    out.assign(static_cast<size_t>(last_deg) + 1, 0);
    for (auto& [c, e] : terms) {
      uint64_t t = c;
      for (int v = 0; v + 1 < n; ++v) {
        int ev = e[static_cast<size_t>(v)];
        if (ev) t = mul_mod(t, pow_mod(x[static_cast<size_t>(v)], static_cast<uint64_t>(ev), modulus), modulus);
      }
      int ed = e[static_cast<size_t>(n - 1)];
      out[static_cast<size_t>(ed)] = (out[static_cast<size_t>(ed)] + t) % modulus;
    }
  }
};

// --- truncated polynomial ring F_p[t]/t^m ---

using Jet = std::vector<uint64_t>;

void jet_mul(const Jet& a, const Jet& b, Jet& out, uint64_t p, int m) {
  out.assign(static_cast<size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    if (a[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j + i < m; ++j)
      out[static_cast<size_t>(i + j)] =
          (out[static_cast<size_t>(i + j)] + a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)]) % p;
  }
}

uint64_t jet_eval_coeff(const IntPoly& f, const std::vector<Jet>& x, uint64_t p, int m, int want,
                        bool full_zero_test = false, bool* is_zero = nullptr) {
  Jet acc(static_cast<size_t>(m), 0);
  Jet term, tmp;
  for (auto& [e, c] : f.terms()) {
    Int cr = c % p;
    if (cr < 0) cr += p;
    uint64_t cm = cr.convert_to<uint64_t>();
    if (cm == 0) continue;
    term.assign(static_cast<size_t>(m), 0);
    term[0] = cm;
    for (int v = 0; v < f.nvars(); ++v) {
      for (int k = 0; k < e[static_cast<size_t>(v)]; ++k) {
        jet_mul(term, x[static_cast<size_t>(v)], tmp, p, m);
        term.swap(tmp);
      }
    }
    for (int i = 0; i < m; ++i)
      acc[static_cast<size_t>(i)] = (acc[static_cast<size_t>(i)] + term[static_cast<size_t>(i)]) % p;
  }
  if (full_zero_test && is_zero) {
    *is_zero = std::all_of(acc.begin(), acc.end(), [](uint64_t v) { return v == 0; });
  }
  return want >= 0 && want < m ? acc[static_cast<size_t>(want)] : 0;
}

}  // namespace

std::string BoxSupport::str() const {
  switch (kind) {
    case Kind::Full:
      return "full";
    case Kind::Shifted: {
      std::ostringstream os;
      os << "shifted(";
      for (size_t i = 0; i < shift.size(); ++i) os << (i ? "," : "") << shift[i];
      os << ")";
      return os.str();
    }
    case Kind::Union: {
      std::ostringstream os;
      os << "union[r=" << level << ",classes=" << classes.size() << "]";
      return os.str();
    }
  }
  return "?";
}

Complex exp_sum(const IntPoly& f, uint64_t p, int m, const BoxSupport& phi, uint64_t budget,
                int threads) {
  require_prime(p);
  if (m < 1) throw std::invalid_argument("exp_sum: m must be >= 1");
  BoxGrid grid = make_box_grid(phi, p, m, f.nvars());
  check_budget(grid.total(), budget);
  const uint64_t M = grid.modulus;
  CompiledPoly cp(f, M);
  Phase phase(M);

  const int n = f.nvars();
  // outer space: all but the last variable; inner loop runs over the last one
  uint64_t outer_per_var = grid.free_per_var;
  uint64_t outer_total = static_cast<uint64_t>(grid.bases.size());
  for (int v = 0; v + 1 < n; ++v) outer_total *= outer_per_var;

  Complex total = chunked_complex_sum(outer_total, threads, [&](uint64_t begin, uint64_t end) {
    std::vector<uint64_t> x(static_cast<size_t>(n), 0);
    std::vector<uint64_t> inner;
    Complex acc(0.0, 0.0);
    for (uint64_t idx = begin; idx < end; ++idx) {
      uint64_t rest = idx;
      size_t base_i = static_cast<size_t>(rest % grid.bases.size());
      rest /= grid.bases.size();
      const auto& base = grid.bases[base_i];
      for (int v = 0; v + 1 < n; ++v) {
        x[static_cast<size_t>(v)] = base[static_cast<size_t>(v)] + grid.fixed_mod * (rest % outer_per_var);
        rest /= outer_per_var;
      }
      cp.inner_coeffs(x, inner);
      uint64_t base_last = base[static_cast<size_t>(n - 1)];
      for (uint64_t d = 0; d < grid.free_per_var; ++d) {
        uint64_t xl = base_last + grid.fixed_mod * d;
        uint64_t v = 0;
        for (size_t i = inner.size(); i-- > 0;) v = (mul_mod(v, xl, M) + inner[i]) % M;
        acc += phase(v);
      }
    }
    return acc;
  });

  double scale = 1.0;
  for (int i = 0; i < n * m; ++i) scale /= static_cast<double>(p);
  return total * scale;
}

Complex exp_sum_laurent(const IntPoly& f, uint64_t p, int m, const BoxSupport& phi, uint64_t budget,
                        int threads) {
  require_prime(p);
  if (m < 1) throw std::invalid_argument("exp_sum_laurent: m must be >= 1");
  const int n = f.nvars();
  // digits of each variable = coefficients of 1, t, ..., t^{m-1}
  int fixed = 0;
  std::vector<std::vector<uint64_t>> bases;  // fixed low coefficients per variable
  switch (phi.kind) {
    case BoxSupport::Kind::Full:
      bases.push_back(std::vector<uint64_t>(static_cast<size_t>(n), 0));
      break;
    case BoxSupport::Kind::Shifted: {
      if (static_cast<int>(phi.shift.size()) != n)
        throw std::invalid_argument("box support: shift arity mismatch");
      fixed = std::min(1, m);
      std::vector<uint64_t> b(static_cast<size_t>(n));
      for (int v = 0; v < n; ++v) {
        long long r = phi.shift[static_cast<size_t>(v)] % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        b[static_cast<size_t>(v)] = static_cast<uint64_t>(r);
      }
      bases.push_back(std::move(b));
      break;
    }
    case BoxSupport::Kind::Union:
      throw std::invalid_argument("exp_sum_laurent: union supports are not implemented");
  }
  uint64_t free_digits = static_cast<uint64_t>(n) * static_cast<uint64_t>(m - fixed);
  uint64_t total_pts = static_cast<uint64_t>(bases.size());
  for (uint64_t i = 0; i < free_digits; ++i) {
    total_pts *= p;
    check_budget(total_pts, budget);
  }
  check_budget(total_pts, budget);
  Phase phase(p);

  Complex total = chunked_complex_sum(total_pts, threads, [&](uint64_t begin, uint64_t end) {
    std::vector<Jet> x(static_cast<size_t>(n), Jet(static_cast<size_t>(m), 0));
    Complex acc(0.0, 0.0);
    for (uint64_t idx = begin; idx < end; ++idx) {
      uint64_t rest = idx;
      size_t base_i = static_cast<size_t>(rest % bases.size());
      rest /= bases.size();
      for (int v = 0; v < n; ++v) {
        for (int j = 0; j < fixed; ++j) x[static_cast<size_t>(v)][static_cast<size_t>(j)] = bases[base_i][static_cast<size_t>(v)];
        for (int j = fixed; j < m; ++j) {
          x[static_cast<size_t>(v)][static_cast<size_t>(j)] = rest % p;
          rest /= p;
        }
      }
      acc += phase(jet_eval_coeff(f, x, p, m, m - 1));
    }
    return acc;
  });

  double scale = 1.0;
  for (int i = 0; i < n * m; ++i) scale /= static_cast<double>(p);
  return total * scale;
}

PoincareCoeffs poincare_coeffs(const IntPoly& f, uint64_t p, int M, uint64_t budget) {
  require_prime(p);
  if (M < 0) throw std::invalid_argument("poincare_coeffs: M must be >= 0");
  const int n = f.nvars();
  PoincareCoeffs out;
  out.p = p;
  out.values.push_back(Int(1));
  // solutions mod p^k, stored as flat residue tuples
  std::vector<uint64_t> sols(static_cast<size_t>(n), 0);  // level 0: the single zero tuple
  uint64_t level_mod = 1;
  uint64_t pn = 1;
  for (int i = 0; i < n; ++i) pn *= p;
  uint64_t spent = 0;
  for (int k = 0; k < M; ++k) {
    uint64_t next_mod = level_mod * p;
    uint64_t count = sols.size() / static_cast<size_t>(n);
    spent += count * pn;
    check_budget(spent, budget);
    std::vector<uint64_t> next;
    std::vector<uint64_t> cand(static_cast<size_t>(n));
    for (uint64_t s = 0; s < count; ++s) {
      const uint64_t* base = sols.data() + s * static_cast<size_t>(n);
      for (uint64_t d = 0; d < pn; ++d) {
        uint64_t rest = d;
        for (int v = 0; v < n; ++v) {
          cand[static_cast<size_t>(v)] = base[v] + level_mod * (rest % p);
          rest /= p;
        }
        if (f.eval_mod(std::span<const uint64_t>(cand.data(), cand.size()), next_mod) == 0)
          next.insert(next.end(), cand.begin(), cand.end());
      }
    }
    sols = std::move(next);
    level_mod = next_mod;
    out.values.push_back(Int(sols.size() / static_cast<size_t>(n)));
  }
  return out;
}

CharGroup::CharGroup(uint64_t p, int c) : p_(p), c_(c) {
  require_prime(p);
  if (c < 1) throw std::invalid_argument("CharGroup: conductor exponent must be >= 1");
  if (p == 2 && c >= 2) throw std::invalid_argument("CharGroup: p = 2 with c >= 2 is not supported");
  modulus_ = ipow_checked(p, static_cast<unsigned>(c));
  if (modulus_ > (1ull << 26)) throw std::invalid_argument("CharGroup: modulus too large");
  phi_ = modulus_ / p * (p - 1);
  g_ = primitive_root_mod_prime_power(p, c);
  dlog_.assign(modulus_, std::numeric_limits<uint32_t>::max());
  uint64_t acc = 1;
  for (uint64_t k = 0; k < phi_; ++k) {
    dlog_[acc] = static_cast<uint32_t>(k);
    acc = mul_mod(acc, g_, modulus_);
  }
}

uint64_t CharGroup::dlog(uint64_t unit) const {
  uint64_t v = unit % modulus_;
  if (v == 0 || v % p_ == 0) throw std::invalid_argument("dlog of a non-unit");
  uint32_t d = dlog_[v];
  return d;
}

Character::Character(std::shared_ptr<const CharGroup> grp, uint64_t index)
    : grp_(std::move(grp)), index_(index % grp_->order()) {
  // conductor: smallest c' with chi trivial on 1 + p^{c'}
  conductor_ = grp_->c();
  for (int cp = 1; cp < grp_->c(); ++cp) {
    uint64_t gen = 1 + ipow_checked(grp_->p(), static_cast<unsigned>(cp));
    uint64_t e = mul_mod(index_ % grp_->order(), grp_->dlog(gen), grp_->order());
    if (e % grp_->order() == 0) {
      conductor_ = cp;
      break;
    }
  }
  if (index_ == 0) conductor_ = 1;
}

uint64_t Character::order() const {
  return grp_->order() / std::gcd(grp_->order(), index_);
}

Complex Character::eval(uint64_t v) const {
  if (v % grp_->p() == 0) return Complex(0.0, 0.0);
  uint64_t e = mul_mod(index_, grp_->dlog(v % grp_->modulus()), grp_->order());
  double theta = kTwoPi * static_cast<double>(e) / static_cast<double>(grp_->order());
  return Complex(std::cos(theta), std::sin(theta));
}

Character Character::inverse() const {
  return Character(grp_, (grp_->order() - index_) % grp_->order());
}

std::pair<uint64_t, uint64_t> Character::index_pair() const {
  uint64_t pm1 = grp_->p() - 1;
  uint64_t pc1 = grp_->order() / pm1;
  return {index_ % pm1, index_ % pc1};
}

Complex Character::gauss_sum() const {
  uint64_t p = grp_->p();
  uint64_t mc = ipow_checked(p, static_cast<unsigned>(conductor_));
  Complex acc(0.0, 0.0);
  for (uint64_t v = 1; v < mc; ++v) {
    if (v % p == 0) continue;
    double theta = kTwoPi * static_cast<double>(v) / static_cast<double>(mc);
    acc += eval(v) * Complex(std::cos(theta), std::sin(theta));
  }
  double norm = 1.0 / static_cast<double>(p - 1);
  for (int i = 1; i < conductor_; ++i) norm /= static_cast<double>(p);
  return acc * norm;
}

std::vector<CharTableEntry> character_table(uint64_t p, int c) {
  auto grp = std::make_shared<CharGroup>(p, c);
  std::vector<CharTableEntry> out;
  for (uint64_t e = 0; e < grp->order(); ++e) {
    Character chi(grp, e);
    bool trivial = chi.is_trivial();
    out.push_back(CharTableEntry{chi, trivial, trivial ? Complex(0.0, 0.0) : chi.gauss_sum()});
  }
  return out;
}

namespace {

// Solutions of f = 0 mod p^level inside the box, as flat residue tuples.
struct SolutionChain {
  uint64_t p;
  int n;
  int level = 0;
  uint64_t level_mod = 1;
  std::vector<uint64_t> sols;

  // enumerate box residues mod p^level0 and keep solutions
  void seed(const IntPoly& f, const BoxGrid& grid0, int level0, uint64_t& spent, uint64_t budget) {
    level = level0;
    level_mod = ipow_checked(p, static_cast<unsigned>(level0));
    uint64_t total = grid0.total();
    spent += total;
    check_budget(spent, budget);
    std::vector<uint64_t> x(static_cast<size_t>(n));
    for (auto& base : grid0.bases) {
      for (uint64_t idx = 0; idx < grid0.free_total(); ++idx) {
        grid0.decode(base, idx, x);
        if (f.eval_mod(std::span<const uint64_t>(x.data(), x.size()), level_mod) == 0)
          sols.insert(sols.end(), x.begin(), x.end());
      }
    }
  }

  void lift(const IntPoly& f, uint64_t& spent, uint64_t budget) {
    uint64_t pn = 1;
    for (int i = 0; i < n; ++i) pn *= p;
    uint64_t next_mod = level_mod * p;
    uint64_t count = sols.size() / static_cast<size_t>(n);
    spent += count * pn;
    check_budget(spent, budget);
    std::vector<uint64_t> next;
    std::vector<uint64_t> cand(static_cast<size_t>(n));
    for (uint64_t s = 0; s < count; ++s) {
      const uint64_t* base = sols.data() + s * static_cast<size_t>(n);
      for (uint64_t d = 0; d < pn; ++d) {
        uint64_t rest = d;
        for (int v = 0; v < n; ++v) {
          cand[static_cast<size_t>(v)] = base[v] + level_mod * (rest % p);
          rest /= p;
        }
        if (f.eval_mod(std::span<const uint64_t>(cand.data(), cand.size()), next_mod) == 0)
          next.insert(next.end(), cand.begin(), cand.end());
      }
    }
    sols = std::move(next);
    level_mod = next_mod;
    ++level;
  }
};

}  // namespace

ZetaCoeffs zeta_coeffs(const IntPoly& f, uint64_t p, const Character& chi, int K,
                       const BoxSupport& phi, uint64_t budget) {
  require_prime(p);
  if (K < 0) throw std::invalid_argument("zeta_coeffs: K must be >= 0");
  if (chi.p() != p) throw std::invalid_argument("zeta_coeffs: character prime mismatch");
  const int n = f.nvars();
  const int c = chi.conductor();
  ZetaCoeffs out;
  out.p = p;
  out.chi_index = chi.index();
  out.chi_conductor = c;
  out.exact_valid = chi.is_trivial();

  uint64_t spent = 0;
  int seed_level = phi.kind == BoxSupport::Kind::Union ? std::max(1, phi.level) : 1;

  SolutionChain chain{p, n, 0, 1, {}};
  chain.seed(f, make_box_grid(phi, p, seed_level, n), seed_level, spent, budget);

  std::vector<uint64_t> x(static_cast<size_t>(n));
  for (int k = 0; k <= K; ++k) {
    const int L = std::max(k + c, seed_level);
    Complex acc(0.0, 0.0);
    Int count(0);

    if (k < chain.level) {
      // below the chain: enumerate the box at level L directly
      BoxGrid grid = make_box_grid(phi, p, L, n);
      spent += grid.total();
      check_budget(spent, budget);
      uint64_t Lmod = grid.modulus;
      uint64_t pk = ipow_checked(p, static_cast<unsigned>(k));
      uint64_t pc = ipow_checked(p, static_cast<unsigned>(c));
      for (auto& base : grid.bases) {
        for (uint64_t idx = 0; idx < grid.free_total(); ++idx) {
          grid.decode(base, idx, x);
          uint64_t v = f.eval_mod(std::span<const uint64_t>(x.data(), x.size()), Lmod);
          if (v % pk != 0) continue;
          uint64_t unit = v / pk;
          if (unit % p == 0) continue;  // ord > k
          acc += chi.eval(unit % pc);
          count += 1;
        }
      }
    } else {
      while (chain.level < k) chain.lift(f, spent, budget);
      // extend each solution mod p^k by the digits up to level L = k + c
      uint64_t ext = 1;
      for (int i = 0; i < n * (L - k); ++i) ext *= p;
      uint64_t cnt = chain.sols.size() / static_cast<size_t>(n);
      spent += cnt * ext;
      check_budget(spent, budget);
      uint64_t Lmod = ipow_checked(p, static_cast<unsigned>(L));
      uint64_t pk = chain.level_mod;
      uint64_t pc = ipow_checked(p, static_cast<unsigned>(c));
      for (uint64_t s = 0; s < cnt; ++s) {
        const uint64_t* base = chain.sols.data() + s * static_cast<size_t>(n);
        for (uint64_t d = 0; d < ext; ++d) {
          uint64_t rest = d;
          for (int v2 = 0; v2 < n; ++v2) {
            x[static_cast<size_t>(v2)] = base[v2] + pk * (rest % (Lmod / pk));
            rest /= (Lmod / pk);
          }
          uint64_t v = f.eval_mod(std::span<const uint64_t>(x.data(), x.size()), Lmod);
          if (v % pk != 0) continue;
          uint64_t unit = v / pk;
          if (unit % p == 0) continue;
          acc += chi.eval(unit % pc);
          count += 1;
        }
      }
    }

    Rational measure = rat_pow(Rational(1, static_cast<long>(p)), static_cast<long>(L) * n);
    if (chi.is_trivial()) {
      Rational exact = Rational(count) * measure;
      out.exact.push_back(exact);
      out.coeffs.push_back(Complex(to_double(exact), 0.0));
    } else {
      out.coeffs.push_back(acc * to_double(measure));
    }
    out.stability_level.push_back(L);
  }
  return out;
}

ShellTally shell_tally(const IntPoly& f, uint64_t p, int level, const BoxSupport& phi,
                       uint64_t budget) {
  require_prime(p);
  if (level < 1) throw std::invalid_argument("shell_tally: level must be >= 1");
  const int n = f.nvars();
  BoxGrid grid = make_box_grid(phi, p, level, n);
  check_budget(grid.total(), budget);
  ShellTally out;
  out.p = p;
  out.level = level;
  out.nvars = n;
  out.shells.assign(static_cast<size_t>(level), {});
  out.deep_count = 0;
  std::vector<uint64_t> x(static_cast<size_t>(n));
  uint64_t M = grid.modulus;
  for (auto& base : grid.bases) {
    for (uint64_t idx = 0; idx < grid.free_total(); ++idx) {
      grid.decode(base, idx, x);
      uint64_t v = f.eval_mod(std::span<const uint64_t>(x.data(), x.size()), M);
      if (v == 0) {
        ++out.deep_count;
        continue;
      }
      int k = 0;
      while (v % p == 0) v /= p, ++k;
      out.shells[static_cast<size_t>(k)][v] += 1;
    }
  }
  return out;
}

JetCount jet_count(const IntPoly& f, uint64_t p, int m, bool origin_mode, uint64_t budget) {
  require_prime(p);
  if (m < 1) throw std::invalid_argument("jet_count: m must be >= 1");
  const int n = f.nvars();
  int free_digits = origin_mode ? m - 1 : m;
  uint64_t total = 1;
  for (int i = 0; i < n * free_digits; ++i) {
    total *= p;
    check_budget(total, budget);
  }
  std::vector<Jet> x(static_cast<size_t>(n), Jet(static_cast<size_t>(m), 0));
  Int count(0);
  for (uint64_t idx = 0; idx < total; ++idx) {
    uint64_t rest = idx;
    for (int v = 0; v < n; ++v)
      for (int j = origin_mode ? 1 : 0; j < m; ++j) {
        x[static_cast<size_t>(v)][static_cast<size_t>(j)] = rest % p;
        rest /= p;
      }
    bool zero = false;
    jet_eval_coeff(f, x, p, m, -1, true, &zero);
    if (zero) count += 1;
  }
  JetCount out;
  out.count = count;
  // codim = mn - log_p(count)
  Int c = count;
  int logp = 0;
  bool pure = c > 0;
  while (pure && c > 1) {
    if (c % p != 0) {
      pure = false;
      break;
    }
    c /= p;
    ++logp;
  }
  out.exact = pure;
  double lg = count > 0 ? std::log(count.convert_to<double>()) / std::log(static_cast<double>(p)) : 0.0;
  out.codim_approx = static_cast<double>(m) * n - lg;
  if (pure) out.codim = Rational(static_cast<long>(m) * n - logp);
  return out;
}

}  // namespace npzeta
