#include "npzeta/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "npzeta/ffield.hpp"
#include "npzeta/modarith.hpp"

namespace npzeta {

namespace {

RationalFunction L_factor(uint64_t p, int n, uint64_t torus_zeros) {
  // p^{-n} ( (p-1)^n - Z * p(1-t)/(p-t) )
  Rational pn = rat_pow(Rational(static_cast<long>(p)), n);
  Rational pm1n = rat_pow(Rational(static_cast<long>(p) - 1), n);
  QPoly p_minus_t{std::vector<Rational>{Rational(static_cast<long>(p)), Rational(-1)}};
  QPoly one_minus_t{std::vector<Rational>{Rational(1), Rational(-1)}};
  QPoly num = p_minus_t * pm1n - one_minus_t * (Rational(static_cast<long>(p)) * Rational(static_cast<unsigned long long>(torus_zeros)));
  QPoly den = p_minus_t * pn;
  return RationalFunction(std::move(num), std::move(den));
}

AlgReal eval_alg(const std::vector<AlgReal>& poly, const AlgReal& x) {
  AlgReal acc;
  for (size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
  return acc;
}

// multiplicity of root x in poly; poly is deflated in place
int deflate_all(std::vector<AlgReal>& poly, const AlgReal& x) {
  int mult = 0;
  auto nonzero_degree = [&] {
    int deg = -1;
    for (size_t i = 0; i < poly.size(); ++i)
      if (!poly[i].is_zero()) deg = static_cast<int>(i);
    return deg;
  };
  while (nonzero_degree() >= 1 && eval_alg(poly, x).is_zero()) {
    // synthetic division by (t - x)
    int deg = nonzero_degree();
    std::vector<AlgReal> q(static_cast<size_t>(deg));
    AlgReal carry = poly[static_cast<size_t>(deg)];
    for (int i = deg - 1; i >= 0; --i) {
      q[static_cast<size_t>(i)] = carry;
      carry = poly[static_cast<size_t>(i)] + carry * x;
    }
    poly = std::move(q);
    ++mult;
  }
  return mult;
}

struct PoleLocal {
  int order;         // pole order (can be <= 0 when no pole)
  // leading value for a prescribed normalizer exponent k:
  // lim (p^{s-s0}-1)^k Z(s); valid when k >= order
  AlgReal leading_for(int k) const {
    if (k > order) return AlgReal(p, d, Rational(0));
    if (k < order) throw std::domain_error("pole order exceeds normalizer exponent");
    return lead;
  }
  AlgReal lead;
  uint64_t p;
  int d;
};

// Analyze Z at the real point s0 = -a/b (t0 = p^{a/b}).
PoleLocal analyze_pole(const RationalFunction& Z, uint64_t p, long a, long b) {
  int d = static_cast<int>(b);
  AlgReal t0 = AlgReal::gamma_power(p, d, a);
  // substitute t = t0 / w and clear powers of w
  const QPoly& N = Z.num();
  const QPoly& D = Z.den();
  int dN = std::max(N.degree(), 0), dD = std::max(D.degree(), 0);
  std::vector<AlgReal> Pw(static_cast<size_t>(dN) + 1, AlgReal(p, d, Rational(0)));
  std::vector<AlgReal> Qw(static_cast<size_t>(dD) + 1, AlgReal(p, d, Rational(0)));
  for (int j = 0; j <= dN; ++j)
    Pw[static_cast<size_t>(dN - j)] = AlgReal(p, d, N.coeff(j)) * AlgReal::gamma_power(p, d, a * j);
  for (int j = 0; j <= dD; ++j)
    Qw[static_cast<size_t>(dD - j)] = AlgReal(p, d, D.coeff(j)) * AlgReal::gamma_power(p, d, a * j);
  // Z(t0/w) = P(w) w^{dD-dN} / Q(w); fold the monomial into P or Q
  if (dD > dN) {
    std::vector<AlgReal> shifted(static_cast<size_t>(dD - dN), AlgReal(p, d, Rational(0)));
    shifted.insert(shifted.end(), Pw.begin(), Pw.end());
    Pw = std::move(shifted);
  } else if (dN > dD) {
    std::vector<AlgReal> shifted(static_cast<size_t>(dN - dD), AlgReal(p, d, Rational(0)));
    shifted.insert(shifted.end(), Qw.begin(), Qw.end());
    Qw = std::move(shifted);
  }
  AlgReal one(p, d, Rational(1));
  int mq = deflate_all(Qw, one);
  int mp = deflate_all(Pw, one);
  PoleLocal out;
  out.p = p;
  out.d = d;
  out.order = mq - mp;
  AlgReal pv = eval_alg(Pw, one), qv = eval_alg(Qw, one);
  out.lead = pv / qv;
  return out;
}

}  // namespace

DHZeta dh_zeta(const IntPoly& f, uint64_t p, uint64_t budget) {
  if (f.is_zero()) throw std::invalid_argument("dh_zeta: zero polynomial");
  if (!f.vanishes_at_origin()) throw std::invalid_argument("dh_zeta: f(0) != 0");
  NewtonPolyhedron np = NewtonPolyhedron::build(f);
  auto scan = nondegeneracy_scan(f, np, p, budget);
  if (!scan.overall) throw std::domain_error("dh_zeta: f is degenerate at p");

  DHZeta out;
  out.p = p;
  out.nvars = f.nvars();
  out.torus_zeros_delta = torus_zero_count(f, p, budget);
  out.L_delta = L_factor(p, f.nvars(), out.torus_zeros_delta);
  RationalFunction Z = out.L_delta;
  std::set<std::pair<long, long>> pairs;
  for (auto& tau : np.faces()) {
    if (tau.is_improper) continue;
    FaceZetaPart part;
    part.face_id = tau.id;
    IntPoly ftau = face_polynomial(f, np, tau);
    part.torus_zeros = torus_zero_count(ftau, p, budget);
    part.L = L_factor(p, f.nvars(), part.torus_zeros);
    ConeGF gf = face_gf(np, tau);
    for (auto& pr : gf.denominator) pairs.insert(pr);
    part.S = evaluate_gf_t(gf, p);
    Z = Z + part.L * part.S;
    out.parts.push_back(std::move(part));
  }
  out.Z = std::move(Z);
  out.denom_pairs.assign(pairs.begin(), pairs.end());
  return out;
}

AlgValue AlgValue::of(const AlgReal& v) {
  AlgValue out;
  out.alg = v;
  out.rational = v.is_rational();
  if (out.rational) out.rat = v.coeffs().empty() ? Rational(0) : v.coeffs()[0];
  out.approx = v.approx();
  return out;
}

PoleReport zeta_poles_and_leading(const DHZeta& Z, const Rational& sigma, int kappa) {
  PoleReport rep;
  rep.sigma = sigma;
  rep.expected_order = kappa + (sigma == 1 ? 1 : 0);

  std::set<Rational> candidates;
  candidates.insert(Rational(-1));
  for (auto& [nu, N] : Z.denom_pairs)
    if (N > 0) candidates.insert(Rational(-nu) / Rational(N));
  candidates.insert(-sigma);

  for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
    const Rational& s0 = *it;
    long a = (-rat_num(s0)).convert_to<long>();
    long b = rat_den(s0).convert_to<long>();
    PoleLocal local = analyze_pole(Z.Z, Z.p, a, b);
    if (local.order >= 1) {
      PoleEntry e;
      e.s0 = s0;
      e.order = local.order;
      e.leading = AlgValue::of(local.lead);
      rep.poles.push_back(std::move(e));
      if (!rep.largest_real) rep.largest_real = s0;
      if (!rep.largest_nontrivial && s0 != -1) rep.largest_nontrivial = s0;
    }
    if (s0 == -sigma) {
      rep.actual_order = std::max(local.order, 0);
      rep.order_matches = local.order == rep.expected_order;
      if (local.order < rep.expected_order) {
        rep.leading_at_sigma = AlgValue::zero();
        rep.leading_at_sigma.approx = 0.0;
      } else if (local.order == rep.expected_order) {
        rep.leading_at_sigma = AlgValue::of(local.lead);
      } else {
        throw std::domain_error("zeta_poles_and_leading: pole order exceeds kappa + delta");
      }
    }
  }
  return rep;
}

RationalFunction poincare_from_zeta(const DHZeta& Z, int n) {
  QPoly t{std::vector<Rational>{Rational(0), Rational(1)}};
  QPoly one_minus_t{std::vector<Rational>{Rational(1), Rational(-1)}};
  RationalFunction tZ = RationalFunction(t, QPoly::one()) * Z.Z;
  RationalFunction P = (RationalFunction(Rational(1)) - tZ) / RationalFunction(one_minus_t, QPoly::one());
  return P.scale_var(rat_pow(Rational(static_cast<long>(Z.p)), n));
}

Complex exp_sum_from_zeta(const IntPoly& f, uint64_t p, uint64_t u, int m, uint64_t budget) {
  if (m < 1) throw std::invalid_argument("exp_sum_from_zeta: m must be >= 1");
  if (u % p == 0) throw std::invalid_argument("exp_sum_from_zeta: u must be a unit");
  DHZeta dh = dh_zeta(f, p, budget);

  // trivial character: Z(0) + Coeff_{t^{m-1}} of (t-q) Z / ((q-1)(1-t))
  Rational at_zero = dh.Z.eval(Rational(1));  // t = q^{-s} at s = 0
  QPoly t_minus_q{std::vector<Rational>{Rational(-static_cast<long>(p)), Rational(1)}};
  QPoly one_minus_t{std::vector<Rational>{Rational(1), Rational(-1)}};
  RationalFunction conv =
      RationalFunction(t_minus_q, one_minus_t * Rational(static_cast<long>(p) - 1)) * dh.Z;
  Rational middle = series_expand(conv, m - 1)[static_cast<size_t>(m - 1)];

  Complex total(to_double(at_zero + middle), 0.0);

  // twisted characters of conductor <= m
  ShellTally tally = shell_tally(f, p, m, BoxSupport::full(), budget);
  auto grp = std::make_shared<CharGroup>(p, m);
  double measure = 1.0;
  for (int i = 0; i < m * f.nvars(); ++i) measure /= static_cast<double>(p);
  for (uint64_t e = 1; e < grp->order(); ++e) {
    Character chi(grp, e);
    int c = chi.conductor();
    int k = m - c;
    Complex coeff(0.0, 0.0);
    for (auto& [ac, cnt] : tally.shells[static_cast<size_t>(k)])
      coeff += chi.eval(ac) * static_cast<double>(cnt);
    coeff *= measure;
    total += chi.inverse().gauss_sum() * chi.eval(u % grp->modulus()) * coeff;
  }
  return total;
}

std::optional<FitResult> fit_rational(const std::vector<Rational>& series,
                                      std::vector<std::pair<long, long>> candidates, uint64_t p) {
  constexpr int kMargin = 3;
  const int len = static_cast<int>(series.size());
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (auto& [a, b] : candidates)
    if (b < 1) throw std::invalid_argument("fit_rational: candidate factor with b < 1");
  if (candidates.size() > 20) throw std::invalid_argument("fit_rational: too many candidates");

  struct Subset {
    uint32_t mask;
    long degree;
    int count;
  };
  std::vector<Subset> subsets;
  for (uint32_t mask = 0; mask < (1u << candidates.size()); ++mask) {
    long deg = 0;
    int cnt = 0;
    for (size_t i = 0; i < candidates.size(); ++i)
      if (mask & (1u << i)) deg += candidates[i].second, ++cnt;
    subsets.push_back(Subset{mask, deg, cnt});
  }
  std::sort(subsets.begin(), subsets.end(), [](const Subset& x, const Subset& y) {
    if (x.count != y.count) return x.count < y.count;
    if (x.degree != y.degree) return x.degree < y.degree;
    return x.mask < y.mask;
  });

  bool any_testable = false;
  for (auto& sub : subsets) {
    const int num_deg_max = len - 1 - kMargin;
    if (sub.degree > num_deg_max) continue;
    any_testable = true;
    QPoly D = QPoly::one();
    std::vector<std::pair<long, long>> used;
    for (size_t i = 0; i < candidates.size(); ++i) {
      if (!(sub.mask & (1u << i))) continue;
      auto [a, b] = candidates[i];
      std::vector<Rational> fac(static_cast<size_t>(b) + 1, Rational(0));
      fac[0] = Rational(1);
      fac[static_cast<size_t>(b)] = -rat_pow(Rational(static_cast<long>(p)), a);
      D = D * QPoly(std::move(fac));
      used.emplace_back(a, b);
    }
    // multiply D by the series, truncated to len coefficients
    std::vector<Rational> prod(static_cast<size_t>(len), Rational(0));
    for (int i = 0; i <= D.degree(); ++i) {
      Rational di = D.coeff(i);
      if (di == 0) continue;
      for (int j = 0; i + j < len; ++j) prod[static_cast<size_t>(i + j)] += di * series[static_cast<size_t>(j)];
    }
    bool ok = true;
    for (int i = num_deg_max + 1; i < len; ++i)
      if (prod[static_cast<size_t>(i)] != 0) {
        ok = false;
        break;
      }
    if (!ok) continue;
    prod.resize(static_cast<size_t>(num_deg_max) + 1);
    QPoly numerator{std::move(prod)};
    FitResult res;
    res.numerator = numerator;
    res.factors = std::move(used);
    res.rf = RationalFunction(std::move(numerator), std::move(D));
    return res;
  }
  if (!any_testable)
    throw std::invalid_argument("fit_rational: series too short for the candidate set");
  return std::nullopt;
}

AsymptoticFit asymptotic_fit(const std::vector<std::pair<int, Complex>>& values,
                             const std::vector<std::pair<double, int>>& candidates) {
  if (values.size() < candidates.size() + 2)
    throw std::invalid_argument("asymptotic_fit: need at least |candidates| + 2 samples");
  const size_t rows = values.size(), cols = candidates.size();
  std::vector<std::vector<double>> X(rows, std::vector<double>(cols, 0.0));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) {
      double lam = candidates[j].first;
      int beta = candidates[j].second;
      X[i][j] = std::pow(lam, values[i].first) * std::pow(static_cast<double>(values[i].first), beta);
    }
  // normal equations, complex rhs
  std::vector<std::vector<Complex>> A(cols, std::vector<Complex>(cols + 1, Complex(0.0, 0.0)));
  for (size_t a = 0; a < cols; ++a) {
    for (size_t b = 0; b < cols; ++b) {
      double acc = 0.0;
      for (size_t i = 0; i < rows; ++i) acc += X[i][a] * X[i][b];
      A[a][b] = Complex(acc, 0.0);
    }
    Complex rhs(0.0, 0.0);
    for (size_t i = 0; i < rows; ++i) rhs += X[i][a] * values[i].second;
    A[a][cols] = rhs;
  }
  AsymptoticFit out;
  out.coefficients.assign(cols, Complex(0.0, 0.0));
  double max_diag = 0.0;
  for (size_t a = 0; a < cols; ++a) max_diag = std::max(max_diag, std::abs(A[a][a]));
  for (size_t c = 0; c < cols; ++c) {
    size_t pivot = c;
    for (size_t r = c + 1; r < cols; ++r)
      if (std::abs(A[r][c]) > std::abs(A[pivot][c])) pivot = r;
    if (std::abs(A[pivot][c]) < 1e-13 * std::max(max_diag, 1.0)) {
      out.ill_conditioned = true;
      continue;
    }
    std::swap(A[c], A[pivot]);
    for (size_t r = 0; r < cols; ++r) {
      if (r == c) continue;
      Complex f = A[r][c] / A[c][c];
      for (size_t cc = c; cc <= cols; ++cc) A[r][cc] -= f * A[c][cc];
    }
  }
  for (size_t c = 0; c < cols; ++c)
    if (std::abs(A[c][c]) >= 1e-13 * std::max(max_diag, 1.0)) out.coefficients[c] = A[c][cols] / A[c][c];
  // residual
  double res2 = 0.0;
  for (size_t i = 0; i < rows; ++i) {
    Complex pred(0.0, 0.0);
    for (size_t j = 0; j < cols; ++j) pred += out.coefficients[j] * X[i][j];
    Complex diff = pred - values[i].second;
    res2 += std::norm(diff);
  }
  out.residual = std::sqrt(res2);
  // dominant term at the largest sample index
  int mbar = 0;
  for (auto& [mi, v] : values) mbar = std::max(mbar, mi);
  double best = 0.0;
  for (size_t j = 0; j < cols; ++j) {
    double mag = std::abs(out.coefficients[j]) * std::pow(candidates[j].first, mbar) *
                 std::pow(static_cast<double>(mbar), candidates[j].second);
    if (mag > best + 1e-15 && std::abs(out.coefficients[j]) > 1e-10) {
      best = mag;
      out.dominant = static_cast<int>(j);
    }
  }
  return out;
}

}  // namespace npzeta
