#include "npzeta/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "npzeta/ffield.hpp"
#include "npzeta/modarith.hpp"

namespace npzeta {

namespace {

njson rat_json(const Rational& r) {
  return njson{{"num", rat_num(r).str()}, {"den", rat_den(r).str()}};
}

double trend_ratio(double max_small, double max_large) {
  if (max_small <= 0.0) return max_large <= 1e-12 ? 1.0 : std::numeric_limits<double>::infinity();
  return max_large / max_small;
}

constexpr uint64_t kSmallPrimeMax = 11;

}  // namespace

njson VerificationReport::to_json() const {
  njson j;
  j["check"] = check;
  j["params"] = params;
  j["pass"] = pass;
  j["tolerance"] = tolerance;
  j["fitted"] = fitted;
  j["notes"] = notes;
  j["records"] = records;
  return j;
}

std::string VerificationReport::records_csv() const {
  std::ostringstream os;
  if (records.empty()) return "";
  std::vector<std::string> cols;
  for (auto it = records[0].begin(); it != records[0].end(); ++it) cols.push_back(it.key());
  for (size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << "\n";
  for (auto& rec : records) {
    for (size_t i = 0; i < cols.size(); ++i) {
      os << (i ? "," : "");
      auto it = rec.find(cols[i]);
      if (it == rec.end()) continue;
      if (it->is_string())
        os << it->get<std::string>();
      else
        os << it->dump();
    }
    os << "\n";
  }
  return os.str();
}

VerificationReport nondegeneracy_check(const IntPoly& f, uint64_t p, uint64_t budget) {
  VerificationReport rep;
  rep.check = "nondegeneracy";
  rep.params = {{"poly", f.str()}, {"p", p}};
  NewtonPolyhedron np = NewtonPolyhedron::build(f);
  auto scan = nondegeneracy_scan(f, np, p, budget);
  for (auto& v : scan.verdicts) {
    const Face& tau = np.faces()[static_cast<size_t>(v.face_id)];
    njson rec;
    rec["face_id"] = v.face_id;
    rec["dim"] = tau.dim;
    rec["compact"] = tau.is_compact;
    rec["improper"] = tau.is_improper;
    rec["nondegenerate"] = v.nondegenerate;
    rec["torus_critical_points"] = v.torus_critical_points;
    rep.records.push_back(std::move(rec));
  }
  rep.fitted["newton_preserved_mod_p"] = scan.newton_preserved;
  rep.pass = scan.overall;
  if (!scan.newton_preserved) rep.notes.push_back("Newton polyhedron changes after reduction mod p");
  return rep;
}

Complex decomposition_exp_sum(const IntPoly& f, const NewtonPolyhedron& np, uint64_t p, int m,
                              uint64_t budget) {
  const int n = f.nvars();
  double unit_measure = std::pow(1.0 - 1.0 / static_cast<double>(p), n);
  double torus_size = std::pow(static_cast<double>(p) - 1.0, n);
  Complex acc(0.0, 0.0);
  for (auto& tau : np.faces()) {
    Rational A(0), B(0);
    if (tau.is_improper) {
      // only a = 0 has F(a) = Delta: N(0) = 0, nu(0) = 0
      if (m <= 0) A = 1;
      if (m == 1) B = 1;
    } else {
      auto [At, Bt] = truncated_cone_sums(np, tau, p, m);
      A = At;
      B = Bt;
    }
    Complex term(to_double(A), 0.0);
    if (B != 0) {
      IntPoly ftau = face_polynomial(f, np, tau);
      Complex T = torus_char_sum(ftau, p, budget);
      term += T * (to_double(B) / torus_size);
    }
    acc += term;
  }
  return acc * unit_measure;
}

VerificationReport ds_decomposition_check(const IntPoly& f, uint64_t p, int m, double tolerance,
                                          uint64_t budget) {
  if (m < 2) throw std::invalid_argument("ds_decomposition_check: m must be >= 2");
  VerificationReport rep;
  rep.check = "denef-sperber-decomposition";
  rep.params = {{"poly", f.str()}, {"p", p}, {"m", m}};
  rep.tolerance = tolerance;
  NewtonPolyhedron np = NewtonPolyhedron::build(f);
  auto scan = nondegeneracy_scan(f, np, p, budget);
  if (!scan.overall) throw std::domain_error("ds_decomposition_check: f is degenerate at p");
  Complex lhs = exp_sum(f, p, m, BoxSupport::full(), budget);
  Complex rhs = decomposition_exp_sum(f, np, p, m, budget);
  double diff = std::abs(lhs - rhs);
  njson rec;
  rec["p"] = p;
  rec["m"] = m;
  rec["lhs_re"] = lhs.real();
  rec["lhs_im"] = lhs.imag();
  rec["rhs_re"] = rhs.real();
  rec["rhs_im"] = rhs.imag();
  rec["abs_diff"] = diff;
  rep.records.push_back(std::move(rec));
  rep.pass = diff <= tolerance;
  return rep;
}

VerificationReport bound_harness(const IntPoly& f, const std::vector<uint64_t>& primes,
                                 const std::vector<int>& m_range, const Rational& sigma, int kappa,
                                 const BoxSupport& phi, double slack, uint64_t budget, int threads) {
  VerificationReport rep;
  rep.check = "bound-harness";
  rep.params = {{"poly", f.str()},
                {"sigma", rat_str(sigma)},
                {"kappa", kappa},
                {"support", phi.str()},
                {"slack", slack}};
  bool has_m1 = std::any_of(m_range.begin(), m_range.end(), [](int m) { return m == 1; });
  if (has_m1 && !support_hyperplane(f).has_value())
    throw std::invalid_argument("bound_harness: m = 1 requires the support on a hyperplane off the origin");

  std::optional<NewtonPolyhedron> np;
  double sig = to_double(sigma);
  double max_small = 0.0, max_large = 0.0;
  for (uint64_t p : primes) {
    for (int m : m_range) {
      // enumeration size of the box
      long double size = phi.kind == BoxSupport::Kind::Full
                             ? powl(static_cast<long double>(p), static_cast<long double>(m) * f.nvars())
                             : powl(static_cast<long double>(p),
                                    static_cast<long double>(m - 1) * f.nvars());
      Complex E;
      std::string engine;
      if (size <= static_cast<long double>(budget)) {
        E = exp_sum(f, p, m, phi, budget, threads);
        engine = "enumeration";
      } else if (phi.kind == BoxSupport::Kind::Full) {
        if (!np) np = NewtonPolyhedron::build(f);
        auto scan = nondegeneracy_scan(f, *np, p, budget);
        if (!scan.overall) {
          rep.notes.push_back("skipped p=" + std::to_string(p) + ", m=" + std::to_string(m) +
                              ": degenerate and over budget");
          continue;
        }
        E = decomposition_exp_sum(f, *np, p, m, budget);
        engine = "newton-decomposition";
      } else {
        throw BudgetError(static_cast<uint64_t>(size), budget);
      }
      double C = std::abs(E) * std::pow(static_cast<double>(p), sig * m) /
                 std::pow(static_cast<double>(m), kappa - 1);
      njson rec;
      rec["p"] = p;
      rec["m"] = m;
      rec["absE"] = std::abs(E);
      rec["C"] = C;
      rec["engine"] = engine;
      rep.records.push_back(std::move(rec));
      if (p <= kSmallPrimeMax)
        max_small = std::max(max_small, C);
      else
        max_large = std::max(max_large, C);
    }
  }
  double ratio = trend_ratio(max_small, max_large);
  rep.fitted = {{"max_small", max_small}, {"max_large", max_large}, {"ratio", ratio}};
  rep.pass = max_large == 0.0 || ratio <= slack;
  return rep;
}

VerificationReport ff_bound_check_thm214(const IntPoly& f, const std::vector<uint64_t>& primes,
                                         double slack, uint64_t budget) {
  VerificationReport rep;
  rep.check = "ffield-thm214";
  rep.params = {{"poly", f.str()}, {"slack", slack}};
  auto hyp = support_hyperplane(f);
  if (!hyp) throw std::invalid_argument("thm214: support not on a hyperplane off the origin");
  NewtonPolyhedron np = NewtonPolyhedron::build(f);
  SigmaKappa sk = np.sigma_kappa();
  double sig = to_double(sk.sigma);
  rep.params["sigma"] = rat_str(sk.sigma);
  double max_small = 0.0, max_large = 0.0;
  for (uint64_t p : primes) {
    Complex T = torus_char_sum(f, p, budget);
    double torus = std::pow(static_cast<double>(p) - 1.0, f.nvars());
    double c = std::abs(T) / torus * std::pow(static_cast<double>(p), sig);
    njson rec;
    rec["p"] = p;
    rec["normalized_sum"] = std::abs(T) / torus;
    rec["c"] = c;
    rep.records.push_back(std::move(rec));
    (p <= kSmallPrimeMax ? max_small : max_large) = std::max(p <= kSmallPrimeMax ? max_small : max_large, c);
  }
  double ratio = trend_ratio(max_small, max_large);
  rep.fitted = {{"c_small", max_small}, {"c_large", max_large}, {"ratio", ratio}};
  rep.pass = max_large == 0.0 || ratio <= slack;
  return rep;
}

VerificationReport ff_bound_check_lemma252(const IntPoly& f_tau, const std::vector<uint64_t>& primes,
                                           double slack, uint64_t budget) {
  VerificationReport rep;
  rep.check = "ffield-lemma252";
  rep.params = {{"poly", f_tau.str()}, {"slack", slack}};
  NewtonPolyhedron np = NewtonPolyhedron::build(f_tau);
  SigmaKappa sk = np.sigma_kappa();
  double sig = to_double(sk.sigma);
  const int n = f_tau.nvars();
  rep.params["sigma"] = rat_str(sk.sigma);
  double max_small = 0.0, max_large = 0.0;
  for (uint64_t p : primes) {
    uint64_t zeros = torus_zero_count(f_tau, p, budget);
    double lhs = std::abs(static_cast<double>(p) * static_cast<double>(zeros) -
                          std::pow(static_cast<double>(p) - 1.0, n));
    double v = lhs * std::pow(static_cast<double>(p), sig - n - 1);
    njson rec;
    rec["p"] = p;
    rec["torus_zeros"] = zeros;
    rec["normalized_defect"] = v;
    rep.records.push_back(std::move(rec));
    (p <= kSmallPrimeMax ? max_small : max_large) = std::max(p <= kSmallPrimeMax ? max_small : max_large, v);
  }
  double ratio = trend_ratio(max_small, max_large);
  rep.fitted = {{"defect_small", max_small}, {"defect_large", max_large}, {"ratio", ratio}};
  rep.pass = max_large == 0.0 || ratio <= slack;
  return rep;
}

VerificationReport ff_bound_check_weil(int d_max, const std::vector<uint64_t>& primes,
                                       double tolerance) {
  VerificationReport rep;
  rep.check = "ffield-weil";
  rep.params = {{"d_max", d_max}};
  rep.tolerance = tolerance;
  rep.pass = true;
  for (uint64_t p : primes) {
    for (int d = 1; d <= d_max; ++d) {
      double bound = (d - 1) * std::sqrt(static_cast<double>(p)) + 1.0;
      double worst = 0.0;
      uint64_t worst_xi = 0;
      for (uint64_t xi = 1; xi < p; ++xi) {
        double v = std::abs(power_char_sum(static_cast<uint64_t>(d), xi, p));
        if (v > worst) worst = v, worst_xi = xi;
        if (v > bound + tolerance) rep.pass = false;
      }
      njson rec;
      rec["p"] = p;
      rec["d"] = d;
      rec["max_abs_sum"] = worst;
      rec["xi_at_max"] = worst_xi;
      rec["bound"] = bound;
      rep.records.push_back(std::move(rec));
    }
  }
  return rep;
}

VerificationReport ff_bound_check_gauss(const std::vector<uint64_t>& primes, double tolerance) {
  VerificationReport rep;
  rep.check = "ffield-gauss";
  rep.tolerance = tolerance;
  rep.pass = true;
  for (uint64_t p : primes) {
    auto table = character_table(p, 1);
    double expected = std::sqrt(static_cast<double>(p)) / (static_cast<double>(p) - 1.0);
    double worst = 0.0;
    for (auto& entry : table) {
      if (entry.trivial) continue;
      worst = std::max(worst, std::abs(std::abs(entry.gauss) - expected));
    }
    njson rec;
    rec["p"] = p;
    rec["characters"] = table.size();
    rec["expected_abs"] = expected;
    rec["max_deviation"] = worst;
    rep.records.push_back(std::move(rec));
    if (worst > tolerance) rep.pass = false;
  }
  return rep;
}

VerificationReport cluckers_scan(const IntPoly& f, long R) {
  VerificationReport rep;
  rep.check = "cluckers-inequality";
  rep.params = {{"poly", f.str()}, {"R", R}};
  NewtonPolyhedron np = NewtonPolyhedron::build(f);
  SigmaKappa sk = np.sigma_kappa();
  const Rational& sigma = sk.sigma;
  std::map<int, Rational> face_sigma_cache;
  for (auto& tau : np.faces()) face_sigma_cache[tau.id] = np.face_sigma(tau);

  const int n = f.nvars();
  uint64_t checked = 0, violations = 0;
  std::vector<long> a(static_cast<size_t>(n), 0);
  for (;;) {
    auto w = np.weight(a);
    const Rational& st = face_sigma_cache[w.face_id];
    Rational lhs(w.nu);
    Rational rhs = sigma * Rational(w.N) + sigma - st;
    ++checked;
    if (lhs < rhs) {
      ++violations;
      njson rec;
      std::ostringstream os;
      for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
      rec["a"] = os.str();
      rec["nu"] = w.nu;
      rec["N"] = w.N;
      rec["face_sigma"] = rat_str(st);
      rec["rhs"] = rat_str(rhs);
      rep.records.push_back(std::move(rec));
    }
    int i = n - 1;
    while (i >= 0) {
      if (++a[static_cast<size_t>(i)] <= R) break;
      a[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
  }
  rep.fitted = {{"points_checked", checked}, {"violations", violations}, {"sigma", rat_str(sigma)}};
  rep.pass = violations == 0;
  return rep;
}

VerificationReport sigma_property_check(uint64_t seed, int cases, uint64_t budget) {
  VerificationReport rep;
  rep.check = "sigma-properties";
  rep.params = {{"seed", seed}, {"cases", cases}};
  std::mt19937_64 rng(seed);

  auto random_poly = [&rng](int max_vars) {
    std::uniform_int_distribution<int> nv(1, max_vars);
    int n = nv(rng);
    IntPoly f(n);
    std::uniform_int_distribution<int> terms(2, 5), expd(0, 5), coeff(1, 9);
    int t = terms(rng);
    for (int i = 0; i < t; ++i) {
      Exponents e(static_cast<size_t>(n), 0);
      int total = 0;
      for (int v = 0; v < n; ++v) {
        e[static_cast<size_t>(v)] = expd(rng);
        total += e[static_cast<size_t>(v)];
      }
      if (total == 0) e[0] = 1;
      f.add_term(e, coeff(rng));
    }
    return f;
  };
  auto sigma_of = [](const IntPoly& f) { return NewtonPolyhedron::build(f).sigma_kappa().sigma; };

  bool all_ok = true;
  for (int c = 0; c < cases; ++c) {
    IntPoly f = random_poly(3), g = random_poly(3);
    Rational sf = sigma_of(f), sg = sigma_of(g);
    Rational s_sum = sigma_of(IntPoly::disjoint_sum(f, g));
    Rational s_prod = sigma_of(IntPoly::disjoint_product(f, g));
    bool ok_sum = s_sum == sf + sg;
    bool ok_prod = s_prod == std::min(sf, sg);
    bool ok_ident = true;
    if (f.nvars() >= 2) {
      IntPoly fi = f.identify_last_two_vars();
      ok_ident = sigma_of(fi) <= sf;
    }
    // critical-locus bound, heuristic dimension from point counts
    std::string lemma222 = "skipped";
    if (is_nondegenerate_at(f, 11, budget)) {
      std::vector<uint64_t> probe{11, 13, 17, 19, 23};
      double dim_acc = 0.0;
      int used = 0;
      bool all_empty = true;
      for (uint64_t p : probe) {
        uint64_t cnt = critical_point_count_mod_p(f, p, budget);
        if (cnt > 0) {
          all_empty = false;
          dim_acc += std::log(static_cast<double>(cnt)) / std::log(static_cast<double>(p));
          ++used;
        }
      }
      if (all_empty) {
        lemma222 = "holds (empty critical locus)";
      } else {
        long delta = std::lround(dim_acc / used);
        bool bound = sf <= Rational(f.nvars() - delta) / 2;
        lemma222 = bound ? "holds (heuristic delta)" : "violated (heuristic delta)";
        if (!bound) all_ok = false;
      }
    }
    njson rec;
    rec["case"] = c;
    rec["f"] = f.str();
    rec["g"] = g.str();
    rec["sigma_f"] = rat_str(sf);
    rec["sigma_g"] = rat_str(sg);
    rec["additivity"] = ok_sum;
    rec["product_min"] = ok_prod;
    rec["identification_monotone"] = ok_ident;
    rec["critical_locus_bound"] = lemma222;
    rep.records.push_back(std::move(rec));
    if (!ok_sum || !ok_prod || !ok_ident) all_ok = false;
  }
  rep.pass = all_ok;
  return rep;
}

VerificationReport numerical_conjecture_check(const NumericalData& data) {
  VerificationReport rep;
  rep.check = "numerical-conjecture";
  njson entries = njson::array();
  for (auto& [N, nu] : data.entries) entries.push_back({{"N", N}, {"nu", nu}});
  rep.params = {{"entries", entries}, {"exponent", rat_str(data.exponent)}};
  rep.pass = true;
  for (size_t w = 0; w < data.witnesses.size(); ++w) {
    const auto& wit = data.witnesses[w];
    if (wit.d <= 1) throw std::invalid_argument("numerical_conjecture_check: d must exceed 1");
    Rational rhs(0);
    for (int idx : wit.indices) {
      if (idx < 1 || idx > static_cast<int>(data.entries.size()))
        throw std::invalid_argument("numerical_conjecture_check: witness index out of range");
      auto [N, nu] = data.entries[static_cast<size_t>(idx - 1)];
      if (N % wit.d != 0)
        throw std::invalid_argument("numerical_conjecture_check: d does not divide N_i");
      Rational sigma_i = Rational(nu) / Rational(N);
      rhs += Rational(N) * (sigma_i - data.exponent);
    }
    Rational lhs = data.exponent - Rational(1, 2);
    bool holds = lhs <= rhs;
    njson rec;
    rec["witness"] = w;
    rec["d"] = wit.d;
    rec["lhs"] = rat_str(lhs);
    rec["rhs"] = rat_str(rhs);
    rec["holds"] = holds;
    rec["equality"] = lhs == rhs;
    rep.records.push_back(std::move(rec));
    if (!holds) rep.pass = false;
  }
  return rep;
}

VerificationReport dh_conjecture_trend(const IntPoly& f, const std::vector<uint64_t>& primes,
                                       double slack, uint64_t budget) {
  VerificationReport rep;
  rep.check = "dh-leading-trend";
  rep.params = {{"poly", f.str()}, {"slack", slack}};
  NewtonPolyhedron np = NewtonPolyhedron::build(f);
  SigmaKappa sk = np.sigma_kappa();
  rep.params["sigma"] = rat_str(sk.sigma);
  rep.params["kappa"] = sk.kappa;
  double expo = std::max(1.0, to_double(sk.sigma)) - 1.0;
  double max_small = 0.0, max_large = 0.0;
  for (uint64_t p : primes) {
    njson rec;
    rec["p"] = p;
    try {
      DHZeta Z = dh_zeta(f, p, budget);
      PoleReport pr = zeta_poles_and_leading(Z, sk.sigma, sk.kappa);
      double lead = std::abs(pr.leading_at_sigma.approx);
      double v = lead * std::pow(static_cast<double>(p), expo);
      rec["leading_abs"] = lead;
      if (pr.leading_at_sigma.rational) rec["leading"] = rat_json(pr.leading_at_sigma.rat);
      rec["order"] = pr.actual_order;
      rec["normalized"] = v;
      (p <= kSmallPrimeMax ? max_small : max_large) =
          std::max(p <= kSmallPrimeMax ? max_small : max_large, v);
    } catch (const std::domain_error&) {
      rec["skipped"] = "degenerate at p";
      rep.notes.push_back("skipped degenerate prime " + std::to_string(p));
    }
    rep.records.push_back(std::move(rec));
  }
  double ratio = trend_ratio(max_small, max_large);
  rep.fitted = {{"max_small", max_small}, {"max_large", max_large}, {"ratio", ratio}};
  rep.pass = max_large == 0.0 || ratio <= slack;
  return rep;
}

VerificationReport shifted_bound_harness(const IntPoly& f,
                                         const std::vector<std::vector<long long>>& points,
                                         const std::vector<uint64_t>& primes,
                                         const std::vector<int>& m_range,
                                         const std::vector<std::optional<Rational>>& exponents,
                                         double slack, uint64_t budget) {
  VerificationReport rep;
  rep.check = "shifted-bound-harness";
  rep.params = {{"poly", f.str()}, {"points", points.size()}, {"slack", slack}};
  const int n = f.nvars();

  // integer critical points in a small box, found exactly
  const long B = 10;
  std::vector<std::vector<Int>> crit;
  {
    std::vector<IntPoly> grads;
    for (int v = 0; v < n; ++v) grads.push_back(f.derivative(v));
    std::vector<long> c(static_cast<size_t>(n), -B);
    for (;;) {
      std::vector<Int> x(c.begin(), c.end());
      bool zero = true;
      for (auto& g : grads)
        if (g.eval(x) != 0) {
          zero = false;
          break;
        }
      if (zero) crit.push_back(x);
      int i = n - 1;
      while (i >= 0) {
        if (++c[static_cast<size_t>(i)] <= B) break;
        c[static_cast<size_t>(i)] = -B;
        --i;
      }
      if (i < 0) break;
    }
  }

  double max_small = 0.0, max_large = 0.0;
  for (size_t yi = 0; yi < points.size(); ++yi) {
    const auto& y = points[yi];
    if (static_cast<int>(y.size()) != n) throw std::invalid_argument("shifted_bound_harness: point arity");
    for (uint64_t p : primes) {
      Rational sigma_yp;
      bool newton_only = false;
      if (yi < exponents.size() && exponents[yi]) {
        sigma_yp = *exponents[yi];
      } else {
        // candidates: y itself plus integer critical points congruent to y mod p
        std::vector<std::vector<Int>> cands;
        cands.emplace_back(y.begin(), y.end());
        for (auto& cp : crit) {
          bool congruent = true;
          for (int v = 0; v < n; ++v) {
            Int diff = cp[static_cast<size_t>(v)] - Int(y[static_cast<size_t>(v)]);
            if (diff % static_cast<long>(p) != 0) {
              congruent = false;
              break;
            }
          }
          if (congruent) cands.push_back(cp);
        }
        bool have = false;
        for (auto& cand : cands) {
          IntPoly g = f.shifted(cand);
          Int g0 = g.coeff(Exponents(static_cast<size_t>(n), 0));
          g.add_term(Exponents(static_cast<size_t>(n), 0), -g0);  // drop f(y')
          if (g.is_zero()) continue;
          SigmaKappa sk = NewtonPolyhedron::build(g).sigma_kappa();
          Rational cand_sigma = sk.lct;  // min{1, sigma}
          if (!is_nondegenerate_at(g, p, budget)) newton_only = true;
          if (!have || cand_sigma < sigma_yp) sigma_yp = cand_sigma, have = true;
        }
        if (!have) throw std::invalid_argument("shifted_bound_harness: exponent unavailable");
      }
      for (int m : m_range) {
        Complex E = exp_sum(f, p, m, BoxSupport::shifted(y), budget);
        double C = std::abs(E) * std::pow(static_cast<double>(p), to_double(sigma_yp) * m) /
                   std::pow(static_cast<double>(m), n - 1);
        njson rec;
        std::ostringstream ys;
        for (size_t i = 0; i < y.size(); ++i) ys << (i ? "," : "") << y[i];
        rec["y"] = ys.str();
        rec["p"] = p;
        rec["m"] = m;
        rec["sigma_yp"] = rat_str(sigma_yp);
        rec["absE"] = std::abs(E);
        rec["C"] = C;
        rec["newton_bound_only"] = newton_only;
        rep.records.push_back(std::move(rec));
        (p <= kSmallPrimeMax ? max_small : max_large) =
            std::max(p <= kSmallPrimeMax ? max_small : max_large, C);
      }
    }
  }
  double ratio = trend_ratio(max_small, max_large);
  rep.fitted = {{"max_small", max_small}, {"max_large", max_large}, {"ratio", ratio}};
  rep.pass = max_large == 0.0 || ratio <= slack;
  return rep;
}

}  // namespace npzeta
