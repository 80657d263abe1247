// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exit code is the number of
// failures.

#include <chrono>
#include <random>
#include <cmath>
#include <iomanip>
#include <iostream>

#include "npzeta/eqrel.hpp"
#include "npzeta/ffield.hpp"
#include "npzeta/json_io.hpp"
#include "npzeta/modarith.hpp"

using namespace npzeta;

namespace {

IntPoly poly(const std::string& s, int n) { return IntPoly::parse(s, n); }

struct Gate {
  int failures = 0;
  void report(int id, const std::string& label, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << std::setw(2) << id << ": " << label;
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << std::endl;
    if (!pass) ++failures;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<Rational> trivial_series(const IntPoly& f, uint64_t p, int K) {
  auto grp = std::make_shared<CharGroup>(p, 1);
  return zeta_coeffs(f, p, Character(grp, 0), K).exact;
}

}  // namespace

int main() {
  Gate gate;
  std::cout << "npzeta acceptance suite" << std::endl;

  // 1. zeta function series against the counting coefficients, exactly
  {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    std::string detail;
    std::vector<IntPoly> corpus{poly("x1^2", 1), poly("x1*x2", 2), poly("x1^2 + x2^2", 2),
                                poly("x1^2 + x2^3", 2)};
    for (auto& f : corpus) {
      for (uint64_t p : {5ull, 7ull, 11ull}) {
        DHZeta Z = dh_zeta(f, p);
        auto series = series_expand(Z.Z, 4);
        auto exact = trivial_series(f, p, 4);
        for (int k = 0; k <= 4; ++k)
          if (series[static_cast<size_t>(k)] != exact[static_cast<size_t>(k)]) pass = false;
      }
    }
    double dt = seconds_since(t0);
    if (dt >= 60.0) pass = false;
    gate.report(1, "zeta series equals counting coefficients (exact, 5 terms)", pass,
                "runtime " + std::to_string(dt) + "s < 60s");
  }

  // 2. exponential sums reassembled from the zeta side
  {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = true;
    double worst = 0.0;
    for (auto& f : {poly("x1^2", 1), poly("x1^2 + x2^3", 2)}) {
      for (uint64_t u : {1ull, 2ull}) {
        for (int m = 1; m <= 3; ++m) {
          Complex direct = exp_sum(f.scaled(Int(u)), 5, m);
          Complex viaz = exp_sum_from_zeta(f, 5, u, m);
          worst = std::max(worst, std::abs(direct - viaz));
        }
      }
    }
    if (worst > 1e-8) pass = false;
    double dt = seconds_since(t0);
    if (dt >= 120.0) pass = false;
    gate.report(2, "character-sum identity |direct - zeta route| <= 1e-8", pass,
                "max diff " + std::to_string(worst));
  }

  // 3. face decomposition of the exponential sum
  {
    bool pass = true;
    double worst = 0.0;
    for (uint64_t p : {7ull, 11ull}) {
      for (int m = 2; m <= 4; ++m) {
        uint64_t budget = p == 11 && m == 4 ? 300'000'000ull : default_budget();
        VerificationReport rep = ds_decomposition_check(poly("x1^2 + x2^3", 2), p, m, 1e-9, budget);
        worst = std::max(worst, rep.records[0]["abs_diff"].get<double>());
        if (!rep.pass) pass = false;
      }
    }
    gate.report(3, "face decomposition identity |LHS - RHS| <= 1e-9", pass,
                "max diff " + std::to_string(worst));
  }

  // 4. polyhedral invariants and jet ratios
  {
    bool pass = true;
    auto cusp = NewtonPolyhedron::build(poly("x1^2 + x2^3", 2)).sigma_kappa();
    if (!(cusp.sigma == Rational(5, 6) && cusp.kappa == 1)) pass = false;
    auto square = NewtonPolyhedron::build(poly("x1^2", 1)).sigma_kappa();
    if (!(square.sigma == Rational(1, 2))) pass = false;
    auto hyper = NewtonPolyhedron::build(poly("x1*x2", 2)).sigma_kappa();
    if (!(hyper.sigma == Rational(1) && hyper.kappa == 2)) pass = false;
    Rational inf(1);
    for (int m = 1; m <= 8; ++m) {
      JetCount j = jet_count(poly("x1^2", 1), 5, m, true);
      if (!j.exact || j.codim != Rational((m + 1) / 2)) pass = false;
      Rational r = j.codim / m;
      if (r < inf) inf = r;
    }
    if (inf != Rational(1, 2)) pass = false;
    gate.report(4, "sigma/kappa invariants and the jet-ratio infimum 1/2", pass);
  }

  // 5. Poincare series fit and the zeta route
  {
    bool pass = true;
    PoincareCoeffs pc = poincare_coeffs(poly("x1^2", 1), 5, 12);
    std::vector<Rational> first8(pc.values.begin(), pc.values.begin() + 8);
    auto fit = fit_rational(first8, {{1, 2}, {0, 1}}, 5);
    if (!fit || fit->factors != std::vector<std::pair<long, long>>{{1, 2}}) pass = false;
    if (fit) {
      RationalFunction expect(QPoly{std::vector<Rational>{1, 1}},
                              QPoly{std::vector<Rational>{1, 0, -5}});
      if (!(fit->rf == expect)) pass = false;
      auto ext = series_expand(fit->rf, 12);
      for (int m = 8; m <= 12; ++m)
        if (ext[static_cast<size_t>(m)] != Rational(pc.values[static_cast<size_t>(m)])) pass = false;
    }
    for (auto& f : {poly("x1^2", 1), poly("x1*x2", 2), poly("x1^2 + x2^2", 2), poly("x1^2 + x2^3", 2)}) {
      for (uint64_t p : {5ull, 7ull}) {
        DHZeta Z = dh_zeta(f, p);
        auto series = series_expand(poincare_from_zeta(Z, f.nvars()), 5);
        PoincareCoeffs direct = poincare_coeffs(f, p, 5);
        for (int m = 0; m <= 5; ++m)
          if (series[static_cast<size_t>(m)] != Rational(direct.values[static_cast<size_t>(m)])) pass = false;
      }
    }
    gate.report(5, "Poincare fit (1+T)/(1-pT^2) for x^2, zeta route matches counts", pass);
  }

  // 6. partition identity and the lattice enumeration oracle
  {
    bool pass = true;
    std::mt19937_64 rng(2026);
    auto random_support_poly = [&rng]() {
      int n = 1 + static_cast<int>(rng() % 3);
      IntPoly f(n);
      int t = 2 + static_cast<int>(rng() % 4);
      for (int i = 0; i < t; ++i) {
        Exponents e(static_cast<size_t>(n), 0);
        int total = 0;
        for (auto& v : e) {
          v = static_cast<int>(rng() % 5);
          total += v;
        }
        if (total == 0) e[0] = 1;
        f.add_term(e, 1);
      }
      return f;
    };
    for (int trial = 0; trial < 20; ++trial) {
      IntPoly f = random_support_poly();
      NewtonPolyhedron np = NewtonPolyhedron::build(f);
      for (uint64_t q : {2ull, 3ull, 5ull}) {
        Rational total(1);
        for (auto& tau : np.faces()) {
          if (tau.is_improper) continue;
          total += evaluate_gf_at1(face_gf(np, tau), q);
        }
        if (total != rat_pow(Rational(1) - Rational(1, static_cast<long>(q)), -f.nvars())) pass = false;
      }
      // enumeration oracle at |a|_inf <= 12 (<= 6 in three variables)
      long B = f.nvars() >= 3 ? 6 : 12;
      int n = f.nvars();
      std::map<std::vector<long>, int> covered;
      for (auto& tau : np.faces()) {
        if (tau.is_improper) continue;
        auto key = std::make_pair(tau.touching, tau.free_dirs);
        std::set<std::vector<long>> expect;
        std::vector<long> a(static_cast<size_t>(n), 0);
        std::function<void(int)> rec = [&](int c) {
          if (c == n) {
            bool zero = std::all_of(a.begin(), a.end(), [](long v) { return v == 0; });
            if (!zero && np.first_meet_key(a) == key) expect.insert(a);
            return;
          }
          for (long v = 0; v <= B; ++v) {
            a[static_cast<size_t>(c)] = v;
            rec(c + 1);
          }
        };
        rec(0);
        std::set<std::vector<long>> got;
        size_t raw = 0;
        for (auto& cone : decompose_face_cone(np, tau)) {
          auto pts = cone_lattice_points_in_box(cone, B);
          raw += pts.size();
          for (auto& pt : pts) got.insert(pt);
        }
        if (raw != got.size() || got != expect) pass = false;
        for (auto& pt : got) covered[pt] += 1;
      }
      for (auto& [pt, cnt] : covered)
        if (cnt != 1) pass = false;
    }
    gate.report(6, "partition identity and cone/lattice enumeration agree (20 random supports)", pass);
  }

  // 7. Gauss magnitudes and the Weil bound
  {
    bool pass = true;
    for (uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull}) {
      double expect = std::sqrt(static_cast<double>(p)) / (static_cast<double>(p) - 1.0);
      for (auto& e : character_table(p, 1)) {
        if (e.trivial) continue;
        if (std::abs(std::abs(e.gauss) - expect) > 1e-9) pass = false;
      }
    }
    for (uint64_t p = 2; p <= 101; ++p) {
      if (!is_prime_u64(p)) continue;
      for (int d = 1; d <= 6; ++d) {
        double bound = (d - 1) * std::sqrt(static_cast<double>(p)) + 1.0;
        for (uint64_t xi = 1; xi < p; ++xi)
          if (std::abs(power_char_sum(static_cast<uint64_t>(d), xi, p)) > bound + 1e-9) pass = false;
      }
    }
    gate.report(7, "Gauss magnitudes sqrt(p)/(p-1) and the power-sum bound (d-1)sqrt(p)+1", pass);
  }

  // 8. uniform bound harness
  {
    std::vector<uint64_t> primes{5, 7, 11, 13, 17, 19, 23, 29, 31};
    VerificationReport cusp = bound_harness(poly("x1^2 + x2^3", 2), primes, {2, 3, 4, 5},
                                            Rational(5, 6), 1);
    bool pass = cusp.pass;
    VerificationReport square = bound_harness(poly("x1^2", 1), primes, {2, 3, 4, 5}, Rational(1, 2), 1);
    for (auto& rec : square.records)
      if (rec["m"].get<int>() % 2 == 0 && std::abs(rec["C"].get<double>() - 1.0) > 1e-9) pass = false;
    double ratio = cusp.fitted["ratio"].get<double>();
    gate.report(8, "bound harness: large/small prime ratio <= 1.5, C(x^2) = 1 at even m", pass,
                "cusp ratio " + std::to_string(ratio));
  }

  // 9. residue-field dependence of the sums
  {
    bool pass = true;
    double worst = 0.0;
    for (auto& f : {poly("x1^2", 1), poly("x1*x2", 2), poly("x1^2 + x2^3", 2)}) {
      for (uint64_t p : {5ull, 7ull, 11ull}) {
        for (int m = 1; m <= 3; ++m) {
          double diff = std::abs(exp_sum(f, p, m) - exp_sum_laurent(f, p, m));
          worst = std::max(worst, diff);
        }
      }
    }
    if (worst > 1e-9) pass = false;
    gate.report(9, "p-adic and Laurent-series engines agree within 1e-9", pass,
                "max diff " + std::to_string(worst));
  }

  // 10. uniform rationality of the class-counting series
  {
    bool pass = true;
    std::vector<uint64_t> primes{3, 5, 7};
    if (!uniform_rationality_report(EqRelFamily::congruence(1), primes, 6).pass) pass = false;
    if (!uniform_rationality_report(EqRelFamily::solutions(poly("x1^2", 1)), primes, 8).pass) pass = false;
    if (!uniform_rationality_report(EqRelFamily::image(poly("x1", 1)), primes, 6).pass) pass = false;
    gate.report(10, "equivalence-class series fit with prime-independent factor sets", pass);
  }

  // 11. numerical conjecture checker regression
  {
    bool pass = true;
    NumericalData equality{{{2, 1}}, {{{1}, 2}}, Rational(1, 2)};
    VerificationReport r1 = numerical_conjecture_check(equality);
    if (!r1.pass || r1.records[0]["equality"] != true) pass = false;
    NumericalData strict{{{3, 1}}, {{{1}, 3}}, Rational(1, 3)};
    VerificationReport r2 = numerical_conjecture_check(strict);
    if (!r2.pass || r2.records[0]["equality"] != false) pass = false;
    NumericalData violated{{{2, 1}}, {{{1}, 2}}, Rational(9, 10)};
    VerificationReport r3 = numerical_conjecture_check(violated);
    if (r3.pass || r3.records[0]["holds"] != false) pass = false;
    gate.report(11, "numerical-data checker: equality, strict, violated regressions", pass);
  }

  // 12. leading-coefficient trend
  {
    std::vector<uint64_t> primes{5, 7, 11, 13, 17, 19, 23, 29, 31};
    bool pass = true;
    VerificationReport rs = dh_conjecture_trend(poly("x1^2", 1), primes);
    VerificationReport rc = dh_conjecture_trend(poly("x1^2 + x2^3", 2), primes);
    if (!rs.pass || !rc.pass) pass = false;
    DHZeta Z = dh_zeta(poly("x1^2", 1), 5);
    PoleReport pr = zeta_poles_and_leading(Z, Rational(1, 2), 1);
    if (!pr.leading_at_sigma.rational || pr.leading_at_sigma.rat != Rational(2, 5)) pass = false;
    gate.report(12, "leading coefficients bounded across primes; x^2 at p=5 equals 2/5", pass);
  }

  std::cout << (gate.failures == 0 ? "all criteria passed" : std::to_string(gate.failures) + " criteria failed")
            << std::endl;
  return gate.failures;
}
