#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "npzeta/padic.hpp"
#include "oracles.hpp"

using namespace npzeta;

namespace {
IntPoly poly(const std::string& s, int n) { return IntPoly::parse(s, n); }
}

TEST_CASE("exp_sum worked examples") {
  CHECK(std::abs(exp_sum(poly("x1", 1), 7, 1)) < 1e-12);
  Complex e22 = exp_sum(poly("x1^2", 1), 5, 2);
  CHECK(std::abs(e22 - Complex(0.2, 0.0)) < 1e-12);
  Complex e21 = exp_sum(poly("x1^2", 1), 5, 1);
  CHECK(std::abs(e21) == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-12));
}

TEST_CASE("exp_sum equals the brute-force oracle on a grid") {
  std::vector<IntPoly> corpus{poly("x1^2", 1), poly("x1^3 - 3*x1", 1), poly("x1*x2", 2),
                              poly("x1^2 + x2^3", 2), poly("x1^2*x2 - x1", 2)};
  for (auto& f : corpus) {
    for (uint64_t p : {3ull, 5ull}) {
      for (int m = 1; m <= 3; ++m) {
        Complex lib = exp_sum(f, p, m);
        Complex ora = oracle::exp_sum(f, p, m);
        CHECK(std::abs(lib - ora) < 1e-10);
      }
    }
  }
}

TEST_CASE("exp_sum shifted box matches the oracle and E0 vanishing") {
  IntPoly f = poly("x1^2 + x2^3", 2);
  for (int m = 1; m <= 3; ++m) {
    Complex lib = exp_sum(f, 5, m, BoxSupport::shifted({0, 0}));
    Complex ora = oracle::exp_sum_shifted(f, 5, m, {0, 0});
    CHECK(std::abs(lib - ora) < 1e-10);
  }
  // no critical point over 1 + pZ: the local sum dies for m >= 2
  IntPoly g = poly("x1^2", 1);
  for (uint64_t p : {3ull, 5ull, 7ull}) {
    CHECK(std::abs(exp_sum(g, p, 2, BoxSupport::shifted({1}))) < 1e-12);
    CHECK(std::abs(exp_sum(g, p, 3, BoxSupport::shifted({1}))) < 1e-12);
  }
}

TEST_CASE("exp_sum respects conjugation, modulus bound and translation") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    IntPoly f(2);
    for (int i = 0; i < 3; ++i) {
      Exponents e{static_cast<int>(rng() % 4), static_cast<int>(rng() % 4)};
      f.add_term(e, static_cast<int>(rng() % 9) - 4);
    }
    if (f.is_zero()) continue;
    uint64_t p = 5;
    int m = 2;
    Complex E = exp_sum(f, p, m);
    CHECK(std::abs(E) <= 1.0 + 1e-12);
    Complex En = exp_sum(f.scaled(Int(-1)), p, m);
    CHECK(std::abs(std::conj(E) - En) < 1e-12);
    // f -> f + p^m g leaves the sum unchanged
    IntPoly g = f;
    g.add_term({1, 1}, Int(25));
    CHECK(std::abs(exp_sum(g, p, m) - E) < 1e-12);
    // translation invariance over the full box
    IntPoly sh = f.shifted({Int(2), Int(3)});
    CHECK(std::abs(exp_sum(sh, p, m) - E) < 1e-10);
  }
}

TEST_CASE("exp_sum is deterministic across thread counts") {
  IntPoly f = poly("x1^2 + x2^3", 2);
  Complex a = exp_sum(f, 7, 2, BoxSupport::full(), default_budget(), 1);
  Complex b = exp_sum(f, 7, 2, BoxSupport::full(), default_budget(), 4);
  CHECK(a.real() == b.real());
  CHECK(a.imag() == b.imag());
}

TEST_CASE("exp_sum budget error") {
  CHECK_THROWS_AS(exp_sum(poly("x1*x2*x3", 3), 101, 4, BoxSupport::full(), 1000000), BudgetError);
}

TEST_CASE("exp_sum_laurent worked examples and residue-field dependence") {
  CHECK(std::abs(exp_sum_laurent(poly("x1", 1), 5, 1)) < 1e-12);
  Complex e = exp_sum_laurent(poly("x1^2", 1), 5, 2);
  CHECK(std::abs(e - Complex(0.2, 0.0)) < 1e-12);
  // m = 1 sums coincide with the Z/p sums
  for (uint64_t p : {3ull, 5ull, 7ull}) {
    Complex a = exp_sum_laurent(poly("x1^3", 1), p, 1);
    Complex b = exp_sum(poly("x1^3", 1), p, 1);
    CHECK(std::abs(a - b) < 1e-12);
  }
  // the full grid of the residue-field dependence check
  for (auto& f : {poly("x1^2", 1), poly("x1*x2", 2), poly("x1^2 + x2^3", 2)}) {
    for (uint64_t p : {5ull, 7ull, 11ull}) {
      for (int m = 1; m <= 3; ++m) {
        Complex a = exp_sum(f, p, m);
        Complex b = exp_sum_laurent(f, p, m);
        CHECK(std::abs(a - b) < 1e-9);
      }
    }
  }
}

TEST_CASE("poincare_coeffs worked examples and oracle") {
  PoincareCoeffs a = poincare_coeffs(poly("x1", 1), 5, 4);
  CHECK(a.values == std::vector<Int>{1, 1, 1, 1, 1});

  PoincareCoeffs b = poincare_coeffs(poly("x1^2", 1), 5, 4);
  CHECK(b.values == std::vector<Int>{1, 1, 5, 5, 25});

  PoincareCoeffs c = poincare_coeffs(poly("x1*x2", 2), 3, 1);
  CHECK(c.values[1] == 5);

  // oracle comparison
  IntPoly f = poly("x1^2 + x2^3", 2);
  PoincareCoeffs d = poincare_coeffs(f, 3, 3);
  for (int m = 1; m <= 3; ++m) CHECK(d.values[static_cast<size_t>(m)] == oracle::solution_count(f, 3, m));

  // growth bounds: N_{m+1} <= p^n N_m, and N_m p^{-mn} non-increasing for f != 0 mod p
  for (auto& g : {poly("x1^2", 1), poly("x1^2 + x2^3", 2), poly("x1*x2", 2)}) {
    PoincareCoeffs pc = poincare_coeffs(g, 5, 5);
    uint64_t pn = 1;
    for (int v = 0; v < g.nvars(); ++v) pn *= 5;
    for (size_t m = 0; m + 1 < pc.values.size(); ++m) {
      CHECK(pc.values[m + 1] <= pc.values[m] * pn);
      CHECK(Rational(pc.values[m + 1], rat_num(rat_pow(Rational(static_cast<long>(pn)), static_cast<long>(m) + 1))) <=
            Rational(pc.values[m], rat_num(rat_pow(Rational(static_cast<long>(pn)), static_cast<long>(m)))));
    }
  }
}

TEST_CASE("character_table structure and Gauss sums") {
  auto t5 = character_table(5, 1);
  REQUIRE(t5.size() == 4);
  CHECK(t5[0].trivial);
  // the quadratic character has order 2 and |g| = sqrt(5)/4
  bool found_quadratic = false;
  for (auto& e : t5) {
    if (!e.trivial && e.chi.order() == 2) {
      found_quadratic = true;
      CHECK(std::abs(e.gauss) == doctest::Approx(std::sqrt(5.0) / 4.0).epsilon(1e-12));
      CHECK(std::abs(std::abs(e.gauss) - 0.5590) < 1e-4);
    }
  }
  CHECK(found_quadratic);

  auto t9 = character_table(3, 2);
  REQUIRE(t9.size() == 6);
  int cond1 = 0, cond2 = 0;
  for (auto& e : t9) (e.chi.conductor() == 1 ? cond1 : cond2)++;
  CHECK(cond1 == 2);
  CHECK(cond2 == 4);

  // chi(0) = 0 and trivial character is 1 on units
  for (auto& e : t9) {
    CHECK(std::abs(e.chi.eval(0)) == 0.0);
    CHECK(std::abs(e.chi.eval(3)) == 0.0);
    if (e.trivial) CHECK(std::abs(e.chi.eval(7) - Complex(1.0, 0.0)) < 1e-12);
  }
  CHECK_THROWS_AS(character_table(2, 2), std::invalid_argument);
}

TEST_CASE("character orthogonality and conductor-1 Gauss magnitudes up to 31") {
  for (uint64_t p : {3ull, 5ull, 7ull}) {
    auto table = character_table(p, 2);
    uint64_t mod = p * p;
    for (size_t i = 0; i < table.size(); ++i)
      for (size_t j = 0; j < i; ++j) {
        Complex acc(0.0, 0.0);
        for (uint64_t v = 1; v < mod; ++v) {
          if (v % p == 0) continue;
          acc += table[i].chi.eval(v) * std::conj(table[j].chi.eval(v));
        }
        CHECK(std::abs(acc) < 1e-9);
      }
  }
  for (uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull}) {
    double expected = std::sqrt(static_cast<double>(p)) / (static_cast<double>(p) - 1.0);
    for (auto& e : character_table(p, 1)) {
      if (e.trivial) continue;
      CHECK(std::abs(std::abs(e.gauss) - expected) < 1e-9);
    }
  }
}

TEST_CASE("zeta_coeffs worked examples") {
  auto grp5 = std::make_shared<CharGroup>(5, 1);
  Character triv(grp5, 0);
  ZetaCoeffs z = zeta_coeffs(poly("x1^2", 1), 5, triv, 2);
  REQUIRE(z.exact_valid);
  CHECK(z.exact == std::vector<Rational>{Rational(4, 5), Rational(0), Rational(4, 25)});
  CHECK(z.stability_level == std::vector<int>{1, 2, 3});

  for (uint64_t p : {3ull, 7ull}) {
    auto grp = std::make_shared<CharGroup>(p, 1);
    ZetaCoeffs zx = zeta_coeffs(poly("x1", 1), p, Character(grp, 0), 3);
    for (int k = 0; k <= 3; ++k)
      CHECK(zx.exact[static_cast<size_t>(k)] ==
            (Rational(1) - Rational(1, static_cast<long>(p))) * rat_pow(Rational(1, static_cast<long>(p)), k));
  }

  // twisting x^2 by the quadratic character changes nothing: ac(x^2) is a square
  auto t5 = character_table(5, 1);
  const Character* quad = nullptr;
  for (auto& e : t5)
    if (!e.trivial && e.chi.order() == 2) quad = &e.chi;
  REQUIRE(quad);
  ZetaCoeffs zq = zeta_coeffs(poly("x1^2", 1), 5, *quad, 2);
  for (int k = 0; k <= 2; ++k)
    CHECK(std::abs(zq.coeffs[static_cast<size_t>(k)] - z.coeffs[static_cast<size_t>(k)]) < 1e-12);
}

TEST_CASE("trivial zeta coefficients telescope against solution counts") {
  for (auto& f : {poly("x1^2", 1), poly("x1^2 + x2^3", 2)}) {
    uint64_t p = 5;
    auto grp = std::make_shared<CharGroup>(p, 1);
    ZetaCoeffs z = zeta_coeffs(f, p, Character(grp, 0), 4);
    PoincareCoeffs n = poincare_coeffs(f, p, 5);
    Rational pn = rat_pow(Rational(static_cast<long>(p)), f.nvars());
    Rational acc(0);
    for (int k = 0; k <= 4; ++k) {
      acc += z.exact[static_cast<size_t>(k)];
      Rational expect = Rational(1) - Rational(n.values[static_cast<size_t>(k + 1)]) / rat_pow(pn, k + 1);
      CHECK(acc == expect);
    }
  }
}

TEST_CASE("zeta coefficient stability across levels") {
  // c_k computed from a tally at level m equals the value at level m+1
  IntPoly f = poly("x1^2 + x2^3", 2);
  uint64_t p = 5;
  for (int m = 2; m <= 3; ++m) {
    ShellTally t1 = shell_tally(f, p, m, BoxSupport::full());
    ShellTally t2 = shell_tally(f, p, m + 1, BoxSupport::full());
    for (int k = 0; k < m; ++k) {
      uint64_t c1 = 0, c2 = 0;
      for (auto& [ac, cnt] : t1.shells[static_cast<size_t>(k)]) c1 += cnt;
      for (auto& [ac, cnt] : t2.shells[static_cast<size_t>(k)]) c2 += cnt;
      // counts scale by p^{2} per extra level
      CHECK(c2 == c1 * p * p);
    }
  }
}

TEST_CASE("jet_count worked examples and the running infimum") {
  JetCount a = jet_count(poly("x1^2", 1), 5, 4, true);
  CHECK(a.count == 25);
  REQUIRE(a.exact);
  CHECK(a.codim == Rational(2));

  JetCount b = jet_count(poly("x1", 1), 5, 3, false);
  CHECK(b.count == 1);
  CHECK(b.codim == Rational(3));

  JetCount c = jet_count(poly("x1^2", 1), 5, 2, true);
  CHECK(c.count == 5);
  CHECK(c.codim == Rational(1));

  // the ceil(m/2)/m sequence and its non-increasing running infimum
  Rational running(1);
  for (int m = 1; m <= 8; ++m) {
    JetCount j = jet_count(poly("x1^2", 1), 5, m, true);
    REQUIRE(j.exact);
    CHECK(j.codim == Rational((m + 1) / 2));
    Rational ratio = j.codim / m;
    running = std::min(running, ratio);
    CHECK(running <= ratio);
  }
  CHECK(running == Rational(1, 2));
}
