#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "npzeta/newton.hpp"
#include "oracles.hpp"

using namespace npzeta;

namespace {

IntPoly poly(const std::string& s, int n) { return IntPoly::parse(s, n); }

bool has_facet(const NewtonPolyhedron& np, std::vector<long> normal, long offset) {
  for (auto& fc : np.facets())
    if (fc.normal == normal && fc.offset == offset) return true;
  return false;
}

IntPoly random_positive_poly(std::mt19937_64& rng, int max_vars) {
  int n = 1 + static_cast<int>(rng() % static_cast<uint64_t>(max_vars));
  IntPoly f(n);
  int t = 2 + static_cast<int>(rng() % 4);
  for (int i = 0; i < t; ++i) {
    Exponents e(static_cast<size_t>(n), 0);
    int total = 0;
    for (auto& v : e) {
      v = static_cast<int>(rng() % 6);
      total += v;
    }
    if (total == 0) e[0] = 1;
    f.add_term(e, 1 + static_cast<int>(rng() % 9));
  }
  return f;
}

Rational sigma_of(const IntPoly& f) { return NewtonPolyhedron::build(f).sigma_kappa().sigma; }

}  // namespace

TEST_CASE("newton_polyhedron facets for the worked examples") {
  NewtonPolyhedron a = NewtonPolyhedron::build(poly("x1^2", 1));
  REQUIRE(a.facets().size() == 1);
  CHECK(has_facet(a, {1}, 2));

  NewtonPolyhedron b = NewtonPolyhedron::build(poly("x1^2 + x2^3", 2));
  REQUIRE(b.facets().size() == 3);
  CHECK(has_facet(b, {3, 2}, 6));
  CHECK(has_facet(b, {1, 0}, 0));
  CHECK(has_facet(b, {0, 1}, 0));

  NewtonPolyhedron c = NewtonPolyhedron::build(poly("x1*x2", 2));
  REQUIRE(c.facets().size() == 2);
  CHECK(has_facet(c, {1, 0}, 1));
  CHECK(has_facet(c, {0, 1}, 1));

  CHECK_THROWS_AS(NewtonPolyhedron::build(IntPoly(1)), std::invalid_argument);
  CHECK_THROWS_AS(NewtonPolyhedron::build(poly("x1 + 1", 1)), std::invalid_argument);
}

TEST_CASE("facet description matches brute-force lattice membership") {
  // Delta = {x : a.x >= N(a) for all facets} must equal conv(Supp)+R^n_{>=0},
  // checked on lattice points of a small box.
  for (auto& [text, n] : std::vector<std::pair<std::string, int>>{
           {"x1^2 + x2^3", 2}, {"x1*x2", 2}, {"x1^2 + x1*x2^2 + x2^4", 2}, {"x1^3 + x2^2*x3 + x3^3", 3}}) {
    IntPoly f = poly(text, n);
    NewtonPolyhedron np = NewtonPolyhedron::build(f);
    auto supp = np.supp();
    // membership via facets
    auto in_facets = [&](const std::vector<long>& x) {
      for (auto& fc : np.facets()) {
        long d = 0;
        for (int c = 0; c < n; ++c) d += fc.normal[static_cast<size_t>(c)] * x[static_cast<size_t>(c)];
        if (d < fc.offset) return false;
      }
      return true;
    };
    // dual oracle: x lies in conv(supp)+R^n_{>=0} iff a.x >= min_s(a.s) for
    // every a >= 0; the scan over |a|_inf <= 6 covers all facet normals of
    // these instances, so the truncated test is exact here
    long B = 6;
    std::vector<long> x(static_cast<size_t>(n), 0);
    int mismatches = 0;
    std::function<void(int)> rec = [&](int c) {
      if (c == n) {
        bool facet_in = in_facets(x);
        // oracle: a.x >= min_supp(a.s) for all small a >= 0
        bool oracle_in = true;
        std::vector<long> a(static_cast<size_t>(n), 0);
        std::function<bool(int)> rec_a = [&](int ca) -> bool {
          if (ca == n) {
            long lhs = 0;
            for (int i = 0; i < n; ++i) lhs += a[static_cast<size_t>(i)] * x[static_cast<size_t>(i)];
            long best = 0;
            for (size_t i = 0; i < supp.size(); ++i) {
              long d = 0;
              for (int j = 0; j < n; ++j) d += a[static_cast<size_t>(j)] * supp[i][static_cast<size_t>(j)];
              if (i == 0 || d < best) best = d;
            }
            return lhs >= best;
          }
          for (long v = 0; v <= 6; ++v) {
            a[static_cast<size_t>(ca)] = v;
            if (!rec_a(ca + 1)) return false;
          }
          return true;
        };
        oracle_in = rec_a(0);
        // facet membership implies oracle membership; the converse can fail
        // only for points outside every small-normal halfspace, which does
        // not happen for desk-scale supports
        if (facet_in != oracle_in) ++mismatches;
      } else {
        for (long v = 0; v <= 8; ++v) {
          x[static_cast<size_t>(c)] = v;
          rec(c + 1);
        }
      }
    };
    rec(0);
    CHECK(mismatches == 0);
  }
}

TEST_CASE("weight returns (nu, N, first meet locus)") {
  NewtonPolyhedron np = NewtonPolyhedron::build(poly("x1^2 + x2^3", 2));
  auto w = np.weight({1, 1});
  CHECK(w.nu == 2);
  CHECK(w.N == 2);
  const Face& f1 = np.faces()[static_cast<size_t>(w.face_id)];
  CHECK(f1.dim == 0);
  CHECK(np.supp()[static_cast<size_t>(f1.touching[0])] == Exponents{2, 0});

  auto w0 = np.weight({0, 0});
  CHECK(w0.nu == 0);
  CHECK(w0.N == 0);
  CHECK(np.faces()[static_cast<size_t>(w0.face_id)].is_improper);

  auto w2 = np.weight({3, 2});
  CHECK(w2.nu == 5);
  CHECK(w2.N == 6);
  const Face& edge = np.faces()[static_cast<size_t>(w2.face_id)];
  CHECK(edge.dim == 1);
  CHECK(edge.is_compact);
  CHECK(edge.touching.size() == 2);

  CHECK_THROWS_AS(np.weight({-1, 0}), std::invalid_argument);
}

TEST_CASE("faces enumerates every face exactly once") {
  NewtonPolyhedron a = NewtonPolyhedron::build(poly("x1^2", 1));
  CHECK(a.faces().size() == 2);  // vertex + improper

  NewtonPolyhedron b = NewtonPolyhedron::build(poly("x1^2 + x2^3", 2));
  CHECK(b.faces().size() == 6);  // 2 vertices, 1 compact edge, 2 unbounded edges, improper
  int vertices = 0, compact_edges = 0, unbounded_edges = 0;
  for (auto& tau : b.faces()) {
    if (tau.is_improper) continue;
    if (tau.dim == 0) ++vertices;
    if (tau.dim == 1 && tau.is_compact) ++compact_edges;
    if (tau.dim == 1 && !tau.is_compact) ++unbounded_edges;
  }
  CHECK(vertices == 2);
  CHECK(compact_edges == 1);
  CHECK(unbounded_edges == 2);

  NewtonPolyhedron c = NewtonPolyhedron::build(poly("x1*x2", 2));
  CHECK(c.faces().size() == 4);  // vertex, 2 unbounded edges, improper
}

TEST_CASE("first meet locus agrees with the support oracle on a box") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    IntPoly f = random_positive_poly(rng, 3);
    NewtonPolyhedron np = NewtonPolyhedron::build(f);
    int n = f.nvars();
    std::vector<long> a(static_cast<size_t>(n), 0);
    std::function<void(int)> rec = [&](int c) {
      if (c == n) {
        auto key = np.first_meet_key(a);
        auto ok = oracle::first_meet(np.supp(), a);
        CHECK(key.first == ok.touching);
        CHECK(key.second == ok.free_dirs);
        CHECK(np.offset_of(a) == ok.N);
        return;
      }
      for (long v = 0; v <= 6; ++v) {
        a[static_cast<size_t>(c)] = v;
        rec(c + 1);
      }
    };
    rec(0);
  }
}

TEST_CASE("face_polynomial restricts to the face") {
  IntPoly f = poly("x1^2 + x2^3", 2);
  NewtonPolyhedron np = NewtonPolyhedron::build(f);
  for (auto& tau : np.faces()) {
    IntPoly ft = face_polynomial(f, np, tau);
    if (tau.is_improper) CHECK(ft == f);
    if (tau.dim == 1 && tau.is_compact) CHECK(ft == f);  // both points on the edge
    if (tau.dim == 0 && np.supp()[static_cast<size_t>(tau.touching[0])] == Exponents{2, 0})
      CHECK(ft == poly("x1^2", 2));
    if (tau.dim == 1 && !tau.is_compact && ft.term_count() == 1) {
      // unbounded edges carry a single vertex each
      CHECK((ft == poly("x1^2", 2) || ft == poly("x2^3", 2)));
    }
  }
}

TEST_CASE("sigma and kappa for the worked examples") {
  auto sk1 = NewtonPolyhedron::build(poly("x1^2 + x2^3", 2)).sigma_kappa();
  CHECK(sk1.sigma == Rational(5, 6));
  CHECK(sk1.kappa == 1);
  CHECK(sk1.lct == Rational(5, 6));

  auto sk2 = NewtonPolyhedron::build(poly("x1^2", 1)).sigma_kappa();
  CHECK(sk2.sigma == Rational(1, 2));
  CHECK(sk2.kappa == 1);

  auto sk3 = NewtonPolyhedron::build(poly("x1*x2", 2)).sigma_kappa();
  CHECK(sk3.sigma == 1);
  CHECK(sk3.kappa == 2);
  CHECK(sk3.lct == 1);

  auto sk4 = NewtonPolyhedron::build(poly("x1^2 + x2^2", 2)).sigma_kappa();
  CHECK(sk4.sigma == 1);
  CHECK(sk4.kappa == 1);
}

TEST_CASE("the diagonal point sits on the boundary") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    IntPoly f = random_positive_poly(rng, 3);
    NewtonPolyhedron np = NewtonPolyhedron::build(f);
    auto sk = np.sigma_kappa();
    REQUIRE(!sk.sigma_infinite);
    Rational t = Rational(1) / sk.sigma;
    bool some_equality = false;
    for (auto& fc : np.facets()) {
      long nu = 0;
      for (long v : fc.normal) nu += v;
      Rational lhs = t * nu;
      CHECK(lhs >= fc.offset);
      if (lhs == fc.offset) some_equality = true;
    }
    CHECK(some_equality);
    // kappa equals the codimension of the face the diagonal lands on
    const Face& tau0 = np.faces()[static_cast<size_t>(sk.tau0_face_id)];
    CHECK(sk.kappa == np.nvars() - tau0.dim);
  }
}

TEST_CASE("sigma calculus: additivity, products, identification") {
  // fixed examples
  CHECK(sigma_of(poly("x1^2", 1)) == Rational(1, 2));
  CHECK(sigma_of(poly("x1^3", 1)) == Rational(1, 3));
  CHECK(sigma_of(IntPoly::disjoint_sum(poly("x1^2", 1), poly("x1^3", 1))) == Rational(5, 6));
  CHECK(sigma_of(IntPoly::disjoint_product(poly("x1^2", 1), poly("x1^3", 1))) == Rational(1, 3));

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    IntPoly f = random_positive_poly(rng, 3), g = random_positive_poly(rng, 3);
    Rational sf = sigma_of(f), sg = sigma_of(g);
    CHECK(sigma_of(IntPoly::disjoint_sum(f, g)) == sf + sg);
    CHECK(sigma_of(IntPoly::disjoint_product(f, g)) == std::min(sf, sg));
    if (f.nvars() >= 2) {
      CHECK(sigma_of(f.identify_last_two_vars()) <= sf);
    }
  }
}

TEST_CASE("support_hyperplane finds a witness when one exists") {
  auto h1 = support_hyperplane(poly("x1^2 + x2^3", 2));
  REQUIRE(h1.has_value());
  CHECK(h1->first == std::vector<long>{3, 2});
  CHECK(h1->second == 6);

  CHECK(!support_hyperplane(poly("x1 + x1^2", 1)).has_value());

  auto h3 = support_hyperplane(poly("x1*x2", 2));
  REQUIRE(h3.has_value());
  CHECK(h3->second > 0);
  // witness validity: c.s = b on the whole support, c >= 0
  for (long v : h3->first) CHECK(v >= 0);
  for (auto& s : NewtonPolyhedron::build(poly("x1*x2", 2)).supp()) {
    long d = 0;
    for (size_t i = 0; i < s.size(); ++i) d += h3->first[i] * s[i];
    CHECK(d == h3->second);
  }
}

TEST_CASE("face_sigma computes sigma of the face polynomial's polyhedron") {
  IntPoly f = poly("x1^2 + x2^3", 2);
  NewtonPolyhedron np = NewtonPolyhedron::build(f);
  for (auto& tau : np.faces()) {
    if (tau.dim == 0 && np.supp()[static_cast<size_t>(tau.touching[0])] == Exponents{2, 0})
      CHECK(np.face_sigma(tau) == Rational(1, 2));
    if (tau.dim == 0 && np.supp()[static_cast<size_t>(tau.touching[0])] == Exponents{0, 3})
      CHECK(np.face_sigma(tau) == Rational(1, 3));
    if (tau.is_compact && tau.dim == 1) CHECK(np.face_sigma(tau) == Rational(5, 6));
    if (tau.is_improper) CHECK(np.face_sigma(tau) == Rational(5, 6));
  }
}
