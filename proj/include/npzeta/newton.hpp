#pragma once

#include <optional>
#include <vector>

#include "npzeta/intpoly.hpp"

namespace npzeta {

// Supporting hyperplane a.x >= offset of the Newton polyhedron, with a a
// primitive vector in Z^n_{>=0} and offset = N(a) = min over the support.
struct Facet {
  std::vector<long> normal;
  long offset;
};

// A nonempty face of the polyhedron, identified by the support points lying
// on it and the coordinate directions of its recession cone. Both determine
// the face as a set: it equals conv(touching) + cone{e_i : i in free_dirs}.
struct Face {
  int id = -1;
  std::vector<int> touching;   // indices into supp(), sorted
  std::vector<int> free_dirs;  // coordinate directions, sorted
  std::vector<long> witness;   // some a with F(a) = this face
  int dim = 0;
  bool is_compact = false;
  bool is_improper = false;    // the polyhedron itself, F(0)
};

struct SigmaKappa {
  Rational sigma;       // min over facets with N > 0 of nu/N
  bool sigma_infinite = false;
  int kappa = 0;        // codim of the smallest face containing (1/sigma)*1
  int tau0_face_id = -1;
  Rational lct;         // min{1, sigma}
};

// Newton polyhedron at the origin: conv(Supp f) + R^n_{>=0}. Always
// n-dimensional because the recession cone is the full orthant.
class NewtonPolyhedron {
 public:
  static NewtonPolyhedron build(const IntPoly& f);
  static NewtonPolyhedron from_support(std::vector<Exponents> supp, int nvars);

  int nvars() const { return nvars_; }
  const std::vector<Exponents>& supp() const { return supp_; }
  const std::vector<Facet>& facets() const { return facets_; }
  // All proper faces plus the improper face (which is last).
  const std::vector<Face>& faces() const { return faces_; }
  const Face& improper_face() const { return faces_.back(); }

  // N(a) = min over the support of a.s; valid for a >= 0 componentwise.
  long offset_of(const std::vector<long>& a) const;

  struct Weight {
    long nu;
    long N;
    int face_id;
  };
  Weight weight(const std::vector<long>& a) const;

  // First meet locus of a as a (touching, free_dirs) key; a >= 0.
  std::pair<std::vector<int>, std::vector<int>> first_meet_key(const std::vector<long>& a) const;
  const Face& face_by_key(const std::vector<int>& touching, const std::vector<int>& free_dirs) const;
  const Face& first_meet_locus(const std::vector<long>& a) const;

  bool face_contains_face(const Face& outer, const Face& inner) const;

  SigmaKappa sigma_kappa() const;
  // sigma of the face polynomial, computed on tau + R^n_{>=0}.
  Rational face_sigma(const Face& tau) const;

 private:
  int nvars_ = 0;
  std::vector<Exponents> supp_;
  std::vector<Facet> facets_;
  std::vector<Face> faces_;

  void compute_facets();
  void compute_faces();
  Face make_face(std::vector<long> witness) const;
};

// Terms of f with exponents on tau. tau must come from the polyhedron of f.
IntPoly face_polynomial(const IntPoly& f, const NewtonPolyhedron& np, const Face& tau);

// A hyperplane c.i = b with c in Z^n_{>=0}, b > 0 containing Supp f, if one
// exists. Any valid witness may be returned.
std::optional<std::pair<std::vector<long>, long>> support_hyperplane(const IntPoly& f);

// Exact rank over Q of a set of integer row vectors.
int lattice_rank(const std::vector<std::vector<long>>& rows);

}  // namespace npzeta
