#pragma once

#include <map>

#include "npzeta/newton.hpp"
#include "npzeta/qpoly.hpp"

namespace npzeta {

// Simplicial cone with per-generator openness flags and the lattice points of
// the matching half-open fundamental parallelepiped. The lattice points of
// the half-open cone are exactly the parallelepiped points shifted by
// non-negative integer combinations of the generators, each point once.
struct HalfOpenCone {
  std::vector<std::vector<long>> generators;  // primitive, linearly independent
  std::vector<bool> strict;
  std::vector<std::vector<long>> parallelepiped;
};

struct ConeGFTerm {
  long nu;
  long N;
  Int coeff;
};

// G(u,t) = sum of coeff * u^nu * t^N over the numerator, divided by the
// product of (1 - u^nu_j t^N_j) over the denominator pairs. Every nu_j >= 1,
// so u = 1/q, t = 1 is always a finite substitution.
struct ConeGF {
  std::vector<ConeGFTerm> numerator;
  std::vector<std::pair<long, long>> denominator;  // (nu_j, N_j), sorted multiset
};

struct RayData {
  std::vector<long> ray;
  long N;
  long nu;
};

// Disjoint half-open simplicial tiling of {a in Z^n_{>=0} \ {0} : F(a) = tau}.
std::vector<HalfOpenCone> decompose_face_cone(const NewtonPolyhedron& np, const Face& tau);

// G_tau(u,t) = sum over {F(a)=tau} of u^{nu(a)} t^{N(a)}.
ConeGF face_gf(const NewtonPolyhedron& np, const Face& tau);

// Substitution u = 1/q, keeping t formal.
RationalFunction evaluate_gf_t(const ConeGF& gf, uint64_t q);
// Exact value of G(1/q, 1).
Rational evaluate_gf_at1(const ConeGF& gf, uint64_t q);

// A_tau = sum over {F(a)=tau, N(a) >= m} of q^{-nu(a)},
// B_tau = sum over {F(a)=tau, N(a) = m-1} of q^{-nu(a)}.
std::pair<Rational, Rational> truncated_cone_sums(const NewtonPolyhedron& np, const Face& tau,
                                                  uint64_t q, int m);

// Primitive ray generators of the (triangulated) normal fan with their
// numerical data (N, nu). These are the facet normals of the polyhedron; the
// triangulation introduces no new rays.
std::vector<RayData> fan_rays(const NewtonPolyhedron& np);

// Candidate real poles {-nu/N : N > 0} read off the rays.
std::vector<Rational> candidate_poles(const std::vector<RayData>& rays);

// All lattice points of the half-open cone with |a|_inf <= bound.
std::vector<std::vector<long>> cone_lattice_points_in_box(const HalfOpenCone& cone, long bound);

}  // namespace npzeta
