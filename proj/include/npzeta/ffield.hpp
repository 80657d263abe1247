#pragma once

#include <set>

#include "npzeta/newton.hpp"

namespace npzeta {

// #{x in (F_p^x)^n : f(x) = 0}, exhaustive.
uint64_t torus_zero_count(const IntPoly& f, uint64_t p, uint64_t budget = default_budget());

// Sum over the torus of exp(2*pi*i*f(x)/p) with the standard character.
Complex torus_char_sum(const IntPoly& f, uint64_t p, uint64_t budget = default_budget());

// { f(x) mod p : grad f(x) = 0 mod p }, exhaustive over F_p^n.
std::set<uint64_t> critical_values_mod_p(const IntPoly& f, uint64_t p, uint64_t budget = default_budget());

// #{x in F_p^n : grad f(x) = 0}; used for heuristic critical-locus dimension.
uint64_t critical_point_count_mod_p(const IntPoly& f, uint64_t p, uint64_t budget = default_budget());

// Sum over u in F_p of exp(2*pi*i*u^d*xi/p).
Complex power_char_sum(uint64_t d, uint64_t xi, uint64_t p);

struct FaceVerdict {
  int face_id;
  bool nondegenerate;
  uint64_t torus_critical_points;  // common zeros of the face gradient on the torus
};

struct NondegeneracyScan {
  bool overall;            // all faces pass and the polyhedron survives reduction
  bool newton_preserved;   // Delta_0(f mod p) = Delta_0(f)
  std::vector<FaceVerdict> verdicts;
};

// Checks, for every face tau (the improper face included), whether the
// partials of the reduced face polynomial have a common zero on the torus.
NondegeneracyScan nondegeneracy_scan(const IntPoly& f, const NewtonPolyhedron& np, uint64_t p,
                                     uint64_t budget = default_budget());

bool is_nondegenerate_at(const IntPoly& f, uint64_t p, uint64_t budget = default_budget());

}  // namespace npzeta
