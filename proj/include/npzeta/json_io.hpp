#pragma once

#include "npzeta/eqrel.hpp"

namespace npzeta {

njson json_rational(const Rational& r);
njson json_complex(const Complex& z);

// {nvars, supp:[[..]], facets:[{normal:[..],offset}], faces:[{id,touching,free_dirs,dim,...}]}
njson json_polyhedron(const NewtonPolyhedron& np);
// {numerator:[{nu,N,coeff}], denominator:[{nu,N}]}
njson json_cone_gf(const ConeGF& gf);
njson json_rays(const std::vector<RayData>& rays);
njson json_sigma_kappa(const SigmaKappa& sk);

njson json_alg_value(const AlgValue& v);
// {p, Z:{num,den}, poles:[{s0:{num,den}, order, leading:{num,den}}], ...}
njson json_zeta_report(const DHZeta& Z, const PoleReport& poles);
njson json_rational_function(const RationalFunction& rf, const std::string& var = "t");

njson json_poincare(const PoincareCoeffs& pc);
njson json_zeta_coeffs(const ZetaCoeffs& zc);
njson json_character_table(const std::vector<CharTableEntry>& table);
njson json_class_counts(const ClassCounts& cc);

}  // namespace npzeta
