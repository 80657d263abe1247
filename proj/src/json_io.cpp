#include "npzeta/json_io.hpp"

namespace npzeta {

njson json_rational(const Rational& r) {
  return njson{{"num", rat_num(r).str()}, {"den", rat_den(r).str()}};
}

njson json_complex(const Complex& z) {
  return njson{{"re", z.real()}, {"im", z.imag()}};
}

njson json_polyhedron(const NewtonPolyhedron& np) {
  njson j;
  j["nvars"] = np.nvars();
  njson supp = njson::array();
  for (auto& s : np.supp()) supp.push_back(s);
  j["supp"] = std::move(supp);
  njson facets = njson::array();
  for (auto& f : np.facets()) facets.push_back({{"normal", f.normal}, {"offset", f.offset}});
  j["facets"] = std::move(facets);
  njson faces = njson::array();
  for (auto& f : np.faces()) {
    njson fj;
    fj["id"] = f.id;
    fj["touching"] = f.touching;
    fj["free_dirs"] = f.free_dirs;
    fj["dim"] = f.dim;
    fj["compact"] = f.is_compact;
    fj["improper"] = f.is_improper;
    faces.push_back(std::move(fj));
  }
  j["faces"] = std::move(faces);
  return j;
}

njson json_cone_gf(const ConeGF& gf) {
  njson j;
  njson num = njson::array();
  for (auto& t : gf.numerator) num.push_back({{"nu", t.nu}, {"N", t.N}, {"coeff", t.coeff.str()}});
  j["numerator"] = std::move(num);
  njson den = njson::array();
  for (auto& [nu, N] : gf.denominator) den.push_back({{"nu", nu}, {"N", N}});
  j["denominator"] = std::move(den);
  return j;
}

njson json_rays(const std::vector<RayData>& rays) {
  njson j = njson::array();
  for (auto& r : rays) {
    njson rj;
    rj["ray"] = r.ray;
    rj["N"] = r.N;
    rj["nu"] = r.nu;
    if (r.N > 0) rj["pole"] = json_rational(Rational(-r.nu) / Rational(r.N));
    j.push_back(std::move(rj));
  }
  return j;
}

njson json_sigma_kappa(const SigmaKappa& sk) {
  njson j;
  if (sk.sigma_infinite) {
    j["sigma"] = "infinity";
  } else {
    j["sigma"] = json_rational(sk.sigma);
  }
  j["kappa"] = sk.kappa;
  j["tau0_face_id"] = sk.tau0_face_id;
  j["lct"] = json_rational(sk.lct);
  return j;
}

njson json_rational_function(const RationalFunction& rf, const std::string& var) {
  njson j;
  njson num = njson::array();
  for (int i = 0; i <= rf.num().degree(); ++i) num.push_back(json_rational(rf.num().coeff(i)));
  njson den = njson::array();
  for (int i = 0; i <= rf.den().degree(); ++i) den.push_back(json_rational(rf.den().coeff(i)));
  j["num"] = std::move(num);
  j["den"] = std::move(den);
  j["display"] = rf.str(var);
  return j;
}

njson json_alg_value(const AlgValue& v) {
  njson j;
  if (v.rational) {
    j["num"] = rat_num(v.rat).str();
    j["den"] = rat_den(v.rat).str();
  } else {
    njson coeffs = njson::array();
    for (auto& c : v.alg.coeffs()) coeffs.push_back(json_rational(c));
    j["algebraic"] = {{"root_p", v.alg.root_p()}, {"root_degree", v.alg.root_degree()}, {"coeffs", coeffs}};
  }
  j["approx"] = v.approx;
  return j;
}

njson json_zeta_report(const DHZeta& Z, const PoleReport& poles) {
  njson j;
  j["p"] = Z.p;
  j["Z"] = json_rational_function(Z.Z);
  njson parr = njson::array();
  for (auto& e : poles.poles) {
    njson pj;
    pj["s0"] = json_rational(e.s0);
    pj["order"] = e.order;
    pj["leading"] = json_alg_value(e.leading);
    parr.push_back(std::move(pj));
  }
  j["poles"] = std::move(parr);
  if (poles.largest_real) j["largest_real_pole"] = json_rational(*poles.largest_real);
  if (poles.largest_nontrivial) j["largest_nontrivial_pole"] = json_rational(*poles.largest_nontrivial);
  j["sigma"] = json_rational(poles.sigma);
  j["expected_order"] = poles.expected_order;
  j["actual_order"] = poles.actual_order;
  j["leading_at_sigma"] = json_alg_value(poles.leading_at_sigma);
  njson faces = njson::array();
  for (auto& part : Z.parts) {
    njson fj;
    fj["face_id"] = part.face_id;
    fj["torus_zeros"] = part.torus_zeros;
    fj["L"] = json_rational_function(part.L);
    fj["S"] = json_rational_function(part.S);
    faces.push_back(std::move(fj));
  }
  j["faces"] = std::move(faces);
  j["L_delta"] = json_rational_function(Z.L_delta);
  return j;
}

njson json_poincare(const PoincareCoeffs& pc) {
  njson j;
  j["p"] = pc.p;
  njson vals = njson::array();
  for (auto& v : pc.values) vals.push_back(v.str());
  j["values"] = std::move(vals);
  return j;
}

njson json_zeta_coeffs(const ZetaCoeffs& zc) {
  njson j;
  j["p"] = zc.p;
  j["chi_index"] = zc.chi_index;
  j["chi_conductor"] = zc.chi_conductor;
  njson coeffs = njson::array();
  for (size_t k = 0; k < zc.coeffs.size(); ++k) {
    njson cj;
    cj["k"] = k;
    if (zc.exact_valid) cj["exact"] = json_rational(zc.exact[k]);
    cj["value"] = json_complex(zc.coeffs[k]);
    cj["stability_level"] = zc.stability_level[k];
    coeffs.push_back(std::move(cj));
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

njson json_character_table(const std::vector<CharTableEntry>& table) {
  njson j = njson::array();
  for (auto& e : table) {
    njson cj;
    cj["index"] = e.chi.index();
    auto [a, b] = e.chi.index_pair();
    cj["index_pair"] = {a, b};
    cj["conductor"] = e.chi.conductor();
    cj["order"] = e.chi.order();
    cj["trivial"] = e.trivial;
    if (!e.trivial) {
      cj["gauss"] = json_complex(e.gauss);
      cj["gauss_abs"] = std::abs(e.gauss);
    }
    j.push_back(std::move(cj));
  }
  return j;
}

njson json_class_counts(const ClassCounts& cc) {
  njson j;
  j["p"] = cc.p;
  njson vals = njson::array();
  for (auto& v : cc.values) vals.push_back(v.str());
  j["values"] = std::move(vals);
  return j;
}

}  // namespace npzeta
