// Command-line front end: Newton polyhedra, Igusa zeta functions, p-adic
// exponential sums, Poincare series, and the verification harnesses.
//
// Exit codes: 0 success/pass, 1 check failed, 2 usage error, 3 budget exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "npzeta/json_io.hpp"
#include "npzeta/modarith.hpp"

using namespace npzeta;

namespace {

struct GlobalOpts {
  std::string format = "json";
  std::string out;
  uint64_t budget = default_budget();
  int threads = 1;
  double tolerance = 1e-9;
  uint64_t seed = 1;
};

int infer_nvars(const std::string& poly) {
  int best = 1;
  for (size_t i = 0; i + 1 < poly.size(); ++i) {
    if (poly[i] != 'x') continue;
    size_t j = i + 1;
    long k = 0;
    while (j < poly.size() && isdigit(static_cast<unsigned char>(poly[j]))) k = k * 10 + (poly[j++] - '0');
    if (j > i + 1) best = std::max(best, static_cast<int>(k));
  }
  return best;
}

std::vector<uint64_t> parse_primes(const std::string& spec) {
  std::vector<uint64_t> out;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t dots = tok.find("..");
    if (dots != std::string::npos) {
      uint64_t lo = std::stoull(tok.substr(0, dots));
      uint64_t hi = std::stoull(tok.substr(dots + 2));
      for (uint64_t v = lo; v <= hi; ++v)
        if (is_prime_u64(v)) out.push_back(v);
    } else if (!tok.empty()) {
      uint64_t v = std::stoull(tok);
      if (!is_prime_u64(v)) throw CLI::ValidationError("--primes", tok + " is not prime");
      out.push_back(v);
    }
  }
  if (out.empty()) throw CLI::ValidationError("--primes", "empty prime list");
  return out;
}

std::vector<int> parse_int_range(const std::string& spec) {
  std::vector<int> out;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t dots = tok.find("..");
    if (dots != std::string::npos) {
      int lo = std::stoi(tok.substr(0, dots));
      int hi = std::stoi(tok.substr(dots + 2));
      for (int v = lo; v <= hi; ++v) out.push_back(v);
    } else if (!tok.empty()) {
      out.push_back(std::stoi(tok));
    }
  }
  if (out.empty()) throw CLI::ValidationError("range", "empty range");
  return out;
}

BoxSupport parse_support(const std::string& spec, int nvars) {
  if (spec.empty() || spec == "full") return BoxSupport::full();
  if (spec == "origin") return BoxSupport::shifted(std::vector<long long>(nvars, 0));
  if (spec.rfind("shifted:", 0) == 0) {
    std::vector<long long> y;
    std::stringstream ss(spec.substr(8));
    std::string tok;
    while (std::getline(ss, tok, ',')) y.push_back(std::stoll(tok));
    if (static_cast<int>(y.size()) != nvars)
      throw CLI::ValidationError("--support", "shift arity mismatch");
    return BoxSupport::shifted(std::move(y));
  }
  throw CLI::ValidationError("--support", "expected full, origin or shifted:<c1,...,cn>");
}

Rational parse_rational(const std::string& s) {
  size_t slash = s.find('/');
  if (slash == std::string::npos) return Rational(Int(s));
  return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

njson config_json(const GlobalOpts& g, const std::string& subcommand) {
  njson j;
  j["subcommand"] = subcommand;
  j["format"] = g.format;
  j["budget"] = g.budget;
  j["threads"] = g.threads;
  j["tolerance"] = g.tolerance;
  j["seed"] = g.seed;
  return j;
}

void emit(const GlobalOpts& g, const njson& payload, const std::string& csv = "") {
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!g.out.empty()) {
    file.open(g.out);
    if (!file) throw std::runtime_error("cannot open output file: " + g.out);
    os = &file;
  }
  if (g.format == "csv" && !csv.empty())
    *os << csv;
  else
    *os << payload.dump(2) << "\n";
}

std::string records_csv(const njson& records, const std::vector<std::string>& cols) {
  std::ostringstream os;
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

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"npzeta: Newton polyhedra, Igusa zeta functions and p-adic exponential sums"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOpts g;
  app.add_option("--format", g.format, "Output format: json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", g.out, "Write output to a file instead of stdout");
  app.add_option("--budget", g.budget, "Enumeration step budget (env NPZETA_BUDGET)");
  app.add_option("--threads", g.threads, "Worker threads for grid sweeps");
  app.add_option("--tolerance", g.tolerance, "Absolute tolerance for float comparisons");
  app.add_option("--seed", g.seed, "Seed for randomized checks");

  std::string poly_text, primes_spec, m_spec = "1..3", support_spec = "full";
  std::string family_spec = "congruence", check_name, engine = "qp";
  std::string ndata_spec, witness_spec, exponent_spec = "1/2", points_spec, sigma_spec;
  int nvars_opt = 0, series_order = 8, nmax = 6, weil_dmax = 6, cases = 20;
  long radius = 10;
  int kappa_opt = -1;
  double slack = 1.5;

  auto add_poly = [&](CLI::App* cmd, bool required = true) {
    auto* o = cmd->add_option("--poly", poly_text, "Polynomial, e.g. \"x1^2*x2 - 3*x1 + 7\"");
    if (required) o->required();
    cmd->add_option("--nvars", nvars_opt, "Number of variables (default: inferred)");
  };

  auto* cmd_newton = app.add_subcommand("newton", "Newton polyhedron, faces, sigma/kappa, fan rays");
  add_poly(cmd_newton);

  auto* cmd_zeta = app.add_subcommand("zeta", "Igusa zeta function, poles and leading coefficients");
  add_poly(cmd_zeta);
  cmd_zeta->add_option("--primes", primes_spec, "Primes, e.g. 5,7,11 or 5..31")->required();
  cmd_zeta->add_option("--series", series_order, "Also print this many Taylor coefficients");

  auto* cmd_expsum = app.add_subcommand("expsum", "Grid of exponential sums E_{m,p}");
  add_poly(cmd_expsum);
  cmd_expsum->add_option("--primes", primes_spec)->required();
  cmd_expsum->add_option("--m", m_spec, "m values, e.g. 1..4 or 2,3");
  cmd_expsum->add_option("--support", support_spec, "full | origin | shifted:c1,...,cn");
  cmd_expsum->add_option("--engine", engine, "qp | laurent | both")->check(CLI::IsMember({"qp", "laurent", "both"}));

  auto* cmd_poincare = app.add_subcommand("poincare", "Solution counts mod p^m and a rational fit");
  add_poly(cmd_poincare);
  cmd_poincare->add_option("--primes", primes_spec)->required();
  cmd_poincare->add_option("--nmax", nmax, "Compute N_0..N_nmax");

  auto* cmd_verify = app.add_subcommand("verify", "Run a named identity/bound check");
  cmd_verify->add_option("--check", check_name,
                         "nondeg | ds | bound | shifted-bound | cluckers | sigma-props | numerical "
                         "| dh-trend | weil | gauss | thm214 | lemma252")
      ->required();
  add_poly(cmd_verify, false);
  cmd_verify->add_option("--primes", primes_spec);
  cmd_verify->add_option("--m", m_spec);
  cmd_verify->add_option("--support", support_spec);
  cmd_verify->add_option("--sigma", sigma_spec, "Exponent sigma as a fraction (default: from the polyhedron)");
  cmd_verify->add_option("--kappa", kappa_opt);
  cmd_verify->add_option("--slack", slack, "Large-prime over small-prime slack factor");
  cmd_verify->add_option("--radius", radius, "Scan radius for cluckers");
  cmd_verify->add_option("--cases", cases, "Randomized cases for sigma-props");
  cmd_verify->add_option("--dmax", weil_dmax);
  cmd_verify->add_option("--ndata", ndata_spec, "Numerical data N:nu pairs, e.g. 2:1,3:1");
  cmd_verify->add_option("--witness", witness_spec, "Witness subsets, e.g. 1,2:2 (indices:d)");
  cmd_verify->add_option("--exponent", exponent_spec, "Exponent for the numerical conjecture");
  cmd_verify->add_option("--points", points_spec, "Shift points, e.g. 0,0;1,2");

  auto* cmd_eqrel = app.add_subcommand("eqrel", "Equivalence-class counts and uniform rationality");
  cmd_eqrel->add_option("--family", family_spec, "congruence | solutions | image")
      ->check(CLI::IsMember({"congruence", "solutions", "image"}));
  add_poly(cmd_eqrel, false);
  cmd_eqrel->add_option("--primes", primes_spec)->required();
  cmd_eqrel->add_option("--nmax", nmax);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    auto the_poly = [&]() {
      int n = nvars_opt > 0 ? nvars_opt : infer_nvars(poly_text);
      return IntPoly::parse(poly_text, n);
    };

    if (cmd_newton->parsed()) {
      IntPoly f = the_poly();
      NewtonPolyhedron np = NewtonPolyhedron::build(f);
      njson j;
      j["config"] = config_json(g, "newton");
      j["config"]["poly"] = f.str();
      j["polyhedron"] = json_polyhedron(np);
      j["sigma_kappa"] = json_sigma_kappa(np.sigma_kappa());
      j["rays"] = json_rays(fan_rays(np));
      auto hyp = support_hyperplane(f);
      if (hyp)
        j["support_hyperplane"] = {{"normal", hyp->first}, {"offset", hyp->second}};
      else
        j["support_hyperplane"] = nullptr;
      emit(g, j);
      return 0;
    }

    if (cmd_zeta->parsed()) {
      IntPoly f = the_poly();
      auto primes = parse_primes(primes_spec);
      SigmaKappa sk = NewtonPolyhedron::build(f).sigma_kappa();
      njson j;
      j["config"] = config_json(g, "zeta");
      j["config"]["poly"] = f.str();
      njson arr = njson::array();
      for (uint64_t p : primes) {
        DHZeta Z = dh_zeta(f, p, g.budget);
        PoleReport pr = zeta_poles_and_leading(Z, sk.sigma, sk.kappa);
        njson zj = json_zeta_report(Z, pr);
        if (series_order > 0) {
          njson series = njson::array();
          for (auto& c : series_expand(Z.Z, series_order)) series.push_back(json_rational(c));
          zj["series"] = std::move(series);
        }
        arr.push_back(std::move(zj));
      }
      j["zeta"] = std::move(arr);
      emit(g, j);
      return 0;
    }

    if (cmd_expsum->parsed()) {
      IntPoly f = the_poly();
      auto primes = parse_primes(primes_spec);
      auto ms = parse_int_range(m_spec);
      BoxSupport box = parse_support(support_spec, f.nvars());
      njson records = njson::array();
      for (uint64_t p : primes) {
        for (int m : ms) {
          if (engine == "qp" || engine == "both") {
            Complex E = exp_sum(f, p, m, box, g.budget, g.threads);
            records.push_back({{"p", p},
                               {"m", m},
                               {"support", box.str()},
                               {"re(E)", E.real()},
                               {"im(E)", E.imag()},
                               {"|E|", std::abs(E)},
                               {"engine", "qp"}});
          }
          if (engine == "laurent" || engine == "both") {
            Complex E = exp_sum_laurent(f, p, m, box, g.budget, g.threads);
            records.push_back({{"p", p},
                               {"m", m},
                               {"support", box.str()},
                               {"re(E)", E.real()},
                               {"im(E)", E.imag()},
                               {"|E|", std::abs(E)},
                               {"engine", "laurent"}});
          }
        }
      }
      njson j;
      j["config"] = config_json(g, "expsum");
      j["config"]["poly"] = f.str();
      j["records"] = records;
      emit(g, j, records_csv(records, {"p", "m", "support", "re(E)", "im(E)", "|E|"}));
      return 0;
    }

    if (cmd_poincare->parsed()) {
      IntPoly f = the_poly();
      auto primes = parse_primes(primes_spec);
      njson j;
      j["config"] = config_json(g, "poincare");
      j["config"]["poly"] = f.str();
      njson arr = njson::array();
      NewtonPolyhedron np = NewtonPolyhedron::build(f);
      std::vector<std::pair<long, long>> candidates{{f.nvars() - 1, 1}};
      for (auto& ray : fan_rays(np))
        if (ray.N >= 1) candidates.emplace_back(static_cast<long>(f.nvars()) * ray.N - ray.nu, ray.N);
      for (uint64_t p : primes) {
        PoincareCoeffs pc = poincare_coeffs(f, p, nmax, g.budget);
        njson rec = json_poincare(pc);
        std::vector<Rational> series;
        for (auto& v : pc.values) series.emplace_back(v);
        auto fit = fit_rational(series, candidates, p);
        if (fit) {
          rec["fit"] = json_rational_function(fit->rf, "T");
          njson fac = njson::array();
          for (auto& [a, b] : fit->factors) fac.push_back({{"a", a}, {"b", b}});
          rec["fit_factors"] = std::move(fac);
        } else {
          rec["fit"] = nullptr;
        }
        arr.push_back(std::move(rec));
      }
      j["poincare"] = std::move(arr);
      emit(g, j);
      return 0;
    }

    if (cmd_eqrel->parsed()) {
      EqRelFamily fam = family_spec == "congruence"
                            ? EqRelFamily::congruence(nvars_opt > 0 ? nvars_opt : 1)
                        : family_spec == "solutions" ? EqRelFamily::solutions(the_poly())
                                                     : EqRelFamily::image(the_poly());
      auto primes = parse_primes(primes_spec);
      VerificationReport rep = uniform_rationality_report(fam, primes, nmax, g.budget);
      njson j;
      j["config"] = config_json(g, "eqrel");
      j["report"] = rep.to_json();
      emit(g, j, rep.records_csv());
      return rep.pass ? 0 : 1;
    }

    if (cmd_verify->parsed()) {
      auto primes = primes_spec.empty() ? std::vector<uint64_t>{} : parse_primes(primes_spec);
      VerificationReport rep;
      if (check_name == "nondeg") {
        IntPoly f = the_poly();
        rep.check = "nondegeneracy";
        rep.pass = true;
        for (uint64_t p : primes) {
          VerificationReport r = nondegeneracy_check(f, p, g.budget);
          rep.pass = rep.pass && r.pass;
          rep.records.push_back(r.to_json());
        }
      } else if (check_name == "ds") {
        IntPoly f = the_poly();
        auto ms = parse_int_range(m_spec);
        rep.check = "denef-sperber-decomposition";
        rep.pass = true;
        for (uint64_t p : primes)
          for (int m : ms) {
            VerificationReport r = ds_decomposition_check(f, p, m, g.tolerance, g.budget);
            for (auto& rec : r.records) rep.records.push_back(rec);
            rep.pass = rep.pass && r.pass;
          }
        rep.tolerance = g.tolerance;
      } else if (check_name == "bound") {
        IntPoly f = the_poly();
        auto ms = parse_int_range(m_spec);
        SigmaKappa sk = NewtonPolyhedron::build(f).sigma_kappa();
        Rational sigma = sigma_spec.empty() ? sk.sigma : parse_rational(sigma_spec);
        int kappa = kappa_opt >= 0 ? kappa_opt : sk.kappa;
        rep = bound_harness(f, primes, ms, sigma, kappa, parse_support(support_spec, f.nvars()),
                            slack, g.budget, g.threads);
      } else if (check_name == "shifted-bound") {
        IntPoly f = the_poly();
        auto ms = parse_int_range(m_spec);
        std::vector<std::vector<long long>> pts;
        std::stringstream ss(points_spec);
        std::string tok;
        while (std::getline(ss, tok, ';')) {
          std::vector<long long> y;
          std::stringstream ts(tok);
          std::string c;
          while (std::getline(ts, c, ',')) y.push_back(std::stoll(c));
          if (!y.empty()) pts.push_back(std::move(y));
        }
        if (pts.empty()) throw CLI::ValidationError("--points", "no shift points given");
        rep = shifted_bound_harness(f, pts, primes, ms, {}, slack, g.budget);
      } else if (check_name == "cluckers") {
        rep = cluckers_scan(the_poly(), radius);
      } else if (check_name == "sigma-props") {
        rep = sigma_property_check(g.seed, cases, g.budget);
      } else if (check_name == "numerical") {
        NumericalData data;
        std::stringstream ss(ndata_spec);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
          size_t colon = tok.find(':');
          if (colon == std::string::npos) throw CLI::ValidationError("--ndata", "expected N:nu pairs");
          data.entries.emplace_back(std::stol(tok.substr(0, colon)), std::stol(tok.substr(colon + 1)));
        }
        std::stringstream ws(witness_spec);
        while (std::getline(ws, tok, ';')) {
          size_t colon = tok.rfind(':');
          if (colon == std::string::npos) throw CLI::ValidationError("--witness", "expected indices:d");
          NumericalWitness wit;
          wit.d = std::stol(tok.substr(colon + 1));
          std::stringstream is(tok.substr(0, colon));
          std::string idx;
          while (std::getline(is, idx, ',')) wit.indices.push_back(std::stoi(idx));
          data.witnesses.push_back(std::move(wit));
        }
        data.exponent = parse_rational(exponent_spec);
        rep = numerical_conjecture_check(data);
      } else if (check_name == "dh-trend") {
        rep = dh_conjecture_trend(the_poly(), primes, slack, g.budget);
      } else if (check_name == "weil") {
        rep = ff_bound_check_weil(weil_dmax, primes, g.tolerance);
      } else if (check_name == "gauss") {
        rep = ff_bound_check_gauss(primes, g.tolerance);
      } else if (check_name == "thm214") {
        rep = ff_bound_check_thm214(the_poly(), primes, slack, g.budget);
      } else if (check_name == "lemma252") {
        rep = ff_bound_check_lemma252(the_poly(), primes, slack, g.budget);
      } else {
        throw CLI::ValidationError("--check", "unknown check name: " + check_name);
      }
      njson j;
      j["config"] = config_json(g, "verify");
      j["report"] = rep.to_json();
      emit(g, j, rep.records_csv());
      return rep.pass ? 0 : 1;
    }
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
