// ads2: modes, spectra, classifications and verification reports for the
// Dirac field on AdS2.  JSON on stdout (or --out), CSV for mode tables.
//
// Exit codes: 0 ok, 1 verification breach, 2 validation error, 3 non-convergence.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ads2/ads2.hpp"

using json = nlohmann::ordered_json;
using namespace ads2;

namespace {

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  double mass = 0.0;
  std::string family;
  std::optional<double> beta_plus, beta_minus;
  std::string u;
  std::string n_range = "0:3";
  std::string window = "-3:3";
  int samples = 0;
  double omega = 0.9;
  double c1 = 1.0, c2 = 0.0;
  std::string suite = "all";
  std::string model = "massless";
  double mu = 0.25;
  int cutoff = 5;
  std::string out;
  std::string format = "json";
  std::optional<double> tol;
};

std::string num(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::pair<double, double> parse_range(const std::string& s, const char* what) {
  auto k = s.find(':');
  if (k == std::string::npos) throw ValidationError(std::string(what) + " must be lo:hi, got '" + s + "'");
  try {
    return {std::stod(s.substr(0, k)), std::stod(s.substr(k + 1))};
  } catch (const std::exception&) {
    throw ValidationError(std::string(what) + " must be lo:hi, got '" + s + "'");
  }
}

std::array<double, 8> parse_u(const std::string& s) {
  std::array<double, 8> r{};
  std::stringstream ss(s);
  std::string item;
  int i = 0;
  while (std::getline(ss, item, ',')) {
    if (i >= 8) throw ValidationError("--u takes 8 reals: u11r,u11i,u12r,u12i,u21r,u21i,u22r,u22i");
    try {
      r[i++] = std::stod(item);
    } catch (const std::exception&) {
      throw ValidationError("--u entry '" + item + "' is not a number");
    }
  }
  if (i != 8) throw ValidationError("--u takes 8 reals: u11r,u11i,u12r,u12i,u21r,u21i,u22r,u22i");
  return r;
}

double quad_tolerance(const RunConfig& c) {
  if (c.tol) return *c.tol;
  if (const char* env = std::getenv("ADS2_QUAD_TOL")) {
    try {
      double t = std::stod(env);
      if (t > 0.0) return t;
    } catch (const std::exception&) {
    }
    throw ValidationError(std::string("ADS2_QUAD_TOL must be a positive number, got '") + env + "'");
  }
  return QuadratureSpec{}.tolerance;
}

bool has_beta(const RunConfig& c) { return c.beta_plus || c.beta_minus; }

BetaPair beta_pair(const RunConfig& c) { return {c.beta_plus.value_or(0.0), c.beta_minus.value_or(0.0)}; }

Family family_of(const RunConfig& c) {
  if (c.family.empty()) {
    if (has_beta(c)) return Family::MasslessBeta;
    throw ValidationError("--family is required (dirichlet1..4, beta, v, vi)");
  }
  try {
    return family_from_string(c.family);
  } catch (const std::exception&) {
    throw ValidationError("unknown family '" + c.family + "' (dirichlet1..4, beta, v, vi)");
  }
}

BoundaryCondition boundary_of(const RunConfig& c) {
  if (!c.u.empty()) return BoundaryCondition::from_reals(parse_u(c.u));
  Family f = family_of(c);
  switch (f) {
    case Family::DirichletI:
    case Family::HalfIntegerV:
    case Family::HalfMassVI: return BoundaryCondition::dirichlet(1);
    case Family::DirichletII: return BoundaryCondition::dirichlet(2);
    case Family::DirichletIII: return BoundaryCondition::dirichlet(3);
    case Family::DirichletIV: return BoundaryCondition::dirichlet(4);
    case Family::MasslessBeta: {
      BetaPair bp = beta_pair(c);
      return BoundaryCondition::diagonal(bp.plus, bp.minus);
    }
  }
  throw ValidationError("no boundary condition for family");
}

json check_json(const Check& k) {
  json j;
  j["name"] = k.name;
  j["paper_ref"] = k.ref;
  j["value"] = k.value;
  j["tolerance"] = k.tolerance;
  j["pass"] = k.pass;
  if (!k.gating) j["gating"] = false;
  return j;
}

json base_config(const RunConfig& c, double tol) {
  json j;
  j["command"] = c.command;
  j["quad_tolerance"] = tol;
  return j;
}

json cplx_json(cplx z) { return json::array({z.real(), z.imag()}); }

json label_json(const UIRLabel& l) {
  json j;
  j["series"] = to_string(l.series);
  switch (l.series) {
    case Series::PrincipalS0: j["s"] = 0; j["mu"] = l.mu; break;
    case Series::Complementary: j["weight"] = l.weight; j["mu"] = l.mu; break;
    default: j["weight"] = l.weight; break;
  }
  return j;
}

// ------------------------------------------------------------ commands

struct Output {
  json doc;
  std::string csv;  // non-empty: written instead of JSON
  int code = 0;
};

Output cmd_modes(const RunConfig& c, double tol) {
  Family f = family_of(c);
  BetaPair bp = beta_pair(c);
  auto [a, b] = parse_range(c.n_range, "--n");
  if (c.samples < 0) throw ValidationError("--samples must be >= 0");
  QuadratureSpec spec;
  spec.tolerance = tol;
  json cfg = base_config(c, tol);
  cfg["mass"] = c.mass;
  cfg["family"] = to_string(f);
  if (f == Family::MasslessBeta) cfg["beta"] = {bp.plus, bp.minus};
  cfg["n"] = {static_cast<int>(a), static_cast<int>(b)};
  cfg["samples"] = c.samples;
  json modes = json::array();
  std::ostringstream csv;
  json checks = json::array();
  for (int n = static_cast<int>(a); n <= static_cast<int>(b); ++n) {
    try {
      check_admissible(f, c.mass, n, bp);
    } catch (const domain_error& e) {
      throw ValidationError(e.what());
    }
    SpinorMode m = make_mode(f, c.mass, n, bp, spec);
    json j;
    j["n"] = n;
    j["omega"] = m.omega;
    j["printed_norm"] = m.printed_norm;
    j["numeric_norm"] = m.numeric_norm;
    j["norm_ratio"] = m.printed_norm / m.numeric_norm;
    j["quad_error"] = m.raw_norm_error;
    checks.push_back(check_json({"norm quadrature n=" + std::to_string(n), "unit norm under the flat inner product",
                                 m.raw_norm_error, tol, m.raw_norm_error <= tol, true}));
    if (c.samples > 0) {
      json grid = json::array();
      csv << "# family=" << to_string(f) << " M=" << num(c.mass) << " n=" << n << " omega=" << num(m.omega)
          << " quad_tolerance=" << num(tol) << "\n";
      csv << "rho,re_phi1,im_phi1,re_phi2,im_phi2\n";
      for (int i = 0; i < c.samples; ++i) {
        double rho = -0.5 * pi + pi * (i + 0.5) / c.samples;
        Spinor v = m(Point::at(rho));
        grid.push_back({rho, v(0).real(), v(0).imag(), v(1).real(), v(1).imag()});
        csv << num(rho) << ',' << num(v(0).real()) << ',' << num(v(0).imag()) << ',' << num(v(1).real()) << ','
            << num(v(1).imag()) << "\n";
      }
      j["grid"] = grid;
    }
    modes.push_back(j);
  }
  Output o;
  o.doc["config"] = cfg;
  o.doc["results"] = {{"modes", modes}};
  o.doc["checks"] = checks;
  if (c.format == "csv") o.csv = csv.str().empty() ? "# no samples requested\n" : csv.str();
  return o;
}

Output cmd_spectrum(const RunConfig& c, double tol) {
  BoundaryCondition bc = boundary_of(c);
  if (c.u.empty()) {
    try {
      check_admissible(family_of(c), c.mass, 0, beta_pair(c));
    } catch (const domain_error& e) {
      throw ValidationError(e.what());
    }
  }
  auto [lo, hi] = parse_range(c.window, "--window");
  if (!(lo < hi)) throw ValidationError("--window needs lo < hi");
  SpectrumResult s = spectrum(bc, c.mass, lo, hi);
  json cfg = base_config(c, tol);
  cfg["mass"] = c.mass;
  cfg["boundary"] = to_string(bc.tag);
  cfg["window"] = {lo, hi};
  Output o;
  o.doc["config"] = cfg;
  json res;
  res["omegas"] = s.omegas;
  res["multiplicity"] = s.multiplicity;
  res["exploratory"] = s.exploratory;
  if (!s.closed_form.empty()) res["closed_form"] = s.closed_form;
  o.doc["results"] = res;
  json checks = json::array();
  if (!s.closed_form.empty())
    checks.push_back(check_json({"root finder against closed form", "closed-form spectrum of the boundary condition",
                                 s.max_deviation, 1e-10, s.max_deviation <= 1e-10, true}));
  o.doc["checks"] = checks;
  return o;
}

Output cmd_classify(const RunConfig& c, double tol) {
  Family f = family_of(c);
  BetaPair bp = beta_pair(c);
  try {
    check_admissible(f, c.mass, 0, bp);
  } catch (const domain_error& e) {
    throw ValidationError(e.what());
  }
  Classification cl = classify(f, c.mass, bp);
  json cfg = base_config(c, tol);
  cfg["mass"] = c.mass;
  cfg["family"] = to_string(f);
  if (f == Family::MasslessBeta) cfg["beta"] = {bp.plus, bp.minus};
  json res = cl.parts.size() == 1 ? label_json(cl.parts[0]) : json::object();
  json parts = json::array();
  for (const UIRLabel& l : cl.parts) parts.push_back(label_json(l));
  res["parts"] = parts;
  res["notation"] = cl.notation();
  res["casimir"] = cl.q;
  res["split"] = cl.split;
  Output o;
  o.doc["config"] = cfg;
  o.doc["results"] = res;
  const double dq = std::abs(cl.q - (c.mass * c.mass - 0.25));
  o.doc["checks"] = json::array({check_json({"casimir", "M^2 = q + 1/4", dq, 1e-9, dq <= 1e-9, true})});
  return o;
}

Output cmd_deficiency(const RunConfig& c, double tol) {
  if (!(c.mass >= 0.0)) throw ValidationError("--mass must be >= 0");
  DeficiencyReport d = deficiency_indices(c.mass);
  json cfg = base_config(c, tol);
  cfg["mass"] = c.mass;
  json verdicts = json::array();
  for (const EndpointVerdict& v : d.verdicts) {
    json j;
    j["endpoint"] = v.endpoint == Endpoint::Plus ? "+pi/2" : "-pi/2";
    j["omega"] = cplx_json(v.omega);
    j["coefficients"] = {cplx_json(v.coefficients(0)), cplx_json(v.coefficients(1))};
    j["integrable"] = v.integrable;
    j["shell_ratio"] = v.last_ratio;
    j["exponent"] = std::isfinite(v.exponent) ? json(v.exponent) : json(nullptr);
    verdicts.push_back(j);
  }
  const int expected = c.mass < 0.5 ? 2 : 0;
  Output o;
  o.doc["config"] = cfg;
  o.doc["results"] = {{"n_plus", d.n_plus}, {"n_minus", d.n_minus}, {"probes", verdicts}};
  o.doc["checks"] = json::array(
      {check_json({"n_plus", "n = 2 for 0 <= M < 1/2, else 0", double(std::abs(d.n_plus - expected)), 0.0,
                   d.n_plus == expected, true}),
       check_json({"n_minus", "n = 2 for 0 <= M < 1/2, else 0", double(std::abs(d.n_minus - expected)), 0.0,
                   d.n_minus == expected, true})});
  return o;
}

Output cmd_invariance(const RunConfig& c, double tol) {
  BoundaryCondition bc = boundary_of(c);
  if (!(c.mass >= 0.0 && c.mass < 0.5)) throw ValidationError("invariance needs 0 <= M < 1/2");
  InvarianceReport r = invariance_test(bc, c.mass);
  json cfg = base_config(c, tol);
  cfg["mass"] = c.mass;
  cfg["boundary"] = to_string(bc.tag);
  json U = json::array();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) U.push_back(cplx_json(bc.U(i, j)));
  cfg["U"] = U;
  json viol = json::array();
  for (const InvarianceViolation& v : r.violations)
    viol.push_back({{"transform", v.transform},
                    {"omega", v.omega},
                    {"probe", v.probe},
                    {"endpoint", v.endpoint == Endpoint::Plus ? "+pi/2" : "-pi/2"},
                    {"residual", v.residual}});
  Output o;
  o.doc["config"] = cfg;
  o.doc["results"] = {{"invariant", r.invariant},
                      {"max_residual", r.max_residual},
                      {"failed_constraints", r.failed_constraints},
                      {"violations", viol}};
  o.doc["checks"] = json::array();
  return o;
}

Output cmd_asymptotics(const RunConfig& c, double tol) {
  AsymptoticReport a = asymptotic_verifier(c.mass, c.omega, c.c1, c.c2);
  json cfg = base_config(c, tol);
  cfg["mass"] = c.mass;
  cfg["omega"] = c.omega;
  cfg["C"] = {c.c1, c.c2};
  json terms = json::array();
  for (const AsymptoticTerm& t : a.terms)
    terms.push_back({{"name", t.name},
                     {"endpoint", t.endpoint == Endpoint::Plus ? "+pi/2" : "-pi/2"},
                     {"component", t.component},
                     {"eps", t.eps},
                     {"numeric", cplx_json(t.numeric)},
                     {"predicted", cplx_json(t.predicted)},
                     {"printed", cplx_json(t.printed)},
                     {"rel_error", t.rel_error}});
  Output o;
  o.doc["config"] = cfg;
  o.doc["results"] = {{"terms", terms}, {"max_rel_error", a.max_rel_error_finest}};
  o.doc["checks"] = json::array({check_json({"leading terms at eps = 1e-5", "endpoint leading-term forms",
                                             a.max_rel_error_finest, 1e-2, a.pass, true})});
  return o;
}

Output cmd_verify(const RunConfig& c, double tol) {
  QuadratureSpec spec;
  spec.tolerance = tol;
  std::vector<std::string> names;
  if (c.suite == "all") {
    names = suite_names();
  } else {
    const auto& all = suite_names();
    if (std::find(all.begin(), all.end(), c.suite) == all.end())
      throw ValidationError("unknown suite '" + c.suite + "'");
    names = {c.suite};
  }
  json cfg = base_config(c, tol);
  cfg["suite"] = c.suite;
  json res = json::object(), checks = json::array();
  bool ok = true;
  for (const std::string& n : names) {
    SuiteReport r = run_suite(n, spec);
    res[n] = {{"pass", r.pass()}, {"failures", r.failures()}, {"checks", r.checks.size()}};
    for (Check k : r.checks) {
      k.name = n + ": " + k.name;
      checks.push_back(check_json(k));
    }
    ok = ok && r.pass();
  }
  Output o;
  o.doc["config"] = cfg;
  o.doc["results"] = res;
  o.doc["checks"] = checks;
  o.code = ok ? 0 : 1;
  return o;
}

Output cmd_fock(const RunConfig& c, double tol) {
  FockModel model;
  double param;
  if (c.model == "massless") {
    model = FockModel::Massless;
    param = c.mu;
  } else if (c.model == "iii" || c.model == "iv") {
    model = FockModel::TypeIII;
    param = c.mass;
  } else {
    throw ValidationError("--model must be massless, iii or iv");
  }
  FockSystem fs = build_fock(model, param, c.cutoff);
  CommutatorReport cr = commutator_check(fs);
  VacuumSector vs = vacuum_sector(fs);
  const double anti = anticommutator_defect(fs.space);
  const double lower = (fs.ops.Lm * fs.space.vacuum()).norm();
  json cfg = base_config(c, tol);
  cfg["model"] = c.model;
  if (model == FockModel::Massless && c.model == "massless") cfg["mu"] = c.mu;
  else cfg["mass"] = c.mass;
  cfg["cutoff"] = c.cutoff;
  json res;
  res["dimension"] = fs.space.dim();
  res["lambda"] = fs.ops.lambda;
  if (c.model == "massless") res["effective_mu"] = fs.ops.mu;
  res["vacuum_weight"] = vs.weight;
  res["degeneracy"] = vs.degeneracy;
  res["label"] = "D+(" + num(vs.weight) + ")";
  res["mixing_coefficient"] = cplx_json(fs.ops.mixing);
  res["admissible_states"] = cr.admissible_states;
  res["commutator_deviation"] = cr.max_admissible;
  res["edge_deviation"] = cr.max_edge;
  Output o;
  o.doc["config"] = cfg;
  o.doc["results"] = res;
  o.doc["checks"] = json::array(
      {check_json({"anticommutators", "canonical anticommutation relations", anti, 0.0, anti == 0.0, true}),
       check_json({"[L+, L-] = 2 L0", "[L+, L-] = 2 L0 below the truncation edge", cr.max_admissible, 1e-12,
                   cr.max_admissible <= 1e-12, true}),
       check_json({"L- |0> = 0", "L- annihilates the vacuum", lower, 1e-12, lower <= 1e-12, true})});
  return o;
}

// CLI11 reads "-2:2" as a flag; glue range values to their option.
std::vector<std::string> glue_ranges(int argc, char** argv) {
  std::vector<std::string> out;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if ((a == "--n" || a == "--window") && i + 1 < argc) {
      out.push_back(a + "=" + argv[++i]);
    } else {
      out.push_back(a);
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dirac field on AdS2: modes, spectra, representations, Fock checks"};
  app.set_version_flag("--version", std::string(ads2::version));
  app.require_subcommand(1);
  RunConfig c;

  auto common = [&](CLI::App* s) {
    s->add_option("--out", c.out, "output file (default stdout)");
    s->add_option("--tol", c.tol, "quadrature tolerance (overrides ADS2_QUAD_TOL)")->check(CLI::PositiveNumber);
  };
  auto family = [&](CLI::App* s) {
    s->add_option("--mass", c.mass, "mass M >= 0");
    s->add_option("--family", c.family, "dirichlet1..4, beta, v, vi");
    s->add_option("--beta-plus", c.beta_plus, "beta+ in [0, pi] (radians)");
    s->add_option("--beta-minus", c.beta_minus, "beta- in [0, pi] (radians)");
  };

  auto* modes = app.add_subcommand("modes", "normalized mode functions");
  family(modes);
  common(modes);
  modes->add_option("--n", c.n_range, "index range lo:hi (inclusive)");
  modes->add_option("--samples", c.samples, "grid points on (-pi/2, pi/2); 0 gives metadata only");
  modes->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* spec = app.add_subcommand("spectrum", "frequencies of a boundary condition");
  family(spec);
  common(spec);
  spec->add_option("--u", c.u, "unitary U as 8 reals u11r,u11i,u12r,u12i,u21r,u21i,u22r,u22i");
  spec->add_option("--window", c.window, "frequency window lo:hi");

  auto* cls = app.add_subcommand("classify", "representation content of a mode space");
  family(cls);
  common(cls);

  auto* def = app.add_subcommand("deficiency", "deficiency indices");
  def->add_option("--mass", c.mass, "mass M >= 0");
  common(def);

  auto* inv = app.add_subcommand("invariance", "isometry invariance of a boundary condition");
  family(inv);
  common(inv);
  inv->add_option("--u", c.u, "unitary U as 8 reals");

  auto* asy = app.add_subcommand("asymptotics", "endpoint leading terms against direct evaluation");
  asy->add_option("--mass", c.mass, "mass M > 0");
  asy->add_option("--omega", c.omega, "frequency");
  asy->add_option("--c1", c.c1, "coefficient of the first solution");
  asy->add_option("--c2", c.c2, "coefficient of the second solution");
  common(asy);

  auto* ver = app.add_subcommand("verify", "run a property suite");
  ver->add_option("--suite", c.suite, "suite name or all");
  common(ver);

  auto* fock = app.add_subcommand("fock", "truncated Fock space charges and vacuum sector");
  fock->add_option("--model", c.model, "massless, iii or iv");
  fock->add_option("--mu", c.mu, "massless: L0 spectrum mu + Z");
  fock->add_option("--mass", c.mass, "type III/IV mass in [0, 1/2)");
  fock->add_option("--cutoff", c.cutoff, "modes per tower (3..6)");
  common(fock);

  try {
    std::vector<std::string> args = glue_ranges(argc, argv);
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  c.command = app.get_subcommands().front()->get_name();
  Output out;
  try {
    const double tol = quad_tolerance(c);
    if (c.command == "modes") out = cmd_modes(c, tol);
    else if (c.command == "spectrum") out = cmd_spectrum(c, tol);
    else if (c.command == "classify") out = cmd_classify(c, tol);
    else if (c.command == "deficiency") out = cmd_deficiency(c, tol);
    else if (c.command == "invariance") out = cmd_invariance(c, tol);
    else if (c.command == "asymptotics") out = cmd_asymptotics(c, tol);
    else if (c.command == "verify") out = cmd_verify(c, tol);
    else out = cmd_fock(c, tol);
  } catch (const ValidationError& e) {
    std::cerr << "ads2: " << e.what() << "\n";
    return 2;
  } catch (const ads2::domain_error& e) {
    std::cerr << "ads2: " << e.what() << "\n";
    return 2;
  } catch (const ads2::convergence_error& e) {
    std::cerr << "ads2: non-convergence: " << e.what() << "\n";
    return 3;
  } catch (const ads2::branch_error& e) {
    std::cerr << "ads2: special-function branch failure: " << e.what() << "\n";
    return 3;
  }
  out.doc["provenance"] = {{"tool", "ads2"}, {"version", ads2::version}};

  std::string text = out.csv.empty() ? out.doc.dump(2) + "\n" : out.csv;
  if (c.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(c.out, std::ios::binary);
    if (!f) {
      std::cerr << "ads2: cannot write " << c.out << "\n";
      return 2;
    }
    f << text;
  }
  return out.code;
}
