#include "cli.hpp"

#include <CLI11.hpp>

#include "galg/cyclo.hpp"
#include "json_io.hpp"
#include "suites.hpp"

namespace galg::cli {

using io::json;

namespace {

struct Options {
  std::string group, matrix, elements, homs, lattice, x, basis, basis2, theta, phi, section, section2, scale_by;
  std::string name, suite, budget;
  std::vector<int> params;
  std::vector<long> h;
  int a = 0, k = 0, r = 0;
  long f = 0, ell = 0, fmax = 0, ellmax = 0, unit_f = 0;
  std::uint64_t seed = 1;
  bool transpose = false, oracle = false, flip = false, as_homs = false;
};

json header(const std::string& command) { return {{"schema_version", io::kSchemaVersion}, {"command", command}}; }

GroupPtr need_group(const Options& o) {
  if (o.group.empty()) throw std::invalid_argument("--group is required");
  return group_from_catalog(o.group);
}

GroupAlgebraMatrix need_matrix(const GroupPtr& g, const std::string& text, const char* flag) {
  if (text.empty()) throw std::invalid_argument(std::string(flag) + " is required");
  return io::matrix_from_json(g, io::load_argument(text));
}

std::vector<ModuleVector> need_vectors(const GroupPtr& g, const std::string& text, const char* flag, int k) {
  if (text.empty()) throw std::invalid_argument(std::string(flag) + " is required");
  auto v = io::vectors_from_json(g, io::load_argument(text));
  for (const auto& x : v)
    if (static_cast<int>(x.size()) != k) throw std::invalid_argument(std::string(flag) + ": vector length differs from --k");
  return v;
}

Budget budget_of(const Options& o) {
  Budget b = Budget::from_env();
  // Later entries win, so flags override the environment.
  if (!o.budget.empty()) b = Budget::parse(b.to_string() + "," + o.budget);
  return b;
}

int cmd_group(const Options& o, std::ostream& out) {
  if (o.name.empty()) throw std::invalid_argument("--name is required");
  auto g = group_from_catalog(o.name, o.params);
  json j = header("group");
  j["name"] = g->name();
  j["order"] = g->order();
  j["exponent"] = g->exponent();
  j["abelian"] = g->is_abelian();
  j["classes"] = g->classes();
  json irr = json::array();
  for (int chi = 0; chi < g->num_irreps(); ++chi) {
    json ch = json::array();
    for (const auto& c : g->classes()) ch.push_back(g->character(chi, c.front()).to_string());
    irr.push_back({{"degree", g->degree(chi)}, {"character", ch}, {"dual", g->dual_index(chi)}});
  }
  j["irreps"] = irr;
  out << j.dump(2) << "\n";
  return kOk;
}

int cmd_nrd(const Options& o, std::ostream& out) {
  auto g = need_group(o);
  auto m = need_matrix(g, o.matrix, "--matrix");
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
  json j = header("nrd");
  j["nrd"] = io::to_json(nrd(m));
  out << j.dump(2) << "\n";
  return kOk;
}

int cmd_adjoint(const Options& o, std::ostream& out) {
  auto g = need_group(o);
  auto m = need_matrix(g, o.matrix, "--matrix");
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
  auto adj = adjoint_star(m);
  auto n = nrd(m);
  auto p = scale(n.to_group_algebra(), GroupAlgebraMatrix::identity(g, m.rows()));
  bool ok = m * adj == p && adj * m == p;
  json j = header("adjoint");
  j["adjoint"] = io::to_json(adj);
  j["nrd"] = io::to_json(n);
  j["identity_holds"] = ok;
  out << j.dump(2) << "\n";
  return ok ? kOk : kMathFailure;
}

int cmd_xi(const Options& o, std::ostream& out) {
  auto g = need_group(o);
  auto b = budget_of(o);
  json j = header("xi");
  j["budget"] = b.to_string();
  j["xi"] = io::to_json(xi_approx(g, b));
  out << j.dump(2) << "\n";
  return kOk;
}

int cmd_fit(const Options& o, std::ostream& out) {
  auto g = need_group(o);
  auto m = need_matrix(g, o.matrix, "--matrix");
  auto b = budget_of(o);
  json j = header("fit");
  j["budget"] = b.to_string();
  j["a"] = o.a;
  if (o.oracle) j["fit"] = io::to_json(fit_classical_oracle(m, o.a));
  else if (o.transpose) j["fit"] = io::to_json(fit_transpose(m, o.a, b));
  else j["fit"] = io::to_json(fit_matrix(m, o.a, b));
  out << j.dump(2) << "\n";
  return kOk;
}

int cmd_annihilate(const Options& o, std::ostream& out) {
  auto g = need_group(o);
  auto m = need_matrix(g, o.matrix, "--matrix");
  auto x = o.x.empty() ? CentralElement::scalar(g, CycloNum(g->order())) : io::central_from_json(g, io::load_argument(o.x));
  auto res = annihilation_check(m, x);
  json inv = json::array();
  for (const auto& z : res.invariants) inv.push_back(z.get_str());
  json j = header("annihilate");
  j["annihilates"] = res.annihilates;
  j["cokernel_invariants"] = inv;
  j["nrd"] = io::to_json(res.nrd);
  j["y"] = io::to_json(res.y);
  out << j.dump(2) << "\n";
  return kOk;
}

int cmd_wedge(const Options& o, std::ostream& out) {
  auto g = need_group(o);
  auto v = need_vectors(g, o.elements, "--elements", o.k);
  json j = header("wedge");
  j["kind"] = o.as_homs ? "homs" : "elements";
  j["wedge"] = o.as_homs ? io::to_json(wedge_homs(g, o.k, v)) : io::to_json(wedge_elements(g, o.k, v));
  out << j.dump(2) << "\n";
  return kOk;
}

int cmd_pair(const Options& o, std::ostream& out) {
  auto g = need_group(o);
  auto w = need_vectors(g, o.elements, "--elements", o.k);
  auto h = need_vectors(g, o.homs, "--homs", o.k);
  auto v = pair(wedge_homs(g, o.k, h), wedge_elements(g, o.k, w));
  json j = header("pair");
  if (v.r == 0) j["value"] = io::to_json(to_central(v));
  else j["value"] = io::to_json(v);
  out << j.dump(2) << "\n";
  return kOk;
}

int cmd_epsilon(const Options& o, std::ostream& out) {
  auto g = need_group(o);
  auto m = need_matrix(g, o.matrix, "--matrix");
  auto eps = epsilon_M(m);
  bool in_kernel = in_kernel_wedge(eps, m);
  json vanish = json::array();
  for (int chi = 0; chi < g->num_irreps(); ++chi) vanish.push_back(eps.is_zero_at(chi));
  json j = header("epsilon");
  j["epsilon"] = io::to_json(eps);
  j["in_kernel"] = in_kernel;
  j["vanishes_at"] = vanish;
  out << j.dump(2) << "\n";
  return in_kernel ? kOk : kMathFailure;
}

int cmd_rubin(const Options& o, std::ostream& out) {
  auto g = need_group(o);
  auto elems = need_vectors(g, o.elements, "--elements", o.k);
  std::vector<ModuleVector> gens;
  if (o.lattice.empty()) gens = matrix_rows(GroupAlgebraMatrix::identity(g, o.k));
  else gens = need_vectors(g, o.lattice, "--lattice", o.k);
  auto xe = wedge_elements(g, o.k, elems);
  if (!o.scale_by.empty()) xe = scale(CentralElement::scalar(g, CycloNum(parse_rational(o.scale_by))), xe);
  auto b = budget_of(o);
  auto res = rubin_membership(xe, gens, static_cast<int>(elems.size()), xi_approx(g, b), b);
  json j = header("rubin");
  j["budget"] = b.to_string();
  j["verdict"] = verdict_name(res.verdict);
  j["reason"] = res.reason;
  j["tuples_tried"] = res.tried;
  if (!res.witness.empty()) {
    json w = json::array();
    for (const auto& f : res.witness) w.push_back(io::to_json(f));
    j["witness_homs"] = w;
    j["witness_value"] = io::to_json(res.witness_value);
  }
  out << j.dump(2) << "\n";
  return kOk;
}

int cmd_det(const Options& o, std::ostream& out) {
  auto g = need_group(o);
  json j = header("det");
  if (!o.theta.empty()) {
    auto theta = need_matrix(g, o.theta, "--theta");
    auto phi = need_matrix(g, o.phi, "--phi");
    auto s = need_matrix(g, o.section, "--section");
    auto iso = ses_iso(theta, phi, s);
    auto swapped = ses_iso(theta, phi, s, true);
    j["factor"] = io::to_json(iso.factor);
    j["swapped_factor"] = io::to_json(swapped.factor);
    j["image"] = io::to_json(iso.image);
    bool ok = true;
    if (!o.section2.empty()) {
      bool same = ses_iso(theta, phi, need_matrix(g, o.section2, "--section2")).factor == iso.factor;
      j["section_independent"] = same;
      ok = same;
    }
    out << j.dump(2) << "\n";
    return ok ? kOk : kMathFailure;
  }
  auto x = det_free(need_matrix(g, o.basis, "--basis"));
  j["det"] = io::to_json(x);
  bool ok = true;
  if (!o.basis2.empty()) {
    auto y = det_free(need_matrix(g, o.basis2, "--basis2"));
    ok = swap_commutes(x, y);
    j["tensor"] = io::to_json(tensor(x, y));
    j["swap_sign"] = io::to_json(swap_sign(x, y));
    j["swap_commutes"] = ok;
  }
  out << j.dump(2) << "\n";
  return ok ? kOk : kMathFailure;
}

json row_json(const DistributionRow& row) {
  return {{"f", row.f}, {"ell", row.ell}, {"lhs", row.lhs.to_string()}, {"rhs", row.rhs.to_string()},
          {"verdict", row.pass ? "pass" : "fail"}};
}

int cmd_cyclo(const Options& o, std::ostream& out) {
  json j = header("cyclo");
  j["flipped"] = o.flip;
  if (o.unit_f) {
    AbelianFieldSpec spec{o.unit_f, o.h.empty() ? std::vector<long>{1} : o.h};
    j["unit"] = io::to_json(cyclotomic_unit(spec));
    out << j.dump(2) << "\n";
    return kOk;
  }
  std::vector<DistributionRow> rows;
  if (o.fmax) rows = euler_family_check(o.fmax, o.ellmax ? o.ellmax : 2, o.flip);
  else if (o.f && o.ell) rows.push_back(distribution_check(o.f, o.ell, o.flip));
  else throw std::invalid_argument("give --f and --ell, --fmax and --ellmax, or --unit-f");
  json table = json::array();
  bool all = true;
  for (const auto& row : rows) {
    table.push_back(row_json(row));
    all = all && row.pass;
  }
  j["rows"] = table;
  j["all_pass"] = all;
  out << j.dump(2) << "\n";
  return all ? kOk : kMathFailure;
}

int cmd_suite(const Options& o, std::ostream& out) {
  auto ids = suites::suite_criteria(o.suite);
  auto b = budget_of(o);
  json j = header("suite");
  j["name"] = o.suite;
  j["seed"] = o.seed;
  j["budget"] = b.to_string();
  json results = json::array();
  bool ok = true;
  int cases = 0;
  for (int id : ids) {
    auto r = suites::run_criterion(id, o.seed, b);
    ok = ok && r.passed();
    cases += r.cases;
    results.push_back(suites::to_json(r));
  }
  j["results"] = results;
  j["cases"] = cases;
  j["passed"] = ok;
  out << j.dump(2) << "\n";
  return ok ? kOk : kMathFailure;
}

// {"command": ..., "args": {...}} becomes a flag list.
std::vector<std::string> expand_request(const std::string& path) {
  json req = io::load_argument("@" + path);
  if (!req.is_object() || !req.contains("command")) throw std::invalid_argument("request needs a \"command\" field");
  std::vector<std::string> args{req["command"].get<std::string>()};
  if (req.contains("args"))
    for (auto it = req["args"].begin(); it != req["args"].end(); ++it) {
      const json& v = it.value();
      if (v.is_boolean()) {
        if (v.get<bool>()) args.push_back("--" + it.key());
        continue;
      }
      if (v.is_array() && it.key() != "matrix" && !v.empty() && v[0].is_number()) {
        args.push_back("--" + it.key());
        for (const auto& x : v) args.push_back(x.dump());
        continue;
      }
      args.push_back("--" + it.key());
      args.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    }
  return args;
}

}  // namespace

int run_cli(const std::vector<std::string>& raw, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args = raw;
  try {
    if (args.size() == 2 && args[0] == "--request") args = expand_request(args[1]);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  CLI::App app{"Exact computations in finite group algebras", "galg"};
  app.require_subcommand(1);
  Options o;

  auto with_group = [&](CLI::App* s) { s->add_option("--group", o.group, "catalog group, e.g. C6, S3, D4, Q8, A4, C2xC3"); };
  auto with_budget = [&](CLI::App* s) { s->add_option("--budget", o.budget, "key=value overrides of GALG_BUDGET"); };

  auto* group = app.add_subcommand("group", "describe a catalog group");
  group->add_option("--name", o.name, "catalog name or family letter (C, D)")->required();
  group->add_option("--params", o.params, "family parameters");

  auto* nrd_cmd = app.add_subcommand("nrd", "reduced norm of a square matrix");
  with_group(nrd_cmd);
  nrd_cmd->add_option("--matrix", o.matrix, "matrix JSON or @file");

  auto* adj = app.add_subcommand("adjoint", "generalized adjoint M*");
  with_group(adj);
  adj->add_option("--matrix", o.matrix, "matrix JSON or @file");

  auto* xi = app.add_subcommand("xi", "approximate the Whitehead order");
  with_group(xi);
  with_budget(xi);

  auto* fit = app.add_subcommand("fit", "higher Fitting invariant of a matrix");
  with_group(fit);
  with_budget(fit);
  fit->add_option("--matrix", o.matrix, "matrix JSON or @file");
  fit->add_option("--a", o.a, "number of replaceable columns")->check(CLI::NonNegativeNumber);
  fit->add_flag("--transpose", o.transpose, "use the transpose invariant");
  fit->add_flag("--oracle", o.oracle, "classical Fitting ideal (abelian groups)");

  auto* ann = app.add_subcommand("annihilate", "check x annihilates the cokernel");
  with_group(ann);
  ann->add_option("--matrix", o.matrix, "square matrix JSON or @file");
  ann->add_option("--x", o.x, "central element (values or class_coords); default |G|");

  auto* wedge = app.add_subcommand("wedge", "reduced exterior power of module vectors");
  with_group(wedge);
  wedge->add_option("--k", o.k, "ambient free rank")->required();
  wedge->add_option("--elements", o.elements, "array of vectors in A^k");
  wedge->add_flag("--homs", o.as_homs, "treat the vectors as homs to A");

  auto* pr = app.add_subcommand("pair", "pair a wedge of homs with a wedge of elements");
  with_group(pr);
  pr->add_option("--k", o.k, "ambient free rank")->required();
  pr->add_option("--elements", o.elements, "array of vectors in A^k");
  pr->add_option("--homs", o.homs, "array of homs, given by their values on the standard basis");

  auto* eps = app.add_subcommand("epsilon", "kernel element of a d' x d matrix");
  with_group(eps);
  eps->add_option("--matrix", o.matrix, "matrix JSON or @file");

  auto* rub = app.add_subcommand("rubin", "Rubin lattice membership");
  with_group(rub);
  with_budget(rub);
  rub->add_option("--k", o.k, "ambient free rank")->required();
  rub->add_option("--elements", o.elements, "vectors whose wedge is tested");
  rub->add_option("--scale", o.scale_by, "rational factor applied to the wedge");
  rub->add_option("--lattice", o.lattice, "Z[G]-generators of the lattice; default the standard basis");

  auto* det_cmd = app.add_subcommand("det", "determinants of free modules and short exact sequences");
  with_group(det_cmd);
  det_cmd->add_option("--basis", o.basis, "basis rows of a free module");
  det_cmd->add_option("--basis2", o.basis2, "second basis: tensor and swap sign");
  det_cmd->add_option("--theta", o.theta, "injection P1 -> P2");
  det_cmd->add_option("--phi", o.phi, "surjection P2 -> P3");
  det_cmd->add_option("--section", o.section, "section P3 -> P2");
  det_cmd->add_option("--section2", o.section2, "second section for the independence check");

  auto* cyc = app.add_subcommand("cyclo", "cyclotomic units and the distribution relation");
  cyc->add_option("--f", o.f, "conductor");
  cyc->add_option("--ell", o.ell, "prime not dividing f");
  cyc->add_option("--fmax", o.fmax, "largest conductor of the family");
  cyc->add_option("--ellmax", o.ellmax, "largest prime of the family");
  cyc->add_flag("--flip", o.flip, "use sigma_ell in place of its inverse");
  cyc->add_option("--unit-f", o.unit_f, "compute the cyclotomic unit of conductor f");
  cyc->add_option("--subgroup", o.h, "subgroup H of (Z/f)^*");

  auto* suite = app.add_subcommand("suite", "run a property suite");
  suite->add_option("--name", o.suite, "oracle, nrd-props, adjoint, pairing, epsilon, detfun, cyclo, all")->required();
  suite->add_option("--seed", o.seed, "RNG seed");
  with_budget(suite);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (*group) return cmd_group(o, out);
    if (*nrd_cmd) return cmd_nrd(o, out);
    if (*adj) return cmd_adjoint(o, out);
    if (*xi) return cmd_xi(o, out);
    if (*fit) return cmd_fit(o, out);
    if (*ann) return cmd_annihilate(o, out);
    if (*wedge) return cmd_wedge(o, out);
    if (*pr) return cmd_pair(o, out);
    if (*eps) return cmd_epsilon(o, out);
    if (*rub) return cmd_rubin(o, out);
    if (*det_cmd) return cmd_det(o, out);
    if (*cyc) return cmd_cyclo(o, out);
    if (*suite) return cmd_suite(o, out);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kMathFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << app.help();
  return kUsage;
}

}  // namespace galg::cli
