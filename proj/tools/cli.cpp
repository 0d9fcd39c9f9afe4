#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "cdo/algebroid.hpp"
#include "cdo/brst.hpp"
#include "cdo/cohomology.hpp"
#include "cdo/flagtop.hpp"
#include "cdo/groupcdo.hpp"

namespace cdo::cli {

namespace {

using ojson = nlohmann::ordered_json;

template <class S>
ojson matrix_json(const Matrix<S>& m) {
  ojson rows = ojson::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    ojson row = ojson::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

std::string digest(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << h;
  return s.str();
}

std::string join(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) s += (s.empty() ? "" : " ") + a;
  return s;
}

std::vector<int> parse_roots(const std::string& text) {
  std::vector<int> out;
  if (text.empty() || text == "none" || text == "borel") return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw InputError("bad simple root list: " + text);
    out.push_back(std::stoi(item));
  }
  return out;
}

// symbolic|t, critical, minus-killing or a rational multiple of the Killing form.
Rational level_factor(const std::string& token) {
  try {
    return Rational::parse(token);
  } catch (const std::invalid_argument&) {
    throw InputError("unknown level: " + token);
  }
}

Matrix<Scalar> symbolic_level(const LieAlgebra& g, const std::string& token) {
  Matrix<Scalar> k = lift<Scalar>(killing_form(g));
  if (token == "symbolic" || token == "t") return k * Polynomial::t();
  if (token == "critical") return lift<Scalar>(critical_level(g));
  if (token == "minus-killing") return k * Scalar(Rational(-1));
  return k * Scalar(level_factor(token));
}

QMatrix module_level(const NamedAlgebra& named, const std::string& token) {
  const LieAlgebra& g = named.algebra;
  QMatrix k = killing_form(g);
  if (token == "minus-killing") return k * Rational(-1);
  if (token == "critical") return k * Rational(-1, 2);
  if (token == "parent-critical") {
    if (!named.sub) throw InputError("parent-critical needs a subalgebra");
    return restrict_form(*named.sub, critical_level(named.sub->parent));
  }
  return k * level_factor(token);
}

ModuleSpec parse_module(const NamedAlgebra& named, const std::string& text) {
  if (text == "none") return {};
  if (text == "betagamma") return {ModuleKind::BetaGamma, {}};
  if (text.rfind("currents:", 0) == 0) return {ModuleKind::Currents, module_level(named, text.substr(9))};
  throw InputError("unknown module: " + text);
}

ojson dims_json(const std::map<int, std::map<int, int>>& dims) {
  ojson out = ojson::object();
  for (const auto& [w, row] : dims) {
    ojson r = ojson::object();
    for (const auto& [q, d] : row) r[std::to_string(q)] = d;
    out[std::to_string(w)] = r;
  }
  return out;
}

ojson ch2_json(const Ch2Class& c) {
  return {{"system", c.system},
          {"levi", c.levi},
          {"q", matrix_json(c.q)},
          {"zero", c.zero},
          {"multiple_of_invariant", c.multiple ? ojson(c.multiple->str()) : ojson(nullptr)}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Outcome {
  ojson report;
  int code = 0;
};

Outcome lie_validate(const std::string& path) {
  std::string text = read_file(path);
  LieAlgebra g = algebra_from_json(text);
  Outcome o;
  o.report["input_digest"] = digest(text);
  o.report["algebra"] = g.name();
  o.report["dim"] = g.dim();
  o.report["basis"] = g.basis();
  o.report["verdict"] = "valid";
  return o;
}

Outcome lie_info(const std::string& what, const std::string& name) {
  NamedAlgebra named = builtin(name);
  const LieAlgebra& g = named.algebra;
  Outcome o;
  o.report["algebra"] = g.name();
  if (what == "killing") {
    o.report["basis"] = g.basis();
    o.report["killing"] = matrix_json(killing_form(g));
  } else if (what == "forms") {
    ojson forms = ojson::array();
    for (const auto& f : invariant_form_space(g)) forms.push_back(matrix_json(f));
    o.report["dimension"] = forms.size();
    o.report["invariant_forms"] = forms;
  } else {
    o.report["killing"] = matrix_json(killing_form(g));
    o.report["critical"] = matrix_json(critical_level(g));
    if (named.sub) {
      LevelSolution l = admissible_levels(*named.sub);
      ojson adm{{"parent", named.sub->parent.name()}, {"verdict", l.verdict()}};
      if (l.particular) {
        adm["particular"] = matrix_json(l.level(*l.particular));
        ojson dirs = ojson::array();
        for (const auto& d : l.directions) dirs.push_back(matrix_json(l.level(d)));
        adm["directions"] = dirs;
        if (l.unique()) adm["is_parent_critical"] = l.level(*l.particular) == critical_level(named.sub->parent);
      }
      o.report["admissible_levels"] = adm;
    }
  }
  return o;
}

Outcome cohomology_dims_cmd(const std::string& name, bool tilde) {
  LieAlgebra g = builtin(name).algebra;
  Outcome o;
  o.report["algebra"] = g.name();
  o.report["complex"] = tilde ? "tilde" : "trivial";
  o.report["dims"] = cohomology_dims(g, tilde ? ComplexKind::Tilde : ComplexKind::Trivial);
  return o;
}

Outcome algebroid_pi0(const std::string& name) {
  LieAlgebra g = builtin(name).algebra;
  Pi0Report r = pi0_report(g);
  Outcome o;
  o.report["algebra"] = g.name();
  o.report["h3_dim"] = r.h3_dim;
  o.report["semisimple"] = r.semisimple;
  o.report["invariant_forms_dim"] = r.invariant_forms_dim ? ojson(*r.invariant_forms_dim) : ojson(nullptr);
  o.report["bijection"] = r.bijection ? ojson(*r.bijection) : ojson(nullptr);
  o.report["verdict"] = "isomorphism classes are in bijection with H^3";
  if (r.bijection == false) o.code = 1;
  return o;
}

Outcome algebroid_check(const std::string& name, const std::string& level) {
  LieAlgebra g = builtin(name).algebra;
  Matrix<Scalar> form = symbolic_level(g, level);
  CanonicalObjects obj = canonical_objects(g, form);
  Outcome o;
  o.report["algebra"] = g.name();
  o.report["level"] = matrix_json(form);
  ojson axioms = ojson::object();
  bool all = true;
  auto axiom = [&](const char* label, const ConstantVertexAlgebroid& a) {
    std::string failure;
    try {
      check_axioms(a);
    } catch (const VerificationError& e) {
      failure = e.what();
    }
    axioms[label] = failure.empty() ? ojson(true) : ojson(failure);
    all = all && failure.empty();
  };
  axiom("tilde", obj.tilde);
  axiom("cocycle", obj.cocycle);
  axiom("currents", obj.currents);
  o.report["axioms"] = axioms;
  MorphismCertificate lit = check_morphism(obj.tilde, obj.cocycle, obj.h);
  ConstantVertexAlgebroid half = obj.cocycle;
  half.c = Scalar(Rational(1, 2)) * obj.cocycle.c;
  o.report["h_pairing"] = lit.pairing_ok;
  o.report["h_to_cocycle_object"] = lit.ok();
  o.report["h_to_half_cocycle_object"] = check_morphism(obj.tilde, half, obj.h).ok();
  CanonicalObjects zero = canonical_objects(g, lift<Scalar>(zero_matrix(g.dim(), g.dim())));
  o.report["morphism_to_level_zero"] = find_morphism(obj.cocycle, zero.cocycle).has_value();
  o.report["verdict"] = all ? "axioms hold" : "axioms fail";
  o.code = all ? 0 : 1;
  return o;
}

Outcome group_verify(const std::string& name, const std::string& level) {
  MatrixGroup grp = MatrixGroup::from_name(name);
  Matrix<Scalar> form = symbolic_level(grp.algebra(), level);
  GroupCdo cdo(grp, form);
  DualEmbeddingReport r = verify_dual_embedding(cdo);
  Outcome o;
  o.report["group"] = grp.name();
  o.report["level"] = matrix_json(form);
  ojson checks = ojson::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  o.report["checks"] = checks;
  o.report["verdict"] = r.ok() ? "verified" : "failed";
  o.code = r.ok() ? 0 : 1;
  return o;
}

Outcome brst_square_cmd(const std::string& name, int w) {
  LieAlgebra g = builtin(name).algebra;
  SquareReport r = brst_square(g, w);
  Outcome o;
  o.report["algebra"] = g.name();
  o.report["max_weight"] = w;
  o.report["square_zero"] = r.square_zero;
  o.report["matches_killing_operator"] = r.matches_killing_operator;
  o.report["ratio"] = r.ratio ? ojson(r.ratio->str()) : ojson(nullptr);
  o.report["blocks"] = r.blocks;
  o.report["nonzero_blocks"] = r.nonzero_blocks;
  o.report["verdict"] = r.square_zero ? "d²=0" : "d²≠0";
  o.code = r.matches_killing_operator ? 0 : 1;
  return o;
}

Outcome brst_cohomology_cmd(const std::string& name, const std::string& module, int w, const std::string& relative,
                            int aux_max) {
  NamedAlgebra named = builtin(name);
  ModuleSpec spec = parse_module(named, module);
  Outcome o;
  o.report["algebra"] = named.algebra.name();
  o.report["module"] = module;
  o.report["max_weight"] = w;
  if (!relative.empty()) {
    if (relative != "h") throw InputError("relative cohomology is taken with respect to h");
    if (!named.sub) throw InputError("relative cohomology needs a subalgebra of sl_n");
    if (spec.kind == ModuleKind::BetaGamma) throw InputError("relative cohomology needs a graded current module");
    RelativeReport r = relative_subcomplex(*named.sub, spec, w);
    o.report["relative"] = "h";
    o.report["total_dim"] = r.total_dim;
    o.report["filtered_dim"] = r.filtered_dim;
    o.report["stable"] = r.stable;
    if (!r.stable) {
      o.report["violation"] = r.first_violation;
      o.report["verdict"] = "unstable";
      o.code = 1;
      return o;
    }
    o.report["dims"] = dims_json(r.dims);
    o.report["verdict"] = "stable";
    return o;
  }
  bool bg = spec.kind == ModuleKind::BetaGamma;
  BrstComplex c(named.algebra, spec, w, bg ? -2 * w : -64, bg ? aux_max : 64);
  CohomologyTable t = brst_cohomology(c);
  if (bg) o.report["aux_window"] = {-2 * w, aux_max};
  o.report["dims"] = dims_json(t.dims);
  o.report["total"] = t.total();
  o.report["verdict"] = "d²=0";
  return o;
}

Outcome flag_ch2(const std::string& type, int rank, const std::optional<std::string>& parabolic) {
  if (type.size() != 1) throw InputError("bad root system type: " + type);
  RootSystem rs = build_root_system(static_cast<char>(std::toupper(type[0])), rank);
  std::vector<int> levi = parabolic ? parse_roots(*parabolic) : std::vector<int>{rank};
  Ch2Class c = ch2_class(rs, levi);
  Outcome o;
  o.report["system"] = rs.name();
  o.report["positive_roots"] = rs.positive.size();
  o.report["weyl_order"] = weyl_group(rs).size();
  o.report["ch2"] = ch2_json(c);
  o.report["verdict"] = c.zero ? "ch2 = 0" : "ch2 != 0";
  return o;
}

Outcome classify_cmd(const std::string& space, const std::string& algebra, const std::optional<std::string>& parabolic) {
  SpaceKind kind = space_kind_from_name(space);
  std::vector<int> levi = parabolic ? parse_roots(*parabolic) : std::vector<int>{};
  if (kind == SpaceKind::Partial && parabolic && levi.empty()) throw InputError("G/P needs a nonempty Levi");
  ExistenceReport r = existence_report(kind, algebra, levi);
  Outcome o;
  o.report["space"] = r.space;
  o.report["algebra"] = r.algebra;
  o.report["verdict"] = r.verdict;
  o.report["statement"] = r.statement;
  if (r.verdict == "torsor") o.report["torsor_dim"] = r.torsor_dim;
  if (!r.levi.empty()) o.report["levi"] = r.levi;
  ojson witnesses = ojson::object();
  if (r.ch2) witnesses["ch2"] = ch2_json(*r.ch2);
  if (r.levels) witnesses["admissible_levels"] = *r.levels;
  o.report["witnesses"] = witnesses;
  o.report["consistent"] = r.consistent;
  o.code = r.consistent ? 0 : 1;
  return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"cdo: chiral differential operator computations"};
  app.require_subcommand(1);
  Outcome outcome;
  std::function<Outcome()> action;

  auto* lie = app.add_subcommand("lie", "Lie algebra data");
  lie->require_subcommand(1);
  std::string file, algebra;
  lie->add_subcommand("validate", "validate a structure-constant file")
      ->callback([&] { action = [&] { return lie_validate(file); }; })
      ->add_option("file", file)
      ->required();
  for (const char* what : {"killing", "forms", "levels"}) {
    std::string w = what;
    lie->add_subcommand(what, std::string("print ") + what)
        ->callback([&, w] { action = [&, w] { return lie_info(w, algebra); }; })
        ->add_option("algebra", algebra)
        ->required();
  }

  auto* coh = app.add_subcommand("cohomology", "Lie algebra cohomology");
  coh->require_subcommand(1);
  bool tilde = false;
  auto* dims = coh->add_subcommand("dims", "cohomology dimensions");
  dims->add_option("algebra", algebra)->required();
  dims->add_flag("--tilde", tilde);
  dims->callback([&] { action = [&] { return cohomology_dims_cmd(algebra, tilde); }; });

  auto* alg = app.add_subcommand("algebroid", "vertex algebroids over the constants");
  alg->require_subcommand(1);
  std::string level = "symbolic";
  alg->add_subcommand("pi0", "isomorphism classes")
      ->callback([&] { action = [&] { return algebroid_pi0(algebra); }; })
      ->add_option("algebra", algebra)
      ->required();
  auto* check = alg->add_subcommand("check", "axioms of the canonical objects");
  check->add_option("algebra", algebra)->required();
  check->add_option("--level", level);
  check->callback([&] { action = [&] { return algebroid_check(algebra, level); }; });

  auto* group = app.add_subcommand("group", "cdo on matrix groups");
  group->require_subcommand(1);
  std::string group_name;
  auto* verify = group->add_subcommand("verify-dual", "verify the dual embedding");
  verify->add_option("group", group_name)->required();
  verify->add_option("--level", level);
  verify->callback([&] { action = [&] { return group_verify(group_name, level); }; });

  auto* brst = app.add_subcommand("brst", "BRST complexes");
  brst->require_subcommand(1);
  int max_weight = 2;
  std::string positional, module = "none", relative;
  int aux_max = 4;
  auto* square = brst->add_subcommand("square", "square of the ghost differential");
  square->add_option("name", positional, "algebra");
  square->add_option("--algebra", algebra);
  square->add_option("--max-weight", max_weight)->check(CLI::Range(0, 8));
  square->callback([&] {
    if (algebra.empty()) algebra = positional;
    if (algebra.empty()) throw CLI::RequiredError("algebra");
    action = [&] { return brst_square_cmd(algebra, max_weight); };
  });
  auto* bcoh = brst->add_subcommand("cohomology", "BRST cohomology");
  bcoh->add_option("--algebra", algebra)->required();
  bcoh->add_option("--module", module);
  bcoh->add_option("--max-weight", max_weight)->check(CLI::Range(0, 8));
  bcoh->add_option("--relative", relative);
  bcoh->add_option("--aux-max", aux_max)->check(CLI::Range(0, 16));
  bcoh->callback(
      [&] { action = [&] { return brst_cohomology_cmd(algebra, module, max_weight, relative, aux_max); }; });

  auto* flag = app.add_subcommand("flag", "flag varieties");
  flag->require_subcommand(1);
  std::string type;
  int rank = 0;
  std::optional<std::string> parabolic;
  auto* ch2 = flag->add_subcommand("ch2", "second Chern character of the tangent bundle");
  ch2->add_option("--type", type)->required();
  ch2->add_option("--rank", rank)->required()->check(CLI::Range(1, 8));
  ch2->add_option("--parabolic", parabolic);
  ch2->callback([&] { action = [&] { return flag_ch2(type, rank, parabolic); }; });

  auto* classify = app.add_subcommand("classify", "existence and classification of cdo");
  std::string space;
  classify->add_option("--space", space)->required();
  classify->add_option("--algebra", algebra)->required();
  classify->add_option("--parabolic", parabolic);
  classify->callback([&] { action = [&] { return classify_cmd(space, algebra, parabolic); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  try {
    outcome = action();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  ojson report;
  report["schema"] = "1";
  report["command"] = join(args);
  report["inputs_digest"] = digest(join(args));
  for (auto& [k, v] : outcome.report.items()) report[k] = v;
  out << report.dump(2) << "\n";
  return outcome.code;
}

}  // namespace cdo::cli
