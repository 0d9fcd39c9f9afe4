#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "cdo/algebroid.hpp"
#include "cdo/brst.hpp"
#include "cdo/flagtop.hpp"
#include "cdo/groupcdo.hpp"
#include "cli.hpp"

using namespace cdo;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      note += (note.empty() ? "" : "; ") + what;
    }
  }
};

std::vector<LieAlgebra> builtins() {
  return {sl(2), sl(3), borel_of_sl(2).algebra, borel_of_sl(3).algebra, nilradical_of_sl(3).algebra,
          parabolic_of_sl(3, {2}).algebra, heisenberg(3), heisenberg(5), abelian(3)};
}

Matrix<Scalar> killing_times(const LieAlgebra& g, const Scalar& s) { return lift<Scalar>(killing_form(g)) * s; }

Outcome killing_and_levels() {
  Outcome o;
  QMatrix k = killing_form(sl(2));
  o.require(k(1, 1) == Rational(8) && k(0, 2) == Rational(4) && k(2, 0) == Rational(4) && k(0, 0).is_zero(),
            "killing(sl2)");
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-9, 9);
  for (const auto& g : builtins()) {
    auto basis = invariant_form_space(g);
    for (int trial = 0; trial < 100; ++trial) {
      QMatrix f = zero_matrix(g.dim(), g.dim());
      for (const auto& b : basis) f += b * Rational(d(rng), 1 + (trial % 3));
      if (dual_level(g, dual_level(g, f)) != f) {
        o.require(false, "dual_level involution on " + g.name());
        break;
      }
    }
  }
  o.require(critical_level(sl(2)) == k * Rational(-1, 2), "critical(sl2)");
  return o;
}

Cochain random_cochain(int n, int degree, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  Cochain f;
  f.degree = degree;
  for (const auto& s : subsets(n, degree)) f.add(s, Scalar(Rational(d(rng))));
  return f;
}

TildeCochain random_tilde(int n, int degree, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  TildeCochain h;
  h.degree = degree;
  for (const auto& s : subsets(n, degree - 1))
    for (int k = 0; k < n; ++k) h.add(s, k, Scalar(Rational(d(rng))));
  return h;
}

Outcome cohomology() {
  Outcome o;
  std::mt19937 rng(3);
  for (const auto& g : builtins()) {
    for (int i = 0; i + 2 <= g.dim(); ++i)
      if (!d_trivial(g, d_trivial(g, random_cochain(g.dim(), i, rng))).values.empty())
        o.require(false, "d^2 trivial on " + g.name());
    TildeCochain constant;
    constant.add({}, -1, Scalar(Rational(5)));
    if (!d_tilde(g, d_tilde(g, constant)).is_zero()) o.require(false, "d^2 tilde on " + g.name());
    for (int i = 1; i <= g.dim() + 1; ++i)
      if (!d_tilde(g, d_tilde(g, random_tilde(g.dim(), i, rng))).is_zero())
        o.require(false, "d^2 tilde on " + g.name());
  }
  o.require(cohomology_dims(sl(2), ComplexKind::Trivial) == std::vector<int>{1, 0, 0, 1}, "H(sl2)");
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> dims = cohomology_dims(abelian(n), ComplexKind::Trivial);
    long c = 1;
    for (int i = 0; i <= n; ++i) {
      if (i >= static_cast<int>(dims.size()) || dims[i] != c) o.require(false, "H(abelian" + std::to_string(n) + ")");
      c = c * (n - i) / (i + 1);
    }
  }
  for (const auto& g : {sl(2), sl(3)}) {
    int h3 = third_cohomology(g).dim;
    o.require(h3 == 1 && static_cast<int>(invariant_form_space(g).size()) == h3, "H3 vs forms on " + g.name());
  }
  return o;
}

Outcome algebroids() {
  Outcome o;
  for (const auto& g : {sl(2), sl(3)}) {
    CanonicalObjects obj = canonical_objects(g, killing_times(g, Polynomial::t()));
    for (const auto* a : {&obj.tilde, &obj.cocycle}) {
      try {
        check_axioms(*a);
      } catch (const Error& e) {
        o.require(false, std::string("axioms on ") + g.name() + ": " + e.what());
      }
    }
    MorphismCertificate m = check_morphism(obj.tilde, obj.cocycle, obj.h);
    o.require(m.pairing_ok, "h pairing condition on " + g.name());
    if (!m.cocycle_ok) {
      bool half = m.cocycle_residual == Scalar(Rational(-1, 2)) * obj.cocycle.c;
      o.require(false, "h cocycle condition on " + g.name() + (half ? " (d h = c/2)" : ""));
    }
  }
  LieAlgebra g = sl(2);
  CanonicalObjects obj = canonical_objects(g, killing_times(g, Scalar(1)));
  ConstantVertexAlgebroid zero{g, lift<Scalar>(zero_matrix(3, 3)), TildeCochain{3, {}}};
  o.require(!find_morphism(obj.cocycle, zero).has_value(), "no morphism to level zero");
  return o;
}

Outcome group_identities() {
  Outcome o;
  auto run = [&](const MatrixGroup& grp, const Matrix<Scalar>& level) {
    DualEmbeddingReport r = verify_dual_embedding(GroupCdo(grp, level));
    for (const auto& c : r.checks) o.require(c.passed, grp.name() + ": " + c.name);
    o.require(r.checks.size() == 15, "check count");
  };
  MatrixGroup sl2 = MatrixGroup::special_linear(2);
  run(sl2, killing_times(sl2.algebra(), Polynomial::t()));
  GroupCdo sym(sl2, killing_times(sl2.algebra(), Polynomial::t()));
  o.require(sym.product1(sym.dual_embedding(0), sym.dual_embedding(2)) == Polynomial::parse("-4*t - 4"),
            "(tau_e, tau_f)^o");
  MatrixGroup sl3 = MatrixGroup::special_linear(3);
  run(sl3, lift<Scalar>(zero_matrix(8, 8)));
  return o;
}

Outcome brst_square_check() {
  Outcome o;
  SquareReport r = brst_square(sl(2), 2);
  o.require(!r.square_zero, "d^2 nonzero on sl2");
  if (!r.matches_killing_operator)
    o.require(false, "d^2 vs the Killing operator on sl2" + (r.ratio ? " (ratio " + r.ratio->str() + ")" : std::string()));
  for (const auto& g : {heisenberg(3), abelian(1), abelian(2), abelian(3), nilradical_of_sl(3).algebra})
    o.require(brst_square(g, 2).square_zero, "d^2 = 0 on " + g.name());
  return o;
}

Outcome ghost_current_check() {
  Outcome o;
  try {
    GhostCurrentReport r = ghost_currents(sl(2));
    o.require(r.level == killing_form(sl(2)), "(1)-products");
    o.require(r.bracket_ok, "(0)-products");
  } catch (const OpeCheckFailure& e) {
    o.require(false, e.what());
  }
  return o;
}

Outcome example_affine_line() {
  Outcome o;
  const int w = 3;
  BrstComplex c(abelian(1), {ModuleKind::BetaGamma, {}}, w, -2 * w, 4);
  CohomologyTable t = brst_cohomology(c);
  o.require(t.dims[0][0] == 1, "H0 at weight 0");
  int h0 = 0;
  for (const auto& [wt, row] : t.dims)
    for (const auto& [q, d] : row) {
      if (q == 0) h0 += d;
      else if (d != 0) o.require(false, "H" + std::to_string(q) + " at weight " + std::to_string(wt));
    }
  o.require(h0 == 1, "total H0");
  return o;
}

Outcome critical_gate() {
  Outcome o;
  LevelSolution b = admissible_levels(borel_of_sl(2));
  o.require(b.unique() && b.level(*b.particular) == critical_level(sl(2)), "borel(sl2)");
  o.require(admissible_levels(parabolic_of_sl(3, {2})).empty(), "parabolic(sl3)");
  o.require(admissible_levels(nilradical_of_sl(2)).all_levels(), "n(sl2)");
  return o;
}

Outcome relative_check() {
  Outcome o;
  SubalgebraSpec b = borel_of_sl(2);
  RelativeReport r = relative_subcomplex(b, {ModuleKind::Currents, restrict_form(b, critical_level(b.parent))}, 1);
  o.require(r.stable, "stability: " + r.first_violation);
  o.require(r.filtered_dim > 0 && r.excluded_by_ghost > 0, "filter");
  return o;
}

Outcome ch2_check() {
  Outcome o;
  for (const char* name : {"A2", "A3", "B2", "G2"}) {
    RootSystem rs = root_system_from_name(name);
    o.require(ch2_class(rs, {}).zero, std::string("G/B in ") + name);
    for (int drop = 1; drop <= rs.rank; ++drop) {
      std::vector<int> levi;
      for (int s = 1; s <= rs.rank; ++s)
        if (s != drop) levi.push_back(s);
      if (levi.empty()) continue;
      o.require(!ch2_class(rs, levi).zero, std::string("maximal parabolic in ") + name);
    }
    auto w = weyl_group(rs);
    QMatrix all = sum_of_squares(rs.positive);
    for (const auto& g : w)
      if (QMatrix(g * all * g.transpose()) != all) {
        o.require(false, std::string("invariance in ") + name);
        break;
      }
  }
  return o;
}

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome classification() {
  Outcome o;
  struct Case {
    std::vector<std::string> args;
    const char* golden;
  };
  const std::vector<Case> cases{
      {{"classify", "--space", "group", "--algebra", "sl2"}, "classify_group_sl2.json"},
      {{"classify", "--space", "group", "--algebra", "sl3"}, "classify_group_sl3.json"},
      {{"classify", "--space", "G/N", "--algebra", "sl3"}, "classify_gn_sl3.json"},
      {{"classify", "--space", "G/B", "--algebra", "sl3"}, "classify_gb_sl3.json"},
      {{"classify", "--space", "G/P", "--algebra", "sl3"}, "classify_gp_sl3.json"},
  };
  for (const auto& c : cases) {
    std::ostringstream out, err;
    int code = cli::run(c.args, out, err);
    o.require(code == 0, std::string(c.golden) + " exit code");
    o.require(out.str() == read(std::string(CDO_GOLDEN_DIR) + "/" + c.golden), std::string(c.golden) + " differs");
  }
  for (const char* g : {"sl2", "sl3"}) {
    o.require(existence_report(SpaceKind::Group, g).torsor_dim == 1, std::string("group ") + g);
    o.require(existence_report(SpaceKind::BaseAffine, g).torsor_dim == 1, std::string("G/N ") + g);
  }
  ExistenceReport gb = existence_report(SpaceKind::Flag, "sl3");
  o.require(gb.statement == "unique up to unique isomorphism", "G/B");
  ExistenceReport gp = existence_report(SpaceKind::Partial, "sl3");
  o.require(gp.verdict == "empty" && gp.ch2 && !gp.ch2->zero && gp.levels == "empty", "G/P witnesses");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    double budget;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"Killing form and levels", 1, killing_and_levels},
      {"Lie algebra cohomology", 5, cohomology},
      {"vertex algebroids over the constants", 5, algebroids},
      {"dual embedding identities on SL(2) and SL(3)", 60, group_identities},
      {"square of the BRST differential", 30, brst_square_check},
      {"ghost currents", 10, ghost_current_check},
      {"cdo of the affine line", 60, example_affine_line},
      {"critical level gate", 1, critical_gate},
      {"relative subcomplex", 10, relative_check},
      {"ch2 verdicts", 10, ch2_check},
      {"classification reports", 10, classification},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= criteria[i].budget) o.require(false, "over time budget");
    failed += !o.pass;
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].title << " ("
              << std::fixed << std::setprecision(2) << secs << " s)";
    if (!o.note.empty()) std::cout << "  [" << o.note << "]";
    std::cout << "\n";
  }
  return failed == 0 ? 0 : 1;
}
