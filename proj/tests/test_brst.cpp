#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cdo/brst.hpp"
#include "cdo/cohomology.hpp"

using namespace cdo;

namespace {

QMatrix dense(const BlockOperator& op) {
  QMatrix m = zero_matrix(op.target_dim, static_cast<Eigen::Index>(op.columns.size()));
  for (std::size_t c = 0; c < op.columns.size(); ++c)
    for (const auto& [i, v] : op.columns[c]) m(i, static_cast<Eigen::Index>(c)) = v;
  return m;
}

ModuleSpec currents(const QMatrix& level) { return {ModuleKind::Currents, level}; }

}  // namespace

TEST_CASE("ghost currents at the killing level") {
  for (const LieAlgebra& g : {sl(2), sl(3), borel_of_sl(2).algebra, heisenberg(3)}) {
    CAPTURE(g.name());
    GhostCurrentReport r = ghost_currents(g);
    CHECK(r.ok());
    CHECK(r.level == killing_form(g));
  }
}

TEST_CASE("brst charge") {
  FreeFieldAlgebra alg;
  GhostLayout lay = add_ghosts(alg, abelian(2));
  CHECK(brst_charge(abelian(2), alg, lay).is_zero());
  FreeFieldAlgebra h;
  GhostLayout hl = add_ghosts(h, heisenberg(3));
  FieldExpr d = brst_charge(heisenberg(3), h, hl);
  CHECK(d.weight() == 1);
  CHECK(d.charge() == 1);
  CHECK(d.odd());
  // d phi*_z = -phi*_x phi*_y, d phi*_x = 0
  State z = d.apply(0, state_of(FieldExpr::gen(hl.star(2), h), h), h);
  Monomial xy{mode_code(hl.star(0), -1), mode_code(hl.star(1), -1)};
  std::sort(xy.begin(), xy.end());
  CHECK(z == State{{xy, Rational(-1)}});
  CHECK(d.apply(0, state_of(FieldExpr::gen(hl.star(0), h), h), h).empty());
}

TEST_CASE("square of the ghost differential") {
  SquareReport r = brst_square(sl(2), 2);
  CHECK_FALSE(r.square_zero);
  REQUIRE(r.ratio.has_value());
  CHECK(*r.ratio == Rational(1, 2));
  CHECK_FALSE(r.matches_killing_operator);
  CHECK(r.nonzero_blocks > 0);

  SquareReport s3 = brst_square(sl(3), 1);
  REQUIRE(s3.ratio.has_value());
  CHECK(*s3.ratio == Rational(1, 2));

  for (const LieAlgebra& g : {heisenberg(3), nilradical_of_sl(3).algebra, abelian(2)}) {
    SquareReport n = brst_square(g, 2);
    CHECK(n.square_zero);
    CHECK(n.matches_killing_operator);
    CHECK_FALSE(n.ratio.has_value());
  }
  // the borel of sl2 has a nonzero but degenerate Killing form
  SquareReport b = brst_square(borel_of_sl(2).algebra, 2);
  REQUIRE(b.ratio.has_value());
  CHECK(*b.ratio == Rational(1, 2));
}

TEST_CASE("weight zero is the Chevalley-Eilenberg complex") {
  for (const LieAlgebra& g : {sl(2), heisenberg(3), borel_of_sl(2).algebra, abelian(2)}) {
    CAPTURE(g.name());
    BrstComplex c(g, {}, 0, -64, 64);
    if (!c.square_is_zero()) continue;
    CohomologyTable t = brst_cohomology(c);
    std::vector<int> ce = cohomology_dims(g, ComplexKind::Trivial);
    for (int q = 0; q < static_cast<int>(ce.size()); ++q) CHECK(t.dims[0][q] == ce[q]);
  }
  BrstComplex s(sl(2), {}, 0, -64, 64);
  CHECK(brst_cohomology(s).dims[0] == std::map<int, int>{{0, 1}, {1, 0}, {2, 0}, {3, 1}});
}

TEST_CASE("dense oracle on heisenberg3") {
  BrstComplex c(heisenberg(3), {}, 1, -64, 64);
  CohomologyTable t = brst_cohomology(c);
  std::map<int, std::map<int, int>> oracle;
  std::map<BlockKey, int> rk;
  for (const auto& op : c.differential()) {
    QMatrix m = dense(op);
    rk[op.source] = rank(m);
    if (m.cols() > 0 && m.rows() > 0) {
      for (const auto& op2 : c.differential())
        if (op2.source == op.target) CHECK(is_zero(QMatrix(dense(op2) * m)));
    }
  }
  for (const auto& [k, list] : c.space().blocks()) {
    BlockKey prev{k.weight, k.charge - 1, k.aux};
    oracle[k.weight][k.charge] += static_cast<int>(list.size()) - rk[k] - (rk.count(prev) ? rk[prev] : 0);
  }
  CHECK(t.dims == oracle);
  CHECK(t.dims[0] == std::map<int, int>{{0, 1}, {1, 2}, {2, 2}, {3, 1}});
  // Euler characteristic of cohomology agrees with the chain level
  for (const auto& [w, row] : t.dims) {
    int chi = 0;
    for (const auto& [q, d] : row) chi += (q % 2 == 0 ? d : -d);
    CHECK(chi == t.euler[w]);
  }
}

TEST_CASE("module differential squares to zero exactly at minus the killing form") {
  LieAlgebra g = sl(2);
  QMatrix k = killing_form(g);
  BrstComplex good(g, currents(k * Rational(-1)), 2, -64, 64);
  CHECK(good.square_is_zero());
  CohomologyTable gt = brst_cohomology(good);
  CHECK(gt.total() == 2);
  CHECK(gt.dims[0][0] == 1);
  CHECK(gt.dims[0][3] == 1);
  BrstComplex bad(g, currents(zero_matrix(3, 3)), 2, -64, 64);
  CHECK_FALSE(bad.square_is_zero());
  CHECK_THROWS_AS(brst_cohomology(bad), DifferentialNotSquareZero);

  LieAlgebra n = nilradical_of_sl(3).algebra;
  BrstComplex nil(n, currents(zero_matrix(3, 3)), 1, -64, 64);
  CHECK(nil.square_is_zero());
  CohomologyTable t = brst_cohomology(nil);
  int chi = 0;
  for (const auto& [q, d] : t.dims[1]) chi += (q % 2 == 0 ? d : -d);
  CHECK(chi == t.euler[1]);
}

TEST_CASE("abelian betagamma module") {
  for (int w = 1; w <= 3; ++w) {
    CAPTURE(w);
    BrstComplex c(abelian(1), {ModuleKind::BetaGamma, {}}, w, -2 * w, 4);
    CHECK(c.charge_field().aux() == 0);
    CohomologyTable t = brst_cohomology(c);
    CHECK(t.total() == 1);
    CHECK(t.dims[0][0] == 1);
  }
  CHECK_THROWS_AS(BrstComplex(sl(2), {ModuleKind::BetaGamma, {}}, 1, -2, 2), UnsupportedType);
}

TEST_CASE("cartan weights and the relative filter") {
  SubalgebraSpec b = borel_of_sl(2);
  std::vector<int> cartan;
  auto w = cartan_weights(b, &cartan);
  REQUIRE(cartan.size() == 1);
  CHECK(b.algebra.basis()[cartan[0]] == "h");
  for (std::size_t i = 0; i < w.size(); ++i) CHECK(w[i].size() == 1);

  QMatrix level = restrict_form(b, critical_level(b.parent));
  BrstComplex c(b.algebra, currents(level), 1, -64, 64, w);
  RelativeReport r = relative_subcomplex(c, cartan);
  CHECK(r.filtered_dim > 0);
  CHECK(r.filtered_dim < r.total_dim);
  CHECK(r.excluded_by_ghost > 0);
  CHECK(c.square_is_zero());
  CHECK(r.stable);
  CHECK(r.filtered_dim == 6);
  CHECK(r.total_dim == 28);
  CHECK_NOTHROW(require_stable(r));
  for (const auto& [wt, row] : r.dims)
    for (const auto& [q, d] : row) CHECK(d == ((wt == 0 && q == 0) || (wt == 1 && q == 1) ? 1 : 0));
  RelativeReport again = relative_subcomplex(b, currents(level), 1);
  CHECK(again.filtered_dim == r.filtered_dim);
  CHECK(again.dims == r.dims);

  RelativeReport broken = r;
  broken.stable = false;
  CHECK_THROWS_AS(require_stable(broken), StabilityViolation);
}

TEST_CASE("admissible levels") {
  LevelSolution n = admissible_levels(nilradical_of_sl(2));
  CHECK(n.verdict() == "all");
  LevelSolution b = admissible_levels(borel_of_sl(2));
  REQUIRE(b.unique());
  CHECK(b.level(*b.particular) == critical_level(sl(2)));
  LevelSolution p = admissible_levels(parabolic_of_sl(3, {1}));
  CHECK(p.verdict() == "empty");
  CHECK(admissible_levels(borel_of_sl(3)).verdict() == "unique");
}
