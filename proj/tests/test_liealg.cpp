#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cdo/liealg.hpp"

using namespace cdo;

namespace {

// Square matrices for the sl_n basis, built independently of the library.
QMatrix elem(int n, int a, int b) {
  QMatrix m = zero_matrix(n, n);
  m(a, b) = Rational(1);
  return m;
}

Rational trace(const QMatrix& m) {
  Rational s(0);
  for (Eigen::Index i = 0; i < m.rows(); ++i) s += m(i, i);
  return s;
}

}  // namespace

TEST_CASE("sl2 structure constants") {
  LieAlgebra g = sl(2);
  REQUIRE(g.dim() == 3);
  CHECK(g.basis() == std::vector<std::string>{"e", "h", "f"});
  const int e = 0, h = 1, f = 2;
  CHECK(g.c(e, f, h) == Rational(1));
  CHECK(g.c(h, e, e) == Rational(2));
  CHECK(g.c(h, f, f) == Rational(-2));
  CHECK(g.c(f, e, h) == Rational(-1));
}

TEST_CASE("Killing form of sl2") {
  QMatrix k = killing_form(sl(2));
  CHECK(k(0, 2) == Rational(4));
  CHECK(k(1, 1) == Rational(8));
  CHECK(k(0, 0) == Rational(0));
  CHECK(k(0, 1) == Rational(0));
}

TEST_CASE("Killing form of sl_n equals 2n times the trace form") {
  for (int n : {2, 3}) {
    LieAlgebra g = sl(n);
    std::vector<QMatrix> mats;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) mats.push_back(elem(n, a, b));
    for (int k = 0; k + 1 < n; ++k) mats.push_back(elem(n, k, k) - elem(n, k + 1, k + 1));
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) mats.push_back(elem(n, b, a));
    QMatrix k = killing_form(g);
    for (int i = 0; i < g.dim(); ++i)
      for (int j = 0; j < g.dim(); ++j) CHECK(k(i, j) == Rational(2 * n) * trace(multiply(mats[i], mats[j])));
  }
}

TEST_CASE("Killing form of the Borel of sl2") {
  // ad e = [[0,-2],[0,0]], ad h = [[2,0],[0,0]] in the basis (e,h)
  QMatrix k = killing_form(borel_of_sl(2).algebra);
  CHECK(k(0, 0) == Rational(0));
  CHECK(k(0, 1) == Rational(0));
  CHECK(k(1, 1) == Rational(4));
}

TEST_CASE("invariant forms") {
  SUBCASE("sl2 is spanned by the Killing form") {
    auto forms = invariant_form_space(sl(2));
    REQUIRE(forms.size() == 1);
    QMatrix both(9, 2);
    both.col(0) = forms[0].reshaped();
    both.col(1) = killing_form(sl(2)).reshaped();
    CHECK(rank(both) == 1);
  }
  CHECK(invariant_form_space(sl(3)).size() == 1);
  CHECK(invariant_form_space(abelian(3)).size() == 6);
  CHECK(invariant_form_space(heisenberg(3)).size() == 3);
  CHECK(invariant_form_space(LieAlgebra()).empty());
  CHECK(is_invariant(sl(3), killing_form(sl(3))));
  QMatrix bad = zero_matrix(3, 3);
  bad(0, 0) = Rational(1);
  CHECK_FALSE(is_invariant(sl(2), bad));
}

TEST_CASE("dual and critical levels") {
  LieAlgebra g = sl(2);
  Matrix<Scalar> level = lift<Scalar>(killing_form(g));
  for (Eigen::Index i = 0; i < level.size(); ++i) level(i) *= Polynomial::t();
  Matrix<Scalar> dual = dual_level(g, level);
  CHECK(dual(0, 2) == Polynomial::parse("-4*t - 4"));
  QMatrix crit = critical_level(g);
  CHECK(dual_level(g, crit) == crit);
  CHECK(dual_level(g, dual_level(g, level)) == level);
}

TEST_CASE("nilpotency and semisimplicity") {
  CHECK(is_nilpotent(heisenberg(3)));
  CHECK(is_nilpotent(nilradical_of_sl(3).algebra));
  CHECK(is_nilpotent(abelian(2)));
  CHECK(is_nilpotent(LieAlgebra()));
  CHECK_FALSE(is_nilpotent(sl(2)));
  CHECK_FALSE(is_nilpotent(borel_of_sl(2).algebra));
  CHECK(is_semisimple(sl(2)));
  CHECK(is_semisimple(sl(3)));
  CHECK_FALSE(is_semisimple(borel_of_sl(3).algebra));
  CHECK_FALSE(is_semisimple(heisenberg(3)));
}

TEST_CASE("subalgebras of sl_n") {
  auto b = borel_of_sl(3);
  CHECK(b.algebra.dim() == 5);
  auto n = nilradical_of_sl(3);
  CHECK(n.algebra.dim() == 3);
  auto p = parabolic_of_sl(3, {2});
  CHECK(p.algebra.dim() == 6);
  CHECK(p.algebra.basis().back() == "E32");
  CHECK(parabolic_of_sl(3, {}).algebra.dim() == 5);
  CHECK(parabolic_of_sl(3, {1, 2}).algebra.dim() == 8);
  // the restriction of the trace form of sl3 to its nilradical vanishes
  CHECK(is_zero(restrict_form(n, killing_form(sl(3)))));

  QMatrix not_closed = zero_matrix(3, 2);
  not_closed(0, 0) = Rational(1);
  not_closed(2, 1) = Rational(1);
  CHECK_THROWS_AS(make_subalgebra(sl(2), not_closed, "bad", {"e", "f"}), NotClosed);
}

TEST_CASE("builtin names") {
  CHECK(builtin("sl3").algebra.dim() == 8);
  CHECK(builtin("borel(sl2)").sub.has_value());
  CHECK(builtin("parabolic(sl4,1+3)").algebra.dim() == 11);
  CHECK(builtin("heisenberg5").algebra.dim() == 5);
  CHECK(builtin("abelian1").algebra.dim() == 1);
  CHECK_THROWS_AS(builtin("so5"), UnknownAlgebra);
  CHECK_THROWS_AS(builtin("heisenberg4"), UnknownAlgebra);
}

TEST_CASE("table validation") {
  SUBCASE("antisymmetry") {
    const char* text = R"({"name":"bad","dim":3,"basis":["x","y","z"],
      "brackets":[[0,1,["0","0","1"]],[1,0,["0","0","1"]]]})";
    CHECK_THROWS_AS(algebra_from_json(text), AntisymmetryViolation);
  }
  SUBCASE("Jacobi") {
    const char* text = R"({"name":"bad","dim":3,
      "brackets":[[0,1,[0,1,0]],[0,2,[0,0,1]],[1,2,[1,0,0]]]})";
    CHECK_THROWS_AS(algebra_from_json(text), JacobiViolation);
  }
  SUBCASE("one-sided listing is completed by antisymmetry") {
    const char* text = R"({"name":"h","dim":3,"basis":["x","y","z"],"brackets":[[0,1,["0","0","1"]]]})";
    LieAlgebra g = algebra_from_json(text);
    CHECK(g == heisenberg(3));
    CHECK(algebra_from_json(algebra_to_json(g)) == g);
  }
  SUBCASE("zero algebra") {
    LieAlgebra g = algebra_from_json(R"({"name":"z","dim":0,"basis":[],"brackets":[]})");
    CHECK(g.dim() == 0);
    CHECK(killing_form(g).size() == 0);
  }
  CHECK_THROWS_AS(algebra_from_json("{"), InputError);
  CHECK_THROWS_AS(algebra_from_json(R"({"dim":2,"brackets":[[0,1,["1"]]]})"), InputError);
}
