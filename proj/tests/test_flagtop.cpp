#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cdo/flagtop.hpp"

using namespace cdo;

namespace {

QVector vec(std::initializer_list<int> xs) {
  QVector v(static_cast<Eigen::Index>(xs.size()));
  int i = 0;
  for (int x : xs) v(i++) = x;
  return v;
}

std::vector<std::vector<int>> proper_subsets(int r) {
  std::vector<std::vector<int>> out;
  for (int mask = 1; mask + 1 < (1 << r); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < r; ++i)
      if (mask & (1 << i)) s.push_back(i + 1);
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("root systems") {
  struct Case {
    const char* name;
    std::size_t positive;
    std::size_t weyl;
  };
  for (Case c : {Case{"A1", 1, 2}, Case{"A2", 3, 6}, Case{"A3", 6, 24}, Case{"B2", 4, 8}, Case{"B3", 9, 48},
                 Case{"C3", 9, 48}, Case{"D4", 12, 192}, Case{"G2", 6, 12}}) {
    CAPTURE(c.name);
    RootSystem rs = root_system_from_name(c.name);
    CHECK(rs.positive.size() == c.positive);
    CHECK(weyl_group(rs).size() == c.weyl);
  }
  RootSystem g2 = build_root_system('G', 2);
  bool highest = false;
  for (const auto& a : g2.positive) highest |= a == vec({3, 2});
  CHECK(highest);
  for (int n = 1; n <= 5; ++n)
    CHECK(build_root_system('A', n).positive.size() == static_cast<std::size_t>(n * (n + 1) / 2));
  CHECK_THROWS_AS(build_root_system('G', 3), UnsupportedType);
  CHECK_THROWS_AS(build_root_system('E', 6), UnsupportedType);
  CHECK_THROWS_AS(build_root_system('D', 3), UnsupportedType);
  CHECK_THROWS_AS(root_system_from_name("x"), InputError);
}

TEST_CASE("invariant quadratics") {
  RootSystem a2 = build_root_system('A', 2);
  CHECK(invariant_quadratics(a2, {}, true).size() == 1);
  CHECK(invariant_quadratics(a2, {1}).size() == 2);
  CHECK(invariant_quadratics(a2, {}).size() == 3);
  for (const char* name : {"A2", "A3", "B2", "B3", "C3", "G2"}) {
    CAPTURE(name);
    RootSystem rs = root_system_from_name(name);
    auto inv = invariant_quadratics(rs, {}, true);
    REQUIRE(inv.size() == 1);
    // the dual of the normalized form is invariant
    QMatrix dual = zero_matrix(rs.rank, rs.rank);
    for (int j = 0; j < rs.rank; ++j) dual.col(j) = *solve(rs.gram, QVector(identity_matrix(rs.rank).col(j)));
    CHECK(reynolds(weyl_group(rs), dual) == dual);
    // Reynolds oracle: averages are invariant, and the invariant line is fixed
    auto w = weyl_group(rs);
    QMatrix e = zero_matrix(rs.rank, rs.rank);
    e(0, 0) = 1;
    QMatrix avg = reynolds(w, e);
    for (const auto& r : rs.reflections) CHECK(QMatrix(r * avg * r.transpose()) == avg);
    CHECK(reynolds(w, inv[0]) == inv[0]);
    // sum of squares over all roots is W-invariant
    QMatrix all = sum_of_squares(rs.positive) * Rational(2);
    CHECK(reynolds(w, all) == all);
  }
}

TEST_CASE("ch2 classes") {
  RootSystem a2 = build_root_system('A', 2);
  Ch2Class p2 = ch2_class(a2, {2});
  CHECK(p2.q == QMatrix(vec({1, 0}) * vec({1, 0}).transpose() + vec({1, 1}) * vec({1, 1}).transpose()));
  CHECK_FALSE(p2.zero);
  CHECK(ch2_class(build_root_system('A', 1), {}).zero);
  for (const char* name : {"A2", "A3", "B2", "G2"}) {
    CAPTURE(name);
    RootSystem rs = root_system_from_name(name);
    Ch2Class b = ch2_class(rs, {});
    CHECK(b.zero);
    REQUIRE(b.multiple.has_value());
    for (const auto& s : proper_subsets(rs.rank)) {
      CAPTURE(s.size());
      CHECK_FALSE(ch2_class(rs, s).zero);
    }
  }
  CHECK_THROWS_AS(ch2_class(a2, {3}), InputError);
}

TEST_CASE("existence reports") {
  for (const char* g : {"sl2", "sl3"}) {
    ExistenceReport grp = existence_report(SpaceKind::Group, g);
    CHECK(grp.verdict == "torsor");
    CHECK(grp.torsor_dim == 1);
    ExistenceReport gn = existence_report(SpaceKind::BaseAffine, g);
    CHECK(gn.torsor_dim == 1);
    CHECK(gn.levels == "all");
    ExistenceReport gb = existence_report(SpaceKind::Flag, g);
    CHECK(gb.verdict == "unique");
    CHECK(gb.statement == "unique up to unique isomorphism");
    CHECK(gb.levels == "critical");
    CHECK(gb.consistent);
  }
  ExistenceReport gp = existence_report(SpaceKind::Partial, "sl3");
  CHECK(gp.verdict == "empty");
  CHECK(gp.levi == std::vector<int>{2});
  REQUIRE(gp.ch2.has_value());
  CHECK_FALSE(gp.ch2->zero);
  CHECK(gp.levels == "empty");
  CHECK(gp.consistent);
  for (int s = 1; s <= 2; ++s) CHECK(existence_report(SpaceKind::Partial, "sl3", {s}).consistent);
  CHECK(existence_report(SpaceKind::Partial, "sl4", {1, 2}).consistent);
  CHECK_THROWS_AS(existence_report(SpaceKind::Partial, "sl2"), InputError);
  CHECK_THROWS_AS(existence_report(SpaceKind::Group, "heisenberg3"), UnsupportedType);
  CHECK_THROWS_AS(space_kind_from_name("G/Q"), InputError);
}
