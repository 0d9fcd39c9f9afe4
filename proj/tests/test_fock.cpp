#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cdo/fock.hpp"

using namespace cdo;

namespace {

State mono(std::initializer_list<std::pair<int, int>> modes, const Rational& c = Rational(1)) {
  Monomial m;
  for (auto [f, n] : modes) m.push_back(mode_code(f, n));
  std::sort(m.begin(), m.end());
  return {{m, c}};
}

FreeFieldAlgebra single_pair(int& phi, int& star) {
  FreeFieldAlgebra alg;
  phi = alg.add_generator({"phi", Parity::Odd, 1, -1, 0, {}});
  star = alg.add_generator({"phi*", Parity::Odd, 0, 1, 0, {}});
  alg.add_bc_pair(phi, star);
  return alg;
}

}  // namespace

TEST_CASE("state counts") {
  int phi, star;
  FreeFieldAlgebra alg = single_pair(phi, star);
  FockSpace space(alg, 4);
  std::vector<int> dims = space.weight_dims();
  std::vector<long> gf = bc_pair_dims(4);
  REQUIRE(dims.size() == 5);
  for (int w = 0; w <= 4; ++w) CHECK(dims[w] == gf[w]);
  CHECK(dims[0] == 2);
  CHECK(gf == std::vector<long>{2, 4, 6, 12, 18});

  for (int d = 1; d <= 4; ++d) {
    FreeFieldAlgebra many;
    add_ghosts(many, abelian(d));
    CHECK(FockSpace(many, 0).weight_dims()[0] == (1 << d));
  }

  FreeFieldAlgebra empty;
  std::vector<int> e = FockSpace(empty, 3).weight_dims();
  CHECK(e == std::vector<int>{1, 0, 0, 0});
}

TEST_CASE("mode algebra") {
  int phi, star;
  FreeFieldAlgebra alg = single_pair(phi, star);
  CHECK(apply_mode(alg, {phi, 0}, mono({{star, -1}})) == vacuum());
  for (int n = 0; n < 3; ++n) {
    CHECK(apply_mode(alg, {phi, n}, vacuum()).empty());
    CHECK(apply_mode(alg, {star, n}, vacuum()).empty());
  }
  // odd creators square to zero and anticommute
  CHECK(apply_mode(alg, {star, -1}, mono({{star, -1}})).empty());
  State ab = apply_mode(alg, {phi, -1}, mono({{star, -2}}));
  State ba = apply_mode(alg, {star, -2}, mono({{phi, -1}}));
  State sum = ab;
  add_to(sum, ba);
  CHECK(sum.empty());
  CHECK(apply_mode(alg, {phi, 1}, mono({{star, -2}})) == vacuum());
  CHECK(apply_mode(alg, {star, 0}, mono({{phi, -1}})) == vacuum());

  FreeFieldAlgebra bg;
  int beta = bg.add_generator({"beta", Parity::Even, 1, 0, -1, {}});
  int gamma = bg.add_generator({"gamma", Parity::Even, 0, 0, 1, {}});
  bg.add_betagamma_pair(beta, gamma);
  CHECK(apply_mode(bg, {beta, 0}, mono({{gamma, -1}})) == vacuum());
  CHECK(apply_mode(bg, {gamma, 0}, mono({{beta, -1}})) == mono({}, Rational(-1)));
  CHECK(apply_mode(bg, {beta, 0}, mono({{gamma, -1}, {gamma, -1}})) == mono({{gamma, -1}}, Rational(2)));
}

TEST_CASE("currents") {
  LieAlgebra g = sl(2);
  FreeFieldAlgebra alg;
  std::vector<int> ids;
  for (const auto& b : g.basis()) ids.push_back(alg.add_generator({b, Parity::Even, 1, 0, 0, {}}));
  QMatrix k = killing_form(g);
  alg.add_currents(ids, g, k);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      State s = apply_mode(alg, {ids[i], 1}, mono({{ids[j], -1}}));
      CHECK(s == (k(i, j).is_zero() ? State{} : mono({}, k(i, j))));
    }
  // a_e(0) a_f(-1) vac = a_h(-1) vac
  CHECK(apply_mode(alg, {ids[0], 0}, mono({{ids[2], -1}})) == mono({{ids[1], -1}}));
  // creators do not commute: a_f(-1) a_e(-1) vac reorders with [f,e] = -h
  State fe = apply_mode(alg, {ids[2], -1}, mono({{ids[0], -1}}));
  State expected = mono({{ids[0], -1}, {ids[2], -1}});
  add_to(expected, mono({{ids[1], -2}}), Rational(-1));
  CHECK(fe == expected);

  FieldExpr ae = FieldExpr::gen(ids[0], alg), af = FieldExpr::gen(ids[2], alg);
  OpeResult r = ope_check(alg, ae, af, {mono({{ids[1], -1}}), mono({}, k(0, 2))});
  CHECK(r.ok);
}

TEST_CASE("normal ordered products and ope checks") {
  int phi, star;
  FreeFieldAlgebra alg = single_pair(phi, star);
  FieldExpr p = FieldExpr::gen(phi, alg), s = FieldExpr::gen(star, alg);
  CHECK(ope_check(alg, p, s, {vacuum()}).ok);
  CHECK_FALSE(ope_check(alg, p, s, {State{}}).ok);

  FreeFieldAlgebra two;
  GhostLayout lay = add_ghosts(two, abelian(2));
  CHECK(ope_check(two, FieldExpr::gen(lay.phi(0), two), FieldExpr::gen(lay.star(1), two), {}).ok);

  // the zero mode of :phi phi*: is minus the charge
  FieldExpr j = FieldExpr::nop(p, s);
  CHECK(j.weight() == 1);
  CHECK(j.charge() == 0);
  CHECK(j.apply(0, mono({{phi, -1}}), alg) == mono({{phi, -1}}));
  CHECK(j.apply(0, mono({{star, -2}}), alg) == mono({{star, -2}}, Rational(-1)));
  CHECK(j.apply(0, vacuum(), alg).empty());

  FieldExpr dstar = FieldExpr::deriv(s);
  CHECK(dstar.weight() == 1);
  CHECK(state_of(dstar, alg) == mono({{star, -2}}));
}

TEST_CASE("zero modes on blocks") {
  LieAlgebra g = sl(2);
  FreeFieldAlgebra alg;
  std::vector<int> ids;
  for (const auto& b : g.basis()) ids.push_back(alg.add_generator({b, Parity::Even, 1, 0, 0, {}}));
  alg.add_currents(ids, g, killing_form(g));
  GhostLayout lay = add_ghosts(alg, g);
  FockSpace space(alg, 2);
  FieldExpr x = FieldExpr::zero();
  for (int i = 0; i < 3; ++i) x.add(FieldExpr::nop(FieldExpr::gen(lay.star(i), alg), FieldExpr::gen(ids[i], alg)), 1);
  CHECK(x.charge() == 1);
  auto ops = zero_mode(space, x);
  int nonzero = 0;
  for (const auto& op : ops) {
    CHECK(op.target.weight == op.source.weight);
    CHECK(op.target.charge == op.source.charge + 1);
    for (const auto& c : op.columns) nonzero += !c.empty();
  }
  CHECK(nonzero > 0);
  State img = x.apply(0, mono({{ids[0], -1}}), alg);
  CHECK_FALSE(img.empty());
  for (const auto& [m, c] : img) CHECK(monomial_charge(alg, m) == 1);

  FieldExpr single = FieldExpr::gen(ids[0], alg);
  CHECK(single.apply(0, vacuum(), alg).empty());
  CHECK_THROWS_AS(zero_mode(space, FieldExpr::gen(lay.star(0), alg)), InputError);
}

TEST_CASE("weight zero bosons and the aux window") {
  FreeFieldAlgebra bg;
  int beta = bg.add_generator({"beta", Parity::Even, 1, 0, -1, {}});
  int gamma = bg.add_generator({"gamma", Parity::Even, 0, 0, 1, {}});
  bg.add_betagamma_pair(beta, gamma);
  FockSpace space(bg, 1, -2, 3);
  // weight 0: gamma(-1)^k for k = 0..3
  int w0 = 0;
  for (const auto& [k, list] : space.blocks())
    if (k.weight == 0) w0 += static_cast<int>(list.size());
  CHECK(w0 == 4);
  FreeFieldAlgebra bad;
  bad.add_generator({"g", Parity::Even, 0, 0, 0, {}});
  CHECK_THROWS_AS(FockSpace(bad, 1), InputError);
  CHECK_THROWS_AS(space.check(mono({{beta, -3}})), TruncationExceeded);
}
