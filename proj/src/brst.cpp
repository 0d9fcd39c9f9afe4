#include "cdo/brst.hpp"

#include <algorithm>
#include <cmath>

namespace cdo {

namespace {

using Columns = std::map<BlockKey, const BlockOperator*>;

Columns index_ops(const std::vector<BlockOperator>& ops) {
  Columns out;
  for (const auto& op : ops) out[op.source] = &op;
  return out;
}

SparseVector compose(const Columns& ops, const BlockOperator& first, int column) {
  std::map<int, Rational> acc;
  auto it = ops.find(first.target);
  if (it == ops.end()) return {};
  for (const auto& [i, c] : first.columns[column])
    for (const auto& [j, v] : it->second->columns[i]) acc[j] += c * v;
  SparseVector out;
  for (const auto& [j, v] : acc)
    if (!v.is_zero()) out.emplace_back(j, v);
  return out;
}

}  // namespace

FieldExpr brst_charge(const LieAlgebra& g, const FreeFieldAlgebra& alg, const GhostLayout& lay) {
  FieldExpr d = FieldExpr::zero();
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j)
      for (int p = 0; p < g.dim(); ++p)
        if (!g.c(i, j, p).is_zero())
          d.add(FieldExpr::nop({FieldExpr::gen(lay.phi(p), alg), FieldExpr::gen(lay.star(i), alg),
                                FieldExpr::gen(lay.star(j), alg)}),
                g.c(i, j, p) * Rational(-1, 2));
  return d;
}

FieldExpr ghost_current(const LieAlgebra& g, const FreeFieldAlgebra& alg, const GhostLayout& lay, int i) {
  FieldExpr j = FieldExpr::zero();
  for (int p = 0; p < g.dim(); ++p)
    for (int q = 0; q < g.dim(); ++q)
      if (!g.c(i, p, q).is_zero())
        j.add(FieldExpr::nop(FieldExpr::gen(lay.phi(q), alg), FieldExpr::gen(lay.star(p), alg)), g.c(i, p, q));
  return j;
}

FieldExpr square_field(const LieAlgebra& g, const FreeFieldAlgebra& alg, const GhostLayout& lay) {
  QMatrix k = killing_form(g);
  FieldExpr s = FieldExpr::zero();
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j)
      if (!k(i, j).is_zero())
        s.add(FieldExpr::nop(FieldExpr::deriv(FieldExpr::gen(lay.star(i), alg)), FieldExpr::gen(lay.star(j), alg)),
              k(i, j));
  return s;
}

SquareReport brst_square(const LieAlgebra& g, int max_weight) {
  FreeFieldAlgebra alg;
  GhostLayout lay = add_ghosts(alg, g);
  FockSpace space(alg, max_weight);
  FieldExpr d = brst_charge(g, alg, lay);
  FieldExpr s = square_field(g, alg, lay);
  std::vector<BlockOperator> dops = zero_mode(space, d);
  std::vector<BlockOperator> sops = zero_mode(space, s);
  Columns didx = index_ops(dops);
  Columns sidx = index_ops(sops);

  SquareReport r;
  r.algebra = g.name();
  r.max_weight = max_weight;
  r.square_zero = true;
  r.matches_killing_operator = true;
  for (const auto& op : dops) {
    ++r.blocks;
    const BlockOperator& sop = *sidx.at(op.source);
    bool nonzero = false;
    for (std::size_t col = 0; col < op.columns.size(); ++col) {
      SparseVector sq = compose(didx, op, static_cast<int>(col));
      const SparseVector& want = sop.columns[col];
      if (!sq.empty()) {
        r.square_zero = false;
        nonzero = true;
      }
      if (sq != want) r.matches_killing_operator = false;
      if (sq.empty() && want.empty()) continue;
      if (sq.size() != want.size()) throw MismatchError("d^2 and the Killing operator differ in support");
      for (std::size_t k = 0; k < sq.size(); ++k) {
        if (sq[k].first != want[k].first) throw MismatchError("d^2 and the Killing operator differ in support");
        Rational q = sq[k].second / want[k].second;
        if (!r.ratio) r.ratio = q;
        else if (*r.ratio != q) throw MismatchError("d^2 is not proportional to the Killing operator");
      }
    }
    r.nonzero_blocks += nonzero;
  }
  return r;
}

GhostCurrentReport ghost_currents(const LieAlgebra& g) {
  FreeFieldAlgebra alg;
  GhostLayout lay = add_ghosts(alg, g);
  const int n = g.dim();
  std::vector<FieldExpr> j;
  std::vector<State> js;
  for (int i = 0; i < n; ++i) {
    j.push_back(ghost_current(g, alg, lay, i));
    js.push_back(state_of(j.back(), alg));
  }
  QMatrix k = killing_form(g);
  GhostCurrentReport r;
  r.level = zero_matrix(n, n);
  r.level_ok = true;
  r.bracket_ok = true;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (j[a].is_zero()) continue;
      State one = j[a].apply(1, js[b], alg);
      for (const auto& [m, c] : one) {
        if (!m.empty()) r.level_ok = false;
        else r.level(a, b) = c;
      }
      if (r.level(a, b) != k(a, b)) r.level_ok = false;
      State zero = j[a].apply(0, js[b], alg);
      State expected;
      for (int p = 0; p < n; ++p) add_to(expected, js[p], g.c(a, b, p));
      if (zero != expected) r.bracket_ok = false;
      if (!r.ok())
        throw OpeCheckFailure("ghost currents fail the current OPE on (" + g.basis()[a] + "," + g.basis()[b] + ")");
      State two = j[a].apply(2, js[b], alg);
      if (!two.empty()) throw OpeCheckFailure("ghost currents have a third order pole");
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (j[a].is_zero() && !k(a, b).is_zero()) r.level_ok = false;
  return r;
}

BrstComplex::BrstComplex(const LieAlgebra& g, const ModuleSpec& module, int max_weight, int aux_min, int aux_max,
                         const std::vector<std::vector<Rational>>& cartan)
    : algebra_(g), alg_(std::make_unique<FreeFieldAlgebra>()), max_weight_(max_weight) {
  const int n = g.dim();
  const bool bg = module.kind == ModuleKind::BetaGamma;
  if (bg) {
    for (const auto& t : g.table())
      if (!t.is_zero()) throw UnsupportedType("the betagamma model needs an abelian algebra");
  }
  ghosts_ = add_ghosts(*alg_, g, cartan, bg ? 1 : 0);
  if (module.kind == ModuleKind::Currents) {
    if (module.level.rows() != n || module.level.cols() != n) throw InputError("module level has wrong size");
    for (int i = 0; i < n; ++i) {
      Generator a{g.basis()[i], Parity::Even, 1, 0, 0, {}};
      if (!cartan.empty()) a.cartan_weight = cartan[i];
      module_ids_.push_back(alg_->add_generator(std::move(a)));
    }
    alg_->add_currents(module_ids_, g, module.level);
  } else if (bg) {
    for (int i = 0; i < n; ++i) {
      int beta = alg_->add_generator({"beta[" + g.basis()[i] + "]", Parity::Even, 1, 0, -1, {}});
      int gamma = alg_->add_generator({"gamma[" + g.basis()[i] + "]", Parity::Even, 0, 0, 1, {}});
      alg_->add_betagamma_pair(beta, gamma);
      module_ids_.push_back(beta);
    }
  }
  d_field_ = brst_charge(g, *alg_, ghosts_);
  for (int i = 0; i < static_cast<int>(module_ids_.size()); ++i)
    d_field_.add(FieldExpr::nop(FieldExpr::gen(ghosts_.star(i), *alg_), FieldExpr::gen(module_ids_[i], *alg_)), 1);
  space_ = std::make_unique<FockSpace>(*alg_, max_weight, aux_min, aux_max);
  d_ = zero_mode(*space_, d_field_);
  for (std::size_t k = 0; k < d_.size(); ++k) by_source_[d_[k].source] = k;
}

SparseVector BrstComplex::apply(const BlockKey& k, int column) const { return d_[by_source_.at(k)].columns[column]; }

bool BrstComplex::square_is_zero() const {
  Columns idx = index_ops(d_);
  for (const auto& op : d_)
    for (std::size_t col = 0; col < op.columns.size(); ++col)
      if (!compose(idx, op, static_cast<int>(col)).empty()) return false;
  return true;
}

int CohomologyTable::total() const {
  int t = 0;
  for (const auto& [w, row] : dims)
    for (const auto& [q, d] : row) t += d;
  return t;
}

CohomologyTable brst_cohomology(const BrstComplex& c) {
  if (!c.square_is_zero()) throw DifferentialNotSquareZero("d^2 is nonzero on the truncated complex");
  std::map<BlockKey, int> rank_out;
  for (const auto& op : c.differential()) rank_out[op.source] = rank_of(op.columns);
  CohomologyTable t;
  for (const auto& [key, list] : c.space().blocks()) {
    BlockKey prev{key.weight, key.charge - c.charge_field().charge(), key.aux - c.charge_field().aux()};
    int in = rank_out.count(prev) ? rank_out.at(prev) : 0;
    int h = static_cast<int>(list.size()) - rank_out.at(key) - in;
    t.dims[key.weight][key.charge] += h;
    t.euler[key.weight] += (key.charge % 2 == 0 ? 1 : -1) * static_cast<int>(list.size());
  }
  return t;
}

std::vector<std::vector<Rational>> cartan_weights(const SubalgebraSpec& sub, std::vector<int>* cartan_indices) {
  const LieAlgebra& g = sub.algebra;
  const int n = g.dim();
  // Cartan elements: those mapping into the diagonal of the parent sl_n.
  const int m = static_cast<int>(std::lround(std::sqrt(sub.parent.dim() + 1)));
  const int pos = m * (m - 1) / 2;
  std::vector<int> idx;
  for (int k = 0; k < n; ++k) {
    bool diagonal = true;
    for (int p = 0; p < sub.parent.dim(); ++p)
      if (!sub.inclusion(p, k).is_zero() && (p < pos || p >= pos + m - 1)) diagonal = false;
    if (diagonal) idx.push_back(k);
  }
  std::vector<std::vector<Rational>> out(n);
  for (int b = 0; b < n; ++b)
    for (int h : idx) {
      Rational w;
      for (int p = 0; p < n; ++p) {
        if (g.c(h, b, p).is_zero()) continue;
        if (p != b) throw InputError("basis is not a Cartan weight basis");
        w = g.c(h, b, p);
      }
      out[b].push_back(w);
    }
  if (cartan_indices) *cartan_indices = idx;
  return out;
}

RelativeReport relative_subcomplex(const BrstComplex& c, const std::vector<int>& cartan_indices) {
  const FreeFieldAlgebra& alg = c.fields();
  std::vector<std::uint16_t> forbidden;
  for (int h : cartan_indices) forbidden.push_back(mode_code(c.ghosts().star(h), -1));
  auto keep = [&](const Monomial& m, RelativeReport* r) {
    for (auto code : m)
      if (std::find(forbidden.begin(), forbidden.end(), code) != forbidden.end()) {
        if (r) ++r->excluded_by_ghost;
        return false;
      }
    std::vector<Rational> total(cartan_indices.size());
    for (auto code : m) {
      const auto& w = alg.generator(decode(code).field).cartan_weight;
      for (std::size_t k = 0; k < w.size() && k < total.size(); ++k) total[k] += w[k];
    }
    for (const auto& t : total)
      if (!t.is_zero()) {
        if (r) ++r->excluded_by_weight;
        return false;
      }
    return true;
  };
  RelativeReport r;
  r.stable = true;
  std::map<BlockKey, int> size, rank_out;
  for (const auto& op : c.differential()) {
    const auto& src = c.space().block(op.source);
    const auto& dst = c.space().block(op.target);
    r.total_dim += static_cast<int>(src.size());
    std::vector<SparseVector> kept;
    for (std::size_t col = 0; col < src.size(); ++col) {
      if (!keep(src[col], &r)) continue;
      ++r.filtered_dim;
      kept.push_back(op.columns[col]);
      for (const auto& [i, v] : op.columns[col])
        if (!keep(dst[i], nullptr) && r.stable) {
          r.stable = false;
          r.first_violation = "d(" + monomial_str(alg, src[col]) + ") contains " + monomial_str(alg, dst[i]);
        }
    }
    size[op.source] = static_cast<int>(kept.size());
    rank_out[op.source] = rank_of(kept);
  }
  if (!r.stable) return r;
  for (const auto& [key, n] : size) {
    BlockKey prev{key.weight, key.charge - c.charge_field().charge(), key.aux - c.charge_field().aux()};
    int in = rank_out.count(prev) ? rank_out.at(prev) : 0;
    r.dims[key.weight][key.charge] += n - rank_out.at(key) - in;
  }
  return r;
}

RelativeReport relative_subcomplex(const SubalgebraSpec& sub, const ModuleSpec& module, int max_weight) {
  std::vector<int> cartan;
  auto weights = cartan_weights(sub, &cartan);
  BrstComplex c(sub.algebra, module, max_weight, -64, 64, weights);
  return relative_subcomplex(c, cartan);
}

void require_stable(const RelativeReport& r) {
  if (!r.stable) throw StabilityViolation("relative subcomplex is not preserved: " + r.first_violation);
}

QMatrix LevelSolution::level(const QVector& coords) const {
  QMatrix out = basis.empty() ? QMatrix() : zero_matrix(basis.front().rows(), basis.front().cols());
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (!coords(k).is_zero()) out += basis[k] * coords(k);
  return out;
}

std::string LevelSolution::verdict() const {
  if (empty()) return "empty";
  if (all_levels()) return "all";
  if (unique()) return "unique";
  return "affine(" + std::to_string(directions.size()) + ")";
}

LevelSolution admissible_levels(const SubalgebraSpec& sub) {
  LevelSolution out;
  out.basis = invariant_form_space(sub.parent);
  const int n = sub.algebra.dim();
  const int unknowns = static_cast<int>(out.basis.size());
  QMatrix target = killing_form(sub.algebra);
  QMatrix sys = zero_matrix(n * n, unknowns);
  QVector rhs = QVector::Constant(n * n, Rational(0));
  for (int k = 0; k < unknowns; ++k) {
    Matrix<Rational> r = restrict_form(sub, out.basis[k]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) sys(i * n + j, k) = r(i, j);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rhs(i * n + j) = -target(i, j);
  out.particular = solve(sys, rhs);
  if (out.particular) {
    QMatrix ker = nullspace(sys);
    for (Eigen::Index c = 0; c < ker.cols(); ++c) out.directions.push_back(ker.col(c));
  }
  return out;
}

}  // namespace cdo
