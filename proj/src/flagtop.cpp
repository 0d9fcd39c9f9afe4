#include "cdo/flagtop.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace cdo {

namespace {

QMatrix gram_matrix(char type, int r) {
  QMatrix b = zero_matrix(r, r);
  for (int i = 0; i < r; ++i) b(i, i) = 2;
  for (int i = 0; i + 1 < r; ++i) b(i, i + 1) = b(i + 1, i) = -1;
  switch (type) {
    case 'A':
      break;
    case 'B':
      b(r - 1, r - 1) = 1;
      break;
    case 'C':
      b(r - 1, r - 1) = 4;
      b(r - 2, r - 1) = b(r - 1, r - 2) = -2;
      break;
    case 'D':
      b(r - 2, r - 1) = b(r - 1, r - 2) = 0;
      b(r - 3, r - 1) = b(r - 1, r - 3) = -1;
      break;
    case 'G':
      b(0, 0) = 2;
      b(1, 1) = 6;
      b(0, 1) = b(1, 0) = -3;
      break;
  }
  return b;
}

std::string key(const QMatrix& m) {
  std::string s;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) s += m(i, j).str() + ",";
  return s;
}

std::string key(const QVector& v) {
  std::string s;
  for (Eigen::Index i = 0; i < v.size(); ++i) s += v(i).str() + ",";
  return s;
}

bool nonnegative(const QVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) < Rational(0)) return false;
  return true;
}

// Basis of symmetric r x r matrices.
std::vector<QMatrix> sym_basis(int r) {
  std::vector<QMatrix> out;
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      QMatrix e = zero_matrix(r, r);
      e(i, j) = e(j, i) = 1;
      out.push_back(e);
    }
  return out;
}

QVector sym_coords(const QMatrix& q) {
  const int r = static_cast<int>(q.rows());
  QVector v(r * (r + 1) / 2);
  int k = 0;
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) v(k++) = q(i, j);
  return v;
}

}  // namespace

bool RootSystem::in_levi(const QVector& alpha, const std::vector<int>& levi) const {
  for (int i = 0; i < rank; ++i)
    if (!alpha(i).is_zero() && std::find(levi.begin(), levi.end(), i + 1) == levi.end()) return false;
  return true;
}

RootSystem build_root_system(char type, int rank) {
  bool ok = (type == 'A' && rank >= 1) || ((type == 'B' || type == 'C') && rank >= 2) || (type == 'D' && rank >= 4) ||
            (type == 'G' && rank == 2);
  if (!ok) throw UnsupportedType(std::string("unsupported root system ") + type + std::to_string(rank));
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  rs.gram = gram_matrix(type, rank);
  for (int i = 0; i < rank; ++i) {
    QMatrix r = identity_matrix(rank);
    Rational s = Rational(2) / rs.gram(i, i);
    for (int j = 0; j < rank; ++j) r(i, j) -= s * rs.gram(i, j);
    rs.reflections.push_back(r);
  }
  std::set<std::string> seen;
  std::deque<QVector> queue;
  for (int i = 0; i < rank; ++i) {
    QVector e = QVector::Constant(rank, Rational(0));
    e(i) = 1;
    queue.push_back(e);
    seen.insert(key(e));
  }
  std::vector<QVector> all;
  while (!queue.empty()) {
    QVector a = queue.front();
    queue.pop_front();
    all.push_back(a);
    for (const auto& r : rs.reflections) {
      QVector b = r * a;
      if (seen.insert(key(b)).second) queue.push_back(b);
    }
  }
  for (const auto& a : all)
    if (nonnegative(a)) rs.positive.push_back(a);
  if (rs.positive.size() * 2 != all.size()) throw VerificationFailure("root closure is not symmetric");
  return rs;
}

RootSystem root_system_from_name(const std::string& name) {
  if (name.size() < 2 || !std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw InputError("bad root system name: " + name);
  return build_root_system(static_cast<char>(std::toupper(name[0])), std::stoi(name.substr(1)));
}

std::vector<QMatrix> weyl_group(const RootSystem& rs, const std::vector<int>& subset, bool full) {
  std::vector<QMatrix> gens;
  if (full) gens = rs.reflections;
  else
    for (int s : subset) {
      if (s < 1 || s > rs.rank) throw InputError("simple root index out of range");
      gens.push_back(rs.reflections[s - 1]);
    }
  std::vector<QMatrix> out{identity_matrix(rs.rank)};
  std::set<std::string> seen{key(out.front())};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& g : gens) {
      QMatrix m = g * out[k];
      if (seen.insert(key(m)).second) out.push_back(m);
    }
  return out;
}

std::vector<QMatrix> invariant_quadratics(const RootSystem& rs, const std::vector<int>& subset, bool full) {
  std::vector<QMatrix> gens;
  if (full) gens = rs.reflections;
  else
    for (int s : subset) {
      if (s < 1 || s > rs.rank) throw InputError("simple root index out of range");
      gens.push_back(rs.reflections[s - 1]);
    }
  std::vector<QMatrix> basis = sym_basis(rs.rank);
  const int n = static_cast<int>(basis.size());
  QMatrix sys = zero_matrix(static_cast<Eigen::Index>(gens.size()) * n, n);
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (int k = 0; k < n; ++k) {
      QVector v = sym_coords(QMatrix(gens[g] * basis[k] * gens[g].transpose() - basis[k]));
      for (int i = 0; i < n; ++i) sys(static_cast<Eigen::Index>(g) * n + i, k) = v(i);
    }
  QMatrix ker = nullspace(sys);
  std::vector<QMatrix> out;
  for (Eigen::Index c = 0; c < ker.cols(); ++c) {
    QMatrix q = zero_matrix(rs.rank, rs.rank);
    for (int k = 0; k < n; ++k)
      if (!ker(k, c).is_zero()) q += basis[k] * ker(k, c);
    out.push_back(q);
  }
  return out;
}

QMatrix reynolds(const std::vector<QMatrix>& group, const QMatrix& q) {
  QMatrix acc = zero_matrix(q.rows(), q.cols());
  for (const auto& g : group) acc += g * q * g.transpose();
  return acc * (Rational(1) / Rational(static_cast<long>(group.size())));
}

QMatrix sum_of_squares(const std::vector<QVector>& roots) {
  if (roots.empty()) return {};
  QMatrix q = zero_matrix(roots.front().size(), roots.front().size());
  for (const auto& a : roots) q += a * a.transpose();
  return q;
}

Ch2Class ch2_class(const RootSystem& rs, const std::vector<int>& levi) {
  for (int s : levi)
    if (s < 1 || s > rs.rank) throw InputError("simple root index out of range");
  Ch2Class c;
  c.system = rs.name();
  c.levi = levi;
  std::sort(c.levi.begin(), c.levi.end());
  std::vector<QVector> tangent;
  for (const auto& a : rs.positive)
    if (!rs.in_levi(a, levi)) tangent.push_back(a);
  c.q = tangent.empty() ? zero_matrix(rs.rank, rs.rank) : sum_of_squares(tangent);
  std::vector<QMatrix> inv = invariant_quadratics(rs, {}, true);
  QMatrix sys = zero_matrix(rs.rank * (rs.rank + 1) / 2, static_cast<Eigen::Index>(inv.size()));
  for (std::size_t k = 0; k < inv.size(); ++k) sys.col(static_cast<Eigen::Index>(k)) = sym_coords(inv[k]);
  std::optional<QVector> x = solve(sys, sym_coords(c.q));
  c.zero = x.has_value();
  if (x && inv.size() == 1) c.multiple = (*x)(0);
  return c;
}

SpaceKind space_kind_from_name(const std::string& s) {
  if (s == "group" || s == "G") return SpaceKind::Group;
  if (s == "G/N") return SpaceKind::BaseAffine;
  if (s == "G/B") return SpaceKind::Flag;
  if (s == "G/P") return SpaceKind::Partial;
  throw InputError("unknown space: " + s);
}

std::string space_name(SpaceKind k) {
  switch (k) {
    case SpaceKind::Group: return "group";
    case SpaceKind::BaseAffine: return "G/N";
    case SpaceKind::Flag: return "G/B";
    case SpaceKind::Partial: return "G/P";
  }
  return "";
}

ExistenceReport existence_report(SpaceKind kind, const std::string& algebra, std::vector<int> levi) {
  NamedAlgebra named = builtin(algebra);
  if (named.sub || !is_semisimple(named.algebra) || algebra.substr(0, 2) != "sl")
    throw UnsupportedType("existence reports need a builtin sl_n: " + algebra);
  const LieAlgebra& g = named.algebra;
  const int n = std::stoi(algebra.substr(2));
  ExistenceReport r;
  r.kind = kind;
  r.space = space_name(kind);
  r.algebra = g.name();
  RootSystem rs = build_root_system('A', n - 1);
  const int forms = static_cast<int>(invariant_form_space(g).size());
  switch (kind) {
    case SpaceKind::Group:
      r.verdict = "torsor";
      r.torsor_dim = forms;
      r.statement = "classes form a torsor over (S^2 g*)^g of dimension " + std::to_string(forms);
      break;
    case SpaceKind::BaseAffine: {
      r.verdict = "torsor";
      r.torsor_dim = forms;
      r.statement = "classes form a torsor over (S^2 g*)^g of dimension " + std::to_string(forms);
      LevelSolution l = admissible_levels(nilradical_of_sl(n));
      r.levels = l.verdict();
      r.consistent = l.all_levels();
      break;
    }
    case SpaceKind::Flag: {
      r.ch2 = ch2_class(rs, {});
      LevelSolution l = admissible_levels(borel_of_sl(n));
      r.levels = l.verdict();
      bool critical = l.unique() && l.level(*l.particular) == critical_level(g);
      if (l.unique() && critical) r.levels = "critical";
      r.consistent = r.ch2->zero && critical;
      r.verdict = r.ch2->zero ? "unique" : "empty";
      r.statement = r.ch2->zero ? "unique up to unique isomorphism" : "no cdo";
      break;
    }
    case SpaceKind::Partial: {
      if (levi.empty()) levi = {n - 1};
      std::sort(levi.begin(), levi.end());
      if (static_cast<int>(levi.size()) >= n - 1) throw InputError("the Levi must be a proper subset of the simple roots");
      r.levi = levi;
      r.ch2 = ch2_class(rs, levi);
      LevelSolution l = admissible_levels(parabolic_of_sl(n, levi));
      r.levels = l.verdict();
      r.consistent = !r.ch2->zero && l.empty();
      r.verdict = r.ch2->zero ? "unique" : "empty";
      r.statement = r.ch2->zero ? "unique up to unique isomorphism" : "no cdo";
      break;
    }
  }
  return r;
}

}  // namespace cdo
