#include "cdo/algebroid.hpp"

namespace cdo {

namespace {

void require_square(const ConstantVertexAlgebroid& a) {
  const int n = a.algebra.dim();
  if (a.pairing.rows() != n || a.pairing.cols() != n) throw InputError("pairing has wrong size");
}

}  // namespace

ConstantVertexAlgebroid check_axioms(const ConstantVertexAlgebroid& candidate) {
  require_square(candidate);
  if (!is_symmetric(candidate.pairing)) throw NotSymmetric("pairing is not symmetric");
  const LieAlgebra& g = candidate.algebra;
  const int n = g.dim();
  const auto& P = candidate.pairing;
  const auto& c = candidate.c;
  for (int i1 = 0; i1 < n; ++i1)
    for (int i2 = 0; i2 < n; ++i2)
      for (int i3 = 0; i3 < n; ++i3) {
        Scalar lhs;
        for (int p = 0; p < n; ++p) {
          if (!g.c(i1, i2, p).is_zero()) lhs.add_scaled(P(p, i3), g.c(i1, i2, p));
          if (!g.c(i1, i3, p).is_zero()) lhs.add_scaled(P(i2, p), g.c(i1, i3, p));
        }
        Scalar rhs = c.at({i1, i3}, i2) + c.at({i1, i2}, i3);
        if (!(lhs == rhs)) throw PairingAxiomViolation(i1, i2, i3);
      }
  TildeCochain dc = d_tilde(g, c);
  if (!dc.is_zero()) {
    const auto& [key, v] = *dc.values.begin();
    throw CocycleAxiomViolation(key.second, key.first.at(0), key.first.at(1), key.first.at(2));
  }
  return candidate;
}

MorphismCertificate check_morphism(const ConstantVertexAlgebroid& source, const ConstantVertexAlgebroid& target,
                                   const TildeCochain& h) {
  if (!(source.algebra == target.algebra)) throw AlgebraMismatch("source and target have different algebras");
  require_square(source);
  require_square(target);
  const LieAlgebra& g = source.algebra;
  const int n = g.dim();
  MorphismCertificate cert;
  cert.pairing_residual = Matrix<Scalar>::Constant(n, n, Scalar());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      cert.pairing_residual(i, j) =
          h.at({j}, i) + h.at({i}, j) - (source.pairing(i, j) - target.pairing(i, j));
  cert.pairing_ok = is_zero(cert.pairing_residual);
  TildeCochain dh = h.is_zero() ? TildeCochain{3, {}} : d_tilde(g, h);
  cert.cocycle_residual = dh - (target.c - source.c);
  cert.cocycle_ok = cert.cocycle_residual.is_zero();
  return cert;
}

ConstantVertexAlgebroid transport(const ConstantVertexAlgebroid& source, const TildeCochain& h) {
  const int n = source.algebra.dim();
  ConstantVertexAlgebroid out = source;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.pairing(i, j) -= h.at({j}, i) + h.at({i}, j);
  if (!h.is_zero()) out.c = source.c + d_tilde(source.algebra, h);
  return out;
}

CanonicalObjects canonical_objects(const LieAlgebra& g, const Matrix<Scalar>& form) {
  const int n = g.dim();
  Cochain c = cocycle_from_form(g, form);
  Matrix<Scalar> zero = Matrix<Scalar>::Constant(n, n, Scalar());
  CanonicalObjects out;
  out.tilde = {g, form, TildeCochain{3, {}}};
  out.cocycle = {g, zero, embed_trivial(c)};
  out.currents = out.tilde;
  out.h.degree = 2;
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) out.h.add({j}, k, form(k, j) * Rational(1, 2));
  return out;
}

std::optional<TildeCochain> find_morphism(const ConstantVertexAlgebroid& a, const ConstantVertexAlgebroid& b) {
  if (!(a.algebra == b.algebra)) throw AlgebraMismatch("source and target have different algebras");
  const LieAlgebra& g = a.algebra;
  const int n = g.dim();
  // unknown x_{k,j} = <tau_k, h(tau_j)> at column k*n + j
  const int unknowns = n * n;
  std::vector<std::pair<int, int>> sym_rows;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) sym_rows.emplace_back(i, j);
  std::map<std::pair<IndexSet, int>, int> cocycle_rows;
  for (const auto& s : subsets(n, 2))
    for (int k = 0; k < n; ++k) cocycle_rows.emplace(std::make_pair(s, k), static_cast<int>(cocycle_rows.size()));
  const int rows = static_cast<int>(sym_rows.size() + cocycle_rows.size());
  QMatrix sys = zero_matrix(rows, unknowns);
  Vector<Polynomial> rhs = Vector<Polynomial>::Constant(rows, Polynomial());
  for (std::size_t r = 0; r < sym_rows.size(); ++r) {
    auto [i, j] = sym_rows[r];
    sys(r, i * n + j) += Rational(1);
    sys(r, j * n + i) += Rational(1);
    rhs(r) = a.pairing(i, j) - b.pairing(i, j);
  }
  const int offset = static_cast<int>(sym_rows.size());
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) {
      TildeCochain e;
      e.degree = 2;
      e.add({j}, k, Scalar(1));
      for (const auto& [key, v] : d_tilde(g, e).values) sys(offset + cocycle_rows.at(key), k * n + j) = v.constant_term();
    }
  TildeCochain target = b.c - a.c;
  for (const auto& [key, v] : target.values) {
    auto it = cocycle_rows.find(key);
    if (it == cocycle_rows.end()) return std::nullopt;
    rhs(offset + it->second) = v;
  }
  auto x = solve(sys, rhs);
  if (!x) return std::nullopt;
  TildeCochain h;
  h.degree = 2;
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) h.add({j}, k, (*x)(k * n + j));
  return h;
}

Pi0Report pi0_report(const LieAlgebra& g) {
  Pi0Report out;
  ThirdCohomology h3 = third_cohomology(g);
  out.h3_dim = h3.dim;
  out.representatives = std::move(h3.representatives);
  out.semisimple = is_semisimple(g);
  if (!out.semisimple) return out;
  auto forms = invariant_form_space(g);
  out.invariant_forms_dim = static_cast<int>(forms.size());
  const int n = g.dim();
  EchelonBasis classes;
  QMatrix d3 = trivial_differential_matrix(g, 3);
  for (Eigen::Index c = 0; c < d3.cols(); ++c) {
    SparseVector v;
    for (Eigen::Index r = 0; r < d3.rows(); ++r)
      if (!d3(r, c).is_zero()) v.emplace_back(static_cast<int>(r), d3(r, c));
    classes.insert(v);
  }
  std::map<IndexSet, int> index;
  for (const auto& s : subsets(n, 3)) index.emplace(s, static_cast<int>(index.size()));
  bool injective = true;
  for (const auto& f : forms) {
    Cochain c = cocycle_from_form(g, lift<Scalar>(f));
    SparseVector v;
    for (const auto& [key, x] : c.values) v.emplace_back(index.at(key), x.constant_term());
    injective = classes.insert(v) && injective;
  }
  out.bijection = injective && out.h3_dim == *out.invariant_forms_dim;
  return out;
}

}  // namespace cdo
