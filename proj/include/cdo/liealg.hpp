#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cdo/errors.hpp"
#include "cdo/linalg.hpp"

namespace cdo {

/// Structure constants c^{ij}_p, entry (i*dim + j)*dim + p.
using StructureTable = std::vector<Rational>;

/// Finite-dimensional Lie algebra over Q in a fixed ordered basis.
class LieAlgebra {
 public:
  /// The zero algebra.
  LieAlgebra() = default;

  /// Validates antisymmetry and the Jacobi identity.
  static LieAlgebra create(std::string name, std::vector<std::string> basis, StructureTable table);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& basis() const { return basis_; }
  int dim() const { return dim_; }
  int index_of(std::string_view basis_name) const;

  const Rational& c(int i, int j, int p) const { return table_[(i * dim_ + j) * dim_ + p]; }
  const StructureTable& table() const { return table_; }

  /// [tau_i, tau_j] in coordinates.
  QVector bracket(int i, int j) const;
  template <class S>
  Vector<S> bracket(const Vector<S>& x, const Vector<S>& y) const {
    Vector<S> out = Vector<S>::Constant(dim_, S(0));
    for (int i = 0; i < dim_; ++i) {
      if (is_zero(x(i))) continue;
      for (int j = 0; j < dim_; ++j) {
        if (is_zero(y(j))) continue;
        S xy = x(i) * y(j);
        for (int p = 0; p < dim_; ++p)
          if (!c(i, j, p).is_zero()) out(p) += xy * c(i, j, p);
      }
    }
    return out;
  }
  /// Column q of ad(i) is [tau_i, tau_q].
  QMatrix ad(int i) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.table_ == b.table_;
  }

 private:
  std::string name_ = "0";
  std::vector<std::string> basis_;
  int dim_ = 0;
  StructureTable table_;
};

/// A subalgebra together with its inclusion. Column k of `inclusion` is the
/// image of the k-th basis vector of `algebra` in the parent basis.
struct SubalgebraSpec {
  LieAlgebra parent;
  LieAlgebra algebra;
  QMatrix inclusion;
};

/// Builds the induced structure on span(columns). Throws NotClosed.
SubalgebraSpec make_subalgebra(const LieAlgebra& parent, const QMatrix& inclusion, std::string name,
                               std::vector<std::string> basis);

LieAlgebra sl(int n);
/// n x n matrices of the sl_n basis, in basis order.
std::vector<QMatrix> sl_basis_matrices(int n);
/// Coordinates of a traceless matrix in the sl_n basis.
QVector sl_coordinates(int n, const QMatrix& m);
SubalgebraSpec borel_of_sl(int n);
SubalgebraSpec nilradical_of_sl(int n);
/// `levi` holds 1-based simple roots of the Levi factor. Empty gives the Borel.
SubalgebraSpec parabolic_of_sl(int n, const std::vector<int>& levi);
LieAlgebra heisenberg(int dim);
LieAlgebra abelian(int dim);

/// Result of resolving a builtin name. `sub` is set for subalgebras of sl_n.
struct NamedAlgebra {
  LieAlgebra algebra;
  std::optional<SubalgebraSpec> sub;
};

/// Builtin names: sl<n>, borel(sl<n>), nilradical(sl<n>),
/// parabolic(sl<n>,i+j+...), heisenberg<2k+1>, abelian<n>.
NamedAlgebra builtin(std::string_view name);

/// Reads {name, dim, basis, brackets:[[i,j,[coeffs]]]}. A pair listed in one
/// order only gets its opposite by antisymmetry.
LieAlgebra algebra_from_json(std::string_view text);
std::string algebra_to_json(const LieAlgebra& g);

QMatrix killing_form(const LieAlgebra& g);

template <class S>
bool is_invariant(const LieAlgebra& g, const Matrix<S>& form) {
  const int n = g.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        S s(0);
        for (int p = 0; p < n; ++p) {
          if (!g.c(i, j, p).is_zero()) s += form(p, k) * g.c(i, j, p);
          if (!g.c(i, k, p).is_zero()) s += form(j, p) * g.c(i, k, p);
        }
        if (!is_zero(s)) return false;
      }
  return true;
}

/// Basis of the space of symmetric invariant bilinear forms.
std::vector<QMatrix> invariant_form_space(const LieAlgebra& g);

/// -Killing - form.
template <class S>
Matrix<S> dual_level(const LieAlgebra& g, const Matrix<S>& form) {
  Matrix<S> k = lift<S>(killing_form(g));
  Matrix<S> out(form.rows(), form.cols());
  for (Eigen::Index i = 0; i < form.rows(); ++i)
    for (Eigen::Index j = 0; j < form.cols(); ++j) out(i, j) = -k(i, j) - form(i, j);
  return out;
}

QMatrix critical_level(const LieAlgebra& g);

/// inclusion^T form inclusion.
template <class S>
Matrix<S> restrict_form(const SubalgebraSpec& sub, const Matrix<S>& form) {
  return multiply(multiply(lift<S>(sub.inclusion.transpose()), form), lift<S>(sub.inclusion));
}

bool is_nilpotent(const LieAlgebra& g);
bool is_semisimple(const LieAlgebra& g);

}  // namespace cdo
