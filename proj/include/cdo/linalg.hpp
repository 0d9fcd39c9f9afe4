#pragma once

#include <Eigen/Core>

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cdo/polynomial.hpp"
#include "cdo/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<cdo::Rational> : GenericNumTraits<cdo::Rational> {
  using Real = cdo::Rational;
  using NonInteger = cdo::Rational;
  using Nested = cdo::Rational;
  using Literal = cdo::Rational;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64
  };
  static cdo::Rational epsilon() { return cdo::Rational(0); }
  static cdo::Rational dummy_precision() { return cdo::Rational(0); }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<cdo::Polynomial> : GenericNumTraits<cdo::Polynomial> {
  using Real = cdo::Polynomial;
  using NonInteger = cdo::Polynomial;
  using Nested = cdo::Polynomial;
  using Literal = cdo::Polynomial;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 64,
    MulCost = 256
  };
  static cdo::Polynomial epsilon() { return cdo::Polynomial(); }
  static cdo::Polynomial dummy_precision() { return cdo::Polynomial(); }
  static int digits10() { return 0; }
};

template <>
struct ScalarBinaryOpTraits<cdo::Polynomial, cdo::Rational> {
  using ReturnType = cdo::Polynomial;
};
template <>
struct ScalarBinaryOpTraits<cdo::Rational, cdo::Polynomial> {
  using ReturnType = cdo::Polynomial;
};

}  // namespace Eigen

namespace cdo {

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using QMatrix = Matrix<Rational>;
using QVector = Vector<Rational>;

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

template <class Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <class S>
bool is_symmetric(const Matrix<S>& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j)
      if (!(m(i, j) == m(j, i))) return false;
  return true;
}

/// Exact matrix product. Eigen's product kernels are avoided for
/// non-arithmetic scalars because they assume cheap copies.
template <class S, class T>
auto multiply(const Matrix<S>& a, const Matrix<T>& b) {
  using R = typename Eigen::ScalarBinaryOpTraits<S, T>::ReturnType;
  Matrix<R> out = Matrix<R>::Constant(a.rows(), b.cols(), R(0));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j)
        if (!is_zero(b(k, j))) out(i, j) += R(a(i, k) * b(k, j));
    }
  return out;
}

template <class S>
Matrix<S> lift(const QMatrix& m) {
  Matrix<S> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = S(m(i, j));
  return out;
}

QMatrix zero_matrix(Eigen::Index rows, Eigen::Index cols);
QMatrix identity_matrix(Eigen::Index n);

struct RowEchelon {
  QMatrix reduced;
  std::vector<int> pivots;
};

/// Reduced row echelon form over Q.
RowEchelon rref(QMatrix m);
int rank(const QMatrix& m);
/// Columns form a basis of the right kernel.
QMatrix nullspace(const QMatrix& m);
/// One solution of a x = b with free variables set to zero.
std::optional<QVector> solve(const QMatrix& a, const QVector& b);
/// Solves a x = b where b has polynomial entries, monomial by monomial.
std::optional<Vector<Polynomial>> solve(const QMatrix& a, const Vector<Polynomial>& b);

using SparseVector = std::vector<std::pair<int, Rational>>;

/// Incremental echelon basis kept in primitive integer form. Elimination is
/// fraction free and each reduced row is divided by its content.
class EchelonBasis {
 public:
  EchelonBasis() = default;
  /// Returns true when v was independent of the rows already inserted.
  bool insert(const SparseVector& v);
  bool contains(const SparseVector& v) const;
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  using IntRow = std::vector<std::pair<int, mpz_class>>;
  IntRow reduce(IntRow v) const;
  std::vector<IntRow> rows_;
  std::map<int, std::size_t> lead_;
};

/// Rank of the span of the given vectors.
int rank_of(const std::vector<SparseVector>& vectors);

}  // namespace cdo
