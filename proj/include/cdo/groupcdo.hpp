#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cdo/liealg.hpp"

namespace cdo {

enum class GroupKind { SpecialLinear, Unipotent };

/// A matrix group G in GL(n) with its coordinate ring and invariant fields.
/// Coordinates x_ab live in polynomial slots kParamSlots and up, row-major;
/// the level parameters keep slots below kParamSlots.
class MatrixGroup {
 public:
  /// SL(n) with relation det = 1.
  static MatrixGroup special_linear(int n);
  /// Upper unitriangular matrices, a free polynomial ring in x_ab, a < b.
  static MatrixGroup unipotent(int n);
  /// "SL2", "SL(3)", "N3", "unipotent(3)".
  static MatrixGroup from_name(std::string_view name);

  GroupKind kind() const { return kind_; }
  int n() const { return n_; }
  const std::string& name() const { return name_; }
  const LieAlgebra& algebra() const { return algebra_; }
  const std::vector<QMatrix>& basis_matrices() const { return mats_; }
  /// Print names for every slot, coordinates included.
  const VariableNames& names() const { return names_; }
  /// Entry (a,b) of the generic group element; constants where fixed.
  const Polynomial& entry(int a, int b) const { return entries_[a * n_ + b]; }
  int coordinate_count() const { return static_cast<int>(slots_.size()); }
  /// Sign s of the right fields, tau^R(x) = s * tau x.
  int right_sign() const { return right_sign_; }

  /// Normal form. For SL(n) the diagonal monomial x11...xnn, the leading term
  /// of det in degree-lex order, is rewritten as itself - (det - 1).
  Polynomial reduce(const Polynomial& f) const;
  Polynomial left(int i, const Polynomial& f) const;
  Polynomial right(int i, const Polynomial& f) const;
  Polynomial at_identity(const Polynomial& f) const;

 private:
  MatrixGroup() = default;
  void build_fields(int sign);
  bool fields_consistent() const;
  Polynomial apply(const std::vector<Polynomial>& images, const Polynomial& f) const;

  GroupKind kind_ = GroupKind::SpecialLinear;
  int n_ = 0;
  std::string name_;
  LieAlgebra algebra_;
  std::vector<QMatrix> mats_;
  VariableNames names_;
  std::vector<Polynomial> entries_;
  std::vector<int> slots_;
  std::vector<std::vector<Polynomial>> left_, right_;
  int right_sign_ = -1;
  Polynomial det_minus_one_;
};

/// a^{ij} with tau_i^R = a^{ij} tau_j. Throws SolveFailure.
Matrix<Polynomial> transport_matrix(const MatrixGroup& group);

/// Element of T + Omega: sum t_part[j] tau_j + w_part[j] omega_j.
struct WeightOneElement {
  std::vector<Polynomial> t_part;
  std::vector<Polynomial> w_part;

  static WeightOneElement zero(int dim);
  static WeightOneElement tau(int dim, int i);
  static WeightOneElement omega(int dim, int i);

  bool is_zero() const;
  WeightOneElement& operator+=(const WeightOneElement& o);
  WeightOneElement& operator-=(const WeightOneElement& o);
  friend WeightOneElement operator+(WeightOneElement a, const WeightOneElement& b) { return a += b; }
  friend WeightOneElement operator-(WeightOneElement a, const WeightOneElement& b) { return a -= b; }
  friend bool operator==(const WeightOneElement& a, const WeightOneElement& b) {
    return a.t_part == b.t_part && a.w_part == b.w_part;
  }
};

/// The weight one part of the cdo on G at a level.
class GroupCdo {
 public:
  /// Throws NotInvariant unless `level` is symmetric and invariant.
  GroupCdo(MatrixGroup group, Matrix<Scalar> level);

  const MatrixGroup& group() const { return group_; }
  const Matrix<Scalar>& level() const { return level_; }
  /// -Killing - level.
  const Matrix<Scalar>& dual() const { return dual_; }
  const Matrix<Polynomial>& transport() const { return a_; }
  int dim() const { return group_.algebra().dim(); }

  WeightOneElement reduce(const WeightOneElement& v) const;
  /// Normalizes every entry and multiplies by f.
  WeightOneElement scale(const Polynomial& f, const WeightOneElement& v) const;
  /// d f = sum tau_i(f) omega_i.
  WeightOneElement differential(const Polynomial& f) const;
  /// f_(-1) v, with the correction terms on the vector field part.
  WeightOneElement times(const Polynomial& f, const WeightOneElement& v) const;

  Polynomial product1(const WeightOneElement& u, const WeightOneElement& v) const;
  WeightOneElement product0(const WeightOneElement& u, const WeightOneElement& v) const;

  WeightOneElement right_field(int i) const;
  /// tau_i^R + (tau_p,tau_q)^o a^{ip} omega_q.
  WeightOneElement dual_embedding(int i) const;
  std::vector<WeightOneElement> dual_embedding() const;

 private:
  Polynomial product1_tau(int i, const WeightOneElement& v) const;
  WeightOneElement product0_tau(int i, const WeightOneElement& v) const;
  WeightOneElement product0_omega(int j, const WeightOneElement& v) const;

  MatrixGroup group_;
  Matrix<Scalar> level_;
  Matrix<Scalar> dual_;
  Matrix<Polynomial> a_;
};

struct IdentityCheck {
  std::string name;
  bool passed = false;
  /// First failing instance, empty on success.
  std::string detail;
};

struct DualEmbeddingReport {
  std::string group;
  std::vector<IdentityCheck> checks;
  bool ok() const;
  /// Throws VerificationFailure naming the first failed identity.
  void require() const;
};

/// Every identity of the dual embedding as an exact polynomial identity in the
/// coordinates and the level parameters.
DualEmbeddingReport verify_dual_embedding(const GroupCdo& cdo);

}  // namespace cdo
