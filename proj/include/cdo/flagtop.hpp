#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cdo/brst.hpp"

namespace cdo {

/// Root data in simple-root coordinates.
struct RootSystem {
  char type = 'A';
  int rank = 0;
  /// (alpha_i, alpha_j) for the simple roots.
  QMatrix gram;
  std::vector<QVector> positive;
  /// Simple reflections acting on coordinates.
  std::vector<QMatrix> reflections;

  std::string name() const { return std::string(1, type) + std::to_string(rank); }
  /// Coordinates of alpha with support inside `levi` (1-based simple roots).
  bool in_levi(const QVector& alpha, const std::vector<int>& levi) const;
};

/// Types A, B, C, D and G (rank 2). Throws UnsupportedType.
RootSystem build_root_system(char type, int rank);
/// "A2", "B3", "G2".
RootSystem root_system_from_name(const std::string& name);

/// Elements generated by the reflections in `subset` (1-based); all simple
/// reflections when `subset` is empty and `full` is set.
std::vector<QMatrix> weyl_group(const RootSystem& rs, const std::vector<int>& subset, bool full = false);
inline std::vector<QMatrix> weyl_group(const RootSystem& rs) { return weyl_group(rs, {}, true); }

/// Symmetric r x r matrices Q with R Q R^T = Q for the chosen reflections.
std::vector<QMatrix> invariant_quadratics(const RootSystem& rs, const std::vector<int>& subset, bool full = false);
/// Group average of Q.
QMatrix reynolds(const std::vector<QMatrix>& group, const QMatrix& q);

/// sum over roots alpha of alpha alpha^T.
QMatrix sum_of_squares(const std::vector<QVector>& roots);

struct Ch2Class {
  std::string system;
  std::vector<int> levi;
  QMatrix q;
  /// Q is a multiple of the invariant quadratic (or the quotient vanishes).
  bool zero = false;
  std::optional<Rational> multiple;
};

/// Q = sum of alpha^2 over positive roots outside the Levi of `levi`.
Ch2Class ch2_class(const RootSystem& rs, const std::vector<int>& levi);

enum class SpaceKind { Group, BaseAffine, Flag, Partial };

struct ExistenceReport {
  SpaceKind kind = SpaceKind::Group;
  std::string space;
  std::string algebra;
  /// "torsor", "unique" or "empty".
  std::string verdict;
  std::string statement;
  /// dim (S^2 g*)^g for torsor verdicts.
  int torsor_dim = 0;
  std::optional<Ch2Class> ch2;
  std::optional<std::string> levels;
  std::vector<int> levi;
  /// The ch2 and admissible-level witnesses point the same way.
  bool consistent = true;
};

/// `algebra` is a builtin sl_n. For Partial, `levi` lists 1-based simple roots
/// of the Levi; empty means the last simple root.
ExistenceReport existence_report(SpaceKind kind, const std::string& algebra, std::vector<int> levi = {});
SpaceKind space_kind_from_name(const std::string& s);
std::string space_name(SpaceKind k);

}  // namespace cdo
