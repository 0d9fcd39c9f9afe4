#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cdo/fock.hpp"

namespace cdo {

/// -1/2 c^{ij}_p :phi_p :phi*_i phi*_j::.
FieldExpr brst_charge(const LieAlgebra& g, const FreeFieldAlgebra& alg, const GhostLayout& lay);
/// c^{ip}_q :phi_q phi*_p:.
FieldExpr ghost_current(const LieAlgebra& g, const FreeFieldAlgebra& alg, const GhostLayout& lay, int i);
/// K_ij :d(phi*_i) phi*_j:, the Killing operator compared with d^2.
FieldExpr square_field(const LieAlgebra& g, const FreeFieldAlgebra& alg, const GhostLayout& lay);

struct SquareReport {
  std::string algebra;
  int max_weight = 0;
  bool square_zero = false;
  /// d^2 equals the zero mode of square_field on every block.
  bool matches_killing_operator = false;
  /// r with d^2 = r * (square_field)_(0), when both are nonzero.
  std::optional<Rational> ratio;
  int blocks = 0;
  int nonzero_blocks = 0;
};

/// d^2 of the ghost complex computed by squaring the zero mode, compared on
/// every block with the operator assembled from the Killing form. Throws
/// MismatchError when the two are not proportional.
SquareReport brst_square(const LieAlgebra& g, int max_weight);

struct GhostCurrentReport {
  bool level_ok = false;
  bool bracket_ok = false;
  /// J_i(1) J_j in units of the vacuum.
  QMatrix level;
  bool ok() const { return level_ok && bracket_ok; }
};

/// Checks the current OPE of the ghost currents at the Killing level.
/// Throws OpeCheckFailure.
GhostCurrentReport ghost_currents(const LieAlgebra& g);

enum class ModuleKind { None, Currents, BetaGamma };

struct ModuleSpec {
  ModuleKind kind = ModuleKind::None;
  /// Level of the current module.
  QMatrix level;
};

/// Ghosts tensored with a module, with D_M = phi*_i a_i + D.
class BrstComplex {
 public:
  /// For Cartan data pass the weight of each basis element under a Cartan
  /// subalgebra (see cartan_weights). The betagamma model needs an abelian
  /// algebra.
  BrstComplex(const LieAlgebra& g, const ModuleSpec& module, int max_weight, int aux_min, int aux_max,
              const std::vector<std::vector<Rational>>& cartan = {});

  const LieAlgebra& algebra() const { return algebra_; }
  const FreeFieldAlgebra& fields() const { return *alg_; }
  const GhostLayout& ghosts() const { return ghosts_; }
  const std::vector<int>& module_fields() const { return module_ids_; }
  const FockSpace& space() const { return *space_; }
  const FieldExpr& charge_field() const { return d_field_; }
  const std::vector<BlockOperator>& differential() const { return d_; }
  int max_weight() const { return max_weight_; }

  /// Image of a basis vector of block k under d.
  SparseVector apply(const BlockKey& k, int column) const;
  /// True when d^2 vanishes on every block.
  bool square_is_zero() const;

 private:
  LieAlgebra algebra_;
  std::unique_ptr<FreeFieldAlgebra> alg_;
  GhostLayout ghosts_;
  std::vector<int> module_ids_;
  FieldExpr d_field_ = FieldExpr::zero();
  std::unique_ptr<FockSpace> space_;
  std::vector<BlockOperator> d_;
  std::map<BlockKey, std::size_t> by_source_;
  int max_weight_ = 0;
};

struct CohomologyTable {
  /// dims[weight][charge], summed over aux.
  std::map<int, std::map<int, int>> dims;
  /// Alternating sum of block dimensions per weight.
  std::map<int, int> euler;
  int total() const;
};

/// Throws DifferentialNotSquareZero.
CohomologyTable brst_cohomology(const BrstComplex& c);

/// Weights of every basis element of sub under the Cartan part of sub.
/// Returns the indices of the Cartan elements in `cartan_indices`.
std::vector<std::vector<Rational>> cartan_weights(const SubalgebraSpec& sub, std::vector<int>* cartan_indices = nullptr);

struct RelativeReport {
  int total_dim = 0;
  int filtered_dim = 0;
  /// Filtered vectors containing a Cartan ghost phi*_h(-1): always 0.
  int excluded_by_ghost = 0;
  int excluded_by_weight = 0;
  bool stable = false;
  std::string first_violation;
  /// Cohomology of the filtered complex, dims[weight][charge]; filled when stable.
  std::map<int, std::map<int, int>> dims;
};

/// Filter: no phi*_h(-1) for Cartan h, and total Cartan weight zero. Checks
/// that d maps the filtered span into itself.
RelativeReport relative_subcomplex(const BrstComplex& c, const std::vector<int>& cartan_indices);
/// Builds ghosts tensored with `module` over sub.algebra, graded by the Cartan
/// weights of sub, and filters it.
RelativeReport relative_subcomplex(const SubalgebraSpec& sub, const ModuleSpec& module, int max_weight);
/// Throws StabilityViolation.
void require_stable(const RelativeReport& r);

struct LevelSolution {
  /// Invariant forms of the parent, the coordinates of the level.
  std::vector<QMatrix> basis;
  /// Affine set of solutions in those coordinates, empty if none.
  std::optional<QVector> particular;
  std::vector<QVector> directions;
  bool empty() const { return !particular.has_value(); }
  bool all_levels() const { return particular && directions.size() == basis.size(); }
  bool unique() const { return particular && directions.empty(); }
  /// The level of a solution in the parent basis.
  QMatrix level(const QVector& coords) const;
  /// "all", "unique", "empty" or "affine(<dim>)".
  std::string verdict() const;
};

/// Levels (,) on the parent whose restriction to sub is minus the Killing form
/// of sub.
LevelSolution admissible_levels(const SubalgebraSpec& sub);

}  // namespace cdo
