#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cdo/cohomology.hpp"

namespace cdo {

/// Vertex algebroid over the constants with T = g and Omega = g*.
struct ConstantVertexAlgebroid {
  LieAlgebra algebra;
  /// Symmetric bilinear map g x g -> Scalar, not necessarily invariant.
  Matrix<Scalar> pairing;
  /// Degree 3 element of the tilde complex.
  TildeCochain c;
};

/// Throws PairingAxiomViolation or CocycleAxiomViolation, NotSymmetric on a
/// non-symmetric pairing.
ConstantVertexAlgebroid check_axioms(const ConstantVertexAlgebroid& candidate);

struct MorphismCertificate {
  bool pairing_ok = false;
  bool cocycle_ok = false;
  /// sym(h) - (pairing - pairing').
  Matrix<Scalar> pairing_residual;
  /// d h - (c' - c).
  TildeCochain cocycle_residual;
  bool ok() const { return pairing_ok && cocycle_ok; }
};

/// h in C~2 is a morphism source -> target when
///   <t1,h(t2)> + <t2,h(t1)> = <t1,t2> - <t1,t2>'  and  d h = c' - c.
/// Throws AlgebraMismatch.
MorphismCertificate check_morphism(const ConstantVertexAlgebroid& source, const ConstantVertexAlgebroid& target,
                                   const TildeCochain& h);

/// The target reached from `source` along h.
ConstantVertexAlgebroid transport(const ConstantVertexAlgebroid& source, const TildeCochain& h);

struct CanonicalObjects {
  /// Pairing (,), cocycle zero.
  ConstantVertexAlgebroid tilde;
  /// Pairing zero, cocycle c_(,).
  ConstantVertexAlgebroid cocycle;
  /// Currents-only algebroid: the same data as `tilde`, enveloped by the
  /// fields tau alone.
  ConstantVertexAlgebroid currents;
  /// <t1, h(t2)> = (t1,t2)/2.
  TildeCochain h;
};

/// Throws NotInvariant.
CanonicalObjects canonical_objects(const LieAlgebra& g, const Matrix<Scalar>& form);

std::optional<TildeCochain> find_morphism(const ConstantVertexAlgebroid& a, const ConstantVertexAlgebroid& b);

struct Pi0Report {
  int h3_dim = 0;
  std::vector<Cochain> representatives;
  bool semisimple = false;
  std::optional<int> invariant_forms_dim;
  /// Both dimensions agree and form -> [c_form] is injective on a basis.
  std::optional<bool> bijection;
};

Pi0Report pi0_report(const LieAlgebra& g);

}  // namespace cdo
