#pragma once

#include <map>
#include <utility>
#include <vector>

#include "cdo/liealg.hpp"

namespace cdo {

/// Strictly increasing tuple of basis indices.
using IndexSet = std::vector<int>;

/// Sorts `idx` in place. Returns the sign of the sorting permutation, or 0
/// when an index repeats.
int sort_with_sign(std::vector<int>& idx);

/// All k-element subsets of {0..n-1} in lexicographic order.
std::vector<IndexSet> subsets(int n, int k);

/// Alternating map g^degree -> Scalar stored on increasing index tuples.
struct Cochain {
  int degree = 0;
  std::map<IndexSet, Scalar> values;

  /// Value on an arbitrary argument tuple.
  Scalar at(std::vector<int> args) const;
  void add(std::vector<int> args, const Scalar& v);
  friend bool operator==(const Cochain& a, const Cochain& b);
};

/// Alternating map Lambda^{degree-1} g -> g*. Entry (S, k) is
/// <tau_k, h(tau_S)>. Degree 0 is a single scalar stored under ({}, -1).
struct TildeCochain {
  int degree = 0;
  std::map<std::pair<IndexSet, int>, Scalar> values;

  Scalar at(std::vector<int> args, int k) const;
  void add(std::vector<int> args, int k, const Scalar& v);
  bool is_zero() const { return values.empty(); }
  friend bool operator==(const TildeCochain& a, const TildeCochain& b);
  friend TildeCochain operator+(const TildeCochain& a, const TildeCochain& b);
  friend TildeCochain operator-(const TildeCochain& a, const TildeCochain& b);
  friend TildeCochain operator*(const Scalar& s, const TildeCochain& a);
};

Cochain d_trivial(const LieAlgebra& g, const Cochain& f);
/// Differential of the shifted complex with coefficients in g*. The action
/// on g* is <y, tau(xi)> = xi([tau, y]).
TildeCochain d_tilde(const LieAlgebra& g, const TildeCochain& h);
/// <tau_1, f~(tau_2..tau_i)> = f(tau_1..tau_i).
TildeCochain embed_trivial(const Cochain& f);

/// c(tau_1,tau_2,tau_3) = ([tau_1,tau_2],tau_3). Throws NotInvariant.
Cochain cocycle_from_form(const LieAlgebra& g, const Matrix<Scalar>& form);

enum class ComplexKind { Trivial, Tilde };

/// Dimensions of H^0, H^1, ... for every degree carrying a nonzero space.
std::vector<int> cohomology_dims(const LieAlgebra& g, ComplexKind kind);

/// Matrix of d_trivial from degree i-1 to degree i in the subset bases.
QMatrix trivial_differential_matrix(const LieAlgebra& g, int i);

struct ThirdCohomology {
  int dim = 0;
  /// Cocycles whose classes form a basis of H^3.
  std::vector<Cochain> representatives;
};
ThirdCohomology third_cohomology(const LieAlgebra& g);

/// True when f (of degree i >= 1) is d_trivial of some degree i-1 cochain.
bool is_coboundary(const LieAlgebra& g, const Cochain& f);

}  // namespace cdo
