#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "cdo/liealg.hpp"

namespace cdo {

enum class Parity { Even, Odd };

/// A generating field x(z) = sum x_(n) z^(-n-1). Creation modes are n <= -1.
struct Generator {
  std::string name;
  Parity parity = Parity::Even;
  /// Conformal weight, 0 or 1.
  int weight = 1;
  int charge = 0;
  int aux = 0;
  /// Weight under a chosen Cartan subalgebra, one entry per Cartan element.
  std::vector<Rational> cartan_weight;
};

/// x_(n) of generator `field`.
struct Mode {
  int field = 0;
  int n = 0;
};

/// Supercommutator [x_(m), y_(n)}: a scalar plus modes.
struct ModeBracket {
  Rational scalar;
  std::vector<std::pair<Mode, Rational>> modes;
};

/// Generators and the mode algebra of a free-field vertex superalgebra.
/// Brackets between generators from different sectors vanish.
class FreeFieldAlgebra {
 public:
  int add_generator(Generator g);
  /// {phi_(m), phistar_(n)} = delta_{m+n,-1}.
  void add_bc_pair(int phi, int phistar);
  /// [beta_(m), gamma_(n)] = delta_{m+n,-1}.
  void add_betagamma_pair(int beta, int gamma);
  /// [a_i(m), a_j(n)] = c^{ij}_p a_p(m+n) + m level_ij delta_{m+n,0}.
  void add_currents(const std::vector<int>& ids, const LieAlgebra& g, const QMatrix& level);

  int size() const { return static_cast<int>(gens_.size()); }
  const Generator& generator(int i) const { return gens_[i]; }
  int index_of(const std::string& name) const;
  bool odd(int i) const { return gens_[i].parity == Parity::Odd; }

  ModeBracket bracket(const Mode& x, const Mode& y) const;

 private:
  struct CurrentSector {
    std::vector<int> ids;
    LieAlgebra algebra;
    QMatrix level;
  };
  std::vector<Generator> gens_;
  std::map<std::pair<int, int>, int> pairs_;  // (x, y) -> +1 for bc/betagamma, -1 reversed boson
  std::vector<std::pair<int, int>> current_of_;  // sector, local index; sector -1 if none
  std::vector<CurrentSector> sectors_;
};

/// Sorted creation modes applied to the vacuum. A mode is coded as
/// field * 64 + (-n).
using Monomial = std::vector<std::uint16_t>;
using State = std::map<Monomial, Rational>;

inline std::uint16_t mode_code(int field, int n) { return static_cast<std::uint16_t>(field * 64 - n); }
inline Mode decode(std::uint16_t c) { return {c / 64, -(c % 64)}; }

State vacuum();
void add_to(State& s, const State& o, const Rational& c = Rational(1));
void clean(State& s);

/// Normal-ordered expression in the generators.
class FieldExpr {
 public:
  enum class Kind { Gen, Deriv, Nop, Sum };

  static FieldExpr gen(int field, const FreeFieldAlgebra& alg);
  static FieldExpr deriv(const FieldExpr& a);
  /// :a b:
  static FieldExpr nop(const FieldExpr& a, const FieldExpr& b);
  /// Right-nested :x1 :x2 ... xk::.
  static FieldExpr nop(const std::vector<FieldExpr>& factors);
  static FieldExpr zero();

  FieldExpr& add(const FieldExpr& term, const Rational& c);
  FieldExpr operator*(const Rational& c) const;

  Kind kind() const { return node_->kind; }
  bool is_zero() const { return node_->kind == Kind::Sum && node_->terms.empty(); }
  int weight() const { return node_->weight; }
  bool odd() const { return node_->odd; }
  int charge() const { return node_->charge; }
  int aux() const { return node_->aux; }

  /// X_(m) applied to a state.
  State apply(int m, const State& s, const FreeFieldAlgebra& alg) const;

 private:
  struct Node {
    Kind kind = Kind::Sum;
    int field = -1;
    std::shared_ptr<const Node> a, b;
    std::vector<std::pair<std::shared_ptr<const Node>, Rational>> terms;
    int weight = 0;
    bool odd = false;
    int charge = 0;
    int aux = 0;
  };
  explicit FieldExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static State apply_node(const Node& x, int m, const Monomial& mono, int w, const FreeFieldAlgebra& alg);
  std::shared_ptr<const Node> node_;
};

/// x_(n) on a state, normal ordering the result.
State apply_mode(const FreeFieldAlgebra& alg, const Mode& x, const State& s);

/// Y_(-1) vac.
State state_of(const FieldExpr& y, const FreeFieldAlgebra& alg);

int monomial_weight(const FreeFieldAlgebra& alg, const Monomial& m);
int monomial_charge(const FreeFieldAlgebra& alg, const Monomial& m);
int monomial_aux(const FreeFieldAlgebra& alg, const Monomial& m);
bool monomial_is_odd(const FreeFieldAlgebra& alg, const Monomial& m);
std::string monomial_str(const FreeFieldAlgebra& alg, const Monomial& m);
std::string state_str(const FreeFieldAlgebra& alg, const State& s);

struct BlockKey {
  int weight = 0;
  int charge = 0;
  int aux = 0;
  friend auto operator<=>(const BlockKey&, const BlockKey&) = default;
};

/// Truncation of the Fock module to weight <= max_weight and aux in a window.
class FockSpace {
 public:
  /// Weight zero bosons need a nonzero aux grade of one sign; the aux window
  /// then bounds their number.
  FockSpace(const FreeFieldAlgebra& alg, int max_weight, int aux_min = -64, int aux_max = 64);

  const FreeFieldAlgebra& algebra() const { return *alg_; }
  int max_weight() const { return max_weight_; }
  const std::map<BlockKey, std::vector<Monomial>>& blocks() const { return blocks_; }
  const std::vector<Monomial>& block(const BlockKey& k) const;
  int index_in_block(const BlockKey& k, const Monomial& m) const;
  /// Dimension per weight, summed over charge and aux.
  std::vector<int> weight_dims() const;

  /// Throws TruncationExceeded if `s` has support above the cap.
  void check(const State& s) const;

 private:
  const FreeFieldAlgebra* alg_;
  int max_weight_;
  std::map<BlockKey, std::vector<Monomial>> blocks_;
  std::map<BlockKey, std::map<Monomial, int>> index_;
  static const std::vector<Monomial> empty_;
};

/// Sparse matrix of X_(0) for a weight-one element between blocks.
struct BlockOperator {
  BlockKey source, target;
  /// column j is the image of basis vector j of the source block
  std::vector<SparseVector> columns;
  int target_dim = 0;
};

/// Zero mode on every block of the truncation. Throws InputError unless X has
/// weight one.
std::vector<BlockOperator> zero_mode(const FockSpace& space, const FieldExpr& x);

/// Expected poles x_(n) y for n = 0..; returns the first mismatch index or -1.
struct OpeResult {
  bool ok = true;
  int failed_pole = -1;
  std::vector<State> products;
};
OpeResult ope_check(const FreeFieldAlgebra& alg, const FieldExpr& x, const FieldExpr& y,
                    const std::vector<State>& expected);

/// One bc pair per basis element of g: phi_i (weight 1, charge -1, aux
/// -star_aux) and phistar_i (weight 0, charge 1, aux star_aux). All phi come
/// first, then all phistar. `cartan` holds the Cartan weight of each basis
/// element; phistar gets the opposite weight.
struct GhostLayout {
  int phi0 = 0;
  int star0 = 0;
  int dim = 0;
  int phi(int i) const { return phi0 + i; }
  int star(int i) const { return star0 + i; }
};
GhostLayout add_ghosts(FreeFieldAlgebra& alg, const LieAlgebra& g, const std::vector<std::vector<Rational>>& cartan = {},
                       int star_aux = 0);

/// Generating-function count of one bc pair (weight 1 and weight 0 odd
/// towers) at each weight up to w.
std::vector<long> bc_pair_dims(int w);

}  // namespace cdo
