#include "cdo/groupcdo.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <sstream>

namespace cdo {

namespace {

using PolyMatrix = std::vector<Polynomial>;  // row-major n x n

PolyMatrix mat_mul(int n, const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix out(n * n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i * n + k].is_zero()) continue;
      for (int j = 0; j < n; ++j)
        if (!b[k * n + j].is_zero()) out[i * n + j].add_product(a[i * n + k], b[k * n + j]);
    }
  return out;
}

PolyMatrix lift_matrix(const QMatrix& m) {
  const int n = static_cast<int>(m.rows());
  PolyMatrix out(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i * n + j] = Polynomial(m(i, j));
  return out;
}

Polynomial determinant(int n, const PolyMatrix& m) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial det;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Polynomial term(inversions % 2 ? -1 : 1);
    for (int i = 0; i < n && !term.is_zero(); ++i) term *= m[i * n + perm[i]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

PolyMatrix adjugate(int n, const PolyMatrix& m) {
  PolyMatrix out(n * n);
  if (n == 1) {
    out[0] = Polynomial(1);
    return out;
  }
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      PolyMatrix minor;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != r && j != c) minor.push_back(m[i * n + j]);
      Polynomial d = determinant(n - 1, minor);
      out[c * n + r] = (r + c) % 2 ? -d : d;
    }
  return out;
}

std::string describe(const Polynomial& p, const VariableNames& names) { return p.str(names); }

}  // namespace

MatrixGroup MatrixGroup::special_linear(int n) {
  if (n < 2) throw InputError("SL(n) needs n >= 2");
  if (kParamSlots + n * n > kMaxVars) throw InputError("SL(" + std::to_string(n) + ") exceeds the variable limit");
  MatrixGroup g;
  g.kind_ = GroupKind::SpecialLinear;
  g.n_ = n;
  g.name_ = "SL" + std::to_string(n);
  g.algebra_ = sl(n);
  g.mats_ = sl_basis_matrices(n);
  g.names_.clear();
  for (int s = 0; s < kParamSlots; ++s) g.names_.push_back(default_variable_name(s));
  g.entries_.resize(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int slot = kParamSlots + a * n + b;
      g.slots_.push_back(slot);
      g.names_.push_back("x" + std::to_string(a + 1) + std::to_string(b + 1));
      g.entries_[a * n + b] = Polynomial::variable(slot);
    }
  g.det_minus_one_ = determinant(n, g.entries_) - Polynomial(1);
  g.build_fields(-1);
  if (!g.fields_consistent()) {
    g.build_fields(1);
    if (!g.fields_consistent()) throw ConventionFailure("invariant fields fail the commutation checks for both signs");
  }
  return g;
}

MatrixGroup MatrixGroup::unipotent(int n) {
  if (n < 2) throw InputError("unipotent group needs n >= 2");
  if (kParamSlots + n * (n - 1) / 2 > kMaxVars) throw InputError("unipotent group exceeds the variable limit");
  MatrixGroup g;
  g.kind_ = GroupKind::Unipotent;
  g.n_ = n;
  g.name_ = "N" + std::to_string(n);
  SubalgebraSpec sub = nilradical_of_sl(n);
  g.algebra_ = sub.algebra;
  std::vector<QMatrix> parent = sl_basis_matrices(n);
  for (int k = 0; k < sub.algebra.dim(); ++k) {
    QMatrix m = zero_matrix(n, n);
    for (int p = 0; p < sub.parent.dim(); ++p)
      if (!sub.inclusion(p, k).is_zero()) m += parent[p] * sub.inclusion(p, k);
    g.mats_.push_back(m);
  }
  for (int s = 0; s < kParamSlots; ++s) g.names_.push_back(default_variable_name(s));
  g.entries_.resize(n * n);
  for (int a = 0; a < n; ++a) {
    g.entries_[a * n + a] = Polynomial(1);
    for (int b = a + 1; b < n; ++b) {
      int slot = kParamSlots + static_cast<int>(g.slots_.size());
      g.slots_.push_back(slot);
      g.names_.push_back("x" + std::to_string(a + 1) + std::to_string(b + 1));
      g.entries_[a * n + b] = Polynomial::variable(slot);
    }
  }
  g.build_fields(-1);
  if (!g.fields_consistent()) {
    g.build_fields(1);
    if (!g.fields_consistent()) throw ConventionFailure("invariant fields fail the commutation checks for both signs");
  }
  return g;
}

MatrixGroup MatrixGroup::from_name(std::string_view name) {
  static const std::regex sl_re(R"(SL\(?([0-9]+)\)?)", std::regex::icase);
  static const std::regex n_re(R"((?:N|unipotent\()([0-9]+)\)?)", std::regex::icase);
  std::string s(name);
  std::smatch m;
  if (std::regex_match(s, m, sl_re)) return special_linear(std::stoi(m[1]));
  if (std::regex_match(s, m, n_re)) return unipotent(std::stoi(m[1]));
  throw InputError("unknown group '" + s + "'");
}

void MatrixGroup::build_fields(int sign) {
  right_sign_ = sign;
  const int d = algebra_.dim();
  left_.assign(d, {});
  right_.assign(d, {});
  for (int i = 0; i < d; ++i) {
    PolyMatrix m = lift_matrix(mats_[i]);
    PolyMatrix xm = mat_mul(n_, entries_, m);
    PolyMatrix mx = mat_mul(n_, m, entries_);
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        if (entries_[a * n_ + b].is_constant()) continue;
        left_[i].push_back(reduce(xm[a * n_ + b]));
        right_[i].push_back(reduce(mx[a * n_ + b] * Rational(sign)));
      }
  }
}

bool MatrixGroup::fields_consistent() const {
  const int d = algebra_.dim();
  for (std::size_t v = 0; v < slots_.size(); ++v) {
    Polynomial x = Polynomial::variable(slots_[v]);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Polynomial ll = left(i, left(j, x)) - left(j, left(i, x));
        Polynomial rr = right(i, right(j, x)) - right(j, right(i, x));
        for (int p = 0; p < d; ++p) {
          if (algebra_.c(i, j, p).is_zero()) continue;
          ll.add_scaled(left(p, x), -algebra_.c(i, j, p));
          rr.add_scaled(right(p, x), -algebra_.c(i, j, p));
        }
        if (!ll.is_zero() || !rr.is_zero()) return false;
        if (!(left(i, right(j, x)) - right(j, left(i, x))).is_zero()) return false;
      }
  }
  return true;
}

Polynomial MatrixGroup::reduce(const Polynomial& f) const {
  if (kind_ != GroupKind::SpecialLinear) return f;
  Polynomial work = f;
  for (;;) {
    bool found = false;
    Exponents rest{};
    Rational coeff;
    for (const auto& [e, c] : work.terms()) {
      bool divisible = true;
      for (int a = 0; a < n_ && divisible; ++a) divisible = e[kParamSlots + a * n_ + a] > 0;
      if (!divisible) continue;
      rest = e;
      for (int a = 0; a < n_; ++a) --rest[kParamSlots + a * n_ + a];
      coeff = c;
      found = true;
      break;
    }
    if (!found) return work;
    work.add_product(Polynomial::term(rest, -coeff), det_minus_one_);
  }
}

Polynomial MatrixGroup::apply(const std::vector<Polynomial>& images, const Polynomial& f) const {
  Polynomial out;
  for (std::size_t v = 0; v < slots_.size(); ++v) {
    if (images[v].is_zero()) continue;
    Polynomial df = f.derivative(slots_[v]);
    if (!df.is_zero()) out.add_product(df, images[v]);
  }
  return reduce(out);
}

Polynomial MatrixGroup::left(int i, const Polynomial& f) const { return apply(left_[i], f); }
Polynomial MatrixGroup::right(int i, const Polynomial& f) const { return apply(right_[i], f); }

Polynomial MatrixGroup::at_identity(const Polynomial& f) const {
  std::vector<std::pair<int, Rational>> values;
  std::size_t v = 0;
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (!entries_[a * n_ + b].is_constant()) values.emplace_back(slots_[v++], Rational(a == b ? 1 : 0));
  return f.evaluate(values);
}

Matrix<Polynomial> transport_matrix(const MatrixGroup& group) {
  const int n = group.n();
  const int d = group.algebra().dim();
  PolyMatrix x(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) x[a * n + b] = group.entry(a, b);
  PolyMatrix inv;
  if (group.kind() == GroupKind::SpecialLinear) {
    inv = adjugate(n, x);
  } else {
    PolyMatrix minus_nil(n * n), power(n * n);
    for (int a = 0; a < n; ++a) {
      power[a * n + a] = Polynomial(1);
      for (int b = 0; b < n; ++b) minus_nil[a * n + b] = (a == b ? Polynomial(0) : -x[a * n + b]);
    }
    inv = power;
    for (int k = 1; k < n; ++k) {
      power = mat_mul(n, power, minus_nil);
      for (int e = 0; e < n * n; ++e) inv[e] += power[e];
    }
  }

  // Read coordinates off a set of entries on which the basis matrices are independent.
  QMatrix flat = zero_matrix(d, n * n);
  for (int j = 0; j < d; ++j)
    for (int e = 0; e < n * n; ++e) flat(j, e) = group.basis_matrices()[j](e / n, e % n);
  RowEchelon ech = rref(flat);
  if (static_cast<int>(ech.pivots.size()) != d) throw SolveFailure("basis matrices are dependent");
  QMatrix square = zero_matrix(d, d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) square(j, k) = flat(j, ech.pivots[k]);
  // coords * square = values at the pivots
  QMatrix square_t = square.transpose();
  QMatrix inverse = zero_matrix(d, d);
  for (int k = 0; k < d; ++k) {
    QVector e = QVector::Constant(d, Rational(0));
    e(k) = Rational(1);
    auto col = solve(square_t, e);
    if (!col) throw SolveFailure("pivot block is singular");
    inverse.col(k) = *col;
  }

  Matrix<Polynomial> out = Matrix<Polynomial>::Constant(d, d, Polynomial());
  for (int i = 0; i < d; ++i) {
    PolyMatrix m = lift_matrix(group.basis_matrices()[i]);
    PolyMatrix y = mat_mul(n, mat_mul(n, inv, m), x);
    for (auto& p : y) p = group.reduce(p * Rational(group.right_sign()));
    for (int j = 0; j < d; ++j) {
      Polynomial s;
      for (int k = 0; k < d; ++k)
        if (!inverse(j, k).is_zero()) s.add_scaled(y[ech.pivots[k]], inverse(j, k));
      out(i, j) = s;
    }
    for (int e = 0; e < n * n; ++e) {
      Polynomial check = y[e];
      for (int j = 0; j < d; ++j) {
        const Rational& m_e = group.basis_matrices()[j](e / n, e % n);
        if (!m_e.is_zero()) check.add_scaled(out(i, j), -m_e);
      }
      if (!group.reduce(check).is_zero())
        throw SolveFailure("right field " + group.algebra().basis()[i] + " is not in the span of the left fields");
    }
  }
  return out;
}

WeightOneElement WeightOneElement::zero(int dim) { return {std::vector<Polynomial>(dim), std::vector<Polynomial>(dim)}; }

WeightOneElement WeightOneElement::tau(int dim, int i) {
  WeightOneElement v = zero(dim);
  v.t_part[i] = Polynomial(1);
  return v;
}

WeightOneElement WeightOneElement::omega(int dim, int i) {
  WeightOneElement v = zero(dim);
  v.w_part[i] = Polynomial(1);
  return v;
}

bool WeightOneElement::is_zero() const {
  return std::all_of(t_part.begin(), t_part.end(), [](const Polynomial& p) { return p.is_zero(); }) &&
         std::all_of(w_part.begin(), w_part.end(), [](const Polynomial& p) { return p.is_zero(); });
}

WeightOneElement& WeightOneElement::operator+=(const WeightOneElement& o) {
  for (std::size_t i = 0; i < t_part.size(); ++i) t_part[i] += o.t_part[i];
  for (std::size_t i = 0; i < w_part.size(); ++i) w_part[i] += o.w_part[i];
  return *this;
}

WeightOneElement& WeightOneElement::operator-=(const WeightOneElement& o) {
  for (std::size_t i = 0; i < t_part.size(); ++i) t_part[i] -= o.t_part[i];
  for (std::size_t i = 0; i < w_part.size(); ++i) w_part[i] -= o.w_part[i];
  return *this;
}

GroupCdo::GroupCdo(MatrixGroup group, Matrix<Scalar> level) : group_(std::move(group)), level_(std::move(level)) {
  const LieAlgebra& g = group_.algebra();
  if (level_.rows() != g.dim() || level_.cols() != g.dim()) throw InputError("level has wrong size");
  if (!is_symmetric(level_)) throw NotSymmetric("level is not symmetric");
  if (!is_invariant(g, level_)) throw NotInvariant("level is not invariant");
  for (Eigen::Index i = 0; i < level_.size(); ++i)
    if (!level_(i).uses_only_slots_below(kParamSlots)) throw InputError("level must not depend on coordinates");
  dual_ = dual_level(g, level_);
  a_ = transport_matrix(group_);
}

WeightOneElement GroupCdo::reduce(const WeightOneElement& v) const {
  WeightOneElement out = v;
  for (auto& p : out.t_part) p = group_.reduce(p);
  for (auto& p : out.w_part) p = group_.reduce(p);
  return out;
}

WeightOneElement GroupCdo::scale(const Polynomial& f, const WeightOneElement& v) const {
  WeightOneElement out = WeightOneElement::zero(dim());
  if (f.is_zero()) return out;
  for (int i = 0; i < dim(); ++i) {
    if (!v.t_part[i].is_zero()) out.t_part[i] = group_.reduce(f * v.t_part[i]);
    if (!v.w_part[i].is_zero()) out.w_part[i] = group_.reduce(f * v.w_part[i]);
  }
  return out;
}

WeightOneElement GroupCdo::differential(const Polynomial& f) const {
  WeightOneElement out = WeightOneElement::zero(dim());
  for (int i = 0; i < dim(); ++i) out.w_part[i] = group_.left(i, f);
  return out;
}

WeightOneElement GroupCdo::times(const Polynomial& f, const WeightOneElement& v) const {
  WeightOneElement out = scale(f, v);
  if (f.uses_only_slots_below(kParamSlots)) return out;
  WeightOneElement df = differential(f);
  for (int s = 0; s < dim(); ++s) {
    const Polynomial& g = v.t_part[s];
    if (g.is_zero()) continue;
    out += scale(group_.left(s, f), differential(g));
    out += scale(group_.left(s, g), df);
  }
  return out;
}

Polynomial GroupCdo::product1_tau(int i, const WeightOneElement& v) const {
  Polynomial out = v.w_part[i];
  for (int s = 0; s < dim(); ++s) {
    const Polynomial& g = v.t_part[s];
    if (g.is_zero()) continue;
    out.add_product(g, level_(i, s));
    out -= group_.left(s, group_.left(i, g));
  }
  return group_.reduce(out);
}

Polynomial GroupCdo::product1(const WeightOneElement& u, const WeightOneElement& v) const {
  Polynomial out;
  for (int i = 0; i < dim(); ++i) {
    const Polynomial& a = u.t_part[i];
    if (a.is_zero()) continue;
    for (int s = 0; s < dim(); ++s) {
      const Polynomial& b = v.t_part[s];
      if (b.is_zero()) continue;
      if (!level_(i, s).is_zero()) out.add_product(a * b, level_(i, s));
      out -= a * group_.left(s, group_.left(i, b));
      out -= b * group_.left(i, group_.left(s, a));
      out -= group_.left(i, b) * group_.left(s, a);
    }
    if (!v.w_part[i].is_zero()) out.add_product(a, v.w_part[i]);
  }
  for (int s = 0; s < dim(); ++s)
    if (!u.w_part[s].is_zero() && !v.t_part[s].is_zero()) out.add_product(u.w_part[s], v.t_part[s]);
  return group_.reduce(out);
}

WeightOneElement GroupCdo::product0_tau(int i, const WeightOneElement& v) const {
  const LieAlgebra& g = group_.algebra();
  WeightOneElement out = WeightOneElement::zero(dim());
  for (int s = 0; s < dim(); ++s) {
    const Polynomial& f = v.t_part[s];
    if (!f.is_zero()) {
      out.t_part[s] += group_.left(i, f);
      for (int p = 0; p < dim(); ++p)
        if (!g.c(i, s, p).is_zero()) out.t_part[p].add_scaled(f, g.c(i, s, p));
    }
    const Polynomial& h = v.w_part[s];
    if (!h.is_zero()) {
      out.w_part[s] += group_.left(i, h);
      for (int q = 0; q < dim(); ++q)
        if (!g.c(q, i, s).is_zero()) out.w_part[q].add_scaled(h, g.c(q, i, s));
    }
  }
  return out;
}

WeightOneElement GroupCdo::product0_omega(int j, const WeightOneElement& v) const {
  const LieAlgebra& g = group_.algebra();
  WeightOneElement out = WeightOneElement::zero(dim());
  for (int s = 0; s < dim(); ++s) {
    const Polynomial& f = v.t_part[s];
    if (f.is_zero()) continue;
    for (int u = 0; u < dim(); ++u)
      if (!g.c(u, s, j).is_zero()) out.w_part[u].add_scaled(f, -g.c(u, s, j));
  }
  return out;
}

WeightOneElement GroupCdo::product0(const WeightOneElement& u, const WeightOneElement& v) const {
  WeightOneElement out = WeightOneElement::zero(dim());
  for (int i = 0; i < dim(); ++i) {
    const Polynomial& f = u.t_part[i];
    if (f.is_zero()) continue;
    WeightOneElement base = product0_tau(i, v);
    out += times(f, base);
    if (f.uses_only_slots_below(kParamSlots)) continue;
    out += scale(product1_tau(i, v), differential(f));
    Polynomial psi;
    for (int s = 0; s < dim(); ++s)
      if (!v.t_part[s].is_zero()) psi -= v.t_part[s] * group_.left(s, f);
    psi = group_.reduce(psi);
    out.t_part[i] += psi;
    out += differential(group_.left(i, psi));
  }
  for (int j = 0; j < dim(); ++j) {
    const Polynomial& f = u.w_part[j];
    if (f.is_zero()) continue;
    out += times(f, product0_omega(j, v));
    if (f.uses_only_slots_below(kParamSlots)) continue;
    out += scale(v.t_part[j], differential(f));
    Polynomial psi;
    for (int s = 0; s < dim(); ++s)
      if (!v.t_part[s].is_zero()) psi -= v.t_part[s] * group_.left(s, f);
    out.w_part[j] += group_.reduce(psi);
  }
  return reduce(out);
}

WeightOneElement GroupCdo::right_field(int i) const {
  WeightOneElement out = WeightOneElement::zero(dim());
  for (int j = 0; j < dim(); ++j) out.t_part[j] = a_(i, j);
  return out;
}

WeightOneElement GroupCdo::dual_embedding(int i) const {
  WeightOneElement out = right_field(i);
  for (int q = 0; q < dim(); ++q) {
    Polynomial s;
    for (int p = 0; p < dim(); ++p)
      if (!dual_(p, q).is_zero() && !a_(i, p).is_zero()) s.add_product(dual_(p, q), a_(i, p));
    out.w_part[q] = group_.reduce(s);
  }
  return out;
}

std::vector<WeightOneElement> GroupCdo::dual_embedding() const {
  std::vector<WeightOneElement> out;
  for (int i = 0; i < dim(); ++i) out.push_back(dual_embedding(i));
  return out;
}

bool DualEmbeddingReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
}

void DualEmbeddingReport::require() const {
  for (const auto& c : checks)
    if (!c.passed) throw VerificationFailure(group + ": " + c.name + " fails: " + c.detail);
}

namespace {

class Recorder {
 public:
  Recorder(DualEmbeddingReport& report, std::string name, const VariableNames& names) : report_(report), names_(names) {
    report_.checks.push_back({std::move(name), true, ""});
  }
  /// Records the first nonzero residual.
  void expect_zero(const Polynomial& residual, const std::string& where) {
    IdentityCheck& c = report_.checks.back();
    if (!c.passed || residual.is_zero()) return;
    c.passed = false;
    c.detail = where + ": residual " + describe(residual, names_);
  }
  void expect_zero(const WeightOneElement& residual, const std::string& where) {
    for (std::size_t k = 0; k < residual.t_part.size(); ++k)
      expect_zero(residual.t_part[k], where + " tau_" + std::to_string(k));
    for (std::size_t k = 0; k < residual.w_part.size(); ++k)
      expect_zero(residual.w_part[k], where + " omega_" + std::to_string(k));
  }

 private:
  DualEmbeddingReport& report_;
  const VariableNames& names_;
};

std::string at(std::initializer_list<std::pair<const char*, int>> idx) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : idx) {
    os << (first ? "" : " ") << k << "=" << v;
    first = false;
  }
  return os.str();
}

}  // namespace

DualEmbeddingReport verify_dual_embedding(const GroupCdo& cdo) {
  const MatrixGroup& G = cdo.group();
  const LieAlgebra& g = G.algebra();
  const int d = g.dim();
  const auto& a = cdo.transport();
  const auto& dual = cdo.dual();
  const VariableNames& names = G.names();
  DualEmbeddingReport report;
  report.group = G.name();

  std::vector<Polynomial> coords;
  for (int r = 0; r < G.n(); ++r)
    for (int c = 0; c < G.n(); ++c)
      if (!G.entry(r, c).is_constant()) coords.push_back(G.entry(r, c));

  {
    Recorder rec(report, "left fields respect brackets", names);
    for (const auto& x : coords)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          Polynomial r = G.left(i, G.left(j, x)) - G.left(j, G.left(i, x));
          for (int p = 0; p < d; ++p) r.add_scaled(G.left(p, x), -g.c(i, j, p));
          rec.expect_zero(r, at({{"i", i}, {"j", j}}) + " on " + x.str(names));
        }
  }
  {
    Recorder rec(report, "left and right fields commute", names);
    for (const auto& x : coords)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          rec.expect_zero(G.left(i, G.right(j, x)) - G.right(j, G.left(i, x)),
                          at({{"i", i}, {"j", j}}) + " on " + x.str(names));
  }
  {
    Recorder rec(report, "right fields respect brackets", names);
    for (const auto& x : coords)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          Polynomial r = G.right(i, G.right(j, x)) - G.right(j, G.right(i, x));
          for (int p = 0; p < d; ++p) r.add_scaled(G.right(p, x), -g.c(i, j, p));
          rec.expect_zero(r, at({{"i", i}, {"j", j}}) + " on " + x.str(names));
        }
  }
  {
    Recorder rec(report, "transport matrix expresses right fields", names);
    for (const auto& x : coords)
      for (int i = 0; i < d; ++i) {
        Polynomial r = G.right(i, x);
        for (int j = 0; j < d; ++j) r -= a(i, j) * G.left(j, x);
        rec.expect_zero(G.reduce(r), at({{"i", i}}) + " on " + x.str(names));
      }
  }
  {
    Recorder rec(report, "transport matrix at the unit", names);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        rec.expect_zero(G.at_identity(a(i, j)) - Polynomial(i == j ? G.right_sign() : 0), at({{"i", i}, {"j", j}}));
  }
  {
    Recorder rec(report, "left derivatives of the transport matrix", names);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int s = 0; s < d; ++s) {
          Polynomial r = G.left(i, a(j, s));
          for (int p = 0; p < d; ++p) r.add_scaled(a(j, p), g.c(i, p, s));
          rec.expect_zero(r, at({{"i", i}, {"j", j}, {"s", s}}));
        }
  }
  {
    Recorder rec(report, "right derivatives of the transport matrix", names);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int s = 0; s < d; ++s) {
          Polynomial r;
          for (int p = 0; p < d; ++p)
            if (!a(i, p).is_zero()) r.add_product(a(i, p), G.left(p, a(j, s)));
          for (int q = 0; q < d; ++q) r.add_scaled(a(q, s), -g.c(i, j, q));
          rec.expect_zero(G.reduce(r), at({{"i", i}, {"j", j}, {"s", s}}));
        }
  }
  {
    Recorder rec(report, "right fields preserve the dual frame", names);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        rec.expect_zero(cdo.product0(cdo.right_field(i), WeightOneElement::omega(d, j)), at({{"i", i}, {"j", j}}));
  }
  {
    Recorder rec(report, "left currents at the level", names);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        auto ti = WeightOneElement::tau(d, i), tj = WeightOneElement::tau(d, j);
        rec.expect_zero(cdo.product1(ti, tj) - cdo.level()(i, j), at({{"i", i}, {"j", j}}) + " (1)");
        WeightOneElement br = WeightOneElement::zero(d);
        for (int p = 0; p < d; ++p) br.t_part[p] = Polynomial(g.c(i, j, p));
        rec.expect_zero(cdo.product0(ti, tj) - br, at({{"i", i}, {"j", j}}) + " (0)");
      }
  }
  {
    Recorder rec(report, "pairing of right and left fields", names);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Polynomial r = cdo.product1(cdo.right_field(i), WeightOneElement::tau(d, j));
        for (int p = 0; p < d; ++p)
          if (!dual(p, j).is_zero()) r.add_product(dual(p, j), a(i, p));
        rec.expect_zero(G.reduce(r), at({{"i", i}, {"j", j}}));
      }
  }
  std::vector<WeightOneElement> jr = cdo.dual_embedding();
  {
    Recorder rec(report, "lift is orthogonal to the left currents", names);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        auto tj = WeightOneElement::tau(d, j);
        rec.expect_zero(cdo.product1(jr[i], tj), at({{"i", i}, {"j", j}}));
        rec.expect_zero(cdo.product1(tj, jr[i]), at({{"j", j}, {"i", i}}));
      }
  }
  {
    Recorder rec(report, "left currents act trivially on the lift", names);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) rec.expect_zero(cdo.product0(WeightOneElement::tau(d, i), jr[j]), at({{"i", i}, {"j", j}}));
  }
  std::vector<std::vector<Polynomial>> pairing(d, std::vector<Polynomial>(d));
  {
    Recorder rec(report, "lift pairs at the dual level", names);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        pairing[i][j] = cdo.product1(jr[i], jr[j]);
        rec.expect_zero(pairing[i][j] - dual(i, j), at({{"i", i}, {"j", j}}));
      }
  }
  {
    Recorder rec(report, "pairing of lifts is constant", names);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Polynomial e;
        for (int p = 0; p < d; ++p)
          for (int q = 0; q < d; ++q)
            if (!dual(p, q).is_zero() && !a(i, p).is_zero() && !a(j, q).is_zero())
              e.add_product(dual(p, q), a(i, p) * a(j, q));
        e = G.reduce(e);
        rec.expect_zero(e - pairing[i][j], at({{"i", i}, {"j", j}}) + " expansion");
        for (int s = 0; s < d; ++s) rec.expect_zero(G.left(s, e), at({{"i", i}, {"j", j}, {"s", s}}));
        rec.expect_zero(G.at_identity(e) - dual(i, j), at({{"i", i}, {"j", j}}) + " at the unit");
      }
  }
  {
    Recorder rec(report, "lift respects brackets", names);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        WeightOneElement r = cdo.product0(jr[i], jr[j]);
        for (int k = 0; k < d; ++k)
          if (!g.c(i, j, k).is_zero()) r -= cdo.scale(Polynomial(g.c(i, j, k)), jr[k]);
        rec.expect_zero(cdo.reduce(r), at({{"i", i}, {"j", j}}));
      }
  }
  return report;
}

}  // namespace cdo
