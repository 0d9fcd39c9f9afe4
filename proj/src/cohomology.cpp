#include "cdo/cohomology.hpp"

#include <algorithm>

namespace cdo {

int sort_with_sign(std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  return sign;
}

std::vector<IndexSet> subsets(int n, int k) {
  std::vector<IndexSet> out;
  if (k < 0 || k > n) return out;
  IndexSet cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

namespace {

void accumulate(std::map<IndexSet, Scalar>& m, const IndexSet& key, const Scalar& v) {
  if (v.is_zero()) return;
  auto [it, fresh] = m.try_emplace(key, v);
  if (!fresh) {
    it->second += v;
    if (it->second.is_zero()) m.erase(it);
  }
}

void accumulate(std::map<std::pair<IndexSet, int>, Scalar>& m, const std::pair<IndexSet, int>& key,
                const Scalar& v) {
  if (v.is_zero()) return;
  auto [it, fresh] = m.try_emplace(key, v);
  if (!fresh) {
    it->second += v;
    if (it->second.is_zero()) m.erase(it);
  }
}

IndexSet without(const IndexSet& s, std::size_t a, std::size_t b = static_cast<std::size_t>(-1)) {
  IndexSet out;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (i != a && i != b) out.push_back(s[i]);
  return out;
}

IndexSet prepend(int r, const IndexSet& rest) {
  IndexSet out{r};
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

int sign_of(std::size_t exponent) { return exponent % 2 ? -1 : 1; }

}  // namespace

Scalar Cochain::at(std::vector<int> args) const {
  int s = sort_with_sign(args);
  if (s == 0) return Scalar();
  auto it = values.find(args);
  if (it == values.end()) return Scalar();
  return s > 0 ? it->second : -it->second;
}

void Cochain::add(std::vector<int> args, const Scalar& v) {
  int s = sort_with_sign(args);
  if (s == 0) return;
  accumulate(values, args, s > 0 ? v : -v);
}

bool operator==(const Cochain& a, const Cochain& b) {
  return (a.values.empty() && b.values.empty()) || (a.degree == b.degree && a.values == b.values);
}

Scalar TildeCochain::at(std::vector<int> args, int k) const {
  int s = sort_with_sign(args);
  if (s == 0) return Scalar();
  auto it = values.find({args, k});
  if (it == values.end()) return Scalar();
  return s > 0 ? it->second : -it->second;
}

void TildeCochain::add(std::vector<int> args, int k, const Scalar& v) {
  int s = sort_with_sign(args);
  if (s == 0) return;
  accumulate(values, {args, k}, s > 0 ? v : -v);
}

bool operator==(const TildeCochain& a, const TildeCochain& b) {
  return (a.values.empty() && b.values.empty()) || (a.degree == b.degree && a.values == b.values);
}

TildeCochain operator+(const TildeCochain& a, const TildeCochain& b) {
  TildeCochain out = a;
  if (a.values.empty()) out.degree = b.degree;
  for (const auto& [key, v] : b.values) accumulate(out.values, key, v);
  return out;
}

TildeCochain operator-(const TildeCochain& a, const TildeCochain& b) { return a + Scalar(-1) * b; }

TildeCochain operator*(const Scalar& s, const TildeCochain& a) {
  TildeCochain out;
  out.degree = a.degree;
  for (const auto& [key, v] : a.values) accumulate(out.values, key, s * v);
  return out;
}

Cochain d_trivial(const LieAlgebra& g, const Cochain& f) {
  const int n = g.dim(), i = f.degree + 1;
  Cochain out;
  out.degree = i;
  for (const IndexSet& t : subsets(n, i)) {
    Scalar value;
    for (std::size_t p = 0; p < t.size(); ++p)
      for (std::size_t q = p + 1; q < t.size(); ++q) {
        // 1-based positions p+1, q+1: sign (-1)^{p+q+1}
        const int sign = sign_of(p + q + 3);
        IndexSet rest = without(t, p, q);
        for (int r = 0; r < n; ++r) {
          const Rational& c = g.c(t[p], t[q], r);
          if (c.is_zero()) continue;
          value.add_scaled(f.at(prepend(r, rest)), c * Rational(sign));
        }
      }
    accumulate(out.values, t, value);
  }
  return out;
}

TildeCochain d_tilde(const LieAlgebra& g, const TildeCochain& h) {
  const int n = g.dim(), i = h.degree;
  TildeCochain out;
  out.degree = i + 1;
  if (i == 0) return out;
  for (const IndexSet& t : subsets(n, i))
    for (int k = 0; k < n; ++k) {
      Scalar value;
      for (std::size_t p = 0; p < t.size(); ++p) {
        const int sign = sign_of(p + 1);
        IndexSet rest = without(t, p);
        for (int r = 0; r < n; ++r) {
          const Rational& c = g.c(t[p], k, r);
          if (!c.is_zero()) value.add_scaled(h.at(rest, r), c * Rational(sign));
        }
      }
      for (std::size_t p = 0; p < t.size(); ++p)
        for (std::size_t q = p + 1; q < t.size(); ++q) {
          const int sign = sign_of(p + q + 2);
          IndexSet rest = without(t, p, q);
          for (int r = 0; r < n; ++r) {
            const Rational& c = g.c(t[p], t[q], r);
            if (!c.is_zero()) value.add_scaled(h.at(prepend(r, rest), k), c * Rational(sign));
          }
        }
      accumulate(out.values, {t, k}, value);
    }
  return out;
}

TildeCochain embed_trivial(const Cochain& f) {
  TildeCochain out;
  out.degree = f.degree;
  if (f.degree == 0) {
    for (const auto& [key, v] : f.values) accumulate(out.values, {IndexSet{}, -1}, v);
    return out;
  }
  for (const auto& [key, v] : f.values)
    for (std::size_t pos = 0; pos < key.size(); ++pos) {
      // f(tau_k, rest) with tau_k moved to the front
      IndexSet rest = without(key, pos);
      accumulate(out.values, {rest, key[pos]}, pos % 2 ? -v : v);
    }
  return out;
}

Cochain cocycle_from_form(const LieAlgebra& g, const Matrix<Scalar>& form) {
  const int n = g.dim();
  if (form.rows() != n || form.cols() != n) throw InputError("form has wrong size");
  if (!is_symmetric(form) || !is_invariant(g, form)) throw NotInvariant("form is not symmetric invariant");
  Cochain out;
  out.degree = 3;
  for (const IndexSet& s : subsets(n, 3)) {
    Scalar v;
    for (int p = 0; p < n; ++p)
      if (!g.c(s[0], s[1], p).is_zero()) v.add_scaled(form(p, s[2]), g.c(s[0], s[1], p));
    accumulate(out.values, s, v);
  }
  return out;
}

namespace {

Rational constant_of(const Scalar& s) {
  auto c = s.as_constant();
  if (!c) throw InputError("expected a rational coefficient");
  return *c;
}

// Columns of d on the standard basis of degree i-1, indexed by target position.
std::vector<SparseVector> trivial_columns(const LieAlgebra& g, int i) {
  const int n = g.dim();
  std::vector<SparseVector> cols;
  if (i < 1 || i > n) return cols;
  std::map<IndexSet, int> target;
  for (const auto& s : subsets(n, i)) target.emplace(s, static_cast<int>(target.size()));
  for (const auto& s : subsets(n, i - 1)) {
    Cochain e;
    e.degree = i - 1;
    e.values[s] = Scalar(1);
    SparseVector col;
    for (const auto& [key, v] : d_trivial(g, e).values) col.emplace_back(target.at(key), constant_of(v));
    cols.push_back(std::move(col));
  }
  return cols;
}

std::vector<SparseVector> tilde_columns(const LieAlgebra& g, int i) {
  const int n = g.dim();
  std::vector<SparseVector> cols;
  if (i < 2 || i > n + 1) return cols;
  std::map<std::pair<IndexSet, int>, int> target;
  for (const auto& s : subsets(n, i - 1))
    for (int k = 0; k < n; ++k) target.emplace(std::make_pair(s, k), static_cast<int>(target.size()));
  for (const auto& s : subsets(n, i - 2))
    for (int k = 0; k < n; ++k) {
      TildeCochain e;
      e.degree = i - 1;
      e.values[{s, k}] = Scalar(1);
      SparseVector col;
      for (const auto& [key, v] : d_tilde(g, e).values) col.emplace_back(target.at(key), constant_of(v));
      cols.push_back(std::move(col));
    }
  return cols;
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

}  // namespace

QMatrix trivial_differential_matrix(const LieAlgebra& g, int i) {
  const int n = g.dim();
  QMatrix m = zero_matrix(binomial(n, i), binomial(n, i - 1));
  auto cols = trivial_columns(g, i);
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [r, v] : cols[c]) m(r, static_cast<Eigen::Index>(c)) = v;
  return m;
}

std::vector<int> cohomology_dims(const LieAlgebra& g, ComplexKind kind) {
  const int n = g.dim();
  const int top = kind == ComplexKind::Trivial ? n : n + 1;
  std::vector<long> dims(top + 1);
  std::vector<int> ranks(top + 2, 0);  // ranks[i] = rank of d into degree i
  for (int i = 0; i <= top; ++i) {
    if (kind == ComplexKind::Trivial) dims[i] = binomial(n, i);
    else dims[i] = i == 0 ? 1 : binomial(n, i - 1) * n;
    if (i >= 1)
      ranks[i] = rank_of(kind == ComplexKind::Trivial ? trivial_columns(g, i) : tilde_columns(g, i));
  }
  std::vector<int> out;
  for (int i = 0; i <= top; ++i) out.push_back(static_cast<int>(dims[i] - ranks[i + 1] - ranks[i]));
  return out;
}

ThirdCohomology third_cohomology(const LieAlgebra& g) {
  const int n = g.dim();
  ThirdCohomology out;
  if (n < 3) return out;
  auto basis3 = subsets(n, 3);
  EchelonBasis image;
  for (const auto& col : trivial_columns(g, 3)) image.insert(col);
  QMatrix kernel = nullspace(trivial_differential_matrix(g, 4));
  for (Eigen::Index c = 0; c < kernel.cols(); ++c) {
    SparseVector v;
    for (Eigen::Index r = 0; r < kernel.rows(); ++r)
      if (!kernel(r, c).is_zero()) v.emplace_back(static_cast<int>(r), kernel(r, c));
    if (!image.insert(v)) continue;
    Cochain rep;
    rep.degree = 3;
    for (const auto& [r, x] : v) rep.values[basis3[r]] = Scalar(x);
    out.representatives.push_back(std::move(rep));
  }
  out.dim = static_cast<int>(out.representatives.size());
  return out;
}

bool is_coboundary(const LieAlgebra& g, const Cochain& f) {
  const int n = g.dim(), i = f.degree;
  if (f.values.empty()) return true;
  if (i < 1 || i > n) return false;
  EchelonBasis image;
  for (const auto& col : trivial_columns(g, i)) image.insert(col);
  std::map<IndexSet, int> index;
  for (const auto& s : subsets(n, i)) index.emplace(s, static_cast<int>(index.size()));
  std::map<Exponents, SparseVector> slices;
  for (const auto& [key, v] : f.values)
    for (const auto& [e, c] : v.terms()) slices[e].emplace_back(index.at(key), c);
  for (const auto& [e, v] : slices)
    if (!image.contains(v)) return false;
  return true;
}

}  // namespace cdo
