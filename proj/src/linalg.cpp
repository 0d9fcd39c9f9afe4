#include "cdo/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace cdo {

QMatrix zero_matrix(Eigen::Index rows, Eigen::Index cols) {
  return QMatrix::Constant(rows, cols, Rational(0));
}

QMatrix identity_matrix(Eigen::Index n) {
  QMatrix m = zero_matrix(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

RowEchelon rref(QMatrix m) {
  RowEchelon out;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    Rational inv = Rational(1) / m(r, c);
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Rational f = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(static_cast<int>(c));
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

int rank(const QMatrix& m) { return static_cast<int>(rref(m).pivots.size()); }

QMatrix nullspace(const QMatrix& m) {
  RowEchelon e = rref(m);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<Eigen::Index> free;
  for (Eigen::Index c = 0; c < cols; ++c)
    if (!is_pivot[c]) free.push_back(c);
  QMatrix basis = zero_matrix(cols, static_cast<Eigen::Index>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = Rational(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) basis(e.pivots[r], k) = -e.reduced(r, free[k]);
  }
  return basis;
}

std::optional<QVector> solve(const QMatrix& a, const QVector& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: dimension mismatch");
  QMatrix aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  RowEchelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  QVector x = QVector::Constant(a.cols(), Rational(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x(e.pivots[r]) = e.reduced(r, a.cols());
  return x;
}

std::optional<Vector<Polynomial>> solve(const QMatrix& a, const Vector<Polynomial>& b) {
  std::map<Exponents, QVector> slices;
  for (Eigen::Index i = 0; i < b.rows(); ++i)
    for (const auto& [e, c] : b(i).terms()) {
      auto [it, fresh] = slices.try_emplace(e, QVector());
      if (fresh) it->second = QVector::Constant(b.rows(), Rational(0));
      it->second(i) = c;
    }
  Vector<Polynomial> x = Vector<Polynomial>::Constant(a.cols(), Polynomial());
  if (slices.empty() && a.rows() != b.rows()) throw std::invalid_argument("solve: dimension mismatch");
  for (const auto& [e, rhs] : slices) {
    auto part = solve(a, rhs);
    if (!part) return std::nullopt;
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(*part)(j).is_zero()) x(j) += Polynomial::term(e, (*part)(j));
  }
  return x;
}

namespace {

using IntRow = std::vector<std::pair<int, mpz_class>>;

IntRow primitive(const SparseVector& v) {
  mpz_class l = 1;
  for (const auto& [i, c] : v)
    if (!c.is_zero()) l = lcm(l, c.denominator());
  IntRow row;
  for (const auto& [i, c] : v) {
    if (c.is_zero()) continue;
    mpz_class n = c.numerator() * (l / c.denominator());
    row.emplace_back(i, n);
  }
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  IntRow merged;
  for (auto& [i, n] : row) {
    if (!merged.empty() && merged.back().first == i) merged.back().second += n;
    else merged.emplace_back(i, n);
  }
  std::erase_if(merged, [](const auto& e) { return e.second == 0; });
  return merged;
}

void make_primitive(IntRow& row) {
  if (row.empty()) return;
  mpz_class g = 0;
  for (const auto& [i, n] : row) {
    g = gcd(g, n);
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [i, n] : row) n /= g;
}

// a*x - b*y on sparse rows
IntRow combine(const mpz_class& a, const IntRow& x, const mpz_class& b, const IntRow& y) {
  IntRow out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, a * x[i].second);
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, -b * y[j].second);
      ++j;
    } else {
      mpz_class v = a * x[i].second - b * y[j].second;
      if (v != 0) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

EchelonBasis::IntRow EchelonBasis::reduce(IntRow v) const {
  make_primitive(v);
  while (!v.empty()) {
    auto it = lead_.find(v.front().first);
    if (it == lead_.end()) break;
    const IntRow& p = rows_[it->second];
    mpz_class g = gcd(p.front().second, v.front().second);
    mpz_class a = p.front().second / g, b = v.front().second / g;
    v = combine(a, v, b, p);
    make_primitive(v);
  }
  return v;
}

bool EchelonBasis::insert(const SparseVector& v) {
  IntRow r = reduce(primitive(v));
  if (r.empty()) return false;
  lead_[r.front().first] = rows_.size();
  rows_.push_back(std::move(r));
  return true;
}

bool EchelonBasis::contains(const SparseVector& v) const { return reduce(primitive(v)).empty(); }

int rank_of(const std::vector<SparseVector>& vectors) {
  EchelonBasis b;
  for (const auto& v : vectors) b.insert(v);
  return b.rank();
}

}  // namespace cdo
