#include "cdo/liealg.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace cdo {

namespace {

using json = nlohmann::json;

struct SlBasis {
  std::vector<QMatrix> mats;
  std::vector<std::string> names;
};

QMatrix unit(int n, int a, int b) {
  QMatrix m = zero_matrix(n, n);
  m(a, b) = Rational(1);
  return m;
}

// Positive root vectors E_ab (a<b), then H_k, then negatives E_ba.
SlBasis sl_basis(int n) {
  SlBasis out;
  auto label = [n](char kind, int a, int b) {
    if (n == 2) return std::string(1, kind == 'E' ? (a < b ? 'e' : 'f') : 'h');
    if (kind == 'H') return "H" + std::to_string(a + 1);
    return "E" + std::to_string(a + 1) + std::to_string(b + 1);
  };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      out.mats.push_back(unit(n, a, b));
      out.names.push_back(label('E', a, b));
    }
  for (int k = 0; k + 1 < n; ++k) {
    QMatrix h = unit(n, k, k);
    h(k + 1, k + 1) = Rational(-1);
    out.mats.push_back(h);
    out.names.push_back(label('H', k, k));
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      out.mats.push_back(unit(n, b, a));
      out.names.push_back(label('E', b, a));
    }
  return out;
}

}  // namespace

QVector sl_coordinates(int n, const QMatrix& m) {
  QVector v = QVector::Constant(n * n - 1, Rational(0));
  int idx = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) v(idx++) = m(a, b);
  Rational partial(0);
  for (int k = 0; k + 1 < n; ++k) {
    partial += m(k, k);
    v(idx++) = partial;
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) v(idx++) = m(b, a);
  return v;
}

std::vector<QMatrix> sl_basis_matrices(int n) { return sl_basis(n).mats; }

namespace {

int positive_count(int n) { return n * (n - 1) / 2; }

// Index of E_ab inside the sl_n basis.
int sl_index(int n, int a, int b) {
  int idx = 0;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (x == std::min(a, b) && y == std::max(a, b))
        return a < b ? idx : positive_count(n) + (n - 1) + idx;
      ++idx;
    }
  throw std::out_of_range("sl_index");
}

int parse_int(std::string_view s, std::string_view context) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw UnknownAlgebra("unknown algebra: " + std::string(context));
  return std::stoi(std::string(s));
}

int parse_sl(std::string_view s, std::string_view context) {
  if (s.substr(0, 2) != "sl") throw UnknownAlgebra("unknown algebra: " + std::string(context));
  int n = parse_int(s.substr(2), context);
  if (n < 2) throw UnknownAlgebra("sl_n needs n >= 2: " + std::string(context));
  return n;
}

Rational coefficient_from_json(const json& v) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw InputError("coefficient must be an integer or a rational string");
}

}  // namespace

LieAlgebra LieAlgebra::create(std::string name, std::vector<std::string> basis, StructureTable table) {
  const int n = static_cast<int>(basis.size());
  if (static_cast<int>(table.size()) != n * n * n) throw InputError("structure table has wrong size");
  LieAlgebra g;
  g.name_ = std::move(name);
  g.basis_ = std::move(basis);
  g.dim_ = n;
  g.table_ = std::move(table);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int p = 0; p < n; ++p)
        if (!(g.c(i, j, p) + g.c(j, i, p)).is_zero()) throw AntisymmetryViolation(i, j, p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int q = 0; q < n; ++q) {
          Rational s(0);
          for (int p = 0; p < n; ++p) {
            s += g.c(j, k, p) * g.c(i, p, q);
            s += g.c(k, i, p) * g.c(j, p, q);
            s += g.c(i, j, p) * g.c(k, p, q);
          }
          if (!s.is_zero()) throw JacobiViolation(i, j, k);
        }
  return g;
}

int LieAlgebra::index_of(std::string_view basis_name) const {
  for (int i = 0; i < dim_; ++i)
    if (basis_[i] == basis_name) return i;
  throw InputError("no basis element named " + std::string(basis_name) + " in " + name_);
}

QVector LieAlgebra::bracket(int i, int j) const {
  QVector v(dim_);
  for (int p = 0; p < dim_; ++p) v(p) = c(i, j, p);
  return v;
}

QMatrix LieAlgebra::ad(int i) const {
  QMatrix m(dim_, dim_);
  for (int q = 0; q < dim_; ++q)
    for (int p = 0; p < dim_; ++p) m(p, q) = c(i, q, p);
  return m;
}

SubalgebraSpec make_subalgebra(const LieAlgebra& parent, const QMatrix& inclusion, std::string name,
                               std::vector<std::string> basis) {
  const int n = parent.dim(), m = static_cast<int>(inclusion.cols());
  if (inclusion.rows() != n || static_cast<int>(basis.size()) != m)
    throw InputError("inclusion has wrong shape");
  if (rank(inclusion) != m) throw NotClosed("inclusion is not injective");
  StructureTable table(static_cast<std::size_t>(m) * m * m, Rational(0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      QVector x = inclusion.col(i), y = inclusion.col(j);
      auto coords = solve(inclusion, parent.bracket(x, y));
      if (!coords) throw NotClosed(name + " is not closed under the bracket");
      for (int p = 0; p < m; ++p) table[(i * m + j) * m + p] = (*coords)(p);
    }
  return {parent, LieAlgebra::create(std::move(name), std::move(basis), std::move(table)), inclusion};
}

LieAlgebra sl(int n) {
  SlBasis b = sl_basis(n);
  const int d = n * n - 1;
  StructureTable table(static_cast<std::size_t>(d) * d * d, Rational(0));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      QMatrix comm = multiply(b.mats[i], b.mats[j]) - multiply(b.mats[j], b.mats[i]);
      QVector v = sl_coordinates(n, comm);
      for (int p = 0; p < d; ++p) table[(i * d + j) * d + p] = v(p);
    }
  return LieAlgebra::create("sl" + std::to_string(n), std::move(b.names), std::move(table));
}

namespace {

SubalgebraSpec sl_subalgebra(int n, const std::vector<int>& indices, std::string name) {
  LieAlgebra g = sl(n);
  QMatrix inc = zero_matrix(g.dim(), static_cast<Eigen::Index>(indices.size()));
  std::vector<std::string> names;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    inc(indices[k], k) = Rational(1);
    names.push_back(g.basis()[indices[k]]);
  }
  return make_subalgebra(g, inc, std::move(name), std::move(names));
}

}  // namespace

SubalgebraSpec borel_of_sl(int n) {
  std::vector<int> idx;
  for (int i = 0; i < positive_count(n) + n - 1; ++i) idx.push_back(i);
  return sl_subalgebra(n, idx, "borel(sl" + std::to_string(n) + ")");
}

SubalgebraSpec nilradical_of_sl(int n) {
  std::vector<int> idx;
  for (int i = 0; i < positive_count(n); ++i) idx.push_back(i);
  return sl_subalgebra(n, idx, "nilradical(sl" + std::to_string(n) + ")");
}

SubalgebraSpec parabolic_of_sl(int n, const std::vector<int>& levi) {
  std::set<int> s(levi.begin(), levi.end());
  for (int a : s)
    if (a < 1 || a >= n) throw InputError("simple root index out of range");
  if (s.empty()) {
    SubalgebraSpec b = borel_of_sl(n);
    b.algebra = LieAlgebra::create("parabolic(sl" + std::to_string(n) + ")", b.algebra.basis(), b.algebra.table());
    return b;
  }
  std::vector<int> idx;
  for (int i = 0; i < positive_count(n) + n - 1; ++i) idx.push_back(i);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      bool in_levi = true;
      for (int k = a + 1; k <= b; ++k) in_levi = in_levi && s.count(k);
      if (in_levi) idx.push_back(sl_index(n, b, a));
    }
  std::string label;
  for (int a : s) label += (label.empty() ? "" : "+") + std::to_string(a);
  return sl_subalgebra(n, idx, "parabolic(sl" + std::to_string(n) + "," + label + ")");
}

LieAlgebra heisenberg(int dim) {
  if (dim < 3 || dim % 2 == 0) throw UnknownAlgebra("heisenberg algebra needs odd dimension >= 3");
  const int k = (dim - 1) / 2;
  std::vector<std::string> names;
  if (k == 1) names = {"x", "y", "z"};
  else {
    for (int i = 1; i <= k; ++i) names.push_back("x" + std::to_string(i));
    for (int i = 1; i <= k; ++i) names.push_back("y" + std::to_string(i));
    names.push_back("z");
  }
  StructureTable table(static_cast<std::size_t>(dim) * dim * dim, Rational(0));
  for (int i = 0; i < k; ++i) {
    table[(i * dim + (k + i)) * dim + (dim - 1)] = Rational(1);
    table[((k + i) * dim + i) * dim + (dim - 1)] = Rational(-1);
  }
  return LieAlgebra::create("heisenberg" + std::to_string(dim), std::move(names), std::move(table));
}

LieAlgebra abelian(int dim) {
  if (dim < 0) throw UnknownAlgebra("negative dimension");
  std::vector<std::string> names;
  for (int i = 1; i <= dim; ++i) names.push_back(dim == 1 ? "a" : "a" + std::to_string(i));
  return LieAlgebra::create("abelian" + std::to_string(dim), std::move(names),
                            StructureTable(static_cast<std::size_t>(dim) * dim * dim, Rational(0)));
}

NamedAlgebra builtin(std::string_view name) {
  auto inner = [&](std::string_view prefix) -> std::optional<std::string_view> {
    if (name.size() > prefix.size() + 2 && name.substr(0, prefix.size()) == prefix && name[prefix.size()] == '(' &&
        name.back() == ')')
      return name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
    return std::nullopt;
  };
  if (name == "0" || name == "zero") return {LieAlgebra(), std::nullopt};
  if (auto s = inner("borel")) {
    auto sub = borel_of_sl(parse_sl(*s, name));
    return {sub.algebra, sub};
  }
  if (auto s = inner("nilradical")) {
    auto sub = nilradical_of_sl(parse_sl(*s, name));
    return {sub.algebra, sub};
  }
  if (auto s = inner("parabolic")) {
    auto comma = s->find(',');
    int n = parse_sl(s->substr(0, comma), name);
    std::vector<int> levi;
    if (comma != std::string_view::npos) {
      std::string_view rest = s->substr(comma + 1);
      while (!rest.empty()) {
        auto plus = rest.find('+');
        levi.push_back(parse_int(rest.substr(0, plus), name));
        if (plus == std::string_view::npos) break;
        rest = rest.substr(plus + 1);
      }
    }
    auto sub = parabolic_of_sl(n, levi);
    return {sub.algebra, sub};
  }
  if (name.substr(0, 2) == "sl") return {sl(parse_sl(name, name)), std::nullopt};
  if (name.substr(0, 10) == "heisenberg") return {heisenberg(parse_int(name.substr(10), name)), std::nullopt};
  if (name.substr(0, 7) == "abelian") return {abelian(parse_int(name.substr(7), name)), std::nullopt};
  throw UnknownAlgebra("unknown algebra: " + std::string(name));
}

LieAlgebra algebra_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  try {
    const int n = doc.at("dim").get<int>();
    if (n < 0) throw InputError("negative dimension");
    std::vector<std::string> basis;
    if (doc.contains("basis")) basis = doc.at("basis").get<std::vector<std::string>>();
    else
      for (int i = 0; i < n; ++i) basis.push_back("b" + std::to_string(i));
    if (static_cast<int>(basis.size()) != n) throw InputError("basis length differs from dim");
    StructureTable table(static_cast<std::size_t>(n) * n * n, Rational(0));
    std::set<std::pair<int, int>> given;
    if (doc.contains("brackets"))
      for (const auto& entry : doc.at("brackets")) {
        int i = entry.at(0).get<int>(), j = entry.at(1).get<int>();
        const auto& coeffs = entry.at(2);
        if (i < 0 || j < 0 || i >= n || j >= n) throw InputError("bracket index out of range");
        if (static_cast<int>(coeffs.size()) != n) throw InputError("bracket coefficient vector has wrong length");
        if (!given.insert({i, j}).second) throw InputError("bracket listed twice");
        for (int p = 0; p < n; ++p) table[(i * n + j) * n + p] = coefficient_from_json(coeffs.at(p));
      }
    for (const auto& [i, j] : given)
      if (i != j && !given.count({j, i}))
        for (int p = 0; p < n; ++p) table[(j * n + i) * n + p] = -table[(i * n + j) * n + p];
    return LieAlgebra::create(doc.value("name", std::string("custom")), std::move(basis), std::move(table));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed algebra description: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

std::string algebra_to_json(const LieAlgebra& g) {
  json doc;
  doc["name"] = g.name();
  doc["dim"] = g.dim();
  doc["basis"] = g.basis();
  json brackets = json::array();
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j) {
      QVector v = g.bracket(i, j);
      if (is_zero(v)) continue;
      json coeffs = json::array();
      for (int p = 0; p < g.dim(); ++p) coeffs.push_back(v(p).str());
      brackets.push_back(json::array({i, j, coeffs}));
    }
  doc["brackets"] = brackets;
  return doc.dump(2);
}

QMatrix killing_form(const LieAlgebra& g) {
  const int n = g.dim();
  QMatrix k = zero_matrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rational s(0);
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          if (!g.c(i, p, q).is_zero() && !g.c(j, q, p).is_zero()) s += g.c(i, p, q) * g.c(j, q, p);
      k(i, j) = s;
      k(j, i) = s;
    }
  return k;
}

std::vector<QMatrix> invariant_form_space(const LieAlgebra& g) {
  const int n = g.dim();
  std::map<std::pair<int, int>, int> var;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) var.emplace(std::make_pair(a, b), static_cast<int>(var.size()));
  auto v = [&](int a, int b) { return var.at({std::min(a, b), std::max(a, b)}); };
  const int unknowns = static_cast<int>(var.size());
  std::vector<QVector> rows;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = j; k < n; ++k) {
        QVector row = QVector::Constant(unknowns, Rational(0));
        for (int p = 0; p < n; ++p) {
          row(v(p, k)) += g.c(i, j, p);
          row(v(j, p)) += g.c(i, k, p);
        }
        if (!is_zero(row)) rows.push_back(row);
      }
  QMatrix sys = zero_matrix(static_cast<Eigen::Index>(rows.size()), unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r) sys.row(r) = rows[r].transpose();
  QMatrix kernel = nullspace(sys);
  std::vector<QMatrix> out;
  for (Eigen::Index c = 0; c < kernel.cols(); ++c) {
    QMatrix f = zero_matrix(n, n);
    for (const auto& [ab, idx] : var) {
      f(ab.first, ab.second) = kernel(idx, c);
      f(ab.second, ab.first) = kernel(idx, c);
    }
    out.push_back(f);
  }
  return out;
}

QMatrix critical_level(const LieAlgebra& g) { return killing_form(g) * Rational(-1, 2); }

bool is_nilpotent(const LieAlgebra& g) {
  const int n = g.dim();
  QMatrix span = identity_matrix(n);
  int current = n;
  while (current > 0) {
    std::vector<QVector> next;
    for (int i = 0; i < n; ++i)
      for (Eigen::Index c = 0; c < span.cols(); ++c) {
        QVector e = QVector::Constant(n, Rational(0));
        e(i) = Rational(1);
        QVector col = span.col(c);
        QVector b = g.bracket(e, col);
        if (!is_zero(b)) next.push_back(b);
      }
    QMatrix m = zero_matrix(n, static_cast<Eigen::Index>(next.size()));
    for (std::size_t k = 0; k < next.size(); ++k) m.col(k) = next[k];
    RowEchelon e = rref(QMatrix(m.transpose()));
    int r = static_cast<int>(e.pivots.size());
    if (r == current) return false;
    span = e.reduced.topRows(r).transpose();
    current = r;
  }
  return true;
}

bool is_semisimple(const LieAlgebra& g) { return g.dim() > 0 && rank(killing_form(g)) == g.dim(); }

}  // namespace cdo
