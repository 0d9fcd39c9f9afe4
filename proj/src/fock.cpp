#include "cdo/fock.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace cdo {

int FreeFieldAlgebra::add_generator(Generator g) {
  if (g.weight != 0 && g.weight != 1) throw InputError("generator weight must be 0 or 1");
  if (size() >= 1023) throw InputError("too many generators");
  gens_.push_back(std::move(g));
  current_of_.emplace_back(-1, -1);
  return size() - 1;
}

int FreeFieldAlgebra::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (gens_[i].name == name) return i;
  throw InputError("unknown generator '" + name + "'");
}

void FreeFieldAlgebra::add_bc_pair(int phi, int phistar) {
  if (!odd(phi) || !odd(phistar)) throw InputError("bc pair needs odd generators");
  pairs_[{phi, phistar}] = 1;
  pairs_[{phistar, phi}] = 1;
}

void FreeFieldAlgebra::add_betagamma_pair(int beta, int gamma) {
  if (odd(beta) || odd(gamma)) throw InputError("betagamma pair needs even generators");
  pairs_[{beta, gamma}] = 1;
  pairs_[{gamma, beta}] = -1;
}

void FreeFieldAlgebra::add_currents(const std::vector<int>& ids, const LieAlgebra& g, const QMatrix& level) {
  if (static_cast<int>(ids.size()) != g.dim()) throw InputError("current sector size mismatch");
  for (int id : ids)
    if (odd(id) || gens_[id].weight != 1) throw InputError("currents must be even of weight one");
  sectors_.push_back({ids, g, level});
  for (std::size_t k = 0; k < ids.size(); ++k)
    current_of_[ids[k]] = {static_cast<int>(sectors_.size()) - 1, static_cast<int>(k)};
}

ModeBracket FreeFieldAlgebra::bracket(const Mode& x, const Mode& y) const {
  ModeBracket out;
  auto it = pairs_.find({x.field, y.field});
  if (it != pairs_.end()) {
    if (x.n + y.n == -1) out.scalar = Rational(it->second);
    return out;
  }
  auto [sx, ix] = current_of_[x.field];
  auto [sy, iy] = current_of_[y.field];
  if (sx < 0 || sx != sy) return out;
  const CurrentSector& sec = sectors_[sx];
  for (int p = 0; p < sec.algebra.dim(); ++p)
    if (!sec.algebra.c(ix, iy, p).is_zero()) out.modes.push_back({{sec.ids[p], x.n + y.n}, sec.algebra.c(ix, iy, p)});
  if (x.n + y.n == 0 && x.n != 0) out.scalar = sec.level(ix, iy) * Rational(x.n);
  return out;
}

State vacuum() { return {{Monomial{}, Rational(1)}}; }

void add_to(State& s, const State& o, const Rational& c) {
  if (c.is_zero()) return;
  for (const auto& [m, v] : o) {
    auto [it, inserted] = s.try_emplace(m, v * c);
    if (!inserted) {
      it->second += v * c;
      if (it->second.is_zero()) s.erase(it);
    }
  }
}

void clean(State& s) {
  for (auto it = s.begin(); it != s.end();)
    it = it->second.is_zero() ? s.erase(it) : std::next(it);
}

int monomial_weight(const FreeFieldAlgebra& alg, const Monomial& m) {
  int w = 0;
  for (auto c : m) {
    Mode x = decode(c);
    w += alg.generator(x.field).weight - x.n - 1;
  }
  return w;
}

int monomial_charge(const FreeFieldAlgebra& alg, const Monomial& m) {
  int q = 0;
  for (auto c : m) q += alg.generator(decode(c).field).charge;
  return q;
}

int monomial_aux(const FreeFieldAlgebra& alg, const Monomial& m) {
  int a = 0;
  for (auto c : m) a += alg.generator(decode(c).field).aux;
  return a;
}

bool monomial_is_odd(const FreeFieldAlgebra& alg, const Monomial& m) {
  bool odd = false;
  for (auto c : m) odd ^= alg.odd(decode(c).field);
  return odd;
}

std::string monomial_str(const FreeFieldAlgebra& alg, const Monomial& m) {
  if (m.empty()) return "vac";
  std::ostringstream os;
  for (std::size_t k = 0; k < m.size(); ++k) {
    Mode x = decode(m[k]);
    os << (k ? " " : "") << alg.generator(x.field).name << "(" << x.n << ")";
  }
  return os.str();
}

std::string state_str(const FreeFieldAlgebra& alg, const State& s) {
  if (s.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : s) {
    os << (first ? "" : " + ") << c.str() << "*" << monomial_str(alg, m);
    first = false;
  }
  return os.str();
}

namespace {

// x . (m[pos] m[pos+1] ...) vac, normal ordered, accumulated with coefficient c.
void act(const FreeFieldAlgebra& alg, const Mode& x, const Monomial& m, std::size_t pos, const Rational& c,
         State& out) {
  const bool creator = x.n <= -1;
  if (pos == m.size()) {
    if (creator) add_to(out, {{Monomial{mode_code(x.field, x.n)}, Rational(1)}}, c);
    return;
  }
  if (creator) {
    if (-x.n >= 64) throw TruncationExceeded("mode index out of range");
    std::uint16_t code = mode_code(x.field, x.n);
    if (code <= m[pos]) {
      if (code == m[pos] && alg.odd(x.field)) return;
      Monomial r;
      r.reserve(m.size() - pos + 1);
      r.push_back(code);
      r.insert(r.end(), m.begin() + static_cast<std::ptrdiff_t>(pos), m.end());
      add_to(out, {{std::move(r), Rational(1)}}, c);
      return;
    }
  }
  Mode first = decode(m[pos]);
  const bool swap_sign = alg.odd(x.field) && alg.odd(first.field);
  // Bracket term.
  ModeBracket br = alg.bracket(x, first);
  if (!br.scalar.is_zero()) {
    Monomial rest(m.begin() + static_cast<std::ptrdiff_t>(pos) + 1, m.end());
    add_to(out, {{std::move(rest), Rational(1)}}, c * br.scalar);
  }
  for (const auto& [mode, k] : br.modes) act(alg, mode, m, pos + 1, c * k, out);
  // Commuted term: first . (x . rest).
  State inner;
  act(alg, x, m, pos + 1, Rational(1), inner);
  for (const auto& [mono, v] : inner) act(alg, first, mono, 0, swap_sign ? -(c * v) : c * v, out);
}

}  // namespace

State apply_mode(const FreeFieldAlgebra& alg, const Mode& x, const State& s) {
  State out;
  const int h = alg.generator(x.field).weight;
  for (const auto& [m, c] : s) {
    if (x.n >= 0 && monomial_weight(alg, m) + h - x.n - 1 < 0) continue;
    act(alg, x, m, 0, c, out);
  }
  return out;
}

FieldExpr FieldExpr::gen(int field, const FreeFieldAlgebra& alg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Gen;
  n->field = field;
  const Generator& g = alg.generator(field);
  n->weight = g.weight;
  n->odd = g.parity == Parity::Odd;
  n->charge = g.charge;
  n->aux = g.aux;
  return FieldExpr(n);
}

FieldExpr FieldExpr::deriv(const FieldExpr& a) {
  auto n = std::make_shared<Node>(*a.node_);
  n->kind = Kind::Deriv;
  n->a = a.node_;
  n->terms.clear();
  n->weight = a.weight() + 1;
  return FieldExpr(n);
}

FieldExpr FieldExpr::nop(const FieldExpr& a, const FieldExpr& b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Nop;
  n->a = a.node_;
  n->b = b.node_;
  n->weight = a.weight() + b.weight();
  n->odd = a.odd() != b.odd();
  n->charge = a.charge() + b.charge();
  n->aux = a.aux() + b.aux();
  return FieldExpr(n);
}

FieldExpr FieldExpr::nop(const std::vector<FieldExpr>& factors) {
  if (factors.empty()) throw InputError("empty normal ordered product");
  FieldExpr out = factors.back();
  for (std::size_t k = factors.size() - 1; k-- > 0;) out = nop(factors[k], out);
  return out;
}

FieldExpr FieldExpr::zero() { return FieldExpr(std::make_shared<Node>()); }

FieldExpr& FieldExpr::add(const FieldExpr& term, const Rational& c) {
  if (c.is_zero() || term.is_zero()) return *this;
  auto n = std::make_shared<Node>();
  if (is_zero()) {
    n->weight = term.weight();
    n->odd = term.odd();
    n->charge = term.charge();
    n->aux = term.aux();
  } else {
    if (term.weight() != weight() || term.odd() != odd() || term.charge() != charge() || term.aux() != aux())
      throw InputError("sum of inhomogeneous field expressions");
    *n = *node_;
  }
  n->kind = Kind::Sum;
  n->terms.emplace_back(term.node_, c);
  node_ = n;
  return *this;
}

FieldExpr FieldExpr::operator*(const Rational& c) const {
  FieldExpr out = zero();
  return out.add(*this, c);
}

State FieldExpr::apply_node(const Node& x, int m, const Monomial& mono, int w, const FreeFieldAlgebra& alg) {
  State out;
  if (w + x.weight - m - 1 < 0) return out;
  switch (x.kind) {
    case Kind::Gen:
      act(alg, {x.field, m}, mono, 0, Rational(1), out);
      return out;
    case Kind::Deriv:
      if (m == 0) return out;
      add_to(out, apply_node(*x.a, m - 1, mono, w, alg), Rational(-m));
      return out;
    case Kind::Sum:
      for (const auto& [t, c] : x.terms) add_to(out, apply_node(*t, m, mono, w, alg), c);
      return out;
    case Kind::Nop: {
      const Node& a = *x.a;
      const Node& b = *x.b;
      for (int j = 0; w + b.weight - (m + j) - 1 >= 0; ++j) {
        State mid = apply_node(b, m + j, mono, w, alg);
        const int wm = w + b.weight - (m + j) - 1;
        for (const auto& [mm, c] : mid) add_to(out, apply_node(a, -1 - j, mm, wm, alg), c);
      }
      const Rational sign((a.odd && b.odd) ? -1 : 1);
      for (int j = 0; w + a.weight - j - 1 >= 0; ++j) {
        State mid = apply_node(a, j, mono, w, alg);
        const int wm = w + a.weight - j - 1;
        for (const auto& [mm, c] : mid) add_to(out, apply_node(b, m - 1 - j, mm, wm, alg), c * sign);
      }
      return out;
    }
  }
  return out;
}

State FieldExpr::apply(int m, const State& s, const FreeFieldAlgebra& alg) const {
  State out;
  for (const auto& [mono, c] : s) add_to(out, apply_node(*node_, m, mono, monomial_weight(alg, mono), alg), c);
  return out;
}

State state_of(const FieldExpr& y, const FreeFieldAlgebra& alg) { return y.apply(-1, vacuum(), alg); }

const std::vector<Monomial> FockSpace::empty_;

FockSpace::FockSpace(const FreeFieldAlgebra& alg, int max_weight, int aux_min, int aux_max)
    : alg_(&alg), max_weight_(max_weight) {
  if (max_weight < 0) throw InputError("max weight must be non-negative");
  struct Creator {
    std::uint16_t code;
    int weight;
    int aux;
    int max_mult;
  };
  std::vector<Creator> creators;
  for (int f = 0; f < alg.size(); ++f) {
    const Generator& g = alg.generator(f);
    for (int k = 1; g.weight + k - 1 <= max_weight; ++k) {
      int wt = g.weight + k - 1;
      int mult = alg.odd(f) ? 1 : (wt > 0 ? max_weight / wt : -1);
      creators.push_back({mode_code(f, -k), wt, g.aux, mult});
    }
  }
  int floor_aux = 0;
  for (const auto& c : creators)
    if (c.max_mult >= 0) floor_aux += std::min(0, c.aux * c.max_mult);
  for (auto& c : creators) {
    if (c.max_mult >= 0) continue;
    if (c.aux <= 0) throw InputError("weight zero boson needs a positive aux grade");
    c.max_mult = std::max(0, (aux_max - floor_aux) / c.aux);
  }
  std::sort(creators.begin(), creators.end(), [](const Creator& a, const Creator& b) { return a.code < b.code; });

  Monomial cur;
  std::function<void(std::size_t, int)> dfs = [&](std::size_t idx, int w) {
    if (idx == creators.size()) {
      int a = monomial_aux(alg, cur);
      if (a < aux_min || a > aux_max) return;
      BlockKey key{w, monomial_charge(alg, cur), a};
      blocks_[key].push_back(cur);
      return;
    }
    const Creator& c = creators[idx];
    dfs(idx + 1, w);
    int k = 0;
    for (; k < c.max_mult && w + (k + 1) * c.weight <= max_weight; ++k) {
      cur.push_back(c.code);
      dfs(idx + 1, w + (k + 1) * c.weight);
    }
    cur.resize(cur.size() - k);
  };
  dfs(0, 0);
  for (auto& [key, list] : blocks_) {
    std::sort(list.begin(), list.end());
    auto& idx = index_[key];
    for (std::size_t i = 0; i < list.size(); ++i) idx.emplace(list[i], static_cast<int>(i));
  }
}

const std::vector<Monomial>& FockSpace::block(const BlockKey& k) const {
  auto it = blocks_.find(k);
  return it == blocks_.end() ? empty_ : it->second;
}

int FockSpace::index_in_block(const BlockKey& k, const Monomial& m) const {
  auto it = index_.find(k);
  if (it == index_.end()) return -1;
  auto jt = it->second.find(m);
  return jt == it->second.end() ? -1 : jt->second;
}

std::vector<int> FockSpace::weight_dims() const {
  std::vector<int> out(max_weight_ + 1, 0);
  for (const auto& [k, list] : blocks_) out[k.weight] += static_cast<int>(list.size());
  return out;
}

void FockSpace::check(const State& s) const {
  for (const auto& [m, c] : s)
    if (monomial_weight(*alg_, m) > max_weight_)
      throw TruncationExceeded("state " + monomial_str(*alg_, m) + " exceeds weight " + std::to_string(max_weight_));
}

std::vector<BlockOperator> zero_mode(const FockSpace& space, const FieldExpr& x) {
  if (x.weight() != 1 && !x.is_zero()) throw InputError("zero mode needs a weight one element");
  const FreeFieldAlgebra& alg = space.algebra();
  std::vector<BlockOperator> out;
  for (const auto& [key, list] : space.blocks()) {
    BlockOperator op;
    op.source = key;
    op.target = {key.weight, key.charge + x.charge(), key.aux + x.aux()};
    op.target_dim = static_cast<int>(space.block(op.target).size());
    for (const auto& m : list) {
      State img = x.is_zero() ? State{} : x.apply(0, {{m, Rational(1)}}, alg);
      SparseVector col;
      for (const auto& [mm, c] : img) {
        int i = space.index_in_block(op.target, mm);
        if (i < 0) throw TruncationExceeded("zero mode leaves the truncation at " + monomial_str(alg, mm));
        col.emplace_back(i, c);
      }
      std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      op.columns.push_back(std::move(col));
    }
    out.push_back(std::move(op));
  }
  return out;
}

OpeResult ope_check(const FreeFieldAlgebra& alg, const FieldExpr& x, const FieldExpr& y,
                    const std::vector<State>& expected) {
  OpeResult r;
  State ys = state_of(y, alg);
  const int top = std::max(x.weight() + y.weight() - 1, static_cast<int>(expected.size()) - 1);
  for (int n = 0; n <= top; ++n) {
    State p = x.apply(n, ys, alg);
    State want = n < static_cast<int>(expected.size()) ? expected[n] : State{};
    clean(want);
    if (r.ok && p != want) {
      r.ok = false;
      r.failed_pole = n;
    }
    r.products.push_back(std::move(p));
  }
  return r;
}

GhostLayout add_ghosts(FreeFieldAlgebra& alg, const LieAlgebra& g, const std::vector<std::vector<Rational>>& cartan,
                       int star_aux) {
  GhostLayout lay;
  lay.dim = g.dim();
  for (int i = 0; i < g.dim(); ++i) {
    Generator phi{"phi[" + g.basis()[i] + "]", Parity::Odd, 1, -1, -star_aux, {}};
    if (!cartan.empty()) phi.cartan_weight = cartan[i];
    int id = alg.add_generator(std::move(phi));
    if (i == 0) lay.phi0 = id;
  }
  for (int i = 0; i < g.dim(); ++i) {
    Generator star{"phi*[" + g.basis()[i] + "]", Parity::Odd, 0, 1, star_aux, {}};
    if (!cartan.empty())
      for (const auto& v : cartan[i]) star.cartan_weight.push_back(-v);
    int id = alg.add_generator(std::move(star));
    if (i == 0) lay.star0 = id;
  }
  for (int i = 0; i < g.dim(); ++i) alg.add_bc_pair(lay.phi(i), lay.star(i));
  return lay;
}

std::vector<long> bc_pair_dims(int w) {
  std::vector<long> poly(w + 1, 0);
  poly[0] = 1;
  auto times_one_plus = [&](int e) {
    for (int k = w; k >= 0; --k)
      if (k - e >= 0) poly[k] += poly[k - e];
  };
  for (int n = 1; n <= w; ++n) times_one_plus(n);
  for (int n = 1; n <= w + 1; ++n) times_one_plus(n - 1);
  return poly;
}

}  // namespace cdo
