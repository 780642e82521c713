#include "loophw/module.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <string>

namespace loophw {

ModuleRep::ModuleRep(std::size_t dim, std::vector<int> weights, std::vector<Component> components)
    : dim_(dim), weights_(std::move(weights)), comps_(std::move(components)) {
  if (weights_.size() != dim_) throw std::invalid_argument("weights must have length dim");
  for (const auto& c : comps_) {
    if (c.a.is_zero()) throw std::invalid_argument("component parameter must be nonzero");
    if (c.e.size() != c.f.size() || c.e.size() != c.h.size())
      throw std::invalid_argument("component jets must have equal depth");
    for (const auto* js : {&c.e, &c.f, &c.h})
      for (const auto& x : *js)
        if (x.rows() != dim_ || x.cols() != dim_) throw std::invalid_argument("component matrix shape");
  }
}

int ModuleRep::total_depth() const {
  int d = 0;
  for (const auto& c : comps_) d += c.depth();
  return d;
}

Scalar ModuleRep::jet_coeff(const LoopCombo& c, const Component& comp, int i) const {
  Scalar acc;
  for (const auto& [k, coeff] : c.terms()) acc += coeff * binomial_extended(k, i) * comp.a.pow(k - i);
  return acc;
}

SparseMatrix ModuleRep::op(const LoopCombo& c) const {
  SparseMatrix out(dim_, dim_);
  for (const auto& comp : comps_) {
    const auto& js = comp.jets(c.kind());
    for (int i = 0; i < comp.depth(); ++i) {
      Scalar g = jet_coeff(c, comp, i);
      if (!g.is_zero()) out += js[i] * g;
    }
  }
  return out;
}

Vec ModuleRep::act(const LoopCombo& c, const Vec& v) const {
  Vec out(dim_);
  for (const auto& comp : comps_) {
    const auto& js = comp.jets(c.kind());
    for (int i = 0; i < comp.depth(); ++i) js[i].apply_add(v, jet_coeff(c, comp, i), out);
  }
  return out;
}

Vec ModuleRep::act_divided(const LoopCombo& c, int n, Vec v) const {
  if (n < 0) return Vec(dim_);
  for (int i = 1; i <= n; ++i) v = scaled(act(c, v), Scalar(1, i));
  return v;
}

std::size_t default_cap() {
  if (const char* env = std::getenv("LOOPHW_CAP")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 65536;
}

ModuleRep eval_module(const Scalar& a, int m) {
  if (a.is_zero()) throw std::invalid_argument("evaluation parameter must be nonzero");
  if (m < 0) throw std::invalid_argument("eval_module: m must be nonnegative");
  const std::size_t n = static_cast<std::size_t>(m) + 1;
  SparseMatrix e(n, n), f(n, n), h(n, n);
  std::vector<int> w(n);
  for (int i = 0; i <= m; ++i) {
    w[i] = m - 2 * i;
    h.add(i, i, Scalar(m - 2 * i));
    if (i > 0) e.add(i - 1, i, Scalar(i));
    if (i < m) f.add(i + 1, i, Scalar(m - i));
  }
  return ModuleRep(n, std::move(w), {Component{a, {e}, {f}, {h}}});
}

namespace {

// Graded local Weyl module of sl2[t] at t = 0, built once per m: the
// associated graded of U(sl2[t])·(v⊗…⊗v) inside the fusion of m
// fundamentals at distinct points, filtered by t-degree.
struct Graded {
  std::size_t n = 0;
  std::vector<int> weights;
  std::vector<SparseMatrix> e, f, h;
};

Graded build_graded(int m) {
  const std::size_t N = std::size_t{1} << m;
  // Ambient (C^2)^{⊗m}; bit i of an index set means factor i is lowered.
  auto ambient_weight = [&](std::size_t idx) { return m - 2 * static_cast<int>(__builtin_popcountll(idx)); };
  auto ambient = [&](Kind kind, int j) {
    SparseMatrix x(N, N);
    for (std::size_t idx = 0; idx < N; ++idx)
      for (int i = 0; i < m; ++i) {
        Scalar z = Scalar(i).pow(j);  // nodes z_i = i, 0^0 = 1
        if (z.is_zero()) continue;
        bool low = (idx >> i) & 1;
        if (kind == Kind::cartan) x.add(idx, idx, low ? -z : z);
        else if (kind == Kind::lower && !low) x.add(idx | (std::size_t{1} << i), idx, z);
        else if (kind == Kind::raise && low) x.add(idx & ~(std::size_t{1} << i), idx, z);
      }
    return x;
  };

  struct Basis {
    Vec v;
    int degree;
    int weight;
  };
  std::vector<Basis> B;
  Subspace span(N);
  std::vector<SparseMatrix> F;
  auto lower = [&](int j) -> const SparseMatrix& {
    while (static_cast<int>(F.size()) <= j) F.push_back(ambient(Kind::lower, static_cast<int>(F.size())));
    return F[j];
  };

  auto add_level = [&](int d, std::vector<Basis> cand) {
    std::deque<Basis> queue;
    for (auto& c : cand)
      if (span.insert(c.v)) {
        B.push_back(c);
        queue.push_back(c);
      }
    while (!queue.empty()) {
      Basis b = queue.front();
      queue.pop_front();
      Basis next{lower(0).apply(b.v), d, b.weight - 2};
      if (span.insert(next.v)) {
        B.push_back(next);
        queue.push_back(next);
      }
    }
  };

  add_level(0, {Basis{unit_vec(N, 0), 0, m}});
  int D = 0;
  for (int d = 1; span.dim() < N; ++d) {
    std::vector<Basis> cand;
    for (int j = 1; j <= d; ++j)
      for (std::size_t i = 0; i < B.size(); ++i)
        if (B[i].degree <= d - j) cand.push_back({lower(j).apply(B[i].v), d, B[i].weight - 2});
    add_level(d, std::move(cand));
    D = d;
    if (d > m * m) throw std::logic_error("fusion filtration did not terminate");
  }

  // Per weight: inverse of the block whose columns are the adapted basis vectors.
  std::map<int, std::vector<std::size_t>> amb_idx, basis_idx;
  for (std::size_t idx = 0; idx < N; ++idx) amb_idx[ambient_weight(idx)].push_back(idx);
  for (std::size_t c = 0; c < B.size(); ++c) basis_idx[B[c].weight].push_back(c);
  std::map<int, std::vector<Vec>> inverse;  // inverse[w][row = basis pos][col = ambient pos]
  for (const auto& [w, rows] : amb_idx) {
    const auto& cols = basis_idx[w];
    const std::size_t k = rows.size();
    if (cols.size() != k) throw std::logic_error("fusion basis not weight-balanced");
    std::vector<Vec> aug(k, Vec(2 * k));
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) aug[r][c] = B[cols[c]].v[rows[r]];
      aug[r][k + r] = 1;
    }
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t piv = c;
      while (aug[piv][c].is_zero()) ++piv;
      std::swap(aug[piv], aug[c]);
      Scalar inv = aug[c][c].inverse();
      for (auto& x : aug[c]) x *= inv;
      for (std::size_t r = 0; r < k; ++r)
        if (r != c && !aug[r][c].is_zero()) {
          Scalar f = aug[r][c];
          for (std::size_t t = 0; t < 2 * k; ++t) aug[r][t] -= f * aug[c][t];
        }
    }
    auto& inv = inverse[w];
    for (std::size_t r = 0; r < k; ++r) inv.emplace_back(aug[r].begin() + k, aug[r].end());
  }

  Graded g;
  g.n = N;
  for (const auto& b : B) g.weights.push_back(b.weight);
  for (Kind kind : {Kind::raise, Kind::lower, Kind::cartan}) {
    const int shift = kind == Kind::raise ? 2 : (kind == Kind::lower ? -2 : 0);
    auto& out = kind == Kind::raise ? g.e : (kind == Kind::lower ? g.f : g.h);
    for (int j = 0; j <= D; ++j) {
      SparseMatrix amb = ambient(kind, j);
      SparseMatrix gr(N, N);
      for (std::size_t c = 0; c < B.size(); ++c) {
        Vec y = amb.apply(B[c].v);
        const int w = B[c].weight + shift;
        if (!amb_idx.count(w)) continue;
        const auto& rows = amb_idx[w];
        const auto& cols = basis_idx[w];
        const auto& inv = inverse[w];
        for (std::size_t r = 0; r < cols.size(); ++r) {
          Scalar coord;
          for (std::size_t t = 0; t < rows.size(); ++t)
            if (!y[rows[t]].is_zero()) coord += inv[r][t] * y[rows[t]];
          if (coord.is_zero()) continue;
          const int deg = B[cols[r]].degree;
          if (deg > B[c].degree + j) throw std::logic_error("fusion filtration not respected");
          if (deg == B[c].degree + j) gr.add(cols[r], c, coord);
        }
      }
      out.push_back(std::move(gr));
    }
  }
  while (g.e.size() > 1 && g.e.back().is_zero() && g.f.back().is_zero() && g.h.back().is_zero()) {
    g.e.pop_back();
    g.f.pop_back();
    g.h.pop_back();
  }
  return g;
}

const Graded& graded_weyl(int m) {
  static std::mutex mu;
  static std::map<int, Graded> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, build_graded(m)).first;
  return it->second;
}

void add_component(std::vector<Component>& comps, Component c) {
  for (auto& x : comps) {
    if (x.a != c.a) continue;
    const std::size_t depth = std::max(x.e.size(), c.e.size());
    const std::size_t n = c.e.front().rows();
    for (const auto& pair : {std::pair{&x.e, &c.e}, std::pair{&x.f, &c.f}, std::pair{&x.h, &c.h}}) {
      pair.first->resize(depth, SparseMatrix(n, n));
      for (std::size_t i = 0; i < pair.second->size(); ++i) (*pair.first)[i] += (*pair.second)[i];
    }
    return;
  }
  comps.push_back(std::move(c));
}

ModuleRep tensor2(const ModuleRep& A, const ModuleRep& B) {
  const auto IA = SparseMatrix::identity(A.dim());
  const auto IB = SparseMatrix::identity(B.dim());
  std::vector<Component> comps;
  auto lift = [](const std::vector<SparseMatrix>& js, auto&& f) {
    std::vector<SparseMatrix> out;
    for (const auto& x : js) out.push_back(f(x));
    return out;
  };
  for (const auto& c : A.components()) {
    auto f = [&](const SparseMatrix& x) { return kron(x, IB); };
    add_component(comps, Component{c.a, lift(c.e, f), lift(c.f, f), lift(c.h, f)});
  }
  for (const auto& c : B.components()) {
    auto f = [&](const SparseMatrix& x) { return kron(IA, x); };
    add_component(comps, Component{c.a, lift(c.e, f), lift(c.f, f), lift(c.h, f)});
  }
  std::vector<int> w;
  w.reserve(A.dim() * B.dim());
  for (int wa : A.weights())
    for (int wb : B.weights()) w.push_back(wa + wb);
  return ModuleRep(A.dim() * B.dim(), std::move(w), std::move(comps));
}

}  // namespace

ModuleRep local_weyl_module(const Scalar& a, int m, std::size_t cap) {
  if (a.is_zero()) throw std::invalid_argument("Weyl parameter must be nonzero");
  if (m < 0) throw std::invalid_argument("local_weyl_module: m must be nonnegative");
  if (m >= 63 || (std::size_t{1} << m) > cap)
    throw CapError("local Weyl module of dimension 2^" + std::to_string(m) + " exceeds cap " + std::to_string(cap));
  if (m <= 1) return eval_module(a, m);
  const Graded& g = graded_weyl(m);
  return ModuleRep(g.n, g.weights, {Component{a, g.e, g.f, g.h}});
}

ModuleRep tensor(const std::vector<ModuleRep>& ms, std::size_t cap) {
  if (ms.empty()) throw std::invalid_argument("tensor of an empty list");
  std::size_t total = 1;
  for (const auto& m : ms) {
    if (m.dim() != 0 && total > cap / m.dim())
      throw CapError("tensor product dimension exceeds cap " + std::to_string(cap));
    total *= m.dim();
  }
  if (total > cap) throw CapError("tensor product dimension exceeds cap " + std::to_string(cap));
  ModuleRep out = ms.front();
  for (std::size_t i = 1; i < ms.size(); ++i) out = tensor2(out, ms[i]);
  return out;
}

ModuleRep weyl_module(const HWParams& p, std::size_t cap) {
  if (p.s() == 0) return ModuleRep(1, {0}, {});
  std::vector<ModuleRep> fs;
  for (const auto& e : p.entries()) fs.push_back(local_weyl_module(e.a, e.m, cap));
  return tensor(fs, cap);
}

ModuleRep packed_module(const HWParams& p, std::size_t cap) {
  if (p.s() == 0) return ModuleRep(1, {0}, {});
  std::vector<ModuleRep> fs;
  for (const auto& e : p.entries()) fs.push_back(eval_module(e.a, e.m));
  return tensor(fs, cap);
}

std::vector<Vec> weight_components(const ModuleRep& m, const Vec& v) {
  std::map<int, Vec, std::greater<int>> parts;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    auto [it, ins] = parts.try_emplace(m.weights()[i], Vec(v.size()));
    it->second[i] = v[i];
  }
  std::vector<Vec> out;
  for (auto& [w, x] : parts) out.push_back(std::move(x));
  return out;
}

Subspace extend_closure(const ModuleRep& m, Subspace base, const std::vector<Vec>& gens) {
  // E_0, F_0 and F_1 at each point generate sl2 ⊗ C[t]/(t-a)^N as a Lie algebra.
  std::vector<const SparseMatrix*> ops;
  for (const auto& c : m.components()) {
    ops.push_back(&c.e[0]);
    ops.push_back(&c.f[0]);
    if (c.depth() > 1) ops.push_back(&c.f[1]);
  }
  std::deque<Vec> queue;
  for (const auto& g : gens)
    for (auto& part : weight_components(m, g))
      if (base.insert(part)) queue.push_back(std::move(part));
  while (!queue.empty()) {
    Vec v = std::move(queue.front());
    queue.pop_front();
    for (const auto* x : ops) {
      Vec y = x->apply(v);
      if (is_zero(y)) continue;
      Vec res = base.reduce(y);
      if (is_zero(res)) continue;
      base.insert(res);
      queue.push_back(std::move(res));
    }
  }
  return base;
}

Subspace submodule_closure(const ModuleRep& m, const std::vector<Vec>& gens) {
  return extend_closure(m, Subspace(m.dim()), gens);
}

bool is_invariant(const ModuleRep& m, const Subspace& v) {
  for (const auto& c : m.components())
    for (const auto* js : {&c.e, &c.f, &c.h})
      for (const auto& x : *js)
        for (const auto& b : v.basis())
          if (!v.contains(x.apply(b))) return false;
  return true;
}

namespace {

SparseMatrix transpose(const SparseMatrix& x) {
  SparseMatrix t(x.cols(), x.rows());
  std::vector<std::vector<SparseMatrix::Entry>> rows(x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (const auto& [j, v] : x.row(i)) rows[j].emplace_back(i, v);
  for (std::size_t j = 0; j < x.cols(); ++j) t.set_row(j, std::move(rows[j]));
  return t;
}

template <typename F>
ModuleRep map_components(const ModuleRep& m, std::size_t n, std::vector<int> weights, F&& f) {
  std::vector<Component> comps;
  for (const auto& c : m.components()) {
    Component out{c.a, {}, {}, {}};
    for (const auto& x : c.e) out.e.push_back(f(x));
    for (const auto& x : c.f) out.f.push_back(f(x));
    for (const auto& x : c.h) out.h.push_back(f(x));
    comps.push_back(std::move(out));
  }
  return ModuleRep(n, std::move(weights), std::move(comps));
}

}  // namespace

ModuleRep quotient(const ModuleRep& m, const Subspace& v) {
  if (v.ambient_dim() != m.dim()) throw std::invalid_argument("quotient: dimension mismatch");
  if (!is_invariant(m, v)) throw std::invalid_argument("quotient: subspace is not a submodule");
  const auto keep = v.free_columns();
  std::vector<long> pos(m.dim(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<long>(i);
  std::vector<int> w;
  for (auto i : keep) w.push_back(m.weights()[i]);
  return map_components(m, keep.size(), std::move(w), [&](const SparseMatrix& x) {
    SparseMatrix xt = transpose(x);
    SparseMatrix out(keep.size(), keep.size());
    for (std::size_t c = 0; c < keep.size(); ++c) {
      Vec col(m.dim());
      for (const auto& [i, val] : xt.row(keep[c])) col[i] = val;
      Vec res = v.reduce(std::move(col));
      for (std::size_t r = 0; r < keep.size(); ++r)
        if (!res[keep[r]].is_zero()) out.add(r, c, res[keep[r]]);
    }
    return out;
  });
}

Vec quotient_project(const Subspace& v, const Vec& x) {
  Vec res = v.reduce(x);
  Vec out;
  for (auto i : v.free_columns()) out.push_back(res[i]);
  return out;
}

ModuleRep restrict_to(const ModuleRep& m, const Subspace& v) {
  if (v.ambient_dim() != m.dim()) throw std::invalid_argument("restrict: dimension mismatch");
  std::vector<int> w;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    const int wt = m.weights()[v.pivots()[i]];
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (!v.basis()[i][j].is_zero() && m.weights()[j] != wt)
        throw std::invalid_argument("restrict: basis is not weight-homogeneous");
    w.push_back(wt);
  }
  return map_components(m, v.dim(), std::move(w), [&](const SparseMatrix& x) {
    SparseMatrix out(v.dim(), v.dim());
    for (std::size_t c = 0; c < v.dim(); ++c) {
      Vec y = x.apply(v.basis()[c]);
      if (!v.contains(y)) throw std::invalid_argument("restrict: subspace is not a submodule");
      Vec coords = v.coordinates(y);
      for (std::size_t r = 0; r < coords.size(); ++r)
        if (!coords[r].is_zero()) out.add(r, c, coords[r]);
    }
    return out;
  });
}

Vec restrict_project(const Subspace& v, const Vec& x) {
  if (!v.contains(x)) throw std::invalid_argument("vector not in subspace");
  return v.coordinates(x);
}

std::map<int, Subspace, std::greater<int>> weight_decomposition(const ModuleRep& m) {
  std::map<int, Subspace, std::greater<int>> out;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    auto [it, ins] = out.try_emplace(m.weights()[i], Subspace(m.dim()));
    it->second.insert(unit_vec(m.dim(), i));
  }
  return out;
}

std::vector<std::pair<int, Subspace>> singular_vectors(const ModuleRep& m) {
  std::map<int, std::vector<std::size_t>, std::greater<int>> idx;
  for (std::size_t i = 0; i < m.dim(); ++i) idx[m.weights()[i]].push_back(i);
  std::vector<std::pair<int, Subspace>> out;
  for (const auto& [w, cols] : idx) {
    std::vector<long> local(m.dim(), -1);
    for (std::size_t t = 0; t < cols.size(); ++t) local[cols[t]] = static_cast<long>(t);
    std::vector<Vec> rows;
    for (const auto& c : m.components())
      for (const auto& x : c.e)
        for (std::size_t r = 0; r < x.rows(); ++r) {
          Vec row(cols.size());
          bool any = false;
          for (const auto& [j, val] : x.row(r))
            if (local[j] >= 0) {
              row[local[j]] = val;
              any = true;
            }
          if (any) rows.push_back(std::move(row));
        }
    Subspace ker = kernel(cols.size(), rows);
    if (ker.dim() == 0) continue;
    Subspace lifted(m.dim());
    for (const auto& k : ker.basis()) {
      Vec v(m.dim());
      for (std::size_t t = 0; t < cols.size(); ++t) v[cols[t]] = k[t];
      lifted.insert(v);
    }
    out.emplace_back(w, std::move(lifted));
  }
  return out;
}

Vec highest_vector(const ModuleRep& m) {
  if (m.dim() == 0) throw std::invalid_argument("zero-dimensional module");
  auto top = std::max_element(m.weights().begin(), m.weights().end());
  if (std::count(m.weights().begin(), m.weights().end(), *top) != 1)
    throw std::invalid_argument("top weight space is not one-dimensional");
  return unit_vec(m.dim(), static_cast<std::size_t>(top - m.weights().begin()));
}

}  // namespace loophw
