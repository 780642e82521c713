#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "loophw/linalg.hpp"
#include "loophw/loop_ops.hpp"

namespace loophw {

// Action of sl2 ⊗ C[t]/(t-a)^depth at one point a: e[i], f[i], h[i] are
// x⊗(t-a)^i. A generator of degree k acts as Σ_i C(k,i) a^{k-i} X[i].
struct Component {
  Scalar a;
  std::vector<SparseMatrix> e, f, h;

  int depth() const { return static_cast<int>(e.size()); }
  const std::vector<SparseMatrix>& jets(Kind k) const {
    return k == Kind::raise ? e : (k == Kind::lower ? f : h);
  }
};

class CapError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class ModuleRep {
 public:
  ModuleRep() = default;
  ModuleRep(std::size_t dim, std::vector<int> weights, std::vector<Component> components);

  std::size_t dim() const { return dim_; }
  const std::vector<int>& weights() const { return weights_; }
  const std::vector<Component>& components() const { return comps_; }
  int total_depth() const;

  SparseMatrix op(const LoopCombo& c) const;
  SparseMatrix op(Kind kind, int k) const { return op(LoopCombo(GenSymbol{kind, k})); }
  Vec act(const LoopCombo& c, const Vec& v) const;
  Vec act(GenSymbol g, const Vec& v) const { return act(LoopCombo(g), v); }
  // (c)^{(n)} v = c^n v / n!
  Vec act_divided(const LoopCombo& c, int n, Vec v) const;

 private:
  // Weight of jet i of component `comp` inside the combo c.
  Scalar jet_coeff(const LoopCombo& c, const Component& comp, int i) const;

  std::size_t dim_ = 0;
  std::vector<int> weights_;
  std::vector<Component> comps_;
};

// Dimension cap: LOOPHW_CAP if set, else 65536.
std::size_t default_cap();

ModuleRep eval_module(const Scalar& a, int m);
// Local Weyl module W_m(a): dim 2^m, cyclic on index 0, highest weight (a)^m.
ModuleRep local_weyl_module(const Scalar& a, int m, std::size_t cap = default_cap());
ModuleRep tensor(const std::vector<ModuleRep>& ms, std::size_t cap = default_cap());
ModuleRep weyl_module(const HWParams& p, std::size_t cap = default_cap());
ModuleRep packed_module(const HWParams& p, std::size_t cap = default_cap());

Subspace submodule_closure(const ModuleRep& m, const std::vector<Vec>& gens);
// Closure of base + gens, where base is already a submodule.
Subspace extend_closure(const ModuleRep& m, Subspace base, const std::vector<Vec>& gens);
bool is_invariant(const ModuleRep& m, const Subspace& v);

ModuleRep quotient(const ModuleRep& m, const Subspace& v);
Vec quotient_project(const Subspace& v, const Vec& x);
ModuleRep restrict_to(const ModuleRep& m, const Subspace& v);
Vec restrict_project(const Subspace& v, const Vec& x);

std::vector<std::pair<int, Subspace>> singular_vectors(const ModuleRep& m);
std::map<int, Subspace, std::greater<int>> weight_decomposition(const ModuleRep& m);
// Split v into weight components (nonzero ones, by decreasing weight).
std::vector<Vec> weight_components(const ModuleRep& m, const Vec& v);
// Unique top-weight basis vector; throws if the top weight space is not a line.
Vec highest_vector(const ModuleRep& m);

}  // namespace loophw
