#include "loophw/network.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <queue>
#include <sstream>
#include <tuple>

namespace loophw {

namespace {

std::uint64_t predicted(const std::vector<int>& mp) {
  std::uint64_t d = 1;
  for (int x : mp) d *= static_cast<std::uint64_t>(x + 1);
  return d;
}

std::set<NetLabel> ancestors(const NetworkGraph& g, const NetLabel& v) {
  std::set<NetLabel> seen;
  std::vector<NetLabel> stack{v};
  while (!stack.empty()) {
    NetLabel u = stack.back();
    stack.pop_back();
    for (auto& p : g.parents(u))
      if (seen.insert(p).second) stack.push_back(p);
  }
  return seen;
}

// Σ_{u ancestor of v} Uω_u.
Subspace parent_sum(const NetworkGraph& g, const ModuleRep& m, const NetLabel& v) {
  std::vector<Vec> gens;
  for (const auto& u : ancestors(g, v)) gens.push_back(g.vertices.at(u).omega);
  return submodule_closure(m, gens);
}

// Vanishing of ω_v inside P derived from one quadratic w-relation.
bool explained_by_relation(const ModuleRep& m, const Vec& omega, const HWParams& p, const NetLabel& label,
                           const Subspace& P, const std::map<std::pair<int, int>, bool>& conj) {
  for (int j = 1; j <= p.s(); ++j) {
    const auto& ks = label.k[j - 1];
    for (std::size_t i = 0; i < ks.size(); ++i) {
      for (std::size_t t = i + 1; t < ks.size(); ++t) {
        const int n = ks[i] + ks[t] - 2;
        if (n < 1 || n > p.m(j) || !conj.at({j, n})) continue;
        NetLabel rest = label;
        auto& rj = rest.k[j - 1];
        rj.erase(rj.begin() + static_cast<long>(t));
        rj.erase(rj.begin() + static_cast<long>(i));
        const Vec base = omega_vector(m, omega, p, rest);
        std::map<std::pair<int, int>, Scalar> terms;
        for (int k = 1; k <= n; ++k) {
          if (k + 1 > p.m(j)) continue;
          const int a = std::min(k + 1, n + 1 - k), b = std::max(k + 1, n + 1 - k);
          terms[{a, b}] += Scalar(k);
        }
        const std::pair<int, int> own{ks[i], ks[t]};
        auto it = terms.find(own);
        if (it == terms.end() || it->second.is_zero()) continue;
        bool rest_in_p = true;
        for (const auto& [pair, c] : terms) {
          if (pair == own || c.is_zero()) continue;
          const Vec v = m.act(w_jk(p, j, pair.first), m.act(w_jk(p, j, pair.second), base));
          if (!P.contains(v)) {
            rest_in_p = false;
            break;
          }
        }
        if (rest_in_p) return true;
      }
    }
  }
  return false;
}

}  // namespace

bool NetLabel::empty() const {
  return std::all_of(k.begin(), k.end(), [](const auto& v) { return v.empty(); });
}

void NetLabel::canonicalize() {
  for (auto& v : k) std::sort(v.begin(), v.end());
}

std::string NetLabel::str() const {
  std::string out;
  for (std::size_t j = 0; j < k.size(); ++j)
    for (int e : k[j]) out += (out.empty() ? "" : " ") + std::to_string(j + 1) + "^" + std::to_string(e);
  return out.empty() ? "∅" : out;
}

NetLabel NetLabel::parse(const std::string& text, int s) {
  NetLabel out{std::vector<std::vector<int>>(s)};
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok == "∅") continue;
    const auto caret = tok.find('^');
    if (caret == std::string::npos) throw std::invalid_argument("label entry '" + tok + "' is not of the form j^k");
    std::size_t used1 = 0, used2 = 0;
    int j = 0, k = 0;
    try {
      j = std::stoi(tok.substr(0, caret), &used1);
      k = std::stoi(tok.substr(caret + 1), &used2);
    } catch (const std::exception&) {
      throw std::invalid_argument("label entry '" + tok + "' is not of the form j^k");
    }
    if (used1 != caret || used2 != tok.size() - caret - 1)
      throw std::invalid_argument("label entry '" + tok + "' is not of the form j^k");
    if (j < 1 || j > s || k < 1) throw std::invalid_argument("label entry '" + tok + "' out of range");
    out.k[j - 1].push_back(k);
  }
  out.canonicalize();
  return out;
}

std::string to_string(Procedure p) {
  switch (p) {
    case Procedure::ii: return "ii";
    case Procedure::iii: return "iii";
    case Procedure::iv: return "iv";
    case Procedure::v: return "v";
  }
  return "?";
}

Procedure procedure_from_string(const std::string& s) {
  if (s == "ii") return Procedure::ii;
  if (s == "iii") return Procedure::iii;
  if (s == "iv") return Procedure::iv;
  if (s == "v") return Procedure::v;
  throw std::invalid_argument("unknown procedure tag '" + s + "'");
}

std::vector<NetLabel> NetworkGraph::parents(const NetLabel& v) const {
  std::vector<NetLabel> out;
  for (const auto& e : edges)
    if (e.child == v && std::find(out.begin(), out.end(), e.parent) == out.end()) out.push_back(e.parent);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NetLabel> NetworkGraph::children(const NetLabel& v) const {
  std::vector<NetLabel> out;
  for (const auto& e : edges)
    if (e.parent == v && std::find(out.begin(), out.end(), e.child) == out.end()) out.push_back(e.child);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NetLabel> NetworkGraph::topological_order() const {
  std::map<NetLabel, int> indeg;
  for (const auto& [l, v] : vertices) indeg[l] = 0;
  for (const auto& e : edges) ++indeg[e.child];
  std::set<NetLabel> ready;
  for (const auto& [l, d] : indeg)
    if (d == 0) ready.insert(l);
  std::vector<NetLabel> out;
  while (!ready.empty()) {
    NetLabel u = *ready.begin();
    ready.erase(ready.begin());
    out.push_back(u);
    for (const auto& c : children(u))
      if (--indeg[c] == 0) ready.insert(c);
  }
  if (out.size() != vertices.size()) throw std::logic_error("network has a cycle");
  return out;
}

std::uint64_t NetworkGraph::total_dim() const {
  std::uint64_t t = 0;
  for (const auto& [l, v] : vertices) t += v.exact_dim.value_or(v.predicted_dim);
  return t;
}

std::vector<int> ell_max(const HWParams& p) {
  std::vector<int> out;
  for (int j = 1; j <= p.s(); ++j) out.push_back(p.m(j) / 2);  // largest ℓ < (m+1)/2
  return out;
}

NetLabel omega_max_label(const HWParams& p) {
  NetLabel out{std::vector<std::vector<int>>(p.s())};
  const auto lmax = ell_max(p);
  for (int j = 0; j < p.s(); ++j)
    for (int t = 1; t <= lmax[j]; ++t) out.k[j].push_back(2 * t - 1);
  return out;
}

std::vector<Daughter> daughters(const HWParams& p, const NetLabel& label) {
  std::vector<Daughter> out;
  const auto l0 = ell_max(p);
  for (int j = 1; j <= p.s(); ++j) {
    const auto& ks = label.k[j - 1];
    const int l = static_cast<int>(ks.size()), mj = p.m(j);
    if (l == 0) continue;
    const int last = ks.back();
    NetLabel d = label;
    auto& dk = d.k[j - 1];
    Procedure tag;
    if (l == l0[j - 1]) {
      if (last + 1 < mj) {
        dk.back() = last + 1;
        tag = Procedure::ii;
      } else {
        dk.pop_back();
        tag = Procedure::iii;
      }
    } else if (last < mj - 1) {
      dk.back() = last + 1;
      for (int i = 1; i <= l0[j - 1] - l; ++i) dk.push_back(std::max(last + 1, 2 * (l + i) - 1));
      tag = Procedure::iv;
    } else {
      dk.pop_back();
      tag = Procedure::v;
    }
    d.canonicalize();
    if (std::none_of(out.begin(), out.end(), [&](const Daughter& x) { return x.label == d; }))
      out.push_back({std::move(d), tag, j});
  }
  return out;
}

Vec omega_vector(const ModuleRep& m, const Vec& omega, const HWParams& p, const NetLabel& label) {
  Vec v = omega;
  for (int j = label.s(); j >= 1; --j)
    for (auto it = label.k[j - 1].rbegin(); it != label.k[j - 1].rend(); ++it) v = m.act(w_jk(p, j, *it), v);
  return v;
}

std::vector<int> m_prime(const HWParams& p, const NetLabel& label) {
  std::vector<int> out;
  for (int j = 1; j <= p.s(); ++j) out.push_back(p.m(j) - 2 * static_cast<int>(label.k[j - 1].size()));
  return out;
}

bool conjecture_relation_check(const ModuleRep& m, const Vec& omega, const HWParams& p, int j, int n) {
  if (n < 0 || n > p.m(j)) throw std::out_of_range("relation index n outside [0, m_j]");
  Vec sum(m.dim());
  for (int k = 1; k <= n; ++k) {
    if (k + 1 > p.m(j)) continue;
    axpy(sum, Scalar(k), m.act(w_jk(p, j, k + 1), m.act(w_jk(p, j, n + 1 - k), omega)));
  }
  return is_zero(sum);
}

NetworkGraph build_network(const HWParams& p, const ModuleRep* concrete, const Vec* omega, int jobs) {
  NetworkGraph g;
  g.params = p;
  g.source = omega_max_label(p);
  g.sink = NetLabel{std::vector<std::vector<int>>(p.s())};

  std::queue<NetLabel> todo;
  todo.push(g.source);
  g.vertices[g.source].label = g.source;
  while (!todo.empty()) {
    NetLabel u = todo.front();
    todo.pop();
    for (auto& d : daughters(p, u)) {
      g.edges.push_back({u, d.label, d.tag, d.j});
      if (!g.vertices.count(d.label)) {
        g.vertices[d.label].label = d.label;
        todo.push(d.label);
      }
    }
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const NetEdge& a, const NetEdge& b) {
    return std::tie(a.parent, a.child, a.j) < std::tie(b.parent, b.child, b.j);
  });
  for (auto& [l, v] : g.vertices) {
    v.m_prime = m_prime(p, l);
    v.predicted_dim = predicted(v.m_prime);
  }
  if (!concrete) return g;

  const ModuleRep& m = *concrete;
  if (!omega || omega->size() != m.dim()) throw std::invalid_argument("network: Ω missing or of the wrong size");
  if (p.r() < 64 && m.dim() != (std::uint64_t{1} << p.r()))
    throw std::invalid_argument("network: the concrete module must be the Weyl module of dim 2^r");
  if (!is_highest_weight(m, *omega)) throw NotHighestWeight("network: Ω is not a highest weight vector");

  std::map<std::pair<int, int>, bool> conj;
  for (int j = 1; j <= p.s(); ++j)
    for (int n = 0; n <= p.m(j); ++n) {
      const bool holds = conjecture_relation_check(m, *omega, p, j, n);
      conj[{j, n}] = holds;
      g.relations.push_back({j, n, holds});
    }

  // Layers by longest path from the source; a layer only reads earlier ones.
  const auto order = g.topological_order();
  std::map<NetLabel, int> depth;
  for (const auto& u : order) {
    int d = 0;
    for (const auto& par : g.parents(u)) d = std::max(d, depth[par] + 1);
    depth[u] = d;
  }
  std::map<int, std::vector<NetLabel>> layers;
  for (const auto& u : order) layers[depth[u]].push_back(u);

  std::map<NetLabel, Subspace> cumulative;
  for (auto& [d, layer] : layers) {
    struct Out {
      Vec omega;
      Subspace M;
      std::uint64_t q, c;
      bool explained;
    };
    auto work = [&](const NetLabel& u) {
      Vec w = omega_vector(m, *omega, p, u);
      Subspace P(m.dim());
      for (const auto& par : g.parents(u)) P = Subspace::sum(P, cumulative.at(par));
      Subspace M = extend_closure(m, P, {w});
      const std::uint64_t q = M.dim() - P.dim();
      const std::uint64_t c = submodule_closure(m, {w}).dim();
      const bool expl = q == 0 && explained_by_relation(m, *omega, p, u, P, conj);
      return Out{std::move(w), std::move(M), q, c, expl};
    };
    std::vector<Out> results;
    if (jobs > 1) {
      for (std::size_t i = 0; i < layer.size(); i += static_cast<std::size_t>(jobs)) {
        std::vector<std::future<Out>> fs;
        for (std::size_t k = i; k < std::min(layer.size(), i + static_cast<std::size_t>(jobs)); ++k)
          fs.push_back(std::async(std::launch::async, work, std::cref(layer[k])));
        for (auto& f : fs) results.push_back(f.get());
      }
    } else {
      for (const auto& u : layer) results.push_back(work(u));
    }
    for (std::size_t i = 0; i < layer.size(); ++i) {
      NetVertex& v = g.vertices.at(layer[i]);
      v.omega = std::move(results[i].omega);
      v.exact_dim = results[i].q;
      v.closure_dim = results[i].c;
      v.vanished = results[i].q == 0;
      v.explained = results[i].explained;
      cumulative.emplace(layer[i], std::move(results[i].M));
    }
  }

  for (const auto& [l, v] : g.vertices) {
    if (v.vanished && !v.explained) g.discrepancies.push_back("unexplained vanishing at " + l.str());
    if (!v.vanished && *v.exact_dim != v.predicted_dim)
      g.discrepancies.push_back("dimension mismatch at " + l.str() + ": predicted " +
                                std::to_string(v.predicted_dim) + ", exact " + std::to_string(*v.exact_dim));
  }
  if (g.total_dim() != m.dim())
    g.discrepancies.push_back("quotient dims sum to " + std::to_string(g.total_dim()) + ", module has dim " +
                              std::to_string(m.dim()));
  return g;
}

std::uint64_t reducible_dims(const NetworkGraph& g, const std::set<NetLabel>& cut) {
  std::set<NetLabel> removed;
  for (const auto& c : cut) {
    if (!g.vertices.count(c)) throw CutError("cut label " + c.str() + " is not a vertex of the network");
    if (c == g.sink) throw CutError("the sink cannot be cut");
    removed.insert(c);
    for (const auto& a : ancestors(g, c)) removed.insert(a);
  }
  std::uint64_t total = 0;
  for (const auto& [l, v] : g.vertices)
    if (!removed.count(l)) total += v.exact_dim.value_or(v.predicted_dim);
  return total;
}

std::vector<CheckResult> modulo_v_checks(const NetworkGraph& g, const ModuleRep& m, const Vec& omega,
                                         const NetLabel& label, int lo, int hi) {
  const HWParams& p = g.params;
  if (!g.vertices.count(label)) throw std::invalid_argument("label " + label.str() + " is not in the network");
  const Vec w = omega_vector(m, omega, p, label);
  const Subspace V = parent_sum(g, m, label);
  const auto mp = m_prime(p, label);
  const std::string at = " for " + label.str();
  std::vector<CheckResult> out;

  CheckResult ann("x_n^+ ω ∈ V" + at);
  for (int n = lo; n <= hi; ++n) {
    ++ann.cases;
    if (!V.contains(m.act(GenSymbol{Kind::raise, n}, w))) ann.fail("n=" + std::to_string(n));
  }
  out.push_back(ann);

  CheckResult diag("h_n ω ≡ d_n' ω mod V" + at);
  for (int n = lo; n <= hi; ++n) {
    Scalar dn = d_from_params(p, n);
    for (int j = 1; j <= p.s(); ++j) dn -= Scalar(2 * static_cast<int>(label.k[j - 1].size())) * p.a(j).pow(n);
    ++diag.cases;
    if (!V.contains(m.act(GenSymbol{Kind::cartan, n}, w) - scaled(w, dn))) diag.fail("n=" + std::to_string(n));
  }
  out.push_back(diag);

  std::vector<ParamEntry> entries;
  for (int j = 1; j <= p.s(); ++j)
    if (mp[j - 1] > 0) entries.push_back({p.a(j), mp[j - 1]});
  const int rp = std::accumulate(mp.begin(), mp.end(), 0);
  std::vector<Scalar> hat_prime;
  for (const auto& e : entries)
    for (int i = 0; i < e.m; ++i) hat_prime.push_back(e.a);
  const auto lam = elem_sym_all(hat_prime);
  CheckResult red("reduction relation of order r' mod V" + at);
  for (int l : {0, 1, 2}) {
    Vec lhs = m.act(GenSymbol{Kind::lower, rp + 1 - l}, w);
    for (int j = 1; j <= rp; ++j)
      axpy(lhs, -lam[rp + 1 - j] * Scalar((rp - j) % 2 ? -1 : 1), m.act(GenSymbol{Kind::lower, j - l}, w));
    ++red.cases;
    if (!V.contains(lhs)) red.fail("ℓ=" + std::to_string(l));
  }
  out.push_back(red);

  CheckResult pw("(ρ_j^-)^{(m_j'+1)} ω ∈ V" + at);
  ParamSeq a = p.distinct();
  std::sort(a.begin(), a.end());
  if (V.contains(m.act(expand_with_params(Kind::lower, p.s(), a), w))) {
    for (int j = 1; j <= p.s(); ++j) {
      ++pw.cases;
      if (!V.contains(m.act_divided(rho(Kind::lower, p, j), mp[j - 1] + 1, w))) pw.fail("j=" + std::to_string(j));
    }
  }
  out.push_back(pw);

  out.push_back(check_sum_identities(m, omega, p, 3));
  return out;
}

CheckResult check_prop_2t1(const ModuleRep& m, const Vec& omega, const HWParams& p, int lo, int hi) {
  CheckResult res("products w_{j^1} w_{j^3} ⋯ Ω are highest weight");
  const auto l0 = ell_max(p);
  for (int j = 1; j <= p.s(); ++j) {
    for (int l = 1; l <= l0[j - 1]; ++l) {
      NetLabel label{std::vector<std::vector<int>>(p.s())};
      for (int t = 1; t <= l; ++t) label.k[j - 1].push_back(2 * t - 1);
      const Vec w = omega_vector(m, omega, p, label);
      for (int n = lo; n <= hi; ++n) {
        res.cases += 2;
        if (!is_zero(m.act(GenSymbol{Kind::raise, n}, w))) res.fail("x_n^+ at " + label.str() + ", n=" + std::to_string(n));
        const Scalar dn = d_from_params(p, n) - Scalar(2 * l) * p.a(j).pow(n);
        if (m.act(GenSymbol{Kind::cartan, n}, w) != scaled(w, dn))
          res.fail("h_n eigenvalue at " + label.str() + ", n=" + std::to_string(n));
      }
    }
  }
  return res;
}

CheckResult check_prop_max(const ModuleRep& m, const Vec& omega, const HWParams& p) {
  CheckResult res("Uω^max irreducible of the predicted dimension", 2);
  const Vec w = omega_vector(m, omega, p, omega_max_label(p));
  const Subspace c = submodule_closure(m, {w});
  std::uint64_t want = 1;
  const auto l0 = ell_max(p);
  for (int j = 1; j <= p.s(); ++j) want *= static_cast<std::uint64_t>(p.m(j) + 1 - 2 * l0[j - 1]);
  if (c.dim() != want) res.fail("dim " + std::to_string(c.dim()) + ", expected " + std::to_string(want));
  if (!oracle_irreducible(restrict_to(m, c), restrict_project(c, w))) res.fail("Uω^max is reducible");
  return res;
}

}  // namespace loophw
