#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "loophw/identities.hpp"

namespace loophw {

// Per j, a nondecreasing list of exponents k with 1 ≤ k ≤ m_j - 1.
struct NetLabel {
  std::vector<std::vector<int>> k;

  int s() const { return static_cast<int>(k.size()); }
  bool empty() const;
  void canonicalize();
  // "1^1 2^1"; the empty label prints as "∅".
  std::string str() const;
  static NetLabel parse(const std::string& text, int s);

  friend auto operator<=>(const NetLabel&, const NetLabel&) = default;
  friend bool operator==(const NetLabel&, const NetLabel&) = default;
};

enum class Procedure { ii, iii, iv, v };
std::string to_string(Procedure p);
Procedure procedure_from_string(const std::string& s);

struct Daughter {
  NetLabel label;
  Procedure tag;
  int j;  // 1-based
};

struct NetVertex {
  NetLabel label;
  Vec omega;  // empty without a concrete module
  std::vector<int> m_prime;
  std::uint64_t predicted_dim = 0;
  std::optional<std::uint64_t> exact_dim;     // dim M_v / Σ_parents M_p
  std::optional<std::uint64_t> closure_dim;  // dim Uω_v
  bool vanished = false;
  bool explained = false;

  friend bool operator==(const NetVertex&, const NetVertex&) = default;
};

struct NetEdge {
  NetLabel parent, child;
  Procedure tag;
  int j;
  friend bool operator==(const NetEdge&, const NetEdge&) = default;
};

struct RelationStatus {
  int j, n;
  bool holds;
  friend bool operator==(const RelationStatus&, const RelationStatus&) = default;
};

struct NetworkGraph {
  HWParams params;
  std::map<NetLabel, NetVertex> vertices;
  std::vector<NetEdge> edges;
  std::vector<RelationStatus> relations;  // quadratic w-relations on Ω, per (j, n)
  std::vector<std::string> discrepancies;
  NetLabel source, sink;

  std::vector<NetLabel> parents(const NetLabel& v) const;
  std::vector<NetLabel> children(const NetLabel& v) const;
  // Parents before children, ties in label order.
  std::vector<NetLabel> topological_order() const;
  std::uint64_t total_dim() const;  // exact dims when present, else predicted

  friend bool operator==(const NetworkGraph&, const NetworkGraph&) = default;
};

class CutError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<int> ell_max(const HWParams& p);
NetLabel omega_max_label(const HWParams& p);
std::vector<Daughter> daughters(const HWParams& p, const NetLabel& label);

// ω_Σ = Π w_{j^k} Ω.
Vec omega_vector(const ModuleRep& m, const Vec& omega, const HWParams& p, const NetLabel& label);
std::vector<int> m_prime(const HWParams& p, const NetLabel& label);

// With a concrete Weyl module, vertices carry exact dims and vanishings are
// checked against the quadratic w-relations. jobs > 1 verifies vertices of
// one layer concurrently.
NetworkGraph build_network(const HWParams& p, const ModuleRep* concrete = nullptr, const Vec* omega = nullptr,
                           int jobs = 1);

// Σ_{k=1}^{n} k w_{j^{k+1}} w_{j^{n+1-k}} Ω = 0, terms with k+1 > m_j dropped.
bool conjecture_relation_check(const ModuleRep& m, const Vec& omega, const HWParams& p, int j, int n);

// Sum of quotient dims left after declaring the cut labels' ω zero, which
// removes each cut vertex and all of its ancestors.
std::uint64_t reducible_dims(const NetworkGraph& g, const std::set<NetLabel>& cut);

// Highest-weight-modulo-V checks for one vertex, V the sum of its parents' submodules.
std::vector<CheckResult> modulo_v_checks(const NetworkGraph& g, const ModuleRep& m, const Vec& omega,
                                         const NetLabel& label, int lo, int hi);
// ω for (1,3,...,2ℓ-1) at a single j is highest weight with d_n - 2ℓ a_j^n.
CheckResult check_prop_2t1(const ModuleRep& m, const Vec& omega, const HWParams& p, int lo, int hi);
// Uω^max is irreducible of dim Π(m_k + 1 - 2ℓ_k^max).
CheckResult check_prop_max(const ModuleRep& m, const Vec& omega, const HWParams& p);

}  // namespace loophw
