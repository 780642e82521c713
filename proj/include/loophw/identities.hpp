#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "loophw/analysis.hpp"

namespace loophw {

struct CheckResult {
  CheckResult(std::string n = {}, int c = 0) : name(std::move(n)), cases(c) {}  // NOLINT

  std::string name;
  bool passed = true;
  int cases = 0;
  std::string detail;  // first failing case, empty when passed

  void fail(const std::string& what) {
    if (passed) detail = what;
    passed = false;
  }
};

// A concrete highest-weight module with its top vector and expected parameters.
struct ZooEntry {
  std::string name;
  ModuleRep module;
  Vec omega;
  HWParams params;
};

// Built-in modules: evaluation, packed, Weyl, quotients and a cyclic part;
// entries above max_dim are skipped.
std::vector<ZooEntry> module_zoo(std::size_t max_dim = 64);

// Random nonzero rational with small numerator and denominator.
Scalar random_scalar(std::mt19937_64& rng);
ParamSeq random_seq(std::mt19937_64& rng, int len);

// Matrix identities; degrees range over [lo, hi].
CheckResult check_cdr(const ModuleRep& m, int lo, int hi);
CheckResult check_dfr_ab(const ModuleRep& m, int lo, int hi, std::mt19937_64& rng, int trials);
CheckResult check_ab_divided(const ModuleRep& m, int tmax, int lo, int hi, std::mt19937_64& rng, int trials);
CheckResult check_rho_x(const ModuleRep& m, const HWParams& p);
// Recursion for (x_ℓ^+)^{(n)}(x_{1-ℓ}^-(a))^{(n+1)}, n = 0..nmax. With
// plain_h1 the commutator term uses h_1 instead of h_1(a).
CheckResult check_ind_ell(const ModuleRep& m, int nmax, const std::vector<int>& ells, const ParamSeq& as,
                          bool plain_h1 = false);

// Identities evaluated on Ω.
CheckResult check_sum_identities(const ModuleRep& m, const Vec& omega, const HWParams& p, int nmax);
CheckResult check_lemma_abc(const ModuleRep& m, const Vec& omega, const HWParams& p, int nmax,
                            const ParamSeq& as);
// x_{r+1-ℓ}^-(â)Ω = 0, Newton extension of d_k, and the shifted relation.
// With printed_lhs the shifted relation uses x_{r+1-ℓ}^-(a) on the left.
CheckResult check_reduction_relations(const ModuleRep& m, const Vec& omega, const HWParams& p, int lo, int hi,
                                      const ParamSeq& as, bool printed_lhs = false);

// Vanishing properties on Ω.
CheckResult check_vanish_ab(const ModuleRep& m, const Vec& omega, const HWParams& p, std::mt19937_64& rng,
                            int lo, int hi);
CheckResult check_ajbeta(const ModuleRep& m, const Vec& omega, const HWParams& p, std::mt19937_64& rng);
CheckResult check_xn(const ModuleRep& m, const Vec& omega, const HWParams& p, int lo, int hi);

// Structural properties of the cyclic module generated by Ω.
CheckResult check_one_dim(const ModuleRep& m, const Vec& omega, const HWParams& p);
CheckResult check_uo(const ModuleRep& m, const Vec& omega, const HWParams& p, int lo, int hi);
CheckResult check_lambda_r(const ModuleRep& m, const Vec& omega, const HWParams& p);
CheckResult check_basis(const ModuleRep& m, const Vec& omega, const HWParams& p);
CheckResult check_power_vanishing(const ModuleRep& m, const Vec& omega, const HWParams& p);
CheckResult check_inner_products(const ModuleRep& m, const Vec& omega, const HWParams& p);

struct SuiteOptions {
  std::uint64_t seed = 20240611;
  int window = 2;  // degrees range over [-window, r+window]
  int trials = 4;
  std::size_t max_dim = 64;
};

struct SuiteResult {
  std::string module;
  std::vector<CheckResult> checks;
  bool passed() const;
};

// Full identity suite on one module.
SuiteResult run_identity_suite(const ZooEntry& z, const SuiteOptions& opt);
// Structural suite; irreducible-only properties are skipped when the
// criterion fails.
SuiteResult run_structural_suite(const ZooEntry& z, const SuiteOptions& opt);

}  // namespace loophw
