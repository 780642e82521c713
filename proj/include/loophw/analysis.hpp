#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "loophw/module.hpp"

namespace loophw {

class NotHighestWeight : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class ParameterMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class ScopeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
// A computed quantity contradicts an identity that must hold.
class Discrepancy : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct HWReport {
  int r = 0;
  int d_lo = -3;          // d[i] is d_{d_lo + i}
  std::vector<Scalar> d;  // k = -3..r
  std::vector<Scalar> lambda;
  HWPoly poly;
  HWParams params;
  bool criterion_holds = false;
  std::uint64_t dim_formula = 1;
  std::uint64_t actual_dim = 0;
  bool oracle_irreducible = false;

  friend bool operator==(const HWReport&, const HWReport&) = default;
};

// c with image = c·omega; throws NotHighestWeight when not proportional.
Scalar eigenvalue_on(const Vec& omega, const Vec& image);
bool is_highest_weight(const ModuleRep& m, const Vec& omega);
Scalar measure_d(const ModuleRep& m, const Vec& omega, int k);
// (x_ℓ^+)^{(n)} (x_{1-ℓ}^-(a))^{(n)} Ω = value·Ω, for n = 1..nmax.
std::vector<Scalar> measure_lambda(const ModuleRep& m, const Vec& omega, int nmax, int ell = 0,
                                   const Scalar& a = Scalar(0));

HWReport analyze(const ModuleRep& m, const Vec& omega, const HWParams& expected);
bool check_reduction(const ModuleRep& m, const Vec& omega, const HWParams& p);
bool check_reduction_shifted(const ModuleRep& m, const Vec& omega, const HWParams& p, const Scalar& a);
bool criterion(const ModuleRep& m, const Vec& omega, const HWParams& p);
bool oracle_irreducible(const ModuleRep& m, const Vec& omega);
std::uint64_t dim_formula(const HWParams& p);

Vec rho_lower_product(const ModuleRep& m, const Vec& omega, const HWParams& p, const std::vector<int>& k);
Scalar inner_product_check(const ModuleRep& m, const Vec& omega, const HWParams& p,
                           const std::vector<int>& ell, const std::vector<int>& k);
Scalar inner_product_expected(const HWParams& p, const std::vector<int>& ell, const std::vector<int>& k);
bool basis_check(const ModuleRep& m, const Vec& omega, const HWParams& p);
bool power_vanishing_check(const ModuleRep& m, const Vec& omega, const HWParams& p);

}  // namespace loophw
