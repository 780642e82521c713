#pragma once

#include <string>
#include <vector>

#include "loophw/scalar.hpp"

namespace loophw {

struct ParamEntry {
  Scalar a;
  int m = 1;
  friend bool operator==(const ParamEntry&, const ParamEntry&) = default;
};

// Distinct nonzero parameters a_j with multiplicities m_j, in entry order.
class HWParams {
 public:
  HWParams() = default;
  explicit HWParams(std::vector<ParamEntry> entries);

  const std::vector<ParamEntry>& entries() const { return entries_; }
  int r() const;
  int s() const { return static_cast<int>(entries_.size()); }
  const Scalar& a(int j) const { return entries_.at(j - 1).a; }  // 1-based
  int m(int j) const { return entries_.at(j - 1).m; }             // 1-based

  // â: entry by entry, each a_j repeated m_j times.
  std::vector<Scalar> flatten() const;
  std::vector<Scalar> distinct() const;
  std::vector<int> multiplicities() const;

  // "2:2,3:1"; throws std::invalid_argument on malformed or invalid input.
  static HWParams parse(const std::string& spec);
  std::string str() const;

  friend bool operator==(const HWParams&, const HWParams&) = default;

 private:
  std::vector<ParamEntry> entries_;
};

// Coefficients c_k = (-1)^k λ_k of P_λ(u), c_0 = 1.
class HWPoly {
 public:
  HWPoly() : c_{Scalar(1)} {}
  static HWPoly from_lambda(const std::vector<Scalar>& lambda);
  static HWPoly from_params(const HWParams& p);

  const std::vector<Scalar>& coefficients() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::vector<Scalar> lambda() const;
  Scalar operator()(const Scalar& u) const;
  std::string str() const;

  friend bool operator==(const HWPoly&, const HWPoly&) = default;

 private:
  std::vector<Scalar> c_;
};

// Plain polynomial helpers on coefficient lists (index = power of u).
Scalar poly_eval(const std::vector<Scalar>& c, const Scalar& u);
std::vector<Scalar> poly_derivative(const std::vector<Scalar>& c);

// e_0..e_n of the values.
std::vector<Scalar> elem_sym_all(const std::vector<Scalar>& values);
Scalar elem_sym(const std::vector<Scalar>& values, int k);

std::vector<Scalar> newton_lambda_from_d(const std::vector<Scalar>& d);
Scalar d_from_params(const HWParams& p, int k);
Scalar d_alpha(const HWParams& p, const std::vector<Scalar>& alpha, int m);
Scalar newton_extend_d(const HWParams& p, const std::vector<Scalar>& lambda, int j);
std::vector<Scalar> lambda_shifted(const HWParams& p, const Scalar& a);
Scalar binomial_extended(long n, long k);

}  // namespace loophw
