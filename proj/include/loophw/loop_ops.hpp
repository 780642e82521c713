#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "loophw/params.hpp"

namespace loophw {

enum class Kind { raise, lower, cartan };

std::string to_string(Kind k);
Kind kind_from_string(const std::string& s);

struct GenSymbol {
  Kind kind = Kind::lower;
  int degree = 0;
};

using ParamSeq = std::vector<Scalar>;

// Σ c_k · g_k for a single generator family g ∈ {x^+, x^-, h}.
class LoopCombo {
 public:
  explicit LoopCombo(Kind kind = Kind::lower) : kind_(kind) {}
  LoopCombo(GenSymbol g);  // NOLINT(google-explicit-constructor)

  Kind kind() const { return kind_; }
  const std::map<int, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(int degree) const;

  void add_term(int degree, const Scalar& c);
  LoopCombo shifted(int n) const;  // g_k -> g_{k+n}

  LoopCombo& operator+=(const LoopCombo& o);
  LoopCombo& operator-=(const LoopCombo& o);
  LoopCombo& operator*=(const Scalar& c);
  friend LoopCombo operator+(LoopCombo a, const LoopCombo& b) { return a += b; }
  friend LoopCombo operator-(LoopCombo a, const LoopCombo& b) { return a -= b; }
  friend LoopCombo operator*(LoopCombo a, const Scalar& c) { return a *= c; }
  friend LoopCombo operator*(const Scalar& c, LoopCombo a) { return a *= c; }
  friend bool operator==(const LoopCombo&, const LoopCombo&) = default;

  std::string str() const;

 private:
  Kind kind_;
  std::map<int, Scalar> terms_;
};

// x_m(α) = Σ_k (-1)^k e_k(α) x_{m-k}.
LoopCombo expand_with_params(Kind kind, int m, const ParamSeq& alpha);
ParamSeq compose_seq(const ParamSeq& alpha, const ParamSeq& beta);
ParamSeq repeat_seq(const Scalar& a, int n);  // (a)^n

// ρ_j(a; s) = x_{s-1}(a without a_j); j is 1-based.
LoopCombo rho(Kind kind, const HWParams& p, int j);
std::pair<LoopCombo, LoopCombo> rho_inverse_identity(const HWParams& p, int n);

// Sub-multiset A of â as counts against the distinct parameters.
using Counts = std::vector<int>;
ParamSeq complement_seq(const HWParams& p, const Counts& A);
LoopCombo w_operator(const HWParams& p, const Counts& A);
// w_{j^k}; k ≤ 0 appends -k extra copies of a_j (x_{r-k}(â (a_j)^{-k})).
LoopCombo w_jk(const HWParams& p, int j, int k);

}  // namespace loophw
