#include "loophw/loop_ops.hpp"

#include <stdexcept>

namespace loophw {

std::string to_string(Kind k) {
  switch (k) {
    case Kind::raise: return "raise";
    case Kind::lower: return "lower";
    case Kind::cartan: return "cartan";
  }
  return "?";
}

Kind kind_from_string(const std::string& s) {
  if (s == "raise") return Kind::raise;
  if (s == "lower") return Kind::lower;
  if (s == "cartan") return Kind::cartan;
  throw std::invalid_argument("unknown generator kind '" + s + "'");
}

LoopCombo::LoopCombo(GenSymbol g) : kind_(g.kind) { terms_[g.degree] = 1; }

Scalar LoopCombo::coeff(int degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void LoopCombo::add_term(int degree, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(degree, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LoopCombo LoopCombo::shifted(int n) const {
  LoopCombo out(kind_);
  for (const auto& [d, c] : terms_) out.terms_[d + n] = c;
  return out;
}

LoopCombo& LoopCombo::operator+=(const LoopCombo& o) {
  if (o.kind_ != kind_ && !o.is_zero()) throw std::invalid_argument("mixed-kind LoopCombo sum");
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

LoopCombo& LoopCombo::operator-=(const LoopCombo& o) {
  if (o.kind_ != kind_ && !o.is_zero()) throw std::invalid_argument("mixed-kind LoopCombo sum");
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

LoopCombo& LoopCombo::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, v] : terms_) v *= c;
  return *this;
}

std::string LoopCombo::str() const {
  const char* sym = kind_ == Kind::raise ? "x+" : kind_ == Kind::lower ? "x-" : "h";
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + it->second.str() + ")" + sym + "_" + std::to_string(it->first);
  }
  return out;
}

LoopCombo expand_with_params(Kind kind, int m, const ParamSeq& alpha) {
  auto e = elem_sym_all(alpha);
  LoopCombo out(kind);
  for (std::size_t k = 0; k < e.size(); ++k) out.add_term(m - static_cast<int>(k), k % 2 ? -e[k] : e[k]);
  return out;
}

ParamSeq compose_seq(const ParamSeq& alpha, const ParamSeq& beta) {
  ParamSeq out = alpha;
  out.insert(out.end(), beta.begin(), beta.end());
  return out;
}

ParamSeq repeat_seq(const Scalar& a, int n) { return ParamSeq(n < 0 ? 0 : n, a); }

LoopCombo rho(Kind kind, const HWParams& p, int j) {
  if (j < 1 || j > p.s()) throw std::out_of_range("rho: j=" + std::to_string(j) + " outside [1,s]");
  ParamSeq omit;
  for (int t = 1; t <= p.s(); ++t)
    if (t != j) omit.push_back(p.a(t));
  return expand_with_params(kind, p.s() - 1, omit);
}

std::pair<LoopCombo, LoopCombo> rho_inverse_identity(const HWParams& p, int n) {
  const int s = p.s();
  if (n < 1 || n > s) throw std::out_of_range("rho_inverse_identity: n outside [1,s]");
  // HWParams guarantees distinct entries, so the denominators never vanish.
  LoopCombo lhs(Kind::lower);
  for (int j = 1; j <= n; ++j) {
    Scalar denom(1);
    for (int k = 1; k <= n; ++k)
      if (k != j) denom *= p.a(k) - p.a(j);
    lhs += rho(Kind::lower, p, j) * denom.inverse();
  }
  if ((n - 1) % 2 == 1) lhs *= Scalar(-1);
  ParamSeq tail;
  for (int k = n + 1; k <= s; ++k) tail.push_back(p.a(k));
  return {lhs, expand_with_params(Kind::lower, s - n, tail)};
}

ParamSeq complement_seq(const HWParams& p, const Counts& A) {
  if (static_cast<int>(A.size()) != p.s()) throw std::invalid_argument("counts must have length s");
  ParamSeq out;
  for (int j = 1; j <= p.s(); ++j) {
    int c = A[j - 1];
    if (c < 0 || c > p.m(j))
      throw std::invalid_argument("A is not a sub-multiset of â at j=" + std::to_string(j));
    for (int i = 0; i < p.m(j) - c; ++i) out.push_back(p.a(j));
  }
  return out;
}

LoopCombo w_operator(const HWParams& p, const Counts& A) {
  int size = 0;
  for (int c : A) size += c;
  return expand_with_params(Kind::lower, p.r() - size, complement_seq(p, A));
}

LoopCombo w_jk(const HWParams& p, int j, int k) {
  if (j < 1 || j > p.s()) throw std::out_of_range("w: j outside [1,s]");
  if (k > p.m(j)) throw std::out_of_range("w: k exceeds m_j");
  if (k >= 0) {
    Counts A(p.s(), 0);
    A[j - 1] = k;
    return w_operator(p, A);
  }
  return expand_with_params(Kind::lower, p.r() - k, compose_seq(p.flatten(), repeat_seq(p.a(j), -k)));
}

}  // namespace loophw
