#include "loophw/analysis.hpp"

#include <algorithm>
#include <string>

namespace loophw {

namespace {

std::size_t first_nonzero(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return i;
  return v.size();
}

ParamSeq sorted_distinct(const HWParams& p) {
  ParamSeq a = p.distinct();
  std::sort(a.begin(), a.end());
  return a;
}

}  // namespace

Scalar eigenvalue_on(const Vec& omega, const Vec& image) {
  const std::size_t i = first_nonzero(omega);
  if (i == omega.size()) throw NotHighestWeight("zero vector has no eigenvalue");
  Scalar c = image[i] / omega[i];
  for (std::size_t j = 0; j < omega.size(); ++j)
    if (image[j] != c * omega[j]) throw NotHighestWeight("vector is not an eigenvector");
  return c;
}

bool is_highest_weight(const ModuleRep& m, const Vec& omega) {
  if (is_zero(omega)) return false;
  for (const auto& c : m.components()) {
    for (const auto& x : c.e)
      if (!is_zero(x.apply(omega))) return false;
    for (const auto& x : c.h) {
      try {
        eigenvalue_on(omega, x.apply(omega));
      } catch (const NotHighestWeight&) {
        return false;
      }
    }
  }
  return true;
}

Scalar measure_d(const ModuleRep& m, const Vec& omega, int k) {
  return eigenvalue_on(omega, m.act(GenSymbol{Kind::cartan, k}, omega));
}

std::vector<Scalar> measure_lambda(const ModuleRep& m, const Vec& omega, int nmax, int ell, const Scalar& a) {
  const LoopCombo X(GenSymbol{Kind::raise, ell});
  const LoopCombo Y = expand_with_params(Kind::lower, 1 - ell, {a});
  std::vector<Scalar> out;
  Vec y = omega;
  for (int n = 1; n <= nmax; ++n) {
    y = scaled(m.act(Y, y), Scalar(1, n));
    out.push_back(eigenvalue_on(omega, m.act_divided(X, n, y)));
  }
  return out;
}

HWReport analyze(const ModuleRep& m, const Vec& omega, const HWParams& expected) {
  if (!is_highest_weight(m, omega)) throw NotHighestWeight("omega is not a highest weight vector");
  HWReport rep;
  Scalar d0 = measure_d(m, omega, 0);
  if (!d0.is_integer() || d0.sign() < 0) throw NotHighestWeight("h_0 eigenvalue is not a nonnegative integer");
  rep.r = static_cast<int>(mpz_class(d0.raw().get_num()).get_si());
  for (int k = rep.d_lo; k <= rep.r; ++k) rep.d.push_back(measure_d(m, omega, k));

  rep.lambda = measure_lambda(m, omega, rep.r, 0);
  for (int ell : {-1, 1, 2})
    if (measure_lambda(m, omega, rep.r, ell) != rep.lambda)
      throw Discrepancy("λ from ℓ=" + std::to_string(ell) + " disagrees with ℓ=0");
  std::vector<Scalar> d_pos(rep.d.begin() + (1 - rep.d_lo), rep.d.end());
  if (newton_lambda_from_d(d_pos) != rep.lambda) throw Discrepancy("λ disagrees with Newton's formula on d_k");
  if (rep.r > 0 && rep.lambda.back().is_zero()) throw Discrepancy("λ_r vanishes");

  rep.poly = HWPoly::from_lambda(rep.lambda);
  HWPoly want = HWPoly::from_params(expected);
  if (!(rep.poly == want))
    throw ParameterMismatch("measured P(u) = " + rep.poly.str() + ", expected P(u) = " + want.str());
  rep.params = expected;

  rep.criterion_holds = criterion(m, omega, expected);
  rep.dim_formula = dim_formula(expected);
  Subspace cyc = submodule_closure(m, {omega});
  rep.actual_dim = cyc.dim();
  if (cyc.dim() == m.dim()) {
    rep.oracle_irreducible = oracle_irreducible(m, omega);
  } else {
    rep.oracle_irreducible = oracle_irreducible(restrict_to(m, cyc), restrict_project(cyc, omega));
  }
  return rep;
}

bool check_reduction(const ModuleRep& m, const Vec& omega, const HWParams& p) {
  const ParamSeq hat = p.flatten();
  for (int n = -2; n <= p.r() + 3; ++n)
    if (!is_zero(m.act(expand_with_params(Kind::lower, n, hat), omega))) return false;
  return true;
}

bool check_reduction_shifted(const ModuleRep& m, const Vec& omega, const HWParams& p, const Scalar& a) {
  const int r = p.r();
  const auto lam = lambda_shifted(p, a);
  for (int ell : {0, 1, 2}) {
    Vec lhs = m.act(expand_with_params(Kind::lower, r + 1 - ell, repeat_seq(a, r + 1)), omega);
    Vec rhs(m.dim());
    for (int j = 1; j <= r; ++j) {
      Scalar c = lam[r - j] * Scalar((r - j) % 2 ? -1 : 1);
      axpy(rhs, c, m.act(expand_with_params(Kind::lower, j - ell, repeat_seq(a, j)), omega));
    }
    if (lhs != rhs) return false;
  }
  return true;
}

bool criterion(const ModuleRep& m, const Vec& omega, const HWParams& p) {
  return is_zero(m.act(expand_with_params(Kind::lower, p.s(), sorted_distinct(p)), omega));
}

bool oracle_irreducible(const ModuleRep& m, const Vec& omega) {
  if (submodule_closure(m, {omega}).dim() != m.dim()) throw ScopeError("omega does not generate the module");
  std::size_t total = 0;
  bool has_omega = false;
  for (const auto& [w, sub] : singular_vectors(m)) {
    total += sub.dim();
    if (sub.contains(omega)) has_omega = true;
  }
  return total == 1 && has_omega;
}

std::uint64_t dim_formula(const HWParams& p) {
  std::uint64_t d = 1;
  for (const auto& e : p.entries()) d *= static_cast<std::uint64_t>(e.m) + 1;
  return d;
}

Vec rho_lower_product(const ModuleRep& m, const Vec& omega, const HWParams& p, const std::vector<int>& k) {
  Vec v = omega;
  for (int j = p.s(); j >= 1; --j) v = m.act_divided(rho(Kind::lower, p, j), k[j - 1], std::move(v));
  return v;
}

Scalar inner_product_check(const ModuleRep& m, const Vec& omega, const HWParams& p, const std::vector<int>& ell,
                           const std::vector<int>& k) {
  if (static_cast<int>(ell.size()) != p.s() || static_cast<int>(k.size()) != p.s())
    throw std::invalid_argument("inner product: count vectors must have length s");
  int sl = 0, sk = 0;
  for (int x : ell) sl += x;
  for (int x : k) sk += x;
  if (sl != sk) throw std::invalid_argument("inner product: Σℓ must equal Σk");
  if (!criterion(m, omega, p)) throw std::invalid_argument("inner product: criterion does not hold");
  Vec v = rho_lower_product(m, omega, p, k);
  for (int j = p.s(); j >= 1; --j) v = m.act_divided(rho(Kind::raise, p, j), ell[j - 1], std::move(v));
  try {
    return eigenvalue_on(omega, v);
  } catch (const NotHighestWeight&) {
    throw Discrepancy("inner product image is not a multiple of omega");
  }
}

Scalar inner_product_expected(const HWParams& p, const std::vector<int>& ell, const std::vector<int>& k) {
  Scalar out(1);
  for (int j = 1; j <= p.s(); ++j) {
    if (ell[j - 1] != k[j - 1]) return Scalar(0);
    out *= binomial_extended(p.m(j), k[j - 1]);
    for (int t = 1; t <= p.s(); ++t)
      if (t != j) out *= (p.a(j) - p.a(t)).pow(2 * k[j - 1]);
  }
  return out;
}

bool basis_check(const ModuleRep& m, const Vec& omega, const HWParams& p) {
  Subspace cyc = submodule_closure(m, {omega});
  Subspace span(m.dim());
  std::vector<int> k(p.s(), 0);
  std::size_t count = 0;
  while (true) {
    Vec v = rho_lower_product(m, omega, p, k);
    if (!cyc.contains(v) || !span.insert(v)) return false;
    ++count;
    int j = 0;
    while (j < p.s() && k[j] == p.m(j + 1)) k[j++] = 0;
    if (j == p.s()) break;
    ++k[j];
  }
  return count == dim_formula(p) && span.dim() == cyc.dim();
}

bool power_vanishing_check(const ModuleRep& m, const Vec& omega, const HWParams& p) {
  for (int j = 1; j <= p.s(); ++j)
    if (!is_zero(m.act_divided(rho(Kind::lower, p, j), p.m(j) + 1, omega))) return false;
  return true;
}

}  // namespace loophw
