#include "loophw/identities.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace loophw {

namespace {

LoopCombo with_kind(const LoopCombo& c, Kind k) {
  LoopCombo out(k);
  for (const auto& [deg, coef] : c.terms()) out.add_term(deg, coef);
  return out;
}

LoopCombo gen(Kind k, int m, const ParamSeq& alpha = {}) { return expand_with_params(k, m, alpha); }

std::string seq_str(const ParamSeq& a) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ')';
  return os.str();
}

// Divided powers X^{(0)}..X^{(n)}; index t < 0 reads as zero.
class DividedPowers {
 public:
  DividedPowers(const SparseMatrix& x, int n) : zero_(x.rows(), x.cols()) {
    p_.push_back(SparseMatrix::identity(x.rows()));
    for (int t = 1; t <= n; ++t) p_.push_back(p_.back() * x * Scalar(1, t));
  }
  const SparseMatrix& operator[](int t) const { return t < 0 ? zero_ : p_.at(t); }

 private:
  SparseMatrix zero_;
  std::vector<SparseMatrix> p_;
};

class OpCache {
 public:
  explicit OpCache(const ModuleRep& m) : m_(m) {}
  const SparseMatrix& operator()(Kind k, int deg) {
    auto key = std::pair{static_cast<int>(k), deg};
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, m_.op(k, deg)).first;
    return it->second;
  }

 private:
  const ModuleRep& m_;
  std::map<std::pair<int, int>, SparseMatrix> cache_;
};

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Premises x_ℓ^-(α)Ω = 0 with |α| = ℓ used by the vanishing lemmas.
std::vector<ParamSeq> annihilating_sequences(const ModuleRep& m, const Vec& omega, const HWParams& p) {
  std::vector<ParamSeq> out{p.flatten()};
  if (criterion(m, omega, p) && p.s() < p.r()) {
    ParamSeq a = p.distinct();
    std::sort(a.begin(), a.end());
    out.push_back(a);
  }
  return out;
}

}  // namespace

Scalar random_scalar(std::mt19937_64& rng) {
  int num = 0;
  while (num == 0) num = uniform(rng, -9, 9);
  return Scalar(num, uniform(rng, 1, 5));
}

ParamSeq random_seq(std::mt19937_64& rng, int len) {
  ParamSeq out;
  for (int i = 0; i < len; ++i) out.push_back(random_scalar(rng));
  return out;
}

CheckResult check_cdr(const ModuleRep& m, int lo, int hi) {
  CheckResult res{"CDR"};
  OpCache op(m);
  for (int j = lo; j <= hi; ++j) {
    for (int k = lo; k <= hi; ++k) {
      const std::string at = " at j=" + std::to_string(j) + ", k=" + std::to_string(k);
      res.cases += 3;
      if (!(commutator(op(Kind::cartan, j), op(Kind::raise, k)) == op(Kind::raise, j + k) * Scalar(2)))
        res.fail("[h_j, x_k^+] = 2x_{j+k}^+" + at);
      if (!(commutator(op(Kind::cartan, j), op(Kind::lower, k)) == op(Kind::lower, j + k) * Scalar(-2)))
        res.fail("[h_j, x_k^-] = -2x_{j+k}^-" + at);
      if (!(commutator(op(Kind::raise, j), op(Kind::lower, k)) == op(Kind::cartan, j + k)))
        res.fail("[x_j^+, x_k^-] = h_{j+k}" + at);
      if (k < j) continue;
      res.cases += 3;
      if (!commutator(op(Kind::cartan, j), op(Kind::cartan, k)).is_zero()) res.fail("[h_j, h_k] = 0" + at);
      if (!commutator(op(Kind::raise, j), op(Kind::raise, k)).is_zero()) res.fail("[x_j^+, x_k^+] = 0" + at);
      if (!commutator(op(Kind::lower, j), op(Kind::lower, k)).is_zero()) res.fail("[x_j^-, x_k^-] = 0" + at);
    }
  }
  return res;
}

CheckResult check_dfr_ab(const ModuleRep& m, int lo, int hi, std::mt19937_64& rng, int trials) {
  CheckResult res{"defining relations with parameters"};
  for (int t = 0; t < trials; ++t) {
    const ParamSeq alpha = random_seq(rng, uniform(rng, 0, 3));
    const ParamSeq beta = random_seq(rng, uniform(rng, 0, 3));
    const ParamSeq ab = compose_seq(alpha, beta);
    const int l = uniform(rng, lo, hi), k = uniform(rng, lo, hi);
    const std::string at = " at ℓ=" + std::to_string(l) + ", m=" + std::to_string(k) + ", α=" + seq_str(alpha) +
                           ", β=" + seq_str(beta);
    res.cases += 3;
    if (!(commutator(m.op(gen(Kind::raise, l, alpha)), m.op(gen(Kind::lower, k, beta))) ==
          m.op(gen(Kind::cartan, l + k, ab))))
      res.fail("[x_ℓ^+(α), x_m^-(β)] = h_{ℓ+m}(αβ)" + at);
    const SparseMatrix h = m.op(gen(Kind::cartan, l, alpha));
    if (!(commutator(h, m.op(gen(Kind::raise, k, beta))) == m.op(gen(Kind::raise, l + k, ab)) * Scalar(2)))
      res.fail("[h_ℓ(α), x_m^+(β)] = 2x_{ℓ+m}^+(αβ)" + at);
    if (!(commutator(h, m.op(gen(Kind::lower, k, beta))) == m.op(gen(Kind::lower, l + k, ab)) * Scalar(-2)))
      res.fail("[h_ℓ(α), x_m^-(β)] = -2x_{ℓ+m}^-(αβ)" + at);
  }
  return res;
}

CheckResult check_ab_divided(const ModuleRep& m, int tmax, int lo, int hi, std::mt19937_64& rng, int trials) {
  CheckResult res{"divided-power relations"};
  for (int trial = 0; trial < trials; ++trial) {
    const ParamSeq alpha = random_seq(rng, uniform(rng, 0, 2));
    const ParamSeq beta = random_seq(rng, uniform(rng, 0, 2));
    const ParamSeq ab = compose_seq(alpha, beta);
    const int l = uniform(rng, lo, hi), k = uniform(rng, lo, hi);
    const std::string at = " at ℓ=" + std::to_string(l) + ", m=" + std::to_string(k) + ", α=" + seq_str(alpha) +
                           ", β=" + seq_str(beta) + ", t=";
    const SparseMatrix h_ab = m.op(gen(Kind::cartan, l + k, ab));

    // [(x_m^+(α))^{(t)}, x_ℓ^-(β)]
    const DividedPowers xp(m.op(gen(Kind::raise, k, alpha)), tmax);
    const SparseMatrix ym = m.op(gen(Kind::lower, l, beta));
    const SparseMatrix x_aab = m.op(gen(Kind::raise, l + 2 * k, compose_seq(alpha, ab)));
    // [x_ℓ^+(α), (x_m^-(β))^{(t)}]
    const SparseMatrix xl = m.op(gen(Kind::raise, l, alpha));
    const DividedPowers ymd(m.op(gen(Kind::lower, k, beta)), tmax);
    const SparseMatrix y_abb = m.op(gen(Kind::lower, l + 2 * k, compose_seq(ab, beta)));
    // [h_ℓ(α), (x_m^±(β))^{(t)}]
    const SparseMatrix hl = m.op(gen(Kind::cartan, l, alpha));
    const DividedPowers xpd(m.op(gen(Kind::raise, k, beta)), tmax);
    const SparseMatrix xp_ab = m.op(gen(Kind::raise, l + k, ab));
    const SparseMatrix ym_ab = m.op(gen(Kind::lower, l + k, ab));

    for (int t = 0; t <= tmax; ++t) {
      res.cases += 4;
      if (!(commutator(xp[t], ym) == xp[t - 1] * h_ab + x_aab * xp[t - 2]))
        res.fail("[(x^+)^{(t)}, x^-] relation" + at + std::to_string(t));
      if (!(commutator(xl, ymd[t]) == ymd[t - 1] * h_ab - y_abb * ymd[t - 2]))
        res.fail("[x^+, (x^-)^{(t)}] relation" + at + std::to_string(t));
      if (!(commutator(hl, xpd[t]) == xpd[t - 1] * xp_ab * Scalar(2)))
        res.fail("[h, (x^+)^{(t)}] relation" + at + std::to_string(t));
      if (!(commutator(hl, ymd[t]) == ymd[t - 1] * ym_ab * Scalar(-2)))
        res.fail("[h, (x^-)^{(t)}] relation" + at + std::to_string(t));
    }
  }
  return res;
}

CheckResult check_rho_x(const ModuleRep& m, const HWParams& p) {
  CheckResult res{"x_k from ρ_j"};
  for (int n = 1; n <= p.s(); ++n) {
    const auto [lhs, rhs] = rho_inverse_identity(p, n);
    res.cases += 3;
    if (!(lhs == rhs)) res.fail("combo identity at n=" + std::to_string(n));
    if (!(m.op(lhs) == m.op(rhs))) res.fail("lowering matrix identity at n=" + std::to_string(n));
    if (!(m.op(with_kind(lhs, Kind::raise)) == m.op(with_kind(rhs, Kind::raise))))
      res.fail("raising matrix identity at n=" + std::to_string(n));
  }
  return res;
}

CheckResult check_ind_ell(const ModuleRep& m, int nmax, const std::vector<int>& ells, const ParamSeq& as,
                          bool plain_h1) {
  CheckResult res{plain_h1 ? "recursion with plain h_1" : "recursion for (x^+)^{(n)}(x^-(a))^{(n+1)}"};
  for (const Scalar& a : as) {
    const SparseMatrix h1 = plain_h1 ? m.op(Kind::cartan, 1) : m.op(gen(Kind::cartan, 1, {a}));
    for (int l : ells) {
      const SparseMatrix x = m.op(Kind::raise, l);
      const SparseMatrix y = m.op(gen(Kind::lower, 1 - l, {a}));
      const DividedPowers xd(x, nmax), yd(y, nmax + 1);
      for (int n = 0; n <= nmax; ++n) {
        ++res.cases;
        const SparseMatrix lhs = xd[n] * yd[n + 1];
        SparseMatrix rhs = y * xd[n] * yd[n];
        rhs += commutator(h1, xd[n - 1] * yd[n]) * Scalar(1, 2);
        rhs -= xd[n - 1] * yd[n + 1] * x;
        if (!(lhs == rhs))
          res.fail("n=" + std::to_string(n) + ", ℓ=" + std::to_string(l) + ", a=" + a.str());
      }
    }
  }
  return res;
}

CheckResult check_sum_identities(const ModuleRep& m, const Vec& omega, const HWParams& p, int nmax) {
  CheckResult res{"commutators [h_n, w_{j^k}]"};
  for (int j = 1; j <= p.s(); ++j) {
    const Scalar& aj = p.a(j);
    for (int k = 1; k <= p.m(j); ++k) {
      const LoopCombo w = w_jk(p, j, k);
      const Vec wv = m.act(w, omega);
      const SparseMatrix wm = m.op(w);
      for (int n = 1; n <= nmax; ++n) {
        const std::string at = " at j=" + std::to_string(j) + ", k=" + std::to_string(k) + ", n=" + std::to_string(n);
        // Operator form: the full binomial sum, extending w_{j^k} to k ≤ 0.
        LoopCombo sum_a(Kind::lower);
        for (int t = 0; t <= n; ++t) sum_a += w_jk(p, j, k - t) * (binomial_extended(n, t) * aj.pow(n - t));
        res.cases += 2;
        if (!(w.shifted(n) == sum_a)) res.fail("combo form" + at);
        if (!(commutator(m.op(Kind::cartan, n), wm) == m.op(sum_a) * Scalar(-2))) res.fail("matrix form" + at);

        for (int sign : {1, -1}) {
          const int deg = sign * n;
          Vec lhs = m.act(GenSymbol{Kind::cartan, deg}, wv);
          axpy(lhs, -d_from_params(p, deg), wv);
          Vec rhs(m.dim());
          const int tmax = sign > 0 ? std::min(n, k - 1) : k - 1;
          for (int t = 0; t <= tmax; ++t)
            axpy(rhs, Scalar(-2) * binomial_extended(deg, t) * aj.pow(deg - t), m.act(w_jk(p, j, k - t), omega));
          ++res.cases;
          if (lhs != rhs) res.fail(std::string(sign > 0 ? "on Ω" : "on Ω, negative degree") + at);
        }
      }
    }
  }
  return res;
}

CheckResult check_lemma_abc(const ModuleRep& m, const Vec& omega, const HWParams& p, int nmax, const ParamSeq& as) {
  CheckResult res{"recursions A_n, B_n, C_n on Ω"};
  const int r = p.r();
  for (const Scalar& a : as) {
    const auto lam = lambda_shifted(p, a);
    for (int l : {-1, 0, 1}) {
      const LoopCombo X(GenSymbol{Kind::raise, l});
      const LoopCombo Y = gen(Kind::lower, 1 - l, {a});
      std::vector<Vec> yv{omega};
      for (int n = 1; n <= nmax; ++n) yv.push_back(scaled(m.act(Y, yv.back()), Scalar(1, n)));
      std::vector<Vec> pq;  // X^{(q)} Y^{(q)} Ω
      for (int q = 0; q <= nmax; ++q) pq.push_back(m.act_divided(X, q, yv[q]));
      const std::string tag = ", ℓ=" + std::to_string(l) + ", a=" + a.str();

      for (int n = 1; n <= nmax; ++n) {
        Vec rhs_a(m.dim()), rhs_b(m.dim());
        for (int k = 1; k <= n; ++k) {
          const Scalar sg((k - 1) % 2 ? -1 : 1);
          axpy(rhs_a, sg, m.act(gen(Kind::lower, k - l, repeat_seq(a, k)), pq[n - k]));
          axpy(rhs_b, sg * Scalar(1, n), m.act(gen(Kind::cartan, k, repeat_seq(a, k)), pq[n - k]));
        }
        res.cases += 3;
        if (m.act_divided(X, n - 1, yv[n]) != rhs_a) res.fail("A_n at n=" + std::to_string(n) + tag);
        if (pq[n] != rhs_b) res.fail("B_n at n=" + std::to_string(n) + tag);
        const Scalar want = n <= r ? lam[n - 1] : Scalar(0);
        if (pq[n] != scaled(omega, want)) res.fail("λ_n(a) eigenvalue at n=" + std::to_string(n) + tag);
      }
      for (int jdeg = -2; jdeg <= r + 2; ++jdeg) {
        const LoopCombo h = gen(Kind::cartan, jdeg, {a});
        const Scalar c = eigenvalue_on(omega, m.act(h, omega));
        for (int q = 0; q <= nmax; ++q) {
          ++res.cases;
          if (m.act(h, pq[q]) != scaled(pq[q], c))
            res.fail("C_n at j=" + std::to_string(jdeg) + ", m=" + std::to_string(q) + tag);
        }
      }
    }
  }
  return res;
}

CheckResult check_reduction_relations(const ModuleRep& m, const Vec& omega, const HWParams& p, int lo, int hi,
                                      const ParamSeq& as, bool printed_lhs) {
  CheckResult res{printed_lhs ? "shifted reduction, printed left side" : "reduction relations"};
  const int r = p.r();
  const ParamSeq hat = p.flatten();
  if (!printed_lhs) {
    for (int n = lo; n <= hi; ++n) {
      ++res.cases;
      if (!is_zero(m.act(gen(Kind::lower, n, hat), omega))) res.fail("x_n^-(â)Ω ≠ 0 at n=" + std::to_string(n));
    }
    const auto lam = measure_lambda(m, omega, r);
    for (int j = lo - r - 1; j <= hi - r - 1; ++j) {
      ++res.cases;
      if (newton_extend_d(p, lam, j) != measure_d(m, omega, r + 1 + j))
        res.fail("d_{r+1+j} recursion at j=" + std::to_string(j));
    }
  }
  for (const Scalar& a : as) {
    const auto lam = lambda_shifted(p, a);
    for (int l : {0, 1, 2}) {
      const ParamSeq left = printed_lhs ? ParamSeq{a} : repeat_seq(a, r + 1);
      const Vec lhs = m.act(gen(Kind::lower, r + 1 - l, left), omega);
      Vec rhs(m.dim());
      for (int j = 1; j <= r; ++j)
        axpy(rhs, lam[r - j] * Scalar((r - j) % 2 ? -1 : 1), m.act(gen(Kind::lower, j - l, repeat_seq(a, j)), omega));
      ++res.cases;
      if (lhs != rhs) res.fail("shifted relation at ℓ=" + std::to_string(l) + ", a=" + a.str());
    }
  }
  return res;
}

CheckResult check_vanish_ab(const ModuleRep& m, const Vec& omega, const HWParams& p, std::mt19937_64& rng, int lo,
                            int hi) {
  CheckResult res{"vanishing for supersequences"};
  for (const ParamSeq& A : annihilating_sequences(m, omega, p)) {
    const int l = static_cast<int>(A.size());
    ++res.cases;
    if (!is_zero(m.act(gen(Kind::lower, l, A), omega))) {
      res.fail("premise fails for A=" + seq_str(A));
      continue;
    }
    for (int extra = 1; extra <= 2; ++extra) {
      ParamSeq B = compose_seq(random_seq(rng, extra), A);
      if (extra == 2) B.push_back(p.a(uniform(rng, 1, p.s())));
      std::shuffle(B.begin(), B.end(), rng);
      for (int n = lo; n <= hi; ++n) {
        ++res.cases;
        if (!is_zero(m.act(gen(Kind::lower, n, B), omega)))
          res.fail("x_m^-(B)Ω ≠ 0 for B=" + seq_str(B) + ", m=" + std::to_string(n));
      }
    }
  }
  return res;
}

CheckResult check_ajbeta(const ModuleRep& m, const Vec& omega, const HWParams& p, std::mt19937_64& rng) {
  CheckResult res{"x(α_j β)Ω reduction"};
  for (const ParamSeq& alpha : annihilating_sequences(m, omega, p)) {
    const int l = static_cast<int>(alpha.size());
    for (int j = 0; j < l; ++j) {
      ParamSeq aj = alpha;
      aj.erase(aj.begin() + j);
      const Vec base = m.act(gen(Kind::lower, l - 1, aj), omega);
      for (int n = 1; n <= 3; ++n) {
        const ParamSeq beta = random_seq(rng, n);
        Scalar c(1);
        for (const auto& b : beta) c *= alpha[j] - b;
        ++res.cases;
        if (m.act(gen(Kind::lower, l + n - 1, compose_seq(aj, beta)), omega) != scaled(base, c))
          res.fail("α=" + seq_str(alpha) + ", j=" + std::to_string(j + 1) + ", β=" + seq_str(beta));
      }
    }
  }
  return res;
}

CheckResult check_xn(const ModuleRep& m, const Vec& omega, const HWParams& p, int lo, int hi) {
  CheckResult res{"x_n^+ kills (ρ_j^-)^{(m_j+1)}Ω"};
  if (!criterion(m, omega, p)) return res;
  for (int j = 1; j <= p.s(); ++j) {
    Scalar prod(1);
    for (int k = 1; k <= p.s(); ++k)
      if (k != j) prod *= p.a(j) - p.a(k);
    ParamSeq aj;
    for (int k = 1; k <= p.s(); ++k)
      if (k != j) aj.push_back(p.a(k));
    ++res.cases;
    if (m.act(gen(Kind::cartan, p.s() - 1, aj), omega) != scaled(omega, prod * Scalar(p.m(j))))
      res.fail("h_{s-1}(a_j)Ω eigenvalue at j=" + std::to_string(j));
    const Vec v = m.act_divided(rho(Kind::lower, p, j), p.m(j) + 1, omega);
    for (int n = lo; n <= hi; ++n) {
      ++res.cases;
      if (!is_zero(m.act(GenSymbol{Kind::raise, n}, v)))
        res.fail("j=" + std::to_string(j) + ", n=" + std::to_string(n));
    }
  }
  return res;
}

CheckResult check_one_dim(const ModuleRep& m, const Vec& omega, const HWParams& p) {
  CheckResult res{"lowest weight space is a line", 1};
  const Subspace cyc = submodule_closure(m, {omega});
  const auto wd = weight_decomposition(restrict_to(m, cyc));
  auto it = wd.find(-p.r());
  if (it == wd.end() || it->second.dim() != 1) res.fail("weight -r space has dim " +
                                                       std::to_string(it == wd.end() ? 0 : it->second.dim()));
  if (wd.rbegin()->first != -p.r()) res.fail("lowest weight is not -r");
  return res;
}

CheckResult check_uo(const ModuleRep& m, const Vec& omega, const HWParams& p, int lo, int hi) {
  CheckResult res{"(x_k^-)^r Ω ≠ 0 = (x_k^-)^{r+1} Ω"};
  for (int k = lo; k <= hi; ++k) {
    const LoopCombo y(GenSymbol{Kind::lower, k});
    const Vec v = m.act_divided(y, p.r(), omega);
    res.cases += 2;
    if (is_zero(v)) res.fail("r-th power vanishes at k=" + std::to_string(k));
    if (!is_zero(m.act(y, v))) res.fail("(r+1)-th power survives at k=" + std::to_string(k));
  }
  return res;
}

CheckResult check_lambda_r(const ModuleRep& m, const Vec& omega, const HWParams& p) {
  CheckResult res{"λ_r ≠ 0", 1};
  if (p.r() > 0 && measure_lambda(m, omega, p.r()).back().is_zero()) res.fail("λ_r = 0");
  return res;
}

CheckResult check_basis(const ModuleRep& m, const Vec& omega, const HWParams& p) {
  CheckResult res{"ρ-monomial basis", 2};
  if (!basis_check(m, omega, p)) res.fail("divided ρ monomials are not a basis of UΩ");
  if (submodule_closure(m, {omega}).dim() != dim_formula(p)) res.fail("dim UΩ ≠ Π(m_j+1)");
  return res;
}

CheckResult check_power_vanishing(const ModuleRep& m, const Vec& omega, const HWParams& p) {
  CheckResult res{"(ρ_j^-)^{m_j+1}Ω = 0", p.s()};
  if (!power_vanishing_check(m, omega, p)) res.fail("some power survives");
  return res;
}

CheckResult check_inner_products(const ModuleRep& m, const Vec& omega, const HWParams& p) {
  CheckResult res{"inner products of ρ monomials"};
  const int s = p.s();
  std::vector<std::vector<int>> counts{{}};
  for (int j = 1; j <= s; ++j) {
    std::vector<std::vector<int>> next;
    for (const auto& c : counts)
      for (int k = 0; k <= p.m(j); ++k) {
        auto d = c;
        d.push_back(k);
        next.push_back(std::move(d));
      }
    counts = std::move(next);
  }
  auto total = [](const std::vector<int>& c) {
    int t = 0;
    for (int x : c) t += x;
    return t;
  };
  for (const auto& k : counts) {
    const Vec v = rho_lower_product(m, omega, p, k);
    for (const auto& l : counts) {
      if (total(l) != total(k)) continue;
      Vec u = v;
      for (int j = s; j >= 1; --j) u = m.act_divided(rho(Kind::raise, p, j), l[j - 1], std::move(u));
      ++res.cases;
      const Scalar want = inner_product_expected(p, l, k);
      if (u != scaled(omega, want)) {
        std::ostringstream os;
        os << "ℓ=(";
        for (int x : l) os << x << ' ';
        os << ") k=(";
        for (int x : k) os << x << ' ';
        os << ") expected " << want;
        res.fail(os.str());
      }
    }
  }
  return res;
}

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

SuiteResult run_identity_suite(const ZooEntry& z, const SuiteOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  const auto& m = z.module;
  const auto& p = z.params;
  const int r = p.r(), lo = -opt.window, hi = r + opt.window;
  const ParamSeq as{Scalar(0), p.a(1), random_scalar(rng)};
  SuiteResult out{z.name, {}};
  out.checks.push_back(check_cdr(m, lo, hi));
  out.checks.push_back(check_dfr_ab(m, lo, hi, rng, opt.trials));
  out.checks.push_back(check_ab_divided(m, r + 1, lo, hi, rng, opt.trials));
  out.checks.push_back(check_rho_x(m, p));
  out.checks.push_back(check_ind_ell(m, r, {-1, 0, 1, 2}, {random_scalar(rng)}));
  out.checks.push_back(check_sum_identities(m, z.omega, p, 4));
  out.checks.push_back(check_lemma_abc(m, z.omega, p, r + 1, as));
  out.checks.push_back(check_reduction_relations(m, z.omega, p, lo, hi + 1, as));
  out.checks.push_back(check_vanish_ab(m, z.omega, p, rng, lo, hi));
  out.checks.push_back(check_ajbeta(m, z.omega, p, rng));
  out.checks.push_back(check_xn(m, z.omega, p, lo, hi));
  return out;
}

SuiteResult run_structural_suite(const ZooEntry& z, const SuiteOptions& opt) {
  const auto& m = z.module;
  const auto& p = z.params;
  SuiteResult out{z.name, {}};
  out.checks.push_back(check_one_dim(m, z.omega, p));
  out.checks.push_back(check_uo(m, z.omega, p, -opt.window, p.r() + opt.window));
  out.checks.push_back(check_lambda_r(m, z.omega, p));
  if (criterion(m, z.omega, p)) {
    out.checks.push_back(check_basis(m, z.omega, p));
    out.checks.push_back(check_power_vanishing(m, z.omega, p));
    out.checks.push_back(check_inner_products(m, z.omega, p));
  }
  return out;
}

std::vector<ZooEntry> module_zoo(std::size_t max_dim) {
  std::vector<ZooEntry> zoo;
  auto add = [&](std::string name, std::size_t dim, const HWParams& p, const std::function<ModuleRep()>& make) {
    if (dim > max_dim) return;
    ModuleRep m = make();
    Vec omega = unit_vec(m.dim(), 0);
    zoo.push_back({std::move(name), std::move(m), std::move(omega), p});
  };
  auto weyl_quotient = [&](const std::string& label, std::size_t dim, const std::string& params,
                           const std::vector<std::vector<std::pair<int, int>>>& gens) {
    const HWParams p = HWParams::parse(params);
    if (dim > max_dim) return;
    const ModuleRep w = weyl_module(p);
    const Vec omega = unit_vec(w.dim(), 0);
    std::vector<Vec> vs;
    for (const auto& product : gens) {
      Vec v = omega;
      for (auto it = product.rbegin(); it != product.rend(); ++it) v = w.act(w_jk(p, it->first, it->second), v);
      vs.push_back(std::move(v));
    }
    const Subspace sub = submodule_closure(w, vs);
    zoo.push_back({label, quotient(w, sub), quotient_project(sub, omega), p});
  };

  add("eval(2,1)", 2, HWParams::parse("2:1"), [] { return eval_module(Scalar(2), 1); });
  add("eval(-3/2,3)", 4, HWParams::parse("-3/2:3"), [] { return eval_module(Scalar(-3, 2), 3); });
  add("packed(2:2,3:1)", 6, HWParams::parse("2:2,3:1"), [] { return packed_module(HWParams::parse("2:2,3:1")); });
  add("weyl(2:2,3:1)", 8, HWParams::parse("2:2,3:1"), [] { return weyl_module(HWParams::parse("2:2,3:1")); });
  add("weyl(2:1,3:1,5:1)", 8, HWParams::parse("2:1,3:1,5:1"),
      [] { return weyl_module(HWParams::parse("2:1,3:1,5:1")); });
  add("weyl(2:2,3:2)", 16, HWParams::parse("2:2,3:2"), [] { return weyl_module(HWParams::parse("2:2,3:2")); });
  weyl_quotient("weyl(2:2,3:2)/w1w2", 16, "2:2,3:2", {{{1, 1}, {2, 1}}});
  weyl_quotient("weyl(2:2,3:2)/w2", 16, "2:2,3:2", {{{2, 1}}});
  weyl_quotient("weyl(2:2,3:2)/w1", 16, "2:2,3:2", {{{1, 1}}});
  add("packed(2:2,3:2)", 9, HWParams::parse("2:2,3:2"), [] { return packed_module(HWParams::parse("2:2,3:2")); });
  add("weyl(3:3)", 8, HWParams::parse("3:3"), [] { return weyl_module(HWParams::parse("3:3")); });
  add("cyclic(eval(2,1)*W_2(2)*eval(1/3,1))", 16, HWParams::parse("2:3,1/3:1"), [] {
    const ModuleRep t = tensor({eval_module(Scalar(2), 1), local_weyl_module(Scalar(2), 2), eval_module(Scalar(1, 3), 1)});
    return restrict_to(t, submodule_closure(t, {unit_vec(t.dim(), 0)}));
  });
  add("packed(2:3,3:3)", 16, HWParams::parse("2:3,3:3"), [] { return packed_module(HWParams::parse("2:3,3:3")); });
  add("weyl(2:4)", 16, HWParams::parse("2:4"), [] { return weyl_module(HWParams::parse("2:4")); });
  add("weyl(2:3,3:3)", 64, HWParams::parse("2:3,3:3"), [] { return weyl_module(HWParams::parse("2:3,3:3")); });
  add("weyl(2:5,3:1)", 64, HWParams::parse("2:5,3:1"), [] { return weyl_module(HWParams::parse("2:5,3:1")); });
  return zoo;
}

}  // namespace loophw
