#include "loophw/params.hpp"

#include <sstream>
#include <stdexcept>

namespace loophw {

HWParams::HWParams(std::vector<ParamEntry> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].a.is_zero()) throw std::invalid_argument("parameter a must be nonzero");
    if (entries_[i].m < 1) throw std::invalid_argument("multiplicity must be positive");
    for (std::size_t j = 0; j < i; ++j)
      if (entries_[j].a == entries_[i].a)
        throw std::invalid_argument("duplicate parameter " + entries_[i].a.str());
  }
}

int HWParams::r() const {
  int r = 0;
  for (const auto& e : entries_) r += e.m;
  return r;
}

std::vector<Scalar> HWParams::flatten() const {
  std::vector<Scalar> out;
  for (const auto& e : entries_)
    for (int i = 0; i < e.m; ++i) out.push_back(e.a);
  return out;
}

std::vector<Scalar> HWParams::distinct() const {
  std::vector<Scalar> out;
  for (const auto& e : entries_) out.push_back(e.a);
  return out;
}

std::vector<int> HWParams::multiplicities() const {
  std::vector<int> out;
  for (const auto& e : entries_) out.push_back(e.m);
  return out;
}

HWParams HWParams::parse(const std::string& spec) {
  std::vector<ParamEntry> entries;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.rfind(':');
    if (colon == std::string::npos) throw std::invalid_argument("expected a:m, got '" + item + "'");
    Scalar a = Scalar::parse(item.substr(0, colon));
    std::string ms = item.substr(colon + 1);
    std::size_t used = 0;
    int m = 0;
    try {
      m = std::stoi(ms, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad multiplicity in '" + item + "'");
    }
    if (used != ms.size()) throw std::invalid_argument("bad multiplicity in '" + item + "'");
    entries.push_back({a, m});
  }
  if (entries.empty()) throw std::invalid_argument("empty parameter spec");
  return HWParams(std::move(entries));
}

std::string HWParams::str() const {
  std::string out;
  for (const auto& e : entries_) {
    if (!out.empty()) out += ',';
    out += e.a.str() + ":" + std::to_string(e.m);
  }
  return out;
}

HWPoly HWPoly::from_lambda(const std::vector<Scalar>& lambda) {
  if (!lambda.empty() && lambda.back().is_zero())
    throw std::domain_error("highest weight polynomial needs λ_r ≠ 0");
  HWPoly p;
  for (std::size_t k = 0; k < lambda.size(); ++k) p.c_.push_back(k % 2 == 0 ? -lambda[k] : lambda[k]);
  return p;
}

HWPoly HWPoly::from_params(const HWParams& p) {
  std::vector<Scalar> c{Scalar(1)};
  for (const auto& a : p.flatten()) {
    std::vector<Scalar> next(c.size() + 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k] += c[k];
      next[k + 1] -= a * c[k];
    }
    c = std::move(next);
  }
  HWPoly out;
  out.c_ = std::move(c);
  return out;
}

std::vector<Scalar> HWPoly::lambda() const {
  std::vector<Scalar> out;
  for (std::size_t k = 1; k < c_.size(); ++k) out.push_back(k % 2 == 0 ? c_[k] : -c_[k]);
  return out;
}

Scalar HWPoly::operator()(const Scalar& u) const { return poly_eval(c_, u); }

std::string HWPoly::str() const {
  std::string out = c_[0].str();
  for (std::size_t k = 1; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    Scalar mag = c_[k].sign() < 0 ? -c_[k] : c_[k];
    out += c_[k].sign() < 0 ? " - " : " + ";
    if (mag != Scalar(1)) out += mag.str() + "*";
    out += "u";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

Scalar poly_eval(const std::vector<Scalar>& c, const Scalar& u) {
  Scalar acc;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * u + *it;
  return acc;
}

std::vector<Scalar> poly_derivative(const std::vector<Scalar>& c) {
  std::vector<Scalar> out;
  for (std::size_t k = 1; k < c.size(); ++k) out.push_back(c[k] * Scalar(static_cast<long>(k)));
  return out;
}

std::vector<Scalar> elem_sym_all(const std::vector<Scalar>& values) {
  std::vector<Scalar> e(values.size() + 1);
  e[0] = 1;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t k = i + 1; k >= 1; --k) e[k] += values[i] * e[k - 1];
  return e;
}

Scalar elem_sym(const std::vector<Scalar>& values, int k) {
  if (k < 0 || k > static_cast<int>(values.size()))
    throw std::out_of_range("elem_sym: k=" + std::to_string(k) + " outside [0," +
                            std::to_string(values.size()) + "]");
  return elem_sym_all(values)[k];
}

std::vector<Scalar> newton_lambda_from_d(const std::vector<Scalar>& d) {
  std::vector<Scalar> lam{Scalar(1)};
  for (std::size_t n = 1; n <= d.size(); ++n) {
    Scalar acc;
    for (std::size_t k = 1; k <= n; ++k) {
      Scalar term = d[k - 1] * lam[n - k];
      if (k % 2 == 0) acc -= term; else acc += term;
    }
    lam.push_back(acc / Scalar(static_cast<long>(n)));
  }
  lam.erase(lam.begin());
  return lam;
}

Scalar d_from_params(const HWParams& p, int k) {
  Scalar acc;
  for (const auto& e : p.entries()) acc += e.a.pow(k) * Scalar(e.m);
  return acc;
}

Scalar d_alpha(const HWParams& p, const std::vector<Scalar>& alpha, int m) {
  const long n = static_cast<long>(alpha.size());
  Scalar acc;
  for (const auto& e : p.entries()) {
    Scalar term = e.a.pow(m - n);
    for (const auto& al : alpha) term *= e.a - al;
    acc += term * Scalar(e.m);
  }
  return acc;
}

Scalar newton_extend_d(const HWParams& p, const std::vector<Scalar>& lambda, int j) {
  const int r = p.r();
  const auto expected = elem_sym_all(p.flatten());
  if (static_cast<int>(lambda.size()) != r) throw std::invalid_argument("λ must have length r");
  for (int k = 1; k <= r; ++k)
    if (lambda[k - 1] != expected[k])
      throw std::invalid_argument("λ inconsistent with parameters at k=" + std::to_string(k));
  if (r == 0) return Scalar(0);

  // d_1..d_r from λ (inverse of the first Newton formula), d_0 = r.
  auto lam = [&](int k) { return k == 0 ? Scalar(1) : lambda[k - 1]; };
  std::vector<Scalar> d(r + 1);
  d[0] = r;
  for (int n = 1; n <= r; ++n) {
    Scalar acc = lam(n) * Scalar(n);
    for (int k = 1; k < n; ++k) {
      Scalar term = d[k] * lam(n - k);
      if (k % 2 == 0) acc += term; else acc -= term;
    }
    d[n] = (n % 2 == 1) ? acc : -acc;
  }
  // d_{r+1+i} = Σ_{k=1}^{r} (-1)^{r-k} d_{k+i} λ_{r+1-k}; window starts at index lo.
  int target = r + 1 + j;
  int lo = 0;
  std::vector<Scalar> win(d.begin(), d.end());  // win[t] = d_{lo+t}
  auto sgn = [](int e) { return e % 2 == 0 ? Scalar(1) : Scalar(-1); };
  while (lo + static_cast<int>(win.size()) - 1 < target) {
    int i = lo + static_cast<int>(win.size()) - 1 - r;  // next index is r+1+i
    Scalar acc;
    for (int k = 1; k <= r; ++k) acc += sgn(r - k) * win[k + i - lo] * lam(r + 1 - k);
    win.push_back(acc);
  }
  while (lo > target) {
    // Solve the recursion at i = lo-2 for d_{1+i} = d_{lo-1}; its coefficient is (-1)^{r-1} λ_r.
    int i = lo - 2;
    Scalar acc = win[r + 1 + i - lo];
    for (int k = 2; k <= r; ++k) acc -= sgn(r - k) * win[k + i - lo] * lam(r + 1 - k);
    win.insert(win.begin(), acc / (sgn(r - 1) * lam(r)));
    --lo;
  }
  return win[target - lo];
}

std::vector<Scalar> lambda_shifted(const HWParams& p, const Scalar& a) {
  std::vector<Scalar> shifted;
  for (const auto& x : p.flatten()) shifted.push_back(x - a);
  auto e = elem_sym_all(shifted);
  return {e.begin() + 1, e.end()};
}

Scalar binomial_extended(long n, long k) {
  if (k < 0) return Scalar(0);
  Scalar acc(1);
  for (long i = 0; i < k; ++i) acc = acc * Scalar(n - i) / Scalar(i + 1);
  return acc;
}

}  // namespace loophw
