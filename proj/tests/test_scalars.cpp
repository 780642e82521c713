#include <doctest.h>

#include <random>

#include "loophw/params.hpp"

using namespace loophw;

namespace {

// Power sums Σ â^k computed directly, independent of d_from_params.
Scalar power_sum(const std::vector<Scalar>& xs, int k) {
  Scalar s = 0;
  for (const auto& x : xs) {
    Scalar t = 1;
    for (int i = 0; i < std::abs(k); ++i) t *= x;
    s += k >= 0 ? t : t.inverse();
  }
  return s;
}

// Elementary symmetric functions by subset enumeration.
Scalar brute_elem_sym(const std::vector<Scalar>& xs, int k) {
  Scalar total = 0;
  const int n = static_cast<int>(xs.size());
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    Scalar p = 1;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) p *= xs[i];
    total += p;
  }
  return total;
}

HWParams random_params(std::mt19937_64& rng, int max_s = 3, int max_m = 3) {
  std::uniform_int_distribution<int> s_dist(1, max_s), m_dist(1, max_m), num(-9, 9), den(1, 5);
  std::vector<ParamEntry> entries;
  const int s = s_dist(rng);
  while (static_cast<int>(entries.size()) < s) {
    int n = num(rng);
    if (n == 0) continue;
    Scalar a(n, den(rng));
    bool dup = false;
    for (const auto& e : entries) dup = dup || e.a == a;
    if (!dup) entries.push_back({a, m_dist(rng)});
  }
  return HWParams(entries);
}

}  // namespace

TEST_SUITE("scalars") {
  TEST_CASE("Scalar is canonical and exact") {
    CHECK(Scalar(6, 4) == Scalar(3, 2));
    CHECK(Scalar(3, -6).str() == "-1/2");
    CHECK(Scalar::parse("-10/4") == Scalar(-5, 2));
    CHECK(Scalar::parse("7") == Scalar(7));
    CHECK((Scalar(1, 3) + Scalar(1, 6)) == Scalar(1, 2));
    CHECK(Scalar(2).pow(-3) == Scalar(1, 8));
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
    CHECK_THROWS_AS(Scalar::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Scalar::parse("abc"), std::invalid_argument);
  }

  TEST_CASE("elem_sym examples") {
    const std::vector<Scalar> v{2, 2, 3};
    CHECK(elem_sym(v, 0) == 1);
    CHECK(elem_sym(v, 1) == 7);
    CHECK(elem_sym(v, 3) == 12);
    CHECK_THROWS_AS(elem_sym(v, 4), std::out_of_range);
    CHECK_THROWS_AS(elem_sym(v, -1), std::out_of_range);
  }

  TEST_CASE("newton_lambda_from_d examples") {
    CHECK(newton_lambda_from_d({7, 17, 43}) == std::vector<Scalar>{7, 16, 12});
    CHECK(newton_lambda_from_d({5}) == std::vector<Scalar>{5});
    CHECK(newton_lambda_from_d({2, 2}) == std::vector<Scalar>{2, 1});
  }

  TEST_CASE("d_from_params examples") {
    const HWParams p = HWParams::parse("2:2,3:1");
    CHECK(d_from_params(p, 1) == 7);
    CHECK(d_from_params(p, 0) == 3);
    CHECK(d_from_params(HWParams::parse("2:1"), -1) == Scalar(1, 2));
  }

  TEST_CASE("d_alpha examples") {
    const HWParams p = HWParams::parse("2:2,3:1");
    for (int m = -3; m <= 6; ++m) {
      CHECK(d_alpha(p, {2, 3}, m) == 0);
      CHECK(d_alpha(p, {}, m) == d_from_params(p, m));
    }
    CHECK(d_alpha(HWParams::parse("2:1"), {1}, 1) == 1);
  }

  TEST_CASE("newton_extend_d examples") {
    const HWParams two = HWParams::parse("2:1,3:1");
    CHECK(newton_extend_d(two, {5, 6}, 0) == 35);
    const HWParams one = HWParams::parse("7/2:1");
    CHECK(newton_extend_d(one, {Scalar(7, 2)}, 0) == Scalar(49, 4));
    CHECK(newton_extend_d(HWParams::parse("1:2"), {2, 1}, 0) == 2);
    CHECK_THROWS(newton_extend_d(two, {5, 7}, 0));
  }

  TEST_CASE("lambda_shifted examples") {
    const HWParams p = HWParams::parse("2:2,3:1");
    CHECK(lambda_shifted(p, 0) == std::vector<Scalar>{7, 16, 12});
    CHECK(lambda_shifted(p, 2) == std::vector<Scalar>{1, 0, 0});
    CHECK(lambda_shifted(HWParams::parse("2:1,3:1"), 1) == std::vector<Scalar>{3, 2});
  }

  TEST_CASE("binomial_extended examples and Pascal rule") {
    CHECK(binomial_extended(5, 2) == 10);
    for (int t = 0; t <= 6; ++t) CHECK(binomial_extended(-1, t) == (t % 2 ? -1 : 1));
    for (int n = -6; n <= 6; ++n) CHECK(binomial_extended(n, 0) == 1);
    for (int n = -6; n <= 6; ++n)
      for (int t = 1; t <= 6; ++t)
        CHECK(binomial_extended(n + 1, t) == binomial_extended(n, t) + binomial_extended(n, t - 1));
  }

  TEST_CASE("HWParams parsing and validation") {
    const HWParams p = HWParams::parse("2:2, 3/2:1");
    CHECK(p.r() == 3);
    CHECK(p.s() == 2);
    CHECK(p.flatten() == std::vector<Scalar>{2, 2, Scalar(3, 2)});
    CHECK(p.str() == "2:2,3/2:1");
    CHECK_THROWS_AS(HWParams::parse("0:1"), std::invalid_argument);
    CHECK_THROWS_AS(HWParams::parse("2:1,2:1"), std::invalid_argument);
    CHECK_THROWS_AS(HWParams::parse("2:0"), std::invalid_argument);
    CHECK_THROWS_AS(HWParams::parse("2"), std::invalid_argument);
    CHECK_THROWS_AS(HWParams::parse(""), std::invalid_argument);
  }

  TEST_CASE("HWPoly of (a,a,b) has the expected coefficients") {
    const Scalar a(2), b(3);
    const HWPoly poly = HWPoly::from_params(HWParams::parse("2:2,3:1"));
    CHECK(poly.coefficients() == std::vector<Scalar>{1, -(2 * a + b), a * a + 2 * a * b, -(a * a * b)});
    CHECK(HWPoly::from_params(HWParams::parse("5:1")).coefficients() == std::vector<Scalar>{1, -5});
  }

  TEST_CASE("property: Newton round trip and power sums") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
      const HWParams p = random_params(rng);
      const auto hat = p.flatten();
      std::vector<Scalar> d;
      for (int k = 1; k <= p.r(); ++k) {
        CHECK(d_from_params(p, k) == power_sum(hat, k));
        d.push_back(d_from_params(p, k));
      }
      const auto lambda = newton_lambda_from_d(d);
      for (int k = 1; k <= p.r(); ++k) CHECK(lambda[k - 1] == brute_elem_sym(hat, k));
      for (int j = -3 - p.r(); j <= 5; ++j) CHECK(newton_extend_d(p, lambda, j) == power_sum(hat, p.r() + 1 + j));
    }
  }

  TEST_CASE("property: HWPoly vanishes at 1/a_j to order m_j") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
      const HWParams p = random_params(rng);
      auto c = HWPoly::from_params(p).coefficients();
      CHECK(c.front() == 1);
      CHECK_FALSE(c.back().is_zero());
      for (const auto& e : p.entries()) {
        const Scalar u = e.a.inverse();
        auto deriv = c;
        for (int order = 0; order < e.m; ++order) {
          CHECK(poly_eval(deriv, u) == 0);
          deriv = poly_derivative(deriv);
        }
        CHECK(poly_eval(deriv, u) != 0);
      }
    }
  }

  TEST_CASE("property: d_alpha vanishes when alpha covers every parameter") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
      const HWParams p = random_params(rng);
      auto alpha = p.distinct();
      alpha.push_back(Scalar(trial + 1, 7));
      for (int m = -3; m <= 5; ++m) CHECK(d_alpha(p, alpha, m) == 0);
    }
  }

  TEST_CASE("property: lambda_shifted agrees with elem_sym of shifted values") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
      const HWParams p = random_params(rng);
      const Scalar a(trial - 15, 4);
      auto shifted = p.flatten();
      for (auto& x : shifted) x -= a;
      const auto lam = lambda_shifted(p, a);
      for (int k = 1; k <= p.r(); ++k) CHECK(lam[k - 1] == brute_elem_sym(shifted, k));
    }
  }
}
