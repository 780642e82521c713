#include <doctest.h>

#include "loophw/identities.hpp"

using namespace loophw;

namespace {

const HWParams kAAB = HWParams::parse("2:2,3:1");
const HWParams kAABB = HWParams::parse("2:2,3:2");

Vec top(const ModuleRep& m) { return unit_vec(m.dim(), 0); }

// (x^-)^n / n! applied through plain matrix powers.
Vec divided_lower(const ModuleRep& m, const LoopCombo& c, int n, Vec v) {
  const SparseMatrix x = m.op(c);
  for (int i = 1; i <= n; ++i) v = scaled(x.apply(v), Scalar(1, i));
  return v;
}

}  // namespace

TEST_SUITE("hw_analysis") {
  TEST_CASE("analyze reads the highest weight polynomial") {
    const ModuleRep w = weyl_module(kAAB);
    const HWReport rep = analyze(w, top(w), kAAB);
    const Scalar a(2), b(3);
    CHECK(rep.r == 3);
    CHECK(rep.poly.coefficients() == std::vector<Scalar>{1, -(2 * a + b), a * a + 2 * a * b, -(a * a * b)});
    CHECK(rep.lambda == std::vector<Scalar>{7, 16, 12});
    CHECK(rep.d_lo == -3);
    for (int k = -3; k <= 3; ++k) CHECK(rep.d[k + 3] == d_from_params(kAAB, k));
    CHECK_FALSE(rep.criterion_holds);
    CHECK_FALSE(rep.oracle_irreducible);
    CHECK(rep.actual_dim == 8);
    CHECK(rep.dim_formula == 6);

    const HWParams p1 = HWParams::parse("-5/3:1");
    const ModuleRep e = eval_module(p1.a(1), 1);
    const HWReport r1 = analyze(e, top(e), p1);
    CHECK(r1.poly.coefficients() == std::vector<Scalar>{1, Scalar(5, 3)});
    CHECK(r1.criterion_holds);
    CHECK(r1.oracle_irreducible);
  }

  TEST_CASE("analyze rejects bad input") {
    const ModuleRep w = weyl_module(kAAB);
    CHECK_THROWS_AS(analyze(w, unit_vec(8, 3), kAAB), NotHighestWeight);
    try {
      analyze(w, top(w), HWParams::parse("2:1,3:2"));
      FAIL("expected a mismatch");
    } catch (const ParameterMismatch& e) {
      const std::string msg = e.what();
      CHECK(msg.find(HWPoly::from_params(kAAB).str()) != std::string::npos);
      CHECK(msg.find(HWPoly::from_params(HWParams::parse("2:1,3:2")).str()) != std::string::npos);
    }
  }

  TEST_CASE("lambda_r is nonzero and lambda is independent of ell") {
    for (const auto& z : module_zoo(32)) {
      CAPTURE(z.name);
      const int r = z.params.r();
      const auto base = measure_lambda(z.module, z.omega, r);
      CHECK_FALSE(base.back().is_zero());
      for (int ell : {-1, 1, 2}) CHECK(measure_lambda(z.module, z.omega, r, ell) == base);
    }
  }

  TEST_CASE("check_reduction") {
    for (const auto& z : module_zoo(64)) {
      CAPTURE(z.name);
      CHECK(check_reduction(z.module, z.omega, z.params));
    }
    const ModuleRep w = weyl_module(kAAB);
    CHECK_FALSE(check_reduction(w, top(w), HWParams::parse("2:2,7/2:1")));
    CHECK_FALSE(check_reduction(w, top(w), HWParams::parse("2:1,3:2")));
    const ModuleRep triv = eval_module(3, 0);
    CHECK(check_reduction(triv, top(triv), HWParams()));
  }

  TEST_CASE("check_reduction_shifted") {
    const ModuleRep w = weyl_module(kAAB);
    for (const Scalar& a : {Scalar(0), Scalar(2), Scalar(3), Scalar(-4, 7)})
      CHECK(check_reduction_shifted(w, top(w), kAAB, a));

    // r = 1 by hand: on eval(b,1), x_n^- Ω = b^n F Ω, so
    // x_2^-((a)^2) Ω = (b-a)^2 F Ω and λ_1(a) x_1^-(a) Ω = (b-a)(b-a) F Ω.
    const Scalar b(5, 2), a(-1, 3);
    const HWParams p = HWParams::parse("5/2:1");
    const ModuleRep e = eval_module(b, 1);
    const Vec lhs = e.act(expand_with_params(Kind::lower, 2, repeat_seq(a, 2)), top(e));
    const Vec rhs = scaled(e.act(expand_with_params(Kind::lower, 1, {a}), top(e)), lambda_shifted(p, a)[0]);
    CHECK(lhs == rhs);
    CHECK(lhs == scaled(e.act(GenSymbol{Kind::lower, 0}, top(e)), (b - a) * (b - a)));
    CHECK(check_reduction_shifted(e, top(e), p, a));
  }

  TEST_CASE("criterion examples") {
    const ModuleRep packed = packed_module(kAAB);
    CHECK(criterion(packed, top(packed), kAAB));
    CHECK(is_zero(packed.act(expand_with_params(Kind::lower, 2, {2, 3}), top(packed))));
    const ModuleRep w = weyl_module(kAAB);
    CHECK_FALSE(criterion(w, top(w), kAAB));
    const HWParams distinct = HWParams::parse("2:1,-1:1,1/2:1");
    const ModuleRep wd = weyl_module(distinct);
    CHECK(criterion(wd, top(wd), distinct));
    CHECK(oracle_irreducible(wd, top(wd)));
  }

  TEST_CASE("oracle_irreducible examples") {
    for (int m = 0; m <= 4; ++m) CHECK(oracle_irreducible(eval_module(7, m), top(eval_module(7, m))));
    const ModuleRep w = weyl_module(kAAB);
    CHECK_FALSE(oracle_irreducible(w, top(w)));
    const ModuleRep nine = packed_module(kAABB);
    CHECK(nine.dim() == 9);
    CHECK(oracle_irreducible(nine, top(nine)));
    const ModuleRep split = tensor({eval_module(2, 1), eval_module(2, 1)});
    CHECK_THROWS_AS(oracle_irreducible(split, top(split)), ScopeError);
  }

  TEST_CASE("dim_formula examples") {
    CHECK(dim_formula(kAAB) == 6);
    CHECK(dim_formula(kAABB) == 9);
    CHECK(dim_formula(HWParams::parse("2:1")) == 2);
  }

  TEST_CASE("inner products") {
    const HWParams p = HWParams::parse("1:2,2:1");
    const ModuleRep m = packed_module(p);
    CHECK(inner_product_check(m, top(m), p, {0, 0}, {0, 0}) == 1);
    CHECK(inner_product_check(m, top(m), p, {1, 0}, {1, 0}) == 2);
    CHECK(inner_product_expected(p, {1, 0}, {1, 0}) == 2);
    CHECK(inner_product_check(m, top(m), p, {1, 0}, {0, 1}) == 0);
    CHECK(inner_product_check(m, top(m), p, {2, 1}, {2, 1}) == inner_product_expected(p, {2, 1}, {2, 1}));
    CHECK_THROWS_AS(inner_product_check(m, top(m), p, {1, 0}, {0, 0}), std::invalid_argument);
    const ModuleRep w = weyl_module(p);
    CHECK_THROWS_AS(inner_product_check(w, top(w), p, {1, 0}, {1, 0}), std::invalid_argument);
  }

  TEST_CASE("basis and power vanishing") {
    for (int m = 1; m <= 4; ++m) {
      const HWParams p = HWParams::parse("3:" + std::to_string(m));
      const ModuleRep e = eval_module(3, m);
      CHECK(basis_check(e, top(e), p));
      CHECK(power_vanishing_check(e, top(e), p));
      CHECK(is_zero(divided_lower(e, GenSymbol{Kind::lower, 0}, m + 1, top(e))));
    }
    const ModuleRep six = packed_module(kAAB);
    CHECK(basis_check(six, top(six), kAAB));
    CHECK(is_zero(divided_lower(six, rho(Kind::lower, kAAB, 1), 3, top(six))));
    CHECK(is_zero(divided_lower(six, rho(Kind::lower, kAAB, 2), 2, top(six))));
    CHECK_FALSE(is_zero(divided_lower(six, rho(Kind::lower, kAAB, 1), 2, top(six))));
    CHECK(power_vanishing_check(six, top(six), kAAB));

    const ModuleRep nine = packed_module(kAABB);
    CHECK(basis_check(nine, top(nine), kAABB));
    CHECK(is_zero(divided_lower(nine, rho(Kind::lower, kAABB, 1), 3, top(nine))));
    CHECK(is_zero(divided_lower(nine, rho(Kind::lower, kAABB, 2), 3, top(nine))));
    CHECK(power_vanishing_check(nine, top(nine), kAABB));
  }

  TEST_CASE("property: criterion agrees with the oracle and the dimension formula") {
    for (const auto& z : module_zoo(64)) {
      CAPTURE(z.name);
      const HWReport rep = analyze(z.module, z.omega, z.params);
      CHECK(rep.criterion_holds == rep.oracle_irreducible);
      if (rep.criterion_holds) CHECK(rep.actual_dim == rep.dim_formula);
    }
  }
}
