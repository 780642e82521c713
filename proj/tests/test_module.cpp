#include <doctest.h>

#include <cstdlib>
#include <deque>

#include "loophw/identities.hpp"

using namespace loophw;

namespace {

std::vector<int> weight_dims(const ModuleRep& m) {
  std::vector<int> dims;
  for (const auto& [w, sub] : weight_decomposition(m)) dims.push_back(static_cast<int>(sub.dim()));
  return dims;
}

std::vector<int> weight_keys(const ModuleRep& m) {
  std::vector<int> keys;
  for (const auto& [w, sub] : weight_decomposition(m)) keys.push_back(w);
  return keys;
}

// Closure under every jet of every component, the slow but obvious definition.
Subspace all_jet_closure(const ModuleRep& m, const std::vector<Vec>& gens) {
  Subspace s(m.dim());
  std::deque<Vec> todo(gens.begin(), gens.end());
  while (!todo.empty()) {
    Vec v = todo.front();
    todo.pop_front();
    if (!s.insert(v)) continue;
    for (const auto& c : m.components())
      for (Kind k : {Kind::raise, Kind::lower, Kind::cartan})
        for (const auto& x : c.jets(k)) todo.push_back(x.apply(v));
  }
  return s;
}

const HWParams kAAB = HWParams::parse("2:2,3:1");

}  // namespace

TEST_SUITE("module_engine") {
  TEST_CASE("eval_module examples") {
    const ModuleRep triv = eval_module(3, 0);
    CHECK(triv.dim() == 1);
    for (int k = -2; k <= 3; ++k)
      for (Kind kind : {Kind::raise, Kind::lower, Kind::cartan}) CHECK(triv.op(kind, k).is_zero());

    const Scalar a(5, 2);
    const ModuleRep fund = eval_module(a, 1);
    CHECK(fund.dim() == 2);
    for (int k = -2; k <= 4; ++k) {
      CHECK(fund.op(Kind::raise, k) == fund.op(Kind::raise, 0) * a.pow(k));
      CHECK(fund.op(Kind::cartan, k) == fund.op(Kind::cartan, 0) * a.pow(k));
    }
    CHECK(fund.op(Kind::cartan, 0).at(0, 0) == 1);
    CHECK(fund.op(Kind::cartan, 0).at(1, 1) == -1);

    const ModuleRep e22 = eval_module(2, 2);
    const Vec omega = unit_vec(e22.dim(), 0);
    for (int k = -3; k <= 4; ++k) CHECK(measure_d(e22, omega, k) == d_from_params(HWParams::parse("2:2"), k));
    CHECK_THROWS_AS(eval_module(0, 1), std::invalid_argument);
  }

  TEST_CASE("tensor examples") {
    const ModuleRep e = eval_module(2, 2);
    CHECK(tensor({e}).dim() == e.dim());
    CHECK(tensor({e}).op(Kind::lower, 3) == e.op(Kind::lower, 3));

    // The tensor of three fundamentals is 8-dimensional with highest weight (a,a,b).
    const ModuleRep t = tensor({eval_module(2, 1), eval_module(2, 1), eval_module(3, 1)});
    CHECK(t.dim() == 8);
    const Vec omega = unit_vec(8, 0);
    CHECK(is_highest_weight(t, omega));
    for (int k = -2; k <= 4; ++k) CHECK(measure_d(t, omega, k) == d_from_params(kAAB, k));

    const ModuleRep packed = tensor({eval_module(2, 2), eval_module(3, 1)});
    CHECK(packed.dim() == 6);
    CHECK(oracle_irreducible(packed, unit_vec(6, 0)));
  }

  TEST_CASE("the fusion Weyl module is cyclic of dimension 2^r") {
    for (int m = 1; m <= 6; ++m) {
      const ModuleRep w = local_weyl_module(Scalar(3, 2), m);
      CHECK(w.dim() == (std::size_t{1} << m));
      CHECK(submodule_closure(w, {unit_vec(w.dim(), 0)}).dim() == w.dim());
      CHECK(check_cdr(w, -2, m + 2).passed);
    }
    const ModuleRep w = weyl_module(kAAB);
    CHECK(w.dim() == 8);
    CHECK(weight_keys(w) == std::vector<int>{3, 1, -1, -3});
    CHECK(weight_dims(w) == std::vector<int>{1, 3, 3, 1});
    CHECK(weight_dims(weyl_module(HWParams::parse("2:2,3:2"))) == std::vector<int>{1, 4, 6, 4, 1});
    CHECK(weight_dims(eval_module(2, 2)) == std::vector<int>{1, 1, 1});
  }

  TEST_CASE("act examples") {
    const ModuleRep w = weyl_module(kAAB);
    const Vec omega = unit_vec(w.dim(), 0);
    CHECK(w.act(GenSymbol{Kind::cartan, 0}, omega) == scaled(omega, 3));
    for (int k = -3; k <= 6; ++k) CHECK(is_zero(w.act(GenSymbol{Kind::raise, k}, omega)));
    CHECK(is_zero(w.act(GenSymbol{Kind::lower, 2}, zero_vec(w.dim()))));
  }

  TEST_CASE("submodule_closure examples") {
    const ModuleRep w = weyl_module(kAAB);
    const Vec omega = unit_vec(w.dim(), 0);
    CHECK(submodule_closure(w, {zero_vec(w.dim())}).dim() == 0);
    const ModuleRep packed = packed_module(kAAB);
    CHECK(submodule_closure(packed, {unit_vec(6, 0)}).dim() == 6);

    const Vec w1 = w.act(w_jk(kAAB, 1, 1), omega);
    CHECK_FALSE(is_zero(w1));
    const Subspace sub = submodule_closure(w, {w1});
    CHECK(sub.dim() == 2);
    CHECK(sub == span_of(w.dim(), {w1, w.act(rho(Kind::lower, kAAB, 2), w1)}));
  }

  TEST_CASE("closure by E_0, F_0, F_1 equals closure by every jet") {
    std::mt19937_64 rng(29);
    for (const char* spec : {"2:2,3:1", "2:2,3:2", "1:3", "2:3,-1/2:1", "2:4"}) {
      const HWParams p = HWParams::parse(spec);
      const ModuleRep w = weyl_module(p);
      for (int trial = 0; trial < 4; ++trial) {
        Vec v = zero_vec(w.dim());
        v[rng() % w.dim()] = random_scalar(rng);
        v[rng() % w.dim()] += random_scalar(rng);
        CHECK(submodule_closure(w, {v}) == all_jet_closure(w, {v}));
      }
      const Vec w1 = w.act(w_jk(p, 1, 1), unit_vec(w.dim(), 0));
      CHECK(submodule_closure(w, {w1}) == all_jet_closure(w, {w1}));
    }
  }

  TEST_CASE("quotient examples") {
    const ModuleRep w = weyl_module(kAAB);
    const Vec omega = unit_vec(w.dim(), 0);
    const ModuleRep same = quotient(w, Subspace(w.dim()));
    CHECK(same.dim() == w.dim());
    CHECK(same.op(Kind::lower, 2) == w.op(Kind::lower, 2));

    const Subspace sub = submodule_closure(w, {w.act(w_jk(kAAB, 1, 1), omega)});
    const ModuleRep q = quotient(w, sub);
    CHECK(q.dim() == 6);
    CHECK(oracle_irreducible(q, quotient_project(sub, omega)));
    CHECK(check_cdr(q, -2, 5).passed);

    const HWParams p4 = HWParams::parse("2:2,3:2");
    const ModuleRep w4 = weyl_module(p4);
    const Vec o4 = unit_vec(w4.dim(), 0);
    const Vec w12 = w4.act(w_jk(p4, 1, 1), w4.act(w_jk(p4, 2, 1), o4));
    CHECK(quotient(w4, submodule_closure(w4, {w12})).dim() == 15);

    Subspace not_sub(w.dim());
    not_sub.insert(unit_vec(w.dim(), 3));
    CHECK_THROWS_AS(quotient(w, not_sub), std::invalid_argument);
  }

  TEST_CASE("singular_vectors examples") {
    const auto irr = singular_vectors(packed_module(kAAB));
    REQUIRE(irr.size() == 1);
    CHECK(irr[0].first == 3);
    CHECK(irr[0].second.dim() == 1);

    const ModuleRep w = weyl_module(kAAB);
    const Vec w1 = w.act(w_jk(kAAB, 1, 1), unit_vec(w.dim(), 0));
    bool found = false;
    for (const auto& [wt, sub] : singular_vectors(w))
      if (wt == 1) found = sub.contains(w1);
    CHECK(found);
    for (int k = -2; k <= 4; ++k) CHECK(is_zero(w.act(GenSymbol{Kind::raise, k}, w1)));

    for (int m = 0; m <= 4; ++m) {
      const auto sv = singular_vectors(eval_module(Scalar(-7, 3), m));
      REQUIRE(sv.size() == 1);
      CHECK(sv[0].second.dim() == 1);
    }
  }

  TEST_CASE("defining relations hold on every zoo module") {
    for (const auto& z : module_zoo(16)) {
      CAPTURE(z.name);
      CHECK(check_cdr(z.module, -2, z.params.r() + 2).passed);
    }
  }

  TEST_CASE("dimension cap") {
    CHECK_THROWS_AS(weyl_module(HWParams::parse("2:3,3:3"), 32), CapError);
    CHECK_THROWS_AS(tensor({eval_module(2, 3), eval_module(3, 3)}, 15), CapError);
    CHECK(weyl_module(HWParams::parse("2:3,3:3"), 64).dim() == 64);
    ::setenv("LOOPHW_CAP", "8", 1);
    CHECK(default_cap() == 8);
    CHECK_THROWS_AS(weyl_module(HWParams::parse("2:4")), CapError);
    ::unsetenv("LOOPHW_CAP");
    CHECK(default_cap() == 65536);
  }

  TEST_CASE("Subspace linear algebra") {
    Subspace s(3);
    CHECK(s.insert({1, 2, 0}));
    CHECK_FALSE(s.insert({2, 4, 0}));
    CHECK(s.insert({0, 1, 1}));
    CHECK(s.contains({1, 3, 1}));
    CHECK_FALSE(s.contains({0, 0, 1}));
    CHECK(kernel(3, {{1, 1, 1}}).dim() == 2);
    CHECK(Subspace::sum(span_of(3, {{1, 0, 0}}), span_of(3, {{0, 1, 0}})).dim() == 2);
    const Vec x{1, 3, 1};
    const Vec c = s.coordinates(x);
    Vec back = zero_vec(3);
    for (std::size_t i = 0; i < c.size(); ++i) axpy(back, c[i], s.basis()[i]);
    CHECK(back == x);
  }
}
