// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "loophw/cli.hpp"

using namespace loophw;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && pass) detail = what;
    pass = pass && cond;
  }
};

Vec top(const ModuleRep& m) { return unit_vec(m.dim(), 0); }

std::string dims_str(const std::vector<std::uint64_t>& d) {
  std::string s;
  for (auto x : d) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

Outcome criterion_1() {
  Outcome o;
  const HWParams p = HWParams::parse("2:2,3:1");
  const ModuleRep w = weyl_module(p);
  const HWReport rw = analyze(w, top(w), p);
  o.require(w.dim() == 8 && rw.actual_dim == 8, "Weyl module dim " + std::to_string(w.dim()));
  o.require(!rw.criterion_holds && !rw.oracle_irreducible, "Weyl module not detected as reducible");
  o.require(!is_zero(w.act(w_jk(p, 1, 1), top(w))), "w_1 Omega vanishes");
  const ModuleRep pk = packed_module(p);
  const HWReport rp = analyze(pk, top(pk), p);
  o.require(pk.dim() == 6 && rp.actual_dim == 6, "packed module dim " + std::to_string(pk.dim()));
  o.require(rp.criterion_holds && rp.oracle_irreducible, "packed module not irreducible");
  o.detail = o.pass ? "dims 8 (reducible, w_1 Omega != 0) and 6 (criterion and oracle irreducible)" : o.detail;
  return o;
}

Outcome criterion_2() {
  Outcome o;
  const HWParams p = HWParams::parse("2:2,3:2");
  const std::vector<std::pair<std::string, std::uint64_t>> cases{
      {"weyl", 16}, {"quotient:1^1*2^1", 15}, {"quotient:2^1", 12}, {"quotient:1^1", 12}, {"packed", 9}};
  std::vector<std::uint64_t> got;
  for (const auto& [construct, want] : cases) {
    const BuiltModule b = build_construct(p, construct, default_cap());
    const HWReport rep = analyze(b.module, b.omega, b.params);
    got.push_back(b.module.dim());
    o.require(b.module.dim() == want && rep.actual_dim == want, construct + " has dim " + std::to_string(b.module.dim()));
    o.require(rep.criterion_holds == rep.oracle_irreducible, construct + ": criterion and oracle disagree");
    o.require(rep.criterion_holds == (construct == "packed"), construct + ": unexpected verdict");
  }
  if (o.pass) o.detail = "dims " + dims_str(got) + ", criterion == oracle on all five";
  return o;
}

NetworkGraph weyl_network(const std::string& spec) {
  const HWParams p = HWParams::parse(spec);
  const ModuleRep w = weyl_module(p);
  const Vec omega = top(w);
  return build_network(p, &w, &omega);
}

std::vector<std::uint64_t> exact_dims(const NetworkGraph& g) {
  std::vector<std::uint64_t> d;
  for (const auto& [l, v] : g.vertices) d.push_back(v.exact_dim.value_or(~0ull));
  std::sort(d.begin(), d.end());
  return d;
}

Outcome criterion_3() {
  Outcome o;
  const NetworkGraph g = weyl_network("2:3,3:3");
  o.require(g.vertices.size() == 9, "vertex count " + std::to_string(g.vertices.size()));
  o.require(exact_dims(g) == std::vector<std::uint64_t>{4, 4, 4, 4, 8, 8, 8, 8, 16}, "dims " + dims_str(exact_dims(g)));
  o.require(g.total_dim() == 64, "total " + std::to_string(g.total_dim()));
  o.require(g.discrepancies.empty(), "discrepancies reported");
  // The published adjacency: each label with its daughters.
  const std::map<std::string, std::vector<std::string>> listing{
      {"1^1 2^1", {"1^1 2^2", "1^2 2^1"}}, {"1^2 2^1", {"1^2 2^2", "2^1"}}, {"1^1 2^2", {"1^1", "1^2 2^2"}},
      {"1^2 2^2", {"1^2", "2^2"}},         {"1^1", {"1^2"}},                {"2^1", {"2^2"}},
      {"1^2", {"∅"}},                      {"2^2", {"∅"}}};
  std::map<std::string, std::vector<std::string>> got;
  for (const auto& e : g.edges) got[e.parent.str()].push_back(e.child.str());
  for (auto& [k, v] : got) std::sort(v.begin(), v.end());
  o.require(got == listing, "adjacency differs from the published listing");
  std::set<NetLabel> cut;
  for (const char* l : {"1^1", "1^2 2^2", "2^2"}) cut.insert(NetLabel::parse(l, 2));
  const std::uint64_t cut_dim = reducible_dims(g, cut);
  o.require(cut_dim == 24, "cut leaves " + std::to_string(cut_dim));
  const NetLabel e = NetLabel::parse("∅", 2), l12 = NetLabel::parse("1^2", 2);
  o.require(*g.vertices.at(e).exact_dim == 16 && *g.vertices.at(l12).exact_dim == 8, "cut is not 16 + 8");
  if (o.pass) o.detail = "9 vertices, dims " + dims_str(exact_dims(g)) + " = 64, 8 transition lines, cut 16+8=24";
  return o;
}

Outcome criterion_4() {
  Outcome o;
  const NetworkGraph g = weyl_network("2:5,3:1");
  const auto dims = exact_dims(g);
  o.require(dims == std::vector<std::uint64_t>{0, 0, 4, 4, 4, 4, 4, 8, 8, 8, 8, 12}, "dims " + dims_str(dims));
  o.require(g.total_dim() == 64, "total " + std::to_string(g.total_dim()));
  std::vector<std::string> vanished;
  for (const auto& [l, v] : g.vertices)
    if (v.vanished) {
      vanished.push_back(l.str());
      o.require(v.explained, l.str() + " vanishes without explanation");
    }
  o.require(vanished == std::vector<std::string>{"1^2 1^3", "1^3 1^3"}, "unexpected vanishing set");
  o.require(g.discrepancies.empty(), "discrepancies reported");
  if (o.pass) o.detail = "dims 4x5, 8x4, 12 = 64; 1^2 1^3 and 1^3 1^3 exactly zero, both explained";
  return o;
}

// Random constructions: tensors of eval and local Weyl factors, optional
// quotients by w-vectors, restricted to the cyclic part generated by Ω.
Outcome criterion_5() {
  Outcome o;
  std::mt19937_64 rng(SuiteOptions{}.seed);
  int total = 0, irreducible = 0, agree = 0;
  while (total < 200) {
    const int s = 1 + static_cast<int>(rng() % 3);
    std::vector<Scalar> as;
    while (static_cast<int>(as.size()) < s) {
      const Scalar a = random_scalar(rng);
      if (std::find(as.begin(), as.end(), a) == as.end()) as.push_back(a);
    }
    std::vector<ModuleRep> factors;
    std::vector<ParamEntry> entries;
    std::size_t dim = 1;
    int r = 0;
    for (const auto& a : as) {
      const int m = 1 + static_cast<int>(rng() % 4);
      entries.push_back({a, m});
      r += m;
      // Split m into parts, each an eval or a local Weyl factor.
      int left = m;
      while (left > 0) {
        const int part = 1 + static_cast<int>(rng() % left);
        const bool weyl = rng() % 2;
        factors.push_back(weyl ? local_weyl_module(a, part) : eval_module(a, part));
        dim *= factors.back().dim();
        left -= part;
      }
    }
    if (r > 6 || dim > 64) continue;
    const HWParams p(entries);
    ModuleRep m = factors.size() == 1 ? factors.front() : tensor(factors);
    Vec omega = top(m);
    if (rng() % 2) {
      const int j = 1 + static_cast<int>(rng() % s);
      const int k = 1 + static_cast<int>(rng() % p.m(j));
      const Subspace sub = submodule_closure(m, {m.act(w_jk(p, j, k), omega)});
      // A w-vector that regenerates Ω leaves the zero module; draw again.
      if (sub.contains(omega)) continue;
      omega = quotient_project(sub, omega);
      m = quotient(m, sub);
    }
    const Subspace cyc = submodule_closure(m, {omega});
    if (cyc.dim() != m.dim()) {
      omega = restrict_project(cyc, omega);
      m = restrict_to(m, cyc);
    }
    const bool crit = criterion(m, omega, p);
    const bool orac = oracle_irreducible(m, omega);
    ++total;
    irreducible += orac;
    agree += crit == orac;
    o.require(crit == orac, "disagreement on construction #" + std::to_string(total) + " with params " + p.str());
  }
  o.require(irreducible > 0 && irreducible < total, "randomized set lacks one of the two verdicts");
  if (o.pass)
    o.detail = std::to_string(agree) + "/" + std::to_string(total) + " agree (" + std::to_string(irreducible) +
               " irreducible, " + std::to_string(total - irreducible) + " reducible)";
  return o;
}

Outcome zoo_suites(bool structural) {
  Outcome o;
  const SuiteOptions opt;
  int modules = 0, checks = 0, cases = 0;
  for (const auto& z : module_zoo(64)) {
    ++modules;
    const SuiteResult res = structural ? run_structural_suite(z, opt) : run_identity_suite(z, opt);
    for (const auto& c : res.checks) {
      ++checks;
      cases += c.cases;
      o.require(c.passed, z.name + " " + c.name + ": " + c.detail);
    }
  }
  if (o.pass)
    o.detail = std::to_string(checks) + " checks over " + std::to_string(modules) + " modules, " +
               std::to_string(cases) + " exact cases";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;  // 0 means no time limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "r=3 Weyl vs packed", 1, criterion_1},
      {2, "r=4 five dimensions", 5, criterion_2},
      {3, "m=(3,3) network", 60, criterion_3},
      {4, "m=(5,1) network", 60, criterion_4},
      {5, "criterion == oracle (randomized)", 0, criterion_5},
      {6, "identity suite on the zoo", 0, [] { return zoo_suites(false); }},
      {7, "structural properties on the zoo", 0, [] { return zoo_suites(true); }},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0 && secs > c.budget_s) {
      o.pass = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget)";
    }
    all = all && o.pass;
    std::ostringstream t;
    t << std::fixed << std::setprecision(3) << secs << " s";
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " [" << c.name << "] " << t.str() << ": "
              << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
