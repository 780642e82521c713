#include "loophw/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace loophw {

namespace {

struct RunConfig {
  std::string params, construct = "weyl", spec_file, format = "text", cut;
  std::size_t cap = 0;
  int window = 2, jobs = 1;
  std::uint64_t seed = SuiteOptions{}.seed;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

std::string scalars_str(const std::vector<Scalar>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : " ") + x.str();
  return out;
}

// setw counts bytes; labels contain the multi-byte "∅".
std::string pad(const std::string& s, std::size_t width) {
  std::size_t glyphs = 0;
  for (unsigned char c : s) glyphs += (c & 0xC0) != 0x80;
  return s + std::string(width > glyphs ? width - glyphs : 1, ' ');
}

void row(std::ostream& out, const std::string& key, const std::string& value) {
  out << std::left << std::setw(14) << key << value << '\n';
}

BuiltModule build(const RunConfig& cfg) {
  if (!cfg.spec_file.empty()) {
    std::ifstream in(cfg.spec_file);
    if (!in) throw std::invalid_argument("cannot open spec file " + cfg.spec_file);
    json spec;
    try {
      spec = json::parse(in);
    } catch (const json::exception& e) {
      throw std::invalid_argument(std::string("malformed spec file: ") + e.what());
    }
    return build_from_spec(spec, cfg.cap);
  }
  if (cfg.params.empty()) throw std::invalid_argument("--params or --spec is required");
  return build_construct(HWParams::parse(cfg.params), cfg.construct, cfg.cap);
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const BuiltModule b = build(cfg);
  HWReport rep;
  try {
    rep = analyze(b.module, b.omega, b.params);
  } catch (const NotHighestWeight& e) {
    err << "error: " << e.what() << '\n';
    return kDiscrepancy;
  } catch (const ParameterMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kDiscrepancy;
  } catch (const Discrepancy& e) {
    err << "error: " << e.what() << '\n';
    return kDiscrepancy;
  }
  std::vector<std::string> problems;
  if (rep.criterion_holds != rep.oracle_irreducible) problems.push_back("criterion and singular-vector oracle disagree");
  if (rep.criterion_holds && rep.dim_formula != rep.actual_dim) problems.push_back("dim UΩ differs from Π(m_j+1)");

  if (cfg.format == "json") {
    out << json{{"module", b.description}, {"dim", b.module.dim()}, {"report", to_json(rep)}, {"problems", problems}}
               .dump(2)
        << '\n';
  } else {
    row(out, "module", b.description + " (dim " + std::to_string(b.module.dim()) + ")");
    row(out, "params", rep.params.str());
    row(out, "r", std::to_string(rep.r));
    std::string d;
    for (std::size_t i = 0; i < rep.d.size(); ++i)
      d += (i ? ", " : "") + std::string("d") + std::to_string(rep.d_lo + static_cast<int>(i)) + "=" + rep.d[i].str();
    row(out, "d_k", d);
    row(out, "lambda_k", scalars_str(rep.lambda));
    row(out, "P(u)", rep.poly.str());
    row(out, "criterion", rep.criterion_holds ? "holds" : "fails");
    row(out, "oracle", rep.oracle_irreducible ? "irreducible" : "reducible");
    row(out, "dim U.Omega", std::to_string(rep.actual_dim));
    row(out, "prod(m_j+1)", std::to_string(rep.dim_formula));
    row(out, "verdict", rep.oracle_irreducible ? "irreducible" : "reducible");
    for (const auto& p : problems) out << "DISCREPANCY: " << p << '\n';
  }
  return problems.empty() ? kOk : kDiscrepancy;
}

int cmd_network(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.params.empty()) throw std::invalid_argument("--params is required");
  const HWParams p = HWParams::parse(cfg.params);
  const ModuleRep w = weyl_module(p, cfg.cap);
  const Vec omega = unit_vec(w.dim(), 0);
  const NetworkGraph g = build_network(p, &w, &omega, cfg.jobs);

  json cut_json;
  bool cut_ok = true;
  if (!cfg.cut.empty()) {
    std::set<NetLabel> cut;
    std::vector<Vec> gens;
    for (const auto& tok : split(cfg.cut, ';')) {
      const NetLabel l = NetLabel::parse(trim(tok), p.s());
      cut.insert(l);
      gens.push_back(omega_vector(w, omega, p, l));
    }
    const std::uint64_t dim = reducible_dims(g, cut);
    const std::uint64_t direct = w.dim() - submodule_closure(w, gens).dim();
    cut_ok = dim == direct;
    json labels = json::array();
    for (const auto& l : cut) labels.push_back(l.str());
    cut_json = {{"declared_zero", labels}, {"dim", dim}, {"dim_by_quotient", direct}};
  }

  if (cfg.format == "dot") {
    out << to_dot(g);
  } else if (cfg.format == "json") {
    json j = to_json(g);
    if (!cut_json.is_null()) j["cut"] = cut_json;
    out << j.dump(2) << '\n';
  } else {
    out << "network for " << p.str() << " (Weyl module dim " << w.dim() << ")\n";
    out << std::left << std::setw(22) << "label" << std::setw(10) << "m'" << std::setw(11) << "predicted"
        << std::setw(8) << "exact" << "notes\n";
    for (const auto& l : g.topological_order()) {
      const NetVertex& v = g.vertices.at(l);
      std::string mp;
      for (int x : v.m_prime) mp += (mp.empty() ? "" : ",") + std::to_string(x);
      std::string notes = v.vanished ? (v.explained ? "vanishes (quadratic relation)" : "vanishes (unexplained)") : "";
      if (l == g.source) notes = "source";
      if (l == g.sink) notes = "sink";
      out << pad(l.str(), 22) << std::setw(10) << mp << std::setw(11) << v.predicted_dim << std::setw(8)
          << *v.exact_dim << notes << '\n';
    }
    out << "edges:\n";
    for (const auto& e : g.edges)
      out << "  " << e.parent.str() << " -> " << e.child.str() << "  (" << to_string(e.tag) << ", j=" << e.j << ")\n";
    out << "quadratic relations on Omega:";
    for (const auto& c : g.relations) out << "  j=" << c.j << ",n=" << c.n << ":" << (c.holds ? "holds" : "fails");
    out << "\ntotal dim " << g.total_dim() << '\n';
    if (!cut_json.is_null())
      out << "cut leaves dim " << cut_json["dim"] << " (quotient by declared vectors: " << cut_json["dim_by_quotient"]
          << ")\n";
    for (const auto& d : g.discrepancies) out << "DISCREPANCY: " << d << '\n';
  }
  if (!cut_ok) err << "error: cut dimension disagrees with the direct quotient\n";
  return g.discrepancies.empty() && cut_ok ? kOk : kDiscrepancy;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  SuiteOptions opt;
  opt.seed = cfg.seed;
  opt.window = cfg.window;
  std::vector<ZooEntry> zoo;
  if (!cfg.params.empty() || !cfg.spec_file.empty()) {
    if (!cfg.spec_file.empty()) {
      BuiltModule b = build(cfg);
      zoo.push_back({b.description, std::move(b.module), std::move(b.omega), b.params});
    } else {
      const HWParams p = HWParams::parse(cfg.params);
      for (const char* c : {"weyl", "packed"}) {
        BuiltModule b = build_construct(p, c, cfg.cap);
        zoo.push_back({b.description, std::move(b.module), std::move(b.omega), b.params});
      }
    }
  } else {
    zoo = module_zoo(cfg.cap);
  }
  bool ok = true;
  json all = json::array();
  for (const auto& z : zoo) {
    for (const auto& res : {run_identity_suite(z, opt), run_structural_suite(z, opt)}) {
      ok = ok && res.passed();
      if (cfg.format == "json") {
        all.push_back(to_json(res));
        continue;
      }
      for (const auto& c : res.checks) {
        out << (c.passed ? "PASS " : "FAIL ") << std::left << std::setw(40) << z.name << c.name << " [" << c.cases
            << " cases]";
        if (!c.passed) out << ": " << c.detail;
        out << '\n';
      }
    }
  }
  if (cfg.format == "json") out << json{{"passed", ok}, {"suites", all}}.dump(2) << '\n';
  else out << (ok ? "all identities hold\n" : "some identities FAILED\n");
  return ok ? kOk : kDiscrepancy;
}

int cmd_examples(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  bool ok = true;
  json items = json::array();
  auto report = [&](const std::string& what, const std::string& got, const std::string& want) {
    const bool pass = got == want;
    ok = ok && pass;
    items.push_back({{"example", what}, {"got", got}, {"expected", want}, {"passed", pass}});
    if (cfg.format != "json")
      out << (pass ? "ok   " : "FAIL ") << what << ": " << got << (pass ? "" : " (expected " + want + ")") << '\n';
  };
  auto dim_and_verdict = [&](const HWParams& p, const std::string& construct) {
    const BuiltModule b = build_construct(p, construct, cfg.cap);
    const HWReport rep = analyze(b.module, b.omega, b.params);
    std::string v = std::to_string(rep.actual_dim) + (rep.oracle_irreducible ? " irreducible" : " reducible");
    if (rep.criterion_holds != rep.oracle_irreducible) v += " (criterion disagrees)";
    return v;
  };

  const HWParams r3 = HWParams::parse("2:2,3:1");
  report("r=3 Weyl module", dim_and_verdict(r3, "weyl"), "8 reducible");
  report("r=3 Weyl module / U w_1 Omega", dim_and_verdict(r3, "quotient:1^1"), "6 irreducible");
  report("r=3 tensor of eval(a_1,2) and eval(a_2,1)", dim_and_verdict(r3, "packed"), "6 irreducible");

  const HWParams r4 = HWParams::parse("2:2,3:2");
  report("r=4 Weyl module", dim_and_verdict(r4, "weyl"), "16 reducible");
  report("r=4 Weyl / U w_1 w_2 Omega", dim_and_verdict(r4, "quotient:1^1*2^1"), "15 reducible");
  report("r=4 Weyl / U w_2 Omega", dim_and_verdict(r4, "quotient:2^1"), "12 reducible");
  report("r=4 Weyl / U w_1 Omega", dim_and_verdict(r4, "quotient:1^1"), "12 reducible");
  report("r=4 tensor of eval(a_1,2) and eval(a_2,2)", dim_and_verdict(r4, "packed"), "9 irreducible");

  auto network_dims = [&](const std::string& params) {
    const HWParams p = HWParams::parse(params);
    const ModuleRep w = weyl_module(p, cfg.cap);
    const Vec omega = unit_vec(w.dim(), 0);
    return std::pair{p, build_network(p, &w, &omega, cfg.jobs)};
  };
  auto dims_str = [](const NetworkGraph& g) {
    std::vector<std::uint64_t> d;
    for (const auto& [l, v] : g.vertices) d.push_back(v.exact_dim.value_or(0));
    std::sort(d.begin(), d.end());
    std::string s;
    for (auto x : d) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
  };
  {
    const auto [p, g] = network_dims("2:3,3:3");
    report("r=6 (3,3) quotient dims", dims_str(g), "4,4,4,4,8,8,8,8,16");
    report("r=6 (3,3) total", std::to_string(g.total_dim()), "64");
    std::set<NetLabel> cut;
    for (const char* l : {"1^1", "1^2 2^2", "2^2"}) cut.insert(NetLabel::parse(l, 2));
    report("r=6 (3,3) cut example", std::to_string(reducible_dims(g, cut)), "24");
  }
  {
    const auto [p, g] = network_dims("2:5,3:1");
    report("r=6 (5,1) quotient dims", dims_str(g), "0,0,4,4,4,4,4,8,8,8,8,12");
    report("r=6 (5,1) total", std::to_string(g.total_dim()), "64");
    std::string vanished;
    for (const auto& [l, v] : g.vertices)
      if (v.vanished) vanished += (vanished.empty() ? "" : "; ") + l.str() + (v.explained ? " (explained)" : "");
    report("r=6 (5,1) vanishing quotients", vanished, "1^2 1^3 (explained); 1^3 1^3 (explained)");
  }
  if (cfg.format == "json") out << json{{"passed", ok}, {"examples", items}}.dump(2) << '\n';
  return ok ? kOk : kDiscrepancy;
}

}  // namespace

std::vector<WProduct> parse_wspec(const std::string& text, const HWParams& p) {
  std::vector<WProduct> out;
  for (std::string gen : split(text, '+')) {
    gen = trim(gen);
    if (gen.rfind("w:", 0) == 0) gen = gen.substr(2);
    if (gen.empty()) throw std::invalid_argument("empty w-generator in '" + text + "'");
    WProduct prod;
    for (const auto& f : split(gen, '*')) {
      const NetLabel l = NetLabel::parse(trim(f), p.s());
      int count = 0;
      for (int j = 1; j <= p.s(); ++j)
        for (int k : l.k[j - 1]) {
          if (k > p.m(j)) throw std::invalid_argument("w-factor " + trim(f) + " exceeds m_j");
          prod.emplace_back(j, k);
          ++count;
        }
      if (count != 1) throw std::invalid_argument("w-factor '" + trim(f) + "' must be a single j^k");
    }
    out.push_back(std::move(prod));
  }
  if (out.empty()) throw std::invalid_argument("empty w-spec");
  return out;
}

Vec apply_wproduct(const ModuleRep& m, const Vec& omega, const HWParams& p, const WProduct& w) {
  Vec v = omega;
  for (auto it = w.rbegin(); it != w.rend(); ++it) v = m.act(w_jk(p, it->first, it->second), v);
  return v;
}

BuiltModule build_construct(const HWParams& p, const std::string& construct, std::size_t cap) {
  if (cap == 0) cap = default_cap();
  if (construct == "weyl") {
    ModuleRep m = weyl_module(p, cap);
    Vec omega = unit_vec(m.dim(), 0);
    return {"weyl(" + p.str() + ")", std::move(m), std::move(omega), p};
  }
  if (construct == "packed") {
    ModuleRep m = packed_module(p, cap);
    Vec omega = unit_vec(m.dim(), 0);
    return {"packed(" + p.str() + ")", std::move(m), std::move(omega), p};
  }
  if (construct.rfind("quotient:", 0) == 0) {
    const auto gens = parse_wspec(construct.substr(9), p);
    const ModuleRep w = weyl_module(p, cap);
    const Vec omega = unit_vec(w.dim(), 0);
    std::vector<Vec> vs;
    for (const auto& g : gens) vs.push_back(apply_wproduct(w, omega, p, g));
    const Subspace sub = submodule_closure(w, vs);
    return {"weyl(" + p.str() + ")/" + construct.substr(9), quotient(w, sub), quotient_project(sub, omega), p};
  }
  throw std::invalid_argument("unknown --construct '" + construct + "' (expected weyl, packed or quotient:<wspec>)");
}

BuiltModule build_from_spec(const json& spec, std::size_t cap) {
  if (cap == 0) cap = default_cap();
  if (!spec.contains("factors") || !spec.at("factors").is_array() || spec.at("factors").empty())
    throw std::invalid_argument("spec needs a nonempty \"factors\" array");
  std::vector<ModuleRep> factors;
  std::map<Scalar, int> mult;
  std::vector<Scalar> order;
  std::string desc;
  for (const auto& f : spec.at("factors")) {
    const Scalar a = scalar_from_json(f.at("a"));
    const int m = f.at("m").get<int>();
    const std::string kind = f.value("kind", "eval");
    if (a.is_zero()) throw std::invalid_argument("factor parameter a must be nonzero");
    if (m < 1) throw std::invalid_argument("factor multiplicity m must be positive");
    if (kind == "eval") factors.push_back(eval_module(a, m));
    else if (kind == "weyl") factors.push_back(local_weyl_module(a, m, cap));
    else throw std::invalid_argument("factor kind must be eval or weyl");
    if (!mult.count(a)) order.push_back(a);
    mult[a] += m;
    desc += (desc.empty() ? "" : "*") + kind + "(" + a.str() + "," + std::to_string(m) + ")";
  }
  std::vector<ParamEntry> entries;
  for (const auto& a : order) entries.push_back({a, mult[a]});
  const HWParams p(entries);
  ModuleRep m = factors.size() == 1 ? factors.front() : tensor(factors, cap);
  Vec omega = unit_vec(m.dim(), 0);
  if (spec.contains("quotient_by") && !spec.at("quotient_by").empty()) {
    std::vector<Vec> vs;
    std::string qdesc;
    for (const auto& q : spec.at("quotient_by")) {
      const std::string text = q.get<std::string>();
      for (const auto& g : parse_wspec(text, p)) vs.push_back(apply_wproduct(m, omega, p, g));
      qdesc += (qdesc.empty() ? "" : "+") + text;
    }
    const Subspace sub = submodule_closure(m, vs);
    Vec qomega = quotient_project(sub, omega);
    m = quotient(m, sub);
    omega = std::move(qomega);
    desc += "/" + qdesc;
  }
  return {desc, std::move(m), std::move(omega), p};
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Highest-weight representations of the sl2 loop algebra"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--params", cfg.params, "parameters a:m, comma separated, e.g. 2:2,3:1");
    sub->add_option("--spec", cfg.spec_file, "JSON module spec file")->check(CLI::ExistingFile);
    sub->add_option("--construct", cfg.construct, "weyl | packed | quotient:<wspec>");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json", "dot"}));
    sub->add_option("--cap", cfg.cap, "dimension cap (default LOOPHW_CAP or 65536)");
    sub->add_option("--window", cfg.window, "degree window beyond [0, r]")->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", cfg.seed, "seed for randomized identity checks");
    sub->add_option("--jobs", cfg.jobs, "worker threads for network verification")->check(CLI::PositiveNumber);
    sub->add_option("--cut", cfg.cut, "labels declared zero, ';' separated, e.g. \"1^1;2^2\"");
  };
  auto* analyze_cmd = app.add_subcommand("analyze", "highest-weight data and irreducibility");
  auto* network_cmd = app.add_subcommand("network", "submodule network of the Weyl module");
  auto* verify_cmd = app.add_subcommand("verify", "identity and structural suites");
  auto* examples_cmd = app.add_subcommand("examples", "regression against the published examples");
  for (auto* s : {analyze_cmd, network_cmd, verify_cmd, examples_cmd}) common(s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (cfg.format == "dot" && !network_cmd->parsed()) {
    err << "error: --format dot is only available for network\n";
    return kUsage;
  }
  if (cfg.cap == 0) cfg.cap = default_cap();
  try {
    if (analyze_cmd->parsed()) return cmd_analyze(cfg, out, err);
    if (network_cmd->parsed()) return cmd_network(cfg, out, err);
    if (verify_cmd->parsed()) return cmd_verify(cfg, out, err);
    return cmd_examples(cfg, out, err);
  } catch (const CapError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NotHighestWeight& e) {
    err << "error: " << e.what() << '\n';
    return kDiscrepancy;
  } catch (const ParameterMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kDiscrepancy;
  } catch (const Discrepancy& e) {
    err << "error: " << e.what() << '\n';
    return kDiscrepancy;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace loophw
