#include "loophw/json_io.hpp"

#include <sstream>

namespace loophw {

namespace {

json matrix_json(const SparseMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& [c, v] : m.row(i)) out.push_back(json::array({i, c, v.str()}));
  return out;
}

SparseMatrix matrix_from_json(const json& j, std::size_t n) {
  SparseMatrix m(n, n);
  for (const auto& t : j) {
    const auto row = t.at(0).get<std::size_t>(), col = t.at(1).get<std::size_t>();
    if (row >= n || col >= n) throw std::invalid_argument("matrix entry out of range");
    m.add(row, col, scalar_from_json(t.at(2)));
  }
  return m;
}

json jets_json(const std::vector<SparseMatrix>& js) {
  json out = json::array();
  for (const auto& m : js) out.push_back(matrix_json(m));
  return out;
}

std::vector<SparseMatrix> jets_from_json(const json& j, std::size_t n) {
  std::vector<SparseMatrix> out;
  for (const auto& m : j) out.push_back(matrix_from_json(m, n));
  return out;
}

json scalars_json(const std::vector<Scalar>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

std::vector<Scalar> scalars_from_json(const json& j) {
  std::vector<Scalar> out;
  for (const auto& x : j) out.push_back(scalar_from_json(x));
  return out;
}

json opt_json(const std::optional<std::uint64_t>& x) { return x ? json(*x) : json(nullptr); }

std::optional<std::uint64_t> opt_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::uint64_t>();
}

}  // namespace

json to_json(const Scalar& x) { return x.str(); }

Scalar scalar_from_json(const json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  return Scalar::parse(j.get<std::string>());
}

json to_json(const HWParams& p) {
  json arr = json::array();
  for (const auto& e : p.entries()) arr.push_back({{"a", e.a.str()}, {"m", e.m}});
  return {{"params", arr}};
}

HWParams params_from_json(const json& j) {
  std::vector<ParamEntry> entries;
  for (const auto& e : j.at("params")) entries.push_back({scalar_from_json(e.at("a")), e.at("m").get<int>()});
  return HWParams(std::move(entries));
}

json to_json(const LoopCombo& c) {
  json terms = json::object();
  for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) terms[std::to_string(it->first)] = it->second.str();
  return {{"kind", to_string(c.kind())}, {"terms", terms}};
}

LoopCombo combo_from_json(const json& j) {
  LoopCombo c(kind_from_string(j.at("kind").get<std::string>()));
  for (const auto& [deg, coef] : j.at("terms").items()) c.add_term(std::stoi(deg), scalar_from_json(coef));
  return c;
}

json to_json(const Vec& v) { return scalars_json(v); }
Vec vec_from_json(const json& j) { return scalars_from_json(j); }

json to_json(const ModuleRep& m) {
  json comps = json::array();
  for (const auto& c : m.components())
    comps.push_back({{"a", c.a.str()}, {"e", jets_json(c.e)}, {"f", jets_json(c.f)}, {"h", jets_json(c.h)}});
  return {{"dim", m.dim()}, {"weights", m.weights()}, {"components", comps}};
}

ModuleRep module_from_json(const json& j) {
  const auto n = j.at("dim").get<std::size_t>();
  std::vector<Component> comps;
  for (const auto& c : j.at("components"))
    comps.push_back({scalar_from_json(c.at("a")), jets_from_json(c.at("e"), n), jets_from_json(c.at("f"), n),
                     jets_from_json(c.at("h"), n)});
  return ModuleRep(n, j.at("weights").get<std::vector<int>>(), std::move(comps));
}

json to_json(const HWReport& r) {
  return {{"r", r.r},
          {"d_lo", r.d_lo},
          {"d", scalars_json(r.d)},
          {"lambda", scalars_json(r.lambda)},
          {"poly", scalars_json(r.poly.coefficients())},
          {"poly_str", r.poly.str()},
          {"params", to_json(r.params).at("params")},
          {"criterion_holds", r.criterion_holds},
          {"dim_formula", r.dim_formula},
          {"actual_dim", r.actual_dim},
          {"oracle_irreducible", r.oracle_irreducible}};
}

HWReport report_from_json(const json& j) {
  HWReport r;
  r.r = j.at("r").get<int>();
  r.d_lo = j.at("d_lo").get<int>();
  r.d = scalars_from_json(j.at("d"));
  r.lambda = scalars_from_json(j.at("lambda"));
  r.poly = HWPoly::from_lambda(r.lambda);
  if (!(scalars_json(r.poly.coefficients()) == j.at("poly")))
    throw std::invalid_argument("report: poly disagrees with lambda");
  r.params = params_from_json(json{{"params", j.at("params")}});
  r.criterion_holds = j.at("criterion_holds").get<bool>();
  r.dim_formula = j.at("dim_formula").get<std::uint64_t>();
  r.actual_dim = j.at("actual_dim").get<std::uint64_t>();
  r.oracle_irreducible = j.at("oracle_irreducible").get<bool>();
  return r;
}

json to_json(const NetworkGraph& g) {
  json verts = json::array();
  for (const auto& [l, v] : g.vertices) {
    json jv = {{"label", l.str()},
               {"m_prime", v.m_prime},
               {"predicted_dim", v.predicted_dim},
               {"exact_dim", opt_json(v.exact_dim)},
               {"closure_dim", opt_json(v.closure_dim)},
               {"vanished", v.vanished},
               {"explained", v.explained}};
    if (!v.omega.empty()) jv["omega"] = to_json(v.omega);
    verts.push_back(std::move(jv));
  }
  json edges = json::array();
  for (const auto& e : g.edges)
    edges.push_back({{"parent", e.parent.str()}, {"child", e.child.str()}, {"procedure", to_string(e.tag)}, {"j", e.j}});
  json conj = json::array();
  for (const auto& c : g.relations) conj.push_back({{"j", c.j}, {"n", c.n}, {"holds", c.holds}});
  return {{"params", to_json(g.params).at("params")},
          {"source", g.source.str()},
          {"sink", g.sink.str()},
          {"total_dim", g.total_dim()},
          {"vertices", verts},
          {"edges", edges},
          {"relations", conj},
          {"discrepancies", g.discrepancies}};
}

NetworkGraph network_from_json(const json& j) {
  NetworkGraph g;
  g.params = params_from_json(json{{"params", j.at("params")}});
  const int s = g.params.s();
  g.source = NetLabel::parse(j.at("source").get<std::string>(), s);
  g.sink = NetLabel::parse(j.at("sink").get<std::string>(), s);
  for (const auto& jv : j.at("vertices")) {
    NetVertex v;
    v.label = NetLabel::parse(jv.at("label").get<std::string>(), s);
    if (jv.contains("omega")) v.omega = vec_from_json(jv.at("omega"));
    v.m_prime = jv.at("m_prime").get<std::vector<int>>();
    v.predicted_dim = jv.at("predicted_dim").get<std::uint64_t>();
    v.exact_dim = opt_from_json(jv.at("exact_dim"));
    v.closure_dim = opt_from_json(jv.at("closure_dim"));
    v.vanished = jv.at("vanished").get<bool>();
    v.explained = jv.at("explained").get<bool>();
    g.vertices.emplace(v.label, std::move(v));
  }
  for (const auto& je : j.at("edges"))
    g.edges.push_back({NetLabel::parse(je.at("parent").get<std::string>(), s),
                       NetLabel::parse(je.at("child").get<std::string>(), s),
                       procedure_from_string(je.at("procedure").get<std::string>()), je.at("j").get<int>()});
  for (const auto& jc : j.at("relations"))
    g.relations.push_back({jc.at("j").get<int>(), jc.at("n").get<int>(), jc.at("holds").get<bool>()});
  g.discrepancies = j.at("discrepancies").get<std::vector<std::string>>();
  return g;
}

json to_json(const CheckResult& c) {
  json out = {{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}};
  if (!c.passed) out["detail"] = c.detail;
  return out;
}

json to_json(const SuiteResult& s) {
  json checks = json::array();
  for (const auto& c : s.checks) checks.push_back(to_json(c));
  return {{"module", s.module}, {"passed", s.passed()}, {"checks", checks}};
}

std::string to_dot(const NetworkGraph& g) {
  std::ostringstream os;
  os << "digraph network {\n  rankdir=TB;\n  node [shape=box];\n";
  std::map<NetLabel, std::string> id;
  int i = 0;
  for (const auto& [l, v] : g.vertices) {
    id[l] = "v" + std::to_string(i++);
    const std::uint64_t dim = v.exact_dim.value_or(v.predicted_dim);
    os << "  " << id[l] << " [label=\"" << l.str() << " | " << dim << "\"" << (v.vanished ? ", style=dashed" : "")
       << "];\n";
  }
  for (const auto& e : g.edges)
    os << "  " << id[e.parent] << " -> " << id[e.child] << " [label=\"(" << to_string(e.tag) << ")\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace loophw
