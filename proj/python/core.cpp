#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "loophw/cli.hpp"

namespace py = pybind11;
using namespace loophw;

namespace {

std::string analyze_json(const std::string& params, const std::string& construct, std::size_t cap) {
  const BuiltModule b = build_construct(HWParams::parse(params), construct, cap ? cap : default_cap());
  const HWReport rep = analyze(b.module, b.omega, b.params);
  return json{{"module", b.description}, {"dim", b.module.dim()}, {"report", to_json(rep)}}.dump();
}

std::string network_json(const std::string& params, int jobs) {
  const HWParams p = HWParams::parse(params);
  const ModuleRep w = weyl_module(p);
  const Vec omega = unit_vec(w.dim(), 0);
  return to_json(build_network(p, &w, &omega, jobs)).dump();
}

std::string network_dot(const std::string& params) {
  const HWParams p = HWParams::parse(params);
  const ModuleRep w = weyl_module(p);
  const Vec omega = unit_vec(w.dim(), 0);
  return to_dot(build_network(p, &w, &omega));
}

std::string verify_json(const std::optional<std::string>& params, std::uint64_t seed, int window) {
  SuiteOptions opt;
  opt.seed = seed;
  opt.window = window;
  std::vector<ZooEntry> zoo;
  if (params) {
    const HWParams p = HWParams::parse(*params);
    for (const char* c : {"weyl", "packed"}) {
      BuiltModule b = build_construct(p, c, default_cap());
      zoo.push_back({b.description, std::move(b.module), std::move(b.omega), b.params});
    }
  } else {
    zoo = module_zoo();
  }
  json suites = json::array();
  bool ok = true;
  for (const auto& z : zoo)
    for (const auto& res : {run_identity_suite(z, opt), run_structural_suite(z, opt)}) {
      ok = ok && res.passed();
      suites.push_back(to_json(res));
    }
  return json{{"passed", ok}, {"suites", suites}}.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact highest-weight analysis for the sl2 loop algebra";
  py::register_exception<CapError>(m, "CapError", PyExc_ValueError);
  py::register_exception<ParameterMismatch>(m, "ParameterMismatch", PyExc_ValueError);
  py::register_exception<NotHighestWeight>(m, "NotHighestWeight", PyExc_ValueError);

  m.def("analyze_json", &analyze_json, py::arg("params"), py::arg("construct") = "weyl", py::arg("cap") = 0);
  m.def("network_json", &network_json, py::arg("params"), py::arg("jobs") = 1);
  m.def("network_dot", &network_dot, py::arg("params"));
  m.def("verify_json", &verify_json, py::arg("params") = py::none(), py::arg("seed") = SuiteOptions{}.seed,
        py::arg("window") = SuiteOptions{}.window);
  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "loophw");
        std::vector<const char*> argv;
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
