#pragma once

#include <string>

#include <json.hpp>

#include "loophw/network.hpp"

namespace loophw {

using json = nlohmann::ordered_json;

json to_json(const Scalar& x);
Scalar scalar_from_json(const json& j);

json to_json(const HWParams& p);  // {"params":[{"a":"2","m":2},...]}
HWParams params_from_json(const json& j);

json to_json(const LoopCombo& c);  // {"kind":"lower","terms":{"2":"1",...}}
LoopCombo combo_from_json(const json& j);

json to_json(const Vec& v);
Vec vec_from_json(const json& j);

// Components as sparse [row, col, "p/q"] triples per jet.
json to_json(const ModuleRep& m);
ModuleRep module_from_json(const json& j);

json to_json(const HWReport& r);
HWReport report_from_json(const json& j);

json to_json(const NetworkGraph& g);
NetworkGraph network_from_json(const json& j);

json to_json(const CheckResult& c);
json to_json(const SuiteResult& s);

// Graphviz: one node per vertex labelled "Σ | dim", vanished vertices dashed.
std::string to_dot(const NetworkGraph& g);

}  // namespace loophw
