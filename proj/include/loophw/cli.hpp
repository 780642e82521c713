#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "loophw/json_io.hpp"

namespace loophw {

enum ExitCode { kOk = 0, kUsage = 1, kDiscrepancy = 2 };

struct BuiltModule {
  std::string description;
  ModuleRep module;
  Vec omega;
  HWParams params;
};

// A product of w-operators, as (j, k) factors.
using WProduct = std::vector<std::pair<int, int>>;
// "1^1*2^1+2^2" → {{(1,1),(2,1)}, {(2,2)}}; a leading "w:" is accepted per generator.
std::vector<WProduct> parse_wspec(const std::string& text, const HWParams& p);
Vec apply_wproduct(const ModuleRep& m, const Vec& omega, const HWParams& p, const WProduct& w);

// construct ∈ {weyl, packed, quotient:<wspec>}.
BuiltModule build_construct(const HWParams& p, const std::string& construct, std::size_t cap);
// {"factors":[{"a":"2","m":1,"kind":"eval"},...], "quotient_by":["w:1^1",...]}
BuiltModule build_from_spec(const json& spec, std::size_t cap);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace loophw
