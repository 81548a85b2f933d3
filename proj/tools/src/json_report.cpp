// Copyright (c) the coembed authors.
// SPDX-License-Identifier: Apache-2.0

#include "json_report.hpp"

#include <iostream>

namespace coembed::cli {

json make_report(const std::string& command, bool pass, json inputs) {
  json report;
  report["command"] = command;
  report["verdict"] = pass ? "pass" : "fail";
  report["inputs"] = std::move(inputs);
  return report;
}

void attach_definiteness(json& report, const DefinitenessReport& r) {
  report["extremal_eigenvalue"] = r.extremal_eigenvalue;
  report["tolerance"] = r.tolerance_used;
  if (r.witness) report["witness"] = *r.witness;
  if (r.quadratic_form_value) report["quadratic_form_value"] = *r.quadratic_form_value;
}

json violations_json(const std::vector<PairViolation>& violations) {
  json out = json::array();
  for (const PairViolation& v : violations) {
    out.push_back({{"i", v.i},
                   {"j", v.j},
                   {"distance", v.distance},
                   {"value", v.value},
                   {"lower", v.lower},
                   {"upper", v.upper},
                   {"side", v.below_lower ? "below_lower" : "above_upper"}});
  }
  return out;
}

void print_report(const json& report, bool json_mode) {
  if (json_mode) {
    std::cout << report.dump(2) << '\n';
    return;
  }
  std::cout << report["command"].get<std::string>() << ": "
            << (report["verdict"] == "pass" ? "PASS" : "FAIL") << '\n';
  for (const auto& [key, value] : report.items()) {
    if (key == "command" || key == "verdict" || key == "inputs") continue;
    std::cout << "  " << key << ": " << value.dump() << '\n';
  }
}

}  // namespace coembed::cli
