// Copyright (c) the coembed authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>
#include <string>

#include "coembed/coarse.hpp"
#include "coembed/kernels.hpp"

namespace coembed::cli {

using json = nlohmann::json;

// The verdict report schema lives in tools/schema/verdict_report.schema.json;
// every JSON document the CLI prints validates against it. A witness is
// present exactly when a definiteness command fails.

json make_report(const std::string& command, bool pass, json inputs);
void attach_definiteness(json& report, const DefinitenessReport& r);
json violations_json(const std::vector<PairViolation>& violations);

// Prints the report: JSON when json_mode, otherwise compact human-readable
// lines. Output is byte-deterministic for identical inputs.
void print_report(const json& report, bool json_mode);

}  // namespace coembed::cli
