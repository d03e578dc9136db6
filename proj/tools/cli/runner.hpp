// Copyright 2026 The pishape Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef PISHAPE_TOOLS_CLI_RUNNER_HPP
#define PISHAPE_TOOLS_CLI_RUNNER_HPP

#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "sweep_spec.hpp"

namespace pishape::cli {

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> reports;  // one JSON object per sweep point
};

struct RunManifest {
  std::string tool_version;
  std::string timestamp;  // ISO-8601 UTC; SOURCE_DATE_EPOCH when set
  std::map<std::string, std::string> resolved_parameters;
  std::string input_hash;  // SHA-256 of the resolved parameters

  std::string to_json() const;
};

/// Runs the target over every sweep point. Throws ConfigError or
/// ComputeError.
Table compute(const SweepSpec& spec);

RunManifest make_manifest(const SweepSpec& spec);

std::string render_csv(const Table& t);
std::string render_json(const Table& t, const RunManifest& m);

std::string sha256_hex(std::string_view data);

/// Computes, renders and writes the table and the sidecar manifest. Nothing
/// is written to the output path unless the whole run succeeds. Returns the
/// process exit code: 0 ok, 1 computation failure, 2 configuration error.
int run(const SweepSpec& spec, std::ostream& out, std::ostream& err);

}  // namespace pishape::cli

#endif  // PISHAPE_TOOLS_CLI_RUNNER_HPP
