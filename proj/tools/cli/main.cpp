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


// pishape command-line front end.
//
//   pishape <source|channel|twoqubit|gates> [--config FILE] [--set key=value]...
//           [--format csv|json] [--out PATH|-]

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pishape/pishape.h"
#include "runner.hpp"
#include "sweep_spec.hpp"

namespace {

using pishape::cli::Target;

struct Command {
  const char* name;
  Target target;
  const char* description;
};

constexpr Command kCommands[] = {
    {"source", Target::source_delta_e, "spin splitting of the source film"},
    {"channel", Target::channel_qlm, "channel levels by quasilinearization"},
    {"twoqubit", Target::twoqubit_eigen, "closed-form vs numeric two-qubit eigensystem"},
    {"gates", Target::gate_check, "exchange gate identities at one angle"},
};

std::string describe_keys(Target t) {
  std::ostringstream out;
  out << "Config keys (target " << pishape::cli::target_name(t) << "):\n";
  for (const auto& k : pishape::cli::target_keys(t)) {
    out << "  " << k.name << " = " << k.default_value;
    if (!k.choices.empty()) {
      out << " (";
      for (std::size_t i = 0; i < k.choices.size(); ++i) out << (i ? "|" : "") << k.choices[i];
      out << ")";
    }
    out << "  " << k.help << "\n";
  }
  out << "  sweep_key, sweep_range = start,stop,steps  sweep one numeric key\n";
  out << "CSV columns:";
  if (t == Target::source_delta_e) {
    out << " x,y,e_up,e_down,delta_e (mode=local);"
           " h11,h22,h12_re,h12_im,e_up,e_down,delta_e (mode=integrated)";
  } else {
    const auto cols = pishape::cli::target_columns(t);
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : " ") << cols[i];
  }
  out << "\nA sweep adds the swept key as the first column unless it is already one.\n";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pishape: spin-qubit device model calculations"};
  app.set_version_flag("--version", std::string(pishape_version()));
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> overrides;
  std::string format;
  std::string out_path;
  for (const Command& c : kCommands) {
    CLI::App* sub = app.add_subcommand(c.name, c.description);
    sub->add_option("--config", config_path, "flat key=value file")->check(CLI::ExistingFile);
    sub->add_option("--set", overrides, "override key=value (repeatable)")->take_all();
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", out_path, "output path, or - for standard output");
    sub->footer(describe_keys(c.target));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Target target = Target::gate_check;
  for (const Command& c : kCommands)
    if (app.got_subcommand(c.name)) target = c.target;

  pishape::cli::SweepSpec spec;
  try {
    std::vector<std::pair<std::string, std::string>> pairs;
    if (!config_path.empty()) {
      std::ifstream f(config_path, std::ios::binary);
      if (!f) throw pishape::cli::ConfigError("cannot read config '" + config_path + "'");
      std::stringstream text;
      text << f.rdbuf();
      pairs = pishape::cli::parse_pairs(text.str());
    }
    for (const std::string& o : overrides) {
      const auto more = pishape::cli::parse_pairs(o);
      if (more.size() != 1) throw pishape::cli::ConfigError("--set expects key=value, got '" + o + "'");
      pairs.push_back(more.front());
    }
    if (!format.empty()) pairs.emplace_back("output_format", format);
    if (!out_path.empty()) pairs.emplace_back("output_path", out_path);
    spec = pishape::cli::resolve(pairs, target);
  } catch (const pishape::cli::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return pishape::cli::run(spec, std::cout, std::cerr);
}
