// Copyright 2026 The dsfuse Authors.
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

#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "dsfuse/error.hpp"
#include "dsfuse/report.hpp"
#include "dsfuse/scenario.hpp"
#include "dsfuse/scenario_io.hpp"

namespace dsfuse::cli {

namespace {

// Thrown for problems that are the caller's fault but not CLI11's to catch,
// such as unreadable files.
struct UsageError {
  std::string message;
};

struct SourceFlags {
  std::string scenario_path;
  std::string builtin;
};

void AddSourceFlags(CLI::App* cmd, SourceFlags& flags) {
  auto* scenario = cmd->add_option("--scenario", flags.scenario_path,
                                   "Scenario document (JSON)");
  auto* builtin = cmd->add_option("--builtin", flags.builtin, "Built-in scenario")
                      ->check(CLI::IsMember({"takraw"}));
  scenario->excludes(builtin);
  builtin->excludes(scenario);
}

Scenario LoadScenario(const SourceFlags& flags) {
  if (!flags.builtin.empty()) return BuiltinTakrawScenario();
  if (flags.scenario_path.empty()) {
    throw UsageError{"one of --scenario or --builtin is required"};
  }
  std::ifstream in(flags.scenario_path, std::ios::binary);
  if (!in) throw UsageError{"cannot read scenario file '" + flags.scenario_path + "'"};
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return ParseScenario(text);
}

void WriteFile(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << content)) {
    throw UsageError{"cannot write '" + path + "'"};
  }
}

int ExitFor(ErrorCode code) {
  return code == ErrorCode::kTotalConflict ? kExitTotalConflict : kExitValidation;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dempster-Shafer evidence fusion", "dsfuse"};
  app.require_subcommand(1);

  SourceFlags fuse_src;
  std::size_t condition = 0;
  bool trace = false;
  std::string fuse_format = "table";
  int precision = kDefaultPrecision;
  auto* fuse = app.add_subcommand("fuse", "Fuse the evidence of one condition");
  AddSourceFlags(fuse, fuse_src);
  fuse->add_option("--condition", condition, "1-based condition index")->required();
  fuse->add_flag("--trace", trace, "Print every pairwise combination table");
  fuse->add_option("--format", fuse_format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  fuse->add_option("--precision", precision, "Decimals in table output")
      ->check(CLI::Range(kMinPrecision, kMaxPrecision));

  SourceFlags sweep_src;
  std::string sweep_format = "table";
  int sweep_precision = kDefaultPrecision;
  std::string plot_out;
  auto* sweep = app.add_subcommand("sweep", "Predict every condition");
  AddSourceFlags(sweep, sweep_src);
  sweep->add_option("--format", sweep_format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  sweep->add_option("--precision", sweep_precision, "Decimals in table output")
      ->check(CLI::Range(kMinPrecision, kMaxPrecision));
  sweep->add_option("--plot-out", plot_out, "Write long-form plot data CSV here");

  std::string export_name;
  std::string export_path;
  auto* exporter = app.add_subcommand("export-builtin",
                                      "Write a built-in scenario document");
  exporter->add_option("name", export_name, "Built-in scenario")
      ->required()
      ->check(CLI::IsMember({"takraw"}));
  exporter->add_option("--out", export_path, "Destination path, '-' for stdout")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "dsfuse: " << e.what() << "\n";
    return kExitUsage;
  }

  std::ostringstream buffer;
  try {
    if (fuse->parsed()) {
      const Scenario s = LoadScenario(fuse_src);
      const RunReport report = MakeRunReport(s, condition);
      if (fuse_format == "json") {
        buffer << RenderRunJson(report);
      } else if (fuse_format == "csv") {
        buffer << RenderRunCsv(report, trace);
      } else {
        buffer << RenderRunTable(report, trace, precision);
      }
      out << buffer.str();
      return kExitOk;
    }

    if (sweep->parsed()) {
      const Scenario s = LoadScenario(sweep_src);
      const std::vector<ConditionOutcome> outcomes =
          Sweep(s, SweepOptions{.parallel = true});
      if (sweep_format == "json") {
        buffer << RenderSweepJson(s, outcomes);
      } else if (sweep_format == "csv") {
        buffer << RenderSweepCsv(outcomes);
      } else {
        buffer << RenderSweepTable(s, outcomes, sweep_precision);
      }
      if (!plot_out.empty()) WriteFile(plot_out, RenderPlotData(s));
      out << buffer.str();
      int code = kExitOk;
      for (const auto& o : outcomes) {
        if (o.ok()) continue;
        err << "dsfuse: condition " << o.condition << ": " << o.failure->message
            << "\n";
        code = std::max(code, ExitFor(o.failure->code));
      }
      return code;
    }

    const std::string document = EmitScenario(BuiltinTakrawScenario());
    if (export_path == "-") {
      out << document;
    } else {
      WriteFile(export_path, document);
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "dsfuse: " << e.message << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "dsfuse: " << ErrorCodeName(e.code()) << ": " << e.what() << "\n";
    return ExitFor(e.code());
  }
}

}  // namespace dsfuse::cli
