// Copyright 2026 The oometric Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "oometric/report.hpp"
#include "oometric/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitAnalysis = 2;

}  // namespace

int main(int argc, char** argv) {
  using namespace oometric;

  CLI::App app{"Cyclomatic complexity, class coupling and their sum for Java sources and class files",
               "oometric"};
  app.set_version_flag("--version", std::string(kVersion));

  std::string mode = "auto";
  std::string policy = "literal";
  std::string format = "table";
  std::vector<std::string> prefixes;
  std::vector<std::string> paths;
  bool strict = false;

  app.add_option("--mode", mode, "Inputs to analyze")
      ->check(CLI::IsMember({"auto", "source", "class"}))
      ->capture_default_str();
  app.add_option("--policy", policy, "Coupling registration policy")
      ->check(CLI::IsMember({"literal", "extended"}))
      ->capture_default_str();
  app.add_option("--jdk-prefix", prefixes,
                 "Class-name prefix treated as platform library (repeatable; replaces the "
                 "default java. and javax.)")
      ->take_all()
      ->allow_extra_args(false);
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  app.add_flag("--strict", strict, "Fail on the first unreadable or malformed input");
  app.add_option("PATH", paths, "Files or directories to scan")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  report::ScanConfig config;
  config.roots.assign(paths.begin(), paths.end());
  config.mode = *report::parse_scan_mode(mode);
  config.policy = *coupling::parse_policy(policy);
  config.format = *report::parse_output_format(format);
  config.strict = strict;
  if (!prefixes.empty()) config.jdk_prefixes = prefixes;

  try {
    const auto result = report::analyze(config);
    std::cout << report::render(result, config.format);
    std::cout.flush();
    for (const auto& d : result.diagnostics) {
      std::cerr << "oometric: " << d.path << ": " << d.message << "\n";
    }
    return kExitOk;
  } catch (const report::ConfigError& e) {
    std::cerr << "oometric: " << e.what() << "\n";
    return kExitUsage;
  } catch (const report::AnalysisError& e) {
    std::cerr << "oometric: " << e.what() << "\n";
    return kExitAnalysis;
  }
}
