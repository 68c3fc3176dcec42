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

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "oometric/coupling.hpp"
#include "oometric/cyclomatic.hpp"
#include "oometric/metrics.hpp"

namespace oometric::report {

enum class ScanMode { Auto, SourceOnly, ClassOnly };
enum class OutputFormat { Table, Csv, Json };

std::optional<ScanMode> parse_scan_mode(std::string_view text);        // auto|source|class
std::optional<OutputFormat> parse_output_format(std::string_view text);  // table|csv|json

struct ScanConfig {
  std::vector<std::filesystem::path> roots;
  ScanMode mode = ScanMode::Auto;
  coupling::CouplingPolicy policy = coupling::CouplingPolicy::Literal;
  std::vector<std::string> jdk_prefixes = coupling::default_jdk_prefixes();
  OutputFormat format = OutputFormat::Table;
  bool strict = false;

  // Throws ConfigError when there is no root or a prefix is empty.
  void validate() const;
};

// Bad configuration (exit status 1).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unreadable root, or any per-file failure under strict mode (exit status 2).
class AnalysisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Diagnostic {
  std::string path;
  std::string message;
  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

struct ClassInput {
  std::filesystem::path path;
  std::vector<std::uint8_t> bytes;
};

struct ScanResult {
  std::vector<cyclomatic::SourceUnit> sources;
  std::vector<ClassInput> classes;
  std::vector<Diagnostic> diagnostics;
};

// Recursively collects .java and .class files (as the mode permits) in
// sorted path order. Directory symlinks are not followed.
ScanResult scan(const ScanConfig& config);

struct SourceMeasurement {
  std::string path;
  std::string class_name;
  int cc = 1;
};

struct ClassMeasurement {
  std::string path;
  std::string class_name;
  int cbo = 0;
  int cfg_cc = 1;
};

struct Pairing {
  std::vector<metrics::MetricsRecord> records;  // sorted by class name
  std::vector<Diagnostic> diagnostics;
};

// Joins measurements on class name. Inputs are taken in the order given; when
// two inputs of the same kind claim one class, the first wins and the clash
// is reported.
Pairing pair_units(const std::vector<SourceMeasurement>& sources,
                   const std::vector<ClassMeasurement>& classes);

struct Summary {
  std::size_t records = 0;
  std::size_t paired = 0;
  std::size_t source_only = 0;
  std::size_t class_only = 0;
  std::array<std::size_t, 4> by_risk{};  // indexed by RiskLevel
  friend bool operator==(const Summary&, const Summary&) = default;
};

struct Report {
  std::vector<metrics::MetricsRecord> records;
  std::vector<Diagnostic> diagnostics;
  Summary summary;
};

Summary summarize(const std::vector<metrics::MetricsRecord>& records);

// Measures everything `scan` found and pairs the results.
Report build_report(const ScanResult& scanned, const ScanConfig& config);

// scan + build_report.
Report analyze(const ScanConfig& config);

std::string render(const Report& report, OutputFormat format);
std::string render_table(const Report& report);
std::string render_csv(const Report& report);
std::string render_json(const Report& report);

}  // namespace oometric::report
