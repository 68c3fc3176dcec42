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

#include <algorithm>
#include <fstream>
#include <iterator>
#include <system_error>

#include "oometric/report.hpp"

namespace oometric::report {

namespace fs = std::filesystem;

namespace {

struct Walk {
  const ScanConfig& config;
  std::vector<fs::path> files;
  std::vector<Diagnostic> diagnostics;

  bool wanted(const fs::path& path) const {
    const auto ext = path.extension();
    if (ext == ".java") return config.mode != ScanMode::ClassOnly;
    if (ext == ".class") return config.mode != ScanMode::SourceOnly;
    return false;
  }

  void fail(const fs::path& path, const std::string& message) {
    if (config.strict) throw AnalysisError(path.generic_string() + ": " + message);
    diagnostics.push_back({path.generic_string(), message});
  }

  void directory(const fs::path& dir) {
    std::error_code ec;
    fs::directory_iterator it(dir, ec);
    if (ec) {
      fail(dir, ec.message());
      return;
    }
    std::vector<fs::path> children;
    for (const fs::directory_iterator end; it != end; it.increment(ec)) {
      if (ec) break;
      children.push_back(it->path());
    }
    if (ec) fail(dir, ec.message());
    std::sort(children.begin(), children.end());
    for (const auto& child : children) entry(child);
  }

  void entry(const fs::path& path) {
    std::error_code ec;
    const auto link_status = fs::symlink_status(path, ec);
    if (ec) {
      fail(path, ec.message());
      return;
    }
    if (fs::is_directory(link_status)) {
      directory(path);
    } else if (wanted(path)) {
      files.push_back(path);
    }
  }
};

std::optional<std::vector<std::uint8_t>> read_bytes(const fs::path& path, std::string& error) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    error = "cannot open";
    return std::nullopt;
  }
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) {
    error = "read failed";
    return std::nullopt;
  }
  return bytes;
}

}  // namespace

std::optional<ScanMode> parse_scan_mode(std::string_view text) {
  if (text == "auto") return ScanMode::Auto;
  if (text == "source") return ScanMode::SourceOnly;
  if (text == "class") return ScanMode::ClassOnly;
  return std::nullopt;
}

std::optional<OutputFormat> parse_output_format(std::string_view text) {
  if (text == "table") return OutputFormat::Table;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  return std::nullopt;
}

void ScanConfig::validate() const {
  if (roots.empty()) throw ConfigError("at least one path is required");
  for (const auto& prefix : jdk_prefixes) {
    if (prefix.empty()) throw ConfigError("JDK prefixes must be non-empty");
  }
}

ScanResult scan(const ScanConfig& config) {
  config.validate();
  Walk walk{config, {}, {}};
  for (const auto& root : config.roots) {
    std::error_code ec;
    const auto status = fs::status(root, ec);
    if (ec || !fs::exists(status)) {
      throw AnalysisError(root.generic_string() + ": cannot read root");
    }
    if (fs::is_directory(status)) {
      walk.directory(root);
    } else if (walk.wanted(root)) {
      walk.files.push_back(root);
    }
  }

  ScanResult result;
  for (const auto& path : walk.files) {
    if (path.extension() == ".java") {
      try {
        result.sources.push_back(cyclomatic::load_source_unit(path));
      } catch (const cyclomatic::SourceError& e) {
        walk.fail(path, e.what());
      }
    } else {
      std::string error;
      if (auto bytes = read_bytes(path, error)) {
        result.classes.push_back({path, std::move(*bytes)});
      } else {
        walk.fail(path, error);
      }
    }
  }
  result.diagnostics = std::move(walk.diagnostics);
  return result;
}

}  // namespace oometric::report
