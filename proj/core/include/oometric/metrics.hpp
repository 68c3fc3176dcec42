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

#include <optional>
#include <string>
#include <string_view>

namespace oometric::metrics {

// Ordered: Low < Moderate < High < Untestable.
enum class RiskLevel { Low, Moderate, High, Untestable };

std::string_view to_string(RiskLevel risk);

// Bands: [1,10] Low, [11,20] Moderate, [21,40] High, [41,inf) Untestable.
RiskLevel classify_risk(int new_cc);

// Cyclomatic complexity plus coupling between object classes.
int combine(int cc, int cbo);

enum class Provenance { SourceOnly, ClassOnly, Paired };

std::string_view to_string(Provenance provenance);

// One report row. new_cc and risk are present exactly when both cc and cbo are.
struct MetricsRecord {
  std::string class_name;
  std::optional<int> cc;
  std::optional<int> cbo;
  std::optional<int> new_cc;
  std::optional<RiskLevel> risk;
  Provenance provenance = Provenance::Paired;
  // Bytecode control-flow complexity, when a class file was available.
  std::optional<int> cfg_cc;

  friend bool operator==(const MetricsRecord&, const MetricsRecord&) = default;
};

// Builds a record and derives new_cc, risk and provenance. At least one of
// cc and cbo must be given.
MetricsRecord make_record(std::string class_name, std::optional<int> cc, std::optional<int> cbo,
                          std::optional<int> cfg_cc = std::nullopt);

}  // namespace oometric::metrics
