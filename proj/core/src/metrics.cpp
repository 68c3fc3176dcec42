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

#include "oometric/metrics.hpp"

#include <stdexcept>

namespace oometric::metrics {

std::string_view to_string(RiskLevel risk) {
  switch (risk) {
    case RiskLevel::Low: return "Low";
    case RiskLevel::Moderate: return "Moderate";
    case RiskLevel::High: return "High";
    case RiskLevel::Untestable: return "Untestable";
  }
  return "?";
}

RiskLevel classify_risk(int new_cc) {
  if (new_cc < 1) throw std::invalid_argument("complexity must be >= 1");
  if (new_cc <= 10) return RiskLevel::Low;
  if (new_cc <= 20) return RiskLevel::Moderate;
  if (new_cc <= 40) return RiskLevel::High;
  return RiskLevel::Untestable;
}

int combine(int cc, int cbo) {
  if (cc < 1 || cbo < 0) throw std::invalid_argument("combine needs cc >= 1 and cbo >= 0");
  return cc + cbo;
}

std::string_view to_string(Provenance provenance) {
  switch (provenance) {
    case Provenance::SourceOnly: return "source-only";
    case Provenance::ClassOnly: return "class-only";
    case Provenance::Paired: return "paired";
  }
  return "?";
}

MetricsRecord make_record(std::string class_name, std::optional<int> cc, std::optional<int> cbo,
                          std::optional<int> cfg_cc) {
  if (!cc && !cbo) throw std::invalid_argument("record for " + class_name + " has no metrics");
  MetricsRecord r;
  r.class_name = std::move(class_name);
  r.cc = cc;
  r.cbo = cbo;
  r.cfg_cc = cfg_cc;
  if (cc && cbo) {
    r.new_cc = combine(*cc, *cbo);
    r.risk = classify_risk(*r.new_cc);
    r.provenance = Provenance::Paired;
  } else {
    r.provenance = cc ? Provenance::SourceOnly : Provenance::ClassOnly;
  }
  return r;
}

}  // namespace oometric::metrics
