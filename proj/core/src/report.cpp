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
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "oometric/cfg.hpp"
#include "oometric/classfile.hpp"
#include "oometric/report.hpp"
#include "oometric/version.hpp"

namespace oometric::report {

using metrics::MetricsRecord;

Pairing pair_units(const std::vector<SourceMeasurement>& sources,
                   const std::vector<ClassMeasurement>& classes) {
  Pairing out;
  std::map<std::string, const SourceMeasurement*> by_source;
  std::map<std::string, const ClassMeasurement*> by_class;

  for (const auto& s : sources) {
    auto [it, inserted] = by_source.emplace(s.class_name, &s);
    if (!inserted) {
      out.diagnostics.push_back({s.path, "class " + s.class_name + " already attributed to " +
                                             it->second->path + "; ignoring this file"});
    }
  }
  for (const auto& c : classes) {
    auto [it, inserted] = by_class.emplace(c.class_name, &c);
    if (!inserted) {
      out.diagnostics.push_back({c.path, "class " + c.class_name + " already defined by " +
                                             it->second->path + "; ignoring this file"});
    }
  }

  std::vector<std::string> names;
  for (const auto& [name, _] : by_source) names.push_back(name);
  for (const auto& [name, _] : by_class) names.push_back(name);
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());

  for (const auto& name : names) {
    std::optional<int> cc, cbo, cfg_cc;
    if (const auto it = by_source.find(name); it != by_source.end()) cc = it->second->cc;
    if (const auto it = by_class.find(name); it != by_class.end()) {
      cbo = it->second->cbo;
      cfg_cc = it->second->cfg_cc;
    }
    out.records.push_back(metrics::make_record(name, cc, cbo, cfg_cc));
  }
  return out;
}

Summary summarize(const std::vector<MetricsRecord>& records) {
  Summary s;
  s.records = records.size();
  for (const auto& r : records) {
    switch (r.provenance) {
      case metrics::Provenance::Paired: ++s.paired; break;
      case metrics::Provenance::SourceOnly: ++s.source_only; break;
      case metrics::Provenance::ClassOnly: ++s.class_only; break;
    }
    if (r.risk) ++s.by_risk[static_cast<std::size_t>(*r.risk)];
  }
  return s;
}

Report build_report(const ScanResult& scanned, const ScanConfig& config) {
  Report report;
  report.diagnostics = scanned.diagnostics;
  auto fail = [&](const std::string& path, const std::string& message) {
    if (config.strict) throw AnalysisError(path + ": " + message);
    report.diagnostics.push_back({path, message});
  };

  std::vector<SourceMeasurement> sources;
  for (const auto& unit : scanned.sources) {
    const auto path = unit.path.generic_string();
    if (unit.primary_class.empty()) {
      fail(path, "no top-level type named " + unit.path.stem().string() + "; not attributed");
      continue;
    }
    sources.push_back({path, unit.primary_class, cyclomatic::cc_of_source(unit).cc()});
  }

  std::vector<ClassMeasurement> classes;
  for (const auto& input : scanned.classes) {
    const auto path = input.path.generic_string();
    try {
      const auto cls = classfile::parse_class(input.bytes);
      const auto result = coupling::compute_cbo(cls, config.policy, config.jdk_prefixes);
      classes.push_back({path, cls.name(), static_cast<int>(result.cbo),
                         cyclomatic::class_cfg_cc(cls)});
    } catch (const classfile::ClassFormatError& e) {
      fail(path, e.what());
    }
  }

  auto pairing = pair_units(sources, classes);
  report.records = std::move(pairing.records);
  report.diagnostics.insert(report.diagnostics.end(), pairing.diagnostics.begin(),
                            pairing.diagnostics.end());
  report.summary = summarize(report.records);
  return report;
}

Report analyze(const ScanConfig& config) { return build_report(scan(config), config); }

namespace {

std::string cell(const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); }

std::string risk_cell(const std::optional<metrics::RiskLevel>& r) {
  return r ? std::string(metrics::to_string(*r)) : std::string();
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\r\n") == std::string::npos) return value;
  std::string out = "\"";
  for (const char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

template <typename T>
nlohmann::ordered_json nullable(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

std::string render_table(const Report& report) {
  const std::vector<std::string> header = {"S.No", "Class", "CC", "CBO", "NewCC", "Risk"};
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const auto& r = report.records[i];
    rows.push_back({std::to_string(i + 1), r.class_name, cell(r.cc), cell(r.cbo), cell(r.new_cc),
                    risk_cell(r.risk)});
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
  }
  // Class and Risk are left-aligned, numbers right-aligned.
  auto line = [&](const std::vector<std::string>& row) {
    std::string out;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const std::string pad(width[c] - row[c].size(), ' ');
      const bool left = c == 1 || c == 5;
      if (c) out += "  ";
      out += left ? row[c] + pad : pad + row[c];
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out + "\n";
  };
  std::string out = line(header);
  std::string rule;
  for (std::size_t c = 0; c < width.size(); ++c) {
    if (c) rule += "  ";
    rule += std::string(width[c], '-');
  }
  out += rule + "\n";
  for (const auto& row : rows) out += line(row);

  const auto& s = report.summary;
  std::ostringstream footer;
  footer << "\n"
         << s.records << " classes (" << s.paired << " paired, " << s.source_only
         << " source-only, " << s.class_only << " class-only); risk: Low " << s.by_risk[0]
         << ", Moderate " << s.by_risk[1] << ", High " << s.by_risk[2] << ", Untestable "
         << s.by_risk[3] << "\n";
  return out + footer.str();
}

std::string render_csv(const Report& report) {
  std::string out = "class,cc,cbo,new_cc,risk\n";
  for (const auto& r : report.records) {
    out += csv_field(r.class_name) + "," + cell(r.cc) + "," + cell(r.cbo) + "," + cell(r.new_cc) +
           "," + risk_cell(r.risk) + "\n";
  }
  return out;
}

std::string render_json(const Report& report) {
  using json = nlohmann::ordered_json;
  json doc;
  doc["tool_version"] = std::string(kVersion);
  json records = json::array();
  for (const auto& r : report.records) {
    json rec;
    rec["class"] = r.class_name;
    rec["cc"] = nullable(r.cc);
    rec["cbo"] = nullable(r.cbo);
    rec["new_cc"] = nullable(r.new_cc);
    rec["risk"] = r.risk ? json(std::string(metrics::to_string(*r.risk))) : json(nullptr);
    rec["provenance"] = std::string(metrics::to_string(r.provenance));
    rec["cfg_cc"] = nullable(r.cfg_cc);
    records.push_back(std::move(rec));
  }
  doc["records"] = std::move(records);

  const auto& s = report.summary;
  json summary;
  summary["records"] = s.records;
  summary["paired"] = s.paired;
  summary["source_only"] = s.source_only;
  summary["class_only"] = s.class_only;
  json risk;
  for (std::size_t i = 0; i < s.by_risk.size(); ++i) {
    risk[std::string(metrics::to_string(static_cast<metrics::RiskLevel>(i)))] = s.by_risk[i];
  }
  summary["risk"] = std::move(risk);
  doc["summary"] = std::move(summary);

  json diagnostics = json::array();
  for (const auto& d : report.diagnostics) {
    diagnostics.push_back(json{{"path", d.path}, {"message", d.message}});
  }
  doc["diagnostics"] = std::move(diagnostics);
  return doc.dump(2) + "\n";
}

std::string render(const Report& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::Table: return render_table(report);
    case OutputFormat::Csv: return render_csv(report);
    case OutputFormat::Json: return render_json(report);
  }
  return {};
}

}  // namespace oometric::report
