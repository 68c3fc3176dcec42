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

#include <doctest.h>

#include <nlohmann/json.hpp>

#include "oometric/forge.hpp"
#include "oometric/report.hpp"
#include "oometric/version.hpp"
#include "temp_dir.hpp"

using namespace oometric;
using namespace oometric::report;
using oometric::testing::TempDir;

namespace {

std::vector<std::uint8_t> class_bytes(const std::string& name, std::vector<std::string> fields = {}) {
  forge::ForgeClass spec;
  spec.name = name;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    spec.fields.push_back({"f" + std::to_string(i), forge::class_type(fields[i])});
  }
  return forge::build(spec);
}

ScanConfig config_for(const std::filesystem::path& root) {
  ScanConfig config;
  config.roots = {root};
  return config;
}

}  // namespace

TEST_CASE("parsing options") {
  CHECK(parse_scan_mode("auto") == ScanMode::Auto);
  CHECK(parse_scan_mode("source") == ScanMode::SourceOnly);
  CHECK(parse_scan_mode("class") == ScanMode::ClassOnly);
  CHECK_FALSE(parse_scan_mode("both"));
  CHECK(parse_output_format("json") == OutputFormat::Json);
  CHECK_FALSE(parse_output_format("xml"));
}

TEST_CASE("config validation") {
  ScanConfig config;
  CHECK_THROWS_AS(config.validate(), ConfigError);
  config.roots = {"."};
  CHECK_NOTHROW(config.validate());
  config.jdk_prefixes = {""};
  CHECK_THROWS_AS(config.validate(), ConfigError);
}

TEST_CASE("scanning") {
  TempDir dir;
  SUBCASE("empty directory") {
    const auto result = scan(config_for(dir.path()));
    CHECK(result.sources.empty());
    CHECK(result.classes.empty());
    CHECK(result.diagnostics.empty());
  }
  SUBCASE("one class file") {
    dir.write("out/p/A.class", class_bytes("p.A"));
    dir.write("notes.txt", "ignored");
    const auto result = scan(config_for(dir.path()));
    CHECK(result.classes.size() == 1);
    CHECK(result.sources.empty());
  }
  SUBCASE("modes") {
    dir.write("p/A.java", "package p; class A {}");
    dir.write("p/A.class", class_bytes("p.A"));
    auto config = config_for(dir.path());
    config.mode = ScanMode::SourceOnly;
    CHECK(scan(config).classes.empty());
    CHECK(scan(config).sources.size() == 1);
    config.mode = ScanMode::ClassOnly;
    CHECK(scan(config).sources.empty());
    CHECK(scan(config).classes.size() == 1);
  }
  SUBCASE("sorted order") {
    dir.write("b/Z.java", "class Z {}");
    dir.write("a/Y.java", "class Y {}");
    dir.write("a/X.java", "class X {}");
    const auto result = scan(config_for(dir.path()));
    REQUIRE(result.sources.size() == 3);
    CHECK(result.sources[0].path.filename() == "X.java");
    CHECK(result.sources[1].path.filename() == "Y.java");
    CHECK(result.sources[2].path.filename() == "Z.java");
  }
  SUBCASE("dangling symlink becomes a diagnostic") {
    std::filesystem::create_symlink(dir.path() / "nowhere.class", dir.path() / "Gone.class");
    dir.write("p/A.class", class_bytes("p.A"));
    const auto result = scan(config_for(dir.path()));
    CHECK(result.classes.size() == 1);
    REQUIRE(result.diagnostics.size() == 1);
    CHECK(result.diagnostics[0].path.find("Gone.class") != std::string::npos);
    auto strict = config_for(dir.path());
    strict.strict = true;
    CHECK_THROWS_AS(scan(strict), AnalysisError);
  }
  SUBCASE("directory symlinks are not followed") {
    dir.write("real/p/A.class", class_bytes("p.A"));
    std::filesystem::create_directory_symlink(dir.path() / "real", dir.path() / "link");
    CHECK(scan(config_for(dir.path())).classes.size() == 1);
  }
  SUBCASE("missing root") {
    CHECK_THROWS_AS(scan(config_for(dir.path() / "missing")), AnalysisError);
  }
  SUBCASE("file roots") {
    const auto file = dir.write("Solo.java", "class Solo { void m() { if (a) {} } }");
    const auto result = scan(config_for(file));
    REQUIRE(result.sources.size() == 1);
    CHECK(result.sources[0].primary_class == "Solo");
  }
  SUBCASE("undecodable source") {
    dir.write("p/Bad.java", "class Bad { String s = \"\xC0\"; }");
    const auto result = scan(config_for(dir.path()));
    CHECK(result.sources.empty());
    CHECK(result.diagnostics.size() == 1);
  }
}

TEST_CASE("pairing") {
  const auto pairing = pair_units({{"src/p/A.java", "p.A", 4}, {"src/p/B.java", "p.B", 2}},
                                  {{"out/p/A.class", "p.A", 0, 3}, {"out/p/C.class", "p.C", 5, 1}});
  REQUIRE(pairing.records.size() == 3);
  CHECK(pairing.records[0].class_name == "p.A");
  CHECK(pairing.records[0].provenance == metrics::Provenance::Paired);
  CHECK(pairing.records[0].new_cc == 4);
  CHECK(pairing.records[1].provenance == metrics::Provenance::SourceOnly);
  CHECK(pairing.records[2].provenance == metrics::Provenance::ClassOnly);
  CHECK_FALSE(pairing.records[2].cc);
  CHECK(pairing.diagnostics.empty());
}

TEST_CASE("duplicate attribution keeps the first path") {
  const auto pairing = pair_units({{"a/p/A.java", "p.A", 4}, {"b/p/A.java", "p.A", 9}}, {});
  REQUIRE(pairing.records.size() == 1);
  CHECK(pairing.records[0].cc == 4);
  REQUIRE(pairing.diagnostics.size() == 1);
  CHECK(pairing.diagnostics[0].path == "b/p/A.java");
  CHECK(pairing.diagnostics[0].message.find("a/p/A.java") != std::string::npos);
}

TEST_CASE("analysis of a mixed tree") {
  TempDir dir;
  dir.write("src/p/A.java", "package p;\npublic class A { int m(int x) { if (x > 0 && x < 9) return 1; return 0; } }\n");
  dir.write("src/p/Orphan.java", "package p; class Other {}");
  dir.write("classes/p/A.class", class_bytes("p.A", {"q.X", "q.Y"}));
  dir.write("classes/p/Lone.class", class_bytes("p.Lone"));
  dir.write("classes/p/Broken.class", std::string_view("\xCA\xFE\xBA\xBE\x00"));

  const auto report = analyze(config_for(dir.path()));
  REQUIRE(report.records.size() == 2);
  CHECK(report.records[0].class_name == "p.A");
  CHECK(report.records[0].cc == 3);
  CHECK(report.records[0].cbo == 2);
  CHECK(report.records[0].new_cc == 5);
  CHECK(report.records[0].risk == metrics::RiskLevel::Low);
  CHECK(report.records[0].cfg_cc == 1);
  CHECK(report.records[1].class_name == "p.Lone");
  CHECK(report.diagnostics.size() == 2);
  CHECK(report.summary.records == 2);
  CHECK(report.summary.paired == 1);
  CHECK(report.summary.class_only == 1);
  CHECK(report.summary.by_risk[0] == 1);

  auto strict = config_for(dir.path());
  strict.strict = true;
  CHECK_THROWS_AS(analyze(strict), AnalysisError);
}

TEST_CASE("extended policy and prefixes reach the analysis") {
  TempDir dir;
  dir.write("p/A.class", class_bytes("p.A", {"org.apache.X", "q.Y"}));
  auto config = config_for(dir.path());
  CHECK(analyze(config).records[0].cbo == 2);
  config.jdk_prefixes = {"java.", "javax.", "org.apache."};
  CHECK(analyze(config).records[0].cbo == 1);
}

TEST_CASE("csv rendering") {
  Report empty;
  CHECK(render_csv(empty) == "class,cc,cbo,new_cc,risk\n");

  Report r;
  r.records = {metrics::make_record("p.A", 4, 0), metrics::make_record("p.C", std::nullopt, 2),
               metrics::make_record("p.Q,\"x\"", 1, std::nullopt)};
  r.summary = summarize(r.records);
  CHECK(render_csv(r) ==
        "class,cc,cbo,new_cc,risk\n"
        "p.A,4,0,4,Low\n"
        "p.C,,2,,\n"
        "\"p.Q,\"\"x\"\"\",1,,,\n");
}

TEST_CASE("json rendering") {
  Report r;
  r.records = {metrics::make_record("p.A", 18, 21, 17), metrics::make_record("p.C", std::nullopt, 2)};
  r.diagnostics = {{"x/Bad.class", "Truncated: input ends"}};
  r.summary = summarize(r.records);
  const auto text = render_json(r);
  CHECK(text.back() == '\n');
  const auto doc = nlohmann::ordered_json::parse(text);
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"tool_version", "records", "summary", "diagnostics"});
  CHECK(doc["tool_version"] == std::string(kVersion));
  CHECK(doc["records"][0]["new_cc"] == 39);
  CHECK(doc["records"][0]["risk"] == "High");
  CHECK(doc["records"][0]["provenance"] == "paired");
  CHECK(doc["records"][0]["cfg_cc"] == 17);
  CHECK(doc["records"][1]["cc"].is_null());
  CHECK(doc["records"][1]["risk"].is_null());
  CHECK(doc["summary"]["risk"]["High"] == 1);
  CHECK(doc["summary"]["class_only"] == 1);
  CHECK(doc["diagnostics"][0]["path"] == "x/Bad.class");
}

TEST_CASE("table rendering") {
  Report r;
  r.records = {metrics::make_record("org.x.AccessFlags", 4, 0), metrics::make_record("p.B", 3, std::nullopt)};
  r.summary = summarize(r.records);
  const auto table = render_table(r);
  CHECK(table.rfind("S.No  Class              CC  CBO  NewCC  Risk\n", 0) == 0);
  CHECK(table.find("   1  org.x.AccessFlags   4    0      4  Low\n") != std::string::npos);
  CHECK(table.find("   2  p.B                 3\n") != std::string::npos);
  CHECK(table.find("2 classes (1 paired, 1 source-only, 0 class-only)") != std::string::npos);
  CHECK(render(r, OutputFormat::Table) == table);
}

TEST_CASE("rendering is deterministic") {
  TempDir dir;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto rc = forge::random_class(seed);
    dir.write("c/" + std::to_string(seed) + ".class", forge::build(rc.spec));
  }
  const auto config = config_for(dir.path());
  const auto a = analyze(config);
  const auto b = analyze(config);
  for (const auto format : {OutputFormat::Table, OutputFormat::Csv, OutputFormat::Json}) {
    CHECK(render(a, format) == render(b, format));
  }
  CHECK(a.records.size() == 30);
}
