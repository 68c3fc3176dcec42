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

#include <benchmark/benchmark.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "oometric/cfg.hpp"
#include "oometric/classfile.hpp"
#include "oometric/coupling.hpp"
#include "oometric/cyclomatic.hpp"
#include "oometric/descriptor.hpp"
#include "oometric/forge.hpp"
#include "oometric/report.hpp"

using namespace oometric;
namespace fs = std::filesystem;

namespace {

std::vector<std::vector<std::uint8_t>> corpus(std::size_t n) {
  std::vector<std::vector<std::uint8_t>> out;
  out.reserve(n);
  forge::RandomBounds bounds;
  bounds.max_instructions = 64;
  for (std::uint64_t seed = 0; seed < n; ++seed) {
    out.push_back(forge::build(forge::random_class(seed, bounds).spec));
  }
  return out;
}

std::string java_source(int methods) {
  std::string s = "package bench;\n\npublic class Big {\n";
  for (int i = 0; i < methods; ++i) {
    s += "    /* if while for */\n";
    s += "    int m" + std::to_string(i) + "(int a, java.util.List<? extends Number> xs) {\n";
    s += "        String t = \"case && || ?\";\n";
    s += "        for (int i = 0; i < a; i++) {\n";
    s += "            if (a > i && i % 2 == 0 || a < 0) { a--; }\n";
    s += "        }\n";
    s += "        switch (a) { case 1: return 1; case 2: return 2; default: break; }\n";
    s += "        return a > 0 ? a : -a;\n";
    s += "    }\n";
  }
  return s + "}\n";
}

void BM_ParseClass(benchmark::State& state) {
  const auto classes = corpus(64);
  std::size_t bytes = 0;
  for (auto _ : state) {
    for (const auto& c : classes) {
      benchmark::DoNotOptimize(classfile::parse_class(c));
      bytes += c.size();
    }
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(bytes));
}
BENCHMARK(BM_ParseClass);

void BM_ComputeCbo(benchmark::State& state) {
  std::vector<classfile::RawClassFile> parsed;
  for (const auto& c : corpus(64)) parsed.push_back(classfile::parse_class(c));
  const auto policy = state.range(0) == 0 ? coupling::CouplingPolicy::Literal
                                          : coupling::CouplingPolicy::Extended;
  for (auto _ : state) {
    for (const auto& cls : parsed) benchmark::DoNotOptimize(coupling::compute_cbo(cls, policy));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(parsed.size()));
}
BENCHMARK(BM_ComputeCbo)->Arg(0)->Arg(1);

void BM_ClassCfgCc(benchmark::State& state) {
  std::vector<classfile::RawClassFile> parsed;
  for (const auto& c : corpus(64)) parsed.push_back(classfile::parse_class(c));
  for (auto _ : state) {
    for (const auto& cls : parsed) benchmark::DoNotOptimize(cyclomatic::class_cfg_cc(cls));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(parsed.size()));
}
BENCHMARK(BM_ClassCfgCc);

void BM_CcOfSource(benchmark::State& state) {
  const auto unit = cyclomatic::make_source_unit(
      "Big.java", java_source(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(cyclomatic::cc_of_source(unit));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(unit.text.size()));
}
BENCHMARK(BM_CcOfSource)->Arg(10)->Arg(200);

void BM_AnalyzeTree(benchmark::State& state) {
  std::random_device rd;
  const auto root = fs::temp_directory_path() / ("oometric-bench-" + std::to_string(rd()));
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (std::uint64_t seed = 0; seed < n; ++seed) {
    const auto spec = forge::random_class(seed).spec;
    const auto path = root / (classfile::to_internal_name(spec.name) + ".class");
    fs::create_directories(path.parent_path());
    const auto bytes = forge::build(spec);
    std::ofstream(path, std::ios::binary)
        .write(reinterpret_cast<const char*>(bytes.data()),
               static_cast<std::streamsize>(bytes.size()));
  }
  report::ScanConfig config;
  config.roots = {root};
  config.mode = report::ScanMode::ClassOnly;
  for (auto _ : state) benchmark::DoNotOptimize(report::render_json(report::analyze(config)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
  fs::remove_all(root);
}
BENCHMARK(BM_AnalyzeTree)->Arg(500)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
