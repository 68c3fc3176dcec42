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

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "oometric/cyclomatic.hpp"

namespace oometric::testing {

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path);

struct CorpusEntry {
  std::string file;
  int cc = 0;
  cyclomatic::DecisionCount expected;
};

// Reads `expected.txt`: one row per snippet, columns
// file cc if case for while catch and or ternary. '#' starts a comment.
std::vector<CorpusEntry> load_cc_corpus(const std::filesystem::path& dir);

}  // namespace oometric::testing
