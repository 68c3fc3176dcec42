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

#include "fixtures.hpp"

#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>

namespace oometric::testing {

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<CorpusEntry> load_cc_corpus(const std::filesystem::path& dir) {
  std::ifstream in(dir / "expected.txt");
  if (!in) throw std::runtime_error("cannot open " + (dir / "expected.txt").string());
  std::vector<CorpusEntry> out;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    CorpusEntry e;
    if (!(row >> e.file)) continue;
    auto& d = e.expected;
    if (!(row >> e.cc >> d.if_count >> d.case_count >> d.for_count >> d.while_count >>
          d.catch_count >> d.and_op >> d.or_op >> d.ternary)) {
      throw std::runtime_error("malformed corpus row: " + line);
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace oometric::testing
