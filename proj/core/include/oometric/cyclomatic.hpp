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

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace oometric::cyclomatic {

// Decision points of one compilation unit, counted per token kind.
struct DecisionCount {
  int if_count = 0;
  int case_count = 0;
  int for_count = 0;
  int while_count = 0;
  int catch_count = 0;
  int and_op = 0;
  int or_op = 0;
  int ternary = 0;

  int total() const {
    return if_count + case_count + for_count + while_count + catch_count + and_op + or_op +
           ternary;
  }
  int cc() const { return total() + 1; }

  DecisionCount& operator+=(const DecisionCount& other);
  friend DecisionCount operator+(DecisionCount a, const DecisionCount& b) { return a += b; }
  friend bool operator==(const DecisionCount&, const DecisionCount&) = default;
};

struct SourceUnit {
  std::filesystem::path path;
  std::string text;
  // "<package>.<Type>" for the top-level type named after the file stem;
  // empty when no such type is declared.
  std::string primary_class;
};

class SourceError : public std::runtime_error {
 public:
  enum class Kind { Io, Encoding };
  SourceError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

// Blanks comments and the bodies of string, text-block and character literals
// with spaces. Literal delimiters and newlines are kept, so byte offsets and
// line numbers are preserved.
std::string strip_noncode(std::string_view text);

// Counts `if`, `case`, `for`, `while`, `catch`, `&&`, `||` and ternary `?`
// over text that has been through strip_noncode. `else`, `default`, `do`,
// `try` and `finally` are never counted.
//
// A `?` counts as a ternary only when the previous token is an identifier,
// literal, `)` or `]` and the next token is not `>`, `extends` or `super`,
// which excludes generic wildcards such as `List<? extends T>`.
DecisionCount count_decision_points(std::string_view stripped);

// Top-level type named `file_stem`, qualified by the package declaration.
std::string attribute_primary_class(std::string_view stripped, std::string_view file_stem);

// Checks UTF-8 (dropping a leading BOM) and attributes the unit.
SourceUnit make_source_unit(std::filesystem::path path, std::string text);
SourceUnit load_source_unit(const std::filesystem::path& path);

DecisionCount cc_of_source(const SourceUnit& unit);

}  // namespace oometric::cyclomatic
