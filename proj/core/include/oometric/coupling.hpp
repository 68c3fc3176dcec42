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

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oometric/classfile.hpp"
#include "oometric/descriptor.hpp"

namespace oometric::coupling {

// Literal registers exactly one type per categorized instruction. Extended
// also registers field/method owners, invoke argument types and the catch
// types of exception handlers.
enum class CouplingPolicy { Literal, Extended };

std::string_view to_string(CouplingPolicy policy);
std::optional<CouplingPolicy> parse_policy(std::string_view text);

// {"java.", "javax."}
std::vector<std::string> default_jdk_prefixes();

// Unique external class names referenced by one analyzed class. The analyzed
// class itself and names under a JDK prefix are never members.
class CouplingSet {
 public:
  CouplingSet(std::string analyzed_class, CouplingPolicy policy,
              std::vector<std::string> jdk_prefixes = default_jdk_prefixes());

  // Returns true when `name` was newly added.
  bool register_coupling(std::string_view name);
  bool register_type(const classfile::TypeDescriptor& type);

  bool is_jdk_class(std::string_view name) const;

  const std::string& analyzed_class() const { return analyzed_class_; }
  CouplingPolicy policy() const { return policy_; }
  const std::vector<std::string>& jdk_prefixes() const { return jdk_prefixes_; }
  const std::set<std::string, std::less<>>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }
  bool contains(std::string_view name) const { return names_.contains(name); }

 private:
  std::string analyzed_class_;
  CouplingPolicy policy_;
  std::vector<std::string> jdk_prefixes_;
  std::set<std::string, std::less<>> names_;
};

// Class name carried by a type: primitives, void and arrays carry none.
std::optional<std::string> class_name_of_type(const classfile::TypeDescriptor& type);

struct CouplingResult {
  std::size_t cbo = 0;
  CouplingSet set;
};

// Walks superclass, interfaces, field types, method signatures, declared
// exceptions, local variable types and categorized instructions.
CouplingResult compute_cbo(const classfile::RawClassFile& cls,
                           CouplingPolicy policy = CouplingPolicy::Literal,
                           std::span<const std::string> jdk_prefixes = {});

}  // namespace oometric::coupling
