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

#include "oometric/coupling.hpp"

namespace oometric::coupling {

using classfile::InstructionCategory;
using classfile::TypeDescriptor;

std::string_view to_string(CouplingPolicy policy) {
  return policy == CouplingPolicy::Literal ? "literal" : "extended";
}

std::optional<CouplingPolicy> parse_policy(std::string_view text) {
  if (text == "literal") return CouplingPolicy::Literal;
  if (text == "extended") return CouplingPolicy::Extended;
  return std::nullopt;
}

std::vector<std::string> default_jdk_prefixes() { return {"java.", "javax."}; }

CouplingSet::CouplingSet(std::string analyzed_class, CouplingPolicy policy,
                         std::vector<std::string> jdk_prefixes)
    : analyzed_class_(std::move(analyzed_class)),
      policy_(policy),
      jdk_prefixes_(std::move(jdk_prefixes)) {}

bool CouplingSet::is_jdk_class(std::string_view name) const {
  for (const auto& prefix : jdk_prefixes_) {
    if (name.starts_with(prefix)) return true;
  }
  return false;
}

bool CouplingSet::register_coupling(std::string_view name) {
  if (name.empty() || name == analyzed_class_ || is_jdk_class(name)) return false;
  return names_.emplace(name).second;
}

bool CouplingSet::register_type(const TypeDescriptor& type) {
  const auto name = class_name_of_type(type);
  return name && register_coupling(*name);
}

std::optional<std::string> class_name_of_type(const TypeDescriptor& type) {
  if (const auto* c = std::get_if<classfile::ClassType>(&type)) return c->binary_name;
  return std::nullopt;
}

CouplingResult compute_cbo(const classfile::RawClassFile& cls, CouplingPolicy policy,
                           std::span<const std::string> jdk_prefixes) {
  std::vector<std::string> prefixes(jdk_prefixes.begin(), jdk_prefixes.end());
  if (prefixes.empty()) prefixes = default_jdk_prefixes();
  CouplingSet eff(cls.name(), policy, std::move(prefixes));
  const bool extended = policy == CouplingPolicy::Extended;

  // Inheritance channel; java.lang.Object falls to the JDK filter.
  if (const auto super_name = cls.super_name()) eff.register_coupling(*super_name);
  for (const auto& name : cls.interface_names()) eff.register_coupling(name);
  for (const auto& field : cls.fields) eff.register_type(field.descriptor);

  for (const auto& method : cls.methods) {
    eff.register_type(method.descriptor.return_type);
    for (const auto& param : method.descriptor.params) eff.register_type(param);
    for (const auto& exception : method.declared_exceptions) eff.register_coupling(exception);
    for (const auto& local : method.local_variable_types) eff.register_type(local);
    if (!method.code) continue;

    for (const auto& insn : method.code->instructions) {
      switch (insn.category) {
        case InstructionCategory::LocalVar:
        case InstructionCategory::Array:
        case InstructionCategory::InstanceOf:
        case InstructionCategory::CheckCast:
          eff.register_type(*insn.referenced_type);
          break;
        case InstructionCategory::Field:
          eff.register_type(*insn.referenced_type);
          if (extended) eff.register_type(*insn.referenced_owner);
          break;
        case InstructionCategory::Invoke:
          eff.register_type(*insn.referenced_type);
          if (extended) {
            if (insn.referenced_owner) eff.register_type(*insn.referenced_owner);
            for (const auto& arg : insn.argument_types) eff.register_type(arg);
          }
          break;
        default:
          break;
      }
    }
    if (extended) {
      for (const auto& handler : method.code->exception_table) {
        if (handler.catch_type) eff.register_coupling(*handler.catch_type);
      }
    }
  }
  const auto cbo = eff.size();
  return CouplingResult{cbo, std::move(eff)};
}

}  // namespace oometric::coupling
