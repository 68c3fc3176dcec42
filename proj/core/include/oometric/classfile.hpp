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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oometric/bytecode.hpp"
#include "oometric/constant_pool.hpp"
#include "oometric/descriptor.hpp"
#include "oometric/error.hpp"

namespace oometric::classfile {

inline constexpr std::uint32_t kMagic = 0xCAFEBABE;
inline constexpr std::uint16_t kMinMajorVersion = 45;
inline constexpr std::uint16_t kMaxMajorVersion = 69;  // Java SE 25

namespace access {
inline constexpr std::uint16_t kPublic = 0x0001;
inline constexpr std::uint16_t kPrivate = 0x0002;
inline constexpr std::uint16_t kProtected = 0x0004;
inline constexpr std::uint16_t kStatic = 0x0008;
inline constexpr std::uint16_t kFinal = 0x0010;
inline constexpr std::uint16_t kSuper = 0x0020;
inline constexpr std::uint16_t kSynchronized = 0x0020;
inline constexpr std::uint16_t kNative = 0x0100;
inline constexpr std::uint16_t kInterface = 0x0200;
inline constexpr std::uint16_t kAbstract = 0x0400;
inline constexpr std::uint16_t kSynthetic = 0x1000;
}  // namespace access

// Attribute kept verbatim.
struct RawAttribute {
  std::string name;
  std::vector<std::uint8_t> bytes;
  friend bool operator==(const RawAttribute&, const RawAttribute&) = default;
};

struct ExceptionHandler {
  std::uint32_t start_pc = 0;
  std::uint32_t end_pc = 0;
  std::uint32_t handler_pc = 0;
  std::optional<std::string> catch_type;  // absent for catch-all (finally)
  friend bool operator==(const ExceptionHandler&, const ExceptionHandler&) = default;
};

struct CodeAttribute {
  std::uint16_t max_stack = 0;
  std::uint16_t max_locals = 0;
  std::uint32_t code_length = 0;
  std::vector<Instruction> instructions;
  std::vector<ExceptionHandler> exception_table;
  std::vector<RawAttribute> attributes;  // everything except LocalVariableTable
  friend bool operator==(const CodeAttribute&, const CodeAttribute&) = default;
};

struct FieldInfo {
  std::string name;
  TypeDescriptor descriptor;
  std::uint16_t access_flags = 0;
  std::vector<RawAttribute> attributes;
  friend bool operator==(const FieldInfo&, const FieldInfo&) = default;
};

struct MethodInfo {
  std::string name;
  MethodDescriptor descriptor;
  std::uint16_t access_flags = 0;
  std::vector<std::string> declared_exceptions;
  std::optional<CodeAttribute> code;
  // Descriptor types of LocalVariableTable entries, in table order.
  std::vector<TypeDescriptor> local_variable_types;
  std::vector<RawAttribute> attributes;  // everything except Code and Exceptions
  friend bool operator==(const MethodInfo&, const MethodInfo&) = default;
};

struct RawClassFile {
  std::uint32_t magic = kMagic;
  std::uint16_t minor_version = 0;
  std::uint16_t major_version = 0;
  ConstantPool constant_pool;
  std::uint16_t access_flags = 0;
  std::uint16_t this_class = 0;
  std::uint16_t super_class = 0;  // 0 only for java.lang.Object
  std::vector<std::uint16_t> interfaces;
  std::vector<FieldInfo> fields;
  std::vector<MethodInfo> methods;
  std::vector<RawAttribute> attributes;

  std::string name() const;
  std::optional<std::string> super_name() const;
  std::vector<std::string> interface_names() const;

  friend bool operator==(const RawClassFile&, const RawClassFile&) = default;
};

// Parses a complete class file. Every byte must be consumed.
RawClassFile parse_class(std::span<const std::uint8_t> bytes);

}  // namespace oometric::classfile
