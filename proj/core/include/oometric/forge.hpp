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
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "oometric/bytecode.hpp"
#include "oometric/descriptor.hpp"

// Builds small, structurally valid class files for tests and benchmarks.
// Instructions are symbolic: pool operands are given as names and resolved
// into a deduplicated constant pool at build time, and jump targets are
// instruction indices.
namespace oometric::forge {

using classfile::MethodDescriptor;
using classfile::TypeDescriptor;

class InvalidSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace operand {

struct Local {
  std::uint16_t index = 0;
  friend bool operator==(const Local&, const Local&) = default;
};
struct Iinc {
  std::uint16_t index = 0;
  std::int16_t delta = 0;
  friend bool operator==(const Iinc&, const Iinc&) = default;
};
struct Immediate {  // bipush, sipush, newarray type code
  std::int32_t value = 0;
  friend bool operator==(const Immediate&, const Immediate&) = default;
};
// new, anewarray, checkcast, instanceof, multianewarray. For anewarray this
// is the component type; for multianewarray the full array type.
struct TypeRef {
  TypeDescriptor type;
  std::uint8_t dimensions = 0;  // multianewarray only
  friend bool operator==(const TypeRef&, const TypeRef&) = default;
};
enum class MemberKind { Field, Method, InterfaceMethod };
struct Member {
  MemberKind kind = MemberKind::Method;
  TypeDescriptor owner;  // ClassType, or ArrayType for array methods
  std::string name;
  std::string descriptor;
  friend bool operator==(const Member&, const Member&) = default;
};
struct Dynamic {
  std::string name;
  MethodDescriptor descriptor;
  friend bool operator==(const Dynamic&, const Dynamic&) = default;
};
struct Constant {
  std::variant<std::int32_t, float, std::int64_t, double, std::string, TypeDescriptor> value;
  bool operator==(const Constant& other) const;
};
struct Jump {
  std::size_t target = 0;  // instruction index
  friend bool operator==(const Jump&, const Jump&) = default;
};
struct Switch {
  std::size_t default_target = 0;
  std::vector<std::pair<std::int32_t, std::size_t>> cases;  // (match, index)
  friend bool operator==(const Switch&, const Switch&) = default;
};

}  // namespace operand

using Operand = std::variant<std::monostate, operand::Local, operand::Iinc, operand::Immediate,
                             operand::TypeRef, operand::Member, operand::Dynamic,
                             operand::Constant, operand::Jump, operand::Switch>;

struct ForgeInstruction {
  std::uint8_t opcode = classfile::op::nop;
  Operand operand;
  // Emit the wide form for local-variable and iinc instructions.
  bool wide = false;
};

// Shorthand constructors.
ForgeInstruction insn(std::uint8_t opcode);
ForgeInstruction local(std::uint8_t opcode, std::uint16_t index, bool wide = false);
ForgeInstruction iinc(std::uint16_t index, std::int16_t delta, bool wide = false);
ForgeInstruction push(std::uint8_t opcode, std::int32_t value);  // bipush/sipush/newarray
ForgeInstruction type_insn(std::uint8_t opcode, TypeDescriptor type, std::uint8_t dims = 0);
ForgeInstruction field_insn(std::uint8_t opcode, std::string owner, std::string name,
                            TypeDescriptor type);
ForgeInstruction invoke(std::uint8_t opcode, TypeDescriptor owner, std::string name,
                        MethodDescriptor descriptor);
ForgeInstruction invokedynamic(std::string name, MethodDescriptor descriptor);
ForgeInstruction ldc(operand::Constant constant);
ForgeInstruction jump(std::uint8_t opcode, std::size_t target_index);
ForgeInstruction tableswitch(std::int32_t low, std::vector<std::size_t> targets,
                             std::size_t default_target);
ForgeInstruction lookupswitch(std::vector<std::pair<std::int32_t, std::size_t>> cases,
                              std::size_t default_target);

TypeDescriptor class_type(std::string binary_name);

struct ForgeHandler {
  std::size_t start = 0;  // instruction indices; end is exclusive and may equal size()
  std::size_t end = 0;
  std::size_t handler = 0;
  std::optional<std::string> catch_type;
};

struct ForgeCode {
  std::uint16_t max_stack = 8;
  std::uint16_t max_locals = 8;
  std::vector<ForgeInstruction> instructions;
  std::vector<ForgeHandler> handlers;
};

struct ForgeField {
  std::string name;
  TypeDescriptor type;
  std::uint16_t access_flags = 0x0002;
};

struct ForgeMethod {
  std::string name;
  MethodDescriptor descriptor;
  std::uint16_t access_flags = 0x0001;
  std::vector<std::string> declared_exceptions;
  std::optional<ForgeCode> code;
  // Emitted as a LocalVariableTable inside the Code attribute.
  std::vector<TypeDescriptor> local_variable_types;
};

struct ForgeClass {
  std::string name;
  std::optional<std::string> super_name = "java.lang.Object";
  std::vector<std::string> interfaces;
  std::vector<ForgeField> fields;
  std::vector<ForgeMethod> methods;
  std::uint16_t access_flags = 0x0021;
  // 49 predates mandatory StackMapTable frames.
  std::uint16_t major_version = 49;
  std::uint16_t minor_version = 0;
};

// Emits class-file bytes. Throws InvalidSpec on dangling jump targets,
// malformed names, out-of-range jumps or code that is too large.
std::vector<std::uint8_t> build(const ForgeClass& spec);

// Byte offset of every instruction as `build` lays it out.
std::vector<std::uint32_t> layout(const std::vector<ForgeInstruction>& instructions);

// --- randomized fixtures ---------------------------------------------------

struct RandomBounds {
  std::size_t max_interfaces = 3;  // zero also pins the superclass to java.lang.Object
  std::size_t max_fields = 4;
  std::size_t max_methods = 4;
  std::size_t max_instructions = 24;
};

// Expected coupling sets for both policies, tracked while generating.
struct ExpectedCoupling {
  std::set<std::string> literal;
  std::set<std::string> extended;
  // Class names that were injected but must be filtered out (self, JDK, or
  // only reachable through arrays or non-registering instructions).
  std::set<std::string> filtered;
};

struct RandomClass {
  ForgeClass spec;
  ExpectedCoupling expected;
};

// Deterministic in `seed`. JDK filtering assumes the default prefixes.
RandomClass random_class(std::uint64_t seed, const RandomBounds& bounds = {});

}  // namespace oometric::forge
