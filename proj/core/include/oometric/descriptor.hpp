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
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace oometric::classfile {

// Field and method descriptor grammar of the class-file format:
//
//   FieldType  := BaseType | 'L' ClassName ';' | '[' FieldType
//   MethodDesc := '(' FieldType* ')' (FieldType | 'V')
//
// Class names are stored in binary (dot-separated) form.

enum class PrimitiveKind : char {
  Byte = 'B',
  Char = 'C',
  Double = 'D',
  Float = 'F',
  Int = 'I',
  Long = 'J',
  Short = 'S',
  Boolean = 'Z',
};

struct PrimitiveType {
  PrimitiveKind kind;
  friend bool operator==(const PrimitiveType&, const PrimitiveType&) = default;
};

struct ClassType {
  std::string binary_name;
  friend bool operator==(const ClassType&, const ClassType&) = default;
};

using ElementType = std::variant<PrimitiveType, ClassType>;

// Nested arrays are flattened: int[][] is ArrayType{int, 2}.
struct ArrayType {
  ElementType element;
  int dims = 1;
  friend bool operator==(const ArrayType&, const ArrayType&) = default;
};

struct VoidType {
  friend bool operator==(const VoidType&, const VoidType&) = default;
};

using TypeDescriptor = std::variant<PrimitiveType, ClassType, ArrayType, VoidType>;

struct MethodDescriptor {
  std::vector<TypeDescriptor> params;
  TypeDescriptor return_type = VoidType{};
  friend bool operator==(const MethodDescriptor&, const MethodDescriptor&) = default;
};

inline constexpr int kMaxArrayDims = 255;

TypeDescriptor parse_field_descriptor(std::string_view text);
MethodDescriptor parse_method_descriptor(std::string_view text);

// Parses a Class constant's name: either an internal class name ("org/x/B")
// or an array descriptor ("[Lorg/x/B;").
TypeDescriptor parse_class_constant_name(std::string_view internal_name);

// Descriptor text in internal form ("[Lorg/x/B;", "(I)V").
std::string to_descriptor(const TypeDescriptor& type);
std::string to_descriptor(const MethodDescriptor& method);

// Source-like rendering ("int", "org.x.B[]", "void").
std::string to_string(const TypeDescriptor& type);
std::string to_string(const MethodDescriptor& method);

std::string_view primitive_name(PrimitiveKind kind);

inline bool is_primitive(const TypeDescriptor& t) { return std::holds_alternative<PrimitiveType>(t); }
inline bool is_class(const TypeDescriptor& t) { return std::holds_alternative<ClassType>(t); }
inline bool is_array(const TypeDescriptor& t) { return std::holds_alternative<ArrayType>(t); }
inline bool is_void(const TypeDescriptor& t) { return std::holds_alternative<VoidType>(t); }

// "org/x/B" -> "org.x.B" and back.
std::string to_binary_name(std::string_view internal_name);
std::string to_internal_name(std::string_view binary_name);

}  // namespace oometric::classfile
