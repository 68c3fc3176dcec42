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

#include "oometric/descriptor.hpp"
#include "oometric/error.hpp"

namespace oometric::classfile {

enum class ConstantTag : std::uint8_t {
  Utf8 = 1,
  Integer = 3,
  Float = 4,
  Long = 5,
  Double = 6,
  Class = 7,
  String = 8,
  Fieldref = 9,
  Methodref = 10,
  InterfaceMethodref = 11,
  NameAndType = 12,
  MethodHandle = 15,
  MethodType = 16,
  Dynamic = 17,
  InvokeDynamic = 18,
  Module = 19,
  Package = 20,
};

std::string_view to_string(ConstantTag tag);

namespace constant {

// Slot 0 and the slot after every Long/Double.
struct Unusable {
  friend bool operator==(const Unusable&, const Unusable&) = default;
};
struct Utf8 {
  std::string text;  // decoded from modified UTF-8 into standard UTF-8
  friend bool operator==(const Utf8&, const Utf8&) = default;
};
struct Integer {
  std::int32_t value;
  friend bool operator==(const Integer&, const Integer&) = default;
};
// Float and Double keep raw IEEE bits so NaN payloads compare exactly.
struct Float {
  std::uint32_t bits;
  float value() const;
  friend bool operator==(const Float&, const Float&) = default;
};
struct Long {
  std::int64_t value;
  friend bool operator==(const Long&, const Long&) = default;
};
struct Double {
  std::uint64_t bits;
  double value() const;
  friend bool operator==(const Double&, const Double&) = default;
};
struct Class {
  std::uint16_t name_index;
  friend bool operator==(const Class&, const Class&) = default;
};
struct String {
  std::uint16_t utf8_index;
  friend bool operator==(const String&, const String&) = default;
};
// Fieldref, Methodref and InterfaceMethodref share one shape.
struct MemberRef {
  ConstantTag tag;
  std::uint16_t class_index;
  std::uint16_t name_and_type_index;
  friend bool operator==(const MemberRef&, const MemberRef&) = default;
};
struct NameAndType {
  std::uint16_t name_index;
  std::uint16_t descriptor_index;
  friend bool operator==(const NameAndType&, const NameAndType&) = default;
};
struct MethodHandle {
  std::uint8_t reference_kind;
  std::uint16_t reference_index;
  friend bool operator==(const MethodHandle&, const MethodHandle&) = default;
};
struct MethodType {
  std::uint16_t descriptor_index;
  friend bool operator==(const MethodType&, const MethodType&) = default;
};
// Dynamic and InvokeDynamic.
struct DynamicRef {
  ConstantTag tag;
  std::uint16_t bootstrap_method_attr_index;
  std::uint16_t name_and_type_index;
  friend bool operator==(const DynamicRef&, const DynamicRef&) = default;
};
// Module and Package.
struct NamedRef {
  ConstantTag tag;
  std::uint16_t name_index;
  friend bool operator==(const NamedRef&, const NamedRef&) = default;
};

}  // namespace constant

using ConstantPoolEntry =
    std::variant<constant::Unusable, constant::Utf8, constant::Integer, constant::Float,
                 constant::Long, constant::Double, constant::Class, constant::String,
                 constant::MemberRef, constant::NameAndType, constant::MethodHandle,
                 constant::MethodType, constant::DynamicRef, constant::NamedRef>;

// Tag byte of an entry; unusable slots report 0.
std::uint8_t tag_of(const ConstantPoolEntry& entry);

// A resolved field or method reference.
struct MemberInfo {
  TypeDescriptor owner;  // ClassType, or ArrayType for e.g. int[].clone()
  std::string name;
  std::string descriptor;
};

// 1-based constant pool. Accessors throw ClassFormatError(BadIndex) when an
// index is out of range, unusable, or names an entry of the wrong tag.
class ConstantPool {
 public:
  ConstantPool() : entries_(1) {}
  explicit ConstantPool(std::vector<ConstantPoolEntry> entries);

  // Number of slots including slot 0 (the class file's constant_pool_count).
  std::size_t count() const { return entries_.size(); }
  const std::vector<ConstantPoolEntry>& entries() const { return entries_; }

  const ConstantPoolEntry& at(std::uint16_t index) const;

  template <typename T>
  const T& get(std::uint16_t index) const {
    const auto* entry = std::get_if<T>(&at(index));
    if (entry == nullptr) wrong_tag(index);
    return *entry;
  }

  const std::string& utf8(std::uint16_t index) const;

  // Internal name text of a Class entry, unconverted.
  const std::string& class_internal_name(std::uint16_t index) const;

  const constant::MemberRef& member_ref(std::uint16_t index) const;
  const constant::NameAndType& name_and_type(std::uint16_t index) const;
  MemberInfo member(std::uint16_t index) const;

  // Slots after Long/Double entries (slot 0 is not counted).
  std::size_t unusable_slots() const;

  friend bool operator==(const ConstantPool&, const ConstantPool&) = default;

 private:
  [[noreturn]] void wrong_tag(std::uint16_t index) const;

  std::vector<ConstantPoolEntry> entries_;
};

// Binary name of the Class entry at `index`. Array class names are rendered
// in source form ("org.x.B[]"); use resolve_class_type to inspect them.
std::string resolve_class_name(const ConstantPool& pool, std::uint16_t index);
TypeDescriptor resolve_class_type(const ConstantPool& pool, std::uint16_t index);

}  // namespace oometric::classfile
