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

#include "oometric/constant_pool.hpp"

#include <bit>
#include <string>

namespace oometric::classfile {

std::string_view to_string(ConstantTag tag) {
  switch (tag) {
    case ConstantTag::Utf8: return "Utf8";
    case ConstantTag::Integer: return "Integer";
    case ConstantTag::Float: return "Float";
    case ConstantTag::Long: return "Long";
    case ConstantTag::Double: return "Double";
    case ConstantTag::Class: return "Class";
    case ConstantTag::String: return "String";
    case ConstantTag::Fieldref: return "Fieldref";
    case ConstantTag::Methodref: return "Methodref";
    case ConstantTag::InterfaceMethodref: return "InterfaceMethodref";
    case ConstantTag::NameAndType: return "NameAndType";
    case ConstantTag::MethodHandle: return "MethodHandle";
    case ConstantTag::MethodType: return "MethodType";
    case ConstantTag::Dynamic: return "Dynamic";
    case ConstantTag::InvokeDynamic: return "InvokeDynamic";
    case ConstantTag::Module: return "Module";
    case ConstantTag::Package: return "Package";
  }
  return "?";
}

float constant::Float::value() const { return std::bit_cast<float>(bits); }
double constant::Double::value() const { return std::bit_cast<double>(bits); }

std::uint8_t tag_of(const ConstantPoolEntry& entry) {
  struct Visitor {
    std::uint8_t operator()(const constant::Unusable&) const { return 0; }
    std::uint8_t operator()(const constant::Utf8&) const { return 1; }
    std::uint8_t operator()(const constant::Integer&) const { return 3; }
    std::uint8_t operator()(const constant::Float&) const { return 4; }
    std::uint8_t operator()(const constant::Long&) const { return 5; }
    std::uint8_t operator()(const constant::Double&) const { return 6; }
    std::uint8_t operator()(const constant::Class&) const { return 7; }
    std::uint8_t operator()(const constant::String&) const { return 8; }
    std::uint8_t operator()(const constant::MemberRef& e) const { return static_cast<std::uint8_t>(e.tag); }
    std::uint8_t operator()(const constant::NameAndType&) const { return 12; }
    std::uint8_t operator()(const constant::MethodHandle&) const { return 15; }
    std::uint8_t operator()(const constant::MethodType&) const { return 16; }
    std::uint8_t operator()(const constant::DynamicRef& e) const { return static_cast<std::uint8_t>(e.tag); }
    std::uint8_t operator()(const constant::NamedRef& e) const { return static_cast<std::uint8_t>(e.tag); }
  };
  return std::visit(Visitor{}, entry);
}

ConstantPool::ConstantPool(std::vector<ConstantPoolEntry> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) entries_.emplace_back(constant::Unusable{});
}

const ConstantPoolEntry& ConstantPool::at(std::uint16_t index) const {
  if (index == 0 || index >= entries_.size()) {
    throw ClassFormatError(ErrorKind::BadIndex, "constant pool index " + std::to_string(index) +
                                                    " out of range 1.." +
                                                    std::to_string(entries_.size() - 1));
  }
  const auto& entry = entries_[index];
  if (std::holds_alternative<constant::Unusable>(entry)) {
    throw ClassFormatError(ErrorKind::BadIndex,
                           "constant pool index " + std::to_string(index) + " is unusable");
  }
  return entry;
}

void ConstantPool::wrong_tag(std::uint16_t index) const {
  throw ClassFormatError(ErrorKind::BadIndex, "constant pool index " + std::to_string(index) +
                                                  " has unexpected tag " +
                                                  std::to_string(tag_of(entries_[index])));
}

const std::string& ConstantPool::utf8(std::uint16_t index) const {
  return get<constant::Utf8>(index).text;
}

const std::string& ConstantPool::class_internal_name(std::uint16_t index) const {
  return utf8(get<constant::Class>(index).name_index);
}

const constant::MemberRef& ConstantPool::member_ref(std::uint16_t index) const {
  return get<constant::MemberRef>(index);
}

const constant::NameAndType& ConstantPool::name_and_type(std::uint16_t index) const {
  return get<constant::NameAndType>(index);
}

MemberInfo ConstantPool::member(std::uint16_t index) const {
  const auto& ref = member_ref(index);
  const auto& nat = name_and_type(ref.name_and_type_index);
  return MemberInfo{resolve_class_type(*this, ref.class_index), utf8(nat.name_index),
                    utf8(nat.descriptor_index)};
}

std::size_t ConstantPool::unusable_slots() const {
  std::size_t n = 0;
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (std::holds_alternative<constant::Unusable>(entries_[i])) ++n;
  }
  return n;
}

std::string resolve_class_name(const ConstantPool& pool, std::uint16_t index) {
  return to_string(resolve_class_type(pool, index));
}

TypeDescriptor resolve_class_type(const ConstantPool& pool, std::uint16_t index) {
  return parse_class_constant_name(pool.class_internal_name(index));
}

}  // namespace oometric::classfile
