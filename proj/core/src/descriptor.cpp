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

#include "oometric/descriptor.hpp"

#include <algorithm>

#include "oometric/error.hpp"

namespace oometric::classfile {

namespace {

[[noreturn]] void bad(std::string_view text, std::string_view why) {
  throw ClassFormatError(ErrorKind::BadDescriptor,
                         std::string(why) + " in \"" + std::string(text) + "\"");
}

bool valid_internal_name(std::string_view name) {
  if (name.empty()) return false;
  bool segment_empty = true;
  for (char c : name) {
    if (c == '.' || c == ';' || c == '[') return false;
    if (c == '/') {
      if (segment_empty) return false;
      segment_empty = true;
    } else {
      segment_empty = false;
    }
  }
  return !segment_empty;
}

class DescriptorReader {
 public:
  explicit DescriptorReader(std::string_view text) : text_(text) {}

  bool at_end() const { return pos_ == text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void expect(char c) {
    if (peek() != c) bad(text_, std::string("expected '") + c + "'");
    ++pos_;
  }

  TypeDescriptor field_type() {
    if (at_end()) bad(text_, "unexpected end");
    int dims = 0;
    while (peek() == '[') {
      ++dims;
      ++pos_;
    }
    if (dims > kMaxArrayDims) bad(text_, "too many array dimensions");
    if (at_end()) bad(text_, "missing array element type");
    ElementType element = element_type();
    if (dims == 0) {
      return std::visit([](auto&& e) -> TypeDescriptor { return e; }, element);
    }
    return ArrayType{std::move(element), dims};
  }

  TypeDescriptor return_type() {
    if (peek() == 'V') {
      ++pos_;
      return VoidType{};
    }
    return field_type();
  }

 private:
  ElementType element_type() {
    const char c = text_[pos_++];
    switch (c) {
      case 'B': case 'C': case 'D': case 'F':
      case 'I': case 'J': case 'S': case 'Z':
        return PrimitiveType{static_cast<PrimitiveKind>(c)};
      case 'L': {
        const auto end = text_.find(';', pos_);
        if (end == std::string_view::npos) bad(text_, "unterminated class name");
        const auto name = text_.substr(pos_, end - pos_);
        if (!valid_internal_name(name)) bad(text_, "malformed class name");
        pos_ = end + 1;
        return ClassType{to_binary_name(name)};
      }
      default:
        bad(text_, std::string("unknown type character '") + c + "'");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void append_descriptor(std::string& out, const ElementType& element) {
  if (const auto* p = std::get_if<PrimitiveType>(&element)) {
    out += static_cast<char>(p->kind);
  } else {
    out += 'L';
    out += to_internal_name(std::get<ClassType>(element).binary_name);
    out += ';';
  }
}

std::string element_string(const ElementType& element) {
  if (const auto* p = std::get_if<PrimitiveType>(&element)) {
    return std::string(primitive_name(p->kind));
  }
  return std::get<ClassType>(element).binary_name;
}

}  // namespace

TypeDescriptor parse_field_descriptor(std::string_view text) {
  DescriptorReader reader(text);
  TypeDescriptor type = reader.field_type();
  if (!reader.at_end()) bad(text, "trailing characters");
  return type;
}

MethodDescriptor parse_method_descriptor(std::string_view text) {
  DescriptorReader reader(text);
  MethodDescriptor result;
  reader.expect('(');
  while (reader.peek() != ')') {
    if (reader.at_end()) bad(text, "unterminated parameter list");
    result.params.push_back(reader.field_type());
  }
  reader.expect(')');
  if (reader.at_end()) bad(text, "missing return type");
  result.return_type = reader.return_type();
  if (!reader.at_end()) bad(text, "trailing characters");
  return result;
}

TypeDescriptor parse_class_constant_name(std::string_view internal_name) {
  if (!internal_name.empty() && internal_name.front() == '[') {
    return parse_field_descriptor(internal_name);
  }
  if (!valid_internal_name(internal_name)) bad(internal_name, "malformed class name");
  return ClassType{to_binary_name(internal_name)};
}

std::string to_descriptor(const TypeDescriptor& type) {
  std::string out;
  if (const auto* a = std::get_if<ArrayType>(&type)) {
    out.assign(static_cast<std::size_t>(a->dims), '[');
    append_descriptor(out, a->element);
  } else if (const auto* p = std::get_if<PrimitiveType>(&type)) {
    append_descriptor(out, *p);
  } else if (const auto* c = std::get_if<ClassType>(&type)) {
    append_descriptor(out, *c);
  } else {
    out = "V";
  }
  return out;
}

std::string to_descriptor(const MethodDescriptor& method) {
  std::string out = "(";
  for (const auto& p : method.params) out += to_descriptor(p);
  out += ')';
  out += to_descriptor(method.return_type);
  return out;
}

std::string to_string(const TypeDescriptor& type) {
  if (const auto* a = std::get_if<ArrayType>(&type)) {
    std::string out = element_string(a->element);
    for (int i = 0; i < a->dims; ++i) out += "[]";
    return out;
  }
  if (const auto* p = std::get_if<PrimitiveType>(&type)) return element_string(*p);
  if (const auto* c = std::get_if<ClassType>(&type)) return c->binary_name;
  return "void";
}

std::string to_string(const MethodDescriptor& method) {
  std::string out = "(";
  for (std::size_t i = 0; i < method.params.size(); ++i) {
    if (i) out += ", ";
    out += to_string(method.params[i]);
  }
  out += ") -> ";
  out += to_string(method.return_type);
  return out;
}

std::string_view primitive_name(PrimitiveKind kind) {
  switch (kind) {
    case PrimitiveKind::Byte: return "byte";
    case PrimitiveKind::Char: return "char";
    case PrimitiveKind::Double: return "double";
    case PrimitiveKind::Float: return "float";
    case PrimitiveKind::Int: return "int";
    case PrimitiveKind::Long: return "long";
    case PrimitiveKind::Short: return "short";
    case PrimitiveKind::Boolean: return "boolean";
  }
  return "?";
}

std::string to_binary_name(std::string_view internal_name) {
  std::string out(internal_name);
  std::replace(out.begin(), out.end(), '/', '.');
  return out;
}

std::string to_internal_name(std::string_view binary_name) {
  std::string out(binary_name);
  std::replace(out.begin(), out.end(), '.', '/');
  return out;
}

}  // namespace oometric::classfile
