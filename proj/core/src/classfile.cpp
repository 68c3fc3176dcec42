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

#include "oometric/classfile.hpp"

#include <string>

#include "byte_reader.hpp"

namespace oometric::classfile {

namespace {

using detail::ByteReader;

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

// Modified UTF-8 (two-byte NUL, surrogate pairs as two 3-byte units) to
// standard UTF-8. Malformed sequences become U+FFFD.
std::string decode_modified_utf8(std::span<const std::uint8_t> bytes) {
  constexpr std::uint32_t kReplacement = 0xFFFD;
  std::vector<std::uint32_t> units;
  units.reserve(bytes.size());
  for (std::size_t i = 0; i < bytes.size();) {
    const std::uint8_t b = bytes[i];
    auto cont = [&](std::size_t k) { return i + k < bytes.size() && (bytes[i + k] & 0xC0) == 0x80; };
    if (b < 0x80) {
      units.push_back(b);
      i += 1;
    } else if ((b & 0xE0) == 0xC0 && cont(1)) {
      units.push_back(((b & 0x1Fu) << 6) | (bytes[i + 1] & 0x3Fu));
      i += 2;
    } else if ((b & 0xF0) == 0xE0 && cont(1) && cont(2)) {
      units.push_back(((b & 0x0Fu) << 12) | ((bytes[i + 1] & 0x3Fu) << 6) | (bytes[i + 2] & 0x3Fu));
      i += 3;
    } else {
      units.push_back(kReplacement);
      i += 1;
    }
  }
  std::string out;
  out.reserve(bytes.size());
  for (std::size_t i = 0; i < units.size(); ++i) {
    const auto u = units[i];
    if (u >= 0xD800 && u <= 0xDBFF && i + 1 < units.size() && units[i + 1] >= 0xDC00 &&
        units[i + 1] <= 0xDFFF) {
      append_utf8(out, 0x10000 + ((u - 0xD800) << 10) + (units[i + 1] - 0xDC00));
      ++i;
    } else if (u >= 0xD800 && u <= 0xDFFF) {
      append_utf8(out, kReplacement);
    } else {
      append_utf8(out, u);
    }
  }
  return out;
}

[[noreturn]] void bad_index(const std::string& what) {
  throw ClassFormatError(ErrorKind::BadIndex, what);
}

void expect_tag(const ConstantPool& pool, std::uint16_t index, ConstantTag tag,
                const char* context) {
  const auto& entry = pool.at(index);
  if (tag_of(entry) != static_cast<std::uint8_t>(tag)) {
    bad_index(std::string(context) + " #" + std::to_string(index) + " is not a " +
              std::string(to_string(tag)) + " entry");
  }
}

ConstantPool read_constant_pool(ByteReader& in) {
  const std::uint16_t count = in.u2();
  std::vector<ConstantPoolEntry> entries;
  entries.reserve(count == 0 ? 1 : count);
  entries.emplace_back(constant::Unusable{});
  for (std::uint32_t i = 1; i < count; ++i) {
    const std::uint8_t tag = in.u1();
    switch (static_cast<ConstantTag>(tag)) {
      case ConstantTag::Utf8: {
        const auto length = in.u2();
        entries.emplace_back(constant::Utf8{decode_modified_utf8(in.take(length))});
        break;
      }
      case ConstantTag::Integer:
        entries.emplace_back(constant::Integer{in.s4()});
        break;
      case ConstantTag::Float:
        entries.emplace_back(constant::Float{in.u4()});
        break;
      case ConstantTag::Long:
      case ConstantTag::Double:
        if (i + 1 >= count) bad_index("8-byte constant in the last pool slot");
        if (tag == 5) {
          entries.emplace_back(constant::Long{static_cast<std::int64_t>(in.u8())});
        } else {
          entries.emplace_back(constant::Double{in.u8()});
        }
        entries.emplace_back(constant::Unusable{});
        ++i;
        break;
      case ConstantTag::Class:
        entries.emplace_back(constant::Class{in.u2()});
        break;
      case ConstantTag::String:
        entries.emplace_back(constant::String{in.u2()});
        break;
      case ConstantTag::Fieldref:
      case ConstantTag::Methodref:
      case ConstantTag::InterfaceMethodref: {
        const auto class_index = in.u2();
        entries.emplace_back(
            constant::MemberRef{static_cast<ConstantTag>(tag), class_index, in.u2()});
        break;
      }
      case ConstantTag::NameAndType: {
        const auto name_index = in.u2();
        entries.emplace_back(constant::NameAndType{name_index, in.u2()});
        break;
      }
      case ConstantTag::MethodHandle: {
        const auto kind = in.u1();
        entries.emplace_back(constant::MethodHandle{kind, in.u2()});
        break;
      }
      case ConstantTag::MethodType:
        entries.emplace_back(constant::MethodType{in.u2()});
        break;
      case ConstantTag::Dynamic:
      case ConstantTag::InvokeDynamic: {
        const auto bootstrap = in.u2();
        entries.emplace_back(constant::DynamicRef{static_cast<ConstantTag>(tag), bootstrap, in.u2()});
        break;
      }
      case ConstantTag::Module:
      case ConstantTag::Package:
        entries.emplace_back(constant::NamedRef{static_cast<ConstantTag>(tag), in.u2()});
        break;
      default:
        throw ClassFormatError(ErrorKind::BadConstantTag, "tag " + std::to_string(tag) +
                                                              " at pool index " +
                                                              std::to_string(i));
    }
  }
  return ConstantPool(std::move(entries));
}

// Cross-entry references must land on entries of the required tag.
void validate_constant_pool(const ConstantPool& pool) {
  const auto& entries = pool.entries();
  for (std::size_t i = 1; i < entries.size(); ++i) {
    std::visit(
        [&](const auto& e) {
          using T = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<T, constant::Class>) {
            expect_tag(pool, e.name_index, ConstantTag::Utf8, "Class name");
          } else if constexpr (std::is_same_v<T, constant::String>) {
            expect_tag(pool, e.utf8_index, ConstantTag::Utf8, "String value");
          } else if constexpr (std::is_same_v<T, constant::MemberRef>) {
            expect_tag(pool, e.class_index, ConstantTag::Class, "member class");
            expect_tag(pool, e.name_and_type_index, ConstantTag::NameAndType, "member name-and-type");
          } else if constexpr (std::is_same_v<T, constant::NameAndType>) {
            expect_tag(pool, e.name_index, ConstantTag::Utf8, "NameAndType name");
            expect_tag(pool, e.descriptor_index, ConstantTag::Utf8, "NameAndType descriptor");
          } else if constexpr (std::is_same_v<T, constant::MethodHandle>) {
            const auto target = tag_of(pool.at(e.reference_index));
            bool ok = false;
            switch (e.reference_kind) {
              case 1: case 2: case 3: case 4: ok = target == 9; break;
              case 5: case 8: ok = target == 10; break;
              case 6: case 7: ok = target == 10 || target == 11; break;
              case 9: ok = target == 11; break;
              default: break;
            }
            if (!ok) bad_index("MethodHandle #" + std::to_string(i) + " has bad reference");
          } else if constexpr (std::is_same_v<T, constant::MethodType>) {
            expect_tag(pool, e.descriptor_index, ConstantTag::Utf8, "MethodType descriptor");
          } else if constexpr (std::is_same_v<T, constant::DynamicRef>) {
            expect_tag(pool, e.name_and_type_index, ConstantTag::NameAndType, "dynamic name-and-type");
          } else if constexpr (std::is_same_v<T, constant::NamedRef>) {
            expect_tag(pool, e.name_index, ConstantTag::Utf8, "module/package name");
          }
        },
        entries[i]);
  }
}

struct AttributeHeader {
  std::string name;
  std::span<const std::uint8_t> body;
};

AttributeHeader read_attribute(ByteReader& in, const ConstantPool& pool) {
  const auto name_index = in.u2();
  std::string name = pool.utf8(name_index);
  const auto length = in.u4();
  return {std::move(name), in.take(length)};
}

void expect_consumed(const ByteReader& in, const std::string& what) {
  if (!in.at_end()) {
    throw ClassFormatError(ErrorKind::TrailingData,
                           std::to_string(in.remaining()) + " unread bytes in " + what);
  }
}

RawAttribute to_raw(const AttributeHeader& a) {
  return RawAttribute{a.name, std::vector<std::uint8_t>(a.body.begin(), a.body.end())};
}

bool valid_pc(const CodeAttribute& code, const std::vector<bool>& boundary, std::uint32_t pc) {
  return pc < code.code_length && boundary[pc];
}

CodeAttribute read_code(std::span<const std::uint8_t> body, const ConstantPool& pool,
                        std::vector<TypeDescriptor>& local_variable_types) {
  ByteReader in(body);
  CodeAttribute code;
  code.max_stack = in.u2();
  code.max_locals = in.u2();
  code.code_length = in.u4();
  if (code.code_length == 0 || code.code_length > 65535) {
    throw ClassFormatError(ErrorKind::BadCode,
                           "code length " + std::to_string(code.code_length) + " out of range");
  }
  code.instructions = decode_instructions(in.take(code.code_length), pool);

  std::vector<bool> boundary(code.code_length, false);
  for (const auto& insn : code.instructions) boundary[insn.offset] = true;

  const auto handlers = in.u2();
  for (std::uint16_t i = 0; i < handlers; ++i) {
    ExceptionHandler h;
    h.start_pc = in.u2();
    h.end_pc = in.u2();
    h.handler_pc = in.u2();
    const auto catch_index = in.u2();
    if (catch_index != 0) h.catch_type = resolve_class_name(pool, catch_index);
    const bool end_ok = h.end_pc == code.code_length || valid_pc(code, boundary, h.end_pc);
    if (!valid_pc(code, boundary, h.start_pc) || !end_ok || h.start_pc >= h.end_pc ||
        !valid_pc(code, boundary, h.handler_pc)) {
      throw ClassFormatError(ErrorKind::BadCode,
                             "exception handler " + std::to_string(i) + " has a bad range");
    }
    code.exception_table.push_back(std::move(h));
  }

  const auto attribute_count = in.u2();
  for (std::uint16_t i = 0; i < attribute_count; ++i) {
    auto attribute = read_attribute(in, pool);
    if (attribute.name == "LocalVariableTable") {
      ByteReader table(attribute.body);
      const auto entries = table.u2();
      for (std::uint16_t k = 0; k < entries; ++k) {
        table.skip(4);  // start_pc, length
        pool.utf8(table.u2());
        local_variable_types.push_back(parse_field_descriptor(pool.utf8(table.u2())));
        table.skip(2);  // slot
      }
      expect_consumed(table, "LocalVariableTable");
    } else {
      code.attributes.push_back(to_raw(attribute));
    }
  }
  expect_consumed(in, "Code attribute");
  return code;
}

FieldInfo read_field(ByteReader& in, const ConstantPool& pool) {
  FieldInfo field;
  field.access_flags = in.u2();
  field.name = pool.utf8(in.u2());
  field.descriptor = parse_field_descriptor(pool.utf8(in.u2()));
  const auto attribute_count = in.u2();
  for (std::uint16_t i = 0; i < attribute_count; ++i) {
    field.attributes.push_back(to_raw(read_attribute(in, pool)));
  }
  return field;
}

MethodInfo read_method(ByteReader& in, const ConstantPool& pool) {
  MethodInfo method;
  method.access_flags = in.u2();
  method.name = pool.utf8(in.u2());
  method.descriptor = parse_method_descriptor(pool.utf8(in.u2()));
  const auto attribute_count = in.u2();
  for (std::uint16_t i = 0; i < attribute_count; ++i) {
    auto attribute = read_attribute(in, pool);
    if (attribute.name == "Code") {
      if (method.code) {
        throw ClassFormatError(ErrorKind::BadCode, "duplicate Code attribute in " + method.name);
      }
      method.code = read_code(attribute.body, pool, method.local_variable_types);
    } else if (attribute.name == "Exceptions") {
      ByteReader list(attribute.body);
      const auto count = list.u2();
      for (std::uint16_t k = 0; k < count; ++k) {
        method.declared_exceptions.push_back(resolve_class_name(pool, list.u2()));
      }
      expect_consumed(list, "Exceptions attribute");
    } else {
      method.attributes.push_back(to_raw(attribute));
    }
  }
  if (method.code && (method.access_flags & (access::kAbstract | access::kNative)) != 0) {
    throw ClassFormatError(ErrorKind::BadCode,
                           "abstract or native method " + method.name + " has code");
  }
  return method;
}

}  // namespace

std::string RawClassFile::name() const { return resolve_class_name(constant_pool, this_class); }

std::optional<std::string> RawClassFile::super_name() const {
  if (super_class == 0) return std::nullopt;
  return resolve_class_name(constant_pool, super_class);
}

std::vector<std::string> RawClassFile::interface_names() const {
  std::vector<std::string> out;
  out.reserve(interfaces.size());
  for (const auto index : interfaces) out.push_back(resolve_class_name(constant_pool, index));
  return out;
}

RawClassFile parse_class(std::span<const std::uint8_t> bytes) {
  ByteReader in(bytes);
  RawClassFile cls;
  cls.magic = in.u4();
  if (cls.magic != kMagic) {
    throw ClassFormatError(ErrorKind::BadMagic, "not a class file");
  }
  cls.minor_version = in.u2();
  cls.major_version = in.u2();
  if (cls.major_version < kMinMajorVersion || cls.major_version > kMaxMajorVersion) {
    throw ClassFormatError(ErrorKind::UnsupportedVersion,
                           "major version " + std::to_string(cls.major_version));
  }
  cls.constant_pool = read_constant_pool(in);
  validate_constant_pool(cls.constant_pool);
  const auto& pool = cls.constant_pool;

  cls.access_flags = in.u2();
  cls.this_class = in.u2();
  expect_tag(pool, cls.this_class, ConstantTag::Class, "this_class");
  cls.super_class = in.u2();
  if (cls.super_class != 0) expect_tag(pool, cls.super_class, ConstantTag::Class, "super_class");

  const auto interface_count = in.u2();
  for (std::uint16_t i = 0; i < interface_count; ++i) {
    const auto index = in.u2();
    expect_tag(pool, index, ConstantTag::Class, "interface");
    cls.interfaces.push_back(index);
  }
  // Names must be well formed; array types cannot be declared classes.
  if (!is_class(resolve_class_type(pool, cls.this_class))) bad_index("this_class is an array");
  if (cls.super_class != 0 && !is_class(resolve_class_type(pool, cls.super_class))) {
    bad_index("super_class is an array");
  }
  for (const auto index : cls.interfaces) {
    if (!is_class(resolve_class_type(pool, index))) bad_index("interface is an array");
  }

  const auto field_count = in.u2();
  cls.fields.reserve(field_count);
  for (std::uint16_t i = 0; i < field_count; ++i) cls.fields.push_back(read_field(in, pool));

  const auto method_count = in.u2();
  cls.methods.reserve(method_count);
  for (std::uint16_t i = 0; i < method_count; ++i) cls.methods.push_back(read_method(in, pool));

  const auto attribute_count = in.u2();
  for (std::uint16_t i = 0; i < attribute_count; ++i) {
    cls.attributes.push_back(to_raw(read_attribute(in, pool)));
  }
  expect_consumed(in, "class file");
  return cls;
}

}  // namespace oometric::classfile
