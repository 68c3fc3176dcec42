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

#include "oometric/forge.hpp"

#include <bit>
#include <map>
#include <random>

#include "oometric/error.hpp"

namespace oometric::forge {

namespace op = classfile::op;
using classfile::OperandFormat;

bool operand::Constant::operator==(const Constant& other) const {
  if (value.index() != other.value.index()) return false;
  if (const auto* f = std::get_if<float>(&value)) {
    return std::bit_cast<std::uint32_t>(*f) == std::bit_cast<std::uint32_t>(std::get<float>(other.value));
  }
  if (const auto* d = std::get_if<double>(&value)) {
    return std::bit_cast<std::uint64_t>(*d) == std::bit_cast<std::uint64_t>(std::get<double>(other.value));
  }
  return value == other.value;
}

ForgeInstruction insn(std::uint8_t opcode) { return {opcode, std::monostate{}, false}; }

ForgeInstruction local(std::uint8_t opcode, std::uint16_t index, bool wide) {
  return {opcode, operand::Local{index}, wide};
}

ForgeInstruction iinc(std::uint16_t index, std::int16_t delta, bool wide) {
  return {op::iinc, operand::Iinc{index, delta}, wide};
}

ForgeInstruction push(std::uint8_t opcode, std::int32_t value) {
  return {opcode, operand::Immediate{value}, false};
}

ForgeInstruction type_insn(std::uint8_t opcode, TypeDescriptor type, std::uint8_t dims) {
  return {opcode, operand::TypeRef{std::move(type), dims}, false};
}

ForgeInstruction field_insn(std::uint8_t opcode, std::string owner, std::string name,
                            TypeDescriptor type) {
  return {opcode,
          operand::Member{operand::MemberKind::Field, class_type(std::move(owner)), std::move(name),
                          classfile::to_descriptor(type)},
          false};
}

ForgeInstruction invoke(std::uint8_t opcode, TypeDescriptor owner, std::string name,
                        MethodDescriptor descriptor) {
  const auto kind = opcode == op::invokeinterface ? operand::MemberKind::InterfaceMethod
                                                  : operand::MemberKind::Method;
  return {opcode,
          operand::Member{kind, std::move(owner), std::move(name), classfile::to_descriptor(descriptor)},
          false};
}

ForgeInstruction invokedynamic(std::string name, MethodDescriptor descriptor) {
  return {op::invokedynamic, operand::Dynamic{std::move(name), std::move(descriptor)}, false};
}

ForgeInstruction ldc(operand::Constant constant) {
  const bool wide_value = std::holds_alternative<std::int64_t>(constant.value) ||
                          std::holds_alternative<double>(constant.value);
  return {wide_value ? op::ldc2_w : op::ldc, std::move(constant), false};
}

ForgeInstruction jump(std::uint8_t opcode, std::size_t target_index) {
  return {opcode, operand::Jump{target_index}, false};
}

ForgeInstruction tableswitch(std::int32_t low, std::vector<std::size_t> targets,
                             std::size_t default_target) {
  operand::Switch sw{default_target, {}};
  for (std::size_t k = 0; k < targets.size(); ++k) {
    sw.cases.emplace_back(low + static_cast<std::int32_t>(k), targets[k]);
  }
  return {op::tableswitch, std::move(sw), false};
}

ForgeInstruction lookupswitch(std::vector<std::pair<std::int32_t, std::size_t>> cases,
                              std::size_t default_target) {
  return {op::lookupswitch, operand::Switch{default_target, std::move(cases)}, false};
}

TypeDescriptor class_type(std::string binary_name) {
  return classfile::ClassType{std::move(binary_name)};
}

namespace {

class ByteWriter {
 public:
  void u1(std::uint32_t v) { bytes_.push_back(static_cast<std::uint8_t>(v)); }
  void u2(std::uint32_t v) {
    u1(v >> 8);
    u1(v);
  }
  void u4(std::uint32_t v) {
    u2(v >> 16);
    u2(v);
  }
  void u8(std::uint64_t v) {
    u4(static_cast<std::uint32_t>(v >> 32));
    u4(static_cast<std::uint32_t>(v));
  }
  void append(const std::vector<std::uint8_t>& more) {
    bytes_.insert(bytes_.end(), more.begin(), more.end());
  }
  std::size_t size() const { return bytes_.size(); }
  std::vector<std::uint8_t>& bytes() { return bytes_; }

 private:
  std::vector<std::uint8_t> bytes_;
};

// Standard UTF-8 to the class file's modified UTF-8.
std::vector<std::uint8_t> to_modified_utf8(const std::string& text) {
  std::vector<std::uint8_t> out;
  auto unit = [&](std::uint32_t u) {
    if (u != 0 && u < 0x80) {
      out.push_back(static_cast<std::uint8_t>(u));
    } else if (u < 0x800) {
      out.push_back(static_cast<std::uint8_t>(0xC0 | (u >> 6)));
      out.push_back(static_cast<std::uint8_t>(0x80 | (u & 0x3F)));
    } else {
      out.push_back(static_cast<std::uint8_t>(0xE0 | (u >> 12)));
      out.push_back(static_cast<std::uint8_t>(0x80 | ((u >> 6) & 0x3F)));
      out.push_back(static_cast<std::uint8_t>(0x80 | (u & 0x3F)));
    }
  };
  for (std::size_t i = 0; i < text.size();) {
    const auto c = static_cast<unsigned char>(text[i]);
    std::uint32_t cp = c;
    std::size_t len = 1;
    if (c >= 0xF0) {
      cp = c & 0x07;
      len = 4;
    } else if (c >= 0xE0) {
      cp = c & 0x0F;
      len = 3;
    } else if (c >= 0xC0) {
      cp = c & 0x1F;
      len = 2;
    }
    if (i + len > text.size()) throw InvalidSpec("invalid UTF-8 in name");
    for (std::size_t k = 1; k < len; ++k) cp = (cp << 6) | (static_cast<unsigned char>(text[i + k]) & 0x3F);
    i += len;
    if (cp >= 0x10000) {
      cp -= 0x10000;
      unit(0xD800 + (cp >> 10));
      unit(0xDC00 + (cp & 0x3FF));
    } else {
      unit(cp);
    }
  }
  if (out.size() > 0xFFFF) throw InvalidSpec("string too long for a Utf8 constant");
  return out;
}

std::string internal_class_name(const TypeDescriptor& type) {
  if (classfile::is_array(type)) return classfile::to_descriptor(type);
  if (const auto* c = std::get_if<classfile::ClassType>(&type)) {
    if (c->binary_name.find('/') != std::string::npos) {
      throw InvalidSpec("binary name \"" + c->binary_name + "\" contains '/'");
    }
    return classfile::to_internal_name(c->binary_name);
  }
  throw InvalidSpec("class reference must be a class or array type");
}

// Descriptor text that parses back to the same type.
std::string checked_descriptor(const TypeDescriptor& type) {
  auto text = classfile::to_descriptor(type);
  try {
    if (classfile::parse_field_descriptor(text) == type) return text;
  } catch (const classfile::ClassFormatError&) {
  }
  throw InvalidSpec("malformed type \"" + text + "\"");
}

std::string checked_descriptor(const MethodDescriptor& method) {
  auto text = classfile::to_descriptor(method);
  try {
    if (classfile::parse_method_descriptor(text) == method) return text;
  } catch (const classfile::ClassFormatError&) {
  }
  throw InvalidSpec("malformed method descriptor \"" + text + "\"");
}

// Deduplicating constant pool writer.
class PoolBuilder {
 public:
  std::uint16_t utf8(const std::string& text) {
    return intern("U" + text, 1, [&](ByteWriter& w) {
      const auto bytes = to_modified_utf8(text);
      w.u1(1);
      w.u2(static_cast<std::uint32_t>(bytes.size()));
      w.append(bytes);
    });
  }

  std::uint16_t class_ref(const TypeDescriptor& type) {
    const auto name = internal_class_name(type);
    try {
      classfile::parse_class_constant_name(name);
    } catch (const classfile::ClassFormatError& e) {
      throw InvalidSpec("malformed class name \"" + name + "\"");
    }
    const auto name_index = utf8(name);
    return intern("C" + name, 1, [&](ByteWriter& w) {
      w.u1(7);
      w.u2(name_index);
    });
  }

  std::uint16_t class_ref(const std::string& binary_name) {
    return class_ref(class_type(binary_name));
  }

  std::uint16_t name_and_type(const std::string& name, const std::string& descriptor) {
    const auto n = utf8(name);
    const auto d = utf8(descriptor);
    return intern("N" + std::to_string(n) + ":" + std::to_string(d), 1, [&](ByteWriter& w) {
      w.u1(12);
      w.u2(n);
      w.u2(d);
    });
  }

  std::uint16_t member(const operand::Member& m) {
    const std::uint8_t tag = m.kind == operand::MemberKind::Field    ? 9
                             : m.kind == operand::MemberKind::Method ? 10
                                                                     : 11;
    try {
      if (tag == 9) {
        if (classfile::is_void(classfile::parse_field_descriptor(m.descriptor))) throw InvalidSpec("void field");
      } else {
        classfile::parse_method_descriptor(m.descriptor);
      }
    } catch (const classfile::ClassFormatError&) {
      throw InvalidSpec("malformed member descriptor \"" + m.descriptor + "\"");
    }
    const auto c = class_ref(m.owner);
    const auto nt = name_and_type(m.name, m.descriptor);
    return intern("M" + std::to_string(tag) + ":" + std::to_string(c) + ":" + std::to_string(nt), 1,
                  [&](ByteWriter& w) {
                    w.u1(tag);
                    w.u2(c);
                    w.u2(nt);
                  });
  }

  std::uint16_t constant(const operand::Constant& k) {
    return std::visit(
        [&](const auto& v) -> std::uint16_t {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, std::int32_t>) {
            return intern("I" + std::to_string(v), 1, [&](ByteWriter& w) {
              w.u1(3);
              w.u4(static_cast<std::uint32_t>(v));
            });
          } else if constexpr (std::is_same_v<T, float>) {
            const auto bits = std::bit_cast<std::uint32_t>(v);
            return intern("F" + std::to_string(bits), 1, [&](ByteWriter& w) {
              w.u1(4);
              w.u4(bits);
            });
          } else if constexpr (std::is_same_v<T, std::int64_t>) {
            return intern("J" + std::to_string(v), 2, [&](ByteWriter& w) {
              w.u1(5);
              w.u8(static_cast<std::uint64_t>(v));
            });
          } else if constexpr (std::is_same_v<T, double>) {
            const auto bits = std::bit_cast<std::uint64_t>(v);
            return intern("D" + std::to_string(bits), 2, [&](ByteWriter& w) {
              w.u1(6);
              w.u8(bits);
            });
          } else if constexpr (std::is_same_v<T, std::string>) {
            const auto s = utf8(v);
            return intern("S" + std::to_string(s), 1, [&](ByteWriter& w) {
              w.u1(8);
              w.u2(s);
            });
          } else {
            return class_ref(v);
          }
        },
        k.value);
  }

  // One shared bootstrap method: LambdaMetafactory.metafactory.
  std::uint16_t invoke_dynamic(const operand::Dynamic& d) {
    uses_bootstrap_ = true;
    const auto nt = name_and_type(d.name, checked_descriptor(d.descriptor));
    return intern("Y" + std::to_string(nt), 1, [&](ByteWriter& w) {
      w.u1(18);
      w.u2(0);
      w.u2(nt);
    });
  }

  // Appends the BootstrapMethods attribute when invokedynamic was used.
  void bootstrap_attribute(ByteWriter& out, std::uint16_t& attribute_count) {
    if (!uses_bootstrap_) return;
    const operand::Member factory{
        operand::MemberKind::Method, class_type("java.lang.invoke.LambdaMetafactory"), "metafactory",
        "(Ljava/lang/invoke/MethodHandles$Lookup;Ljava/lang/String;Ljava/lang/invoke/MethodType;"
        "Ljava/lang/invoke/MethodType;Ljava/lang/invoke/MethodHandle;Ljava/lang/invoke/MethodType;)"
        "Ljava/lang/invoke/CallSite;"};
    const auto ref = member(factory);
    const auto handle = intern("H6:" + std::to_string(ref), 1, [&](ByteWriter& w) {
      w.u1(15);
      w.u1(6);
      w.u2(ref);
    });
    out.u2(utf8("BootstrapMethods"));
    out.u4(2 + 4);
    out.u2(1);
    out.u2(handle);
    out.u2(0);
    ++attribute_count;
  }

  std::uint16_t count() const { return static_cast<std::uint16_t>(next_); }
  const std::vector<std::uint8_t>& bytes() { return writer_.bytes(); }

 private:
  template <typename Emit>
  std::uint16_t intern(const std::string& key, std::uint32_t slots, Emit emit) {
    if (const auto it = index_.find(key); it != index_.end()) return it->second;
    if (next_ + slots > 0xFFFF) throw InvalidSpec("constant pool overflow");
    const auto index = static_cast<std::uint16_t>(next_);
    emit(writer_);
    next_ += slots;
    index_.emplace(key, index);
    return index;
  }

  ByteWriter writer_;
  std::map<std::string, std::uint16_t> index_;
  std::uint32_t next_ = 1;
  bool uses_bootstrap_ = false;
};

bool needs_wide(const ForgeInstruction& in) {
  if (in.wide) return true;
  if (const auto* l = std::get_if<operand::Local>(&in.operand)) return l->index > 0xFF;
  if (const auto* i = std::get_if<operand::Iinc>(&in.operand)) {
    return i->index > 0xFF || i->delta < -128 || i->delta > 127;
  }
  return false;
}

std::uint32_t instruction_length(const ForgeInstruction& in, std::uint32_t offset) {
  const auto format = classfile::operand_format(in.opcode);
  const std::uint32_t pad = (4 - ((offset + 1) % 4)) % 4;
  switch (format) {
    case OperandFormat::None: return 1;
    case OperandFormat::Byte: return 2;
    case OperandFormat::Short: return 3;
    case OperandFormat::Local: return needs_wide(in) ? 4 : 2;
    case OperandFormat::Iinc: return needs_wide(in) ? 6 : 3;
    case OperandFormat::PoolByte: return 2;
    case OperandFormat::Pool: return 3;
    case OperandFormat::InvokeInterface: return 5;
    case OperandFormat::InvokeDynamic: return 5;
    case OperandFormat::MultiANewArray: return 4;
    case OperandFormat::NewArray: return 2;
    case OperandFormat::Branch16: return 3;
    case OperandFormat::Branch32: return 5;
    case OperandFormat::TableSwitch: {
      const auto* sw = std::get_if<operand::Switch>(&in.operand);
      const std::uint32_t n = sw ? static_cast<std::uint32_t>(sw->cases.size()) : 0;
      return 1 + pad + 12 + 4 * n;
    }
    case OperandFormat::LookupSwitch: {
      const auto* sw = std::get_if<operand::Switch>(&in.operand);
      const std::uint32_t n = sw ? static_cast<std::uint32_t>(sw->cases.size()) : 0;
      return 1 + pad + 8 + 8 * n;
    }
    case OperandFormat::Wide:
    case OperandFormat::Invalid:
      break;
  }
  throw InvalidSpec("opcode " + std::to_string(in.opcode) + " cannot be forged directly");
}

template <typename T>
const T& expect_operand(const ForgeInstruction& in) {
  const auto* v = std::get_if<T>(&in.operand);
  if (v == nullptr) {
    throw InvalidSpec(std::string(classfile::mnemonic(in.opcode)) + " has the wrong operand kind");
  }
  return *v;
}

std::uint32_t slot_count(const MethodDescriptor& d) {
  std::uint32_t n = 1;
  for (const auto& p : d.params) {
    const auto* prim = std::get_if<classfile::PrimitiveType>(&p);
    n += prim && (prim->kind == classfile::PrimitiveKind::Long ||
                  prim->kind == classfile::PrimitiveKind::Double)
             ? 2
             : 1;
  }
  return n;
}

std::vector<std::uint8_t> encode_code(const std::vector<ForgeInstruction>& code, PoolBuilder& pool) {
  const auto offsets = layout(code);
  ByteWriter w;
  auto relative = [&](std::size_t from, std::size_t target) -> std::int64_t {
    if (target >= code.size()) {
      throw InvalidSpec("jump target index " + std::to_string(target) + " out of range");
    }
    return static_cast<std::int64_t>(offsets[target]) - static_cast<std::int64_t>(offsets[from]);
  };

  for (std::size_t i = 0; i < code.size(); ++i) {
    const auto& in = code[i];
    const auto format = classfile::operand_format(in.opcode);
    if ((format == OperandFormat::Local || format == OperandFormat::Iinc) && needs_wide(in)) {
      w.u1(op::wide);
    }
    w.u1(in.opcode);
    switch (format) {
      case OperandFormat::None:
        break;
      case OperandFormat::Byte:
        w.u1(static_cast<std::uint32_t>(expect_operand<operand::Immediate>(in).value));
        break;
      case OperandFormat::Short:
        w.u2(static_cast<std::uint32_t>(expect_operand<operand::Immediate>(in).value));
        break;
      case OperandFormat::NewArray:
        w.u1(static_cast<std::uint32_t>(expect_operand<operand::Immediate>(in).value));
        break;
      case OperandFormat::Local: {
        const auto index = expect_operand<operand::Local>(in).index;
        needs_wide(in) ? w.u2(index) : w.u1(index);
        break;
      }
      case OperandFormat::Iinc: {
        const auto& v = expect_operand<operand::Iinc>(in);
        if (needs_wide(in)) {
          w.u2(v.index);
          w.u2(static_cast<std::uint16_t>(v.delta));
        } else {
          w.u1(v.index);
          w.u1(static_cast<std::uint8_t>(v.delta));
        }
        break;
      }
      case OperandFormat::PoolByte: {
        const auto index = pool.constant(expect_operand<operand::Constant>(in));
        if (index > 0xFF) throw InvalidSpec("ldc constant index above 255; use ldc_w");
        w.u1(index);
        break;
      }
      case OperandFormat::Pool: {
        std::uint16_t index = 0;
        if (in.opcode == op::ldc_w || in.opcode == op::ldc2_w) {
          index = pool.constant(expect_operand<operand::Constant>(in));
        } else if (classfile::category_of(in.opcode) == classfile::InstructionCategory::Field ||
                   classfile::category_of(in.opcode) == classfile::InstructionCategory::Invoke) {
          index = pool.member(expect_operand<operand::Member>(in));
        } else {
          index = pool.class_ref(expect_operand<operand::TypeRef>(in).type);
        }
        w.u2(index);
        break;
      }
      case OperandFormat::InvokeInterface: {
        const auto& m = expect_operand<operand::Member>(in);
        w.u2(pool.member(m));
        w.u1(slot_count(classfile::parse_method_descriptor(m.descriptor)));
        w.u1(0);
        break;
      }
      case OperandFormat::InvokeDynamic:
        w.u2(pool.invoke_dynamic(expect_operand<operand::Dynamic>(in)));
        w.u2(0);
        break;
      case OperandFormat::MultiANewArray: {
        const auto& t = expect_operand<operand::TypeRef>(in);
        w.u2(pool.class_ref(t.type));
        w.u1(t.dimensions);
        break;
      }
      case OperandFormat::Branch16: {
        const auto delta = relative(i, expect_operand<operand::Jump>(in).target);
        if (delta < -32768 || delta > 32767) throw InvalidSpec("branch offset exceeds 16 bits");
        w.u2(static_cast<std::uint16_t>(delta));
        break;
      }
      case OperandFormat::Branch32:
        w.u4(static_cast<std::uint32_t>(relative(i, expect_operand<operand::Jump>(in).target)));
        break;
      case OperandFormat::TableSwitch:
      case OperandFormat::LookupSwitch: {
        const auto& sw = expect_operand<operand::Switch>(in);
        while (w.size() % 4 != 0) w.u1(0);
        w.u4(static_cast<std::uint32_t>(relative(i, sw.default_target)));
        if (format == OperandFormat::TableSwitch) {
          if (sw.cases.empty()) throw InvalidSpec("tableswitch needs at least one case");
          for (std::size_t k = 1; k < sw.cases.size(); ++k) {
            if (sw.cases[k].first != sw.cases[k - 1].first + 1) {
              throw InvalidSpec("tableswitch keys must be contiguous");
            }
          }
          w.u4(static_cast<std::uint32_t>(sw.cases.front().first));
          w.u4(static_cast<std::uint32_t>(sw.cases.back().first));
          for (const auto& [match, target] : sw.cases) {
            w.u4(static_cast<std::uint32_t>(relative(i, target)));
          }
        } else {
          for (std::size_t k = 1; k < sw.cases.size(); ++k) {
            if (sw.cases[k].first <= sw.cases[k - 1].first) {
              throw InvalidSpec("lookupswitch keys must be strictly increasing");
            }
          }
          w.u4(static_cast<std::uint32_t>(sw.cases.size()));
          for (const auto& [match, target] : sw.cases) {
            w.u4(static_cast<std::uint32_t>(match));
            w.u4(static_cast<std::uint32_t>(relative(i, target)));
          }
        }
        break;
      }
      case OperandFormat::Wide:
      case OperandFormat::Invalid:
        throw InvalidSpec("opcode cannot be forged directly");
    }
  }
  if (w.size() == 0 || w.size() > 65535) throw InvalidSpec("code length out of range");
  return std::move(w.bytes());
}

void write_code(ByteWriter& out, const ForgeMethod& method, PoolBuilder& pool) {
  const auto& code = *method.code;
  const auto bytes = encode_code(code.instructions, pool);
  const auto offsets = layout(code.instructions);
  auto pc = [&](std::size_t index) -> std::uint32_t {
    if (index == code.instructions.size()) return static_cast<std::uint32_t>(bytes.size());
    if (index > code.instructions.size()) throw InvalidSpec("handler index out of range");
    return offsets[index];
  };

  ByteWriter body;
  body.u2(code.max_stack);
  body.u2(code.max_locals);
  body.u4(static_cast<std::uint32_t>(bytes.size()));
  body.append(bytes);
  body.u2(static_cast<std::uint32_t>(code.handlers.size()));
  for (const auto& h : code.handlers) {
    if (h.start >= h.end || h.handler >= code.instructions.size()) {
      throw InvalidSpec("bad exception handler range");
    }
    body.u2(pc(h.start));
    body.u2(pc(h.end));
    body.u2(pc(h.handler));
    body.u2(h.catch_type ? pool.class_ref(*h.catch_type) : 0);
  }
  if (method.local_variable_types.empty()) {
    body.u2(0);
  } else {
    body.u2(1);
    body.u2(pool.utf8("LocalVariableTable"));
    body.u4(2 + 10 * static_cast<std::uint32_t>(method.local_variable_types.size()));
    body.u2(static_cast<std::uint32_t>(method.local_variable_types.size()));
    for (std::size_t k = 0; k < method.local_variable_types.size(); ++k) {
      body.u2(0);
      body.u2(static_cast<std::uint32_t>(bytes.size()));
      body.u2(pool.utf8("v" + std::to_string(k)));
      body.u2(pool.utf8(checked_descriptor(method.local_variable_types[k])));
      body.u2(static_cast<std::uint32_t>(k));
    }
  }
  out.u2(pool.utf8("Code"));
  out.u4(static_cast<std::uint32_t>(body.size()));
  out.append(body.bytes());
}

// ldc operands need pool indices below 256, so they are interned first.
void intern_ldc_constants(const ForgeClass& spec, PoolBuilder& pool) {
  for (const auto& m : spec.methods) {
    if (!m.code) continue;
    for (const auto& in : m.code->instructions) {
      if (in.opcode == op::ldc) pool.constant(expect_operand<operand::Constant>(in));
    }
  }
}

}  // namespace

std::vector<std::uint32_t> layout(const std::vector<ForgeInstruction>& instructions) {
  std::vector<std::uint32_t> offsets;
  offsets.reserve(instructions.size());
  std::uint32_t offset = 0;
  for (const auto& in : instructions) {
    offsets.push_back(offset);
    offset += instruction_length(in, offset);
  }
  return offsets;
}

std::vector<std::uint8_t> build(const ForgeClass& spec) {
  PoolBuilder pool;
  intern_ldc_constants(spec, pool);

  ByteWriter body;
  body.u2(spec.access_flags);
  body.u2(pool.class_ref(spec.name));
  body.u2(spec.super_name ? pool.class_ref(*spec.super_name) : 0);
  body.u2(static_cast<std::uint32_t>(spec.interfaces.size()));
  for (const auto& i : spec.interfaces) body.u2(pool.class_ref(i));

  body.u2(static_cast<std::uint32_t>(spec.fields.size()));
  for (const auto& f : spec.fields) {
    if (classfile::is_void(f.type)) throw InvalidSpec("field " + f.name + " is void");
    body.u2(f.access_flags);
    body.u2(pool.utf8(f.name));
    body.u2(pool.utf8(checked_descriptor(f.type)));
    body.u2(0);
  }

  body.u2(static_cast<std::uint32_t>(spec.methods.size()));
  for (const auto& m : spec.methods) {
    if (!m.code && !m.local_variable_types.empty()) {
      throw InvalidSpec("method " + m.name + " has local variables but no code");
    }
    body.u2(m.access_flags);
    body.u2(pool.utf8(m.name));
    body.u2(pool.utf8(checked_descriptor(m.descriptor)));
    body.u2((m.code ? 1u : 0u) + (m.declared_exceptions.empty() ? 0u : 1u));
    if (m.code) write_code(body, m, pool);
    if (!m.declared_exceptions.empty()) {
      body.u2(pool.utf8("Exceptions"));
      body.u4(2 + 2 * static_cast<std::uint32_t>(m.declared_exceptions.size()));
      body.u2(static_cast<std::uint32_t>(m.declared_exceptions.size()));
      for (const auto& e : m.declared_exceptions) body.u2(pool.class_ref(e));
    }
  }

  ByteWriter attributes;
  std::uint16_t attribute_count = 0;
  pool.bootstrap_attribute(attributes, attribute_count);
  body.u2(attribute_count);
  body.append(attributes.bytes());

  ByteWriter out;
  out.u4(0xCAFEBABE);
  out.u2(spec.minor_version);
  out.u2(spec.major_version);
  out.u2(pool.count());
  out.append(pool.bytes());
  out.append(body.bytes());
  return std::move(out.bytes());
}

namespace {

class Generator {
 public:
  Generator(std::uint64_t seed, const RandomBounds& bounds) : rng_(seed), bounds_(bounds) {
    self_ = "gen.p" + std::to_string(seed % 5) + ".Subject" + std::to_string(seed);
  }

  RandomClass run() {
    RandomClass out;
    auto& spec = out.spec;
    spec.name = self_;
    inject(self_);

    if (bounds_.max_interfaces > 0 && chance(30)) {
      auto super_name = pick_class();
      if (super_name == self_) super_name = "java.lang.Object";
      spec.super_name = super_name;
      both(super_name);
    } else {
      both("java.lang.Object");
    }

    for (std::size_t i = 0, n = below(bounds_.max_interfaces + 1); i < n; ++i) {
      auto name = pick_class();
      if (name == self_) continue;
      spec.interfaces.push_back(name);
      both(name);
    }

    for (std::size_t i = 0, n = below(bounds_.max_fields + 1); i < n; ++i) {
      auto type = pick_type();
      spec.fields.push_back({"f" + std::to_string(i), type, 0x0002});
      both(type);
    }

    for (std::size_t i = 0, n = below(bounds_.max_methods + 1); i < n; ++i) {
      spec.methods.push_back(method(i));
    }
    if (uses_indy_) spec.major_version = 51;

    for (const auto& name : literal_) out.expected.literal.insert(name);
    for (const auto& name : extended_) out.expected.extended.insert(name);
    for (const auto& name : injected_) {
      if (!literal_.contains(name)) out.expected.filtered.insert(name);
    }
    return out;
  }

 private:
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : rng_() % n; }
  bool chance(int percent) { return below(100) < static_cast<std::uint64_t>(percent); }

  bool filtered_name(const std::string& name) const {
    return name == self_ || name.starts_with("java.") || name.starts_with("javax.");
  }

  void inject(const std::string& name) { injected_.insert(name); }

  void inject(const TypeDescriptor& type) {
    if (const auto* c = std::get_if<classfile::ClassType>(&type)) inject(c->binary_name);
    if (const auto* a = std::get_if<classfile::ArrayType>(&type)) {
      if (const auto* c = std::get_if<classfile::ClassType>(&a->element)) inject(c->binary_name);
    }
  }

  void both(const std::string& name) {
    inject(name);
    if (filtered_name(name)) return;
    literal_.insert(name);
    extended_.insert(name);
  }

  void both(const TypeDescriptor& type) {
    if (const auto* c = std::get_if<classfile::ClassType>(&type)) {
      both(c->binary_name);
    } else {
      inject(type);
    }
  }

  void extended_only(const TypeDescriptor& type) {
    inject(type);
    if (const auto* c = std::get_if<classfile::ClassType>(&type)) {
      if (!filtered_name(c->binary_name)) extended_.insert(c->binary_name);
    }
  }

  std::string pick_class() {
    static const char* const kJdk[] = {"java.util.List", "java.lang.String", "java.io.File",
                                       "javax.swing.JPanel", "java.util.Map$Entry"};
    static const char* const kTricky[] = {"javafx.scene.Node", "javaz.Thing", "jdk.internal.Misc",
                                          "Bare"};
    const auto roll = below(100);
    if (roll < 50) return "org.ext.E" + std::to_string(below(40));
    if (roll < 70) return kJdk[below(std::size(kJdk))];
    if (roll < 80) return self_;
    if (roll < 90) return self_ + "$Inner" + std::to_string(below(3));
    return kTricky[below(std::size(kTricky))];
  }

  classfile::PrimitiveType pick_primitive() {
    static const classfile::PrimitiveKind kKinds[] = {
        classfile::PrimitiveKind::Byte,  classfile::PrimitiveKind::Char,
        classfile::PrimitiveKind::Double, classfile::PrimitiveKind::Float,
        classfile::PrimitiveKind::Int,   classfile::PrimitiveKind::Long,
        classfile::PrimitiveKind::Short, classfile::PrimitiveKind::Boolean};
    return {kKinds[below(std::size(kKinds))]};
  }

  classfile::ArrayType pick_array(int min_dims = 1) {
    classfile::ElementType element = pick_primitive();
    if (chance(60)) element = classfile::ClassType{pick_class()};
    return {element, min_dims + static_cast<int>(below(3))};
  }

  TypeDescriptor pick_type() {
    const auto roll = below(100);
    if (roll < 25) return pick_primitive();
    if (roll < 75) return class_type(pick_class());
    return pick_array();
  }

  MethodDescriptor pick_descriptor() {
    MethodDescriptor d;
    for (std::size_t k = 0, n = below(4); k < n; ++k) d.params.push_back(pick_type());
    if (!chance(30)) d.return_type = pick_type();
    return d;
  }

  ForgeMethod method(std::size_t index) {
    ForgeMethod m;
    m.name = "m" + std::to_string(index);
    m.descriptor = pick_descriptor();
    both(m.descriptor.return_type);
    for (const auto& p : m.descriptor.params) both(p);
    for (std::size_t k = 0, n = below(3); k < n; ++k) {
      const auto name = pick_class();
      m.declared_exceptions.push_back(name);
      both(name);
    }
    if (chance(20)) {
      m.access_flags = 0x0401;
      return m;
    }
    m.code = code();
    for (std::size_t k = 0, n = below(4); k < n; ++k) {
      m.local_variable_types.push_back(pick_type());
      both(m.local_variable_types.back());
    }
    return m;
  }

  ForgeCode code() {
    ForgeCode c;
    c.max_locals = 400;
    const std::size_t n = 1 + below(bounds_.max_instructions);
    for (std::size_t i = 0; i < n; ++i) c.instructions.push_back(instruction(n));
    if (chance(40)) {
      const auto start = below(n);
      const auto end = start + 1 + below(n - start);
      std::optional<std::string> catch_type;
      if (chance(70)) {
        catch_type = pick_class();
        extended_only(class_type(*catch_type));
      }
      c.handlers.push_back({start, end, below(n), catch_type});
    }
    return c;
  }

  ForgeInstruction instruction(std::size_t n) {
    switch (below(16)) {
      case 0: {
        static const std::uint8_t kLoads[] = {op::iload, op::lload, op::fload, op::dload,
                                              op::aload, op::istore, op::astore, op::lstore};
        const auto index = static_cast<std::uint16_t>(chance(15) ? 256 + below(100) : below(8));
        const auto opcode = kLoads[below(std::size(kLoads))];
        return local(opcode, index, chance(10));
      }
      case 1:
        return iinc(static_cast<std::uint16_t>(below(300)),
                    static_cast<std::int16_t>(static_cast<int>(below(600)) - 300), chance(10));
      case 2:
        return insn(static_cast<std::uint8_t>(chance(50) ? op::iaload + below(8)
                                                         : op::iastore + below(8)));
      case 3: {
        static const std::uint8_t kFields[] = {op::getstatic, op::putstatic, op::getfield,
                                               op::putfield};
        const auto owner = pick_class();
        const auto type = pick_type();
        both(type);
        extended_only(class_type(owner));
        return field_insn(kFields[below(4)], owner, "x" + std::to_string(below(5)), type);
      }
      case 4: {
        static const std::uint8_t kInvokes[] = {op::invokevirtual, op::invokespecial,
                                                op::invokestatic, op::invokeinterface};
        const auto opcode = kInvokes[below(4)];
        TypeDescriptor owner = class_type(pick_class());
        if (opcode == op::invokevirtual && chance(15)) owner = pick_array();
        const auto d = pick_descriptor();
        both(d.return_type);
        extended_only(owner);
        for (const auto& p : d.params) extended_only(p);
        return invoke(opcode, owner, "k" + std::to_string(below(5)), d);
      }
      case 5: {
        uses_indy_ = true;
        const auto d = pick_descriptor();
        both(d.return_type);
        for (const auto& p : d.params) extended_only(p);
        return invokedynamic("lambda" + std::to_string(below(3)), d);
      }
      case 6: {
        TypeDescriptor type = class_type(pick_class());
        if (chance(25)) type = pick_array();
        both(type);
        return type_insn(chance(50) ? op::instanceof : op::checkcast, type);
      }
      case 7: {
        const auto roll = below(3);
        if (roll == 0) {
          const auto type = class_type(pick_class());
          inject(type);
          return type_insn(op::new_, type);
        }
        if (roll == 1) {
          const TypeDescriptor type =
              chance(60) ? class_type(pick_class()) : TypeDescriptor(pick_array());
          inject(type);
          return type_insn(op::anewarray, type);
        }
        const auto type = pick_array(2);
        inject(type);
        return type_insn(op::multianewarray, type, 2);
      }
      case 8: {
        const auto roll = below(6);
        operand::Constant k;
        if (roll == 0) k.value = static_cast<std::int32_t>(rng_());
        if (roll == 1) k.value = static_cast<float>(below(1000)) / 7.0f;
        if (roll == 2) k.value = static_cast<std::int64_t>(rng_());
        if (roll == 3) k.value = static_cast<double>(below(1000)) / 3.0;
        if (roll == 4) k.value = std::string("s") + std::to_string(below(10));
        if (roll == 5) {
          const auto type = class_type(pick_class());
          inject(type);
          k.value = type;
        }
        auto in = ldc(std::move(k));
        if (in.opcode == op::ldc && chance(50)) in.opcode = op::ldc_w;
        return in;
      }
      case 9:
      case 10: {
        static const std::uint8_t kBranches[] = {op::ifeq, op::ifne, op::if_icmplt, op::if_acmpeq,
                                                 op::ifnull, op::ifnonnull, op::goto_, op::goto_w};
        return jump(kBranches[below(std::size(kBranches))], below(n));
      }
      case 11: {
        if (chance(50)) {
          std::vector<std::size_t> targets;
          for (std::size_t k = 0, m = 1 + below(4); k < m; ++k) targets.push_back(below(n));
          return tableswitch(static_cast<std::int32_t>(below(20)) - 10, targets, below(n));
        }
        std::vector<std::pair<std::int32_t, std::size_t>> cases;
        std::int32_t key = static_cast<std::int32_t>(below(50)) - 100;
        for (std::size_t k = 0, m = below(5); k < m; ++k) {
          key += 1 + static_cast<std::int32_t>(below(40));
          cases.emplace_back(key, below(n));
        }
        return lookupswitch(cases, below(n));
      }
      case 12:
        return push(op::bipush, static_cast<std::int32_t>(below(256)) - 128);
      case 13:
        return push(op::sipush, static_cast<std::int32_t>(below(65536)) - 32768);
      case 14:
        return push(op::newarray, 4 + static_cast<std::int32_t>(below(8)));
      default: {
        static const std::uint8_t kPlain[] = {op::nop,  op::iadd,   op::pop,    op::dup,
                                              op::ireturn, op::return_, op::athrow, op::aconst_null,
                                              op::arraylength, op::monitorenter};
        return insn(kPlain[below(std::size(kPlain))]);
      }
    }
  }

  std::mt19937_64 rng_;
  RandomBounds bounds_;
  std::string self_;
  std::set<std::string> literal_;
  std::set<std::string> extended_;
  std::set<std::string> injected_;
  bool uses_indy_ = false;
};

}  // namespace

RandomClass random_class(std::uint64_t seed, const RandomBounds& bounds) {
  return Generator(seed, bounds).run();
}

}  // namespace oometric::forge
