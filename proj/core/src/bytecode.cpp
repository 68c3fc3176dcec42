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

#include "oometric/bytecode.hpp"

#include <array>
#include <string>

#include "byte_reader.hpp"

namespace oometric::classfile {

namespace {

struct OpcodeInfo {
  std::string_view name;
  OperandFormat format = OperandFormat::Invalid;
};

constexpr std::string_view strip_suffix(std::string_view name) {
  return name.back() == '_' ? name.substr(0, name.size() - 1) : name;
}

constexpr std::array<OpcodeInfo, 256> make_table() {
  std::array<OpcodeInfo, 256> table{};
#define OOMETRIC_OPCODE_ENTRY(name, value, format) \
  table[value] = OpcodeInfo{strip_suffix(#name), OperandFormat::format};
  OOMETRIC_OPCODES(OOMETRIC_OPCODE_ENTRY)
#undef OOMETRIC_OPCODE_ENTRY
  return table;
}

constexpr auto kOpcodes = make_table();

[[noreturn]] void bad_code(std::uint32_t offset, const std::string& why) {
  throw ClassFormatError(ErrorKind::BadCode, why + " at offset " + std::to_string(offset));
}

TypeDescriptor object_type() { return ClassType{"java.lang.Object"}; }

PrimitiveType prim(PrimitiveKind kind) { return PrimitiveType{kind}; }

// Value kind of a local-variable instruction, by its type prefix.
TypeDescriptor local_kind(std::uint8_t opcode) {
  int slot = -1;  // 0=i 1=l 2=f 3=d 4=a
  if (opcode >= op::iload && opcode <= op::aload) slot = opcode - op::iload;
  else if (opcode >= op::iload_0 && opcode <= op::aload_3) slot = (opcode - op::iload_0) / 4;
  else if (opcode >= op::istore && opcode <= op::astore) slot = opcode - op::istore;
  else if (opcode >= op::istore_0 && opcode <= op::astore_3) slot = (opcode - op::istore_0) / 4;
  else if (opcode == op::iinc) slot = 0;
  switch (slot) {
    case 0: return prim(PrimitiveKind::Int);
    case 1: return prim(PrimitiveKind::Long);
    case 2: return prim(PrimitiveKind::Float);
    case 3: return prim(PrimitiveKind::Double);
    default: return object_type();
  }
}

// Array type touched by an array load or store.
TypeDescriptor array_kind(std::uint8_t opcode) {
  const int slot = opcode >= op::iastore ? opcode - op::iastore : opcode - op::iaload;
  ElementType element;
  switch (slot) {
    case 0: element = prim(PrimitiveKind::Int); break;
    case 1: element = prim(PrimitiveKind::Long); break;
    case 2: element = prim(PrimitiveKind::Float); break;
    case 3: element = prim(PrimitiveKind::Double); break;
    case 4: element = ClassType{"java.lang.Object"}; break;
    case 5: element = prim(PrimitiveKind::Byte); break;
    case 6: element = prim(PrimitiveKind::Char); break;
    default: element = prim(PrimitiveKind::Short); break;
  }
  return ArrayType{element, 1};
}

// One more array dimension around `component`.
TypeDescriptor array_of(const TypeDescriptor& component) {
  if (const auto* a = std::get_if<ArrayType>(&component)) {
    return ArrayType{a->element, a->dims + 1};
  }
  if (const auto* p = std::get_if<PrimitiveType>(&component)) return ArrayType{*p, 1};
  return ArrayType{std::get<ClassType>(component), 1};
}

std::optional<PrimitiveKind> newarray_kind(std::int32_t code) {
  switch (code) {
    case 4: return PrimitiveKind::Boolean;
    case 5: return PrimitiveKind::Char;
    case 6: return PrimitiveKind::Float;
    case 7: return PrimitiveKind::Double;
    case 8: return PrimitiveKind::Byte;
    case 9: return PrimitiveKind::Short;
    case 10: return PrimitiveKind::Int;
    case 11: return PrimitiveKind::Long;
    default: return std::nullopt;
  }
}

bool is_wideable(std::uint8_t opcode) {
  return (opcode >= op::iload && opcode <= op::aload) ||
         (opcode >= op::istore && opcode <= op::astore) || opcode == op::ret ||
         opcode == op::iinc;
}

std::uint32_t jump(std::uint32_t offset, std::int64_t delta, std::size_t code_length) {
  const std::int64_t target = static_cast<std::int64_t>(offset) + delta;
  if (target < 0 || target >= static_cast<std::int64_t>(code_length)) {
    bad_code(offset, "jump target " + std::to_string(target) + " outside code");
  }
  return static_cast<std::uint32_t>(target);
}

void check_loadable(const ConstantPool& pool, Instruction& insn) {
  const auto& entry = pool.at(*insn.pool_index);
  const auto tag = tag_of(entry);
  const bool wide_value = tag == 5 || tag == 6;
  bool ok = false;
  if (insn.opcode == op::ldc2_w) {
    ok = wide_value || tag == static_cast<std::uint8_t>(ConstantTag::Dynamic);
  } else {
    ok = tag == 3 || tag == 4 || tag == 7 || tag == 8 || tag == 15 || tag == 16 ||
         tag == static_cast<std::uint8_t>(ConstantTag::Dynamic);
  }
  if (!ok) {
    throw ClassFormatError(ErrorKind::BadIndex, std::string(mnemonic(insn.opcode)) +
                                                    " operand #" +
                                                    std::to_string(*insn.pool_index) +
                                                    " is not a loadable constant");
  }
}

void resolve_field(const ConstantPool& pool, Instruction& insn) {
  const auto& ref = pool.member_ref(*insn.pool_index);
  if (ref.tag != ConstantTag::Fieldref) {
    throw ClassFormatError(ErrorKind::BadIndex, "field instruction operand #" +
                                                    std::to_string(*insn.pool_index) +
                                                    " is not a Fieldref");
  }
  auto member = pool.member(*insn.pool_index);
  insn.referenced_type = parse_field_descriptor(member.descriptor);
  insn.referenced_owner = std::move(member.owner);
}

void resolve_invoke(const ConstantPool& pool, Instruction& insn) {
  if (insn.opcode == op::invokedynamic) {
    const auto& dyn = pool.get<constant::DynamicRef>(*insn.pool_index);
    if (dyn.tag != ConstantTag::InvokeDynamic) {
      throw ClassFormatError(ErrorKind::BadIndex, "invokedynamic operand is not InvokeDynamic");
    }
    const auto& nat = pool.name_and_type(dyn.name_and_type_index);
    auto desc = parse_method_descriptor(pool.utf8(nat.descriptor_index));
    insn.referenced_type = std::move(desc.return_type);
    insn.argument_types = std::move(desc.params);
    return;
  }
  const auto& ref = pool.member_ref(*insn.pool_index);
  bool ok = false;
  switch (insn.opcode) {
    case op::invokevirtual: ok = ref.tag == ConstantTag::Methodref; break;
    case op::invokeinterface: ok = ref.tag == ConstantTag::InterfaceMethodref; break;
    default: ok = ref.tag != ConstantTag::Fieldref; break;
  }
  if (!ok) {
    throw ClassFormatError(ErrorKind::BadIndex, std::string(mnemonic(insn.opcode)) +
                                                    " operand has tag " +
                                                    std::string(to_string(ref.tag)));
  }
  auto member = pool.member(*insn.pool_index);
  auto desc = parse_method_descriptor(member.descriptor);
  insn.referenced_type = std::move(desc.return_type);
  insn.argument_types = std::move(desc.params);
  insn.referenced_owner = std::move(member.owner);
}

Instruction decode_one(detail::ByteReader& in, std::size_t code_length, const ConstantPool& pool) {
  Instruction insn;
  insn.offset = static_cast<std::uint32_t>(in.position());
  insn.opcode = in.u1();
  const auto format = kOpcodes[insn.opcode].format;
  if (format == OperandFormat::Invalid) {
    bad_code(insn.offset, "undefined opcode " + std::to_string(insn.opcode));
  }
  insn.category = category_of(insn.opcode);

  try {
    switch (format) {
      case OperandFormat::None:
        break;
      case OperandFormat::Byte:
        insn.immediate = in.s1();
        break;
      case OperandFormat::Short:
        insn.immediate = in.s2();
        break;
      case OperandFormat::Local:
        insn.local_index = in.u1();
        break;
      case OperandFormat::Iinc:
        insn.local_index = in.u1();
        insn.immediate = in.s1();
        break;
      case OperandFormat::PoolByte:
        insn.pool_index = in.u1();
        break;
      case OperandFormat::Pool:
        insn.pool_index = in.u2();
        break;
      case OperandFormat::InvokeInterface:
        insn.pool_index = in.u2();
        insn.immediate = in.u1();
        if (insn.immediate == 0) bad_code(insn.offset, "invokeinterface count is zero");
        in.skip(1);
        break;
      case OperandFormat::InvokeDynamic:
        insn.pool_index = in.u2();
        in.skip(2);
        break;
      case OperandFormat::MultiANewArray:
        insn.pool_index = in.u2();
        insn.immediate = in.u1();
        if (insn.immediate == 0) bad_code(insn.offset, "multianewarray with zero dimensions");
        break;
      case OperandFormat::NewArray:
        insn.immediate = in.u1();
        if (!newarray_kind(insn.immediate)) bad_code(insn.offset, "bad newarray type code");
        break;
      case OperandFormat::Branch16:
        insn.branch_target = jump(insn.offset, in.s2(), code_length);
        break;
      case OperandFormat::Branch32:
        insn.branch_target = jump(insn.offset, in.s4(), code_length);
        break;
      case OperandFormat::TableSwitch:
      case OperandFormat::LookupSwitch: {
        // Operands start at the next multiple of four from the code start.
        in.skip((4 - (in.position() % 4)) % 4);
        SwitchTable table;
        table.default_target = jump(insn.offset, in.s4(), code_length);
        if (format == OperandFormat::TableSwitch) {
          const std::int64_t low = in.s4();
          const std::int64_t high = in.s4();
          if (low > high) bad_code(insn.offset, "tableswitch low > high");
          const std::int64_t count = high - low + 1;
          if (static_cast<std::uint64_t>(count) * 4 > in.remaining()) {
            throw ClassFormatError(ErrorKind::Truncated, "tableswitch jump table");
          }
          for (std::int64_t key = low; key <= high; ++key) {
            table.cases.emplace_back(static_cast<std::int32_t>(key),
                                     jump(insn.offset, in.s4(), code_length));
          }
        } else {
          const std::int32_t npairs = in.s4();
          if (npairs < 0) bad_code(insn.offset, "lookupswitch npairs < 0");
          if (static_cast<std::uint64_t>(npairs) * 8 > in.remaining()) {
            throw ClassFormatError(ErrorKind::Truncated, "lookupswitch pairs");
          }
          for (std::int32_t i = 0; i < npairs; ++i) {
            const std::int32_t match = in.s4();
            table.cases.emplace_back(match, jump(insn.offset, in.s4(), code_length));
          }
        }
        insn.switch_table = std::move(table);
        break;
      }
      case OperandFormat::Wide: {
        insn.wide = true;
        insn.opcode = in.u1();
        if (!is_wideable(insn.opcode)) {
          bad_code(insn.offset, "wide applied to " + std::to_string(insn.opcode));
        }
        insn.category = category_of(insn.opcode);
        insn.local_index = in.u2();
        if (insn.opcode == op::iinc) insn.immediate = in.s2();
        break;
      }
      case OperandFormat::Invalid:
        break;
    }
  } catch (const ClassFormatError& e) {
    if (e.kind() != ErrorKind::Truncated) throw;
    bad_code(insn.offset, std::string(mnemonic(insn.opcode)) + " operands overrun code array");
  }

  insn.length = static_cast<std::uint32_t>(in.position() - insn.offset);

  // Implicit local slot of the *_0.._3 short forms.
  if (!insn.local_index && insn.category == InstructionCategory::LocalVar) {
    const int base = insn.opcode >= op::istore_0 ? op::istore_0 : op::iload_0;
    insn.local_index = static_cast<std::uint16_t>((insn.opcode - base) % 4);
  }

  switch (insn.category) {
    case InstructionCategory::LocalVar:
      insn.referenced_type = local_kind(insn.opcode);
      break;
    case InstructionCategory::Array:
      insn.referenced_type = array_kind(insn.opcode);
      break;
    case InstructionCategory::Field:
      resolve_field(pool, insn);
      break;
    case InstructionCategory::Invoke:
      resolve_invoke(pool, insn);
      break;
    case InstructionCategory::InstanceOf:
    case InstructionCategory::CheckCast:
      insn.referenced_type = resolve_class_type(pool, *insn.pool_index);
      break;
    default:
      switch (insn.opcode) {
        case op::ldc:
        case op::ldc_w:
        case op::ldc2_w:
          check_loadable(pool, insn);
          break;
        case op::new_:
          insn.referenced_type = resolve_class_type(pool, *insn.pool_index);
          if (!is_class(*insn.referenced_type)) bad_code(insn.offset, "new of an array type");
          break;
        case op::anewarray:
          insn.referenced_type = array_of(resolve_class_type(pool, *insn.pool_index));
          break;
        case op::multianewarray: {
          auto type = resolve_class_type(pool, *insn.pool_index);
          const auto* array = std::get_if<ArrayType>(&type);
          if (array == nullptr || array->dims < insn.immediate) {
            bad_code(insn.offset, "multianewarray dimensions exceed array type");
          }
          insn.referenced_type = std::move(type);
          break;
        }
        case op::newarray:
          insn.referenced_type = ArrayType{prim(*newarray_kind(insn.immediate)), 1};
          break;
        default:
          break;
      }
      break;
  }
  return insn;
}

}  // namespace

std::string_view to_string(InstructionCategory category) {
  switch (category) {
    case InstructionCategory::LocalVar: return "LocalVar";
    case InstructionCategory::Array: return "Array";
    case InstructionCategory::Field: return "Field";
    case InstructionCategory::Invoke: return "Invoke";
    case InstructionCategory::InstanceOf: return "InstanceOf";
    case InstructionCategory::CheckCast: return "CheckCast";
    case InstructionCategory::Branch: return "Branch";
    case InstructionCategory::Switch: return "Switch";
    case InstructionCategory::Other: return "Other";
  }
  return "?";
}

bool is_defined_opcode(std::uint8_t opcode) {
  return kOpcodes[opcode].format != OperandFormat::Invalid;
}

std::string_view mnemonic(std::uint8_t opcode) {
  return is_defined_opcode(opcode) ? kOpcodes[opcode].name : std::string_view("<invalid>");
}

OperandFormat operand_format(std::uint8_t opcode) { return kOpcodes[opcode].format; }

InstructionCategory category_of(std::uint8_t opcode) {
  using C = InstructionCategory;
  if ((opcode >= op::iload && opcode <= op::aload_3) ||
      (opcode >= op::istore && opcode <= op::astore_3) || opcode == op::iinc) {
    return C::LocalVar;
  }
  if ((opcode >= op::iaload && opcode <= op::saload) ||
      (opcode >= op::iastore && opcode <= op::sastore)) {
    return C::Array;
  }
  if (opcode >= op::getstatic && opcode <= op::putfield) return C::Field;
  if (opcode >= op::invokevirtual && opcode <= op::invokedynamic) return C::Invoke;
  if (opcode == op::instanceof) return C::InstanceOf;
  if (opcode == op::checkcast) return C::CheckCast;
  if ((opcode >= op::ifeq && opcode <= op::if_acmpne) || opcode == op::ifnull ||
      opcode == op::ifnonnull) {
    return C::Branch;
  }
  if (opcode == op::tableswitch || opcode == op::lookupswitch) return C::Switch;
  return C::Other;
}

bool is_unconditional_transfer(std::uint8_t opcode) {
  return opcode == op::goto_ || opcode == op::goto_w || opcode == op::jsr ||
         opcode == op::jsr_w || opcode == op::ret || opcode == op::athrow ||
         (opcode >= op::ireturn && opcode <= op::return_);
}

std::vector<std::uint32_t> Instruction::targets() const {
  std::vector<std::uint32_t> out;
  if (branch_target) out.push_back(*branch_target);
  if (switch_table) {
    for (const auto& [match, target] : switch_table->cases) out.push_back(target);
    out.push_back(switch_table->default_target);
  }
  return out;
}

std::vector<Instruction> decode_instructions(std::span<const std::uint8_t> code,
                                             const ConstantPool& pool) {
  std::vector<Instruction> out;
  detail::ByteReader in(code);
  while (!in.at_end()) out.push_back(decode_one(in, code.size(), pool));

  std::vector<bool> boundary(code.size(), false);
  for (const auto& insn : out) boundary[insn.offset] = true;
  for (const auto& insn : out) {
    for (const auto target : insn.targets()) {
      if (!boundary[target]) {
        bad_code(insn.offset, "jump target " + std::to_string(target) +
                                  " is not an instruction boundary");
      }
    }
  }
  return out;
}

}  // namespace oometric::classfile
