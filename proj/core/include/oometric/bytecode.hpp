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
#include <string_view>
#include <utility>
#include <vector>

#include "oometric/constant_pool.hpp"
#include "oometric/descriptor.hpp"

namespace oometric::classfile {

// Operand layout following the opcode byte.
enum class OperandFormat : std::uint8_t {
  None,
  Byte,             // bipush
  Short,            // sipush
  Local,            // u1 local index (u2 under wide)
  Iinc,             // u1 index, s1 delta (u2, s2 under wide)
  PoolByte,         // ldc
  Pool,             // u2 constant pool index
  InvokeInterface,  // u2 index, u1 count, u1 zero
  InvokeDynamic,    // u2 index, u1 zero, u1 zero
  MultiANewArray,   // u2 index, u1 dimensions
  NewArray,         // u1 array type code
  Branch16,
  Branch32,
  TableSwitch,
  LookupSwitch,
  Wide,
  Invalid,
};

// clang-format off
#define OOMETRIC_OPCODES(X)                                                              \
  X(nop, 0x00, None) X(aconst_null, 0x01, None)                                          \
  X(iconst_m1, 0x02, None) X(iconst_0, 0x03, None) X(iconst_1, 0x04, None)               \
  X(iconst_2, 0x05, None) X(iconst_3, 0x06, None) X(iconst_4, 0x07, None)                \
  X(iconst_5, 0x08, None) X(lconst_0, 0x09, None) X(lconst_1, 0x0a, None)                \
  X(fconst_0, 0x0b, None) X(fconst_1, 0x0c, None) X(fconst_2, 0x0d, None)                \
  X(dconst_0, 0x0e, None) X(dconst_1, 0x0f, None)                                        \
  X(bipush, 0x10, Byte) X(sipush, 0x11, Short)                                           \
  X(ldc, 0x12, PoolByte) X(ldc_w, 0x13, Pool) X(ldc2_w, 0x14, Pool)                      \
  X(iload, 0x15, Local) X(lload, 0x16, Local) X(fload, 0x17, Local)                      \
  X(dload, 0x18, Local) X(aload, 0x19, Local)                                            \
  X(iload_0, 0x1a, None) X(iload_1, 0x1b, None) X(iload_2, 0x1c, None)                   \
  X(iload_3, 0x1d, None) X(lload_0, 0x1e, None) X(lload_1, 0x1f, None)                   \
  X(lload_2, 0x20, None) X(lload_3, 0x21, None) X(fload_0, 0x22, None)                   \
  X(fload_1, 0x23, None) X(fload_2, 0x24, None) X(fload_3, 0x25, None)                   \
  X(dload_0, 0x26, None) X(dload_1, 0x27, None) X(dload_2, 0x28, None)                   \
  X(dload_3, 0x29, None) X(aload_0, 0x2a, None) X(aload_1, 0x2b, None)                   \
  X(aload_2, 0x2c, None) X(aload_3, 0x2d, None)                                          \
  X(iaload, 0x2e, None) X(laload, 0x2f, None) X(faload, 0x30, None)                      \
  X(daload, 0x31, None) X(aaload, 0x32, None) X(baload, 0x33, None)                      \
  X(caload, 0x34, None) X(saload, 0x35, None)                                            \
  X(istore, 0x36, Local) X(lstore, 0x37, Local) X(fstore, 0x38, Local)                   \
  X(dstore, 0x39, Local) X(astore, 0x3a, Local)                                          \
  X(istore_0, 0x3b, None) X(istore_1, 0x3c, None) X(istore_2, 0x3d, None)                \
  X(istore_3, 0x3e, None) X(lstore_0, 0x3f, None) X(lstore_1, 0x40, None)                \
  X(lstore_2, 0x41, None) X(lstore_3, 0x42, None) X(fstore_0, 0x43, None)                \
  X(fstore_1, 0x44, None) X(fstore_2, 0x45, None) X(fstore_3, 0x46, None)                \
  X(dstore_0, 0x47, None) X(dstore_1, 0x48, None) X(dstore_2, 0x49, None)                \
  X(dstore_3, 0x4a, None) X(astore_0, 0x4b, None) X(astore_1, 0x4c, None)                \
  X(astore_2, 0x4d, None) X(astore_3, 0x4e, None)                                        \
  X(iastore, 0x4f, None) X(lastore, 0x50, None) X(fastore, 0x51, None)                   \
  X(dastore, 0x52, None) X(aastore, 0x53, None) X(bastore, 0x54, None)                   \
  X(castore, 0x55, None) X(sastore, 0x56, None)                                          \
  X(pop, 0x57, None) X(pop2, 0x58, None) X(dup, 0x59, None) X(dup_x1, 0x5a, None)        \
  X(dup_x2, 0x5b, None) X(dup2, 0x5c, None) X(dup2_x1, 0x5d, None)                       \
  X(dup2_x2, 0x5e, None) X(swap, 0x5f, None)                                             \
  X(iadd, 0x60, None) X(ladd, 0x61, None) X(fadd, 0x62, None) X(dadd, 0x63, None)        \
  X(isub, 0x64, None) X(lsub, 0x65, None) X(fsub, 0x66, None) X(dsub, 0x67, None)        \
  X(imul, 0x68, None) X(lmul, 0x69, None) X(fmul, 0x6a, None) X(dmul, 0x6b, None)        \
  X(idiv, 0x6c, None) X(ldiv, 0x6d, None) X(fdiv, 0x6e, None) X(ddiv, 0x6f, None)        \
  X(irem, 0x70, None) X(lrem, 0x71, None) X(frem, 0x72, None) X(drem, 0x73, None)        \
  X(ineg, 0x74, None) X(lneg, 0x75, None) X(fneg, 0x76, None) X(dneg, 0x77, None)        \
  X(ishl, 0x78, None) X(lshl, 0x79, None) X(ishr, 0x7a, None) X(lshr, 0x7b, None)        \
  X(iushr, 0x7c, None) X(lushr, 0x7d, None) X(iand, 0x7e, None) X(land, 0x7f, None)      \
  X(ior, 0x80, None) X(lor, 0x81, None) X(ixor, 0x82, None) X(lxor, 0x83, None)          \
  X(iinc, 0x84, Iinc)                                                                    \
  X(i2l, 0x85, None) X(i2f, 0x86, None) X(i2d, 0x87, None) X(l2i, 0x88, None)            \
  X(l2f, 0x89, None) X(l2d, 0x8a, None) X(f2i, 0x8b, None) X(f2l, 0x8c, None)            \
  X(f2d, 0x8d, None) X(d2i, 0x8e, None) X(d2l, 0x8f, None) X(d2f, 0x90, None)            \
  X(i2b, 0x91, None) X(i2c, 0x92, None) X(i2s, 0x93, None)                               \
  X(lcmp, 0x94, None) X(fcmpl, 0x95, None) X(fcmpg, 0x96, None)                          \
  X(dcmpl, 0x97, None) X(dcmpg, 0x98, None)                                              \
  X(ifeq, 0x99, Branch16) X(ifne, 0x9a, Branch16) X(iflt, 0x9b, Branch16)                \
  X(ifge, 0x9c, Branch16) X(ifgt, 0x9d, Branch16) X(ifle, 0x9e, Branch16)                \
  X(if_icmpeq, 0x9f, Branch16) X(if_icmpne, 0xa0, Branch16)                              \
  X(if_icmplt, 0xa1, Branch16) X(if_icmpge, 0xa2, Branch16)                              \
  X(if_icmpgt, 0xa3, Branch16) X(if_icmple, 0xa4, Branch16)                              \
  X(if_acmpeq, 0xa5, Branch16) X(if_acmpne, 0xa6, Branch16)                              \
  X(goto_, 0xa7, Branch16) X(jsr, 0xa8, Branch16) X(ret, 0xa9, Local)                    \
  X(tableswitch, 0xaa, TableSwitch) X(lookupswitch, 0xab, LookupSwitch)                  \
  X(ireturn, 0xac, None) X(lreturn, 0xad, None) X(freturn, 0xae, None)                   \
  X(dreturn, 0xaf, None) X(areturn, 0xb0, None) X(return_, 0xb1, None)                   \
  X(getstatic, 0xb2, Pool) X(putstatic, 0xb3, Pool)                                      \
  X(getfield, 0xb4, Pool) X(putfield, 0xb5, Pool)                                        \
  X(invokevirtual, 0xb6, Pool) X(invokespecial, 0xb7, Pool)                              \
  X(invokestatic, 0xb8, Pool) X(invokeinterface, 0xb9, InvokeInterface)                  \
  X(invokedynamic, 0xba, InvokeDynamic)                                                  \
  X(new_, 0xbb, Pool) X(newarray, 0xbc, NewArray) X(anewarray, 0xbd, Pool)               \
  X(arraylength, 0xbe, None) X(athrow, 0xbf, None)                                       \
  X(checkcast, 0xc0, Pool) X(instanceof, 0xc1, Pool)                                     \
  X(monitorenter, 0xc2, None) X(monitorexit, 0xc3, None)                                 \
  X(wide, 0xc4, Wide) X(multianewarray, 0xc5, MultiANewArray)                            \
  X(ifnull, 0xc6, Branch16) X(ifnonnull, 0xc7, Branch16)                                 \
  X(goto_w, 0xc8, Branch32) X(jsr_w, 0xc9, Branch32)
// clang-format on

namespace op {
#define OOMETRIC_OPCODE_CONSTANT(name, value, format) inline constexpr std::uint8_t name = value;
OOMETRIC_OPCODES(OOMETRIC_OPCODE_CONSTANT)
#undef OOMETRIC_OPCODE_CONSTANT
}  // namespace op

enum class InstructionCategory : std::uint8_t {
  LocalVar,
  Array,
  Field,
  Invoke,
  InstanceOf,
  CheckCast,
  Branch,
  Switch,
  Other,
};

std::string_view to_string(InstructionCategory category);

bool is_defined_opcode(std::uint8_t opcode);
std::string_view mnemonic(std::uint8_t opcode);
OperandFormat operand_format(std::uint8_t opcode);
InstructionCategory category_of(std::uint8_t opcode);

// goto, goto_w, jsr, jsr_w, ret, the return family and athrow: control never
// falls through to the next instruction.
bool is_unconditional_transfer(std::uint8_t opcode);

struct SwitchTable {
  std::uint32_t default_target = 0;
  std::vector<std::pair<std::int32_t, std::uint32_t>> cases;  // (match, target)
  friend bool operator==(const SwitchTable&, const SwitchTable&) = default;
};

struct Instruction {
  std::uint32_t offset = 0;
  std::uint8_t opcode = op::nop;
  std::uint32_t length = 1;
  bool wide = false;
  InstructionCategory category = InstructionCategory::Other;

  // Decoded operands; which ones are set depends on the operand format.
  std::optional<std::uint16_t> local_index;
  std::optional<std::uint16_t> pool_index;
  std::int32_t immediate = 0;  // bipush/sipush value, iinc delta, newarray code, dimensions
  std::optional<std::uint32_t> branch_target;
  std::optional<SwitchTable> switch_table;

  // Field: declared type. Invoke: return type. InstanceOf/CheckCast: tested
  // type. LocalVar: value kind. Array: array type. new/anewarray/
  // multianewarray: created type.
  std::optional<TypeDescriptor> referenced_type;
  // Declaring class of a field or method reference; absent for invokedynamic.
  std::optional<TypeDescriptor> referenced_owner;
  // Parameter types of an invoked method.
  std::vector<TypeDescriptor> argument_types;

  // Absolute jump targets: the branch target, or every switch case followed
  // by the default.
  std::vector<std::uint32_t> targets() const;

  friend bool operator==(const Instruction&, const Instruction&) = default;
};

// Decodes a whole code array. Throws ClassFormatError(BadCode) on undefined
// opcodes, operands running past the end, or jump targets that do not land on
// an instruction boundary, and BadIndex/BadDescriptor for bad pool operands.
std::vector<Instruction> decode_instructions(std::span<const std::uint8_t> code,
                                             const ConstantPool& pool);

}  // namespace oometric::classfile
