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

#include "agreement.hpp"

#include <utility>

#include "oometric/descriptor.hpp"

namespace oometric::testing {

namespace {

using namespace forge;
namespace op = classfile::op;

ForgeMethod constructor() {
  ForgeMethod m;
  m.name = "<init>";
  m.descriptor = classfile::parse_method_descriptor("()V");
  m.code = ForgeCode{1, 1, {}, {}};
  m.code->instructions = {
      insn(op::aload_0),
      invoke(op::invokespecial, class_type("java.lang.Object"), "<init>",
             classfile::parse_method_descriptor("()V")),
      insn(op::return_),
  };
  return m;
}

AgreementFixture fixture(std::string simple, std::string method, std::string_view descriptor,
                         int expected_cc, std::uint16_t max_stack, std::uint16_t max_locals,
                         std::vector<ForgeInstruction> code) {
  AgreementFixture f;
  f.stem = "agree/" + simple;
  f.method = method;
  f.expected_cc = expected_cc;
  f.spec.name = "agree." + simple;
  ForgeMethod m;
  m.name = std::move(method);
  m.descriptor = classfile::parse_method_descriptor(descriptor);
  m.access_flags = 0x0008;
  m.code = ForgeCode{max_stack, max_locals, std::move(code), {}};
  f.spec.methods = {constructor(), std::move(m)};
  return f;
}

}  // namespace

std::vector<AgreementFixture> agreement_fixtures() {
  std::vector<AgreementFixture> out;

  out.push_back(fixture("Max", "max", "(II)I", 2, 2, 2,
                        {
                            insn(op::iload_0),
                            insn(op::iload_1),
                            jump(op::if_icmple, 5),
                            insn(op::iload_0),
                            insn(op::ireturn),
                            insn(op::iload_1),
                            insn(op::ireturn),
                        }));

  out.push_back(fixture("Clamp", "clamp", "(III)I", 4, 2, 3,
                        {
                            insn(op::iload_0),
                            insn(op::iload_1),
                            jump(op::if_icmpge, 8),
                            insn(op::iload_1),
                            insn(op::iload_2),
                            jump(op::if_icmpge, 8),
                            insn(op::iload_1),
                            insn(op::ireturn),
                            insn(op::iload_0),
                            insn(op::iload_2),
                            jump(op::if_icmple, 13),
                            insn(op::iload_2),
                            insn(op::ireturn),
                            insn(op::iload_0),
                            insn(op::ireturn),
                        }));

  out.push_back(fixture("Sum", "sum", "([I)I", 2, 3, 3,
                        {
                            insn(op::iconst_0),
                            insn(op::istore_1),
                            insn(op::iconst_0),
                            insn(op::istore_2),
                            insn(op::iload_2),
                            insn(op::aload_0),
                            insn(op::arraylength),
                            jump(op::if_icmpge, 16),
                            insn(op::iload_1),
                            insn(op::aload_0),
                            insn(op::iload_2),
                            insn(op::iaload),
                            insn(op::iadd),
                            insn(op::istore_1),
                            iinc(2, 1),
                            jump(op::goto_, 4),
                            insn(op::iload_1),
                            insn(op::ireturn),
                        }));

  out.push_back(fixture("Grade", "grade", "(I)I", 4, 1, 1,
                        {
                            insn(op::iload_0),
                            tableswitch(1, {2, 4, 6}, 8),
                            push(op::bipush, 10),
                            insn(op::ireturn),
                            push(op::bipush, 20),
                            insn(op::ireturn),
                            push(op::bipush, 30),
                            insn(op::ireturn),
                            insn(op::iconst_0),
                            insn(op::ireturn),
                        }));

  out.push_back(fixture("Sign", "sign", "(I)I", 3, 1, 1,
                        {
                            insn(op::iload_0),
                            jump(op::ifle, 4),
                            insn(op::iconst_1),
                            jump(op::goto_, 9),
                            insn(op::iload_0),
                            jump(op::ifge, 8),
                            insn(op::iconst_m1),
                            jump(op::goto_, 9),
                            insn(op::iconst_0),
                            insn(op::ireturn),
                        }));

  out.push_back(fixture("Halve", "halve", "(II)I", 3, 2, 3,
                        {
                            insn(op::iconst_0),
                            insn(op::istore_2),
                            insn(op::iload_0),
                            insn(op::iconst_1),
                            jump(op::if_icmpgt, 8),
                            insn(op::iload_2),
                            insn(op::iload_1),
                            jump(op::if_icmpge, 14),
                            insn(op::iload_0),
                            insn(op::iconst_2),
                            insn(op::idiv),
                            insn(op::istore_0),
                            iinc(2, 1),
                            jump(op::goto_, 2),
                            insn(op::iload_2),
                            insn(op::ireturn),
                        }));

  out.push_back(fixture("Digits", "digits", "(I)I", 2, 2, 2,
                        {
                            insn(op::iconst_0),
                            insn(op::istore_1),
                            insn(op::iload_0),
                            push(op::bipush, 10),
                            insn(op::idiv),
                            insn(op::istore_0),
                            iinc(1, 1),
                            insn(op::iload_0),
                            jump(op::ifne, 2),
                            insn(op::iload_1),
                            insn(op::ireturn),
                        }));

  out.push_back(fixture("Weight", "weight", "(IZ)I", 4, 1, 2,
                        {
                            insn(op::iload_0),
                            lookupswitch({{10, 2}, {200, 8}}, 10),
                            insn(op::iload_1),
                            jump(op::ifeq, 6),
                            insn(op::iconst_5),
                            jump(op::goto_, 7),
                            insn(op::iconst_1),
                            insn(op::ireturn),
                            insn(op::iconst_2),
                            insn(op::ireturn),
                            insn(op::iconst_0),
                            insn(op::ireturn),
                        }));

  return out;
}

}  // namespace oometric::testing
