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

#include <doctest.h>

#include <algorithm>

#include "oometric/cfg.hpp"
#include "oometric/classfile.hpp"
#include "oometric/forge.hpp"

using namespace oometric;
using namespace oometric::cyclomatic;
namespace op = classfile::op;
using forge::insn;
using forge::jump;

namespace {

classfile::MethodInfo method_of(std::vector<forge::ForgeInstruction> code) {
  forge::ForgeClass spec;
  spec.name = "p.G";
  forge::ForgeMethod m;
  m.name = "m";
  m.code = forge::ForgeCode{};
  m.code->instructions = std::move(code);
  spec.methods = {m};
  return classfile::parse_class(forge::build(spec)).methods.at(0);
}

int cc_of(std::vector<forge::ForgeInstruction> code) {
  return cc_from_cfg(build_cfg(method_of(std::move(code))));
}

}  // namespace

TEST_CASE("straight line") {
  const auto g = build_cfg(method_of({insn(op::iconst_1), insn(op::pop), insn(op::return_)}));
  CHECK(g.blocks.size() == 1);
  CHECK(g.edges.empty());
  CHECK(cc_from_cfg(g) == 1);
}

TEST_CASE("one conditional") {
  // if (x) y(); return;
  const auto g = build_cfg(method_of({insn(op::iload_1), jump(op::ifeq, 3), insn(op::nop),
                                      insn(op::return_)}));
  CHECK(g.blocks.size() == 3);
  CHECK(g.edges.size() == 3);
  CHECK(cc_from_cfg(g) == 2);
  // if/else with two returns
  CHECK(cc_of({insn(op::iload_1), jump(op::ifeq, 4), insn(op::iconst_1), insn(op::ireturn),
               insn(op::iconst_0), insn(op::ireturn)}) == 2);
}

TEST_CASE("diamond") {
  const auto g = build_cfg(method_of({insn(op::iload_1), jump(op::ifeq, 4), insn(op::iconst_1),
                                      jump(op::goto_, 5), insn(op::iconst_0), insn(op::ireturn)}));
  CHECK(g.blocks.size() == 4);
  CHECK(g.edges.size() == 4);
  CHECK(cc_from_cfg(g) == 2);
}

TEST_CASE("switch edges") {
  const auto g = build_cfg(method_of({insn(op::iload_1), forge::tableswitch(0, {2, 3, 3}, 4),
                                      insn(op::nop), insn(op::nop), insn(op::return_)}));
  const auto sw = g.block_at(0);
  CHECK(g.out_degree(sw) == 4);
  CHECK(cc_from_cfg(g) == 4);
  CHECK(cc_of({insn(op::iload_1), forge::lookupswitch({}, 2), insn(op::return_)}) == 1);
}

TEST_CASE("loop") {
  // while (i < n) i++;
  CHECK(cc_of({insn(op::iload_1), insn(op::iload_2), jump(op::if_icmpge, 5), forge::iinc(1, 1),
               jump(op::goto_, 0), insn(op::return_)}) == 2);
}

TEST_CASE("short-circuit and") {
  // if (a && b) x();
  CHECK(cc_of({insn(op::iload_1), jump(op::ifeq, 4), insn(op::iload_2), jump(op::ifeq, 4),
               insn(op::return_)}) == 3);
}

TEST_CASE("unconditional cycle") {
  CHECK(cc_of({jump(op::goto_, 0)}) == 2);
}

TEST_CASE("unreachable code is ignored") {
  const auto g = build_cfg(method_of({insn(op::aconst_null), insn(op::athrow), insn(op::iload_1),
                                      jump(op::ifeq, 0), insn(op::return_)}));
  const auto reach = g.reachable();
  CHECK(std::count(reach.begin(), reach.end(), true) == 1);
  CHECK(cc_from_cfg(g) == 1);
}

TEST_CASE("subroutines") {
  // jsr to a subroutine that returns through ret.
  CHECK(cc_of({jump(op::jsr, 2), insn(op::return_), forge::local(op::astore, 3),
               forge::local(op::ret, 3)}) == 1);
}

TEST_CASE("without branches or jumps cc is one") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto cls = classfile::parse_class(forge::build(forge::random_class(seed).spec));
    for (const auto& m : cls.methods) {
      if (!m.code) continue;
      const auto g = build_cfg(m);
      const auto reach = g.reachable();
      bool branches = false;
      for (std::size_t b = 0; b < g.blocks.size(); ++b) {
        if (!reach[b]) continue;
        const auto& last = m.code->instructions[g.blocks[b].last_instruction];
        if (last.category == classfile::InstructionCategory::Branch ||
            last.category == classfile::InstructionCategory::Switch ||
            last.opcode == op::goto_ || last.opcode == op::goto_w) {
          branches = true;
        }
      }
      if (!branches) CHECK(cc_from_cfg(g) == 1);
    }
  }
}

TEST_CASE("blocks partition the instructions") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto cls = classfile::parse_class(forge::build(forge::random_class(seed).spec));
    for (const auto& m : cls.methods) {
      if (!m.code) continue;
      const auto g = build_cfg(m);
      std::size_t next = 0;
      for (const auto& b : g.blocks) {
        CHECK(b.first_instruction == next);
        CHECK(b.last_instruction >= b.first_instruction);
        next = b.last_instruction + 1;
      }
      CHECK(next == m.code->instructions.size());
      for (const auto& [from, to] : g.edges) {
        CHECK(from < g.blocks.size());
        CHECK(to < g.blocks.size());
      }
    }
  }
}

TEST_CASE("class level aggregate") {
  forge::ForgeClass spec;
  spec.name = "p.Two";
  forge::ForgeMethod a;
  a.name = "a";
  a.code = forge::ForgeCode{};
  a.code->instructions = {insn(op::iload_1), jump(op::ifeq, 3), insn(op::nop), insn(op::return_)};
  auto b = a;
  b.name = "b";
  forge::ForgeMethod abstract_method;
  abstract_method.name = "c";
  abstract_method.access_flags = 0x0401;
  spec.methods = {a, b, abstract_method};
  CHECK(class_cfg_cc(classfile::parse_class(forge::build(spec))) == 3);
  CHECK_THROWS_AS(build_cfg(classfile::parse_class(forge::build(spec)).methods[2]),
                  std::invalid_argument);
}

TEST_CASE("empty graph") {
  CHECK(cc_from_cfg(ControlFlowGraph{}) == 1);
}
