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

#include "oometric/cfg.hpp"

#include <algorithm>
#include <stdexcept>

namespace oometric::cyclomatic {

using classfile::Instruction;
using classfile::InstructionCategory;
namespace op = classfile::op;

std::size_t ControlFlowGraph::out_degree(std::size_t block) const {
  return static_cast<std::size_t>(std::count_if(
      edges.begin(), edges.end(), [block](const auto& e) { return e.first == block; }));
}

std::vector<bool> ControlFlowGraph::reachable() const {
  std::vector<bool> seen(blocks.size(), false);
  if (blocks.empty()) return seen;
  std::vector<std::vector<std::size_t>> succ(blocks.size());
  for (const auto& [from, to] : edges) succ[from].push_back(to);
  std::vector<std::size_t> work{entry};
  seen[entry] = true;
  while (!work.empty()) {
    const auto b = work.back();
    work.pop_back();
    for (const auto s : succ[b]) {
      if (!seen[s]) {
        seen[s] = true;
        work.push_back(s);
      }
    }
  }
  return seen;
}

std::size_t ControlFlowGraph::block_at(std::uint32_t offset) const {
  const auto it = std::upper_bound(blocks.begin(), blocks.end(), offset,
                                   [](std::uint32_t o, const BasicBlock& b) { return o < b.start_offset; });
  if (it == blocks.begin() || offset >= std::prev(it)->end_offset) {
    throw std::out_of_range("no block at offset " + std::to_string(offset));
  }
  return static_cast<std::size_t>(std::distance(blocks.begin(), it) - 1);
}

ControlFlowGraph build_cfg(std::span<const Instruction> instructions) {
  ControlFlowGraph g;
  if (instructions.empty()) return g;

  auto is_jsr = [](const Instruction& i) { return i.opcode == op::jsr || i.opcode == op::jsr_w; };

  std::vector<bool> leader(instructions.size(), false);
  leader[0] = true;
  std::vector<std::uint32_t> offsets;
  offsets.reserve(instructions.size());
  for (const auto& insn : instructions) offsets.push_back(insn.offset);
  auto index_of = [&](std::uint32_t offset) {
    const auto it = std::lower_bound(offsets.begin(), offsets.end(), offset);
    return static_cast<std::size_t>(std::distance(offsets.begin(), it));
  };

  std::vector<std::uint32_t> return_sites;
  for (std::size_t i = 0; i < instructions.size(); ++i) {
    const auto& insn = instructions[i];
    for (const auto target : insn.targets()) leader[index_of(target)] = true;
    const bool ends_block = insn.category == InstructionCategory::Branch ||
                            insn.category == InstructionCategory::Switch ||
                            classfile::is_unconditional_transfer(insn.opcode);
    if (ends_block && i + 1 < instructions.size()) leader[i + 1] = true;
    if (is_jsr(insn) && i + 1 < instructions.size()) return_sites.push_back(instructions[i + 1].offset);
  }

  for (std::size_t i = 0; i < instructions.size(); ++i) {
    if (leader[i]) {
      BasicBlock block;
      block.start_offset = instructions[i].offset;
      block.first_instruction = i;
      g.blocks.push_back(block);
    }
    auto& current = g.blocks.back();
    current.last_instruction = i;
    current.end_offset = instructions[i].offset + instructions[i].length;
  }

  for (std::size_t b = 0; b < g.blocks.size(); ++b) {
    const auto& block = g.blocks[b];
    const auto& last = instructions[block.last_instruction];
    for (const auto target : last.targets()) g.edges.emplace_back(b, g.block_at(target));
    if (last.opcode == op::ret) {
      for (const auto site : return_sites) g.edges.emplace_back(b, g.block_at(site));
    }
    const bool falls_through = !classfile::is_unconditional_transfer(last.opcode) &&
                               last.category != InstructionCategory::Switch;
    if (falls_through && b + 1 < g.blocks.size()) g.edges.emplace_back(b, b + 1);
  }
  return g;
}

ControlFlowGraph build_cfg(const classfile::MethodInfo& method) {
  if (!method.code) throw std::invalid_argument("method " + method.name + " has no code");
  return build_cfg(method.code->instructions);
}

int cc_from_cfg(const ControlFlowGraph& graph) {
  if (graph.blocks.empty()) return 1;
  const auto live = graph.reachable();
  std::ptrdiff_t nodes = std::count(live.begin(), live.end(), true);
  std::ptrdiff_t edges = std::count_if(graph.edges.begin(), graph.edges.end(),
                                       [&](const auto& e) { return live[e.first]; });
  // Exit blocks are joined to one virtual exit node.
  std::vector<std::size_t> out(graph.blocks.size(), 0);
  for (const auto& e : graph.edges) ++out[e.first];
  std::ptrdiff_t exits = 0;
  for (std::size_t b = 0; b < graph.blocks.size(); ++b) {
    if (live[b] && out[b] == 0) ++exits;
  }
  if (exits > 0) {
    edges += exits;
    nodes += 1;
  }
  return static_cast<int>(edges - nodes + 2);
}

int class_cfg_cc(const classfile::RawClassFile& cls) {
  int cc = 1;
  for (const auto& method : cls.methods) {
    if (method.code) cc += cc_from_cfg(build_cfg(method)) - 1;
  }
  return cc;
}

}  // namespace oometric::cyclomatic
