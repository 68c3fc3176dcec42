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

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "oometric/classfile.hpp"

namespace oometric::cyclomatic {

struct BasicBlock {
  std::uint32_t start_offset = 0;
  std::uint32_t end_offset = 0;  // exclusive
  std::size_t first_instruction = 0;
  std::size_t last_instruction = 0;  // inclusive
};

// Directed multigraph over basic blocks. A switch contributes one edge per
// case entry plus one for the default, even when targets coincide.
struct ControlFlowGraph {
  std::vector<BasicBlock> blocks;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t entry = 0;

  std::size_t out_degree(std::size_t block) const;
  std::vector<bool> reachable() const;
  // Index of the block holding the instruction at `offset`.
  std::size_t block_at(std::uint32_t offset) const;
};

// Leaders are offset 0, every jump target and every instruction after a
// conditional branch, switch or unconditional transfer. Exception handler
// edges are not modelled. `jsr` jumps to its subroutine and `ret` returns to
// every instruction that follows a `jsr`.
ControlFlowGraph build_cfg(std::span<const classfile::Instruction> instructions);

// Throws std::invalid_argument for methods without code.
ControlFlowGraph build_cfg(const classfile::MethodInfo& method);

// E - N + 2 over the blocks reachable from the entry, with every exit block
// (no successors) joined to a single virtual exit node.
int cc_from_cfg(const ControlFlowGraph& graph);

// 1 + sum of (cc - 1) over every method with code: the bytecode analogue of
// counting decisions over a whole compilation unit.
int class_cfg_cc(const classfile::RawClassFile& cls);

}  // namespace oometric::cyclomatic
