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

#include <string>

#include "oometric/classfile.hpp"
#include "oometric/forge.hpp"

namespace oometric::testing {

// Structural comparison of a forge spec with the parsed class. Returns an
// empty string on equality, otherwise a description of the first mismatch.
std::string compare_structure(const forge::ForgeClass& spec, const classfile::RawClassFile& cls);

}  // namespace oometric::testing
