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
#include <vector>

#include "oometric/forge.hpp"

namespace oometric::testing {

// A single-method Java source under fixtures/agreement paired with the class
// file a compiler lowers it to, assembled instruction by instruction.
struct AgreementFixture {
  std::string stem;  // file name without extension, e.g. "agree/Max"
  std::string method;
  int expected_cc = 0;
  forge::ForgeClass spec;
};

std::vector<AgreementFixture> agreement_fixtures();

}  // namespace oometric::testing
