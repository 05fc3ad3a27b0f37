// Copyright 2026 The talex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace talex {

struct InexactDivision : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SingularDenominator : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateContext : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AmbiguousAbelianization : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace talex
