// Copyright 2026 The nmrdj Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdlib>
#include <stdexcept>

namespace nmrdj {

/// Which spin pairs admit a native two-spin gate. The couplings used by
/// this compiler form a path graph in chain order: spin k neighbors k+1.
struct CouplingTopology {
  int n = 0;

  explicit CouplingTopology(int spin_count) : n(spin_count) {
    if (n < 1) throw std::invalid_argument("topology needs >= 1 spin");
  }

  bool adjacent(int k, int l) const {
    return k >= 1 && l >= 1 && k <= n && l <= n && std::abs(k - l) == 1;
  }
};

}  // namespace nmrdj
