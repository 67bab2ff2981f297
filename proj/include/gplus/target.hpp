// Copyright 2026 The gplus Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Sets of marked basis states.
 */
#pragma once

#include <cstdint>
#include <variant>
#include <vector>

namespace gplus {

/// One marked basis state.
struct SingleIndex {
    std::uint64_t index;
};

/// Every basis state whose Hamming weight equals `weight`. The member set is
/// enumerated by popcount when needed and never stored.
struct WeightClass {
    unsigned weight;
};

/// An explicit list of marked indices (duplicates are ignored).
struct IndexSet {
    std::vector<std::uint64_t> indices;
};

using TargetSpec = std::variant<SingleIndex, WeightClass, IndexSet>;

/**
 * Check that `targets` is a valid, non-empty selection of an n-qubit basis.
 * @throws DomainError otherwise.
 */
void validate_targets(const TargetSpec &targets, unsigned n);

/// Membership test; assumes validate_targets passed.
[[nodiscard]] bool is_marked(const TargetSpec &targets, std::uint64_t index);

/// Number of distinct marked indices for an n-qubit register.
[[nodiscard]] std::uint64_t target_count(const TargetSpec &targets, unsigned n);

} // namespace gplus
