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
 * Exact integer combinatorics on computational-basis indices.
 *
 * A basis index j of an n-qubit register is read as the binary string
 * j_n ... j_2 j_1 with j = sum_a j_a 2^(a-1), i.e. bit (a-1) of the integer
 * is j_a.
 */
#pragma once

#include <cstdint>

namespace gplus {

/// Largest string length representable by a machine-word index.
inline constexpr unsigned kMaxIndexBits = 64;

/// A basis-state index together with the length of its binary string.
class BasisIndex {
  public:
    /// @throws DomainError if n is 0 or above 64, or value >= 2^n.
    BasisIndex(std::uint64_t value, unsigned n);

    [[nodiscard]] std::uint64_t value() const noexcept { return value_; }
    [[nodiscard]] unsigned bits() const noexcept { return n_; }

    /// Bit j_a for a in [1, n].
    [[nodiscard]] bool bit(unsigned alpha) const;

    friend bool operator==(const BasisIndex &, const BasisIndex &) = default;

  private:
    std::uint64_t value_;
    unsigned n_;
};

/// 2^n as an unsigned integer; n must be below 64.
[[nodiscard]] std::uint64_t dimension(unsigned n);

[[nodiscard]] unsigned hamming_weight(BasisIndex j) noexcept;

/// Number of positions where j and k differ.
/// @throws UsageError on mismatched string lengths.
[[nodiscard]] unsigned hamming_distance(BasisIndex j, BasisIndex k);

/// Number of positions where both j and k carry a 1.
/// @throws UsageError on mismatched string lengths.
[[nodiscard]] unsigned intersection(BasisIndex j, BasisIndex k);

/**
 * Exact binomial coefficient C(n, r) for n <= 64.
 *
 * Every C(n, r) with n <= 64 fits in 64 bits; the running product is carried
 * in 128-bit arithmetic and checked so that an overflow can never be
 * returned silently.
 *
 * @throws DomainError if r > n or n > 64.
 */
[[nodiscard]] std::uint64_t binomial(unsigned n, unsigned r);

} // namespace gplus
