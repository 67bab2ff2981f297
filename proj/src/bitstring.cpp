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
#include "gplus/bitstring.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "gplus/error.hpp"

namespace gplus {

namespace {
__extension__ using u128 = unsigned __int128;
} // namespace

BasisIndex::BasisIndex(std::uint64_t value, unsigned n) : value_{value}, n_{n} {
    if (n == 0 || n > kMaxIndexBits) {
        throw DomainError("basis index length must be in [1, 64], got " + std::to_string(n));
    }
    if (n < 64 && value >= (std::uint64_t{1} << n)) {
        throw DomainError("basis index " + std::to_string(value) + " out of range for " +
                          std::to_string(n) + " bits");
    }
}

bool BasisIndex::bit(unsigned alpha) const {
    if (alpha == 0 || alpha > n_) {
        throw DomainError("bit position must be in [1, n]");
    }
    return ((value_ >> (alpha - 1)) & 1U) != 0;
}

std::uint64_t dimension(unsigned n) {
    if (n >= 64) {
        throw DomainError("2^n does not fit in 64 bits for n = " + std::to_string(n));
    }
    return std::uint64_t{1} << n;
}

unsigned hamming_weight(BasisIndex j) noexcept {
    return static_cast<unsigned>(std::popcount(j.value()));
}

namespace {
void require_same_length(BasisIndex j, BasisIndex k) {
    if (j.bits() != k.bits()) {
        throw UsageError("basis indices have different lengths: " + std::to_string(j.bits()) +
                         " vs " + std::to_string(k.bits()));
    }
}
} // namespace

unsigned hamming_distance(BasisIndex j, BasisIndex k) {
    require_same_length(j, k);
    return static_cast<unsigned>(std::popcount(j.value() ^ k.value()));
}

unsigned intersection(BasisIndex j, BasisIndex k) {
    require_same_length(j, k);
    return static_cast<unsigned>(std::popcount(j.value() & k.value()));
}

std::uint64_t binomial(unsigned n, unsigned r) {
    if (n > kMaxIndexBits) {
        throw DomainError("binomial: n must be <= 64, got " + std::to_string(n));
    }
    if (r > n) {
        throw DomainError("binomial: r > n (" + std::to_string(r) + " > " + std::to_string(n) +
                          ")");
    }
    r = std::min(r, n - r);
    // C(n, i) = C(n, i-1) * (n-i+1) / i is exact at every step.
    u128 acc = 1;
    for (unsigned i = 1; i <= r; ++i) {
        acc = acc * (n - i + 1) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max()) {
            throw DomainError("binomial overflow");
        }
    }
    return static_cast<std::uint64_t>(acc);
}

} // namespace gplus
