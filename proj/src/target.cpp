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
#include "gplus/target.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "gplus/bitstring.hpp"
#include "gplus/error.hpp"

namespace gplus {

namespace {
template <class... Ts> struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts> Overloaded(Ts...) -> Overloaded<Ts...>;
} // namespace

void validate_targets(const TargetSpec &targets, unsigned n) {
    const std::uint64_t dim = dimension(n);
    std::visit(Overloaded{
                   [&](const SingleIndex &t) {
                       if (t.index >= dim) {
                           throw DomainError("target index " + std::to_string(t.index) +
                                             " out of range for " + std::to_string(n) +
                                             " qubits");
                       }
                   },
                   [&](const WeightClass &t) {
                       if (t.weight > n) {
                           throw DomainError("target weight " + std::to_string(t.weight) +
                                             " exceeds qubit count " + std::to_string(n));
                       }
                   },
                   [&](const IndexSet &t) {
                       if (t.indices.empty()) {
                           throw DomainError("empty target set");
                       }
                       for (auto k : t.indices) {
                           if (k >= dim) {
                               throw DomainError("target index " + std::to_string(k) +
                                                 " out of range for " + std::to_string(n) +
                                                 " qubits");
                           }
                       }
                   },
               },
               targets);
}

bool is_marked(const TargetSpec &targets, std::uint64_t index) {
    return std::visit(Overloaded{
                          [&](const SingleIndex &t) { return index == t.index; },
                          [&](const WeightClass &t) {
                              return static_cast<unsigned>(std::popcount(index)) == t.weight;
                          },
                          [&](const IndexSet &t) {
                              return std::find(t.indices.begin(), t.indices.end(), index) !=
                                     t.indices.end();
                          },
                      },
                      targets);
}

std::uint64_t target_count(const TargetSpec &targets, unsigned n) {
    return std::visit(Overloaded{
                          [](const SingleIndex &) -> std::uint64_t { return 1; },
                          [&](const WeightClass &t) { return binomial(n, t.weight); },
                          [](const IndexSet &t) {
                              auto sorted = t.indices;
                              std::sort(sorted.begin(), sorted.end());
                              return static_cast<std::uint64_t>(
                                  std::unique(sorted.begin(), sorted.end()) - sorted.begin());
                          },
                      },
                      targets);
}

} // namespace gplus
