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
 * End-to-end amplitude-amplification runners on a dense state vector.
 *
 * Every runner prepares a start state, then alternates a phase oracle with a
 * reflection about the prepared state and records the target probability
 * before the first query and after each one.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <variant>
#include <vector>

#include "gplus/analytic.hpp"
#include "gplus/statevec.hpp"

namespace gplus {

enum class Algorithm { Grover, GroverPlus, Dicke, Modified };

[[nodiscard]] std::string_view to_string(Algorithm algo) noexcept;

/// Per-step callback: (queries so far, current state).
using StepObserver = std::function<void(std::uint64_t, const StateVector &)>;

struct RunOptions {
    IterationPolicy iterations = IterationPolicy::optimal();
    /// Queries to record past the planned count, to show the oscillation
    /// turning over.
    std::uint64_t extra_iterations = 0;
    /// Prepare H_zeta^{\otimes n}|0> directly instead of base-shifting the
    /// uniform superposition.
    bool direct_preparation = false;
    unsigned cap = kDefaultQubitCap;
    StepObserver observer;
};

using Plan = std::variant<OscillationPlan, DickePlan>;

struct Trajectory {
    Algorithm algorithm = Algorithm::Grover;
    Plan plan;
    /// Entry t is the success probability after t oracle queries.
    std::vector<double> success_by_iteration;
    std::uint64_t queries = 0;
    /// |<analytic target|final state>|^2: the basis target for single-target
    /// runs, the exact Dicke state for run_dicke.
    double final_state_overlap = 0.0;
};

/// Mixing angle the plan predicts with (the exact angle for Dicke plans).
[[nodiscard]] double plan_theta(const Plan &plan) noexcept;
[[nodiscard]] double plan_zeta(const Plan &plan) noexcept;
[[nodiscard]] std::uint64_t plan_t_star(const Plan &plan) noexcept;

/// Standard search from H^{\otimes n}|0> for the basis state `target`
/// (n = target.bits()).
/// @throws ResourceError if n exceeds options.cap.
[[nodiscard]] Trajectory run_grover(BasisIndex target, const RunOptions &options = {});

/// Search with the polar angle tuned to the target's Hamming weight: the
/// uniform superposition is base-shifted to H_zeta^{\otimes n}|0> first.
[[nodiscard]] Trajectory run_grover_plus(BasisIndex target, const RunOptions &options = {});

/// Dicke-state preparation: like run_grover_plus with every weight-`delta`
/// state marked.
/// @throws DomainError if delta > n.
[[nodiscard]] Trajectory run_dicke(unsigned n, unsigned delta, const RunOptions &options = {});

/**
 * Standard search on the n'-qubit working registry that holds the weight-delta
 * class of an n-bit problem. Registry slots at or beyond C(n, delta) are
 * padding and are never marked.
 * @throws DomainError unless 0 < delta < n and registry_target < C(n, delta).
 */
[[nodiscard]] Trajectory run_modified_grover(unsigned n, unsigned delta,
                                             std::uint64_t registry_target,
                                             const RunOptions &options = {});

/// max_t |success_by_iteration[t] - sin^2((2t + 1) theta)|.
[[nodiscard]] double verify_against_analytic(const Trajectory &trajectory);

} // namespace gplus
