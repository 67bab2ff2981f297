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
#include "gplus/search.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gplus/error.hpp"
#include "gplus/gates.hpp"

namespace gplus {

std::string_view to_string(Algorithm algo) noexcept {
    switch (algo) {
    case Algorithm::Grover:
        return "grover";
    case Algorithm::GroverPlus:
        return "grover-plus";
    case Algorithm::Dicke:
        return "dicke";
    case Algorithm::Modified:
        return "modified";
    }
    return "unknown";
}

double plan_theta(const Plan &plan) noexcept {
    return std::visit([](const auto &p) { return p.theta; }, plan);
}

double plan_zeta(const Plan &plan) noexcept {
    return std::visit([](const auto &p) { return p.zeta; }, plan);
}

std::uint64_t plan_t_star(const Plan &plan) noexcept {
    return std::visit([](const auto &p) { return p.t_star; }, plan);
}

namespace {

/// Runs `queries` rounds of oracle + reflection, recording the marked
/// probability after each round.
std::vector<double> amplify(StateVector &state, const StateVector &axis, const TargetSpec &targets,
                            std::uint64_t queries, const StepObserver &observer) {
    std::vector<double> success;
    success.reserve(queries + 1);
    success.push_back(probability_of(state, targets));
    if (observer) {
        observer(0, state);
    }
    for (std::uint64_t t = 1; t <= queries; ++t) {
        apply_phase_oracle(state, targets);
        apply_reflection_about(state, axis);
        success.push_back(probability_of(state, targets));
        if (observer) {
            observer(t, state);
        }
    }
    return success;
}

/// Start state for the biased searches: either H_zeta^n|0> directly, or the
/// uniform superposition followed by the base shift.
StateVector biased_start(unsigned n, PolarAngle zeta, const RunOptions &options) {
    if (options.direct_preparation) {
        return prepare_biased_superposition(n, zeta, options.cap);
    }
    auto state = prepare_biased_superposition(n, PolarAngle::unbiased(), options.cap);
    apply_base_shift(state, PolarAngle::unbiased(), zeta);
    return state;
}

Trajectory single_target_run(Algorithm algo, OscillationPlan plan, BasisIndex target,
                             StateVector state, const StateVector &axis,
                             const RunOptions &options) {
    const TargetSpec marked = SingleIndex{target.value()};
    Trajectory traj;
    traj.algorithm = algo;
    traj.success_by_iteration =
        amplify(state, axis, marked, plan.t_star + options.extra_iterations, options.observer);
    traj.queries = traj.success_by_iteration.size() - 1;
    traj.final_state_overlap = std::norm(state[target.value()]);
    traj.plan = plan;
    return traj;
}

} // namespace

Trajectory run_grover(BasisIndex target, const RunOptions &options) {
    const unsigned n = target.bits();
    check_qubit_cap(n, options.cap);
    const auto plan = grover_plan(n, hamming_weight(target), options.iterations);
    const auto axis = prepare_biased_superposition(n, PolarAngle::unbiased(), options.cap);
    return single_target_run(Algorithm::Grover, plan, target, axis, axis, options);
}

Trajectory run_grover_plus(BasisIndex target, const RunOptions &options) {
    const unsigned n = target.bits();
    check_qubit_cap(n, options.cap);
    const auto plan = grover_plus_plan(n, hamming_weight(target), options.iterations);
    const PolarAngle zeta{plan.zeta};
    const auto axis = prepare_biased_superposition(n, zeta, options.cap);
    return single_target_run(Algorithm::GroverPlus, plan, target, biased_start(n, zeta, options),
                             axis, options);
}

Trajectory run_dicke(unsigned n, unsigned delta, const RunOptions &options) {
    check_qubit_cap(n, options.cap);
    const auto plan = dicke_plan(n, delta, options.iterations);
    const PolarAngle zeta{plan.zeta};
    const auto axis = prepare_biased_superposition(n, zeta, options.cap);
    auto state = biased_start(n, zeta, options);

    const TargetSpec marked = WeightClass{delta};
    Trajectory traj;
    traj.algorithm = Algorithm::Dicke;
    traj.success_by_iteration =
        amplify(state, axis, marked, plan.t_star + options.extra_iterations, options.observer);
    traj.queries = traj.success_by_iteration.size() - 1;

    // Overlap with |D^n_delta>, the uniform superposition over the class.
    Complex sum = 0.0;
    const auto amps = state.amplitudes();
    for (std::size_t k = 0; k < amps.size(); ++k) {
        if (is_marked(marked, k)) {
            sum += amps[k];
        }
    }
    traj.final_state_overlap = std::norm(sum) / static_cast<double>(binomial(n, delta));
    traj.plan = plan;
    return traj;
}

Trajectory run_modified_grover(unsigned n, unsigned delta, std::uint64_t registry_target,
                               const RunOptions &options) {
    const auto plan = modified_grover_plan(n, delta, options.iterations);
    const std::uint64_t members = binomial(n, delta);
    if (registry_target >= members) {
        throw DomainError("registry target " + std::to_string(registry_target) +
                          " is not one of the " + std::to_string(members) +
                          " weight-class slots");
    }
    check_qubit_cap(plan.n, options.cap);
    const auto axis = prepare_biased_superposition(plan.n, PolarAngle::unbiased(), options.cap);
    return single_target_run(Algorithm::Modified, plan, BasisIndex{registry_target, plan.n}, axis,
                             axis, options);
}

double verify_against_analytic(const Trajectory &trajectory) {
    const double theta = plan_theta(trajectory.plan);
    double worst = 0.0;
    for (std::size_t t = 0; t < trajectory.success_by_iteration.size(); ++t) {
        worst = std::max(worst, std::abs(trajectory.success_by_iteration[t] -
                                         predicted_success(theta, t)));
    }
    return worst;
}

} // namespace gplus
