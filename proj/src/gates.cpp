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
#include "gplus/gates.hpp"

#include <cmath>
#include <string>

#include "gplus/error.hpp"

namespace gplus {

PolarAngle::PolarAngle(double radians) : radians_{radians} {
    if (!std::isfinite(radians) || radians < 0.0 || radians > std::numbers::pi) {
        throw DomainError("polar angle must lie in [0, pi], got " + std::to_string(radians));
    }
}

namespace {
struct HalfAngle {
    double c;
    double s;
};

HalfAngle half_angle(PolarAngle zeta) {
    // cos(pi/2) does not round to zero; the sigma_x end point is kept exact.
    if (zeta.radians() == std::numbers::pi) {
        return {0.0, 1.0};
    }
    return {std::cos(zeta.radians() / 2), std::sin(zeta.radians() / 2)};
}
} // namespace

Matrix2 generalized_hadamard(PolarAngle zeta) {
    const auto [c, s] = half_angle(zeta);
    return {{c, s, s, -c}};
}

double hadamard_amplitude(unsigned n, PolarAngle zeta, BasisIndex j, BasisIndex k) {
    if (j.bits() != n || k.bits() != n) {
        throw UsageError("hadamard_amplitude: indices must have " + std::to_string(n) + " bits");
    }
    const unsigned flips = hamming_distance(j, k);
    const double sign = (intersection(j, k) % 2 == 0) ? 1.0 : -1.0;
    const auto [c, s] = half_angle(zeta);
    return sign * std::pow(c, static_cast<double>(n - flips)) *
           std::pow(s, static_cast<double>(flips));
}

void apply_phase_oracle(StateVector &state, const TargetSpec &targets) {
    validate_targets(targets, state.num_qubits());
    auto amps = state.amplitudes();
    if (const auto *single = std::get_if<SingleIndex>(&targets)) {
        amps[single->index] = -amps[single->index];
        return;
    }
    for (std::size_t k = 0; k < amps.size(); ++k) {
        if (is_marked(targets, k)) {
            amps[k] = -amps[k];
        }
    }
}

void apply_reflection_about(StateVector &state, const StateVector &axis) {
    if (state.num_qubits() != axis.num_qubits()) {
        throw UsageError("reflection axis has a different qubit count");
    }
    if (std::abs(axis.norm_squared() - 1.0) > 1e-10) {
        throw DomainError("reflection axis is not normalized");
    }
    const Complex projection = 2.0 * overlap(axis, state);
    const auto a = axis.amplitudes();
    auto s = state.amplitudes();
    for (std::size_t k = 0; k < s.size(); ++k) {
        s[k] = projection * a[k] - s[k];
    }
}

void apply_base_shift(StateVector &state, PolarAngle from, PolarAngle to) {
    if (from == to) {
        return;
    }
    state.apply_single_qubit_all(generalized_hadamard(from));
    state.apply_single_qubit_all(generalized_hadamard(to));
}

StateVector prepare_biased_superposition(unsigned n, PolarAngle zeta, unsigned cap) {
    auto state = StateVector::init_basis(n, 0, cap);
    state.apply_single_qubit_all(generalized_hadamard(zeta));
    return state;
}

} // namespace gplus
