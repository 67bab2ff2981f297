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
 * Biased Hadamard gates, phase oracles, reflections and the base shift.
 */
#pragma once

#include <numbers>

#include "gplus/bitstring.hpp"
#include "gplus/statevec.hpp"
#include "gplus/target.hpp"

namespace gplus {

/// Qubit polar rotation angle in [0, pi] radians. Out-of-range values are
/// rejected, never wrapped.
class PolarAngle {
  public:
    /// @throws DomainError if radians is outside [0, pi] or not finite.
    explicit PolarAngle(double radians);

    [[nodiscard]] double radians() const noexcept { return radians_; }

    /// zeta = pi/2, the unbiased Hadamard.
    static PolarAngle unbiased() { return PolarAngle{std::numbers::pi / 2}; }

    friend bool operator==(const PolarAngle &, const PolarAngle &) = default;

  private:
    double radians_;
};

/**
 * H_zeta = sigma_z cos(zeta/2) + sigma_x sin(zeta/2)
 *        = [[cos(zeta/2), sin(zeta/2)], [sin(zeta/2), -cos(zeta/2)]].
 *
 * Real, symmetric and involutory. zeta = pi/2 is the standard Hadamard,
 * zeta = 0 is sigma_z and zeta = pi is sigma_x.
 */
[[nodiscard]] Matrix2 generalized_hadamard(PolarAngle zeta);

/**
 * Closed-form amplitude <k| H_zeta^{\otimes n} |j>:
 *
 *     (-1)^{I(j,k)} cos(zeta/2)^{n - D(j,k)} sin(zeta/2)^{D(j,k)}
 *
 * with I the intersection and D the Hamming distance of j and k.
 *
 * @throws UsageError if j, k do not both have n bits.
 */
[[nodiscard]] double hadamard_amplitude(unsigned n, PolarAngle zeta, BasisIndex j, BasisIndex k);

/// Negate every marked amplitude.
/// @throws DomainError for an invalid target set.
void apply_phase_oracle(StateVector &state, const TargetSpec &targets);

/**
 * state <- 2|axis><axis|state> - state.
 * @throws DomainError if axis is not normalized within 1e-10.
 * @throws UsageError on mismatched qubit counts.
 */
void apply_reflection_about(StateVector &state, const StateVector &axis);

/**
 * Base shift H_to^{\otimes n} H_from^{\otimes n}: maps H_from^{\otimes n}|0>
 * onto H_to^{\otimes n}|0>. Since H_zeta^2 = I, a shift with from == to is
 * the identity and leaves the state untouched.
 */
void apply_base_shift(StateVector &state, PolarAngle from, PolarAngle to);

/// H_zeta^{\otimes n}|0>.
[[nodiscard]] StateVector prepare_biased_superposition(unsigned n, PolarAngle zeta,
                                                       unsigned cap = kDefaultQubitCap);

} // namespace gplus
