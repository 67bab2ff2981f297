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
 * Closed-form two-level oscillation model of amplitude amplification.
 *
 * A prepared state |psi> = cos(theta)|rest> + sin(theta)|target> is rotated
 * by 2*theta per oracle query, so after t queries the target is found with
 * probability sin^2((2t + 1) theta). Everything below computes theta for the
 * different search setups and derives iteration counts from it.
 *
 * All functions are pure.
 */
#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "gplus/gates.hpp"

namespace gplus {

/// How many oracle queries a run performs.
struct IterationPolicy {
    enum class Kind {
        Optimal,    ///< iteration_count(theta)
        Truncated, ///< floor((pi/theta - 2) / 4), clamped at 0
        Fixed,      ///< exactly `fixed`
    };
    Kind kind = Kind::Optimal;
    std::uint64_t fixed = 0;

    static IterationPolicy optimal() { return {}; }
    static IterationPolicy truncated() { return {Kind::Truncated, 0}; }
    static IterationPolicy exactly(std::uint64_t t) { return {Kind::Fixed, t}; }

    [[nodiscard]] std::uint64_t resolve(double theta) const;
};

/// Analytic prescription for one single-target search instance.
///
/// For plans built by grover_plus_plan, sin^2(zeta/2) = delta/n and
/// sin^2(theta) = (delta/n)^delta (1 - delta/n)^(n - delta).
struct OscillationPlan {
    unsigned n = 0;
    unsigned delta = 0; ///< Hamming weight of the target
    double zeta = 0.0;  ///< polar angle of the prepared state, radians
    double theta = 0.0; ///< mixing angle, radians in (0, pi/2]
    std::uint64_t t_star = 0;
    double predicted_success = 0.0; ///< sin^2((2 t_star + 1) theta)
};

/// Prescription for preparing the Dicke state |D^n_delta> with a weight-class
/// oracle.
struct DickePlan {
    unsigned n = 0;
    unsigned delta = 0;
    double zeta = 0.0;
    /// Exact collective mixing angle, sin^2 = C(n, delta) sin^2(theta_delta).
    double theta = 0.0;
    /// Stirling estimate [2 pi delta (1 - delta/n)]^{-1/2} of sin^2(theta);
    /// absent for delta in {0, n}.
    std::optional<double> stirling_sin2;
    std::optional<double> theta_stirling;
    std::uint64_t t_star = 0;
    double predicted_success = 0.0;
};

/// Row-major real 2x2 matrix acting on (|rest>, |target>) coordinates.
using RealMatrix2 = std::array<double, 4>;

/// arcsin(2^{-n/2}): mixing of the uniform superposition with one basis state.
[[nodiscard]] double grover_mixing(unsigned n);

/**
 * Polar angle with sin^2(zeta/2) = delta/n, the maximiser of the weight
 * cos(zeta/2)^{2(n-delta)} sin(zeta/2)^{2 delta} of any weight-delta state
 * in H_zeta^{\otimes n}|0>.
 * @throws DomainError if delta > n.
 */
[[nodiscard]] PolarAngle optimal_zeta(unsigned n, unsigned delta);

/// sin^2 of the optimal mixing angle, with 0^0 = 1 at delta in {0, n}.
/// @throws DomainError if delta > n.
[[nodiscard]] double optimal_mixing_sin2(unsigned n, unsigned delta);

/// arcsin(sqrt(optimal_mixing_sin2(n, delta))).
[[nodiscard]] double optimal_mixing(unsigned n, unsigned delta);

/// Squared single-state weight cos(zeta/2)^{2(n-delta)} sin(zeta/2)^{2 delta}
/// at an arbitrary polar angle.
[[nodiscard]] double class_member_weight(unsigned n, unsigned delta, double zeta);

/**
 * Query count maximising sin^2((2t+1) theta): the better of floor(x) and
 * ceil(x) for x = (pi/theta - 2)/4, clamped at zero, ties to the smaller t.
 * @throws DomainError unless 0 < theta <= pi/2.
 */
[[nodiscard]] std::uint64_t iteration_count(double theta);

/// floor((pi/theta - 2)/4) clamped at zero.
/// @throws DomainError unless 0 < theta <= pi/2.
[[nodiscard]] std::uint64_t truncated_iteration_count(double theta);

/// sin^2((2t + 1) theta).
[[nodiscard]] double predicted_success(double theta, std::uint64_t t);

/**
 * t-step propagator of the two-level model: rotation by 2 t theta,
 * [[cos 2t theta, -sin 2t theta], [sin 2t theta, cos 2t theta]].
 * propagator(theta, 1)^t == propagator(theta, t).
 */
[[nodiscard]] RealMatrix2 two_level_propagator(double theta, std::uint64_t t);

[[nodiscard]] RealMatrix2 multiply(const RealMatrix2 &a, const RealMatrix2 &b);

enum class AsymptoticRegime {
    FewFlips,  ///< delta_min <= n/4: (delta/n)^{delta/2}
    NearHalf,  ///< delta_min > n/4:  (delta/n)^delta
};

struct AsymptoticEstimate {
    unsigned delta_min = 0;
    AsymptoticRegime regime = AsymptoticRegime::FewFlips;
    double value = 0.0;
};

/// Order-of-magnitude estimate of theta. `delta` may be given as either
/// delta or n - delta; the smaller one is used.
[[nodiscard]] AsymptoticEstimate asymptotic_mixing(unsigned n, unsigned delta);

/// @throws DomainError if delta > n.
[[nodiscard]] DickePlan dicke_plan(unsigned n, unsigned delta,
                                   IterationPolicy policy = IterationPolicy::optimal());

/// 2^{-n} C(n, delta): chance that a uniformly random n-bit string has weight
/// delta.
[[nodiscard]] double classical_density(unsigned n, unsigned delta);

struct RegistrySize {
    unsigned qubits = 0;
    /// Whether C(n, delta+1) > 2^qubits also holds.
    bool bracket_feasible = false;
};

/**
 * Smallest n' with 2^{n'} >= C(n, delta). The upper bracket
 * C(n, delta + 1) > 2^{n'} cannot always be met (e.g. n = 4, delta = 2);
 * that case is flagged and the lower bound still returned.
 * @throws DomainError unless delta < n.
 */
[[nodiscard]] RegistrySize registry_qubits(unsigned n, unsigned delta);

struct MixingRatio {
    double actual = 0.0;    ///< sin(theta') / sin(theta_delta)
    double predicted = 0.0; ///< [2 pi delta (1 - delta/n)]^{1/4}
};

/// @throws DomainError unless 0 < delta < n.
[[nodiscard]] MixingRatio mixing_ratio(unsigned n, unsigned delta);

/// Plain search from the uniform superposition for a target of weight delta.
[[nodiscard]] OscillationPlan grover_plan(unsigned n, unsigned delta,
                                          IterationPolicy policy = IterationPolicy::optimal());

/// Search from H_zeta^{\otimes n}|0> with the optimal zeta for weight delta.
[[nodiscard]] OscillationPlan grover_plus_plan(unsigned n, unsigned delta,
                                               IterationPolicy policy = IterationPolicy::optimal());

/// Plain search on the n'-qubit working registry holding the weight-delta
/// class. `n` and `delta` describe the original problem.
[[nodiscard]] OscillationPlan modified_grover_plan(unsigned n, unsigned delta,
                                                   IterationPolicy policy = IterationPolicy::optimal());

} // namespace gplus
