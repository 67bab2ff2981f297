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
#include "gplus/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gplus/bitstring.hpp"
#include "gplus/error.hpp"

namespace gplus {

namespace {

constexpr double kPi = std::numbers::pi;

void require_weight(unsigned n, unsigned delta) {
    if (delta > n) {
        throw DomainError("Hamming weight " + std::to_string(delta) + " exceeds n = " +
                          std::to_string(n));
    }
}

void require_mixing_angle(double theta) {
    if (!(theta > 0.0) || theta > kPi / 2) {
        throw DomainError("mixing angle must lie in (0, pi/2], got " + std::to_string(theta));
    }
}

double angle_from_sin2(double sin2) { return std::asin(std::sqrt(std::clamp(sin2, 0.0, 1.0))); }

double stirling_sin2(unsigned n, unsigned delta) {
    const double d = delta;
    return 1.0 / std::sqrt(2.0 * kPi * d * (1.0 - d / n));
}

} // namespace

std::uint64_t IterationPolicy::resolve(double theta) const {
    switch (kind) {
    case Kind::Optimal:
        return iteration_count(theta);
    case Kind::Truncated:
        return truncated_iteration_count(theta);
    case Kind::Fixed:
        return fixed;
    }
    return 0;
}

double grover_mixing(unsigned n) {
    if (n == 0) {
        throw DomainError("grover_mixing needs n >= 1");
    }
    return std::asin(std::exp2(-0.5 * n));
}

PolarAngle optimal_zeta(unsigned n, unsigned delta) {
    require_weight(n, delta);
    if (n == 0) {
        throw DomainError("optimal_zeta needs n >= 1");
    }
    if (delta == 0) {
        return PolarAngle{0.0};
    }
    if (delta == n) {
        return PolarAngle{kPi};
    }
    if (2 * delta == n) {
        return PolarAngle::unbiased();
    }
    return PolarAngle{2.0 * std::asin(std::sqrt(static_cast<double>(delta) / n))};
}

double optimal_mixing_sin2(unsigned n, unsigned delta) {
    require_weight(n, delta);
    // (n - delta)/n rather than 1 - delta/n keeps delta <-> n - delta exact.
    const double ones = static_cast<double>(delta) / n;
    const double zeros = static_cast<double>(n - delta) / n;
    // std::pow(0, 0) == 1, which is the convention needed at delta in {0, n}.
    return std::pow(ones, static_cast<double>(delta)) * std::pow(zeros, static_cast<double>(n - delta));
}

double optimal_mixing(unsigned n, unsigned delta) {
    return angle_from_sin2(optimal_mixing_sin2(n, delta));
}

double class_member_weight(unsigned n, unsigned delta, double zeta) {
    require_weight(n, delta);
    const double c2 = std::pow(std::cos(zeta / 2), 2);
    const double s2 = std::pow(std::sin(zeta / 2), 2);
    return std::pow(c2, static_cast<double>(n - delta)) * std::pow(s2, static_cast<double>(delta));
}

std::uint64_t truncated_iteration_count(double theta) {
    require_mixing_angle(theta);
    const double x = (kPi / theta - 2.0) / 4.0;
    return x <= 0.0 ? 0 : static_cast<std::uint64_t>(std::floor(x));
}

std::uint64_t iteration_count(double theta) {
    require_mixing_angle(theta);
    const double x = (kPi / theta - 2.0) / 4.0;
    if (x <= 0.0) {
        return 0;
    }
    const auto lo = static_cast<std::uint64_t>(std::floor(x));
    const auto hi = static_cast<std::uint64_t>(std::ceil(x));
    return predicted_success(theta, hi) > predicted_success(theta, lo) ? hi : lo;
}

double predicted_success(double theta, std::uint64_t t) {
    const double s = std::sin((2.0 * static_cast<double>(t) + 1.0) * theta);
    return s * s;
}

RealMatrix2 two_level_propagator(double theta, std::uint64_t t) {
    const double phi = 2.0 * static_cast<double>(t) * theta;
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    return {c, -s, s, c};
}

RealMatrix2 multiply(const RealMatrix2 &a, const RealMatrix2 &b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

AsymptoticEstimate asymptotic_mixing(unsigned n, unsigned delta) {
    require_weight(n, delta);
    AsymptoticEstimate est;
    est.delta_min = std::min(delta, n - delta);
    const double ratio = static_cast<double>(est.delta_min) / n;
    if (4 * est.delta_min <= n) {
        est.regime = AsymptoticRegime::FewFlips;
        est.value = std::pow(ratio, est.delta_min / 2.0);
    } else {
        est.regime = AsymptoticRegime::NearHalf;
        est.value = std::pow(ratio, static_cast<double>(est.delta_min));
    }
    return est;
}

DickePlan dicke_plan(unsigned n, unsigned delta, IterationPolicy policy) {
    require_weight(n, delta);
    DickePlan plan;
    plan.n = n;
    plan.delta = delta;
    plan.zeta = optimal_zeta(n, delta).radians();
    const double sin2 = static_cast<double>(binomial(n, delta)) * optimal_mixing_sin2(n, delta);
    plan.theta = angle_from_sin2(sin2);
    if (delta > 0 && delta < n) {
        plan.stirling_sin2 = stirling_sin2(n, delta);
        plan.theta_stirling = angle_from_sin2(*plan.stirling_sin2);
    }
    plan.t_star = policy.resolve(plan.theta);
    plan.predicted_success = predicted_success(plan.theta, plan.t_star);
    return plan;
}

double classical_density(unsigned n, unsigned delta) {
    require_weight(n, delta);
    return std::ldexp(static_cast<double>(binomial(n, delta)), -static_cast<int>(n));
}

RegistrySize registry_qubits(unsigned n, unsigned delta) {
    if (delta >= n) {
        throw DomainError("registry_qubits needs delta < n");
    }
    const std::uint64_t members = binomial(n, delta);
    RegistrySize size;
    while ((std::uint64_t{1} << size.qubits) < members) {
        ++size.qubits;
    }
    // 2^qubits <= 2^63 here since C(n, delta) <= C(64, 32) < 2^61.
    size.bracket_feasible = binomial(n, delta + 1) > (std::uint64_t{1} << size.qubits);
    return size;
}

MixingRatio mixing_ratio(unsigned n, unsigned delta) {
    if (delta == 0 || delta >= n) {
        throw DomainError("mixing_ratio needs 0 < delta < n");
    }
    const unsigned registry = registry_qubits(n, delta).qubits;
    MixingRatio ratio;
    ratio.actual = std::exp2(-0.5 * registry) / std::sqrt(optimal_mixing_sin2(n, delta));
    ratio.predicted = std::pow(2.0 * kPi * delta * (1.0 - static_cast<double>(delta) / n), 0.25);
    return ratio;
}

OscillationPlan grover_plan(unsigned n, unsigned delta, IterationPolicy policy) {
    require_weight(n, delta);
    OscillationPlan plan;
    plan.n = n;
    plan.delta = delta;
    plan.zeta = PolarAngle::unbiased().radians();
    plan.theta = grover_mixing(n);
    plan.t_star = policy.resolve(plan.theta);
    plan.predicted_success = predicted_success(plan.theta, plan.t_star);
    return plan;
}

OscillationPlan grover_plus_plan(unsigned n, unsigned delta, IterationPolicy policy) {
    OscillationPlan plan;
    plan.n = n;
    plan.delta = delta;
    plan.zeta = optimal_zeta(n, delta).radians();
    plan.theta = optimal_mixing(n, delta);
    plan.t_star = policy.resolve(plan.theta);
    plan.predicted_success = predicted_success(plan.theta, plan.t_star);
    return plan;
}

OscillationPlan modified_grover_plan(unsigned n, unsigned delta, IterationPolicy policy) {
    if (delta == 0 || delta >= n) {
        throw DomainError("modified search needs 0 < delta < n");
    }
    OscillationPlan plan = grover_plan(registry_qubits(n, delta).qubits, 0, policy);
    plan.delta = delta;
    return plan;
}

} // namespace gplus
