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
 * Self-check suites: every module invariant, evaluated up to a qubit bound.
 */
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gplus/statevec.hpp"

namespace gplus {

struct VerifyConfig {
    /// Largest qubit count simulated by any suite.
    unsigned max_n = 12;
    /// Tolerance for simulation-versus-closed-form comparisons. Suites with
    /// a tighter intrinsic tolerance keep their own.
    double tol = 1e-10;
    unsigned cap = kDefaultQubitCap;
    /// Polar-angle rule checked by the optimality suites; defaults to
    /// optimal_zeta. Replaceable so a perturbed rule can be shown to fail.
    std::function<double(unsigned n, unsigned delta)> zeta_rule;
};

struct SuiteResult {
    std::string name;
    /// Worst deviation observed (or violation count for discrete checks).
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

/// @throws ResourceError if cfg.max_n exceeds cfg.cap.
[[nodiscard]] std::vector<SuiteResult> run_verification(const VerifyConfig &cfg);

} // namespace gplus
