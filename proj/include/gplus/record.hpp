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
 * Experiment records and their CSV / JSON serialisation.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "gplus/search.hpp"

namespace gplus {

/// One row of output: the analytic prescription and, for simulated rows, the
/// measured outcome.
struct ExperimentRecord {
    Algorithm algo = Algorithm::Grover;
    unsigned n = 0;
    unsigned delta = 0;
    double zeta = 0.0;
    double theta = 0.0;
    std::uint64_t t_star = 0;
    double predicted_success = 0.0;
    /// Absent for analytic-only rows.
    std::optional<double> simulated_success;
    /// max_t |simulated - predicted| over the trajectory; absent for analytic rows.
    std::optional<double> max_deviation;
    std::uint64_t queries = 0;
    std::optional<std::int64_t> wall_time_ns;
    /// Working-registry size, modified search only.
    std::optional<unsigned> registry_qubits;
    /// Hit frequency from shot sampling, when requested.
    std::optional<double> sampled_success;
};

/// Fixed leading CSV columns, in order.
inline constexpr const char *kCsvHeader =
    "algo,n,delta,zeta,theta,t_star,predicted_success,simulated_success,max_deviation,queries,"
    "wall_time_ns";

enum class OutputFormat { Csv, Json };

/// Shortest decimal string that parses back to exactly `value`.
[[nodiscard]] std::string format_double(double value);

/// Header plus one line per record. `registry_qubits` and `sampled_success`
/// columns are appended when any record carries them; absent values are
/// empty cells.
void write_csv(std::ostream &os, std::span<const ExperimentRecord> records);

/// JSON array of objects keyed like the CSV header; absent values are null.
void write_json(std::ostream &os, std::span<const ExperimentRecord> records);

void write_records(std::ostream &os, std::span<const ExperimentRecord> records,
                   OutputFormat format);

/// Analytic-only row (no state vector is allocated).
[[nodiscard]] ExperimentRecord analytic_record(Algorithm algo, unsigned n, unsigned delta,
                                               IterationPolicy policy = IterationPolicy::optimal());

/// Row for a finished simulation.
[[nodiscard]] ExperimentRecord simulated_record(unsigned n, unsigned delta,
                                                const Trajectory &trajectory,
                                                std::int64_t wall_time_ns);

/**
 * Fraction of `shots` Bernoulli(p) draws that hit.
 *
 * Draws come from std::mt19937_64 seeded with `seed`; each shot takes one
 * 64-bit output u and hits when (u >> 11) * 2^-53 < p. The generator is fully
 * specified by the standard, so results are reproducible across platforms.
 */
[[nodiscard]] double sample_success(double probability, std::uint64_t shots, std::uint64_t seed);

} // namespace gplus
