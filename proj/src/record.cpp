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
#include "gplus/record.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <random>

#include <json.hpp>

#include "gplus/error.hpp"

namespace gplus {

std::string format_double(double value) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return {buf.data(), res.ptr};
}

namespace {

struct ExtraColumns {
    bool registry = false;
    bool sampled = false;
};

ExtraColumns extra_columns(std::span<const ExperimentRecord> records) {
    ExtraColumns extra;
    for (const auto &r : records) {
        extra.registry = extra.registry || r.registry_qubits.has_value();
        extra.sampled = extra.sampled || r.sampled_success.has_value();
    }
    return extra;
}

template <class T> std::string cell(const std::optional<T> &v) {
    if (!v) {
        return {};
    }
    if constexpr (std::is_floating_point_v<T>) {
        return format_double(*v);
    } else {
        return std::to_string(*v);
    }
}

template <class T> nlohmann::ordered_json json_value(const std::optional<T> &v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

} // namespace

void write_csv(std::ostream &os, std::span<const ExperimentRecord> records) {
    const auto extra = extra_columns(records);
    os << kCsvHeader;
    if (extra.registry) {
        os << ",registry_qubits";
    }
    if (extra.sampled) {
        os << ",sampled_success";
    }
    os << '\n';
    for (const auto &r : records) {
        os << to_string(r.algo) << ',' << r.n << ',' << r.delta << ',' << format_double(r.zeta)
           << ',' << format_double(r.theta) << ',' << r.t_star << ','
           << format_double(r.predicted_success) << ',' << cell(r.simulated_success) << ','
           << cell(r.max_deviation) << ',' << r.queries << ',' << cell(r.wall_time_ns);
        if (extra.registry) {
            os << ',' << cell(r.registry_qubits);
        }
        if (extra.sampled) {
            os << ',' << cell(r.sampled_success);
        }
        os << '\n';
    }
}

void write_json(std::ostream &os, std::span<const ExperimentRecord> records) {
    const auto extra = extra_columns(records);
    auto rows = nlohmann::ordered_json::array();
    for (const auto &r : records) {
        nlohmann::ordered_json row;
        row["algo"] = std::string(to_string(r.algo));
        row["n"] = r.n;
        row["delta"] = r.delta;
        row["zeta"] = r.zeta;
        row["theta"] = r.theta;
        row["t_star"] = r.t_star;
        row["predicted_success"] = r.predicted_success;
        row["simulated_success"] = json_value(r.simulated_success);
        row["max_deviation"] = json_value(r.max_deviation);
        row["queries"] = r.queries;
        row["wall_time_ns"] = json_value(r.wall_time_ns);
        if (extra.registry) {
            row["registry_qubits"] = json_value(r.registry_qubits);
        }
        if (extra.sampled) {
            row["sampled_success"] = json_value(r.sampled_success);
        }
        rows.push_back(std::move(row));
    }
    os << rows.dump(2) << '\n';
}

void write_records(std::ostream &os, std::span<const ExperimentRecord> records,
                   OutputFormat format) {
    if (format == OutputFormat::Csv) {
        write_csv(os, records);
    } else {
        write_json(os, records);
    }
}

ExperimentRecord analytic_record(Algorithm algo, unsigned n, unsigned delta,
                                 IterationPolicy policy) {
    ExperimentRecord rec;
    rec.algo = algo;
    rec.n = n;
    rec.delta = delta;
    Plan plan;
    switch (algo) {
    case Algorithm::Grover:
        plan = grover_plan(n, delta, policy);
        break;
    case Algorithm::GroverPlus:
        plan = grover_plus_plan(n, delta, policy);
        break;
    case Algorithm::Dicke:
        plan = dicke_plan(n, delta, policy);
        break;
    case Algorithm::Modified: {
        const auto p = modified_grover_plan(n, delta, policy);
        rec.registry_qubits = p.n;
        plan = p;
        break;
    }
    }
    rec.zeta = plan_zeta(plan);
    rec.theta = plan_theta(plan);
    rec.t_star = plan_t_star(plan);
    rec.predicted_success = predicted_success(rec.theta, rec.t_star);
    rec.queries = rec.t_star;
    return rec;
}

ExperimentRecord simulated_record(unsigned n, unsigned delta, const Trajectory &trajectory,
                                  std::int64_t wall_time_ns) {
    ExperimentRecord rec;
    rec.algo = trajectory.algorithm;
    rec.n = n;
    rec.delta = delta;
    rec.zeta = plan_zeta(trajectory.plan);
    rec.theta = plan_theta(trajectory.plan);
    rec.t_star = plan_t_star(trajectory.plan);
    rec.predicted_success = predicted_success(rec.theta, rec.t_star);
    rec.simulated_success = trajectory.success_by_iteration.at(rec.t_star);
    rec.max_deviation = verify_against_analytic(trajectory);
    rec.queries = trajectory.queries;
    rec.wall_time_ns = wall_time_ns;
    if (trajectory.algorithm == Algorithm::Modified) {
        rec.registry_qubits = std::get<OscillationPlan>(trajectory.plan).n;
    }
    return rec;
}

double sample_success(double probability, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw DomainError("shot count must be positive");
    }
    std::mt19937_64 rng{seed};
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        hits += (u < probability) ? 1 : 0;
    }
    return static_cast<double>(hits) / static_cast<double>(shots);
}

} // namespace gplus
