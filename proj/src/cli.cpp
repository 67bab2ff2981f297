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
#include "gplus/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gplus/analytic.hpp"
#include "gplus/error.hpp"
#include "gplus/record.hpp"
#include "gplus/search.hpp"
#include "gplus/verify.hpp"

namespace gplus::cli {

namespace {

struct Range {
    unsigned lo = 0;
    unsigned hi = 0;
};

Range parse_range(const std::string &text, const char *flag) {
    const auto dots = text.find("..");
    Range r;
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = static_cast<unsigned>(std::stoul(text));
        } else {
            std::size_t used = 0;
            r.lo = static_cast<unsigned>(std::stoul(text.substr(0, dots), &used));
            r.hi = static_cast<unsigned>(std::stoul(text.substr(dots + 2), &used));
        }
    } catch (const std::exception &) {
        throw UsageError(std::string(flag) + " expects A..B, got '" + text + "'");
    }
    if (r.lo > r.hi) {
        throw UsageError(std::string(flag) + " range is empty: " + text);
    }
    return r;
}

Algorithm parse_algorithm(const std::string &name) {
    for (auto algo : {Algorithm::Grover, Algorithm::GroverPlus, Algorithm::Dicke, Algorithm::Modified}) {
        if (name == to_string(algo)) {
            return algo;
        }
    }
    throw UsageError("unknown algorithm '" + name + "' (grover, grover-plus, dicke, modified)");
}

std::vector<Algorithm> parse_algorithm_list(const std::string &text) {
    std::vector<Algorithm> algos;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        algos.push_back(parse_algorithm(item));
    }
    if (algos.empty()) {
        throw UsageError("--algo needs at least one algorithm");
    }
    std::sort(algos.begin(), algos.end());
    algos.erase(std::unique(algos.begin(), algos.end()), algos.end());
    return algos;
}

IterationPolicy parse_iterations(const std::string &text) {
    if (text == "auto") {
        return IterationPolicy::optimal();
    }
    if (text == "floor") {
        return IterationPolicy::truncated();
    }
    try {
        std::size_t used = 0;
        const auto t = std::stoull(text, &used);
        if (used == text.size()) {
            return IterationPolicy::exactly(t);
        }
    } catch (const std::exception &) {
    }
    throw UsageError("--iters expects auto, floor or a count, got '" + text + "'");
}

OutputFormat parse_format(const std::string &text) {
    if (text == "csv") {
        return OutputFormat::Csv;
    }
    if (text == "json") {
        return OutputFormat::Json;
    }
    throw UsageError("--out expects csv or json, got '" + text + "'");
}

std::uint64_t lowest_index_of_weight(unsigned delta) {
    return delta >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << delta) - 1;
}

/// Options shared by simulate and sweep.
struct CommonOptions {
    std::string algo;
    std::string iters = "auto";
    std::string out = "csv";
    std::string output;
    unsigned cap = kDefaultQubitCap;
    std::optional<std::uint64_t> shots;
    std::uint64_t seed = 0;
};

void add_common(CLI::App &cmd, CommonOptions &opt) {
    cmd.add_option("--iters", opt.iters, "auto | floor | fixed query count");
    cmd.add_option("--out", opt.out, "csv | json");
    cmd.add_option("--output", opt.output, "write results to PATH instead of stdout");
    cmd.add_option("--cap", opt.cap, "largest qubit count to simulate");
    cmd.add_option("--shots", opt.shots, "add a sampled success frequency from S shots");
    cmd.add_option("--seed", opt.seed, "seed for --shots (mt19937_64)");
}

/// Either `fallback` or a file opened from `path`.
class Sink {
  public:
    Sink(const std::string &path, std::ostream &fallback) : os_{&fallback} {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) {
                throw UsageError("cannot open --output file '" + path + "'");
            }
            os_ = file_.get();
        }
    }
    std::ostream &get() { return *os_; }

  private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream *os_;
};

ExperimentRecord simulate_one(Algorithm algo, unsigned n, unsigned delta, std::uint64_t target,
                              const CommonOptions &opt) {
    RunOptions run;
    run.iterations = parse_iterations(opt.iters);
    run.cap = opt.cap;
    const auto start = std::chrono::steady_clock::now();
    Trajectory traj;
    switch (algo) {
    case Algorithm::Grover:
        traj = run_grover(BasisIndex{target, n}, run);
        break;
    case Algorithm::GroverPlus:
        traj = run_grover_plus(BasisIndex{target, n}, run);
        break;
    case Algorithm::Dicke:
        traj = run_dicke(n, delta, run);
        break;
    case Algorithm::Modified:
        traj = run_modified_grover(n, delta, target, run);
        break;
    }
    const auto elapsed = std::chrono::steady_clock::now() - start;
    auto rec = simulated_record(n, delta, traj,
                                std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed).count());
    if (opt.shots) {
        rec.sampled_success = sample_success(*rec.simulated_success, *opt.shots, opt.seed);
    }
    return rec;
}

// ------------------------------------------------------------------ simulate

struct SimulateArgs {
    CommonOptions common;
    unsigned n = 0;
    std::optional<std::uint64_t> target;
    std::optional<unsigned> weight;
};

int cmd_simulate(const SimulateArgs &args, std::ostream &out) {
    const Algorithm algo = parse_algorithm(args.common.algo);
    const auto format = parse_format(args.common.out);
    check_qubit_cap(0, args.common.cap);
    if (args.n == 0) {
        throw UsageError("--n must be at least 1");
    }
    unsigned delta = 0;
    std::uint64_t target = 0;
    switch (algo) {
    case Algorithm::Grover:
    case Algorithm::GroverPlus:
        if (!args.target) {
            throw UsageError("--target is required for " + std::string(to_string(algo)));
        }
        target = *args.target;
        delta = hamming_weight(BasisIndex{target, args.n});
        break;
    case Algorithm::Dicke:
    case Algorithm::Modified:
        if (!args.weight) {
            throw UsageError("--weight is required for " + std::string(to_string(algo)));
        }
        delta = *args.weight;
        target = args.target.value_or(0);
        break;
    }
    if (algo != Algorithm::Modified) {
        check_qubit_cap(args.n, args.common.cap);
    }
    const auto rec = simulate_one(algo, args.n, delta, target, args.common);
    Sink sink(args.common.output, out);
    write_records(sink.get(), std::span(&rec, 1), format);
    return kExitOk;
}

// --------------------------------------------------------------------- sweep

struct SweepArgs {
    CommonOptions common;
    std::optional<unsigned> n;
    std::string n_range;
    std::string weight_range;
    bool analytic = false;
};

int cmd_sweep(const SweepArgs &args, std::ostream &out) {
    const auto algos = parse_algorithm_list(args.common.algo.empty() ? "grover,grover-plus"
                                                                     : args.common.algo);
    const auto format = parse_format(args.common.out);
    const auto policy = parse_iterations(args.common.iters);
    check_qubit_cap(0, args.common.cap);
    if (args.n.has_value() == !args.n_range.empty()) {
        throw UsageError("sweep needs exactly one of --n or --n-range");
    }
    const Range ns = args.n ? Range{*args.n, *args.n} : parse_range(args.n_range, "--n-range");
    if (ns.lo == 0 || ns.hi > kMaxIndexBits) {
        throw UsageError("sweep qubit counts must lie in [1, 64]");
    }
    std::optional<Range> weights;
    if (!args.weight_range.empty()) {
        weights = parse_range(args.weight_range, "--weight-range");
    }

    std::vector<ExperimentRecord> records;
    for (const Algorithm algo : algos) {
        for (unsigned n = ns.lo; n <= ns.hi; ++n) {
            const unsigned d_lo = weights ? weights->lo : 0;
            const unsigned d_hi = weights ? std::min(weights->hi, n) : n;
            for (unsigned d = d_lo; d <= d_hi; ++d) {
                if (algo == Algorithm::Modified && (d == 0 || d >= n)) {
                    continue;
                }
                const unsigned simulated_qubits =
                    algo == Algorithm::Modified ? registry_qubits(n, d).qubits : n;
                if (args.analytic || simulated_qubits > args.common.cap) {
                    auto rec = analytic_record(algo, n, d, policy);
                    records.push_back(rec);
                    continue;
                }
                const std::uint64_t target =
                    algo == Algorithm::Modified ? 0 : lowest_index_of_weight(d);
                records.push_back(simulate_one(algo, n, d, target, args.common));
            }
        }
    }
    Sink sink(args.common.output, out);
    write_records(sink.get(), records, format);
    return kExitOk;
}

// -------------------------------------------------------------------- verify

struct VerifyArgs {
    unsigned max_n = 12;
    double tol = 1e-10;
    unsigned cap = kDefaultQubitCap;
    std::string output;
};

int cmd_verify(const VerifyArgs &args, std::ostream &out) {
    VerifyConfig cfg;
    cfg.max_n = args.max_n;
    cfg.tol = args.tol;
    cfg.cap = args.cap;
    const auto start = std::chrono::steady_clock::now();
    const auto results = run_verification(cfg);
    const auto seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    Sink sink(args.output, out);
    auto &os = sink.get();
    std::size_t failures = 0;
    for (const auto &r : results) {
        failures += r.passed ? 0 : 1;
        os << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(52) << r.name
           << " max_deviation=" << format_double(r.max_deviation)
           << " tolerance=" << format_double(r.tolerance) << '\n';
    }
    os << results.size() - failures << '/' << results.size() << " suites passed in "
       << std::fixed << std::setprecision(2) << seconds << " s\n";
    return failures == 0 ? kExitOk : kExitVerifyFailed;
}

// --------------------------------------------------------------------- table

struct TableArgs {
    unsigned n = 0;
    std::string out = "csv";
    std::string output;
};

int cmd_table(const TableArgs &args, std::ostream &out) {
    const auto format = parse_format(args.out);
    if (args.n == 0 || args.n > kMaxIndexBits) {
        throw UsageError("--n must lie in [1, 64]");
    }
    const unsigned n = args.n;
    auto rows = nlohmann::ordered_json::array();
    std::ostringstream csv;
    csv << "delta,delta_min,zeta,theta,t_star,classical_density,theta_dicke,theta_dicke_stirling,"
           "t_star_dicke,regime,asymptotic_theta\n";
    for (unsigned d = 0; d <= n; ++d) {
        const auto plan = grover_plus_plan(n, d);
        const auto dicke = dicke_plan(n, d);
        const auto asym = asymptotic_mixing(n, d);
        const std::string regime = asym.regime == AsymptoticRegime::FewFlips ? "few-flips" : "near-half";
        const double density = classical_density(n, d);
        csv << d << ',' << asym.delta_min << ',' << format_double(plan.zeta) << ','
            << format_double(plan.theta) << ',' << plan.t_star << ',' << format_double(density)
            << ',' << format_double(dicke.theta) << ','
            << (dicke.theta_stirling ? format_double(*dicke.theta_stirling) : "") << ','
            << dicke.t_star << ',' << regime << ',' << format_double(asym.value) << '\n';
        nlohmann::ordered_json row;
        row["delta"] = d;
        row["delta_min"] = asym.delta_min;
        row["zeta"] = plan.zeta;
        row["theta"] = plan.theta;
        row["t_star"] = plan.t_star;
        row["classical_density"] = density;
        row["theta_dicke"] = dicke.theta;
        row["theta_dicke_stirling"] =
            dicke.theta_stirling ? nlohmann::ordered_json(*dicke.theta_stirling) : nlohmann::ordered_json(nullptr);
        row["t_star_dicke"] = dicke.t_star;
        row["regime"] = regime;
        row["asymptotic_theta"] = asym.value;
        rows.push_back(std::move(row));
    }
    Sink sink(args.output, out);
    if (format == OutputFormat::Csv) {
        sink.get() << csv.str();
    } else {
        sink.get() << rows.dump(2) << '\n';
    }
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Hamming-weight-aware amplitude amplification simulator", "gplus"};
    app.require_subcommand(1);

    SimulateArgs sim;
    auto *simulate = app.add_subcommand("simulate", "run one search instance");
    simulate->add_option("--algo", sim.common.algo, "grover | grover-plus | dicke | modified")->required();
    simulate->add_option("--n", sim.n, "qubit count")->required();
    simulate->add_option("--target", sim.target, "target index (registry slot for modified)");
    simulate->add_option("--weight", sim.weight, "Hamming weight for dicke / modified");
    add_common(*simulate, sim.common);

    SweepArgs sweep;
    auto *sweep_cmd = app.add_subcommand("sweep", "run a grid of instances");
    sweep_cmd->add_option("--algo", sweep.common.algo, "comma-separated algorithms");
    sweep_cmd->add_option("--n", sweep.n, "single qubit count");
    sweep_cmd->add_option("--n-range", sweep.n_range, "qubit counts A..B");
    sweep_cmd->add_option("--weight-range", sweep.weight_range, "Hamming weights A..B");
    sweep_cmd->add_flag("--analytic", sweep.analytic, "closed forms only, no simulation");
    add_common(*sweep_cmd, sweep.common);

    VerifyArgs ver;
    auto *verify = app.add_subcommand("verify", "run every invariant suite");
    verify->add_option("--max-n", ver.max_n, "largest simulated qubit count");
    verify->add_option("--tol", ver.tol, "simulation vs closed-form tolerance");
    verify->add_option("--cap", ver.cap, "qubit cap");
    verify->add_option("--output", ver.output, "write the report to PATH");

    TableArgs tab;
    auto *table = app.add_subcommand("table", "print analytic quantities for every weight");
    table->add_option("--n", tab.n, "qubit count")->required();
    table->add_option("--out", tab.out, "csv | json");
    table->add_option("--output", tab.output, "write results to PATH");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (simulate->parsed()) {
            return cmd_simulate(sim, out);
        }
        if (sweep_cmd->parsed()) {
            return cmd_sweep(sweep, out);
        }
        if (verify->parsed()) {
            return cmd_verify(ver, out);
        }
        return cmd_table(tab, out);
    } catch (const ResourceError &e) {
        err << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace gplus::cli
