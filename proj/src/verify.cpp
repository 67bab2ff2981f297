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
#include "gplus/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>

#include "gplus/analytic.hpp"
#include "gplus/bitstring.hpp"
#include "gplus/error.hpp"
#include "gplus/gates.hpp"
#include "gplus/search.hpp"

namespace gplus {

namespace {

constexpr double kPi = std::numbers::pi;

class Suites {
  public:
    void add(std::string name, double deviation, double tolerance) {
        const bool ok = std::isfinite(deviation) && deviation <= tolerance;
        results_.push_back({std::move(name), deviation, tolerance, ok});
    }
    std::vector<SuiteResult> take() { return std::move(results_); }

  private:
    std::vector<SuiteResult> results_;
};

StateVector random_state(unsigned n, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    auto state = StateVector::init_basis(n, 0, kHardQubitMax);
    auto amps = state.amplitudes();
    double norm = 0.0;
    for (auto &a : amps) {
        a = {gauss(rng), gauss(rng)};
        norm += std::norm(a);
    }
    for (auto &a : amps) {
        a /= std::sqrt(norm);
    }
    return state;
}

double max_elementwise_gap(const StateVector &a, const StateVector &b) {
    double worst = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        worst = std::max(worst, std::abs(a[k] - b[k]));
    }
    return worst;
}

std::uint64_t lowest_index_of_weight(unsigned delta) {
    return delta >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << delta) - 1;
}

// ---------------------------------------------------------------- bitstring

void bitstring_suites(const VerifyConfig &cfg, Suites &out) {
    double violations = 0;
    for (unsigned n = 1; n <= std::min(cfg.max_n, 12U); ++n) {
        for (std::uint64_t j = 0; j < dimension(n); ++j) {
            for (std::uint64_t k = 0; k < dimension(n); ++k) {
                const BasisIndex bj{j, n};
                const BasisIndex bk{k, n};
                const int lhs = static_cast<int>(hamming_distance(bj, bk));
                const int rhs = static_cast<int>(hamming_weight(bj) + hamming_weight(bk)) -
                                2 * static_cast<int>(intersection(bj, bk));
                violations += (lhs != rhs) ? 1 : 0;
            }
        }
    }
    out.add("bitstring.distance_identity", violations, 0);

    violations = 0;
    for (unsigned n = 1; n <= std::min(cfg.max_n, 8U); ++n) {
        const auto dim = dimension(n);
        for (std::uint64_t j = 0; j < dim; ++j) {
            for (std::uint64_t k = 0; k < dim; ++k) {
                const BasisIndex bj{j, n};
                const BasisIndex bk{k, n};
                const unsigned djk = hamming_distance(bj, bk);
                violations += (djk != hamming_distance(bk, bj)) ? 1 : 0;
                violations += ((djk == 0) != (j == k)) ? 1 : 0;
                for (std::uint64_t l = 0; l < dim; ++l) {
                    const BasisIndex bl{l, n};
                    violations += (hamming_distance(bj, bl) > djk + hamming_distance(bk, bl)) ? 1 : 0;
                }
            }
        }
    }
    out.add("bitstring.metric_axioms", violations, 0);

    violations = 0;
    for (unsigned n = 0; n <= 30; ++n) {
        std::uint64_t sum = 0;
        for (unsigned r = 0; r <= n; ++r) {
            sum += binomial(n, r);
        }
        violations += (sum != (std::uint64_t{1} << n)) ? 1 : 0;
    }
    out.add("bitstring.binomial_row_sums", violations, 0);
}

// ----------------------------------------------------------------- statevec

void statevec_suites(const VerifyConfig &cfg, Suites &out) {
    std::mt19937_64 rng{20190902};
    const unsigned n_long = std::min(cfg.max_n, 12U);
    {
        auto state = StateVector::init_basis(n_long, 0, cfg.cap);
        const auto axis = prepare_biased_superposition(n_long, PolarAngle{1.1}, cfg.cap);
        double worst = 0.0;
        for (unsigned i = 0; i < 10000; ++i) {
            switch (i % 3) {
            case 0:
                state.apply_single_qubit_all(generalized_hadamard(PolarAngle{std::fmod(0.37 * i, kPi)}));
                break;
            case 1:
                apply_phase_oracle(state, WeightClass{i % (n_long + 1)});
                break;
            default:
                apply_reflection_about(state, axis);
                break;
            }
            worst = std::max(worst, std::abs(state.norm_squared() - 1.0));
        }
        out.add("statevec.norm_preservation", worst, 1e-10);
    }

    double involution = 0.0;
    double partition = 0.0;
    for (unsigned n = 1; n <= std::min(cfg.max_n, 10U); ++n) {
        const auto original = random_state(n, rng);
        for (double zeta : {0.0, 0.4, kPi / 2, 2.2, kPi}) {
            auto state = original;
            const auto gate = generalized_hadamard(PolarAngle{zeta});
            state.apply_single_qubit_all(gate);
            state.apply_single_qubit_all(gate);
            involution = std::max(involution, max_elementwise_gap(state, original));
        }
        double total = 0.0;
        for (unsigned w = 0; w <= n; ++w) {
            total += probability_of(original, WeightClass{w});
        }
        partition = std::max(partition, std::abs(total - 1.0));
    }
    out.add("statevec.involutory_gate_twice", involution, 1e-12);
    out.add("statevec.partition_sums_to_one", partition, 1e-12);
}

// -------------------------------------------------------------------- gates

void gates_suites(const VerifyConfig &cfg, Suites &out) {
    std::mt19937_64 rng{1950};
    double worst = 0.0;
    for (unsigned n = 1; n <= std::min(cfg.max_n, 10U); ++n) {
        for (double z : {0.0, 0.7, kPi / 3, kPi / 2, 2.9}) {
            const PolarAngle zeta{z};
            const auto gate = generalized_hadamard(zeta);
            for (std::uint64_t j = 0; j < dimension(n); ++j) {
                auto state = StateVector::init_basis(n, j, cfg.cap);
                state.apply_single_qubit_all(gate);
                for (std::uint64_t k = 0; k < dimension(n); ++k) {
                    const double expected = hadamard_amplitude(n, zeta, {j, n}, {k, n});
                    worst = std::max(worst, std::abs(state[k] - Complex{expected}));
                }
            }
        }
    }
    out.add("gates.amplitude_closed_form", worst, 1e-12);

    worst = 0.0;
    for (unsigned n = 1; n <= 20; ++n) {
        for (double z = 0.0; z <= kPi; z += kPi / 64) {
            const double c2 = std::pow(std::cos(z / 2), 2);
            const double s2 = std::pow(std::sin(z / 2), 2);
            double sum = 0.0;
            for (unsigned d = 0; d <= n; ++d) {
                sum += static_cast<double>(binomial(n, d)) * std::pow(c2, n - d) * std::pow(s2, d);
            }
            worst = std::max(worst, std::abs(sum - 1.0));
        }
    }
    out.add("gates.binomial_normalization", worst, 1e-12);

    worst = 0.0;
    for (unsigned n = 1; n <= std::min(cfg.max_n, 10U); ++n) {
        const auto original = random_state(n, rng);
        const auto axis = random_state(n, rng);
        for (const TargetSpec &targets :
             {TargetSpec{SingleIndex{dimension(n) - 1}}, TargetSpec{WeightClass{n / 2}}}) {
            auto state = original;
            apply_phase_oracle(state, targets);
            apply_phase_oracle(state, targets);
            worst = std::max(worst, max_elementwise_gap(state, original));
        }
        auto state = original;
        apply_reflection_about(state, axis);
        apply_reflection_about(state, axis);
        worst = std::max(worst, max_elementwise_gap(state, original));
    }
    out.add("gates.oracle_and_reflection_involutions", worst, 1e-12);
}

// ----------------------------------------------------------------- analytic

void analytic_suites(const VerifyConfig &cfg, Suites &out) {
    std::function<double(unsigned, unsigned)> zeta_rule = cfg.zeta_rule;
    if (!zeta_rule) {
        zeta_rule = [](unsigned n, unsigned d) { return optimal_zeta(n, d).radians(); };
    }
    constexpr int kGrid = 10000;
    const double step = kPi / (kGrid - 1);
    double argmax_steps = 0.0;
    double value_gap = 0.0;
    double dominance = 0.0;
    for (unsigned n = 1; n <= 16; ++n) {
        for (unsigned d = 0; d <= n; ++d) {
            auto weight = [&](double z) {
                return std::pow(std::cos(z / 2), 2.0 * (n - d)) * std::pow(std::sin(z / 2), 2.0 * d);
            };
            double best_z = 0.0;
            double best_w = -1.0;
            for (int i = 0; i < kGrid; ++i) {
                const double z = i * step;
                if (const double w = weight(z); w > best_w) {
                    best_w = w;
                    best_z = z;
                }
            }
            const double z_rule = zeta_rule(n, d);
            argmax_steps = std::max(argmax_steps, std::abs(best_z - z_rule) / step);
            value_gap = std::max(value_gap, std::abs(weight(z_rule) - optimal_mixing_sin2(n, d)));
            dominance = std::max(dominance, best_w - weight(z_rule));
        }
    }
    out.add("analytic.zeta_grid_argmax_steps", argmax_steps, 1.0 + 1e-9);
    out.add("analytic.zeta_mixing_value", value_gap, 1e-10);
    out.add("analytic.zeta_grid_dominance", dominance, 1e-8);

    double worst = 0.0;
    double bound = 0.0;
    for (unsigned n = 1; n <= std::min(cfg.max_n, 12U); ++n) {
        for (unsigned d = 0; d <= n; ++d) {
            const double scaled = static_cast<double>(binomial(n, d)) * optimal_mixing_sin2(n, d);
            bound = std::max(bound, scaled - 1.0);
            const auto state = prepare_biased_superposition(n, optimal_zeta(n, d), cfg.cap);
            worst = std::max(worst, std::abs(probability_of(state, WeightClass{d}) - scaled));
        }
    }
    out.add("analytic.class_mixing_matches_simulation", worst, 1e-12);
    out.add("analytic.class_mixing_at_most_one", std::max(bound, 0.0), 0.0);

    double violations = 0;
    for (unsigned n = 1; n <= 20; ++n) {
        for (unsigned d = 0; d <= n; ++d) {
            const double theta = optimal_mixing(n, d);
            for (std::uint64_t t = 0; (2.0 * t + 3.0) * theta <= kPi / 2; ++t) {
                violations += (predicted_success(theta, t + 1) > predicted_success(theta, t)) ? 0 : 1;
            }
        }
    }
    out.add("analytic.success_monotone_before_peak", violations, 0);

    worst = 0.0;
    for (unsigned n = 1; n <= 64; ++n) {
        for (unsigned d = 0; d <= n; ++d) {
            worst = std::max(worst, std::abs(optimal_mixing(n, d) - optimal_mixing(n, n - d)));
        }
    }
    out.add("analytic.mixing_symmetry", worst, 0.0);

    std::mt19937_64 rng{7};
    std::uniform_real_distribution<double> angle{1e-3, kPi / 2};
    worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double theta = angle(rng);
        const auto step_op = two_level_propagator(theta, 1);
        RealMatrix2 power{1, 0, 0, 1};
        for (std::uint64_t t = 0; t <= 100; ++t) {
            const auto direct = two_level_propagator(theta, t);
            for (std::size_t e = 0; e < 4; ++e) {
                worst = std::max(worst, std::abs(power[e] - direct[e]));
            }
            power = multiply(step_op, power);
        }
    }
    out.add("analytic.propagator_power_law", worst, 1e-10);

    violations = 0;
    for (unsigned delta : {1U, 2U, 3U}) {
        const double ratio = optimal_mixing(20, delta) / asymptotic_mixing(20, delta).value;
        violations += (ratio >= 0.1 && ratio <= 10.0) ? 0 : 1;
    }
    out.add("analytic.asymptotic_order_of_magnitude", violations, 0);

    violations = 0;
    for (unsigned n = 8; n <= 20; ++n) {
        for (unsigned d = 1; d < n; ++d) {
            const auto r = mixing_ratio(n, d);
            const double q = r.actual / r.predicted;
            violations += (q >= 0.5 && q <= 2.0) ? 0 : 1;
        }
    }
    out.add("analytic.registry_mixing_ratio", violations, 0);
}

// ------------------------------------------------------------------- search

/// Residual norm of `state` outside span{axis, normalized marked part of axis}.
double two_level_residual(const StateVector &state, const StateVector &axis,
                          const TargetSpec &targets) {
    const std::size_t dim = state.size();
    std::vector<Complex> e1(dim);
    std::vector<Complex> e2(dim);
    double marked = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
        if (is_marked(targets, k)) {
            e1[k] = axis[k];
            marked += std::norm(axis[k]);
        } else {
            e2[k] = axis[k];
        }
    }
    const double rest = 1.0 - marked;
    auto coeff = [&](const std::vector<Complex> &e) {
        Complex c = 0.0;
        for (std::size_t k = 0; k < dim; ++k) {
            c += std::conj(e[k]) * state[k];
        }
        return c;
    };
    const bool use1 = marked > 1e-300;
    const bool use2 = rest > 1e-14;
    if (use1) {
        for (auto &v : e1) v /= std::sqrt(marked);
    }
    if (use2) {
        for (auto &v : e2) v /= std::sqrt(rest);
    }
    const Complex c1 = use1 ? coeff(e1) : 0.0;
    const Complex c2 = use2 ? coeff(e2) : 0.0;
    double residual = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
        residual += std::norm(state[k] - c1 * e1[k] - c2 * e2[k]);
    }
    return std::sqrt(residual);
}

void search_suites(const VerifyConfig &cfg, Suites &out) {
    RunOptions opts;
    opts.cap = cfg.cap;
    const unsigned n_hi = std::min(cfg.max_n, 12U);

    double grover = 0.0;
    double prep = 0.0;
    double plus = 0.0;
    double same_as_grover = 0.0;
    double trivial = 0.0;
    for (unsigned n = 2; n <= n_hi; ++n) {
        std::vector<std::vector<double>> grover_by_weight(n + 1);
        for (std::uint64_t k = 0; k < dimension(n); ++k) {
            const BasisIndex target{k, n};
            const auto g = run_grover(target, opts);
            grover = std::max(grover, verify_against_analytic(g));
            const auto p = run_grover_plus(target, opts);
            plus = std::max(plus, verify_against_analytic(p));
            for (const auto *traj : {&g, &p}) {
                prep = std::max(prep, std::abs(traj->success_by_iteration[0] -
                                               predicted_success(plan_theta(traj->plan), 0)));
            }
            const unsigned w = hamming_weight(target);
            if (2 * w == n) {
                double gap = g.success_by_iteration.size() == p.success_by_iteration.size() ? 0.0 : 1.0;
                for (std::size_t t = 0; gap == 0.0 && t < g.success_by_iteration.size(); ++t) {
                    gap = std::max(gap, std::abs(g.success_by_iteration[t] - p.success_by_iteration[t]));
                }
                same_as_grover = std::max(same_as_grover, gap);
            }
            if (w == 0 || w == n) {
                trivial = std::max(trivial, static_cast<double>(p.queries) +
                                                std::abs(p.success_by_iteration[0] - 1.0));
            }
        }
    }
    out.add("search.grover_matches_closed_form", grover, cfg.tol);
    out.add("search.grover_plus_matches_closed_form", plus, cfg.tol);
    out.add("search.preparation_entry", prep, 1e-12);
    out.add("search.grover_plus_half_weight_identical", same_as_grover, 0.0);
    out.add("search.grover_plus_extreme_weight_no_queries", trivial, cfg.tol);

    double direct = 0.0;
    for (unsigned n = 2; n <= std::min(n_hi, 10U); ++n) {
        for (unsigned d = 0; d <= n; ++d) {
            RunOptions direct_opts = opts;
            direct_opts.direct_preparation = true;
            const BasisIndex target{lowest_index_of_weight(d), n};
            const auto a = run_grover_plus(target, opts);
            const auto b = run_grover_plus(target, direct_opts);
            for (std::size_t t = 0; t < a.success_by_iteration.size(); ++t) {
                direct = std::max(direct, std::abs(a.success_by_iteration[t] - b.success_by_iteration[t]));
            }
        }
    }
    out.add("search.direct_preparation_agrees", direct, 1e-12);

    double dicke = 0.0;
    double fidelity = 0.0;
    double symmetry = 0.0;
    for (unsigned n = 1; n <= n_hi; ++n) {
        for (unsigned d = 0; d <= n; ++d) {
            RunOptions sym_opts = opts;
            sym_opts.observer = [&](std::uint64_t, const StateVector &state) {
                std::vector<Complex> first(n + 1);
                std::vector<bool> seen(n + 1, false);
                for (std::size_t k = 0; k < state.size(); ++k) {
                    const auto w = static_cast<unsigned>(std::popcount(k));
                    if (!seen[w]) {
                        seen[w] = true;
                        first[w] = state[k];
                    } else {
                        symmetry = std::max(symmetry, std::abs(state[k] - first[w]));
                    }
                }
            };
            const auto traj = run_dicke(n, d, sym_opts);
            dicke = std::max(dicke, verify_against_analytic(traj));
            fidelity = std::max(fidelity, std::abs(traj.final_state_overlap -
                                                   traj.success_by_iteration.back()));
        }
    }
    out.add("search.dicke_matches_closed_form", dicke, cfg.tol);
    out.add("search.dicke_fidelity_equals_class_probability", fidelity, 1e-12);
    out.add("search.dicke_amplitudes_uniform_within_class", symmetry, 1e-12);

    double closure = 0.0;
    for (unsigned n = 2; n <= std::min(n_hi, 10U); ++n) {
        for (unsigned d = 0; d <= n; ++d) {
            const BasisIndex target{lowest_index_of_weight(d), n};
            const auto grover_axis = prepare_biased_superposition(n, PolarAngle::unbiased(), cfg.cap);
            const auto plus_axis = prepare_biased_superposition(n, optimal_zeta(n, d), cfg.cap);
            auto check = [&](const StateVector &axis, TargetSpec targets) {
                RunOptions o = opts;
                o.observer = [&, targets](std::uint64_t, const StateVector &s) {
                    closure = std::max(closure, two_level_residual(s, axis, targets));
                };
                return o;
            };
            (void)run_grover(target, check(grover_axis, SingleIndex{target.value()}));
            (void)run_grover_plus(target, check(plus_axis, SingleIndex{target.value()}));
            (void)run_dicke(n, d, check(plus_axis, WeightClass{d}));
        }
    }
    out.add("search.two_level_closure", closure, cfg.tol);

    double modified = 0.0;
    for (unsigned n = 2; n <= 16; ++n) {
        for (unsigned d = 1; d < n; ++d) {
            if (registry_qubits(n, d).qubits > n_hi) {
                continue;
            }
            for (std::uint64_t k : {std::uint64_t{0}, binomial(n, d) - 1}) {
                modified = std::max(modified, verify_against_analytic(run_modified_grover(n, d, k, opts)));
            }
        }
    }
    out.add("search.modified_matches_closed_form", modified, cfg.tol);

    double violations = 0;
    double parity = 0;
    for (unsigned n = 8; n <= 16; ++n) {
        const auto g = grover_plan(n, 0).t_star;
        for (unsigned d = 0; d <= n; ++d) {
            const auto p = grover_plus_plan(n, d).t_star;
            if (2 * d != n) {
                const bool strict = d <= 1 || d + 1 >= n;
                violations += (strict ? p < g : p <= g) ? 0 : 1;
            }
            if (d > 0 && d < n) {
                const double q = static_cast<double>(modified_grover_plan(n, d).t_star) /
                                 static_cast<double>(p);
                parity += (q >= 0.25 && q <= 4.0) ? 0 : 1;
            }
        }
    }
    out.add("search.grover_plus_never_needs_more_queries", violations, 0);
    out.add("search.modified_query_parity", parity, 0);

    // t_star(n) for a single flipped bit grows like sqrt(n).
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const std::vector<unsigned> sizes{16, 36, 64, 100};
    for (unsigned n : sizes) {
        const double x = std::log(static_cast<double>(n));
        const double y = std::log(static_cast<double>(grover_plus_plan(n, 1).t_star));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double m = static_cast<double>(sizes.size());
    const double exponent = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    out.add("search.single_flip_sqrt_scaling", std::abs(exponent - 0.5), 0.1);
}

} // namespace

std::vector<SuiteResult> run_verification(const VerifyConfig &cfg) {
    check_qubit_cap(cfg.max_n, cfg.cap);
    if (cfg.max_n == 0) {
        throw DomainError("--max-n must be at least 1");
    }
    Suites suites;
    bitstring_suites(cfg, suites);
    statevec_suites(cfg, suites);
    gates_suites(cfg, suites);
    analytic_suites(cfg, suites);
    search_suites(cfg, suites);
    return suites.take();
}

} // namespace gplus
