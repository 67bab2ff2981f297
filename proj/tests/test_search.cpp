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
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gplus/bitstring.hpp"
#include "gplus/error.hpp"
#include "gplus/gates.hpp"
#include "gplus/search.hpp"
#include "oracles.hpp"

using namespace gplus;
using std::numbers::pi;

namespace {

double max_abs_diff(const std::vector<double> &a, const std::vector<double> &b) {
    REQUIRE(a.size() == b.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

std::vector<double> closed_form(double theta, std::uint64_t queries) {
    std::vector<double> out;
    for (std::uint64_t t = 0; t <= queries; ++t) {
        out.push_back(predicted_success(theta, t));
    }
    return out;
}

/// Dense-matrix trajectory of single-target search from H_zeta^n|0>.
std::vector<double> dense_single_target(unsigned n, double zeta, std::uint64_t k, std::size_t queries) {
    const std::size_t dim = std::size_t{1} << n;
    const auto prep = oracle::biased_hadamard_n(n, zeta);
    const auto start = oracle::matvec(prep, oracle::unit_vector(dim, 0));
    std::vector<bool> marked(dim, false);
    marked[k] = true;
    return oracle::dense_trajectory(start, start, marked, queries);
}

} // namespace

TEST_CASE("to_string") {
    CHECK(to_string(Algorithm::Grover) == "grover");
    CHECK(to_string(Algorithm::GroverPlus) == "grover-plus");
    CHECK(to_string(Algorithm::Dicke) == "dicke");
    CHECK(to_string(Algorithm::Modified) == "modified");
}

TEST_CASE("run_grover on two qubits") {
    const auto traj = run_grover(BasisIndex{3, 2});
    CHECK(traj.queries == 1);
    REQUIRE(traj.success_by_iteration.size() == 2);
    CHECK(std::abs(traj.success_by_iteration[0] - 0.25) < 1e-15);
    CHECK(std::abs(traj.success_by_iteration[1] - 1.0) < 1e-14);
    CHECK(max_abs_diff(traj.success_by_iteration, dense_single_target(2, pi / 2, 3, 1)) < 1e-14);
    CHECK(std::abs(traj.final_state_overlap - 1.0) < 1e-14);
}

TEST_CASE("run_grover is independent of the target") {
    for (unsigned n = 2; n <= 6; ++n) {
        const auto ref = run_grover(BasisIndex{0, n}).success_by_iteration;
        for (std::uint64_t k = 1; k < dimension(n); ++k) {
            const auto traj = run_grover(BasisIndex{k, n});
            REQUIRE(max_abs_diff(traj.success_by_iteration, ref) < 1e-12);
        }
    }
}

TEST_CASE("run_grover on ten qubits") {
    const auto traj = run_grover(BasisIndex{0, 10});
    CHECK(traj.queries == 25);
    const double theta = std::asin(1.0 / 32);
    CHECK(std::abs(traj.success_by_iteration.back() - std::pow(std::sin(51 * theta), 2)) < 1e-10);
    CHECK(verify_against_analytic(traj) < 1e-10);
}

TEST_CASE("run_grover_plus matches a dense simulation") {
    for (unsigned n = 2; n <= 6; ++n) {
        for (std::uint64_t k = 0; k < dimension(n); ++k) {
            const unsigned d = hamming_weight(BasisIndex{k, n});
            RunOptions opts;
            opts.iterations = IterationPolicy::exactly(6);
            const auto traj = run_grover_plus(BasisIndex{k, n}, opts);
            const auto dense = dense_single_target(n, optimal_zeta(n, d).radians(), k, 6);
            REQUIRE(max_abs_diff(traj.success_by_iteration, dense) < 1e-12);
        }
    }
}

TEST_CASE("run_grover_plus closed form") {
    const auto traj = run_grover_plus(BasisIndex{1, 4});
    const double theta = std::asin(std::sqrt(27.0 / 256.0));
    CHECK(std::abs(plan_theta(traj.plan) - theta) < 1e-15);
    CHECK(traj.queries == 2);
    CHECK(max_abs_diff(traj.success_by_iteration, closed_form(theta, 2)) < 1e-12);
    CHECK(std::abs(traj.success_by_iteration[0] - 27.0 / 256.0) < 1e-15);
}

TEST_CASE("run_grover_plus at the extreme weights needs no queries") {
    for (unsigned n = 1; n <= 10; ++n) {
        for (std::uint64_t k : {std::uint64_t{0}, dimension(n) - 1}) {
            const auto traj = run_grover_plus(BasisIndex{k, n});
            CHECK(traj.queries == 0);
            CHECK(std::abs(traj.success_by_iteration[0] - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("run_grover_plus at half weight is Grover") {
    for (unsigned n = 2; n <= 10; n += 2) {
        for (std::uint64_t k = 0; k < dimension(n); ++k) {
            if (hamming_weight(BasisIndex{k, n}) != n / 2) continue;
            const auto gp = run_grover_plus(BasisIndex{k, n});
            const auto g = run_grover(BasisIndex{k, n});
            REQUIRE(gp.queries == g.queries);
            REQUIRE(gp.success_by_iteration == g.success_by_iteration);
        }
    }
}

TEST_CASE("direct preparation agrees with the base shift") {
    for (unsigned n = 2; n <= 8; ++n) {
        for (std::uint64_t k : {std::uint64_t{1}, dimension(n) - 2}) {
            RunOptions direct;
            direct.direct_preparation = true;
            const auto a = run_grover_plus(BasisIndex{k, n});
            const auto b = run_grover_plus(BasisIndex{k, n}, direct);
            CHECK(max_abs_diff(a.success_by_iteration, b.success_by_iteration) < 1e-12);
        }
    }
}

TEST_CASE("run_dicke on four qubits") {
    const auto traj = run_dicke(4, 2);
    CHECK(traj.queries == 1);
    CHECK(std::abs(traj.success_by_iteration[0] - 0.375) < 1e-15);
    CHECK(std::abs(traj.success_by_iteration[1] - 0.84375) < 1e-14);
    CHECK(verify_against_analytic(traj) < 1e-12);
    // The class projection of the final state is proportional to the Dicke state.
    CHECK(std::abs(traj.final_state_overlap - 0.84375) < 1e-14);
}

TEST_CASE("run_dicke matches a dense simulation") {
    for (unsigned n = 2; n <= 6; ++n) {
        for (unsigned d = 0; d <= n; ++d) {
            const std::size_t dim = std::size_t{1} << n;
            const double zeta = optimal_zeta(n, d).radians();
            const auto start = oracle::matvec(oracle::biased_hadamard_n(n, zeta), oracle::unit_vector(dim, 0));
            std::vector<bool> marked(dim);
            for (std::size_t k = 0; k < dim; ++k) marked[k] = oracle::count_ones(k) == d;
            RunOptions opts;
            opts.iterations = IterationPolicy::exactly(4);
            const auto traj = run_dicke(n, d, opts);
            REQUIRE(max_abs_diff(traj.success_by_iteration, oracle::dense_trajectory(start, start, marked, 4)) < 1e-12);
        }
    }
}

TEST_CASE("run_dicke edge weights") {
    const auto zero = run_dicke(5, 0);
    CHECK(zero.queries == 0);
    CHECK(std::abs(zero.success_by_iteration[0] - 1.0) < 1e-15);
    const auto one = run_dicke(8, 1);
    CHECK(verify_against_analytic(one) < 1e-10);
    CHECK(one.final_state_overlap == doctest::Approx(one.success_by_iteration.back()).epsilon(1e-12));
    CHECK_THROWS_AS((void)run_dicke(4, 5), DomainError);
}

TEST_CASE("run_dicke keeps the class amplitudes equal") {
    for (unsigned n = 3; n <= 8; ++n) {
        for (unsigned d = 1; d < n; ++d) {
            RunOptions opts;
            opts.extra_iterations = 2;
            double worst = 0.0;
            opts.observer = [&](std::uint64_t, const StateVector &state) {
                std::optional<Complex> ref;
                for (std::uint64_t k = 0; k < state.size(); ++k) {
                    if (oracle::count_ones(k) != d) continue;
                    if (!ref) ref = state[k];
                    worst = std::max(worst, std::abs(state[k] - *ref));
                }
            };
            (void)run_dicke(n, d, opts);
            REQUIRE(worst < 1e-12);
        }
    }
}

TEST_CASE("state stays in the two-dimensional span") {
    for (unsigned n = 2; n <= 7; ++n) {
        const std::uint64_t k = 1;
        const double zeta = optimal_zeta(n, 1).radians();
        const auto prepared = prepare_biased_superposition(n, PolarAngle{zeta});
        RunOptions opts;
        opts.extra_iterations = 3;
        double worst = 0.0;
        opts.observer = [&](std::uint64_t, const StateVector &state) {
            // Remove the target component, the rest must be parallel to the
            // prepared state with the target entry zeroed.
            const Complex a = state[k];
            double rest_norm = 0.0;
            Complex proj{0.0, 0.0};
            double prep_rest = 0.0;
            for (std::uint64_t j = 0; j < state.size(); ++j) {
                if (j == k) continue;
                rest_norm += std::norm(state[j]);
                proj += std::conj(prepared[j]) * state[j];
                prep_rest += std::norm(prepared[j]);
            }
            const double parallel = std::norm(proj) / prep_rest;
            worst = std::max(worst, std::abs(rest_norm - parallel));
            worst = std::max(worst, std::abs(std::norm(a) + rest_norm - 1.0));
        };
        (void)run_grover_plus(BasisIndex{k, n}, opts);
        REQUIRE(worst < 1e-12);
    }
}

TEST_CASE("run_modified_grover") {
    const auto traj = run_modified_grover(8, 2, 0);
    const double theta = std::asin(std::exp2(-2.5));
    CHECK(std::abs(plan_theta(traj.plan) - theta) < 1e-15);
    CHECK(std::get<OscillationPlan>(traj.plan).n == 5);
    CHECK(max_abs_diff(traj.success_by_iteration, closed_form(theta, traj.queries)) < 1e-12);

    CHECK_THROWS_AS((void)run_modified_grover(8, 2, 28), DomainError);
    CHECK_THROWS_AS((void)run_modified_grover(8, 0, 0), DomainError);
    CHECK_THROWS_AS((void)run_modified_grover(8, 8, 0), DomainError);

    // C(4, 1) = 4 fills a two-qubit registry exactly.
    const auto exact = run_modified_grover(4, 1, 3);
    CHECK(std::get<OscillationPlan>(exact.plan).n == 2);
    CHECK(std::abs(exact.success_by_iteration.back() - 1.0) < 1e-14);
}

TEST_CASE("modified search costs the same as Grover on the registry") {
    for (unsigned n = 4; n <= 12; ++n) {
        for (unsigned d = 1; d < n; ++d) {
            const auto reg = registry_qubits(n, d).qubits;
            const auto m = modified_grover_plan(n, d);
            REQUIRE(m.t_star == grover_plan(reg, 0).t_star);
        }
    }
}

TEST_CASE("every trajectory matches its closed form") {
    RunOptions opts;
    opts.extra_iterations = 5;
    for (unsigned n = 2; n <= 9; ++n) {
        for (std::uint64_t k = 0; k < dimension(n); k += 3) {
            REQUIRE(verify_against_analytic(run_grover(BasisIndex{k, n}, opts)) < 1e-10);
            REQUIRE(verify_against_analytic(run_grover_plus(BasisIndex{k, n}, opts)) < 1e-10);
        }
        for (unsigned d = 0; d <= n; ++d) {
            REQUIRE(verify_against_analytic(run_dicke(n, d, opts)) < 1e-10);
            if (d > 0 && d < n) {
                REQUIRE(verify_against_analytic(run_modified_grover(n, d, 0, opts)) < 1e-10);
            }
        }
    }
}

TEST_CASE("success declines past the planned count") {
    RunOptions opts;
    opts.extra_iterations = 3;
    const auto traj = run_grover(BasisIndex{5, 8}, opts);
    const std::uint64_t t = plan_t_star(traj.plan);
    REQUIRE(traj.success_by_iteration.size() == t + 4);
    CHECK(traj.queries == t + 3);
    CHECK(traj.success_by_iteration[t + 1] < traj.success_by_iteration[t]);
}

TEST_CASE("iteration policies") {
    RunOptions floor_opts;
    floor_opts.iterations = IterationPolicy::truncated();
    CHECK(run_grover(BasisIndex{0, 10}, floor_opts).queries == 24);
    RunOptions fixed;
    fixed.iterations = IterationPolicy::exactly(0);
    const auto none = run_grover(BasisIndex{0, 6}, fixed);
    CHECK(none.queries == 0);
    CHECK(verify_against_analytic(none) < 1e-15);
}

TEST_CASE("qubit cap") {
    RunOptions opts;
    opts.cap = 4;
    CHECK_THROWS_AS((void)run_grover(BasisIndex{0, 5}, opts), ResourceError);
    CHECK_THROWS_AS((void)run_dicke(5, 2, opts), ResourceError);
    CHECK_THROWS_AS((void)run_grover(BasisIndex{0, 21}), ResourceError);
}

TEST_CASE("Grover-Plus never needs more queries than Grover") {
    for (unsigned n = 1; n <= 40; ++n) {
        const auto g = grover_plan(n, 0).t_star;
        for (unsigned d = 0; d <= n; ++d) {
            REQUIRE(grover_plus_plan(n, d).t_star <= g);
        }
    }
}

TEST_CASE("single-flip queries grow like sqrt(n)") {
    std::vector<double> x;
    std::vector<double> y;
    for (unsigned n : {16U, 36U, 64U, 100U}) {
        x.push_back(std::log(n));
        y.push_back(std::log(static_cast<double>(grover_plus_plan(n, 1).t_star)));
    }
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) { mx += x[i]; my += y[i]; }
    mx /= x.size();
    my /= y.size();
    double num = 0, den = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        num += (x[i] - mx) * (y[i] - my);
        den += (x[i] - mx) * (x[i] - mx);
    }
    CHECK(std::abs(num / den - 0.5) < 0.1);
}
