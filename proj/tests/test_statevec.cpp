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
#include <random>

#include "gplus/error.hpp"
#include "gplus/gates.hpp"
#include "gplus/statevec.hpp"
#include "oracles.hpp"

using namespace gplus;

namespace {

StateVector random_state(unsigned n, std::uint64_t seed) {
    std::mt19937_64 rng{seed};
    std::normal_distribution<double> gauss;
    auto s = StateVector::init_basis(n, 0);
    double norm = 0.0;
    for (auto &a : s.amplitudes()) {
        a = {gauss(rng), gauss(rng)};
        norm += std::norm(a);
    }
    for (auto &a : s.amplitudes()) {
        a /= std::sqrt(norm);
    }
    return s;
}

} // namespace

TEST_CASE("init_basis") {
    auto s = StateVector::init_basis(2, 0);
    CHECK(s.size() == 4);
    CHECK(s[0] == Complex{1.0});
    CHECK(s[1] == Complex{0.0});
    auto one = StateVector::init_basis(1, 1);
    CHECK(one[0] == Complex{0.0});
    CHECK(one[1] == Complex{1.0});
    auto five = StateVector::init_basis(3, 5);
    for (std::size_t k = 0; k < 8; ++k) {
        CHECK(five[k] == Complex{k == 5 ? 1.0 : 0.0});
    }
}

TEST_CASE("init_basis errors") {
    CHECK_THROWS_AS(StateVector::init_basis(21, 0), ResourceError);
    CHECK_THROWS_AS(StateVector::init_basis(4, 0, 27), ResourceError);
    CHECK_THROWS_AS(StateVector::init_basis(3, 8), DomainError);
    CHECK_THROWS_AS(StateVector::init_basis(0, 0), DomainError);
    CHECK_NOTHROW(StateVector::init_basis(3, 0, 3));
}

TEST_CASE("standard Hadamard on |0...0> gives the uniform superposition") {
    for (unsigned n = 1; n <= 10; ++n) {
        auto s = StateVector::init_basis(n, 0);
        s.apply_single_qubit_all(generalized_hadamard(PolarAngle::unbiased()));
        const double expected = std::exp2(-0.5 * n);
        for (std::size_t k = 0; k < s.size(); ++k) {
            REQUIRE(std::abs(s[k] - Complex{expected}) < 1e-14);
        }
    }
}

TEST_CASE("identity gate leaves the state alone") {
    const auto original = random_state(5, 3);
    auto s = original;
    s.apply_single_qubit_all(Matrix2{{1.0, 0.0, 0.0, 1.0}});
    for (std::size_t k = 0; k < s.size(); ++k) {
        CHECK(s[k] == original[k]);
    }
}

TEST_CASE("H_zeta on |00> matches the explicit 4x4 tensor product") {
    const double zeta = std::numbers::pi / 3;
    const auto dense = oracle::biased_hadamard_n(2, zeta);
    auto s = StateVector::init_basis(2, 0);
    s.apply_single_qubit_all(generalized_hadamard(PolarAngle{zeta}));
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(std::abs(s[k] - Complex{dense(k, 0)}) < 1e-15);
    }
}

TEST_CASE("non-unitary gate is rejected") {
    auto s = StateVector::init_basis(2, 0);
    CHECK_THROWS_AS(s.apply_single_qubit_all(Matrix2{{1.0, 1.0, 0.0, 1.0}}), DomainError);
    CHECK_THROWS_AS(s.apply_single_qubit_all(Matrix2{{1.0 + 1e-9, 0.0, 0.0, 1.0}}), DomainError);
}

TEST_CASE("complex gates are applied with full complex arithmetic") {
    // S = diag(1, i) on every qubit of the uniform state.
    auto s = StateVector::init_basis(3, 0);
    s.apply_single_qubit_all(generalized_hadamard(PolarAngle::unbiased()));
    s.apply_single_qubit_all(Matrix2{{1.0, 0.0, 0.0, Complex{0.0, 1.0}}});
    const double amp = std::exp2(-1.5);
    for (std::uint64_t k = 0; k < 8; ++k) {
        const Complex phase = std::pow(Complex{0.0, 1.0}, static_cast<int>(oracle::count_ones(k)));
        CHECK(std::abs(s[k] - amp * phase) < 1e-15);
    }
}

TEST_CASE("overlap") {
    const auto s = random_state(4, 11);
    CHECK(std::abs(overlap(s, s) - Complex{1.0}) < 1e-14);
    CHECK(overlap(StateVector::init_basis(1, 0), StateVector::init_basis(1, 1)) == Complex{0.0});
    for (unsigned n = 1; n <= 8; ++n) {
        auto uniform = StateVector::init_basis(n, 0);
        uniform.apply_single_qubit_all(generalized_hadamard(PolarAngle::unbiased()));
        for (std::uint64_t k = 0; k < dimension(n); k += 3) {
            CHECK(std::abs(overlap(uniform, StateVector::init_basis(n, k)) -
                           Complex{std::exp2(-0.5 * n)}) < 1e-14);
        }
    }
    // Conjugation is on the left argument.
    auto a = StateVector::init_basis(1, 0);
    a.amplitudes()[0] = Complex{0.0, 1.0};
    CHECK(overlap(a, StateVector::init_basis(1, 0)) == Complex{0.0, -1.0});
    CHECK_THROWS_AS((void)overlap(StateVector::init_basis(2, 0), StateVector::init_basis(3, 0)),
                    UsageError);
}

TEST_CASE("probability_of") {
    auto uniform = StateVector::init_basis(5, 0);
    uniform.apply_single_qubit_all(generalized_hadamard(PolarAngle::unbiased()));
    CHECK(probability_of(uniform, SingleIndex{7}) == doctest::Approx(1.0 / 32).epsilon(1e-14));

    IndexSet all;
    for (std::uint64_t k = 0; k < 32; ++k) {
        all.indices.push_back(k);
    }
    all.indices.push_back(3); // duplicates count once
    CHECK(std::abs(probability_of(uniform, all) - 1.0) < 1e-14);

    CHECK_THROWS_AS((void)probability_of(uniform, IndexSet{}), DomainError);
    CHECK_THROWS_AS((void)probability_of(uniform, SingleIndex{32}), DomainError);
    CHECK_THROWS_AS((void)probability_of(uniform, WeightClass{6}), DomainError);
}

TEST_CASE("weight-1 class probability of H_{pi/3}^4 |0000>") {
    const double zeta = std::numbers::pi / 3;
    // Oracle: dense operator column 0, summed over indices with one set bit.
    const auto dense = oracle::biased_hadamard_n(4, zeta);
    double expected = 0.0;
    for (std::size_t k = 0; k < 16; ++k) {
        if (oracle::count_ones(k) == 1) {
            expected += dense(k, 0) * dense(k, 0);
        }
    }
    REQUIRE(std::abs(expected - 4.0 * 27.0 / 256.0) < 1e-15);

    auto s = StateVector::init_basis(4, 0);
    s.apply_single_qubit_all(generalized_hadamard(PolarAngle{zeta}));
    CHECK(std::abs(probability_of(s, WeightClass{1}) - 4.0 * 27.0 / 256.0) < 1e-14);
}

TEST_CASE("probabilities over a partition sum to one") {
    for (unsigned n = 1; n <= 10; ++n) {
        const auto s = random_state(n, 100 + n);
        double total = 0.0;
        for (unsigned w = 0; w <= n; ++w) {
            total += probability_of(s, WeightClass{w});
        }
        CHECK(std::abs(total - 1.0) < 1e-12);
    }
}

TEST_CASE("involutory gate applied twice is the identity") {
    for (unsigned n = 1; n <= 8; ++n) {
        const auto original = random_state(n, n);
        for (double zeta : {0.0, 0.3, 1.0, std::numbers::pi / 2, 2.7, std::numbers::pi}) {
            auto s = original;
            const auto g = generalized_hadamard(PolarAngle{zeta});
            s.apply_single_qubit_all(g);
            s.apply_single_qubit_all(g);
            for (std::size_t k = 0; k < s.size(); ++k) {
                REQUIRE(std::abs(s[k] - original[k]) < 1e-12);
            }
        }
    }
}

TEST_CASE("norm survives long operation sequences") {
    const unsigned n = 8;
    auto s = StateVector::init_basis(n, 0);
    const auto axis = prepare_biased_superposition(n, PolarAngle{0.9});
    std::mt19937_64 rng{5};
    std::uniform_real_distribution<double> angle{0.0, std::numbers::pi};
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        switch (i % 3) {
        case 0:
            s.apply_single_qubit_all(generalized_hadamard(PolarAngle{angle(rng)}));
            break;
        case 1:
            apply_phase_oracle(s, WeightClass{static_cast<unsigned>(i) % (n + 1)});
            break;
        default:
            apply_reflection_about(s, axis);
        }
        worst = std::max(worst, std::abs(s.norm_squared() - 1.0));
    }
    CHECK(worst < 1e-10);
}
