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
#include "gplus/statevec.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <variant>

#include "gplus/error.hpp"

namespace gplus {

Matrix2 Matrix2::adjoint() const {
    return {{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}};
}

Matrix2 Matrix2::operator*(const Matrix2 &rhs) const {
    Matrix2 out;
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            out.m[2 * r + c] = (*this)(r, 0) * rhs(0, c) + (*this)(r, 1) * rhs(1, c);
        }
    }
    return out;
}

double Matrix2::unitarity_error() const {
    const Matrix2 product = adjoint() * (*this);
    double err = 0.0;
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            const Complex expected = (r == c) ? 1.0 : 0.0;
            err = std::max(err, std::abs(product(r, c) - expected));
        }
    }
    return err;
}

void check_qubit_cap(unsigned n, unsigned cap) {
    if (cap > kHardQubitMax) {
        throw ResourceError("qubit cap " + std::to_string(cap) + " exceeds hard maximum " +
                            std::to_string(kHardQubitMax));
    }
    if (n > cap) {
        throw ResourceError(std::to_string(n) + " qubits exceeds the configured cap of " +
                            std::to_string(cap));
    }
}

StateVector StateVector::init_basis(unsigned n, std::uint64_t j, unsigned cap) {
    if (n == 0) {
        throw DomainError("a state vector needs at least one qubit");
    }
    check_qubit_cap(n, cap);
    const std::uint64_t dim = dimension(n);
    if (j >= dim) {
        throw DomainError("basis index " + std::to_string(j) + " out of range for " +
                          std::to_string(n) + " qubits");
    }
    std::vector<Complex> amps(dim);
    amps[j] = 1.0;
    return StateVector{n, std::move(amps)};
}

double StateVector::norm_squared() const noexcept {
    double sum = 0.0;
    for (const auto &a : amps_) {
        sum += std::norm(a);
    }
    return sum;
}

void StateVector::apply_single_qubit_all(const Matrix2 &gate) {
    if (gate.unitarity_error() > 1e-12) {
        throw DomainError("single-qubit gate is not unitary");
    }
    const Complex g00 = gate(0, 0);
    const Complex g01 = gate(0, 1);
    const Complex g10 = gate(1, 0);
    const Complex g11 = gate(1, 1);
    const std::size_t dim = amps_.size();
    for (unsigned q = 0; q < n_; ++q) {
        const std::size_t stride = std::size_t{1} << q;
        for (std::size_t block = 0; block < dim; block += 2 * stride) {
            for (std::size_t i = block; i < block + stride; ++i) {
                const Complex a0 = amps_[i];
                const Complex a1 = amps_[i + stride];
                amps_[i] = g00 * a0 + g01 * a1;
                amps_[i + stride] = g10 * a0 + g11 * a1;
            }
        }
    }
}

Complex overlap(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw UsageError("overlap of states with different qubit counts");
    }
    Complex sum = 0.0;
    const auto lhs = a.amplitudes();
    const auto rhs = b.amplitudes();
    for (std::size_t k = 0; k < lhs.size(); ++k) {
        sum += std::conj(lhs[k]) * rhs[k];
    }
    return sum;
}

double probability_of(const StateVector &state, const TargetSpec &targets) {
    validate_targets(targets, state.num_qubits());
    const auto amps = state.amplitudes();
    if (const auto *single = std::get_if<SingleIndex>(&targets)) {
        return std::norm(amps[single->index]);
    }
    double sum = 0.0;
    for (std::size_t k = 0; k < amps.size(); ++k) {
        if (is_marked(targets, k)) {
            sum += std::norm(amps[k]);
        }
    }
    return sum;
}

} // namespace gplus
