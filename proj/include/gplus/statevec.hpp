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
 * Dense n-qubit state vector and the primitive operations on it.
 */
#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "gplus/bitstring.hpp"
#include "gplus/target.hpp"

namespace gplus {

using Complex = std::complex<double>;

/// Default qubit cap for simulation (2^20 amplitudes, 16 MiB).
inline constexpr unsigned kDefaultQubitCap = 20;
/// No cap may be configured above this.
inline constexpr unsigned kHardQubitMax = 26;

/// Row-major 2x2 complex matrix {m00, m01, m10, m11}.
struct Matrix2 {
    std::array<Complex, 4> m{};

    [[nodiscard]] Complex operator()(std::size_t row, std::size_t col) const {
        return m[2 * row + col];
    }
    [[nodiscard]] Matrix2 adjoint() const;
    [[nodiscard]] Matrix2 operator*(const Matrix2 &rhs) const;
    /// Largest elementwise deviation of G^dagger G from the identity.
    [[nodiscard]] double unitarity_error() const;
};

/**
 * Dense array of 2^n complex amplitudes.
 *
 * Amplitude k belongs to basis state |k>, with qubit a (1-based) stored in
 * bit a-1 of k. A StateVector has a single writer; a finished vector may be
 * shared read-only.
 */
class StateVector {
  public:
    /**
     * Prepare |j>.
     * @param cap qubit cap for this allocation (at most kHardQubitMax).
     * @throws ResourceError if n exceeds the cap or the cap exceeds the hard max.
     * @throws DomainError if n == 0 or j >= 2^n.
     */
    static StateVector init_basis(unsigned n, std::uint64_t j, unsigned cap = kDefaultQubitCap);

    [[nodiscard]] unsigned num_qubits() const noexcept { return n_; }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept { return amps_; }
    [[nodiscard]] std::span<Complex> amplitudes() noexcept { return amps_; }
    [[nodiscard]] Complex operator[](std::size_t k) const { return amps_[k]; }

    [[nodiscard]] double norm_squared() const noexcept;

    /**
     * Apply `gate` to every qubit (G^{\otimes n}) in place, one qubit at a
     * time over strided index pairs.
     * @throws DomainError if `gate` is not unitary within 1e-12.
     */
    void apply_single_qubit_all(const Matrix2 &gate);

  private:
    StateVector(unsigned n, std::vector<Complex> amps) : n_{n}, amps_{std::move(amps)} {}

    unsigned n_;
    std::vector<Complex> amps_;
};

/// Throw ResourceError unless n <= cap <= kHardQubitMax.
void check_qubit_cap(unsigned n, unsigned cap);

/// <a|b>, conjugating a.
/// @throws UsageError on mismatched qubit counts.
[[nodiscard]] Complex overlap(const StateVector &a, const StateVector &b);

/// Total probability of measuring any of `targets`.
/// @throws DomainError on an empty or out-of-range target set.
[[nodiscard]] double probability_of(const StateVector &state, const TargetSpec &targets);

} // namespace gplus
