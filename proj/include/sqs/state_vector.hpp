// Copyright 2026 The sqsim Authors

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
 * Dense statevector over k qubits, little-endian (qubit 0 is the least
 * significant bit of the amplitude index).
 */
#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sqs/circuit.hpp"
#include "sqs/kernels.hpp"
#include "sqs/random.hpp"

namespace sqs {

/// Dense backends refuse states above this many qubits unless configured otherwise.
inline constexpr int kDefaultDenseLimit = 26;

/// Bitstring -> count. Keys list the measured qubits in request order.
using Histogram = std::map<std::string, std::size_t>;

class StateVector {
  public:
    /// |0...0> on `num_qubits` qubits. Throws CapacityError above `limit`.
    explicit StateVector(int num_qubits, int limit = kDefaultDenseLimit);

    /// Wraps raw amplitudes; size must be a power of two.
    static StateVector from_amplitudes(std::vector<Complex> amps);

    [[nodiscard]] int num_qubits() const { return num_qubits_; }
    [[nodiscard]] std::size_t size() const { return amps_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const { return amps_; }
    [[nodiscard]] std::span<Complex> mutable_amplitudes() { return amps_; }
    [[nodiscard]] Complex amplitude(std::size_t index) const { return amps_[index]; }

    /// Applies a validated gate; controlled ops act only where all control bits match.
    void apply(const GateOp &op);
    void run(const Circuit &circuit);

    [[nodiscard]] double prob_of_bit(int qubit, int bit) const;
    /// Joint probability that every listed qubit holds its listed value.
    [[nodiscard]] double pattern_probability(std::span<const Control> pattern) const;
    [[nodiscard]] std::vector<double> probabilities() const;
    [[nodiscard]] double norm_squared() const;

    /// Projects `qubit` onto `bit` and renormalizes; returns the branch probability.
    /// Throws InvalidCollapse when the branch has (numerically) zero weight.
    double collapse(int qubit, int bit);
    /// Samples `qubit`, collapses, returns the outcome.
    int measure(int qubit, Rng &rng);

    [[nodiscard]] Histogram sample_counts(std::span<const int> qubits, std::size_t shots,
                                          Rng &rng) const;

  private:
    StateVector() = default;
    int num_qubits_ = 0;
    std::vector<Complex> amps_;
};

/// Branch weights below this are treated as zero.
inline constexpr double kZeroProbability = 1e-15;

[[nodiscard]] StateVector init_state(int num_qubits, int limit = kDefaultDenseLimit);
[[nodiscard]] StateVector apply(StateVector state, const GateOp &op);
[[nodiscard]] std::pair<int, StateVector> measure(StateVector state, int qubit, Rng &rng);
[[nodiscard]] double prob_of_bit(const StateVector &state, int qubit, int bit);
[[nodiscard]] Histogram sample_counts(const StateVector &state, std::span<const int> qubits,
                                      std::size_t shots, Rng &rng);

/// Runs a circuit from |0...0>.
[[nodiscard]] StateVector simulate(const Circuit &circuit, int limit = kDefaultDenseLimit);

/// Row-major unitary of a gate sequence on `num_qubits` qubits (column j is the
/// image of basis state j). Intended for small checks.
[[nodiscard]] std::vector<Complex> sequence_unitary(const std::vector<GateOp> &ops,
                                                    int num_qubits);

/// Kernel-level gate application shared by the dense and factored backends.
/// `targets` and `controls` are positions inside `amps`, not global qubit ids.
void apply_gate_local(std::span<Complex> amps, const GateOp &op, const std::vector<int> &targets,
                      const std::vector<Control> &controls);

} // namespace sqs
