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
 * Factored state: the global state is kept as a tensor product of small
 * registers, each a dense StateVector over a disjoint set of qubits.
 *
 * A gate merges the registers it touches. Controls whose qubit is in a
 * definite computational basis state are resolved classically and never
 * cause a merge, so locked search qubits stay as one-qubit registers.
 * Measurement factors any qubit that became definite back out into its own
 * register.
 */
#pragma once

#include <span>
#include <vector>

#include "sqs/circuit.hpp"
#include "sqs/random.hpp"
#include "sqs/state_vector.hpp"

namespace sqs {

class FactoredState {
  public:
    struct Register {
        /// Global qubit ids; position j is local qubit j of `state`.
        std::vector<int> qubits;
        StateVector state;
    };

    /// |0...0> as `num_qubits` one-qubit registers. `register_limit` caps merges.
    explicit FactoredState(int num_qubits, int register_limit = kDefaultDenseLimit);
    /// Starts in |0...0> with the given grouping; groups must partition 0..n-1.
    FactoredState(int num_qubits, const std::vector<std::vector<int>> &groups,
                  int register_limit = kDefaultDenseLimit);

    [[nodiscard]] int num_qubits() const { return num_qubits_; }
    [[nodiscard]] int register_limit() const { return register_limit_; }
    [[nodiscard]] const std::vector<Register> &registers() const { return registers_; }
    [[nodiscard]] std::size_t num_registers() const { return registers_.size(); }
    [[nodiscard]] int register_of(int qubit) const;
    /// Size of the largest register.
    [[nodiscard]] int max_register_qubits() const;

    /// f_apply: merges touched registers when needed. Throws CapacityError
    /// if the merged register would exceed the limit.
    void apply(const GateOp &op);
    void run(const Circuit &circuit);

    /// Merges the registers holding `qubits` into one and returns its index.
    int merge(std::span<const int> qubits);

    [[nodiscard]] double prob_of_bit(int qubit, int bit) const;
    /// Joint probability of the pattern; independent registers multiply.
    [[nodiscard]] double pattern_probability(std::span<const Control> pattern) const;

    /// True when the qubit is in |0> or |1> (within 1e-12); writes the bit.
    [[nodiscard]] bool is_classical(int qubit, int *bit = nullptr) const;

    double collapse(int qubit, int bit);
    int measure(int qubit, Rng &rng);

    /// Moves every definite qubit of the register holding `qubit` into its own register.
    void split_classical(int qubit);

    /// Tensor product of all registers in global qubit order.
    [[nodiscard]] StateVector to_dense(int limit = kDefaultDenseLimit) const;

    [[nodiscard]] Histogram sample_counts(std::span<const int> qubits, std::size_t shots,
                                          Rng &rng) const;

    /// Throws ContractViolation if registers do not partition the qubits or are unnormalized.
    void check_invariants() const;

  private:
    void reindex();
    [[nodiscard]] int local_position(int qubit) const { return position_[qubit]; }

    int num_qubits_;
    int register_limit_;
    std::vector<Register> registers_;
    std::vector<int> owner_;
    std::vector<int> position_;
};

} // namespace sqs
