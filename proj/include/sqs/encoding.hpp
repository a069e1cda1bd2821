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
 * Basis encoding of classical datasets into preparation circuits whose
 * entanglement map has at most two rows: the first n-1 qubits stay in
 * uniform superposition and only the tail qubit (n-1) is ever a target of
 * a controlled gate.
 *
 * A dataset is built by starting from H on every qubit and removing each
 * complement state b.t (prefix b, tail bit t) with a block controlled on
 * the prefix pattern:
 *   t = 1:  MCH on the tail            (tail |+> -> |0>)
 *   t = 0:  MCZ then MCH on the tail   (tail |+> -> |-> -> |1>)
 * The surviving partner b.(1-t) ends up with twice the base probability.
 */
#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "sqs/circuit.hpp"

namespace sqs {

struct Dataset {
    int bit_length = 0;
    std::vector<std::string> entries;
};

/// Validates entries (non-empty, equal length, distinct bitstrings).
[[nodiscard]] Dataset make_dataset(std::vector<std::string> entries);

/// Item i of N receives the little-endian bitstring of i on ceil(log2 N) bits
/// (at least one bit), so the first 2^(n-1) strings end in 0.
[[nodiscard]] Dataset basis_map(std::size_t item_count);

enum class TailOp { Hadamard, ZThenHadamard };

struct Removal {
    std::string state;
    /// Prefix qubits whose required control value is 0 (X-conjugated in the lowered form).
    std::vector<int> zero_controls;
    TailOp tail_op = TailOp::Hadamard;
};

struct RemovalPlan {
    int bit_length = 0;
    std::vector<Removal> removals;
};

/// Complement states in ascending index order. Throws PartnerConflict listing
/// every prefix whose two completions are both missing.
[[nodiscard]] RemovalPlan plan_removals(const Dataset &dataset);

/// H on every qubit followed by one removal block per complement state.
[[nodiscard]] Circuit encode(const Dataset &dataset);

/// Appends the removal block for `bits`. The state must be present and its
/// prefix's tail must be in equal superposition (partner present).
[[nodiscard]] Circuit pop_state(const Circuit &circuit, const std::string &bits);

/// Appends a block that adds `bits` to the support. The prefix must be present
/// with only the partner completion.
[[nodiscard]] Circuit add_state(const Circuit &circuit, const std::string &bits);

/// Gates appended for one removal, in application order.
[[nodiscard]] std::vector<GateOp> removal_block(const std::string &bits);

struct EncodingReport {
    bool ok = false;
    /// Dataset entries with zero probability.
    std::vector<std::string> missing;
    /// Nonzero-probability states outside the dataset.
    std::vector<std::string> extra;
    /// Entries carrying twice the uniform probability 1/2^n.
    std::vector<std::string> doubled;
    /// Probability of every supported state.
    std::map<std::string, double> profile;
};

[[nodiscard]] EncodingReport verify_encoding(const Circuit &circuit, const Dataset &dataset);

/// Bitstrings with probability above `threshold` after simulating the circuit.
[[nodiscard]] std::vector<std::string> simulated_support(const Circuit &circuit,
                                                         double threshold = 1e-12);

} // namespace sqs
