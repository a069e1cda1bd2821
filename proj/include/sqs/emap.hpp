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
 * Entanglement map: data qubits partitioned into ordered rows by
 * controlled-gate dependency. A qubit that is never the target of a
 * controlled gate sits in row 1; otherwise its row is one past the deepest
 * row among all controls of gates targeting it (the minimal assignment).
 */
#pragma once

#include <string>
#include <vector>

#include "sqs/circuit.hpp"

namespace sqs {

struct EntanglementMap {
    /// rows[r] holds the qubits of row r+1 in ascending order.
    std::vector<std::vector<int>> rows;

    [[nodiscard]] int num_rows() const { return static_cast<int>(rows.size()); }
    [[nodiscard]] int num_qubits() const;
    /// 1-based row of `qubit`, or 0 when absent.
    [[nodiscard]] int row_of(int qubit) const;
    bool operator==(const EntanglementMap &) const = default;
};

/// Throws CyclicDependency, ReEntanglement (a qubit targeted by a controlled
/// gate after it served as a control), or InvalidGate for two-target gates.
[[nodiscard]] EntanglementMap build_entanglement_map(const Circuit &circuit);

/// Number of qubits in rows 1..r-1; valid for 1 <= r <= l+1.
[[nodiscard]] int cumulative_size(const EntanglementMap &em, int r);

struct EmDiff {
    int qubit = 0;
    int expected_row = 0;
    int actual_row = 0;
};

struct EmValidation {
    bool valid = false;
    std::vector<EmDiff> misplaced;
    std::vector<std::string> problems;
};

[[nodiscard]] EmValidation validate_entanglement_map(const EntanglementMap &em,
                                                     const Circuit &circuit);

/// {"rows": [[q, ...], ...]}
[[nodiscard]] std::string em_to_json(const EntanglementMap &em);
[[nodiscard]] EntanglementMap em_from_json(const std::string &text);

} // namespace sqs
