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
 * Query-complexity comparison between linear scan, Grover and the structured
 * search on synthetic scenarios.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sqs/circuit.hpp"

namespace sqs {

enum class Scenario {
    /// H on every qubit, target '01' repeated.
    Full,
    /// Every n-bit string except 1...1, target 0...0.
    TwoRow,
    /// H on every qubit then CZ(q_i -> q_{i+1}), target '01' repeated.
    Chain,
};

[[nodiscard]] Scenario parse_scenario(const std::string &name);
[[nodiscard]] std::string scenario_name(Scenario s);

/// Preparation circuit and target of a scenario at n qubits.
[[nodiscard]] Circuit scenario_circuit(Scenario s, int n);
[[nodiscard]] std::string scenario_target(Scenario s, int n);

struct ComplexityRow {
    int n = 0;
    std::uint64_t items = 0;
    double classical_expected = 0.0;
    double classical_measured = 0.0;
    int grover = 0;
    int sqs = 0;
    int em_rows = 0;
};

/// One row per n. The classical column is N/2; the measured mean over
/// `trials` seeded scans is reported alongside. Grover is k(N); sqs is the
/// measured exact-mode oracle-call count.
[[nodiscard]] std::vector<ComplexityRow> complexity_table(const std::vector<int> &n_values,
                                                          Scenario scenario,
                                                          std::uint64_t seed = 0,
                                                          std::size_t trials = 1000);

/// Header "N,classical,grover,sqs".
[[nodiscard]] std::string table_csv(const std::vector<ComplexityRow> &rows);
/// Header "n,log2_N,classical_expected,classical_measured,grover,sqs,em_rows".
[[nodiscard]] std::string plot_csv(const std::vector<ComplexityRow> &rows);

} // namespace sqs
