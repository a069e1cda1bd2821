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
 * File formats: circuit JSON and the line-oriented dataset text format.
 *
 * Circuit JSON:
 *   {"num_qubits": n,
 *    "ops": [{"kind": "h"|"x"|"z"|"ry"|"u"|"i", "targets": [...],
 *             "controls": [{"qubit": q, "value": 0|1}, ...],
 *             "angle": a,              // "ry" only
 *             "matrix": [[re, im], ...] // "u" only, row-major
 *            }]}
 */
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "sqs/circuit.hpp"

namespace sqs {

[[nodiscard]] std::string circuit_to_json(const Circuit &circuit);
/// Throws ParseError on malformed JSON and InvalidGate on invalid ops.
[[nodiscard]] Circuit circuit_from_json(const std::string &text);

/// One bitstring per line; '#' starts a comment; blank lines ignored.
[[nodiscard]] std::vector<std::string> parse_dataset_text(const std::string &text);

[[nodiscard]] std::string read_file(const std::filesystem::path &path);
/// Writes through a temporary sibling and renames, so readers never see partial files.
void write_file_atomic(const std::filesystem::path &path, const std::string &contents);

} // namespace sqs
