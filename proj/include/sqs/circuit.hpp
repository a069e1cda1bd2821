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
 * Gate and circuit data model.
 *
 * Controls are (qubit, required bit) pairs so zero-valued controls are
 * native; `lower_zero_controls` rewrites them as X-conjugated one-controls
 * for export to toolchains that only know positive controls.
 */
#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "sqs/kernels.hpp"

namespace sqs {

using Complex = std::complex<double>;

enum class GateKind { Identity, PauliX, PauliZ, Hadamard, RotY, Unitary };

struct Control {
    int qubit = 0;
    int value = 1;
    bool operator==(const Control &) const = default;
};

struct GateOp {
    GateKind kind = GateKind::Identity;
    std::vector<int> targets;
    std::vector<Control> controls;
    /// RotY angle in radians, full-angle convention: [[cos, -sin], [sin, cos]].
    double angle = 0.0;
    /// Row-major d x d matrix for GateKind::Unitary, d = 2^targets.size().
    std::vector<Complex> matrix;

    static GateOp identity(int target);
    static GateOp x(int target, std::vector<Control> controls = {});
    static GateOp z(int target, std::vector<Control> controls = {});
    static GateOp h(int target, std::vector<Control> controls = {});
    static GateOp ry(int target, double angle, std::vector<Control> controls = {});
    static GateOp unitary(std::vector<int> targets, std::vector<Complex> matrix,
                          std::vector<Control> controls = {});

    /// The d x d matrix acting on the targets (controls excluded).
    [[nodiscard]] std::vector<Complex> target_matrix() const;
    [[nodiscard]] bool is_controlled() const { return !controls.empty(); }

    bool operator==(const GateOp &) const = default;
};

struct Circuit {
    int num_qubits = 0;
    std::vector<GateOp> ops;

    Circuit() = default;
    explicit Circuit(int n) : num_qubits(n) {}

    Circuit &add(GateOp op);
    Circuit &append(const Circuit &other);
    bool operator==(const Circuit &) const = default;
};

[[nodiscard]] kernels::Mat2 ry_matrix(double angle);
[[nodiscard]] kernels::Mat2 hadamard_matrix();
[[nodiscard]] kernels::Mat2 pauli_x_matrix();
[[nodiscard]] kernels::Mat2 pauli_z_matrix();

/// max_ij |(U^dagger U - I)_ij| for a row-major dim x dim matrix.
[[nodiscard]] double unitarity_error(const std::vector<Complex> &m, int dim);

/// Throws InvalidGate when indices are out of range, targets and controls
/// overlap, control values are not 0/1, or a matrix is malformed/non-unitary.
void validate_gate(const GateOp &op, int num_qubits);
void validate_circuit(const Circuit &circuit);

/// Rewrites every zero-valued control as X . (one-control gate) . X.
[[nodiscard]] Circuit lower_zero_controls(const Circuit &circuit);

/// Number of operations of each kind, used to check encoding cost.
struct GateCounts {
    std::size_t total = 0;
    std::size_t controlled = 0;
    std::size_t uncontrolled_hadamards = 0;
};
[[nodiscard]] GateCounts count_gates(const Circuit &circuit);

} // namespace sqs
