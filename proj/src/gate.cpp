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
#include "sqs/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "sqs/errors.hpp"

namespace sqs {

kernels::Mat2 ry_matrix(double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {Complex{c, 0}, Complex{-s, 0}, Complex{s, 0}, Complex{c, 0}};
}

kernels::Mat2 hadamard_matrix() {
    const double r = 1.0 / std::numbers::sqrt2;
    return {Complex{r, 0}, Complex{r, 0}, Complex{r, 0}, Complex{-r, 0}};
}

kernels::Mat2 pauli_x_matrix() { return {Complex{0, 0}, Complex{1, 0}, Complex{1, 0}, Complex{0, 0}}; }

kernels::Mat2 pauli_z_matrix() {
    return {Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{-1, 0}};
}

GateOp GateOp::identity(int target) { return GateOp{GateKind::Identity, {target}, {}, 0.0, {}}; }

GateOp GateOp::x(int target, std::vector<Control> controls) {
    return GateOp{GateKind::PauliX, {target}, std::move(controls), 0.0, {}};
}

GateOp GateOp::z(int target, std::vector<Control> controls) {
    return GateOp{GateKind::PauliZ, {target}, std::move(controls), 0.0, {}};
}

GateOp GateOp::h(int target, std::vector<Control> controls) {
    return GateOp{GateKind::Hadamard, {target}, std::move(controls), 0.0, {}};
}

GateOp GateOp::ry(int target, double angle, std::vector<Control> controls) {
    return GateOp{GateKind::RotY, {target}, std::move(controls), angle, {}};
}

GateOp GateOp::unitary(std::vector<int> targets, std::vector<Complex> matrix,
                       std::vector<Control> controls) {
    return GateOp{GateKind::Unitary, std::move(targets), std::move(controls), 0.0,
                  std::move(matrix)};
}

std::vector<Complex> GateOp::target_matrix() const {
    auto from2 = [](const kernels::Mat2 &m) { return std::vector<Complex>(m.begin(), m.end()); };
    switch (kind) {
    case GateKind::Identity:
        return from2({Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{1, 0}});
    case GateKind::PauliX:
        return from2(pauli_x_matrix());
    case GateKind::PauliZ:
        return from2(pauli_z_matrix());
    case GateKind::Hadamard:
        return from2(hadamard_matrix());
    case GateKind::RotY:
        return from2(ry_matrix(angle));
    case GateKind::Unitary:
        return matrix;
    }
    return {};
}

double unitarity_error(const std::vector<Complex> &m, int dim) {
    double worst = 0.0;
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            Complex acc{0, 0};
            for (int k = 0; k < dim; ++k) {
                acc += std::conj(m[static_cast<std::size_t>(k * dim + i)]) *
                       m[static_cast<std::size_t>(k * dim + j)];
            }
            if (i == j) {
                acc -= 1.0;
            }
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

void validate_gate(const GateOp &op, int num_qubits) {
    auto in_range = [&](int q) { return q >= 0 && q < num_qubits; };
    if (op.targets.empty() || op.targets.size() > 2) {
        throw InvalidGate("gate must have one or two targets");
    }
    if (op.kind != GateKind::Unitary && op.targets.size() != 1) {
        throw InvalidGate("only 'u' gates may have two targets");
    }
    std::set<int> seen;
    for (int t : op.targets) {
        if (!in_range(t)) {
            throw InvalidGate("target qubit " + std::to_string(t) + " out of range");
        }
        if (!seen.insert(t).second) {
            throw InvalidGate("duplicate target qubit " + std::to_string(t));
        }
    }
    for (const auto &c : op.controls) {
        if (!in_range(c.qubit)) {
            throw InvalidGate("control qubit " + std::to_string(c.qubit) + " out of range");
        }
        if (c.value != 0 && c.value != 1) {
            throw InvalidGate("control value must be 0 or 1");
        }
        if (!seen.insert(c.qubit).second) {
            throw InvalidGate("qubit " + std::to_string(c.qubit) +
                              " appears twice among targets/controls");
        }
    }
    if (op.kind == GateKind::RotY && !std::isfinite(op.angle)) {
        throw InvalidGate("non-finite rotation angle");
    }
    if (op.kind == GateKind::Unitary) {
        const int dim = 1 << op.targets.size();
        if (op.matrix.size() != static_cast<std::size_t>(dim * dim)) {
            throw InvalidGate("unitary matrix must have " + std::to_string(dim * dim) +
                              " entries");
        }
        for (const auto &z : op.matrix) {
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
                throw InvalidGate("non-finite matrix entry");
            }
        }
        if (unitarity_error(op.matrix, dim) > 1e-9) {
            throw InvalidGate("matrix is not unitary within 1e-9");
        }
    }
}

void validate_circuit(const Circuit &circuit) {
    if (circuit.num_qubits < 1) {
        throw InvalidGate("circuit needs at least one qubit");
    }
    for (const auto &op : circuit.ops) {
        validate_gate(op, circuit.num_qubits);
    }
}

Circuit &Circuit::add(GateOp op) {
    ops.push_back(std::move(op));
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    num_qubits = std::max(num_qubits, other.num_qubits);
    ops.insert(ops.end(), other.ops.begin(), other.ops.end());
    return *this;
}

Circuit lower_zero_controls(const Circuit &circuit) {
    Circuit out(circuit.num_qubits);
    for (const auto &op : circuit.ops) {
        std::vector<int> flipped;
        GateOp lowered = op;
        for (auto &c : lowered.controls) {
            if (c.value == 0) {
                flipped.push_back(c.qubit);
                c.value = 1;
            }
        }
        for (int q : flipped) {
            out.add(GateOp::x(q));
        }
        out.add(std::move(lowered));
        for (int q : flipped) {
            out.add(GateOp::x(q));
        }
    }
    return out;
}

GateCounts count_gates(const Circuit &circuit) {
    GateCounts counts;
    for (const auto &op : circuit.ops) {
        ++counts.total;
        if (op.is_controlled()) {
            ++counts.controlled;
        } else if (op.kind == GateKind::Hadamard) {
            ++counts.uncontrolled_hadamards;
        }
    }
    return counts;
}

} // namespace sqs
