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
#include "sqs/state_vector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "sqs/bitstring.hpp"
#include "sqs/errors.hpp"

namespace sqs {

namespace {

kernels::BitPattern control_pattern(const std::vector<Control> &controls) {
    kernels::BitPattern p;
    for (const auto &c : controls) {
        const kernels::Index bit = kernels::Index{1} << c.qubit;
        p.mask |= bit;
        if (c.value == 1) {
            p.value |= bit;
        }
    }
    return p;
}

void check_qubit(int qubit, int num_qubits) {
    if (qubit < 0 || qubit >= num_qubits) {
        throw InvalidGate("qubit " + std::to_string(qubit) + " out of range");
    }
}

} // namespace

void apply_gate_local(std::span<Complex> amps, const GateOp &op, const std::vector<int> &targets,
                      const std::vector<Control> &controls) {
    if (op.kind == GateKind::Identity) {
        return;
    }
    const auto pattern = control_pattern(controls);
    const auto m = op.target_matrix();
    if (targets.size() == 1) {
        kernels::Mat2 m2;
        std::copy(m.begin(), m.end(), m2.begin());
        kernels::omp::apply_1q(amps, targets[0], m2, pattern);
    } else {
        kernels::Mat4 m4;
        std::copy(m.begin(), m.end(), m4.begin());
        kernels::omp::apply_2q(amps, targets[0], targets[1], m4, pattern);
    }
}

StateVector::StateVector(int num_qubits, int limit) : num_qubits_(num_qubits) {
    if (num_qubits < 1) {
        throw CapacityError("a state needs at least one qubit");
    }
    if (num_qubits > limit) {
        throw CapacityError("dense state of " + std::to_string(num_qubits) +
                            " qubits exceeds the limit of " + std::to_string(limit) +
                            "; use the factored backend");
    }
    amps_.assign(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
    amps_[0] = Complex{1.0, 0.0};
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amps) {
    if (amps.size() < 2 || !std::has_single_bit(amps.size())) {
        throw CapacityError("amplitude count must be a power of two >= 2");
    }
    StateVector s;
    s.num_qubits_ = std::countr_zero(amps.size());
    s.amps_ = std::move(amps);
    return s;
}

void StateVector::apply(const GateOp &op) {
    validate_gate(op, num_qubits_);
    apply_gate_local(amps_, op, op.targets, op.controls);
}

void StateVector::run(const Circuit &circuit) {
    if (circuit.num_qubits > num_qubits_) {
        throw InvalidGate("circuit is wider than the state");
    }
    for (const auto &op : circuit.ops) {
        apply(op);
    }
}

double StateVector::prob_of_bit(int qubit, int bit) const {
    check_qubit(qubit, num_qubits_);
    const kernels::Index mask = kernels::Index{1} << qubit;
    return kernels::omp::pattern_probability(amps_, {mask, bit == 1 ? mask : 0});
}

double StateVector::pattern_probability(std::span<const Control> pattern) const {
    kernels::BitPattern p;
    for (const auto &c : pattern) {
        check_qubit(c.qubit, num_qubits_);
        const kernels::Index bit = kernels::Index{1} << c.qubit;
        if ((p.mask & bit) && ((p.value & bit) != 0) != (c.value == 1)) {
            return 0.0;
        }
        p.mask |= bit;
        if (c.value == 1) {
            p.value |= bit;
        }
    }
    return kernels::omp::pattern_probability(amps_, p);
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amps_.size());
    std::transform(amps_.begin(), amps_.end(), p.begin(), [](Complex a) { return std::norm(a); });
    return p;
}

double StateVector::norm_squared() const { return kernels::omp::norm_squared(amps_); }

double StateVector::collapse(int qubit, int bit) {
    const double p = prob_of_bit(qubit, bit);
    if (p < kZeroProbability) {
        throw InvalidCollapse("collapse of qubit " + std::to_string(qubit) + " onto " +
                              std::to_string(bit) + " has zero probability");
    }
    const kernels::Index mask = kernels::Index{1} << qubit;
    kernels::omp::project(amps_, {mask, bit == 1 ? mask : 0}, 1.0 / std::sqrt(p));
    return p;
}

int StateVector::measure(int qubit, Rng &rng) {
    const double p1 = prob_of_bit(qubit, 1);
    const int bit = uniform01(rng) < p1 ? 1 : 0;
    collapse(qubit, bit);
    return bit;
}

Histogram StateVector::sample_counts(std::span<const int> qubits, std::size_t shots,
                                     Rng &rng) const {
    for (int q : qubits) {
        check_qubit(q, num_qubits_);
    }
    std::vector<double> cumulative(amps_.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        acc += std::norm(amps_[i]);
        cumulative[i] = acc;
    }
    std::map<std::size_t, std::size_t> by_index;
    for (std::size_t s = 0; s < shots; ++s) {
        const double u = uniform01(rng) * acc;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        auto idx = static_cast<std::size_t>(std::distance(cumulative.begin(), it));
        idx = std::min(idx, amps_.size() - 1);
        ++by_index[idx];
    }
    Histogram h;
    for (const auto &[idx, count] : by_index) {
        std::string key(qubits.size(), '0');
        for (std::size_t j = 0; j < qubits.size(); ++j) {
            if ((idx >> qubits[j]) & 1U) {
                key[j] = '1';
            }
        }
        h[key] += count;
    }
    return h;
}

StateVector init_state(int num_qubits, int limit) { return StateVector(num_qubits, limit); }

StateVector apply(StateVector state, const GateOp &op) {
    state.apply(op);
    return state;
}

std::pair<int, StateVector> measure(StateVector state, int qubit, Rng &rng) {
    const int bit = state.measure(qubit, rng);
    return {bit, std::move(state)};
}

double prob_of_bit(const StateVector &state, int qubit, int bit) {
    return state.prob_of_bit(qubit, bit);
}

Histogram sample_counts(const StateVector &state, std::span<const int> qubits, std::size_t shots,
                        Rng &rng) {
    return state.sample_counts(qubits, shots, rng);
}

std::vector<Complex> sequence_unitary(const std::vector<GateOp> &ops, int num_qubits) {
    if (num_qubits > 12) {
        throw CapacityError("sequence_unitary is limited to 12 qubits");
    }
    const std::size_t dim = std::size_t{1} << num_qubits;
    std::vector<Complex> u(dim * dim);
    for (std::size_t col = 0; col < dim; ++col) {
        std::vector<Complex> basis(dim, Complex{0.0, 0.0});
        basis[col] = 1.0;
        auto s = StateVector::from_amplitudes(std::move(basis));
        for (const auto &op : ops) {
            s.apply(op);
        }
        for (std::size_t row = 0; row < dim; ++row) {
            u[row * dim + col] = s.amplitude(row);
        }
    }
    return u;
}

StateVector simulate(const Circuit &circuit, int limit) {
    StateVector s(circuit.num_qubits, limit);
    s.run(circuit);
    return s;
}

} // namespace sqs
