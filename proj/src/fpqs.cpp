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
#include "sqs/fpqs.hpp"

#include <cmath>
#include <string>
#include <type_traits>

#include "sqs/errors.hpp"

namespace sqs {

namespace {

constexpr double kBranchTolerance = 1e-12;

} // namespace

kernels::Mat2 SubspaceSpec::basis_op() const {
    return solution_bit == 1 ? kernels::Mat2{Complex{1, 0}, Complex{0, 0}, Complex{0, 0},
                                             Complex{1, 0}}
                             : pauli_x_matrix();
}

kernels::Mat2 prep_matrix(double theta) { return ry_matrix(theta); }

std::vector<Complex> subspace_oracle(const SubspaceSpec &spec) {
    std::vector<Complex> o(16, Complex{0.0, 0.0});
    for (int idx = 0; idx < 4; ++idx) {
        const int data = idx & 1;
        const int anc = idx >> 1;
        o[static_cast<std::size_t>(idx * 4 + idx)] =
            (anc == 1 && data == spec.solution_bit) ? -1.0 : 1.0;
    }
    return o;
}

std::vector<Complex> fixed_point_matrix(double gamma) {
    const double c2 = std::cos(2.0 * gamma);
    const double s2 = std::sin(2.0 * gamma);
    // clang-format off
    return {
        Complex{-c2, 0}, Complex{0, 0}, Complex{0, 0}, Complex{-s2, 0},
        Complex{-s2, 0}, Complex{0, 0}, Complex{0, 0}, Complex{ c2, 0},
        Complex{0, 0},   Complex{0, 0}, Complex{1, 0}, Complex{0, 0},
        Complex{0, 0},   Complex{1, 0}, Complex{0, 0}, Complex{0, 0},
    };
    // clang-format on
}

GateOp fixed_point_gate(const SubspaceSpec &spec) {
    const auto f = fixed_point_matrix(spec.gamma);
    const int flip = spec.solution_bit == 1 ? 0 : 1;
    std::vector<Complex> m(16);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            m[static_cast<std::size_t>(i * 4 + j)] =
                f[static_cast<std::size_t>((i ^ flip) * 4 + (j ^ flip))];
        }
    }
    return GateOp::unitary({spec.data_qubit, spec.ancilla}, std::move(m));
}

std::vector<GateOp> fixed_point_circuit(const SubspaceSpec &spec) {
    const int d = spec.data_qubit;
    const int a = spec.ancilla;
    const std::vector<Control> anc0{Control{a, 0}};
    std::vector<GateOp> ops;
    if (spec.solution_bit == 0) {
        ops.push_back(GateOp::x(d));
    }
    // Oracle O_m with phase kickback: marks |S> by flipping the ancilla.
    ops.push_back(GateOp::h(a));
    ops.push_back(GateOp::z(a, {Control{d, 1}}));
    ops.push_back(GateOp::h(a));
    // Reflection P(g) (-Z) P(g)^dagger on the ancilla-0 branch; -Z = X Z X.
    ops.push_back(GateOp::ry(d, -spec.gamma, anc0));
    ops.push_back(GateOp::x(d, anc0));
    ops.push_back(GateOp::z(d, anc0));
    ops.push_back(GateOp::x(d, anc0));
    ops.push_back(GateOp::ry(d, spec.gamma, anc0));
    if (spec.solution_bit == 0) {
        ops.push_back(GateOp::x(d));
    }
    return ops;
}

double convergence_probability(double gamma) {
    const double s = std::sin(gamma);
    const double c = std::cos(gamma);
    const double s2 = std::sin(2.0 * gamma);
    return s * s + c * c * s2 * s2;
}

namespace {

template <class State> void check_ancilla_ground(const State &state, const SubspaceSpec &spec) {
    if (state.prob_of_bit(spec.ancilla, 1) > kBranchTolerance) {
        throw ContractViolation("ancilla " + std::to_string(spec.ancilla) + " is not in |0>");
    }
}

template <class State> void check_isolated(const State &state, const SubspaceSpec &spec) {
    if constexpr (std::is_same_v<State, FactoredState>) {
        const auto &reg = state.registers()[static_cast<std::size_t>(
            state.register_of(spec.data_qubit))];
        for (int q : reg.qubits) {
            if (q != spec.data_qubit && !state.is_classical(q)) {
                throw ContractViolation("data qubit " + std::to_string(spec.data_qubit) +
                                        " is entangled with qubit " + std::to_string(q) +
                                        " across the row boundary");
            }
        }
    }
}

struct PairProgress {
    double first_p1 = 0.0;
    FixedPointOutcome outcome;
    bool done = false;
};

/// Measures the ancilla after iteration `iteration` and updates progress.
template <class State>
void read_ancilla(State &state, const SubspaceSpec &spec, int iteration, BranchMode mode,
                  Rng &rng, PairProgress &pair) {
    const double p1 = state.prob_of_bit(spec.ancilla, 1);
    int bit = 0;
    if (mode == BranchMode::Sampled) {
        bit = uniform01(rng) < p1 ? 1 : 0;
    } else if (p1 >= 1.0 - kBranchTolerance) {
        bit = 1;
    } else if (p1 <= kBranchTolerance) {
        bit = 0;
    } else {
        // Between iterations follow the ancilla-0 branch; on the last one take
        // the likelier outcome.
        bit = iteration == 1 ? 0 : (p1 >= 0.5 ? 1 : 0);
    }
    state.collapse(spec.ancilla, bit);

    auto &out = pair.outcome;
    out.iterations_used = iteration;
    out.ancilla_bit = bit;
    if (mode == BranchMode::Sampled) {
        out.success_probability = convergence_probability(spec.gamma);
    } else if (iteration == 1) {
        pair.first_p1 = p1;
        out.success_probability = p1;
    } else {
        out.success_probability = pair.first_p1 + (1.0 - pair.first_p1) * p1;
    }
    if (bit == 1) {
        out.status = FixedPointStatus::Converged;
        pair.done = true;
    } else if (iteration == 2) {
        out.status = FixedPointStatus::Absent;
        pair.done = true;
    } else {
        out.status = FixedPointStatus::Pending;
    }
}

} // namespace

template <class State>
FixedPointOutcome fpqs_qubit(State &state, const SubspaceSpec &spec, BranchMode mode, Rng &rng) {
    check_ancilla_ground(state, spec);
    const GateOp f = fixed_point_gate(spec);
    PairProgress pair;
    for (int iteration = 1; iteration <= 2 && !pair.done; ++iteration) {
        state.apply(f);
        read_ancilla(state, spec, iteration, mode, rng, pair);
    }
    return pair.outcome;
}

template <class State>
std::vector<FixedPointOutcome> fpqs_row(State &state, std::span<const SubspaceSpec> specs,
                                        BranchMode mode, Rng &rng, QueryLedger &ledger) {
    std::vector<PairProgress> pairs(specs.size());
    if (specs.empty()) {
        return {};
    }
    std::vector<GateOp> gates;
    gates.reserve(specs.size());
    for (const auto &spec : specs) {
        check_ancilla_ground(state, spec);
        check_isolated(state, spec);
        gates.push_back(fixed_point_gate(spec));
    }
    for (int iteration = 1; iteration <= 2; ++iteration) {
        bool any = false;
        for (std::size_t k = 0; k < specs.size(); ++k) {
            if (!pairs[k].done) {
                state.apply(gates[k]);
                ++ledger.oracle_applications;
                any = true;
            }
        }
        if (!any) {
            break;
        }
        ++ledger.calls;
        for (std::size_t k = 0; k < specs.size(); ++k) {
            if (!pairs[k].done) {
                read_ancilla(state, specs[k], iteration, mode, rng, pairs[k]);
            }
        }
    }
    std::vector<FixedPointOutcome> out;
    out.reserve(pairs.size());
    for (auto &p : pairs) {
        out.push_back(p.outcome);
    }
    return out;
}

template FixedPointOutcome fpqs_qubit(StateVector &, const SubspaceSpec &, BranchMode, Rng &);
template FixedPointOutcome fpqs_qubit(FactoredState &, const SubspaceSpec &, BranchMode, Rng &);
template std::vector<FixedPointOutcome> fpqs_row(StateVector &, std::span<const SubspaceSpec>,
                                                 BranchMode, Rng &, QueryLedger &);
template std::vector<FixedPointOutcome> fpqs_row(FactoredState &, std::span<const SubspaceSpec>,
                                                 BranchMode, Rng &, QueryLedger &);

} // namespace sqs
