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
 * Fixed-point subspace search on one (data, ancilla) pair.
 *
 * Each data qubit m carries a solution state |S_m> (a computational basis
 * state here) and a non-solution state |R_m>. In the ordered basis
 * {|0_a R>, |0_a S>, |1_a R>, |1_a S>} the fixed-point operator is
 *
 *   F(g) = [ -cos 2g   0  0  -sin 2g ]
 *          [ -sin 2g   0  0   cos 2g ]
 *          [    0      0  1     0    ]
 *          [    0      1  0     0    ]
 *
 * Starting from |0_a>(cos g |R> + sin g |S>) one application leaves the
 * ancilla in |1> with probability sin^2 g; on the ancilla-0 branch the data
 * qubit becomes cos 2g |R> + sin 2g |S>, so a second application succeeds
 * with probability sin^2 2g. For g in {0, pi/4, pi/2} at most two
 * applications decide the qubit.
 */
#pragma once

#include <span>
#include <vector>

#include "sqs/circuit.hpp"
#include "sqs/factored_state.hpp"
#include "sqs/random.hpp"
#include "sqs/state_vector.hpp"

namespace sqs {

struct SubspaceSpec {
    int data_qubit = 0;
    int ancilla = 0;
    /// |S_m> = |solution_bit>, |R_m> = |1 - solution_bit>.
    int solution_bit = 1;
    double gamma = 0.0;

    /// V_m: maps |0> -> |R_m>, |1> -> |S_m> (identity or X).
    [[nodiscard]] kernels::Mat2 basis_op() const;
};

enum class FixedPointStatus { Converged, Pending, Absent };

struct FixedPointOutcome {
    FixedPointStatus status = FixedPointStatus::Pending;
    int iterations_used = 0;
    /// Probability of convergence within the iterations run.
    double success_probability = 0.0;
    int ancilla_bit = 0;
};

/// Exact: follow branches deterministically and track probabilities in closed
/// form. Sampled: measure with the caller's generator.
enum class BranchMode { Exact, Sampled };

/// One row-wide application of the subspace oracles is one call.
struct QueryLedger {
    int calls = 0;
    /// Individual O_m applications, reported separately.
    int oracle_applications = 0;
    /// Preparation gates applied; never charged as queries.
    int prep_ops = 0;
};

/// [[cos t, -sin t], [sin t, cos t]]
[[nodiscard]] kernels::Mat2 prep_matrix(double theta);

/// 4x4 subspace oracle I (x) |R><R| + Z (x) |S><S| in local order
/// index = data_bit + 2 * ancilla_bit (computational basis).
[[nodiscard]] std::vector<Complex> subspace_oracle(const SubspaceSpec &spec);

/// F(gamma) in the {|0R>, |0S>, |1R>, |1S>} basis.
[[nodiscard]] std::vector<Complex> fixed_point_matrix(double gamma);

/// F(spec.gamma) conjugated by V_m, as a two-target gate on {data, ancilla}.
[[nodiscard]] GateOp fixed_point_gate(const SubspaceSpec &spec);

/// Gate-level form: V^dagger, oracle with phase kickback, P(g) (-Z) P(g)^dagger
/// on the ancilla-0 branch, V. Its product equals fixed_point_gate(spec).
[[nodiscard]] std::vector<GateOp> fixed_point_circuit(const SubspaceSpec &spec);

/// sin^2 g + cos^2 g sin^2 2g
[[nodiscard]] double convergence_probability(double gamma);

/// Runs at most two F applications on one pair; the ancilla must start in |0>.
/// Throws ContractViolation otherwise.
template <class State>
FixedPointOutcome fpqs_qubit(State &state, const SubspaceSpec &spec, BranchMode mode, Rng &rng);

/// Searches every pair of a row simultaneously: iteration 1 on all pairs,
/// iteration 2 on those whose ancilla read 0. Each iteration is one ledger call.
/// In a FactoredState, a data qubit sharing a register with another
/// non-classical qubit is a contract violation.
template <class State>
std::vector<FixedPointOutcome> fpqs_row(State &state, std::span<const SubspaceSpec> specs,
                                        BranchMode mode, Rng &rng, QueryLedger &ledger);

extern template FixedPointOutcome fpqs_qubit(StateVector &, const SubspaceSpec &, BranchMode,
                                             Rng &);
extern template FixedPointOutcome fpqs_qubit(FactoredState &, const SubspaceSpec &, BranchMode,
                                             Rng &);
extern template std::vector<FixedPointOutcome>
fpqs_row(StateVector &, std::span<const SubspaceSpec>, BranchMode, Rng &, QueryLedger &);
extern template std::vector<FixedPointOutcome>
fpqs_row(FactoredState &, std::span<const SubspaceSpec>, BranchMode, Rng &, QueryLedger &);

} // namespace sqs
