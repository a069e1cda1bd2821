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
 * Row-by-row structured search, plus Grover and linear-scan references.
 *
 * Data qubit q lives at index q and its ancilla at n + q. Rows of the
 * entanglement map are processed in order: row 1 is prepared by the prep ops
 * acting on it, every later row by the M operator built on the locked prefix.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sqs/circuit.hpp"
#include "sqs/emap.hpp"
#include "sqs/encoding.hpp"
#include "sqs/factored_state.hpp"
#include "sqs/fpqs.hpp"
#include "sqs/random.hpp"
#include "sqs/state_vector.hpp"

namespace sqs {

/// Snap tolerance for derived angles.
inline constexpr double kAngleSnapTolerance = 1e-6;

struct PreparationSpec {
    int qubit = 0;
    int row = 0;
    int solution_bit = 1;
    /// Marginal single-qubit angle.
    double theta = 0.0;
    /// Extra rotation applied on the locked-prefix branch.
    double alpha = 0.0;
    /// Per non-solution prefix pattern (prefix qubits in ascending order).
    std::map<std::string, double> beta_table;
    /// theta + alpha, snapped to {0, pi/4, pi/2}.
    double gamma = 0.0;
    /// False when the locked prefix has probability zero.
    bool reachable = true;
    /// P(q = S | all earlier rows = S).
    double conditional_probability = 0.0;
};

/// Returns the nearest of {0, pi/4, pi/2} within kAngleSnapTolerance, or
/// throws UnsupportedAngle.
[[nodiscard]] double snap_angle(int qubit, double angle);

/// Data qubits of rows 1..r-1, ascending.
[[nodiscard]] std::vector<int> prefix_qubits(const EntanglementMap &em, int r);

/// Derives every qubit's angle from the prepared (data-only) state.
[[nodiscard]] std::vector<PreparationSpec>
derive_gammas(const FactoredState &prepared, const EntanglementMap &em, const std::string &target);

/// Simulates prep in a factored state and derives the angles.
[[nodiscard]] std::vector<PreparationSpec>
derive_gammas(const Circuit &prep, const EntanglementMap &em, const std::string &target);

/// RY(theta); RY(alpha) controlled on the locked prefix; RY(beta_x) controlled
/// on each prefix pattern x; then X when the solution bit is 0.
/// `prefix` holds the prefix qubits and `prefix_bits` their solution bits.
[[nodiscard]] std::vector<GateOp> build_m_op(const PreparationSpec &spec,
                                             const std::vector<int> &prefix,
                                             const std::string &prefix_bits);

struct SearchProblem {
    Circuit prep;
    EntanglementMap em;
    std::string target;
    std::vector<PreparationSpec> specs;

    [[nodiscard]] int num_data_qubits() const { return prep.num_qubits; }
};

/// Validates the target, builds the map and derives the angles.
[[nodiscard]] SearchProblem make_problem(Circuit prep, std::string target);

enum class Backend { Dense, Factored, Auto };

struct SearchOptions {
    BranchMode mode = BranchMode::Exact;
    std::size_t shots = 1;
    std::uint64_t seed = 0;
    Backend backend = Backend::Auto;
    int dense_limit = kDefaultDenseLimit;
};

struct SearchResult {
    bool found = false;
    /// Per data qubit: 0/1, or -1 when its row was never searched.
    std::vector<int> ancilla_bits;
    /// Data register readout (most likely bit per qubit, or sampled).
    std::string data;
    int oracle_calls = 0;
    std::optional<int> terminated_row;
    /// Exact: probability every ancilla reads 1. Sampled: found fraction.
    double probability = 0.0;
    /// Sampled mode: data bits followed by ancilla bits.
    Histogram counts;
    std::uint64_t seed = 0;
    BranchMode mode = BranchMode::Exact;
    std::size_t shots = 0;
    std::size_t found_shots = 0;
    int oracle_applications = 0;
    int prep_ops = 0;
    Backend backend_used = Backend::Dense;
};

[[nodiscard]] Backend resolve_backend(Backend requested, int total_qubits, int dense_limit);

/// Runs one pass of the protocol on a fresh 2n-qubit state, leaving the final
/// state in `state` for inspection.
template <class State>
SearchResult search_shot(State &state, const SearchProblem &problem, BranchMode mode, Rng &rng);

extern template SearchResult search_shot(StateVector &, const SearchProblem &, BranchMode, Rng &);
extern template SearchResult search_shot(FactoredState &, const SearchProblem &, BranchMode,
                                         Rng &);

[[nodiscard]] SearchResult run_sqs(const SearchProblem &problem, const SearchOptions &options = {});

[[nodiscard]] std::string result_to_json(const SearchResult &result);

struct GroverResult {
    std::size_t support_size = 0;
    int iterations = 0;
    bool target_present = false;
    double success_probability = 0.0;
    double closed_form_probability = 0.0;
    std::string max_state;
    double max_probability = 0.0;
};

/// round(pi / (4 asin(sqrt(1/N))) - 1/2)
[[nodiscard]] int grover_iterations(std::size_t n_items);
/// sin^2((2k+1) asin(sqrt(1/N)))
[[nodiscard]] double grover_success_probability(std::size_t n_items, int iterations);

/// Textbook Grover on the dense simulation of `prep`, whose support is taken
/// as the searched set.
[[nodiscard]] GroverResult run_grover(const Circuit &prep, const std::string &target);

/// 1-based position of `target` in a random scan order, or N when absent.
[[nodiscard]] std::size_t run_classical(const Dataset &dataset, const std::string &target, Rng &rng);

} // namespace sqs
