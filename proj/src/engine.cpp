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
#include "sqs/engine.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>

#include <json.hpp>

#include "sqs/bitstring.hpp"
#include "sqs/errors.hpp"
#include "sqs/kernels.hpp"

namespace sqs {

namespace {

constexpr double kLockTolerance = 1e-9;
constexpr double kReachTolerance = 1e-12;
constexpr double kJointTolerance = 1e-9;

int solution_bit(const std::string &target, int q) {
    return target[static_cast<std::size_t>(q)] == '1' ? 1 : 0;
}

double angle_of(double p) { return std::asin(std::sqrt(std::clamp(p, 0.0, 1.0))); }

std::vector<Control> pattern_for(const std::vector<int> &qubits, const std::string &target) {
    std::vector<Control> out;
    out.reserve(qubits.size());
    for (int q : qubits) {
        out.push_back(Control{q, solution_bit(target, q)});
    }
    return out;
}

template <class State>
void require_locked(const State &state, const std::vector<int> &prefix, const std::string &target) {
    for (int q : prefix) {
        if (state.prob_of_bit(q, solution_bit(target, q)) < 1.0 - kLockTolerance) {
            throw ContractViolation("prefix qubit " + std::to_string(q) +
                                    " is not locked in its solution state");
        }
    }
}

} // namespace

double snap_angle(int qubit, double angle) {
    constexpr double kCandidates[] = {0.0, std::numbers::pi / 4.0, std::numbers::pi / 2.0};
    for (double c : kCandidates) {
        if (std::abs(angle - c) <= kAngleSnapTolerance) {
            return c;
        }
    }
    throw UnsupportedAngle(qubit, angle);
}

std::vector<int> prefix_qubits(const EntanglementMap &em, int r) {
    std::vector<int> out;
    for (int j = 0; j + 1 < r && j < em.num_rows(); ++j) {
        const auto &row = em.rows[static_cast<std::size_t>(j)];
        out.insert(out.end(), row.begin(), row.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PreparationSpec> derive_gammas(const FactoredState &prepared,
                                           const EntanglementMap &em, const std::string &target) {
    const int n = prepared.num_qubits();
    if (static_cast<int>(target.size()) != n || !is_bitstring(target)) {
        throw ParseError("target must be a bitstring of length " + std::to_string(n));
    }
    if (em.num_qubits() != n) {
        throw ContractViolation("entanglement map covers " + std::to_string(em.num_qubits()) +
                                " of " + std::to_string(n) + " qubits");
    }
    std::vector<PreparationSpec> specs(static_cast<std::size_t>(n));
    for (int r = 1; r <= em.num_rows(); ++r) {
        const auto prefix = prefix_qubits(em, r);
        const auto prefix_pattern = pattern_for(prefix, target);
        const double p_prefix = prepared.pattern_probability(prefix_pattern);
        const bool reachable = p_prefix > kReachTolerance;
        const auto &row = em.rows[static_cast<std::size_t>(r - 1)];
        double product = 1.0;
        for (int q : row) {
            auto &s = specs[static_cast<std::size_t>(q)];
            s.qubit = q;
            s.row = r;
            s.solution_bit = solution_bit(target, q);
            s.reachable = reachable;
            const double marginal = prepared.prob_of_bit(q, s.solution_bit);
            if (!reachable) {
                s.conditional_probability = 0.0;
                s.gamma = 0.0;
                s.theta = angle_of(marginal);
                s.alpha = -s.theta;
                continue;
            }
            auto pattern = prefix_pattern;
            pattern.push_back(Control{q, s.solution_bit});
            s.conditional_probability = prepared.pattern_probability(pattern) / p_prefix;
            s.gamma = snap_angle(q, angle_of(s.conditional_probability));
            s.theta = r == 1 ? s.gamma : angle_of(marginal);
            s.alpha = s.gamma - s.theta;
            product *= s.conditional_probability;
        }
        if (reachable && row.size() > 1) {
            auto joint_pattern = prefix_pattern;
            for (int q : row) {
                joint_pattern.push_back(Control{q, solution_bit(target, q)});
            }
            const double joint = prepared.pattern_probability(joint_pattern) / p_prefix;
            if (std::abs(joint - product) > kJointTolerance) {
                throw ContractViolation("row " + std::to_string(r) +
                                        " is not separable on the locked branch");
            }
        }
    }
    return specs;
}

std::vector<PreparationSpec> derive_gammas(const Circuit &prep, const EntanglementMap &em,
                                           const std::string &target) {
    FactoredState state(prep.num_qubits, std::max(prep.num_qubits, 1));
    state.run(prep);
    return derive_gammas(state, em, target);
}

std::vector<GateOp> build_m_op(const PreparationSpec &spec, const std::vector<int> &prefix,
                               const std::string &prefix_bits) {
    if (prefix.size() != prefix_bits.size()) {
        throw InvalidGate("prefix and prefix bits differ in length");
    }
    auto controls_for = [&](const std::string &bits) {
        std::vector<Control> cs;
        cs.reserve(prefix.size());
        for (std::size_t k = 0; k < prefix.size(); ++k) {
            cs.push_back(Control{prefix[k], bits[k] == '1' ? 1 : 0});
        }
        return cs;
    };
    std::vector<GateOp> ops;
    ops.push_back(GateOp::ry(spec.qubit, spec.theta));
    if (spec.alpha != 0.0) {
        ops.push_back(GateOp::ry(spec.qubit, spec.alpha, controls_for(prefix_bits)));
    }
    for (const auto &[pattern, beta] : spec.beta_table) {
        if (pattern.size() != prefix.size() || pattern == prefix_bits) {
            throw InvalidGate("beta pattern '" + pattern + "' is not a non-solution prefix");
        }
        if (beta != 0.0) {
            ops.push_back(GateOp::ry(spec.qubit, beta, controls_for(pattern)));
        }
    }
    if (spec.solution_bit == 0) {
        ops.push_back(GateOp::x(spec.qubit));
    }
    return ops;
}

SearchProblem make_problem(Circuit prep, std::string target) {
    validate_circuit(prep);
    if (static_cast<int>(target.size()) != prep.num_qubits || !is_bitstring(target)) {
        throw ParseError("target '" + target + "' must be a bitstring of length " +
                         std::to_string(prep.num_qubits));
    }
    SearchProblem p;
    p.em = build_entanglement_map(prep);
    p.specs = derive_gammas(prep, p.em, target);
    p.prep = std::move(prep);
    p.target = std::move(target);
    return p;
}

Backend resolve_backend(Backend requested, int total_qubits, int dense_limit) {
    if (requested != Backend::Auto) {
        return requested;
    }
    return total_qubits <= dense_limit ? Backend::Dense : Backend::Factored;
}

template <class State>
SearchResult search_shot(State &state, const SearchProblem &problem, BranchMode mode, Rng &rng) {
    const int n = problem.num_data_qubits();
    if (state.num_qubits() != 2 * n) {
        throw ContractViolation("search state must hold " + std::to_string(2 * n) + " qubits");
    }
    SearchResult res;
    res.mode = mode;
    res.ancilla_bits.assign(static_cast<std::size_t>(n), -1);
    QueryLedger ledger;
    double probability = 1.0;
    bool absent = false;

    for (int r = 1; r <= problem.em.num_rows() && !absent; ++r) {
        const auto &row = problem.em.rows[static_cast<std::size_t>(r - 1)];
        if (r == 1) {
            for (const auto &op : problem.prep.ops) {
                if (problem.em.row_of(op.targets.front()) == 1) {
                    state.apply(op);
                    ++ledger.prep_ops;
                }
            }
        } else {
            const auto prefix = prefix_qubits(problem.em, r);
            require_locked(state, prefix, problem.target);
            std::string prefix_bits;
            for (int q : prefix) {
                prefix_bits.push_back(problem.target[static_cast<std::size_t>(q)]);
            }
            for (int q : row) {
                for (const auto &op :
                     build_m_op(problem.specs[static_cast<std::size_t>(q)], prefix, prefix_bits)) {
                    state.apply(op);
                    ++ledger.prep_ops;
                }
            }
        }

        std::vector<SubspaceSpec> specs;
        specs.reserve(row.size());
        for (int q : row) {
            const auto &ps = problem.specs[static_cast<std::size_t>(q)];
            specs.push_back(SubspaceSpec{q, n + q, ps.solution_bit, ps.gamma});
        }
        const auto outcomes = fpqs_row(state, std::span<const SubspaceSpec>(specs), mode, rng,
                                       ledger);
        for (std::size_t k = 0; k < row.size(); ++k) {
            res.ancilla_bits[static_cast<std::size_t>(row[k])] = outcomes[k].ancilla_bit;
            probability *= outcomes[k].success_probability;
            if (outcomes[k].status == FixedPointStatus::Absent) {
                absent = true;
            }
        }
        if (absent) {
            res.terminated_row = r;
        }
    }

    res.found = !absent && std::all_of(res.ancilla_bits.begin(), res.ancilla_bits.end(),
                                       [](int b) { return b == 1; });
    res.probability = absent ? 0.0 : probability;
    res.oracle_calls = ledger.calls;
    res.oracle_applications = ledger.oracle_applications;
    res.prep_ops = ledger.prep_ops;
    res.data.resize(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
        int bit = 0;
        if (mode == BranchMode::Sampled) {
            bit = state.measure(q, rng);
        } else {
            bit = state.prob_of_bit(q, 1) >= 0.5 ? 1 : 0;
        }
        res.data[static_cast<std::size_t>(q)] = bit == 1 ? '1' : '0';
    }
    res.shots = 1;
    res.found_shots = res.found ? 1 : 0;
    return res;
}

template SearchResult search_shot(StateVector &, const SearchProblem &, BranchMode, Rng &);
template SearchResult search_shot(FactoredState &, const SearchProblem &, BranchMode, Rng &);

namespace {

SearchResult one_shot(const SearchProblem &problem, Backend backend, int dense_limit,
                      BranchMode mode, Rng &rng) {
    const int total = 2 * problem.num_data_qubits();
    if (backend == Backend::Dense) {
        StateVector state(total, dense_limit);
        return search_shot(state, problem, mode, rng);
    }
    // One register per (data, ancilla) pair.
    const int n = problem.num_data_qubits();
    std::vector<std::vector<int>> pairs;
    pairs.reserve(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
        pairs.push_back({q, n + q});
    }
    FactoredState state(total, pairs, dense_limit);
    return search_shot(state, problem, mode, rng);
}

std::string ancilla_key(const std::vector<int> &bits) {
    std::string s;
    s.reserve(bits.size());
    for (int b : bits) {
        s.push_back(b == 1 ? '1' : '0');
    }
    return s;
}

} // namespace

SearchResult run_sqs(const SearchProblem &problem, const SearchOptions &options) {
    const int total = 2 * problem.num_data_qubits();
    const Backend backend = resolve_backend(options.backend, total, options.dense_limit);

    if (options.mode == BranchMode::Exact) {
        Rng rng(options.seed);
        auto res = one_shot(problem, backend, options.dense_limit, BranchMode::Exact, rng);
        res.seed = options.seed;
        res.backend_used = backend;
        return res;
    }

    if (options.shots < 1) {
        throw ParseError("sampled mode needs at least one shot");
    }
    const auto shots = static_cast<std::int64_t>(options.shots);
    std::vector<SearchResult> per_shot(options.shots);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t s = 0; s < shots; ++s) {
        try {
            Rng rng(derive_seed(options.seed, static_cast<std::uint64_t>(s)));
            per_shot[static_cast<std::size_t>(s)] =
                one_shot(problem, backend, options.dense_limit, BranchMode::Sampled, rng);
        } catch (...) {
#pragma omp critical(sqs_shot_failure)
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    SearchResult res;
    res.mode = BranchMode::Sampled;
    res.seed = options.seed;
    res.shots = options.shots;
    res.backend_used = backend;
    std::map<std::string, std::size_t> ancilla_votes;
    std::map<std::string, std::size_t> data_votes;
    for (const auto &shot : per_shot) {
        const auto anc = ancilla_key(shot.ancilla_bits);
        ++res.counts[shot.data + anc];
        ++ancilla_votes[anc];
        ++data_votes[shot.data];
        res.found_shots += shot.found ? 1 : 0;
        res.oracle_calls = std::max(res.oracle_calls, shot.oracle_calls);
        res.oracle_applications = std::max(res.oracle_applications, shot.oracle_applications);
        res.prep_ops = std::max(res.prep_ops, shot.prep_ops);
    }
    auto by_count = [](const auto &a, const auto &b) { return a.second < b.second; };
    const std::string modal_anc =
        std::max_element(ancilla_votes.begin(), ancilla_votes.end(), by_count)->first;
    res.data = std::max_element(data_votes.begin(), data_votes.end(), by_count)->first;
    for (const auto &shot : per_shot) {
        if (ancilla_key(shot.ancilla_bits) == modal_anc) {
            res.ancilla_bits = shot.ancilla_bits;
            res.terminated_row = shot.terminated_row;
            break;
        }
    }
    res.found = std::all_of(modal_anc.begin(), modal_anc.end(), [](char c) { return c == '1'; });
    res.probability =
        static_cast<double>(res.found_shots) / static_cast<double>(res.shots);
    return res;
}

std::string result_to_json(const SearchResult &result) {
    using nlohmann::json;
    json j;
    j["found"] = result.found;
    j["oracle_calls"] = result.oracle_calls;
    j["terminated_row"] =
        result.terminated_row ? json(*result.terminated_row) : json(nullptr);
    json anc = json::array();
    for (int b : result.ancilla_bits) {
        anc.push_back(b < 0 ? json(nullptr) : json(b));
    }
    j["ancillas"] = std::move(anc);
    json counts = json::object();
    for (const auto &[k, v] : result.counts) {
        counts[k] = v;
    }
    j["counts"] = std::move(counts);
    j["seed"] = result.seed;
    j["mode"] = result.mode == BranchMode::Exact ? "exact" : "sampled";
    j["probability"] = result.probability;
    j["data"] = result.data;
    j["shots"] = result.shots;
    j["found_shots"] = result.found_shots;
    j["oracle_applications"] = result.oracle_applications;
    j["prep_ops"] = result.prep_ops;
    j["backend"] = result.backend_used == Backend::Dense ? "dense" : "factored";
    return j.dump(2) + "\n";
}

int grover_iterations(std::size_t n_items) {
    if (n_items == 0) {
        throw ParseError("Grover search needs a non-empty set");
    }
    const double w = std::asin(std::sqrt(1.0 / static_cast<double>(n_items)));
    // Exact halves (N = 2) land just below .5 in floating point; round them up.
    return static_cast<int>(std::lround(std::numbers::pi / (4.0 * w) - 0.5 + 1e-9));
}

double grover_success_probability(std::size_t n_items, int iterations) {
    const double w = std::asin(std::sqrt(1.0 / static_cast<double>(n_items)));
    const double s = std::sin((2.0 * iterations + 1.0) * w);
    return s * s;
}

GroverResult run_grover(const Circuit &prep, const std::string &target) {
    if (static_cast<int>(target.size()) != prep.num_qubits || !is_bitstring(target)) {
        throw ParseError("target must be a bitstring of length " +
                         std::to_string(prep.num_qubits));
    }
    const StateVector psi_state = simulate(prep);
    const auto psi = psi_state.amplitudes();
    GroverResult g;
    for (const auto &a : psi) {
        g.support_size += std::norm(a) > kReachTolerance ? 1 : 0;
    }
    const auto t = static_cast<std::size_t>(bits_to_index(target));
    g.target_present = std::norm(psi[t]) > kReachTolerance;
    g.iterations = grover_iterations(g.support_size);

    std::vector<Complex> v(psi.begin(), psi.end());
    for (int k = 0; k < g.iterations; ++k) {
        if (g.target_present) {
            v[t] = -v[t];
        }
        kernels::omp::reflect_about(v, psi);
    }
    g.success_probability = std::norm(v[t]);
    g.closed_form_probability =
        g.target_present ? grover_success_probability(g.support_size, g.iterations) : 0.0;
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (std::norm(v[i]) > std::norm(v[best])) {
            best = i;
        }
    }
    g.max_state = index_to_bits(best, prep.num_qubits);
    g.max_probability = std::norm(v[best]);
    return g;
}

std::size_t run_classical(const Dataset &dataset, const std::string &target, Rng &rng) {
    std::vector<std::size_t> order(dataset.entries.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t k = 0; k < order.size(); ++k) {
        if (dataset.entries[order[k]] == target) {
            return k + 1;
        }
    }
    return dataset.entries.size();
}

} // namespace sqs
