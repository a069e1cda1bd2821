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
#include "sqs/emap.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "sqs/errors.hpp"

namespace sqs {

int EntanglementMap::num_qubits() const {
    int n = 0;
    for (const auto &r : rows) {
        n += static_cast<int>(r.size());
    }
    return n;
}

int EntanglementMap::row_of(int qubit) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (std::find(rows[r].begin(), rows[r].end(), qubit) != rows[r].end()) {
            return static_cast<int>(r) + 1;
        }
    }
    return 0;
}

EntanglementMap build_entanglement_map(const Circuit &circuit) {
    validate_circuit(circuit);
    const auto n = static_cast<std::size_t>(circuit.num_qubits);
    std::vector<std::set<int>> controls_of(n);
    std::vector<bool> used_as_control(n, false);
    std::vector<std::pair<int, std::size_t>> late_targets;  // (qubit, op index)
    for (std::size_t k = 0; k < circuit.ops.size(); ++k) {
        const auto &op = circuit.ops[k];
        if (op.targets.size() > 1) {
            throw InvalidGate("two-target gate at op " + std::to_string(k) +
                              " has no control/target structure");
        }
        if (!op.is_controlled()) {
            continue;
        }
        const int t = op.targets.front();
        if (used_as_control[static_cast<std::size_t>(t)]) {
            late_targets.emplace_back(t, k);
        }
        for (const auto &c : op.controls) {
            controls_of[static_cast<std::size_t>(t)].insert(c.qubit);
            used_as_control[static_cast<std::size_t>(c.qubit)] = true;
        }
    }

    // Cycle search over target -> control edges.
    enum class Mark { White, Grey, Black };
    std::vector<Mark> mark(n, Mark::White);
    std::vector<int> stack;
    std::function<void(int)> visit = [&](int q) {
        mark[static_cast<std::size_t>(q)] = Mark::Grey;
        stack.push_back(q);
        for (int c : controls_of[static_cast<std::size_t>(q)]) {
            if (mark[static_cast<std::size_t>(c)] == Mark::Grey) {
                auto start = std::find(stack.begin(), stack.end(), c);
                std::vector<int> cycle(start, stack.end());
                cycle.push_back(c);
                throw CyclicDependency(std::move(cycle));
            }
            if (mark[static_cast<std::size_t>(c)] == Mark::White) {
                visit(c);
            }
        }
        stack.pop_back();
        mark[static_cast<std::size_t>(q)] = Mark::Black;
    };
    for (std::size_t q = 0; q < n; ++q) {
        if (mark[q] == Mark::White) {
            visit(static_cast<int>(q));
        }
    }

    if (!late_targets.empty()) {
        const auto [q, k] = late_targets.front();
        throw ReEntanglement("qubit " + std::to_string(q) + " is targeted by controlled op " +
                             std::to_string(k) + " after acting as a control");
    }

    std::vector<int> row(n, 0);
    std::function<int(int)> row_of = [&](int q) -> int {
        auto &r = row[static_cast<std::size_t>(q)];
        if (r != 0) {
            return r;
        }
        int deepest = 0;
        for (int c : controls_of[static_cast<std::size_t>(q)]) {
            deepest = std::max(deepest, row_of(c));
        }
        r = deepest + 1;
        return r;
    };
    int depth = 0;
    for (std::size_t q = 0; q < n; ++q) {
        depth = std::max(depth, row_of(static_cast<int>(q)));
    }
    EntanglementMap em;
    em.rows.resize(static_cast<std::size_t>(depth));
    for (std::size_t q = 0; q < n; ++q) {
        em.rows[static_cast<std::size_t>(row[q] - 1)].push_back(static_cast<int>(q));
    }
    return em;
}

int cumulative_size(const EntanglementMap &em, int r) {
    if (r < 1 || r > em.num_rows() + 1) {
        throw std::out_of_range("row index " + std::to_string(r) + " outside 1.." +
                                std::to_string(em.num_rows() + 1));
    }
    int total = 0;
    for (int j = 0; j + 1 < r; ++j) {
        total += static_cast<int>(em.rows[static_cast<std::size_t>(j)].size());
    }
    return total;
}

EmValidation validate_entanglement_map(const EntanglementMap &em, const Circuit &circuit) {
    EmValidation v;
    const int n = circuit.num_qubits;
    std::vector<int> count(static_cast<std::size_t>(std::max(n, 0)), 0);
    for (std::size_t r = 0; r < em.rows.size(); ++r) {
        if (em.rows[r].empty()) {
            v.problems.push_back("row " + std::to_string(r + 1) + " is empty");
        }
        for (int q : em.rows[r]) {
            if (q < 0 || q >= n) {
                v.problems.push_back("qubit " + std::to_string(q) + " is outside the circuit");
            } else {
                ++count[static_cast<std::size_t>(q)];
            }
        }
    }
    for (int q = 0; q < n; ++q) {
        const int c = count[static_cast<std::size_t>(q)];
        if (c != 1) {
            v.problems.push_back("qubit " + std::to_string(q) + " appears " + std::to_string(c) +
                                 " times");
        }
    }
    EntanglementMap expected;
    try {
        expected = build_entanglement_map(circuit);
    } catch (const Error &e) {
        v.problems.emplace_back(e.what());
        return v;
    }
    for (int q = 0; q < n; ++q) {
        const int want = expected.row_of(q);
        const int got = em.row_of(q);
        if (want != got) {
            v.misplaced.push_back(EmDiff{q, want, got});
        }
    }
    v.valid = v.problems.empty() && v.misplaced.empty() && em.num_rows() == expected.num_rows();
    if (v.problems.empty() && v.misplaced.empty() && !v.valid) {
        v.problems.push_back("row count differs from the derived map");
    }
    return v;
}

std::string em_to_json(const EntanglementMap &em) {
    nlohmann::json j;
    j["rows"] = em.rows;
    return j.dump() + "\n";
}

EntanglementMap em_from_json(const std::string &text) {
    try {
        const auto j = nlohmann::json::parse(text);
        return EntanglementMap{j.at("rows").get<std::vector<std::vector<int>>>()};
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(std::string("EM JSON: ") + e.what());
    }
}

} // namespace sqs
