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
#include "sqs/bench_table.hpp"

#include <cmath>
#include <sstream>

#include "sqs/bitstring.hpp"
#include "sqs/encoding.hpp"
#include "sqs/engine.hpp"
#include "sqs/errors.hpp"
#include "sqs/random.hpp"

namespace sqs {

namespace {

std::string alternating(int n) {
    std::string s;
    for (int i = 0; i < n; ++i) {
        s.push_back(i % 2 == 0 ? '0' : '1');
    }
    return s;
}

std::string format_number(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

} // namespace

Scenario parse_scenario(const std::string &name) {
    if (name == "full") {
        return Scenario::Full;
    }
    if (name == "two-row") {
        return Scenario::TwoRow;
    }
    if (name == "chain") {
        return Scenario::Chain;
    }
    throw ParseError("unknown scenario '" + name + "' (expected full, two-row or chain)");
}

std::string scenario_name(Scenario s) {
    switch (s) {
    case Scenario::Full:
        return "full";
    case Scenario::TwoRow:
        return "two-row";
    case Scenario::Chain:
        return "chain";
    }
    return "full";
}

Circuit scenario_circuit(Scenario s, int n) {
    if (n < 1 || (s != Scenario::Full && n < 2)) {
        throw ParseError("scenario " + scenario_name(s) + " needs more qubits than " +
                         std::to_string(n));
    }
    if (s == Scenario::TwoRow) {
        std::vector<std::string> entries;
        const std::string all_ones(static_cast<std::size_t>(n), '1');
        for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
            auto bits = index_to_bits(i, n);
            if (bits != all_ones) {
                entries.push_back(std::move(bits));
            }
        }
        return encode(make_dataset(std::move(entries)));
    }
    Circuit c(n);
    for (int q = 0; q < n; ++q) {
        c.add(GateOp::h(q));
    }
    if (s == Scenario::Chain) {
        for (int q = 0; q + 1 < n; ++q) {
            c.add(GateOp::z(q + 1, {Control{q, 1}}));
        }
    }
    return c;
}

std::string scenario_target(Scenario s, int n) {
    return s == Scenario::TwoRow ? std::string(static_cast<std::size_t>(n), '0') : alternating(n);
}

std::vector<ComplexityRow> complexity_table(const std::vector<int> &n_values, Scenario scenario,
                                            std::uint64_t seed, std::size_t trials) {
    std::vector<ComplexityRow> rows;
    for (std::size_t k = 0; k < n_values.size(); ++k) {
        const int n = n_values[k];
        ComplexityRow row;
        row.n = n;
        row.items = std::uint64_t{1} << n;
        if (scenario == Scenario::TwoRow) {
            row.items -= 1;
        }
        row.classical_expected = static_cast<double>(row.items) / 2.0;
        row.grover = grover_iterations(row.items);

        const auto problem = make_problem(scenario_circuit(scenario, n), scenario_target(scenario, n));
        const auto result = run_sqs(problem);
        row.sqs = result.oracle_calls;
        row.em_rows = problem.em.num_rows();

        // Linear scan over N items with a uniformly random target position.
        Rng rng(derive_seed(seed, k));
        std::uniform_int_distribution<std::uint64_t> pick(1, row.items);
        double total = 0.0;
        for (std::size_t t = 0; t < trials; ++t) {
            total += static_cast<double>(pick(rng));
        }
        row.classical_measured = trials == 0 ? 0.0 : total / static_cast<double>(trials);
        rows.push_back(row);
    }
    return rows;
}

std::string table_csv(const std::vector<ComplexityRow> &rows) {
    std::string out = "N,classical,grover,sqs\n";
    for (const auto &r : rows) {
        out += std::to_string(r.items) + "," + format_number(r.classical_expected) + "," +
               std::to_string(r.grover) + "," + std::to_string(r.sqs) + "\n";
    }
    return out;
}

std::string plot_csv(const std::vector<ComplexityRow> &rows) {
    std::string out = "n,log2_N,classical_expected,classical_measured,grover,sqs,em_rows\n";
    for (const auto &r : rows) {
        out += std::to_string(r.n) + "," + format_number(std::log2(static_cast<double>(r.items))) +
               "," + format_number(r.classical_expected) + "," +
               format_number(r.classical_measured) + "," + std::to_string(r.grover) + "," +
               std::to_string(r.sqs) + "," + std::to_string(r.em_rows) + "\n";
    }
    return out;
}

} // namespace sqs
