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
#include "sqs/encoding.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

#include "sqs/bitstring.hpp"
#include "sqs/errors.hpp"
#include "sqs/state_vector.hpp"

namespace sqs {

namespace {

constexpr double kSupportEps = 1e-12;

std::vector<Control> prefix_controls(const std::string &bits) {
    std::vector<Control> controls;
    const auto n = static_cast<int>(bits.size());
    for (int m = 0; m + 1 < n; ++m) {
        controls.push_back(Control{m, bits[static_cast<std::size_t>(m)] == '1' ? 1 : 0});
    }
    return controls;
}

std::string partner_of(std::string bits) {
    auto &tail = bits.back();
    tail = tail == '1' ? '0' : '1';
    return bits;
}

void check_width(const Circuit &circuit, const std::string &bits) {
    if (!is_bitstring(bits) || static_cast<int>(bits.size()) != circuit.num_qubits) {
        throw ParseError("'" + bits + "' is not a bitstring of length " +
                         std::to_string(circuit.num_qubits));
    }
}

/// Tail amplitudes (a0, a1) for the prefix of `bits`.
std::pair<Complex, Complex> tail_amplitudes(const StateVector &s, const std::string &bits) {
    const auto idx = bits_to_index(bits);
    const int tail = static_cast<int>(bits.size()) - 1;
    const auto base = idx & ~(std::uint64_t{1} << tail);
    return {s.amplitude(base), s.amplitude(base | (std::uint64_t{1} << tail))};
}

} // namespace

Dataset make_dataset(std::vector<std::string> entries) {
    if (entries.empty()) {
        throw ParseError("dataset is empty");
    }
    const auto n = entries.front().size();
    std::set<std::string> seen;
    for (const auto &e : entries) {
        if (!is_bitstring(e) || e.size() != n) {
            throw ParseError("dataset entry '" + e + "' is not a bitstring of length " +
                             std::to_string(n));
        }
        if (!seen.insert(e).second) {
            throw ParseError("duplicate dataset entry '" + e + "'");
        }
    }
    if (n > 62) {
        throw CapacityError("dataset bit length above 62 is not supported");
    }
    return Dataset{static_cast<int>(n), std::move(entries)};
}

Dataset basis_map(std::size_t item_count) {
    if (item_count == 0) {
        throw ParseError("cannot map an empty item sequence");
    }
    const int n = std::max(1, static_cast<int>(std::bit_width(item_count - 1)));
    Dataset d{n, {}};
    d.entries.reserve(item_count);
    for (std::size_t i = 0; i < item_count; ++i) {
        d.entries.push_back(index_to_bits(i, n));
    }
    return d;
}

std::vector<GateOp> removal_block(const std::string &bits) {
    const int tail = static_cast<int>(bits.size()) - 1;
    auto controls = prefix_controls(bits);
    std::vector<GateOp> block;
    if (bits.back() == '0') {
        block.push_back(GateOp::z(tail, controls));
    }
    block.push_back(GateOp::h(tail, std::move(controls)));
    return block;
}

RemovalPlan plan_removals(const Dataset &dataset) {
    const int n = dataset.bit_length;
    if (n > 30) {
        throw CapacityError("encoding enumerates the complement; bit length above 30 is too wide");
    }
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<bool> present(total, false);
    for (const auto &e : dataset.entries) {
        present[bits_to_index(e)] = true;
    }
    const std::uint64_t tail_bit = std::uint64_t{1} << (n - 1);
    std::vector<std::pair<std::string, std::string>> conflicts;
    RemovalPlan plan{n, {}};
    for (std::uint64_t i = 0; i < total; ++i) {
        if (present[i]) {
            continue;
        }
        if ((i & tail_bit) == 0 && !present[i | tail_bit]) {
            conflicts.emplace_back(index_to_bits(i, n), index_to_bits(i | tail_bit, n));
            continue;
        }
        if ((i & tail_bit) != 0 && !present[i & ~tail_bit]) {
            continue;  // already reported with its tail-0 partner
        }
        Removal r;
        r.state = index_to_bits(i, n);
        for (int m = 0; m + 1 < n; ++m) {
            if (r.state[static_cast<std::size_t>(m)] == '0') {
                r.zero_controls.push_back(m);
            }
        }
        r.tail_op = r.state.back() == '1' ? TailOp::Hadamard : TailOp::ZThenHadamard;
        plan.removals.push_back(std::move(r));
    }
    if (!conflicts.empty()) {
        throw PartnerConflict(std::move(conflicts));
    }
    return plan;
}

Circuit encode(const Dataset &dataset) {
    const auto plan = plan_removals(dataset);
    Circuit c(dataset.bit_length);
    for (int q = 0; q < dataset.bit_length; ++q) {
        c.add(GateOp::h(q));
    }
    for (const auto &r : plan.removals) {
        for (auto &op : removal_block(r.state)) {
            c.add(std::move(op));
        }
    }
    return c;
}

Circuit pop_state(const Circuit &circuit, const std::string &bits) {
    check_width(circuit, bits);
    const auto state = simulate(circuit);
    const auto [a0, a1] = tail_amplitudes(state, bits);
    const Complex mine = bits.back() == '1' ? a1 : a0;
    const Complex other = bits.back() == '1' ? a0 : a1;
    if (std::norm(mine) <= kSupportEps) {
        throw NotInSupport("state " + bits + " is not in the support");
    }
    if (std::norm(other) <= kSupportEps) {
        throw PartnerConflict({{bits, partner_of(bits)}});
    }
    if (std::abs(a0 - a1) > 1e-9 * std::max(1.0, std::abs(a0))) {
        throw ContractViolation("tail qubit for prefix of " + bits +
                                " is not in equal superposition; cannot pop");
    }
    Circuit out = circuit;
    for (auto &op : removal_block(bits)) {
        out.add(std::move(op));
    }
    return out;
}

Circuit add_state(const Circuit &circuit, const std::string &bits) {
    check_width(circuit, bits);
    const auto state = simulate(circuit);
    const auto [a0, a1] = tail_amplitudes(state, bits);
    const Complex mine = bits.back() == '1' ? a1 : a0;
    const Complex other = bits.back() == '1' ? a0 : a1;
    if (std::norm(mine) > kSupportEps) {
        throw AlreadyPresent("state " + bits + " is already in the support");
    }
    if (std::norm(other) <= kSupportEps) {
        throw NotInSupport("prefix of " + bits + " has no support; nothing to split");
    }
    const int tail = static_cast<int>(bits.size()) - 1;
    const auto controls = prefix_controls(bits);
    Circuit out = circuit;
    // Tail is |1> when adding b0: flip to |0> first so H yields |+>.
    if (bits.back() == '0') {
        out.add(GateOp::x(tail, controls));
    }
    out.add(GateOp::h(tail, controls));
    return out;
}

std::vector<std::string> simulated_support(const Circuit &circuit, double threshold) {
    const auto state = simulate(circuit);
    std::vector<std::string> support;
    for (std::size_t i = 0; i < state.size(); ++i) {
        if (std::norm(state.amplitude(i)) > threshold) {
            support.push_back(index_to_bits(i, circuit.num_qubits));
        }
    }
    return support;
}

EncodingReport verify_encoding(const Circuit &circuit, const Dataset &dataset) {
    if (circuit.num_qubits != dataset.bit_length) {
        throw ParseError("circuit has " + std::to_string(circuit.num_qubits) +
                         " qubits but dataset entries have " +
                         std::to_string(dataset.bit_length) + " bits");
    }
    const auto state = simulate(circuit);
    const int n = circuit.num_qubits;
    const double uniform = std::ldexp(1.0, -n);
    std::set<std::string> wanted(dataset.entries.begin(), dataset.entries.end());
    EncodingReport report;
    for (std::size_t i = 0; i < state.size(); ++i) {
        const double p = std::norm(state.amplitude(i));
        if (p <= kSupportEps) {
            continue;
        }
        auto bits = index_to_bits(i, n);
        report.profile[bits] = p;
        if (!wanted.contains(bits)) {
            report.extra.push_back(bits);
        } else if (std::abs(p - 2.0 * uniform) < 1e-9) {
            report.doubled.push_back(bits);
        }
    }
    for (const auto &e : dataset.entries) {
        if (!report.profile.contains(e)) {
            report.missing.push_back(e);
        }
    }
    std::sort(report.missing.begin(), report.missing.end());
    report.ok = report.missing.empty() && report.extra.empty();
    return report;
}

} // namespace sqs
