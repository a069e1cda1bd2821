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
#include "sqs/factored_state.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "sqs/errors.hpp"

namespace sqs {

namespace {

constexpr double kClassicalTolerance = 1e-12;

StateVector kron(const StateVector &low, const StateVector &high) {
    const auto a = low.amplitudes();
    const auto b = high.amplitudes();
    std::vector<Complex> out(a.size() * b.size());
    for (std::size_t j = 0; j < b.size(); ++j) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            out[j * a.size() + i] = a[i] * b[j];
        }
    }
    return StateVector::from_amplitudes(std::move(out));
}

} // namespace

FactoredState::FactoredState(int num_qubits, int register_limit)
    : num_qubits_(num_qubits), register_limit_(register_limit) {
    if (num_qubits < 1) {
        throw CapacityError("a state needs at least one qubit");
    }
    registers_.reserve(static_cast<std::size_t>(num_qubits));
    for (int q = 0; q < num_qubits; ++q) {
        registers_.push_back(Register{{q}, StateVector(1)});
    }
    reindex();
}

FactoredState::FactoredState(int num_qubits, const std::vector<std::vector<int>> &groups,
                             int register_limit)
    : num_qubits_(num_qubits), register_limit_(register_limit) {
    if (num_qubits < 1) {
        throw CapacityError("a state needs at least one qubit");
    }
    std::vector<bool> seen(static_cast<std::size_t>(num_qubits), false);
    for (const auto &g : groups) {
        if (g.empty()) {
            throw InvalidGate("empty register group");
        }
        if (static_cast<int>(g.size()) > register_limit) {
            throw CapacityError("register group of " + std::to_string(g.size()) +
                                " qubits exceeds the limit of " + std::to_string(register_limit));
        }
        for (int q : g) {
            if (q < 0 || q >= num_qubits || seen[static_cast<std::size_t>(q)]) {
                throw InvalidGate("register groups must partition the qubits");
            }
            seen[static_cast<std::size_t>(q)] = true;
        }
        registers_.push_back(Register{g, StateVector(static_cast<int>(g.size()), register_limit)});
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
        throw InvalidGate("register groups must cover every qubit");
    }
    reindex();
}

void FactoredState::reindex() {
    owner_.assign(static_cast<std::size_t>(num_qubits_), -1);
    position_.assign(static_cast<std::size_t>(num_qubits_), -1);
    for (std::size_t r = 0; r < registers_.size(); ++r) {
        const auto &qs = registers_[r].qubits;
        for (std::size_t j = 0; j < qs.size(); ++j) {
            owner_[static_cast<std::size_t>(qs[j])] = static_cast<int>(r);
            position_[static_cast<std::size_t>(qs[j])] = static_cast<int>(j);
        }
    }
}

int FactoredState::register_of(int qubit) const {
    if (qubit < 0 || qubit >= num_qubits_) {
        throw InvalidGate("qubit " + std::to_string(qubit) + " out of range");
    }
    return owner_[static_cast<std::size_t>(qubit)];
}

int FactoredState::max_register_qubits() const {
    int m = 0;
    for (const auto &r : registers_) {
        m = std::max(m, static_cast<int>(r.qubits.size()));
    }
    return m;
}

int FactoredState::merge(std::span<const int> qubits) {
    std::vector<int> regs;
    for (int q : qubits) {
        const int r = register_of(q);
        if (std::find(regs.begin(), regs.end(), r) == regs.end()) {
            regs.push_back(r);
        }
    }
    if (regs.empty()) {
        throw InvalidGate("merge of an empty qubit set");
    }
    if (regs.size() == 1) {
        return regs.front();
    }
    int total = 0;
    for (int r : regs) {
        total += static_cast<int>(registers_[static_cast<std::size_t>(r)].qubits.size());
    }
    if (total > register_limit_) {
        throw CapacityError("merging registers would create " + std::to_string(total) +
                            " entangled qubits, above the register limit of " +
                            std::to_string(register_limit_));
    }
    Register merged = registers_[static_cast<std::size_t>(regs.front())];
    for (std::size_t k = 1; k < regs.size(); ++k) {
        const auto &next = registers_[static_cast<std::size_t>(regs[k])];
        merged.state = kron(merged.state, next.state);
        merged.qubits.insert(merged.qubits.end(), next.qubits.begin(), next.qubits.end());
    }
    std::sort(regs.begin(), regs.end(), std::greater<>());
    for (int r : regs) {
        registers_.erase(registers_.begin() + r);
    }
    registers_.push_back(std::move(merged));
    reindex();
    return static_cast<int>(registers_.size()) - 1;
}

void FactoredState::apply(const GateOp &op) {
    validate_gate(op, num_qubits_);
    if (op.kind == GateKind::Identity) {
        return;
    }
    std::vector<Control> quantum_controls;
    for (const auto &c : op.controls) {
        int bit = 0;
        if (is_classical(c.qubit, &bit)) {
            if (bit != c.value) {
                return;
            }
        } else {
            quantum_controls.push_back(c);
        }
    }
    std::vector<int> touched(op.targets);
    for (const auto &c : quantum_controls) {
        touched.push_back(c.qubit);
    }
    const int r = merge(touched);
    auto &reg = registers_[static_cast<std::size_t>(r)];
    std::vector<int> local_targets;
    for (int t : op.targets) {
        local_targets.push_back(local_position(t));
    }
    std::vector<Control> local_controls;
    for (const auto &c : quantum_controls) {
        local_controls.push_back(Control{local_position(c.qubit), c.value});
    }
    apply_gate_local(reg.state.mutable_amplitudes(), op, local_targets, local_controls);
}

void FactoredState::run(const Circuit &circuit) {
    if (circuit.num_qubits > num_qubits_) {
        throw InvalidGate("circuit is wider than the state");
    }
    for (const auto &op : circuit.ops) {
        apply(op);
    }
}

double FactoredState::prob_of_bit(int qubit, int bit) const {
    const auto &reg = registers_[static_cast<std::size_t>(register_of(qubit))];
    return reg.state.prob_of_bit(local_position(qubit), bit);
}

double FactoredState::pattern_probability(std::span<const Control> pattern) const {
    std::map<int, std::vector<Control>> by_register;
    for (const auto &c : pattern) {
        by_register[register_of(c.qubit)].push_back(Control{local_position(c.qubit), c.value});
    }
    double p = 1.0;
    for (const auto &[r, local] : by_register) {
        p *= registers_[static_cast<std::size_t>(r)].state.pattern_probability(local);
        if (p == 0.0) {
            break;
        }
    }
    return p;
}

bool FactoredState::is_classical(int qubit, int *bit) const {
    const double p1 = prob_of_bit(qubit, 1);
    if (p1 <= kClassicalTolerance) {
        if (bit != nullptr) {
            *bit = 0;
        }
        return true;
    }
    if (p1 >= 1.0 - kClassicalTolerance) {
        if (bit != nullptr) {
            *bit = 1;
        }
        return true;
    }
    return false;
}

double FactoredState::collapse(int qubit, int bit) {
    auto &reg = registers_[static_cast<std::size_t>(register_of(qubit))];
    const double p = reg.state.collapse(local_position(qubit), bit);
    split_classical(qubit);
    return p;
}

int FactoredState::measure(int qubit, Rng &rng) {
    const double p1 = prob_of_bit(qubit, 1);
    const int bit = uniform01(rng) < p1 ? 1 : 0;
    collapse(qubit, bit);
    return bit;
}

void FactoredState::split_classical(int qubit) {
    const int r = register_of(qubit);
    Register reg = registers_[static_cast<std::size_t>(r)];
    if (reg.qubits.size() == 1) {
        return;
    }
    std::vector<Register> pieces;
    bool changed = true;
    while (changed && reg.qubits.size() > 1) {
        changed = false;
        for (std::size_t j = 0; j < reg.qubits.size(); ++j) {
            const double p1 = reg.state.prob_of_bit(static_cast<int>(j), 1);
            int bit = -1;
            if (p1 <= kClassicalTolerance) {
                bit = 0;
            } else if (p1 >= 1.0 - kClassicalTolerance) {
                bit = 1;
            }
            if (bit < 0) {
                continue;
            }
            // Keep the slice with qubit j == bit, dropping that index bit.
            const auto amps = reg.state.amplitudes();
            std::vector<Complex> rest(amps.size() / 2);
            for (std::size_t i = 0; i < rest.size(); ++i) {
                const auto full = kernels::insert_zero_bit(i, static_cast<int>(j)) |
                                  (static_cast<kernels::Index>(bit) << j);
                rest[i] = amps[full];
            }
            double norm = 0.0;
            for (const auto &a : rest) {
                norm += std::norm(a);
            }
            const double scale = 1.0 / std::sqrt(norm);
            for (auto &a : rest) {
                a *= scale;
            }
            StateVector single(1);
            if (bit == 1) {
                single.apply(GateOp::x(0));
            }
            pieces.push_back(Register{{reg.qubits[j]}, std::move(single)});
            reg.qubits.erase(reg.qubits.begin() + static_cast<std::ptrdiff_t>(j));
            reg.state = StateVector::from_amplitudes(std::move(rest));
            changed = true;
            break;
        }
    }
    if (pieces.empty()) {
        return;
    }
    registers_[static_cast<std::size_t>(r)] = std::move(reg);
    for (auto &p : pieces) {
        registers_.push_back(std::move(p));
    }
    reindex();
}

StateVector FactoredState::to_dense(int limit) const {
    StateVector out(num_qubits_, limit);
    auto amps = out.mutable_amplitudes();
    for (std::size_t g = 0; g < amps.size(); ++g) {
        Complex a{1.0, 0.0};
        for (const auto &reg : registers_) {
            std::size_t local = 0;
            for (std::size_t j = 0; j < reg.qubits.size(); ++j) {
                local |= ((g >> reg.qubits[j]) & 1U) << j;
            }
            a *= reg.state.amplitude(local);
            if (a == Complex{0.0, 0.0}) {
                break;
            }
        }
        amps[g] = a;
    }
    return out;
}

Histogram FactoredState::sample_counts(std::span<const int> qubits, std::size_t shots,
                                       Rng &rng) const {
    std::vector<int> involved;
    for (int q : qubits) {
        const int r = register_of(q);
        if (std::find(involved.begin(), involved.end(), r) == involved.end()) {
            involved.push_back(r);
        }
    }
    std::vector<std::vector<double>> cumulative(involved.size());
    for (std::size_t k = 0; k < involved.size(); ++k) {
        const auto amps = registers_[static_cast<std::size_t>(involved[k])].state.amplitudes();
        double acc = 0.0;
        cumulative[k].reserve(amps.size());
        for (const auto &a : amps) {
            acc += std::norm(a);
            cumulative[k].push_back(acc);
        }
    }
    Histogram h;
    std::vector<std::size_t> outcome(involved.size());
    for (std::size_t s = 0; s < shots; ++s) {
        for (std::size_t k = 0; k < involved.size(); ++k) {
            const auto &cum = cumulative[k];
            const double u = uniform01(rng) * cum.back();
            auto it = std::upper_bound(cum.begin(), cum.end(), u);
            outcome[k] = std::min(static_cast<std::size_t>(std::distance(cum.begin(), it)),
                                  cum.size() - 1);
        }
        std::string key(qubits.size(), '0');
        for (std::size_t j = 0; j < qubits.size(); ++j) {
            const int r = register_of(qubits[j]);
            const auto k = static_cast<std::size_t>(
                std::find(involved.begin(), involved.end(), r) - involved.begin());
            if ((outcome[k] >> local_position(qubits[j])) & 1U) {
                key[j] = '1';
            }
        }
        ++h[key];
    }
    return h;
}

void FactoredState::check_invariants() const {
    std::vector<int> seen(static_cast<std::size_t>(num_qubits_), 0);
    for (const auto &reg : registers_) {
        if (reg.state.num_qubits() != static_cast<int>(reg.qubits.size())) {
            throw ContractViolation("register width does not match its qubit list");
        }
        for (int q : reg.qubits) {
            if (q < 0 || q >= num_qubits_ || seen[static_cast<std::size_t>(q)]++) {
                throw ContractViolation("registers do not partition the qubits");
            }
        }
        if (std::abs(reg.state.norm_squared() - 1.0) > 1e-9) {
            throw ContractViolation("register is not normalized");
        }
    }
    if (std::count(seen.begin(), seen.end(), 1) != num_qubits_) {
        throw ContractViolation("registers do not cover every qubit");
    }
}

} // namespace sqs
