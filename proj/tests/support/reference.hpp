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
// Test-only reference simulator and fixtures. The simulator builds each gate
// as an explicit basis-state map and shares no code with the library kernels.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "sqs/circuit.hpp"

namespace testsupport {

using C = std::complex<double>;
using Vec = std::vector<C>;

inline std::vector<C> ref_matrix(const sqs::GateOp &op) {
    const double r = 1.0 / std::sqrt(2.0);
    switch (op.kind) {
    case sqs::GateKind::Identity:
        return {1, 0, 0, 1};
    case sqs::GateKind::PauliX:
        return {0, 1, 1, 0};
    case sqs::GateKind::PauliZ:
        return {1, 0, 0, -1};
    case sqs::GateKind::Hadamard:
        return {r, r, r, -r};
    case sqs::GateKind::RotY:
        return {std::cos(op.angle), -std::sin(op.angle), std::sin(op.angle), std::cos(op.angle)};
    case sqs::GateKind::Unitary:
        return op.matrix;
    }
    return {};
}

inline int bit_of(std::uint64_t i, int q) { return static_cast<int>((i >> q) & 1U); }

/// out[i'] = sum_k M[k][l] amp[i] with l the local target index of i.
inline Vec ref_apply(const Vec &in, const sqs::GateOp &op) {
    const auto m = ref_matrix(op);
    const std::size_t d = std::size_t{1} << op.targets.size();
    Vec out(in.size(), C{0, 0});
    for (std::uint64_t i = 0; i < in.size(); ++i) {
        bool fire = true;
        for (const auto &c : op.controls) {
            fire = fire && bit_of(i, c.qubit) == c.value;
        }
        if (!fire) {
            out[i] += in[i];
            continue;
        }
        std::size_t local = 0;
        std::uint64_t base = i;
        for (std::size_t j = 0; j < op.targets.size(); ++j) {
            local |= static_cast<std::size_t>(bit_of(i, op.targets[j])) << j;
            base &= ~(std::uint64_t{1} << op.targets[j]);
        }
        for (std::size_t k = 0; k < d; ++k) {
            std::uint64_t dst = base;
            for (std::size_t j = 0; j < op.targets.size(); ++j) {
                if ((k >> j) & 1U) {
                    dst |= std::uint64_t{1} << op.targets[j];
                }
            }
            out[dst] += m[k * d + local] * in[i];
        }
    }
    return out;
}

inline Vec ref_run(const sqs::Circuit &c) {
    Vec v(std::size_t{1} << c.num_qubits, C{0, 0});
    v[0] = 1.0;
    for (const auto &op : c.ops) {
        v = ref_apply(v, op);
    }
    return v;
}

/// Bitstring (character i = qubit i) of basis index i.
inline std::string ref_bits(std::uint64_t i, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int q = 0; q < n; ++q) {
        s[static_cast<std::size_t>(q)] = bit_of(i, q) ? '1' : '0';
    }
    return s;
}

inline std::uint64_t ref_index(const std::string &bits) {
    std::uint64_t i = 0;
    for (std::size_t q = 0; q < bits.size(); ++q) {
        if (bits[q] == '1') {
            i |= std::uint64_t{1} << q;
        }
    }
    return i;
}

inline std::map<std::string, double> ref_distribution(const sqs::Circuit &c, double eps = 1e-12) {
    const auto v = ref_run(c);
    std::map<std::string, double> out;
    for (std::uint64_t i = 0; i < v.size(); ++i) {
        if (std::norm(v[i]) > eps) {
            out[ref_bits(i, c.num_qubits)] = std::norm(v[i]);
        }
    }
    return out;
}

inline std::vector<std::string> all_strings(int n) {
    std::vector<std::string> out;
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
        out.push_back(ref_bits(i, n));
    }
    return out;
}

/// The 4-qubit dataset with '1101' removed.
inline std::vector<std::string> dprime_entries() {
    std::vector<std::string> out;
    for (const auto &s : all_strings(4)) {
        if (s != "1101") {
            out.push_back(s);
        }
    }
    return out;
}

inline sqs::Circuit hadamards(int n) {
    sqs::Circuit c(n);
    for (int q = 0; q < n; ++q) {
        c.add(sqs::GateOp::h(q));
    }
    return c;
}

inline std::string alternating(int n) {
    std::string s;
    for (int i = 0; i < n; ++i) {
        s.push_back(i % 2 == 0 ? '0' : '1');
    }
    return s;
}

/// Random unitary 2x2 from three Euler angles and a phase.
inline std::vector<C> random_u2(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> a(0.0, 2.0 * M_PI);
    const double t = a(rng), p = a(rng), l = a(rng), g = a(rng);
    const C e = std::polar(1.0, g);
    return {e * std::cos(t / 2), -e * std::polar(1.0, l) * std::sin(t / 2),
            e * std::polar(1.0, p) * std::sin(t / 2), e * std::polar(1.0, p + l) * std::cos(t / 2)};
}

/// Random 4x4 unitary by Gram-Schmidt on a complex Gaussian matrix.
inline std::vector<C> random_u4(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<Vec> cols(4, Vec(4));
    for (auto &col : cols) {
        for (auto &x : col) {
            x = C{g(rng), g(rng)};
        }
    }
    for (std::size_t j = 0; j < 4; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            C dot{0, 0};
            for (std::size_t i = 0; i < 4; ++i) {
                dot += std::conj(cols[k][i]) * cols[j][i];
            }
            for (std::size_t i = 0; i < 4; ++i) {
                cols[j][i] -= dot * cols[k][i];
            }
        }
        double nrm = 0;
        for (const auto &x : cols[j]) {
            nrm += std::norm(x);
        }
        for (auto &x : cols[j]) {
            x /= std::sqrt(nrm);
        }
    }
    std::vector<C> m(16);
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            m[r * 4 + c] = cols[c][r];
        }
    }
    return m;
}

/// Random gate on n qubits: any kind, up to two controls with random values.
inline sqs::GateOp random_gate(int n, std::mt19937_64 &rng, bool allow_two_target = true) {
    std::uniform_int_distribution<int> qd(0, n - 1);
    std::uniform_int_distribution<int> kind(0, allow_two_target && n >= 2 ? 6 : 5);
    std::uniform_real_distribution<double> ang(-M_PI, M_PI);
    std::vector<int> used;
    auto fresh = [&] {
        for (;;) {
            const int q = qd(rng);
            if (std::find(used.begin(), used.end(), q) == used.end()) {
                used.push_back(q);
                return q;
            }
        }
    };
    const int k = kind(rng);
    const int t = fresh();
    sqs::GateOp op;
    switch (k) {
    case 0:
        op = sqs::GateOp::x(t);
        break;
    case 1:
        op = sqs::GateOp::z(t);
        break;
    case 2:
    case 3:
        op = sqs::GateOp::h(t);
        break;
    case 4:
        op = sqs::GateOp::ry(t, ang(rng));
        break;
    case 5:
        op = sqs::GateOp::unitary({t}, random_u2(rng));
        break;
    default:
        op = sqs::GateOp::unitary({t, fresh()}, random_u4(rng));
        break;
    }
    const int max_controls = std::min(2, n - static_cast<int>(used.size()));
    const int nc = std::uniform_int_distribution<int>(0, max_controls)(rng);
    for (int c = 0; c < nc; ++c) {
        op.controls.push_back(sqs::Control{fresh(), std::uniform_int_distribution<int>(0, 1)(rng)});
    }
    return op;
}

inline sqs::Circuit random_circuit(int n, int gates, std::mt19937_64 &rng) {
    sqs::Circuit c(n);
    for (int g = 0; g < gates; ++g) {
        c.add(random_gate(n, rng));
    }
    return c;
}

/// Binomial 3-sigma check for an observed count.
inline bool within_3sigma(std::size_t count, std::size_t shots, double p) {
    const double mean = p * static_cast<double>(shots);
    const double sigma = std::sqrt(static_cast<double>(shots) * p * (1.0 - p));
    return std::abs(static_cast<double>(count) - mean) <= 3.0 * sigma + 1e-9;
}

/// 6-qubit circuit whose map is {1,3} / {0,2,4} / {5}.
inline sqs::Circuit arbitrary_six_qubit() {
    sqs::Circuit c(6);
    for (int q = 0; q < 6; ++q) {
        c.add(sqs::GateOp::h(q));
    }
    c.add(sqs::GateOp::x(0, {{1, 1}}));
    c.add(sqs::GateOp::x(2, {{3, 1}}));
    c.add(sqs::GateOp::ry(4, 0.3, {{1, 1}, {3, 0}}));
    c.add(sqs::GateOp::x(5, {{3, 1}, {4, 1}}));
    return c;
}

} // namespace testsupport
