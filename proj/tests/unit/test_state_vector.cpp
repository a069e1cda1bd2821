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
#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "reference.hpp"
#include "sqs/bitstring.hpp"
#include "sqs/encoding.hpp"
#include "sqs/errors.hpp"
#include "sqs/state_vector.hpp"

using sqs::Control;
using sqs::GateOp;
using sqs::StateVector;

namespace {

constexpr double kTol = 1e-12;
const double kR = 1.0 / std::sqrt(2.0);

double amp_prob(const StateVector &s, const std::string &bits) {
    return std::norm(s.amplitude(testsupport::ref_index(bits)));
}

} // namespace

TEST(InitState, GroundStates) {
    const auto s1 = sqs::init_state(1);
    ASSERT_EQ(s1.size(), 2U);
    EXPECT_EQ(s1.amplitude(0), testsupport::C(1, 0));
    EXPECT_EQ(s1.amplitude(1), testsupport::C(0, 0));
    const auto s2 = sqs::init_state(2);
    ASSERT_EQ(s2.size(), 4U);
    EXPECT_EQ(s2.amplitude(0), testsupport::C(1, 0));
    for (std::size_t i = 1; i < 4; ++i) {
        EXPECT_EQ(s2.amplitude(i), testsupport::C(0, 0));
    }
}

TEST(InitState, OverDenseLimitIsCapacityError) {
    EXPECT_THROW((void)sqs::init_state(27), sqs::CapacityError);
    EXPECT_THROW((void)sqs::init_state(0), sqs::CapacityError);
    EXPECT_THROW((void)sqs::init_state(5, 4), sqs::CapacityError);
}

TEST(Apply, HadamardOnZero) {
    const auto s = sqs::apply(sqs::init_state(1), GateOp::h(0));
    EXPECT_NEAR(s.amplitude(0).real(), kR, kTol);
    EXPECT_NEAR(s.amplitude(1).real(), kR, kTol);
}

TEST(Apply, ControlledZOnOneOne) {
    auto s = sqs::init_state(2);
    s.apply(GateOp::x(0));
    s.apply(GateOp::x(1));
    s.apply(GateOp::z(1, {Control{0, 1}}));
    EXPECT_NEAR(s.amplitude(3).real(), -1.0, kTol);
}

TEST(Apply, ConjugatedMultiControlledHadamardRemovesOneState) {
    // (I x X x I) MCH (I x X x I) on H^3 |000>
    sqs::Circuit c = testsupport::hadamards(3);
    c.add(GateOp::x(1));
    c.add(GateOp::h(2, {Control{0, 1}, Control{1, 1}}));
    c.add(GateOp::x(1));
    const auto s = sqs::simulate(c);
    EXPECT_NEAR(amp_prob(s, "101"), 0.0, kTol);
    EXPECT_NEAR(amp_prob(s, "100"), 2.0 / 8.0, kTol);
    for (const auto &b : {"000", "010", "110", "001", "011", "111"}) {
        EXPECT_NEAR(amp_prob(s, b), 1.0 / 8.0, kTol) << b;
    }
    // Native zero-valued control gives the same state.
    sqs::Circuit native = testsupport::hadamards(3);
    native.add(GateOp::h(2, {Control{0, 1}, Control{1, 0}}));
    const auto t = sqs::simulate(native);
    for (std::size_t i = 0; i < 8; ++i) {
        EXPECT_LT(std::abs(s.amplitude(i) - t.amplitude(i)), kTol);
    }
}

TEST(Apply, RejectsNonUnitaryAndBadIndices) {
    auto s = sqs::init_state(2);
    EXPECT_THROW(s.apply(GateOp::unitary({0}, {1, 1, 0, 1})), sqs::InvalidGate);
    EXPECT_THROW(s.apply(GateOp::h(2)), sqs::InvalidGate);
    EXPECT_THROW(s.apply(GateOp::x(0, {Control{0, 1}})), sqs::InvalidGate);
    EXPECT_THROW(s.apply(GateOp::x(0, {Control{1, 2}})), sqs::InvalidGate);
}

TEST(Apply, MatchesReferenceOnRandomCircuits) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const auto c = testsupport::random_circuit(5, 30, rng);
        const auto s = sqs::simulate(c);
        const auto ref = testsupport::ref_run(c);
        for (std::size_t i = 0; i < ref.size(); ++i) {
            ASSERT_LT(std::abs(s.amplitude(i) - ref[i]), 1e-10) << "trial " << trial;
        }
    }
}

TEST(Apply, NormPreservedOverThousandRandomGates) {
    std::mt19937_64 rng(12);
    auto s = sqs::init_state(8);
    for (int g = 0; g < 1000; ++g) {
        s.apply(testsupport::random_gate(8, rng));
    }
    EXPECT_LT(std::abs(s.norm_squared() - 1.0), 1e-8);
}

TEST(Apply, BuiltinMatricesAreUnitary) {
    using sqs::unitarity_error;
    auto as_vec = [](const sqs::kernels::Mat2 &m) {
        return std::vector<testsupport::C>(m.begin(), m.end());
    };
    EXPECT_LT(unitarity_error(as_vec(sqs::hadamard_matrix()), 2), 1e-9);
    EXPECT_LT(unitarity_error(as_vec(sqs::pauli_x_matrix()), 2), 1e-9);
    EXPECT_LT(unitarity_error(as_vec(sqs::pauli_z_matrix()), 2), 1e-9);
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> a(-10, 10);
    for (int i = 0; i < 100; ++i) {
        EXPECT_LT(unitarity_error(as_vec(sqs::ry_matrix(a(rng))), 2), 1e-9);
    }
}

TEST(Apply, RotationUsesFullAngle) {
    const auto m = sqs::ry_matrix(M_PI / 2);
    EXPECT_NEAR(m[0].real(), 0.0, kTol);
    EXPECT_NEAR(m[1].real(), -1.0, kTol);
    EXPECT_NEAR(m[2].real(), 1.0, kTol);
}

TEST(Measure, DefiniteOne) {
    auto s = sqs::apply(sqs::init_state(1), GateOp::x(0));
    sqs::Rng rng(1);
    for (int i = 0; i < 20; ++i) {
        auto [bit, after] = sqs::measure(s, 0, rng);
        EXPECT_EQ(bit, 1);
        EXPECT_NEAR(std::norm(after.amplitude(1)), 1.0, kTol);
    }
}

TEST(Measure, HadamardFrequencies) {
    const auto plus = sqs::apply(sqs::init_state(1), GateOp::h(0));
    sqs::Rng rng(2024);
    std::size_t ones = 0;
    const std::size_t shots = 10000;
    for (std::size_t i = 0; i < shots; ++i) {
        auto [bit, after] = sqs::measure(plus, 0, rng);
        ones += static_cast<std::size_t>(bit);
        EXPECT_NEAR(std::norm(after.amplitude(static_cast<std::size_t>(bit))), 1.0, kTol);
    }
    EXPECT_TRUE(testsupport::within_3sigma(ones, shots, 0.5)) << ones;
}

TEST(Measure, ZeroProbabilityCollapseRejected) {
    auto s = sqs::init_state(2);
    EXPECT_THROW(s.collapse(1, 1), sqs::InvalidCollapse);
    auto plus = sqs::apply(sqs::init_state(1), GateOp::h(0));
    EXPECT_NEAR(plus.collapse(0, 1), 0.5, kTol);
    EXPECT_NEAR(std::norm(plus.amplitude(1)), 1.0, kTol);
}

TEST(Measure, BranchFrequencyMatchesMarginal) {
    sqs::Circuit c(3);
    c.add(GateOp::ry(0, 0.7));
    c.add(GateOp::h(1, {Control{0, 1}}));
    c.add(GateOp::ry(2, 1.1, {Control{1, 0}}));
    const auto s = sqs::simulate(c);
    sqs::Rng rng(99);
    for (int q = 0; q < 3; ++q) {
        const double p = sqs::prob_of_bit(s, q, 1);
        std::size_t ones = 0;
        for (int i = 0; i < 8000; ++i) {
            auto copy = s;
            ones += static_cast<std::size_t>(copy.measure(q, rng));
        }
        EXPECT_TRUE(testsupport::within_3sigma(ones, 8000, p)) << "qubit " << q;
    }
}

TEST(ProbOfBit, Examples) {
    EXPECT_EQ(sqs::prob_of_bit(sqs::init_state(1), 0, 1), 0.0);
    EXPECT_NEAR(sqs::prob_of_bit(sqs::apply(sqs::init_state(1), GateOp::h(0)), 0, 1), 0.5, kTol);
    auto s = sqs::init_state(3);
    s.apply(GateOp::ry(1, 0.4));
    EXPECT_NEAR(s.prob_of_bit(1, 1), std::pow(std::sin(0.4), 2), kTol);
    EXPECT_NEAR(s.prob_of_bit(1, 0) + s.prob_of_bit(1, 1), 1.0, kTol);
}

TEST(SampleCounts, DefiniteState) {
    auto s = sqs::init_state(2);
    s.apply(GateOp::x(0));
    sqs::Rng rng(5);
    const std::vector<int> qs{0, 1};
    const auto h = sqs::sample_counts(s, qs, 100, rng);
    ASSERT_EQ(h.size(), 1U);
    EXPECT_EQ(h.at("10"), 100U);
}

TEST(SampleCounts, UniformFourQubits) {
    const auto s = sqs::simulate(testsupport::hadamards(4));
    sqs::Rng rng(6);
    const std::vector<int> qs{0, 1, 2, 3};
    const auto h = sqs::sample_counts(s, qs, 16000, rng);
    std::size_t total = 0;
    for (const auto &b : testsupport::all_strings(4)) {
        const auto it = h.find(b);
        const std::size_t c = it == h.end() ? 0 : it->second;
        EXPECT_TRUE(testsupport::within_3sigma(c, 16000, 1.0 / 16)) << b << " " << c;
        total += c;
    }
    EXPECT_EQ(total, 16000U);
}

TEST(SampleCounts, DeterministicGivenSeed) {
    const auto s = sqs::simulate(testsupport::hadamards(3));
    const std::vector<int> qs{0, 2};
    sqs::Rng a(77), b(77);
    EXPECT_EQ(sqs::sample_counts(s, qs, 500, a), sqs::sample_counts(s, qs, 500, b));
}

TEST(SampleCounts, RemovedStateNeverSampled) {
    const auto c = sqs::encode(sqs::make_dataset(testsupport::dprime_entries()));
    const auto s = sqs::simulate(c);
    sqs::Rng rng(8);
    const std::vector<int> qs{0, 1, 2, 3};
    const auto h = sqs::sample_counts(s, qs, 32000, rng);
    EXPECT_EQ(h.count("1101"), 0U);
    EXPECT_TRUE(testsupport::within_3sigma(h.at("1100"), 32000, 2.0 / 16));
    EXPECT_TRUE(testsupport::within_3sigma(h.at("0000"), 32000, 1.0 / 16));
}

TEST(SequenceUnitary, ColumnsAreBasisImages) {
    const std::vector<GateOp> ops{GateOp::h(0), GateOp::x(1, {Control{0, 1}})};
    const auto u = sqs::sequence_unitary(ops, 2);
    // Column 0 is the Bell state (|00> + |11>)/sqrt2.
    EXPECT_NEAR(u[0 * 4 + 0].real(), kR, kTol);
    EXPECT_NEAR(u[3 * 4 + 0].real(), kR, kTol);
    EXPECT_NEAR(std::abs(u[1 * 4 + 0]), 0.0, kTol);
}

TEST(Bitstring, ConventionIsLittleEndian) {
    EXPECT_EQ(sqs::bits_to_index("100"), 1U);
    EXPECT_EQ(sqs::bits_to_index("001"), 4U);
    EXPECT_EQ(sqs::index_to_bits(6, 4), "0110");
    EXPECT_THROW((void)sqs::bits_to_index("10a"), sqs::ParseError);
}
