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

#include <algorithm>
#include <random>
#include <set>

#include "reference.hpp"
#include "sqs/emap.hpp"
#include "sqs/encoding.hpp"
#include "sqs/errors.hpp"

using sqs::GateOp;
using testsupport::ref_distribution;

namespace {

std::set<std::string> support_of(const sqs::Circuit &c) {
    std::set<std::string> out;
    for (const auto &[k, p] : ref_distribution(c)) {
        out.insert(k);
    }
    return out;
}

/// True when the complement has b0 and b1 for some prefix b.
bool has_partner_conflict(const std::set<std::string> &entries, int n) {
    std::set<std::string> missing_prefix;
    for (const auto &s : testsupport::all_strings(n)) {
        if (!entries.count(s)) {
            if (!missing_prefix.insert(s.substr(0, s.size() - 1)).second) {
                return true;
            }
        }
    }
    return false;
}

} // namespace

TEST(BasisMap, Examples) {
    EXPECT_EQ(sqs::basis_map(4).entries, (std::vector<std::string>{"00", "10", "01", "11"}));
    EXPECT_EQ(sqs::basis_map(5).entries,
              (std::vector<std::string>{"000", "100", "010", "110", "001"}));
    EXPECT_EQ(sqs::basis_map(1).entries, (std::vector<std::string>{"0"}));
    const auto d = sqs::basis_map(12);
    EXPECT_EQ(d.bit_length, 4);
    for (std::size_t i = 0; i < 8; ++i) {
        EXPECT_EQ(d.entries[i].back(), '0');
    }
    for (std::size_t i = 8; i < 12; ++i) {
        EXPECT_EQ(d.entries[i].back(), '1');
    }
}

TEST(Encode, FullDatasetIsPlainHadamards) {
    const auto c = sqs::encode(sqs::make_dataset(testsupport::all_strings(4)));
    EXPECT_EQ(c, testsupport::hadamards(4));
}

TEST(Encode, OneRemovedStateDoublesItsPartner) {
    const auto c = sqs::encode(sqs::make_dataset(testsupport::dprime_entries()));
    const auto k = sqs::count_gates(c);
    EXPECT_EQ(k.controlled, 1U);
    EXPECT_EQ(c.ops.back().kind, sqs::GateKind::Hadamard);
    const auto dist = ref_distribution(c);
    EXPECT_EQ(dist.count("1101"), 0U);
    EXPECT_NEAR(dist.at("1100"), 2.0 / 16, 1e-12);
    for (const auto &[s, p] : dist) {
        if (s != "1100") {
            EXPECT_NEAR(p, 1.0 / 16, 1e-12) << s;
        }
    }
    EXPECT_EQ(sqs::build_entanglement_map(c).num_rows(), 2);
}

TEST(Encode, PartnerConflictIsReported) {
    std::vector<std::string> entries;
    for (const auto &s : testsupport::all_strings(3)) {
        if (s != "110" && s != "111") {
            entries.push_back(s);
        }
    }
    try {
        (void)sqs::encode(sqs::make_dataset(entries));
        FAIL() << "expected PartnerConflict";
    } catch (const sqs::PartnerConflict &e) {
        ASSERT_EQ(e.pairs().size(), 1U);
        EXPECT_EQ(e.pairs()[0], std::make_pair(std::string("110"), std::string("111")));
    }
}

TEST(Encode, RemovalOrderIsAscendingIndex) {
    std::vector<std::string> entries;
    for (const auto &s : testsupport::all_strings(3)) {
        if (s != "001" && s != "100") {  // indices 4 and 1
            entries.push_back(s);
        }
    }
    const auto plan = sqs::plan_removals(sqs::make_dataset(entries));
    ASSERT_EQ(plan.removals.size(), 2U);
    EXPECT_EQ(plan.removals[0].state, "100");
    EXPECT_EQ(plan.removals[0].tail_op, sqs::TailOp::ZThenHadamard);
    EXPECT_EQ(plan.removals[1].state, "001");
    EXPECT_EQ(plan.removals[1].tail_op, sqs::TailOp::Hadamard);
    EXPECT_EQ(plan.removals[1].zero_controls, (std::vector<int>{0, 1}));
}

TEST(PopState, ConjugatedHadamardBlock) {
    const auto c = sqs::pop_state(testsupport::hadamards(3), "101");
    const auto lowered = sqs::lower_zero_controls(c);
    ASSERT_EQ(lowered.ops.size(), 6U);
    EXPECT_EQ(lowered.ops[3], GateOp::x(1));
    EXPECT_EQ(lowered.ops[4], GateOp::h(2, {{0, 1}, {1, 1}}));
    EXPECT_EQ(lowered.ops[5], GateOp::x(1));
    EXPECT_EQ(support_of(c).count("101"), 0U);
}

TEST(PopState, TailZeroUsesPhaseThenHadamard) {
    const auto c = sqs::pop_state(testsupport::hadamards(3), "110");
    ASSERT_EQ(c.ops.size(), 5U);
    EXPECT_EQ(c.ops[3].kind, sqs::GateKind::PauliZ);
    EXPECT_EQ(c.ops[4].kind, sqs::GateKind::Hadamard);
    const auto dist = ref_distribution(c);
    EXPECT_EQ(dist.count("110"), 0U);
    EXPECT_NEAR(dist.at("111"), 2.0 / 8, 1e-12);
}

TEST(PopState, SupportShrinksByOne) {
    const auto base = sqs::encode(sqs::make_dataset(testsupport::dprime_entries()));
    const auto before = support_of(base);
    const auto after = support_of(sqs::pop_state(base, "0110"));
    EXPECT_EQ(after.size(), before.size() - 1);
    EXPECT_EQ(after.count("0110"), 0U);
}

TEST(PopState, Errors) {
    const auto base = sqs::encode(sqs::make_dataset(testsupport::dprime_entries()));
    EXPECT_THROW((void)sqs::pop_state(base, "1101"), sqs::NotInSupport);
    EXPECT_THROW((void)sqs::pop_state(base, "1100"), sqs::PartnerConflict);
    EXPECT_THROW((void)sqs::pop_state(base, "110"), sqs::ParseError);
}

TEST(AddState, GrowsSupportByOne) {
    sqs::Circuit c(3);
    c.add(GateOp::h(0));
    c.add(GateOp::h(1));
    ASSERT_EQ(support_of(c), (std::set<std::string>{"000", "100", "010", "110"}));
    const auto grown = sqs::add_state(c, "001");
    const auto s = support_of(grown);
    EXPECT_EQ(s.size(), 5U);
    EXPECT_EQ(s.count("001"), 1U);
    EXPECT_EQ(s.count("000"), 1U);
}

TEST(AddState, ErrorsAndRoundTrip) {
    EXPECT_THROW((void)sqs::add_state(testsupport::hadamards(3), "011"), sqs::AlreadyPresent);
    const auto base = sqs::encode(sqs::make_dataset(testsupport::dprime_entries()));
    const auto back = sqs::pop_state(sqs::add_state(base, "1101"), "1101");
    EXPECT_EQ(support_of(back), support_of(base));
    const auto re_added = sqs::add_state(base, "1101");
    EXPECT_EQ(support_of(re_added).size(), 16U);
}

TEST(VerifyEncoding, Examples) {
    const auto full = sqs::make_dataset(testsupport::all_strings(4));
    EXPECT_TRUE(sqs::verify_encoding(testsupport::hadamards(4), full).ok);

    const auto dp = sqs::make_dataset(testsupport::dprime_entries());
    const auto c = sqs::encode(dp);
    const auto ok = sqs::verify_encoding(c, dp);
    EXPECT_TRUE(ok.ok);
    EXPECT_EQ(ok.doubled, (std::vector<std::string>{"1100"}));

    const auto bad = sqs::verify_encoding(c, full);
    EXPECT_FALSE(bad.ok);
    EXPECT_EQ(bad.missing, (std::vector<std::string>{"1101"}));
}

TEST(Encode, RandomDatasetsHaveExactSupportAndTwoRows) {
    std::mt19937_64 rng(51);
    int checked = 0;
    while (checked < 150) {
        const int n = 1 + static_cast<int>(rng() % 6);
        std::set<std::string> entries;
        for (const auto &s : testsupport::all_strings(n)) {
            if (rng() % 4 != 0) {
                entries.insert(s);
            }
        }
        if (entries.empty()) {
            continue;
        }
        const std::vector<std::string> list(entries.begin(), entries.end());
        if (has_partner_conflict(entries, n)) {
            EXPECT_THROW((void)sqs::encode(sqs::make_dataset(list)), sqs::PartnerConflict);
            continue;
        }
        const auto c = sqs::encode(sqs::make_dataset(list));
        EXPECT_EQ(support_of(c), entries);
        const std::size_t complement = (std::size_t{1} << n) - entries.size();
        EXPECT_LE(sqs::count_gates(c).total, 2 * complement + static_cast<std::size_t>(n));
        EXPECT_LE(sqs::count_gates(c).controlled, 2 * complement);
        const auto em = sqs::build_entanglement_map(c);
        EXPECT_LE(em.num_rows(), 2);
        if (em.num_rows() == 2) {
            EXPECT_EQ(em.rows[1], (std::vector<int>{n - 1}));
        }
        ++checked;
    }
}

TEST(Dataset, Validation) {
    EXPECT_THROW((void)sqs::make_dataset({}), sqs::ParseError);
    EXPECT_THROW((void)sqs::make_dataset({"01", "011"}), sqs::ParseError);
    EXPECT_THROW((void)sqs::make_dataset({"01", "01"}), sqs::ParseError);
    EXPECT_THROW((void)sqs::make_dataset({"0a"}), sqs::ParseError);
}
