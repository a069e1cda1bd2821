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
#include "sqs/errors.hpp"

#include <sstream>

namespace sqs {

namespace {

std::string describe_pairs(const std::vector<std::pair<std::string, std::string>> &pairs) {
    std::ostringstream os;
    os << "partner conflict: cannot remove both states of";
    for (const auto &[a, b] : pairs) {
        os << " {" << a << ", " << b << "}";
    }
    os << "; remap these entries";
    return os.str();
}

std::string describe_cycle(const std::vector<int> &cycle) {
    std::ostringstream os;
    os << "cyclic controlled-gate dependency:";
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        os << (i == 0 ? " q" : " -> q") << cycle[i];
    }
    return os.str();
}

} // namespace

PartnerConflict::PartnerConflict(std::vector<std::pair<std::string, std::string>> pairs)
    : Error(describe_pairs(pairs)), pairs_(std::move(pairs)) {}

CyclicDependency::CyclicDependency(std::vector<int> cycle)
    : Error(describe_cycle(cycle)), cycle_(std::move(cycle)) {}

UnsupportedAngle::UnsupportedAngle(int qubit, double angle)
    : Error("unsupported preparation angle " + std::to_string(angle) + " rad on qubit " +
            std::to_string(qubit) + " (expected 0, pi/4 or pi/2)"),
      qubit_(qubit), angle_(angle) {}

} // namespace sqs
