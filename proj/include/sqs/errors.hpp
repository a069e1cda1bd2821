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
 * Exception types raised by the simulator, encoder, and search engine.
 */
#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sqs {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A state or merged register would exceed the configured qubit limit.
class CapacityError : public Error {
  public:
    using Error::Error;
};

/// Malformed gate: bad indices, overlapping targets/controls, non-unitary matrix.
class InvalidGate : public Error {
  public:
    using Error::Error;
};

/// Collapse onto a measurement branch of zero probability.
class InvalidCollapse : public Error {
  public:
    using Error::Error;
};

/// Malformed input file or bitstring.
class ParseError : public Error {
  public:
    using Error::Error;
};

/// Complement states b0 and b1 share a prefix and cannot both be removed.
class PartnerConflict : public Error {
  public:
    explicit PartnerConflict(std::vector<std::pair<std::string, std::string>> pairs);
    [[nodiscard]] const std::vector<std::pair<std::string, std::string>> &pairs() const {
        return pairs_;
    }

  private:
    std::vector<std::pair<std::string, std::string>> pairs_;
};

class NotInSupport : public Error {
  public:
    using Error::Error;
};

class AlreadyPresent : public Error {
  public:
    using Error::Error;
};

/// Controlled-gate dependencies form a cycle; cycle() lists the qubits in order.
class CyclicDependency : public Error {
  public:
    explicit CyclicDependency(std::vector<int> cycle);
    [[nodiscard]] const std::vector<int> &cycle() const { return cycle_; }

  private:
    std::vector<int> cycle_;
};

/// A qubit is targeted by a controlled gate after it already acted as a control.
class ReEntanglement : public Error {
  public:
    using Error::Error;
};

/// A derived preparation angle does not snap to {0, pi/4, pi/2}.
class UnsupportedAngle : public Error {
  public:
    UnsupportedAngle(int qubit, double angle);
    [[nodiscard]] int qubit() const { return qubit_; }
    [[nodiscard]] double angle() const { return angle_; }

  private:
    int qubit_;
    double angle_;
};

/// Runtime precondition of the search protocol does not hold.
class ContractViolation : public Error {
  public:
    using Error::Error;
};

} // namespace sqs
