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
 * Bitstring helpers. Character i of a bitstring is qubit i; as an integer
 * index qubit 0 is the least significant bit.
 */
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace sqs {

[[nodiscard]] bool is_bitstring(std::string_view s);
[[nodiscard]] std::uint64_t bits_to_index(std::string_view bits);
[[nodiscard]] std::string index_to_bits(std::uint64_t index, int num_bits);

} // namespace sqs
