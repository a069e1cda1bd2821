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
#include "sqs/bitstring.hpp"

#include "sqs/errors.hpp"

namespace sqs {

bool is_bitstring(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (c != '0' && c != '1') {
            return false;
        }
    }
    return true;
}

std::uint64_t bits_to_index(std::string_view bits) {
    if (!is_bitstring(bits) || bits.size() > 64) {
        throw ParseError("not a bitstring of length 1..64: '" + std::string(bits) + "'");
    }
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            index |= std::uint64_t{1} << i;
        }
    }
    return index;
}

std::string index_to_bits(std::uint64_t index, int num_bits) {
    std::string s(static_cast<std::size_t>(num_bits), '0');
    for (int i = 0; i < num_bits; ++i) {
        if ((index >> i) & 1U) {
            s[static_cast<std::size_t>(i)] = '1';
        }
    }
    return s;
}

} // namespace sqs
