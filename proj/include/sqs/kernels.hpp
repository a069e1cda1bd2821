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
 * Statevector kernels over little-endian amplitude arrays (qubit 0 is the
 * least significant index bit).
 *
 * Every kernel exists twice: `serial` is the straightforward reference loop
 * kept for testing, `omp` is the OpenMP-parallel version used by the
 * simulator. Both must produce identical results up to floating-point
 * reduction order.
 */
#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>

namespace sqs::kernels {

using Complex = std::complex<double>;
using Index = std::uint64_t;

/// Row-major 2x2 matrix.
using Mat2 = std::array<Complex, 4>;
/// Row-major 4x4 matrix; local index bit j is the j-th target.
using Mat4 = std::array<Complex, 16>;

/// Selects basis indices i with (i & mask) == value.
struct BitPattern {
    Index mask = 0;
    Index value = 0;
    [[nodiscard]] constexpr bool matches(Index i) const { return (i & mask) == value; }
};

/// States below this size run the omp kernels single-threaded.
inline constexpr Index kParallelThreshold = Index{1} << 14;

[[nodiscard]] constexpr Index insert_zero_bit(Index i, int bit) {
    const Index low = i & ((Index{1} << bit) - 1);
    return ((i >> bit) << (bit + 1)) | low;
}

namespace serial {
void apply_1q(std::span<Complex> amps, int target, const Mat2 &m, BitPattern controls);
void apply_2q(std::span<Complex> amps, int t0, int t1, const Mat4 &m, BitPattern controls);
[[nodiscard]] double pattern_probability(std::span<const Complex> amps, BitPattern sel);
[[nodiscard]] double norm_squared(std::span<const Complex> amps);
/// Zeroes amplitudes outside `keep` and multiplies the rest by `scale`.
void project(std::span<Complex> amps, BitPattern keep, double scale);
/// <a|b> (a conjugated).
[[nodiscard]] Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);
/// v <- 2 psi <psi|v> - v, the reflection about a normalized psi.
void reflect_about(std::span<Complex> v, std::span<const Complex> psi);
} // namespace serial

namespace omp {
void apply_1q(std::span<Complex> amps, int target, const Mat2 &m, BitPattern controls);
void apply_2q(std::span<Complex> amps, int t0, int t1, const Mat4 &m, BitPattern controls);
[[nodiscard]] double pattern_probability(std::span<const Complex> amps, BitPattern sel);
[[nodiscard]] double norm_squared(std::span<const Complex> amps);
void project(std::span<Complex> amps, BitPattern keep, double scale);
/// <a|b> (a conjugated).
[[nodiscard]] Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);
/// v <- 2 psi <psi|v> - v, the reflection about a normalized psi.
void reflect_about(std::span<Complex> v, std::span<const Complex> psi);
} // namespace omp

} // namespace sqs::kernels
