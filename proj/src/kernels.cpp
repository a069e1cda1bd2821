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
#include "sqs/kernels.hpp"

#include <algorithm>
#include <cstddef>

namespace sqs::kernels {

namespace {

inline void mul_2x2(const Mat2 &m, Complex &a0, Complex &a1) {
    const Complex v0 = a0;
    const Complex v1 = a1;
    a0 = m[0] * v0 + m[1] * v1;
    a1 = m[2] * v0 + m[3] * v1;
}

inline void mul_4x4(const Mat4 &m, Complex *const a[4]) {
    const Complex v[4] = {*a[0], *a[1], *a[2], *a[3]};
    for (int r = 0; r < 4; ++r) {
        *a[r] = m[4 * r] * v[0] + m[4 * r + 1] * v[1] + m[4 * r + 2] * v[2] +
                m[4 * r + 3] * v[3];
    }
}

} // namespace

namespace serial {

void apply_1q(std::span<Complex> amps, int target, const Mat2 &m, BitPattern controls) {
    const Index half = amps.size() / 2;
    const Index stride = Index{1} << target;
    for (Index i = 0; i < half; ++i) {
        const Index i0 = insert_zero_bit(i, target);
        if (!controls.matches(i0)) {
            continue;
        }
        mul_2x2(m, amps[i0], amps[i0 | stride]);
    }
}

void apply_2q(std::span<Complex> amps, int t0, int t1, const Mat4 &m, BitPattern controls) {
    const Index quarter = amps.size() / 4;
    const Index s0 = Index{1} << t0;
    const Index s1 = Index{1} << t1;
    const int lo = std::min(t0, t1);
    const int hi = std::max(t0, t1);
    for (Index i = 0; i < quarter; ++i) {
        const Index base = insert_zero_bit(insert_zero_bit(i, lo), hi);
        if (!controls.matches(base)) {
            continue;
        }
        Complex *const a[4] = {&amps[base], &amps[base | s0], &amps[base | s1],
                               &amps[base | s0 | s1]};
        mul_4x4(m, a);
    }
}

double pattern_probability(std::span<const Complex> amps, BitPattern sel) {
    double p = 0.0;
    for (Index i = 0; i < amps.size(); ++i) {
        if (sel.matches(i)) {
            p += std::norm(amps[i]);
        }
    }
    return p;
}

double norm_squared(std::span<const Complex> amps) {
    double p = 0.0;
    for (const auto &a : amps) {
        p += std::norm(a);
    }
    return p;
}

void project(std::span<Complex> amps, BitPattern keep, double scale) {
    for (Index i = 0; i < amps.size(); ++i) {
        amps[i] = keep.matches(i) ? amps[i] * scale : Complex{0.0, 0.0};
    }
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

void reflect_about(std::span<Complex> v, std::span<const Complex> psi) {
    const Complex overlap = inner_product(psi, v);
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = 2.0 * overlap * psi[i] - v[i];
    }
}

} // namespace serial

namespace omp {

void apply_1q(std::span<Complex> amps, int target, const Mat2 &m, BitPattern controls) {
    const auto half = static_cast<std::int64_t>(amps.size() / 2);
    const Index stride = Index{1} << target;
    Complex *data = amps.data();
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
    for (std::int64_t i = 0; i < half; ++i) {
        const Index i0 = insert_zero_bit(static_cast<Index>(i), target);
        if (controls.matches(i0)) {
            mul_2x2(m, data[i0], data[i0 | stride]);
        }
    }
}

void apply_2q(std::span<Complex> amps, int t0, int t1, const Mat4 &m, BitPattern controls) {
    const auto quarter = static_cast<std::int64_t>(amps.size() / 4);
    const Index s0 = Index{1} << t0;
    const Index s1 = Index{1} << t1;
    const int lo = std::min(t0, t1);
    const int hi = std::max(t0, t1);
    Complex *data = amps.data();
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
    for (std::int64_t i = 0; i < quarter; ++i) {
        const Index base = insert_zero_bit(insert_zero_bit(static_cast<Index>(i), lo), hi);
        if (controls.matches(base)) {
            Complex *const a[4] = {data + base, data + (base | s0), data + (base | s1),
                                   data + (base | s0 | s1)};
            mul_4x4(m, a);
        }
    }
}

double pattern_probability(std::span<const Complex> amps, BitPattern sel) {
    const auto n = static_cast<std::int64_t>(amps.size());
    const Complex *data = amps.data();
    double p = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : p) if (amps.size() >= kParallelThreshold)
    for (std::int64_t i = 0; i < n; ++i) {
        if (sel.matches(static_cast<Index>(i))) {
            p += std::norm(data[i]);
        }
    }
    return p;
}

double norm_squared(std::span<const Complex> amps) {
    const auto n = static_cast<std::int64_t>(amps.size());
    const Complex *data = amps.data();
    double p = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : p) if (amps.size() >= kParallelThreshold)
    for (std::int64_t i = 0; i < n; ++i) {
        p += std::norm(data[i]);
    }
    return p;
}

void project(std::span<Complex> amps, BitPattern keep, double scale) {
    const auto n = static_cast<std::int64_t>(amps.size());
    Complex *data = amps.data();
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
    for (std::int64_t i = 0; i < n; ++i) {
        data[i] = keep.matches(static_cast<Index>(i)) ? data[i] * scale : Complex{0.0, 0.0};
    }
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
    const auto n = static_cast<std::int64_t>(a.size());
    double re = 0.0;
    double im = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : re, im) if (a.size() >= kParallelThreshold)
    for (std::int64_t i = 0; i < n; ++i) {
        const Complex t = std::conj(a[static_cast<std::size_t>(i)]) * b[static_cast<std::size_t>(i)];
        re += t.real();
        im += t.imag();
    }
    return {re, im};
}

void reflect_about(std::span<Complex> v, std::span<const Complex> psi) {
    const Complex overlap = inner_product(psi, v);
    const auto n = static_cast<std::int64_t>(v.size());
    Complex *out = v.data();
    const Complex *p = psi.data();
#pragma omp parallel for schedule(static) if (v.size() >= kParallelThreshold)
    for (std::int64_t i = 0; i < n; ++i) {
        out[i] = 2.0 * overlap * p[i] - out[i];
    }
}

} // namespace omp

} // namespace sqs::kernels
