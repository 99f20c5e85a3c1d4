// Copyright 2026 The qsqrt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Garbageless non-restoring integer square root.
 *
 * Layout on 2n+1 qubits: R = 0..n-1 holds the input and ends as the remainder,
 * F = n..2n-1 starts at 1 and ends holding the root, z = 2n is the sign ancilla.
 * n must be even and at least 4.
 */

#pragma once

#include <cstdint>

#include "qsqrt/arithmetic.hpp"
#include "qsqrt/sim.hpp"

namespace qsqrt {

struct SqrtLayout {
    std::size_t n;
    Register r;
    Register f;
    QubitId z;

    static SqrtLayout for_width(std::size_t n);

    [[nodiscard]] std::size_t width() const noexcept { return 2 * n + 1; }
    [[nodiscard]] Register all() const {
        Register all = concat({r, f});
        all.push_back(z);
        return all;
    }
};

inline void require_sqrt_width(std::size_t n) {
    if (n < 4 || n % 2 != 0) {
        throw Error(Errc::invalid_width, "square root register width must be even and >= 4, got " + std::to_string(n));
    }
}

inline SqrtLayout SqrtLayout::for_width(std::size_t n) {
    require_sqrt_width(n);
    return {n, qubit_range(0, n), qubit_range(n, n), QubitId{2 * n}};
}

struct SqrtResult {
    std::uint64_t root = 0;
    std::uint64_t remainder = 0;

    friend bool operator==(const SqrtResult &, const SqrtResult &) = default;
};

/// Initial subtraction on the top bit pair.
inline Circuit build_part1(std::size_t n) {
    const auto [_, R, F, z] = SqrtLayout::for_width(n);
    Circuit qc(2 * n + 1, "PART 1");
    qc.x(R[n - 2]);
    qc.cx(R[n - 2], R[n - 1]);
    qc.cx(R[n - 1], F[1]);
    qc.zcx(R[n - 1], z);
    qc.zcx(R[n - 1], F[2]);
    const Register ops = {z, R[n - 4], R[n - 3], R[n - 2], R[n - 1], F[0], F[1], F[2], F[3]};
    qc.append_composite(build_ctrl_add_sub(4), ops);
    return qc;
}

/// One sign-steered add/subtract round per remaining bit pair, i = 2 .. n/2-1.
inline Circuit build_part2(std::size_t n) {
    const auto [_, R, F, z] = SqrtLayout::for_width(n);
    Circuit qc(2 * n + 1, "PART 2");
    for (std::size_t i = 2; i < n / 2; ++i) {
        qc.zcx(z, F[1]);
        qc.cx(F[2], z);
        qc.cx(R[n - 1], F[1]);
        qc.zcx(R[n - 1], z);
        qc.zcx(R[n - 1], F[i + 1]);
        for (std::size_t j = i + 1; j > 2; --j) {
            qc.swap(F[j], F[j - 1]);
        }
        Register ops = {z};
        for (std::size_t j = n - 2 * i - 2; j < n; ++j) ops.push_back(R[j]);
        for (std::size_t j = 0; j < 2 * i + 2; ++j) ops.push_back(F[j]);
        qc.append_composite(build_ctrl_add_sub(2 * i + 2), ops);
    }
    return qc;
}

/// Restores a non-negative remainder and returns z to |0>.
inline Circuit build_part3(std::size_t n) {
    const auto layout = SqrtLayout::for_width(n);
    const auto &R = layout.r;
    const auto &F = layout.f;
    const QubitId z = layout.z;
    Circuit qc(2 * n + 1, "PART 3");
    qc.zcx(z, F[1]);
    qc.cx(F[2], z);
    qc.zcx(R[n - 1], z);
    qc.zcx(R[n - 1], F[n / 2 + 1]);
    qc.x(z);
    qc.append_composite(build_ctrl_adder(n), concat({Register{z}, R, F}));
    qc.x(z);
    for (std::size_t j = n / 2 + 1; j > 2; --j) {
        qc.swap(F[j], F[j - 1]);
    }
    qc.cx(F[2], z);
    return qc;
}

/// PART 1, PART 2 and PART 3 as composites on the shared [R, F, z] layout.
/// Afterwards the root sits in F[2 .. n/2+1].
inline Circuit build_isqrt_circuit(std::size_t n) {
    const auto layout = SqrtLayout::for_width(n);
    const Register all = layout.all();
    Circuit qc(layout.width(), "ISQRT");
    qc.append_composite(build_part1(n), all);
    qc.append_composite(build_part2(n), all);
    qc.append_composite(build_part3(n), all);
    return qc;
}

/// ISQRT followed by the readout shift: X(F[0]) clears the seed bit, then
/// SWAP(F[i], F[i-2]) for ascending i moves the root down to F[0 ..].
inline Circuit build_isqrt_pipeline(std::size_t n) {
    const auto layout = SqrtLayout::for_width(n);
    const Register all = layout.all();
    const auto &F = layout.f;
    Circuit qc(layout.width(), "ISQRT PIPELINE");
    qc.append_composite(build_isqrt_circuit(n), all);
    qc.x(F[0]);
    for (std::size_t i = 2; i < n / 2 + 2; ++i) {
        qc.swap(F[i], F[i - 2]);
    }
    return qc;
}

/// Largest input accepted at width n: inputs are non-negative two's-complement values.
inline std::uint64_t max_sqrt_input(std::size_t n) {
    require_sqrt_width(n);
    if (n > 64) {
        throw Error(Errc::capacity_exceeded, "square root readout limited to 64-bit registers");
    }
    return (std::uint64_t{1} << (n - 1)) - 1;
}

/// Smallest even n >= 4 with a <= 2^(n-1) - 1.
inline std::size_t select_width(std::uint64_t a) {
    std::size_t n = 4;
    while (n < 64 && a > max_sqrt_input(n)) n += 2;
    return n;
}

/// Initial basis state: R = a, F = 1, z = 0.
inline BasisState sqrt_input_state(const SqrtLayout &layout, std::uint64_t a) {
    if (a > max_sqrt_input(layout.n)) {
        throw Error(Errc::input_range, std::to_string(a) + " exceeds 2^(n-1)-1 = " +
                                           std::to_string(max_sqrt_input(layout.n)) + " for n = " +
                                           std::to_string(layout.n));
    }
    BasisState s(layout.width());
    s.write(layout.r, a);
    s.write(layout.f, 1);
    return s;
}

inline SqrtResult decode_sqrt_output(const SqrtLayout &layout, const BasisState &out) {
    return {out.read(layout.f), out.read(layout.r)};
}

/// Runs the reversible pipeline on (R=a, F=1, z=0) with the permutation simulator.
class SqrtEvaluator {
  public:
    explicit SqrtEvaluator(std::size_t n) : layout_(SqrtLayout::for_width(n)), program_(build_isqrt_pipeline(n)) {}

    [[nodiscard]] const SqrtLayout &layout() const noexcept { return layout_; }

    /// Raw output state, for checks beyond root and remainder (e.g. the ancilla).
    [[nodiscard]] BasisState run(std::uint64_t a) const { return program_.run(sqrt_input_state(layout_, a)); }

    [[nodiscard]] SqrtResult operator()(std::uint64_t a) const { return decode_sqrt_output(layout_, run(a)); }

  private:
    SqrtLayout layout_;
    PermutationProgram program_;
};

inline SqrtResult isqrt(std::uint64_t a, std::size_t n) { return SqrtEvaluator(n)(a); }

inline SqrtResult isqrt(std::uint64_t a) { return isqrt(a, select_width(a)); }

}  // namespace qsqrt
