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
 * Reversible ripple-carry adder family without ancillae or carry-out.
 *
 * All arithmetic is modulo 2^n. Qubit conventions:
 *   ADD, SUB:                 A = 0..n-1, B = n..2n-1
 *   CTRL ADD/SUB, CTRL ADD:   z = 0, A = 1..n, B = n+1..2n
 * Results land in A; B (and z) are preserved.
 */

#pragma once

#include <optional>

#include "qsqrt/circuit.hpp"

namespace qsqrt {

struct RegisterLayout {
    Register a;
    Register b;
    std::optional<QubitId> z;

    [[nodiscard]] std::size_t n() const noexcept { return a.size(); }
    [[nodiscard]] Register all() const {
        Register r;
        if (z) r.push_back(*z);
        r.insert(r.end(), a.begin(), a.end());
        r.insert(r.end(), b.begin(), b.end());
        return r;
    }
};

inline RegisterLayout adder_layout(std::size_t n) { return {qubit_range(0, n), qubit_range(n, n), std::nullopt}; }

inline RegisterLayout controlled_layout(std::size_t n) {
    return {qubit_range(1, n), qubit_range(n + 1, n), QubitId{0}};
}

/// (a, b, c) -> (a, a^b, ab^c): a Toffoli followed by a CNOT.
inline Circuit build_peres() {
    Circuit qc(3, "PERES");
    qc.ccx(0, 1, 2);
    qc.cx(0, 1);
    return qc;
}

namespace detail {

inline void require_positive(std::size_t n, std::size_t min, const char *what) {
    if (n < min) {
        throw Error(Errc::invalid_width, std::string(what) + " needs n >= " + std::to_string(min) + ", got " +
                                             std::to_string(n));
    }
}

}  // namespace detail

/// A <- (A + B) mod 2^n.
inline Circuit build_adder(std::size_t n) {
    detail::require_positive(n, 1, "ADD");
    Circuit qc(2 * n, "ADD");
    const auto [A, B, z] = adder_layout(n);
    const Circuit peres = build_peres();

    for (std::size_t i = 1; i < n; ++i) {
        qc.cx(B[i], A[i]);
    }
    for (std::size_t i = n - 1; i-- > 1;) {
        qc.cx(B[i], B[i + 1]);
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        qc.ccx(B[i], A[i], B[i + 1]);
    }
    // The top bit would need a Peres into the carry-out; without it a CNOT suffices.
    for (std::size_t i = n; i-- > 0;) {
        if (i == n - 1) {
            qc.cx(B[i], A[i]);
        } else {
            const QubitId ops[] = {B[i], A[i], B[i + 1]};
            qc.append_composite(peres, ops);
        }
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        qc.cx(B[i], B[i + 1]);
    }
    for (std::size_t i = 1; i < n; ++i) {
        qc.cx(B[i], A[i]);
    }
    return qc;
}

/// A <- (A - B) mod 2^n, using a - b = ~(~a + b).
inline Circuit build_subtractor(std::size_t n) {
    detail::require_positive(n, 1, "SUB");
    Circuit qc(2 * n, "SUB");
    const auto layout = adder_layout(n);
    for (QubitId q : layout.a) qc.x(q);
    qc.append_composite(build_adder(n), layout.all());
    for (QubitId q : layout.a) qc.x(q);
    return qc;
}

/// z = 0: A <- A + B; z = 1: A <- A - B (both mod 2^n).
inline Circuit build_ctrl_add_sub(std::size_t n) {
    detail::require_positive(n, 1, "CTRL ADD/SUB");
    Circuit qc(2 * n + 1, "CTRL ADD/SUB");
    const auto [A, B, z] = controlled_layout(n);
    for (QubitId q : A) qc.cx(*z, q);
    qc.append_composite(build_adder(n), concat({A, B}));
    for (QubitId q : A) qc.cx(*z, q);
    return qc;
}

/// z = 1: A <- (A + B) mod 2^n; z = 0: identity.
inline Circuit build_ctrl_adder(std::size_t n) {
    detail::require_positive(n, 2, "CTRL ADD");
    Circuit qc(2 * n + 1, "CTRL ADD");
    const auto layout = controlled_layout(n);
    const Register &A = layout.a, &B = layout.b;
    const QubitId z = *layout.z;

    for (std::size_t i = 1; i < n; ++i) {
        qc.cx(B[i], A[i]);
    }
    for (std::size_t i = n - 1; i-- > 1;) {
        qc.cx(B[i], B[i + 1]);
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        qc.ccx(A[i], B[i], B[i + 1]);
    }
    qc.ccx(z, B[n - 1], A[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) {
        qc.ccx(A[i], B[i], B[i + 1]);
        qc.ccx(z, B[i], A[i]);
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        qc.cx(B[i], B[i + 1]);
    }
    for (std::size_t i = 1; i < n; ++i) {
        qc.cx(B[i], A[i]);
    }
    return qc;
}

}  // namespace qsqrt
