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
 * Oracle sweeps: run a block on many basis inputs and compare against plain
 * integer arithmetic. Used by `qsqrt verify`.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "qsqrt/blocks.hpp"
#include "qsqrt/sim.hpp"

namespace qsqrt {

enum class Backend { permutation, statevector };

struct VerifyOptions {
    EquivMode mode = EquivMode::exhaustive;
    std::size_t samples = 1000;
    std::uint64_t seed = 2024;
    Backend backend = Backend::permutation;
    std::size_t sv_cap = kDefaultStatevectorCap;
    std::size_t threads = 0;  // 0 = hardware concurrency
};

inline constexpr std::uint64_t kExhaustiveCaseLimit = std::uint64_t{1} << 20;

struct VerifyFailure {
    BasisState input;
    BasisState expected;
    std::optional<BasisState> actual;  // empty when the output was not a single basis state
};

struct VerifyOutcome {
    std::size_t checked = 0;
    std::size_t passed = 0;
    std::optional<VerifyFailure> first_failure;

    [[nodiscard]] bool ok() const noexcept { return checked == passed; }
};

/// Circuit under test plus an enumerable input domain with expected outputs.
struct OracleSweep {
    Circuit circuit;
    std::uint64_t domain_size = 0;
    std::function<BasisState(std::uint64_t)> input;
    std::function<BasisState(const BasisState &)> expected;
};

namespace detail {

inline std::uint64_t low_mask(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

inline OracleSweep arithmetic_sweep(Block block, std::size_t n) {
    Circuit c = build_block(block, n);
    const bool controlled = block == Block::ctrl_add_sub || block == Block::ctrl_add;
    const RegisterLayout layout = controlled ? controlled_layout(n) : adder_layout(n);
    const std::size_t width = c.width();
    if (width > 64) throw Error(Errc::capacity_exceeded, "sweeps limited to 64 qubits");
    auto expected = [=](const BasisState &in) {
        const std::uint64_t a = in.read(layout.a), b = in.read(layout.b);
        const bool z = layout.z && in.get(layout.z->index);
        std::uint64_t result = a;
        switch (block) {
            case Block::adder: result = a + b; break;
            case Block::subtractor: result = a - b; break;
            case Block::ctrl_add_sub: result = z ? a - b : a + b; break;
            case Block::ctrl_add: result = z ? a + b : a; break;
            default: break;
        }
        BasisState out = in;
        out.write(layout.a, result & low_mask(n));
        return out;
    };
    return {std::move(c), std::uint64_t{1} << width,
            [width](std::uint64_t k) { return BasisState::from_uint(width, k); }, expected};
}

inline OracleSweep isqrt_sweep(std::size_t n) {
    const SqrtLayout layout = SqrtLayout::for_width(n);
    auto expected = [layout](const BasisState &in) {
        const std::uint64_t a = in.read(layout.r);
        auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(a)));
        while (root * root > a) --root;
        while ((root + 1) * (root + 1) <= a) ++root;
        BasisState out(layout.width());
        out.write(layout.r, a - root * root);
        out.write(layout.f, root);
        return out;
    };
    return {build_isqrt_pipeline(n), max_sqrt_input(n),
            [layout](std::uint64_t k) { return sqrt_input_state(layout, k + 1); }, expected};
}

}  // namespace detail

/// Arithmetic blocks sweep every basis input; isqrt sweeps a = 1 .. 2^(n-1)-1.
inline OracleSweep make_sweep(Block block, std::size_t n) {
    return block == Block::isqrt ? detail::isqrt_sweep(n) : detail::arithmetic_sweep(block, n);
}

inline VerifyOutcome run_sweep(const OracleSweep &sweep, const VerifyOptions &opts = {}) {
    std::vector<std::uint64_t> cases;
    if (opts.mode == EquivMode::exhaustive) {
        if (sweep.domain_size > kExhaustiveCaseLimit) {
            throw Error(Errc::capacity_exceeded, std::to_string(sweep.domain_size) +
                                                     " cases exceed the exhaustive limit of 2^20; use sampled mode");
        }
        cases.resize(sweep.domain_size);
        for (std::uint64_t k = 0; k < sweep.domain_size; ++k) cases[k] = k;
    } else {
        std::mt19937_64 rng(opts.seed);
        std::uniform_int_distribution<std::uint64_t> pick(0, sweep.domain_size - 1);
        for (std::size_t i = 0; i < opts.samples; ++i) cases.push_back(pick(rng));
    }

    std::optional<PermutationProgram> perm;
    std::optional<Circuit> lowered;
    if (opts.backend == Backend::permutation) {
        perm.emplace(sweep.circuit);
    } else {
        if (sweep.circuit.width() > opts.sv_cap) {
            throw Error(Errc::capacity_exceeded, std::to_string(sweep.circuit.width()) +
                                                     " qubits exceeds the statevector cap of " +
                                                     std::to_string(opts.sv_cap));
        }
        lowered = lower_to_clifford_t(sweep.circuit);
    }

    // Per-case verdicts; index order keeps the reported failure deterministic.
    std::vector<std::optional<VerifyFailure>> failures(cases.size());
    auto check = [&](std::size_t i) {
        BasisState in = sweep.input(cases[i]);
        BasisState want = sweep.expected(in);
        std::optional<BasisState> got;
        if (perm) {
            got = perm->run(in);
        } else {
            auto sv = sv_run(*lowered, Statevector::basis(in, opts.sv_cap), opts.sv_cap);
            const std::size_t idx = sv.argmax();
            if (std::abs(sv[idx]) >= 1.0 - kEquivalenceTolerance) {
                got = BasisState::from_uint(in.width(), idx);
            }
        }
        if (!got || *got != want) failures[i] = VerifyFailure{in, want, got};
    };

    std::size_t threads = opts.threads ? opts.threads : std::max(1U, std::thread::hardware_concurrency());
    threads = std::min<std::size_t>(threads, std::max<std::size_t>(1, cases.size() / 64));
    if (threads <= 1) {
        for (std::size_t i = 0; i < cases.size(); ++i) check(i);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < cases.size(); i += threads) check(i);
            });
        }
    }

    VerifyOutcome outcome;
    outcome.checked = cases.size();
    for (auto &f : failures) {
        if (!f) {
            ++outcome.passed;
        } else if (!outcome.first_failure) {
            outcome.first_failure = std::move(f);
        }
    }
    return outcome;
}

inline VerifyOutcome verify_block(Block block, std::size_t n, const VerifyOptions &opts = {}) {
    return run_sweep(make_sweep(block, n), opts);
}

}  // namespace qsqrt
