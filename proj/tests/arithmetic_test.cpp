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

#include "qsqrt/arithmetic.hpp"

#include <random>
#include <set>

#include "gtest/gtest.h"

#include "qsqrt/analysis.hpp"
#include "qsqrt/sim.hpp"
#include "test_util.hpp"

using namespace qsqrt;
using qsqrt::testing::bits_of;

namespace {

// Integer oracle for the uncontrolled layouts: state = A | B << n.
std::uint64_t pack(std::uint64_t a, std::uint64_t b, std::size_t n) { return a | (b << n); }

// Controlled layouts: state = z | A << 1 | B << (n+1).
std::uint64_t pack(bool z, std::uint64_t a, std::uint64_t b, std::size_t n) {
    return std::uint64_t{z} | (a << 1) | (b << (n + 1));
}

std::uint64_t run(const PermutationProgram &p, std::uint64_t state) {
    return p.run(BasisState::from_uint(p.width(), state)).to_uint();
}

}  // namespace

TEST(arithmetic, peres_truth_table) {
    PermutationProgram p(build_peres());
    for (std::uint64_t s = 0; s < 8; ++s) {
        const std::uint64_t a = s & 1, b = (s >> 1) & 1, c = (s >> 2) & 1;
        const std::uint64_t want = a | ((a ^ b) << 1) | (((a & b) ^ c) << 2);
        EXPECT_EQ(run(p, s), want);
    }
}

TEST(arithmetic, adder_golden_sequence_n4) {
    // A = q0..q3, B = q4..q7.
    const Circuit add = build_adder(4);
    std::vector<Gate> want = {
        Gate::cx(5, 1), Gate::cx(6, 2), Gate::cx(7, 3),                 // step 1
        Gate::cx(6, 7), Gate::cx(5, 6),                                 // step 2
        Gate::ccx(4, 0, 5), Gate::ccx(5, 1, 6), Gate::ccx(6, 2, 7),     // step 3
        Gate::cx(7, 3),                                                 // step 4, top bit
    };
    for (auto ops : {std::vector<QubitId>{6, 2, 7}, {5, 1, 6}, {4, 0, 5}}) {
        want.push_back(Gate::composite("PERES", build_peres(), ops));
    }
    for (Gate g : {Gate::cx(5, 6), Gate::cx(6, 7),                      // step 5
                   Gate::cx(5, 1), Gate::cx(6, 2), Gate::cx(7, 3)}) {   // step 6
        want.push_back(g);
    }
    ASSERT_EQ(add.size(), want.size());
    for (std::size_t i = 0; i < want.size(); ++i) EXPECT_EQ(add[i], want[i]) << "gate " << i;
}

TEST(arithmetic, adder_exhaustive) {
    for (std::size_t n = 1; n <= 5; ++n) {
        PermutationProgram p(build_adder(n));
        const std::uint64_t mod = std::uint64_t{1} << n;
        for (std::uint64_t a = 0; a < mod; ++a) {
            for (std::uint64_t b = 0; b < mod; ++b) {
                ASSERT_EQ(run(p, pack(a, b, n)), pack((a + b) % mod, b, n)) << n << ": " << a << "+" << b;
            }
        }
    }
    EXPECT_EQ(run(PermutationProgram(build_adder(4)), 0), 0u);
}

TEST(arithmetic, subtractor) {
    PermutationProgram p(build_subtractor(4));
    EXPECT_EQ(bits_of(run(p, pack(5, 5, 4)), 0, 4), 0u);
    EXPECT_EQ(bits_of(run(p, pack(3, 5, 4)), 0, 4), 14u);  // (3 - 5) mod 16
    for (std::size_t n = 1; n <= 4; ++n) {
        PermutationProgram sub(build_subtractor(n));
        const std::uint64_t mod = std::uint64_t{1} << n;
        for (std::uint64_t a = 0; a < mod; ++a)
            for (std::uint64_t b = 0; b < mod; ++b)
                ASSERT_EQ(run(sub, pack(a, b, n)), pack((a + mod - b) % mod, b, n));
    }
}

TEST(arithmetic, ctrl_add_sub) {
    PermutationProgram p(build_ctrl_add_sub(4));
    EXPECT_EQ(run(p, pack(false, 2, 3, 4)), pack(false, 5, 3, 4));
    EXPECT_EQ(run(p, pack(true, 2, 3, 4)), pack(true, 15, 3, 4));
    PermutationProgram p3(build_ctrl_add_sub(3));
    for (std::uint64_t x = 0; x < 8; ++x) EXPECT_EQ(run(p3, pack(true, x, 0, 3)), pack(true, x, 0, 3));

    for (std::size_t n = 1; n <= 4; ++n) {
        PermutationProgram c(build_ctrl_add_sub(n));
        const std::uint64_t mod = std::uint64_t{1} << n;
        for (bool z : {false, true})
            for (std::uint64_t a = 0; a < mod; ++a)
                for (std::uint64_t b = 0; b < mod; ++b) {
                    const std::uint64_t r = z ? (a + mod - b) % mod : (a + b) % mod;
                    ASSERT_EQ(run(c, pack(z, a, b, n)), pack(z, r, b, n));
                }
    }
}

TEST(arithmetic, ctrl_adder) {
    PermutationProgram p(build_ctrl_adder(4));
    EXPECT_EQ(run(p, pack(false, 7, 9, 4)), pack(false, 7, 9, 4));
    EXPECT_EQ(run(p, pack(true, 7, 9, 4)), pack(true, 0, 9, 4));
    for (std::size_t n = 2; n <= 4; ++n) {
        PermutationProgram c(build_ctrl_adder(n));
        const std::uint64_t mod = std::uint64_t{1} << n;
        for (bool z : {false, true})
            for (std::uint64_t a = 0; a < mod; ++a)
                for (std::uint64_t b = 0; b < mod; ++b) {
                    const std::uint64_t r = z ? (a + b) % mod : a;
                    ASSERT_EQ(run(c, pack(z, a, b, n)), pack(z, r, b, n));
                }
    }
}

TEST(arithmetic, invalid_widths) {
    EXPECT_THROW(build_adder(0), Error);
    EXPECT_THROW(build_subtractor(0), Error);
    EXPECT_THROW(build_ctrl_add_sub(0), Error);
    EXPECT_THROW(build_ctrl_adder(1), Error);
    EXPECT_NO_THROW(build_ctrl_adder(2));
}

TEST(arithmetic, t_count_formulas) {
    EXPECT_EQ(t_count(build_adder(4)), 42u);
    EXPECT_EQ(t_count(build_subtractor(4)), 42u);
    EXPECT_EQ(t_count(build_ctrl_adder(4)), 70u);
    for (std::size_t n = 2; n <= 10; ++n) {
        EXPECT_EQ(t_count(build_adder(n)), 14 * n - 14);
        EXPECT_EQ(t_count(build_subtractor(n)), 14 * n - 14);
        EXPECT_EQ(t_count(build_ctrl_add_sub(n)), 14 * n - 14);
        EXPECT_EQ(t_count(build_ctrl_adder(n)), 21 * n - 14);
    }
}

TEST(arithmetic, toffoli_tally_before_lowering) {
    for (std::size_t n = 2; n <= 10; ++n) {
        const Circuit add = build_adder(n);
        std::size_t bare = 0, peres = 0;
        for (const Gate &g : add.gates()) {
            bare += g.kind == GateKind::CCX;
            peres += g.kind == GateKind::COMPOSITE && g.name == "PERES";
        }
        EXPECT_EQ(bare, n - 1);
        EXPECT_EQ(peres, n - 1);
        EXPECT_EQ(count_ops(add)[GateKind::CCX], 2 * (n - 1));
        EXPECT_EQ(count_ops(build_ctrl_adder(n))[GateKind::CCX], 3 * n - 2);
    }
}

TEST(arithmetic, b_register_preserved_randomized) {
    std::mt19937_64 rng(11);
    for (std::size_t n = 5; n <= 8; ++n) {
        for (const Circuit &c : {build_adder(n), build_subtractor(n), build_ctrl_add_sub(n), build_ctrl_adder(n)}) {
            PermutationProgram p(c);
            const bool controlled = c.width() == 2 * n + 1;
            const std::size_t b_first = controlled ? n + 1 : n;
            for (int i = 0; i < 1000; ++i) {
                const std::uint64_t in = rng() & ((std::uint64_t{1} << c.width()) - 1);
                const std::uint64_t out = run(p, in);
                ASSERT_EQ(bits_of(out, b_first, n), bits_of(in, b_first, n)) << c.name();
                if (controlled) {
                    ASSERT_EQ(out & 1, in & 1) << c.name();
                }
            }
        }
    }
}

TEST(arithmetic, generated_circuits_are_bijections) {
    for (std::size_t n = 2; n <= 4; ++n) {
        for (const Circuit &c : {build_adder(n), build_subtractor(n), build_ctrl_add_sub(n), build_ctrl_adder(n)}) {
            PermutationProgram p(c);
            std::set<std::uint64_t> seen;
            for (std::uint64_t s = 0; s < (std::uint64_t{1} << c.width()); ++s) seen.insert(run(p, s));
            EXPECT_EQ(seen.size(), std::size_t{1} << c.width()) << c.name() << " n=" << n;
        }
    }
}

TEST(arithmetic, subtract_then_add_is_identity) {
    for (std::size_t n = 1; n <= 4; ++n) {
        Circuit c(2 * n, "sub+add");
        c.append_composite(build_subtractor(n), qubit_range(0, 2 * n));
        c.append_composite(build_adder(n), qubit_range(0, 2 * n));
        PermutationProgram p(c);
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << (2 * n)); ++s) ASSERT_EQ(run(p, s), s);
    }
}
