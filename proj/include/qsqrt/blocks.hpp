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
 * Named circuit families addressable from the command line.
 */

#pragma once

#include <optional>
#include <string_view>

#include "qsqrt/analysis.hpp"
#include "qsqrt/arithmetic.hpp"
#include "qsqrt/sqrt.hpp"

namespace qsqrt {

enum class Block { adder, subtractor, ctrl_add_sub, ctrl_add, isqrt };

inline constexpr Block kAllBlocks[] = {Block::adder, Block::subtractor, Block::ctrl_add_sub, Block::ctrl_add,
                                       Block::isqrt};

inline std::string_view block_name(Block b) {
    switch (b) {
        case Block::adder: return "adder";
        case Block::subtractor: return "subtractor";
        case Block::ctrl_add_sub: return "ctrl-add-sub";
        case Block::ctrl_add: return "ctrl-add";
        case Block::isqrt: return "isqrt";
    }
    return "?";
}

inline std::optional<Block> parse_block(std::string_view name) {
    for (Block b : kAllBlocks) {
        if (block_name(b) == name) return b;
    }
    return std::nullopt;
}

/// Throws invalid-width when n is outside the block's domain.
inline Circuit build_block(Block b, std::size_t n) {
    switch (b) {
        case Block::adder: return build_adder(n);
        case Block::subtractor: return build_subtractor(n);
        case Block::ctrl_add_sub: return build_ctrl_add_sub(n);
        case Block::ctrl_add: return build_ctrl_adder(n);
        case Block::isqrt: return build_isqrt_circuit(n);
    }
    throw Error(Errc::unsupported_gate, "unknown block");
}

inline std::size_t expected_width(Block b, std::size_t n) {
    switch (b) {
        case Block::adder:
        case Block::subtractor: return 2 * n;
        default: return 2 * n + 1;
    }
}

/// Closed-form T-counts: 14n-14 for the adder family, 21n-14 for CTRL ADD.
inline std::size_t expected_t_count(Block b, std::size_t n) {
    switch (b) {
        case Block::adder:
        case Block::subtractor:
        case Block::ctrl_add_sub: return 14 * n - 14;
        case Block::ctrl_add: return 21 * n - 14;
        case Block::isqrt: return expected_t_count_isqrt(n);
    }
    return 0;
}

inline ResourceRow resource_row(Block b, std::size_t n) {
    const Circuit c = build_block(b, n);
    return {n, analyze(c), expected_width(b, n), expected_t_count(b, n)};
}

}  // namespace qsqrt
