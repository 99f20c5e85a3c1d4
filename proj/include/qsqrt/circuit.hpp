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
 * Gate set and circuit IR.
 *
 * A Circuit is a fixed-width, append-only sequence of gates. Composite gates
 * hold their body by value (an immutable shared body) and are only expanded by
 * the lowering pass. Qubit index 0 is the least significant bit of any register
 * it belongs to.
 */

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsqrt/error.hpp"

namespace qsqrt {

struct QubitId {
    std::size_t index = 0;

    constexpr QubitId() = default;
    // Implicit so generator code can mix literal indices and register entries.
    constexpr QubitId(std::size_t i) : index(i) {}  // NOLINT(google-explicit-constructor)

    friend constexpr auto operator<=>(QubitId, QubitId) = default;
};

/// Ordered qubit list; entry 0 is the register's least significant bit.
using Register = std::vector<QubitId>;

inline Register qubit_range(std::size_t first, std::size_t count) {
    Register r;
    r.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        r.emplace_back(first + i);
    }
    return r;
}

inline Register concat(std::initializer_list<std::span<const QubitId>> parts) {
    Register r;
    for (auto part : parts) {
        r.insert(r.end(), part.begin(), part.end());
    }
    return r;
}

enum class GateKind { X, CX, ZCX, CCX, SWAP, H, T, TDG, COMPOSITE };

inline constexpr GateKind kPrimitiveKinds[] = {GateKind::X,    GateKind::CX, GateKind::ZCX,
                                               GateKind::CCX,  GateKind::SWAP, GateKind::H,
                                               GateKind::T,    GateKind::TDG};

inline std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::X: return "x";
        case GateKind::CX: return "cx";
        case GateKind::ZCX: return "zcx";
        case GateKind::CCX: return "ccx";
        case GateKind::SWAP: return "swap";
        case GateKind::H: return "h";
        case GateKind::T: return "t";
        case GateKind::TDG: return "tdg";
        case GateKind::COMPOSITE: return "composite";
    }
    return "?";
}

/// Operand count for primitive kinds; composites take their body's width.
inline std::optional<std::size_t> fixed_arity(GateKind kind) {
    switch (kind) {
        case GateKind::X:
        case GateKind::H:
        case GateKind::T:
        case GateKind::TDG: return 1;
        case GateKind::CX:
        case GateKind::ZCX:
        case GateKind::SWAP: return 2;
        case GateKind::CCX: return 3;
        case GateKind::COMPOSITE: return std::nullopt;
    }
    return std::nullopt;
}

/// True for gates that map computational basis states to basis states.
inline bool is_permutation_kind(GateKind kind) {
    switch (kind) {
        case GateKind::X:
        case GateKind::CX:
        case GateKind::ZCX:
        case GateKind::CCX:
        case GateKind::SWAP: return true;
        default: return false;
    }
}

inline bool is_t_kind(GateKind kind) { return kind == GateKind::T || kind == GateKind::TDG; }

class Circuit;

/// One gate application. For CX/ZCX operand 0 is the control; for CCX operands
/// 0 and 1 are controls and operand 2 is the target. ZCX fires on control = 0.
struct Gate {
    GateKind kind = GateKind::X;
    std::vector<QubitId> operands;
    std::string name;                     // composites only
    std::shared_ptr<const Circuit> body;  // composites only

    static Gate x(QubitId q) { return {GateKind::X, {q}, {}, nullptr}; }
    static Gate h(QubitId q) { return {GateKind::H, {q}, {}, nullptr}; }
    static Gate t(QubitId q) { return {GateKind::T, {q}, {}, nullptr}; }
    static Gate tdg(QubitId q) { return {GateKind::TDG, {q}, {}, nullptr}; }
    static Gate cx(QubitId c, QubitId t) { return {GateKind::CX, {c, t}, {}, nullptr}; }
    static Gate zcx(QubitId c, QubitId t) { return {GateKind::ZCX, {c, t}, {}, nullptr}; }
    static Gate swap(QubitId a, QubitId b) { return {GateKind::SWAP, {a, b}, {}, nullptr}; }
    static Gate ccx(QubitId c0, QubitId c1, QubitId t) {
        return {GateKind::CCX, {c0, c1, t}, {}, nullptr};
    }
    static Gate composite(std::string name, Circuit body, std::vector<QubitId> mapping);
    static Gate composite(std::string name, std::shared_ptr<const Circuit> body,
                          std::vector<QubitId> mapping) {
        return {GateKind::COMPOSITE, std::move(mapping), std::move(name), std::move(body)};
    }

    [[nodiscard]] std::string label() const {
        return kind == GateKind::COMPOSITE ? name : std::string(gate_name(kind));
    }

    friend bool operator==(const Gate &a, const Gate &b);
};

/// An invariant violation found by validate(). `path` names the chain of
/// composites leading to the offending gate, e.g. "ISQRT[0]/PART 1[5]/CTRL ADD/SUB[2]".
struct Violation {
    Errc code;
    std::string path;
    std::string message;
};

namespace detail {

/// Arity, range and distinctness checks of one gate against a circuit width.
inline std::optional<std::pair<Errc, std::string>> check_gate(const Gate &g, std::size_t width);

}  // namespace detail

class Circuit {
  public:
    explicit Circuit(std::size_t width, std::string name = {}) : width_(width), name_(std::move(name)) {
        if (width == 0) {
            throw Error(Errc::invalid_width, "circuit '" + name_ + "' must have at least one qubit");
        }
    }

    /// Builds a circuit without checking the gates; use validate() on the result.
    static Circuit unchecked(std::size_t width, std::string name, std::vector<Gate> gates) {
        Circuit c(width, std::move(name));
        c.gates_ = std::move(gates);
        return c;
    }

    [[nodiscard]] std::size_t width() const noexcept { return width_; }
    [[nodiscard]] const std::string &name() const noexcept { return name_; }
    [[nodiscard]] std::span<const Gate> gates() const noexcept { return gates_; }
    [[nodiscard]] std::size_t size() const noexcept { return gates_.size(); }
    [[nodiscard]] bool empty() const noexcept { return gates_.empty(); }
    [[nodiscard]] const Gate &operator[](std::size_t i) const { return gates_.at(i); }

    void rename(std::string name) { name_ = std::move(name); }

    Circuit &append(Gate g) {
        if (auto issue = detail::check_gate(g, width_)) {
            throw Error(issue->first, "in '" + name_ + "': " + issue->second);
        }
        gates_.push_back(std::move(g));
        return *this;
    }

    /// Appends `body` as one composite gate. Body qubit i is bound to mapping[i].
    Circuit &append_composite(std::string name, Circuit body, std::span<const QubitId> mapping) {
        return append(Gate::composite(std::move(name), std::move(body),
                                      std::vector<QubitId>(mapping.begin(), mapping.end())));
    }

    /// Appends the body under its own name.
    Circuit &append_composite(Circuit body, std::span<const QubitId> mapping) {
        std::string name = body.name();
        return append_composite(std::move(name), std::move(body), mapping);
    }

    Circuit &x(QubitId q) { return append(Gate::x(q)); }
    Circuit &h(QubitId q) { return append(Gate::h(q)); }
    Circuit &t(QubitId q) { return append(Gate::t(q)); }
    Circuit &tdg(QubitId q) { return append(Gate::tdg(q)); }
    Circuit &cx(QubitId c, QubitId t) { return append(Gate::cx(c, t)); }
    Circuit &zcx(QubitId c, QubitId t) { return append(Gate::zcx(c, t)); }
    Circuit &swap(QubitId a, QubitId b) { return append(Gate::swap(a, b)); }
    Circuit &ccx(QubitId c0, QubitId c1, QubitId t) { return append(Gate::ccx(c0, c1, t)); }

    friend bool operator==(const Circuit &a, const Circuit &b) {
        return a.width_ == b.width_ && a.name_ == b.name_ && a.gates_ == b.gates_;
    }

  private:
    std::size_t width_;
    std::string name_;
    std::vector<Gate> gates_;
};

inline Gate Gate::composite(std::string name, Circuit body, std::vector<QubitId> mapping) {
    return composite(std::move(name), std::make_shared<const Circuit>(std::move(body)), std::move(mapping));
}

inline bool operator==(const Gate &a, const Gate &b) {
    if (a.kind != b.kind || a.operands != b.operands || a.name != b.name) {
        return false;
    }
    if (a.body == b.body) {
        return true;
    }
    return a.body && b.body && *a.body == *b.body;
}

namespace detail {

inline std::optional<std::pair<Errc, std::string>> check_gate(const Gate &g, std::size_t width) {
    std::size_t expected = 0;
    if (g.kind == GateKind::COMPOSITE) {
        if (!g.body) {
            return std::pair{Errc::invalid_circuit, "composite '" + g.name + "' has no body"};
        }
        expected = g.body->width();
    } else {
        expected = *fixed_arity(g.kind);
    }
    if (g.operands.size() != expected) {
        return std::pair{Errc::arity_mismatch, g.label() + " expects " + std::to_string(expected) +
                                                   " operands, got " + std::to_string(g.operands.size())};
    }
    for (std::size_t i = 0; i < g.operands.size(); ++i) {
        if (g.operands[i].index >= width) {
            return std::pair{Errc::index_out_of_range, g.label() + " operand q[" +
                                                           std::to_string(g.operands[i].index) +
                                                           "] outside width " + std::to_string(width)};
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (g.operands[i] == g.operands[j]) {
                return std::pair{Errc::operand_collision,
                                 g.label() + " repeats operand q[" + std::to_string(g.operands[i].index) + "]"};
            }
        }
    }
    return std::nullopt;
}

inline void validate_into(const Circuit &c, const std::string &path, std::vector<const Circuit *> &stack,
                          std::vector<Violation> &out) {
    stack.push_back(&c);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Gate &g = c[i];
        std::string here = path + "[" + std::to_string(i) + "]";
        if (auto issue = check_gate(g, c.width())) {
            out.push_back({issue->first, here, issue->second});
        }
        if (g.kind != GateKind::COMPOSITE || !g.body) {
            continue;
        }
        if (std::find(stack.begin(), stack.end(), g.body.get()) != stack.end()) {
            out.push_back({Errc::composite_cycle, here, "composite '" + g.name + "' contains itself"});
            continue;
        }
        validate_into(*g.body, here + "/" + g.name, stack, out);
    }
    stack.pop_back();
}

}  // namespace detail

/// All invariant violations of `c`, recursing through composite bodies. Empty means ok.
inline std::vector<Violation> validate(const Circuit &c) {
    std::vector<Violation> out;
    std::vector<const Circuit *> stack;
    detail::validate_into(c, c.name(), stack, out);
    return out;
}

inline void require_valid(const Circuit &c) {
    auto violations = validate(c);
    if (!violations.empty()) {
        const auto &v = violations.front();
        throw Error(Errc::invalid_circuit, v.path + ": " + v.message);
    }
}

/// Gate-wise inverse: reversed order, T and TDG exchanged, composites inverted recursively.
inline Circuit inverse(const Circuit &c) {
    std::vector<Gate> gates;
    gates.reserve(c.size());
    for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
        Gate g = *it;
        if (g.kind == GateKind::T) {
            g.kind = GateKind::TDG;
        } else if (g.kind == GateKind::TDG) {
            g.kind = GateKind::T;
        } else if (g.kind == GateKind::COMPOSITE && g.body) {
            g.body = std::make_shared<const Circuit>(inverse(*g.body));
            g.name += "_dg";
        }
        gates.push_back(std::move(g));
    }
    return Circuit::unchecked(c.width(), c.name() + "_dg", std::move(gates));
}

}  // namespace qsqrt
