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
 * Decomposition passes: composite flattening and rewriting of logical gates
 * into the Clifford+T primitive set {X, CX, H, T, TDG}.
 */

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qsqrt/circuit.hpp"

namespace qsqrt {

inline bool is_clifford_t_kind(GateKind kind) {
    switch (kind) {
        case GateKind::X:
        case GateKind::CX:
        case GateKind::H:
        case GateKind::T:
        case GateKind::TDG: return true;
        default: return false;
    }
}

namespace detail {

inline void flatten_into(const Circuit &c, std::span<const QubitId> mapping, std::vector<Gate> &out) {
    for (const Gate &g : c.gates()) {
        std::vector<QubitId> ops;
        ops.reserve(g.operands.size());
        for (QubitId q : g.operands) {
            ops.push_back(mapping[q.index]);
        }
        if (g.kind == GateKind::COMPOSITE) {
            flatten_into(*g.body, ops, out);
        } else {
            out.push_back(Gate{g.kind, std::move(ops), {}, nullptr});
        }
    }
}

/// Body qubit i of `g` maps to g.operands[i].
inline void instantiate_into(const Circuit &replacement, const Gate &g, std::vector<Gate> &out) {
    flatten_into(replacement, g.operands, out);
}

}  // namespace detail

/// In-order expansion of every composite; the result contains primitive gates only.
inline Circuit flatten(const Circuit &c) {
    require_valid(c);
    std::vector<Gate> out;
    out.reserve(c.size());
    Register identity = qubit_range(0, c.width());
    detail::flatten_into(c, identity, out);
    return Circuit::unchecked(c.width(), c.name(), std::move(out));
}

inline bool has_composites(const Circuit &c) {
    return std::any_of(c.gates().begin(), c.gates().end(),
                       [](const Gate &g) { return g.kind == GateKind::COMPOSITE; });
}

/// Replacement template for one gate kind. The replacement's width equals the
/// kind's arity; its qubit i stands for the source gate's operand i.
struct DecompositionRule {
    GateKind source;
    Circuit replacement;
};

inline Circuit swap_rule() {
    Circuit c(2, "swap");
    c.cx(0, 1).cx(1, 0).cx(0, 1);
    return c;
}

inline Circuit zcx_rule() {
    Circuit c(2, "zcx");
    c.x(0).cx(0, 1).x(0);
    return c;
}

/// Seven-T Toffoli: 2 H, 6 CX, 4 T, 3 TDG. Exact (no global phase).
inline Circuit toffoli_rule() {
    const QubitId a = 0, b = 1, t = 2;
    Circuit c(3, "ccx");
    c.h(t);
    c.cx(b, t).tdg(t);
    c.cx(a, t).t(t);
    c.cx(b, t).tdg(t);
    c.cx(a, t).t(b).t(t);
    c.h(t);
    c.cx(a, b).tdg(b);
    c.cx(a, b).t(a);
    return c;
}

/// Decomposition rules keyed by gate kind.
class RuleRegistry {
  public:
    RuleRegistry() = default;

    /// SWAP, ZCX and CCX rules.
    static const RuleRegistry &standard() {
        static const RuleRegistry registry = [] {
            RuleRegistry r;
            r.set({GateKind::SWAP, swap_rule()});
            r.set({GateKind::ZCX, zcx_rule()});
            r.set({GateKind::CCX, toffoli_rule()});
            return r;
        }();
        return registry;
    }

    void set(DecompositionRule rule) {
        auto arity = fixed_arity(rule.source);
        if (!arity) {
            throw Error(Errc::unsupported_gate, "composites are expanded by flatten, not by a rule");
        }
        if (rule.replacement.width() != *arity) {
            throw Error(Errc::arity_mismatch, "rule for " + std::string(gate_name(rule.source)) +
                                                  " must have width " + std::to_string(*arity));
        }
        require_valid(rule.replacement);
        rules_.insert_or_assign(rule.source, std::move(rule.replacement));
    }

    [[nodiscard]] const Circuit *find(GateKind kind) const {
        auto it = rules_.find(kind);
        return it == rules_.end() ? nullptr : &it->second;
    }

  private:
    std::map<GateKind, Circuit> rules_;
};

namespace detail {

inline void lower_gate_into(const Gate &g, const RuleRegistry &rules, std::vector<Gate> &out, int depth) {
    if (is_clifford_t_kind(g.kind)) {
        out.push_back(g);
        return;
    }
    const Circuit *rule = rules.find(g.kind);
    if (rule == nullptr || depth > 16) {
        throw Error(Errc::unsupported_gate, "no Clifford+T rule for " + g.label());
    }
    std::vector<Gate> expanded;
    instantiate_into(*rule, g, expanded);
    for (const Gate &e : expanded) {
        lower_gate_into(e, rules, out, depth + 1);
    }
}

inline Circuit lower_single(const Gate &g, GateKind expected) {
    if (g.kind != expected) {
        throw Error(Errc::unsupported_gate, "expected " + std::string(gate_name(expected)) + ", got " + g.label());
    }
    std::size_t width = 0;
    for (QubitId q : g.operands) {
        width = std::max(width, q.index + 1);
    }
    Circuit holder(width, g.label());
    holder.append(g);
    std::vector<Gate> out;
    instantiate_into(*RuleRegistry::standard().find(expected), g, out);
    return Circuit::unchecked(width, g.label(), std::move(out));
}

}  // namespace detail

/// SWAP(a,b) -> CX(a,b) CX(b,a) CX(a,b). The result is as wide as the largest operand needs.
inline Circuit lower_swap(const Gate &g) { return detail::lower_single(g, GateKind::SWAP); }

/// ZCX(c,t) -> X(c) CX(c,t) X(c).
inline Circuit lower_zcx(const Gate &g) { return detail::lower_single(g, GateKind::ZCX); }

/// CCX(a,b,c) -> the 15-gate Clifford+T sequence of toffoli_rule().
inline Circuit lower_toffoli(const Gate &g) { return detail::lower_single(g, GateKind::CCX); }

/// Flattens, then rewrites every non-Clifford+T gate by its rule. Idempotent.
inline Circuit lower_to_clifford_t(const Circuit &c, const RuleRegistry &rules = RuleRegistry::standard()) {
    Circuit flat = flatten(c);
    std::vector<Gate> out;
    out.reserve(flat.size() * 4);
    for (const Gate &g : flat.gates()) {
        detail::lower_gate_into(g, rules, out, 0);
    }
    return Circuit::unchecked(c.width(), c.name(), std::move(out));
}

inline bool is_clifford_t(const Circuit &c) {
    return std::all_of(c.gates().begin(), c.gates().end(),
                       [](const Gate &g) { return is_clifford_t_kind(g.kind); });
}

}  // namespace qsqrt
