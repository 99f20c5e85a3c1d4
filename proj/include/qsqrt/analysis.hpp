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
 * Resource metrics over Clifford+T circuits.
 *
 * T-depth is measured on an as-soon-as-possible layering of the whole lowered
 * circuit, so it is an upper bound on the true minimum T-depth (no commutation
 * of Clifford gates is attempted).
 */

#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "qsqrt/lowering.hpp"

namespace qsqrt {

using Histogram = std::map<GateKind, std::size_t>;

/// Per-kind counts after flattening composites.
inline Histogram count_ops(const Circuit &c) {
    Histogram h;
    const Circuit flat = has_composites(c) ? flatten(c) : c;
    for (const Gate &g : flat.gates()) {
        ++h[g.kind];
    }
    return h;
}

inline std::size_t t_count_of(const Histogram &h) {
    std::size_t n = 0;
    if (auto it = h.find(GateKind::T); it != h.end()) n += it->second;
    if (auto it = h.find(GateKind::TDG); it != h.end()) n += it->second;
    return n;
}

/// Number of T and TDG gates after lowering to Clifford+T.
inline std::size_t t_count(const Circuit &c) { return t_count_of(count_ops(lower_to_clifford_t(c))); }

/// ASAP layer (1-based) of every gate: one more than the latest layer among the
/// previous gates on any of its qubits. Composites must be flattened first.
inline std::vector<std::size_t> schedule_layers(const Circuit &c) {
    std::vector<std::size_t> qubit_layer(c.width(), 0);
    std::vector<std::size_t> layers;
    layers.reserve(c.size());
    for (const Gate &g : c.gates()) {
        if (g.kind == GateKind::COMPOSITE) {
            throw Error(Errc::must_lower, "schedule_layers needs a flattened circuit, found composite '" + g.name + "'");
        }
        std::size_t layer = 0;
        for (QubitId q : g.operands) layer = std::max(layer, qubit_layer[q.index]);
        ++layer;
        for (QubitId q : g.operands) qubit_layer[q.index] = layer;
        layers.push_back(layer);
    }
    return layers;
}

namespace detail {

inline std::size_t scheduled_t_depth(const Circuit &lowered, const std::vector<std::size_t> &layers) {
    std::vector<std::size_t> t_layers;
    for (std::size_t i = 0; i < layers.size(); ++i) {
        if (is_t_kind(lowered[i].kind)) t_layers.push_back(layers[i]);
    }
    std::sort(t_layers.begin(), t_layers.end());
    return static_cast<std::size_t>(std::unique(t_layers.begin(), t_layers.end()) - t_layers.begin());
}

}  // namespace detail

/// Distinct ASAP layers holding at least one T or TDG, on the lowered circuit.
inline std::size_t t_depth(const Circuit &c) {
    const Circuit lowered = lower_to_clifford_t(c);
    return detail::scheduled_t_depth(lowered, schedule_layers(lowered));
}

/// Number of ASAP layers of the lowered circuit.
inline std::size_t total_depth(const Circuit &c) {
    const auto layers = schedule_layers(lower_to_clifford_t(c));
    return layers.empty() ? 0 : *std::max_element(layers.begin(), layers.end());
}

struct ResourceReport {
    std::size_t t_count = 0;
    std::size_t t_depth = 0;  // scheduled T-depth (upper bound)
    std::size_t total_depth = 0;
    std::size_t width = 0;
    Histogram histogram;  // of the lowered circuit
};

inline ResourceReport analyze(const Circuit &c) {
    const Circuit lowered = lower_to_clifford_t(c);
    const auto layers = schedule_layers(lowered);
    ResourceReport r;
    r.histogram = count_ops(lowered);
    r.t_count = t_count_of(r.histogram);
    r.t_depth = detail::scheduled_t_depth(lowered, layers);
    r.total_depth = layers.empty() ? 0 : *std::max_element(layers.begin(), layers.end());
    r.width = c.width();
    return r;
}

/// (7/2) n^2 + 21 n - 28 for even n >= 4, in exact integer arithmetic.
inline std::size_t expected_t_count_isqrt(std::size_t n) {
    if (n < 4 || n % 2 != 0) {
        throw Error(Errc::invalid_width, "T-count formula needs even n >= 4, got " + std::to_string(n));
    }
    return (7 * n * n + 42 * n - 56) / 2;
}

/// One row of a resource table: a block instantiated at register width n.
struct ResourceRow {
    std::size_t n = 0;
    ResourceReport report;
    std::size_t width_expected = 0;
    std::size_t t_count_expected = 0;

    [[nodiscard]] bool matches() const {
        return report.width == width_expected && report.t_count == t_count_expected;
    }
};

}  // namespace qsqrt
