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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qsqrt/qsqrt.hpp"
#include "../test_util.hpp"

using namespace qsqrt;
using namespace qsqrt::testing;

namespace {

/// Collects the reasons a criterion failed.
class Check {
  public:
    void expect(bool ok, const std::string &what) {
        if (!ok) failures_.push_back(what);
    }
    [[nodiscard]] bool ok() const { return failures_.empty(); }
    [[nodiscard]] const std::vector<std::string> &failures() const { return failures_; }

  private:
    std::vector<std::string> failures_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string str(std::uint64_t v) { return std::to_string(v); }

constexpr std::size_t kTableN[] = {6, 8, 10, 12, 14, 16};
constexpr std::size_t kTableQubits[] = {13, 17, 21, 25, 29, 33};
constexpr std::size_t kTableTCount[] = {224, 364, 532, 728, 952, 1204};

void table_reproduction(Check &c, std::ostringstream &detail) {
    const auto t0 = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < std::size(kTableN); ++i) {
        const Circuit isqrt = build_isqrt_circuit(kTableN[i]);
        const std::size_t tc = t_count(isqrt);
        c.expect(isqrt.width() == kTableQubits[i], "n=" + str(kTableN[i]) + " qubits " + str(isqrt.width()));
        c.expect(tc == kTableTCount[i], "n=" + str(kTableN[i]) + " t_count " + str(tc));
    }
    const double s = seconds_since(t0);
    c.expect(s < 10.0, "runtime " + std::to_string(s) + " s");
    detail << "6 widths in " << std::fixed << std::setprecision(3) << s << " s";
}

void component_formulas(Check &c, std::ostringstream &detail) {
    for (std::size_t n = 2; n <= 10; ++n) {
        const std::size_t add = t_count(build_adder(n));
        const std::size_t sub = t_count(build_subtractor(n));
        const std::size_t ctrl = t_count(build_ctrl_adder(n));
        c.expect(add == 14 * n - 14, "adder n=" + str(n) + " " + str(add));
        c.expect(sub == 14 * n - 14, "subtractor n=" + str(n) + " " + str(sub));
        c.expect(ctrl == 21 * n - 14, "ctrl-add n=" + str(n) + " " + str(ctrl));
    }
    detail << "n = 2..10";
}

void functional_sweep(Check &c, std::ostringstream &detail) {
    std::size_t cases = 0;
    for (std::size_t n : {6u, 8u}) {
        const SqrtLayout layout = SqrtLayout::for_width(n);
        PermutationProgram prog(build_isqrt_pipeline(n));
        for (std::uint64_t a = 1; a <= max_sqrt_input(n); ++a, ++cases) {
            const BasisState out = prog.run(sqrt_input_state(layout, a));
            const std::uint64_t root = brute_isqrt(a);
            const SqrtResult got = decode_sqrt_output(layout, out);
            c.expect(got.root == root && got.remainder == a - root * root,
                     "n=" + str(n) + " a=" + str(a) + " gave (" + str(got.root) + "," + str(got.remainder) + ")");
        }
    }
    const std::map<std::uint64_t, std::string> anchors = {{9, "a = 9, root = 3, remainder = 0"},
                                                          {15, "a = 15, root = 3, remainder = 6"},
                                                          {16, "a = 16, root = 4, remainder = 0"}};
    for (const auto &[a, line] : anchors) {
        const SqrtResult r = isqrt(a, 6);
        const std::string got = "a = " + str(a) + ", root = " + str(r.root) + ", remainder = " + str(r.remainder);
        c.expect(got == line, "anchor: " + got);
    }
    detail << cases << " inputs, 3 anchors";
}

void arithmetic_exhaustive(Check &c, std::ostringstream &detail) {
    std::size_t cases = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
        const std::uint64_t mod = std::uint64_t{1} << n;
        struct Spec {
            Block block;
            bool controlled;
            std::function<std::uint64_t(std::uint64_t, std::uint64_t, std::uint64_t)> oracle;
        };
        const std::vector<Spec> specs = {
            {Block::adder, false, [mod](auto a, auto b, auto) { return (a + b) % mod; }},
            {Block::subtractor, false, [mod](auto a, auto b, auto) { return (a + mod - b) % mod; }},
            {Block::ctrl_add_sub, true,
             [mod](auto a, auto b, auto z) { return z ? (a + mod - b) % mod : (a + b) % mod; }},
            {Block::ctrl_add, true, [mod](auto a, auto b, auto z) { return z ? (a + b) % mod : a; }},
        };
        for (const Spec &s : specs) {
            if (s.block == Block::ctrl_add && n < 2) continue;
            const Circuit circuit = build_block(s.block, n);
            const std::size_t a0 = s.controlled ? 1 : 0, b0 = a0 + n;
            PermutationProgram prog(circuit);
            const std::uint64_t zmax = s.controlled ? 2 : 1;
            for (std::uint64_t z = 0; z < zmax; ++z)
                for (std::uint64_t a = 0; a < mod; ++a)
                    for (std::uint64_t b = 0; b < mod; ++b, ++cases) {
                        const std::uint64_t in = z | (a << a0) | (b << b0);
                        const std::uint64_t out = prog.run(BasisState::from_uint(circuit.width(), in)).to_uint();
                        const bool ok = bits_of(out, a0, n) == s.oracle(a, b, z) && bits_of(out, b0, n) == b &&
                                        (!s.controlled || (out & 1) == z);
                        c.expect(ok, std::string(block_name(s.block)) + " n=" + str(n) + " in=" + str(in));
                    }
        }
    }
    detail << cases << " cases";
}

void decomposition_equivalence(Check &c, std::ostringstream &detail) {
    Circuit ccx(3);
    ccx.ccx(0, 1, 2);
    const Circuit lowered = lower_to_clifford_t(ccx);
    const double diff = max_abs_diff(unitary_of(ccx), unitary_of(lowered));
    c.expect(diff <= 1e-12, "CCX unitary diff " + std::to_string(diff));
    c.expect(t_count(ccx) == 7, "CCX t_count " + str(t_count(ccx)));
    c.expect(is_clifford_t(lowered), "lowered CCX not Clifford+T");

    Circuit swap(2);
    swap.swap(0, 1);
    Circuit zcx(2);
    zcx.zcx(0, 1);
    for (const Circuit *g : {&swap, &zcx}) {
        const Circuit low = lower_to_clifford_t(*g);
        c.expect(is_clifford_t(low), std::string(gate_name((*g)[0].kind)) + " lowering not Clifford+T");
        for (std::uint64_t s = 0; s < 4; ++s) {
            c.expect(perm_run(*g, BasisState::from_uint(2, s)) == perm_run(low, BasisState::from_uint(2, s)),
                     std::string(gate_name((*g)[0].kind)) + " input " + str(s));
        }
        c.expect(max_abs_diff(unitary_of(*g), unitary_of(low)) <= 1e-12, "unitary mismatch");
    }
    detail << "CCX max diff " << std::scientific << std::setprecision(1) << diff;
}

void cross_backend(Check &c, std::ostringstream &detail) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t n = 6;
    const SqrtLayout layout = SqrtLayout::for_width(n);
    const Circuit pipeline = build_isqrt_pipeline(n);
    const Circuit lowered = lower_to_clifford_t(pipeline);
    PermutationProgram prog(pipeline);
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<std::uint64_t> pick(1, max_sqrt_input(n));
    double worst = 1.0;
    for (int i = 0; i < 20; ++i) {
        const std::uint64_t a = pick(rng);
        const BasisState in = sqrt_input_state(layout, a);
        const std::uint64_t want = prog.run(in).to_uint();
        const Statevector sv = sv_run(lowered, Statevector::basis(in));
        const std::size_t idx = sv.argmax();
        const double mag = std::abs(sv[idx]);
        worst = std::min(worst, mag);
        c.expect(mag >= 1.0 - 1e-9, "a=" + str(a) + " |amp|=" + std::to_string(mag));
        c.expect(idx == want, "a=" + str(a) + " basis " + str(idx) + " vs " + str(want));
    }
    detail << "20 inputs on " << lowered.width() << " qubits, min |amp| " << std::setprecision(12) << worst << ", "
           << std::setprecision(2) << std::fixed << seconds_since(t0) << " s";
}

void property_suite(Check &c, std::ostringstream &detail) {
    std::mt19937_64 rng(7);

    // Reversibility on random superpositions.
    for (int trial = 0; trial < 10; ++trial) {
        const Statevector start = sv_run(random_circuit(rng, 8, 60, kCliffordTKinds), Statevector(8));
        const Circuit circuit = random_circuit(rng, 8, 400, kCliffordTKinds);
        const double d = sv_run(inverse(circuit), sv_run(circuit, start)).max_distance(start);
        c.expect(d <= 1e-9, "random circuit round trip " + std::to_string(d));
    }
    {
        const Circuit lowered = lower_to_clifford_t(build_isqrt_pipeline(4));
        const Circuit undo = inverse(lowered);
        for (int trial = 0; trial < 10; ++trial) {
            const Statevector start = sv_run(random_circuit(rng, 9, 60, kCliffordTKinds), Statevector(9));
            const double d = sv_run(undo, sv_run(lowered, start)).max_distance(start);
            c.expect(d <= 1e-9, "isqrt(4) round trip " + std::to_string(d));
        }
    }

    // Ancilla restored on every swept input.
    std::size_t swept = 0;
    for (std::size_t n : {4u, 6u, 8u, 10u}) {
        const SqrtLayout layout = SqrtLayout::for_width(n);
        PermutationProgram prog(build_isqrt_pipeline(n));
        for (std::uint64_t a = 1; a <= max_sqrt_input(n); ++a, ++swept) {
            c.expect(!prog.run(sqrt_input_state(layout, a)).get(layout.z.index),
                     "z dirty at n=" + str(n) + " a=" + str(a));
        }
    }

    // Schedule validity: disjoint qubits per layer, layered replay equals sequential.
    const Circuit flat = flatten(build_isqrt_pipeline(6));
    const Circuit lowered = lower_to_clifford_t(build_isqrt_pipeline(4));
    for (const Circuit *circuit : {&flat, &lowered}) {
        const auto layers = schedule_layers(*circuit);
        const std::size_t depth = layers.empty() ? 0 : *std::max_element(layers.begin(), layers.end());
        std::vector<std::vector<std::size_t>> by_layer(depth + 1);
        for (std::size_t i = 0; i < layers.size(); ++i) by_layer[layers[i]].push_back(i);
        Circuit replay(circuit->width(), "replay");
        for (auto &members : by_layer) {
            std::vector<bool> used(circuit->width(), false);
            for (std::size_t i : members) {
                for (QubitId q : (*circuit)[i].operands) {
                    c.expect(!used[q.index], "layer shares qubit " + str(q.index));
                    used[q.index] = true;
                }
            }
            std::shuffle(members.begin(), members.end(), rng);
            for (std::size_t i : members) replay.append((*circuit)[i]);
        }
        for (int trial = 0; trial < 100; ++trial) {
            if (circuit == &flat) {
                const auto in = BasisState::from_uint(circuit->width(), rng() & ((1u << circuit->width()) - 1));
                c.expect(perm_run(*circuit, in) == perm_run(replay, in), "replay differs (perm)");
            } else {
                const Statevector start =
                    sv_run(random_circuit(rng, circuit->width(), 30, kCliffordTKinds), Statevector(circuit->width()));
                const double d = sv_run(*circuit, start).max_distance(sv_run(replay, start));
                c.expect(d <= 1e-9, "replay differs (sv) " + std::to_string(d));
            }
        }
    }
    detail << "z clean on " << swept << " inputs, 200 layered replays";
}

// Scheduled T-depth per n, frozen from the first measurement as a regression baseline.
const std::map<std::size_t, std::size_t> kTDepthBaseline = {
    {6, 179}, {8, 290}, {10, 423}, {12, 578}, {14, 755}, {16, 954},
};

void t_depth_baseline(Check &c, std::ostringstream &detail) {
    for (const auto &[n, pinned] : kTDepthBaseline) {
        const std::size_t measured = t_depth(build_isqrt_circuit(n));
        c.expect(measured == pinned, "n=" + str(n) + " t_depth " + str(measured) + " (baseline " + str(pinned) + ")");
        detail << (n == 6 ? "" : " ") << n << ":" << measured << "(5n+3=" << 5 * n + 3 << ")";
    }
}

}  // namespace

int main() {
    struct Criterion {
        const char *name;
        void (*body)(Check &, std::ostringstream &);
    };
    const Criterion criteria[] = {
        {"table reproduction: isqrt qubits and T-count for n = 6..16", table_reproduction},
        {"component T-count formulas for adder, subtractor, ctrl-add", component_formulas},
        {"functional sweep against the integer square-root oracle", functional_sweep},
        {"arithmetic blocks exhaustive for n <= 4", arithmetic_exhaustive},
        {"Clifford+T decompositions of CCX, SWAP, ZCX", decomposition_equivalence},
        {"lowered isqrt(6) statevector agrees with permutation backend", cross_backend},
        {"reversibility, ancilla cleanup, schedule validity", property_suite},
        {"scheduled T-depth reported and pinned per n", t_depth_baseline},
    };
    int failed = 0;
    int index = 0;
    for (const Criterion &cr : criteria) {
        ++index;
        Check check;
        std::ostringstream detail;
        try {
            cr.body(check, detail);
        } catch (const std::exception &e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        std::cout << (check.ok() ? "[PASS] " : "[FAIL] ") << index << ". " << cr.name << " (" << detail.str() << ")\n";
        if (!check.ok()) {
            ++failed;
            const auto &f = check.failures();
            for (std::size_t i = 0; i < f.size() && i < 5; ++i) std::cout << "       " << f[i] << '\n';
            if (f.size() > 5) std::cout << "       ... " << f.size() - 5 << " more\n";
        }
    }
    std::cout << (std::size(criteria) - failed) << "/" << std::size(criteria) << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
