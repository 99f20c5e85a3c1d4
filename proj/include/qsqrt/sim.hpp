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
 * Two simulation backends.
 *
 * PermutationProgram runs circuits built from X/CX/ZCX/CCX/SWAP (and composites
 * of them) on single computational basis states. Statevector runs Clifford+T
 * circuits on dense amplitude vectors, bit i of an index being qubit i.
 */

#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qsqrt/circuit.hpp"
#include "qsqrt/lowering.hpp"

namespace qsqrt {

/// Classical bitstring of circuit width. Bit i is qubit i.
class BasisState {
  public:
    explicit BasisState(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

    static BasisState from_uint(std::size_t width, std::uint64_t value) {
        BasisState s(width);
        for (std::size_t i = 0; i < width && i < 64; ++i) {
            s.set(i, (value >> i) & 1U);
        }
        if (width < 64 && (value >> width) != 0) {
            throw Error(Errc::input_range, "value does not fit in " + std::to_string(width) + " qubits");
        }
        return s;
    }

    [[nodiscard]] std::size_t width() const noexcept { return width_; }

    [[nodiscard]] bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
    void set(std::size_t i, bool v) {
        const std::uint64_t m = std::uint64_t{1} << (i % 64);
        words_[i / 64] = v ? (words_[i / 64] | m) : (words_[i / 64] & ~m);
    }
    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

    /// Unsigned value of the register (entry 0 is the LSB). At most 64 qubits.
    [[nodiscard]] std::uint64_t read(std::span<const QubitId> reg) const {
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < reg.size() && i < 64; ++i) {
            v |= std::uint64_t{get(reg[i].index)} << i;
        }
        return v;
    }

    void write(std::span<const QubitId> reg, std::uint64_t value) {
        for (std::size_t i = 0; i < reg.size(); ++i) {
            set(reg[i].index, i < 64 && ((value >> i) & 1U));
        }
    }

    /// Whole state as an integer; only for width <= 64.
    [[nodiscard]] std::uint64_t to_uint() const {
        if (width_ > 64) {
            throw Error(Errc::capacity_exceeded, "basis state wider than 64 qubits");
        }
        return words_.empty() ? 0 : words_[0];
    }

    /// Bits printed most-significant first, like a ket label.
    [[nodiscard]] std::string to_string() const {
        std::string s;
        for (std::size_t i = width_; i-- > 0;) {
            s.push_back(get(i) ? '1' : '0');
        }
        return s;
    }

    friend bool operator==(const BasisState &, const BasisState &) = default;

  private:
    std::size_t width_;
    std::vector<std::uint64_t> words_;
};

/// A flattened permutation circuit, ready to be run on many inputs.
class PermutationProgram {
  public:
    explicit PermutationProgram(const Circuit &c) : flat_(flatten(c)) {
        for (const Gate &g : flat_.gates()) {
            if (!is_permutation_kind(g.kind)) {
                throw Error(Errc::non_permutation_gate,
                            g.label() + " does not map basis states to basis states");
            }
        }
    }

    [[nodiscard]] std::size_t width() const noexcept { return flat_.width(); }
    [[nodiscard]] const Circuit &circuit() const noexcept { return flat_; }

    static void apply(const Gate &g, BasisState &s) {
        const auto &q = g.operands;
        switch (g.kind) {
            case GateKind::X: s.flip(q[0].index); break;
            case GateKind::CX:
                if (s.get(q[0].index)) s.flip(q[1].index);
                break;
            case GateKind::ZCX:
                if (!s.get(q[0].index)) s.flip(q[1].index);
                break;
            case GateKind::CCX:
                if (s.get(q[0].index) && s.get(q[1].index)) s.flip(q[2].index);
                break;
            case GateKind::SWAP: {
                bool a = s.get(q[0].index);
                s.set(q[0].index, s.get(q[1].index));
                s.set(q[1].index, a);
                break;
            }
            default:
                throw Error(Errc::non_permutation_gate, g.label() + " is not a permutation gate");
        }
    }

    [[nodiscard]] BasisState run(BasisState s) const {
        if (s.width() != flat_.width()) {
            throw Error(Errc::width_mismatch, "state width " + std::to_string(s.width()) +
                                                  " != circuit width " + std::to_string(flat_.width()));
        }
        for (const Gate &g : flat_.gates()) {
            apply(g, s);
        }
        return s;
    }

  private:
    Circuit flat_;
};

inline bool is_permutation_circuit(const Circuit &c) {
    for (const Gate &g : c.gates()) {
        if (g.kind == GateKind::COMPOSITE ? !is_permutation_circuit(*g.body) : !is_permutation_kind(g.kind)) {
            return false;
        }
    }
    return true;
}

inline BasisState perm_run(const Circuit &c, const BasisState &in) { return PermutationProgram(c).run(in); }

using Amplitude = std::complex<double>;

inline constexpr std::size_t kDefaultStatevectorCap = 16;

class Statevector {
  public:
    /// |0...0>.
    explicit Statevector(std::size_t width, std::size_t cap = kDefaultStatevectorCap) : width_(width) {
        if (width == 0) {
            throw Error(Errc::invalid_width, "statevector needs at least one qubit");
        }
        if (width > cap || width >= 63) {
            throw Error(Errc::capacity_exceeded, std::to_string(width) + " qubits exceeds the statevector cap of " +
                                                     std::to_string(cap));
        }
        amps_.assign(std::size_t{1} << width, Amplitude{0.0, 0.0});
        amps_[0] = 1.0;
    }

    static Statevector basis(std::size_t width, std::uint64_t index, std::size_t cap = kDefaultStatevectorCap) {
        Statevector sv(width, cap);
        if (index >= sv.amps_.size()) {
            throw Error(Errc::input_range, "basis index out of range");
        }
        sv.amps_[0] = 0.0;
        sv.amps_[index] = 1.0;
        return sv;
    }

    static Statevector basis(const BasisState &s, std::size_t cap = kDefaultStatevectorCap) {
        return basis(s.width(), s.to_uint(), cap);
    }

    [[nodiscard]] std::size_t width() const noexcept { return width_; }
    [[nodiscard]] std::size_t dim() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
    [[nodiscard]] Amplitude operator[](std::size_t i) const { return amps_.at(i); }
    Amplitude &operator[](std::size_t i) { return amps_.at(i); }

    [[nodiscard]] double norm() const {
        double s = 0.0;
        for (const auto &a : amps_) s += std::norm(a);
        return std::sqrt(s);
    }

    /// Index of the largest-magnitude amplitude.
    [[nodiscard]] std::size_t argmax() const {
        std::size_t best = 0;
        for (std::size_t i = 1; i < amps_.size(); ++i) {
            if (std::abs(amps_[i]) > std::abs(amps_[best])) best = i;
        }
        return best;
    }

    /// Largest componentwise amplitude difference; infinite on width mismatch.
    [[nodiscard]] double max_distance(const Statevector &other) const {
        if (other.width_ != width_) return INFINITY;
        double d = 0.0;
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            d = std::max(d, std::abs(amps_[i] - other.amps_[i]));
        }
        return d;
    }

    void apply(const Gate &g) {
        const auto &q = g.operands;
        switch (g.kind) {
            case GateKind::X: apply_x(bit(q[0]), 0); break;
            case GateKind::CX: apply_x(bit(q[1]), bit(q[0])); break;
            case GateKind::H: apply_h(bit(q[0])); break;
            case GateKind::T: apply_phase(bit(q[0]), std::polar(1.0, std::numbers::pi / 4)); break;
            case GateKind::TDG: apply_phase(bit(q[0]), std::polar(1.0, -std::numbers::pi / 4)); break;
            default: throw Error(Errc::must_lower, g.label() + " must be lowered to Clifford+T first");
        }
    }

  private:
    static std::size_t bit(QubitId q) { return std::size_t{1} << q.index; }

    void apply_x(std::size_t target, std::size_t controls) {
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if ((i & target) == 0 && (i & controls) == controls) {
                std::swap(amps_[i], amps_[i | target]);
            }
        }
    }

    void apply_h(std::size_t target) {
        const double r = std::numbers::sqrt2 / 2.0;
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if ((i & target) == 0) {
                Amplitude a0 = amps_[i], a1 = amps_[i | target];
                amps_[i] = r * (a0 + a1);
                amps_[i | target] = r * (a0 - a1);
            }
        }
    }

    void apply_phase(std::size_t target, Amplitude phase) {
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if (i & target) amps_[i] *= phase;
        }
    }

    std::size_t width_;
    std::vector<Amplitude> amps_;
};

/// Runs a Clifford+T circuit. Composites are flattened; any other gate kind is a must-lower error.
inline Statevector sv_run(const Circuit &c, Statevector state, std::size_t cap = kDefaultStatevectorCap) {
    if (c.width() > cap) {
        throw Error(Errc::capacity_exceeded,
                    std::to_string(c.width()) + " qubits exceeds the statevector cap of " + std::to_string(cap));
    }
    if (state.width() != c.width()) {
        throw Error(Errc::width_mismatch, "statevector width differs from circuit width");
    }
    const Circuit flat = has_composites(c) ? flatten(c) : c;
    for (const Gate &g : flat.gates()) {
        if (!is_clifford_t_kind(g.kind)) {
            throw Error(Errc::must_lower, g.label() + " must be lowered to Clifford+T first");
        }
    }
    for (const Gate &g : flat.gates()) {
        state.apply(g);
    }
    return state;
}

enum class EquivMode { exhaustive, sampled };

struct EquivalenceResult {
    bool equivalent = true;
    std::size_t cases = 0;
    std::optional<BasisState> counterexample;

    explicit operator bool() const noexcept { return equivalent; }
};

inline constexpr std::size_t kExhaustivePermutationLimit = 20;
inline constexpr std::size_t kExhaustiveStatevectorLimit = 12;
inline constexpr std::size_t kSampledInputs = 100;
inline constexpr double kEquivalenceTolerance = 1e-9;

/// Compares two circuits on basis inputs. Permutation-only pairs use the
/// permutation backend; anything else is lowered and compared amplitude-wise.
inline EquivalenceResult assert_equiv(const Circuit &a, const Circuit &b, EquivMode mode,
                                      std::uint64_t seed = 0x5eed, std::size_t cap = kDefaultStatevectorCap,
                                      double tolerance = kEquivalenceTolerance) {
    if (a.width() != b.width()) {
        throw Error(Errc::width_mismatch, "circuits have widths " + std::to_string(a.width()) + " and " +
                                              std::to_string(b.width()));
    }
    const std::size_t width = a.width();
    const bool permutation = is_permutation_circuit(a) && is_permutation_circuit(b);
    const std::size_t limit = permutation ? kExhaustivePermutationLimit : kExhaustiveStatevectorLimit;
    if (mode == EquivMode::exhaustive && width > limit) {
        throw Error(Errc::capacity_exceeded, "exhaustive comparison limited to " + std::to_string(limit) +
                                                 " qubits; use sampled mode");
    }
    if (width > 64) {
        throw Error(Errc::capacity_exceeded, "basis sampling limited to 64 qubits");
    }

    std::vector<std::uint64_t> inputs;
    if (mode == EquivMode::exhaustive) {
        inputs.resize(std::size_t{1} << width);
        for (std::size_t i = 0; i < inputs.size(); ++i) inputs[i] = i;
    } else {
        std::mt19937_64 rng(seed);
        const std::uint64_t mask = width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
        for (std::size_t i = 0; i < kSampledInputs; ++i) inputs.push_back(rng() & mask);
    }

    EquivalenceResult result;
    if (permutation) {
        PermutationProgram pa(a), pb(b);
        for (std::uint64_t in : inputs) {
            ++result.cases;
            auto s = BasisState::from_uint(width, in);
            if (pa.run(s) != pb.run(s)) {
                result.equivalent = false;
                result.counterexample = s;
                return result;
            }
        }
        return result;
    }

    const Circuit la = lower_to_clifford_t(a), lb = lower_to_clifford_t(b);
    for (std::uint64_t in : inputs) {
        ++result.cases;
        auto sa = sv_run(la, Statevector::basis(width, in, cap), cap);
        auto sb = sv_run(lb, Statevector::basis(width, in, cap), cap);
        if (sa.max_distance(sb) > tolerance) {
            result.equivalent = false;
            result.counterexample = BasisState::from_uint(width, in);
            return result;
        }
    }
    return result;
}

}  // namespace qsqrt
