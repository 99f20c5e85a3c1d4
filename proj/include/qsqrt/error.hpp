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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qsqrt {

/// Failure categories raised by circuit construction, lowering, simulation and parsing.
enum class Errc {
    invalid_width,
    index_out_of_range,
    operand_collision,
    arity_mismatch,
    composite_cycle,
    invalid_circuit,
    unsupported_gate,
    must_lower,
    non_permutation_gate,
    capacity_exceeded,
    input_range,
    width_mismatch,
    parse_error,
};

inline std::string_view errc_name(Errc code) {
    switch (code) {
        case Errc::invalid_width: return "invalid-width";
        case Errc::index_out_of_range: return "index-out-of-range";
        case Errc::operand_collision: return "operand-collision";
        case Errc::arity_mismatch: return "arity-mismatch";
        case Errc::composite_cycle: return "composite-cycle";
        case Errc::invalid_circuit: return "invalid-circuit";
        case Errc::unsupported_gate: return "unsupported-gate";
        case Errc::must_lower: return "must-lower";
        case Errc::non_permutation_gate: return "non-permutation-gate";
        case Errc::capacity_exceeded: return "capacity-exceeded";
        case Errc::input_range: return "input-range";
        case Errc::width_mismatch: return "width-mismatch";
        case Errc::parse_error: return "parse-error";
    }
    return "unknown";
}

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string &message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    [[nodiscard]] Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

/// Raised by the OpenQASM reader; carries the 1-based source line.
class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string &message)
        : Error(Errc::parse_error, "line " + std::to_string(line) + ": " + message), line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

}  // namespace qsqrt
