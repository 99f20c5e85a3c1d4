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
 * OpenQASM 2.0 reader/writer and resource report serialization.
 *
 * Emitted documents use only x, cx, ccx, swap, h, t and tdg on a single
 * register named q. ZCX is written as x; cx; x so any QASM 2.0 toolchain can
 * consume the output without custom gate definitions.
 */

#pragma once

#include <cctype>
#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qsqrt/analysis.hpp"
#include "qsqrt/lowering.hpp"

namespace qsqrt {

namespace detail {

inline void emit_gate(std::ostream &os, std::string_view name, const std::vector<QubitId> &ops) {
    os << name << ' ';
    for (std::size_t i = 0; i < ops.size(); ++i) {
        if (i) os << ',';
        os << "q[" << ops[i].index << ']';
    }
    os << ";\n";
}

}  // namespace detail

inline std::string to_qasm(const Circuit &c) {
    const Circuit flat = flatten(c);
    std::ostringstream os;
    os << "OPENQASM 2.0;\n"
       << "include \"qelib1.inc\";\n"
       << "qreg q[" << c.width() << "];\n";
    for (const Gate &g : flat.gates()) {
        if (g.kind == GateKind::ZCX) {
            detail::emit_gate(os, "x", {g.operands[0]});
            detail::emit_gate(os, "cx", g.operands);
            detail::emit_gate(os, "x", {g.operands[0]});
        } else {
            detail::emit_gate(os, gate_name(g.kind), g.operands);
        }
    }
    return os.str();
}

/// Gate histogram a QASM export of `c` contains (ZCX counted as its x, cx, x expansion).
inline Histogram exported_counts(const Circuit &c) {
    Histogram h = count_ops(c);
    if (auto it = h.find(GateKind::ZCX); it != h.end()) {
        h[GateKind::X] += 2 * it->second;
        h[GateKind::CX] += it->second;
        h.erase(GateKind::ZCX);
    }
    return h;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline bool is_identifier(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(),
                       [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; });
}

/// "name[index]" -> (name, index).
inline std::pair<std::string_view, std::size_t> parse_indexed(std::string_view s, std::size_t line) {
    s = trim(s);
    auto open = s.find('[');
    if (s.empty() || open == std::string_view::npos || s.back() != ']') {
        throw ParseError(line, "expected name[index], got '" + std::string(s) + "'");
    }
    std::string_view name = trim(s.substr(0, open));
    std::string_view digits = trim(s.substr(open + 1, s.size() - open - 2));
    std::size_t value = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (!is_identifier(name) || ec != std::errc{} || end != digits.data() + digits.size()) {
        throw ParseError(line, "malformed operand '" + std::string(s) + "'");
    }
    return {name, value};
}

struct Statement {
    std::string text;
    std::size_t line;
};

inline std::vector<Statement> split_statements(std::string_view text) {
    std::vector<Statement> out;
    std::string current;
    std::size_t start_line = 0, line = 1;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == '/' && i + 1 < text.size() && text[i + 1] == '/') {
            while (i < text.size() && text[i] != '\n') ++i;
            if (i == text.size()) break;
            ch = '\n';
        }
        if (ch == '\n') {
            ++line;
            current.push_back(' ');
            continue;
        }
        if (ch == ';') {
            out.push_back({current, start_line ? start_line : line});
            current.clear();
            start_line = 0;
            continue;
        }
        if (!std::isspace(static_cast<unsigned char>(ch)) && start_line == 0) start_line = line;
        current.push_back(ch);
    }
    if (!trim(current).empty()) {
        throw ParseError(start_line, "statement is missing its ';'");
    }
    return out;
}

inline std::optional<GateKind> qasm_gate_kind(std::string_view name) {
    if (name == "x") return GateKind::X;
    if (name == "cx" || name == "CX") return GateKind::CX;
    if (name == "ccx") return GateKind::CCX;
    if (name == "swap") return GateKind::SWAP;
    if (name == "h") return GateKind::H;
    if (name == "t") return GateKind::T;
    if (name == "tdg") return GateKind::TDG;
    return std::nullopt;
}

}  // namespace detail

/// Reads the subset written by to_qasm: one qreg and the gates x, cx, ccx, swap, h, t, tdg.
inline Circuit from_qasm(std::string_view text, std::string name = "qasm") {
    using detail::trim;
    std::optional<Circuit> circuit;
    std::string reg_name;
    bool seen_header = false;

    for (const auto &stmt : detail::split_statements(text)) {
        std::string_view s = trim(stmt.text);
        if (s.empty()) continue;
        const std::size_t line = stmt.line;
        auto space = s.find_first_of(" \t");
        std::string_view head = s.substr(0, space);
        std::string_view rest = space == std::string_view::npos ? std::string_view{} : trim(s.substr(space));

        if (head == "OPENQASM") {
            if (seen_header || circuit) throw ParseError(line, "unexpected OPENQASM header");
            if (rest != "2.0") throw ParseError(line, "only OpenQASM 2.0 is supported");
            seen_header = true;
            continue;
        }
        if (!seen_header) throw ParseError(line, "document must start with 'OPENQASM 2.0;'");
        if (head == "include") {
            if (rest != "\"qelib1.inc\"") throw ParseError(line, "only qelib1.inc may be included");
            continue;
        }
        if (head == "qreg") {
            if (circuit) throw ParseError(line, "only one quantum register is supported");
            auto [reg, size] = detail::parse_indexed(rest, line);
            if (size == 0) throw ParseError(line, "register must have at least one qubit");
            reg_name = std::string(reg);
            circuit.emplace(size, name);
            continue;
        }

        auto paren = head.find('(');
        std::string_view gate = head.substr(0, paren);
        auto kind = detail::qasm_gate_kind(gate);
        if (!kind || paren != std::string_view::npos) {
            throw ParseError(line, "unsupported gate '" + std::string(gate) + "'");
        }
        if (!circuit) throw ParseError(line, "gate before qreg declaration");

        std::vector<QubitId> ops;
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            auto comma = rest.find(',', pos);
            auto token = rest.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
            auto [reg, index] = detail::parse_indexed(token, line);
            if (reg != reg_name) throw ParseError(line, "unknown register '" + std::string(reg) + "'");
            ops.emplace_back(index);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        try {
            circuit->append(Gate{*kind, std::move(ops), {}, nullptr});
        } catch (const Error &e) {
            throw ParseError(line, e.what());
        }
    }
    if (!circuit) throw ParseError(1, "document declares no qreg");
    return std::move(*circuit);
}

inline nlohmann::ordered_json histogram_json(const Histogram &h) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto &[kind, count] : h) j[std::string(gate_name(kind))] = count;
    return j;
}

/// {n, width, t_count, t_count_expected, t_depth, total_depth, histogram}.
inline nlohmann::ordered_json to_json(const ResourceRow &row) {
    nlohmann::ordered_json j;
    j["n"] = row.n;
    j["width"] = row.report.width;
    j["t_count"] = row.report.t_count;
    j["t_count_expected"] = row.t_count_expected;
    j["t_depth"] = row.report.t_depth;
    j["total_depth"] = row.report.total_depth;
    j["histogram"] = histogram_json(row.report.histogram);
    return j;
}

inline nlohmann::ordered_json to_json(std::span<const ResourceRow> rows) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto &row : rows) j.push_back(to_json(row));
    return j;
}

inline constexpr std::string_view kCsvHeader = "n,width,t_count,t_count_expected,t_depth,total_depth";

inline std::string to_csv(std::span<const ResourceRow> rows) {
    std::ostringstream os;
    os << kCsvHeader << '\n';
    for (const auto &r : rows) {
        os << r.n << ',' << r.report.width << ',' << r.report.t_count << ',' << r.t_count_expected << ','
           << r.report.t_depth << ',' << r.report.total_depth << '\n';
    }
    return os.str();
}

}  // namespace qsqrt
