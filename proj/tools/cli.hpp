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

// Command-line front end: isqrt, resources, verify and export subcommands.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#pragma once

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qsqrt/qsqrt.hpp"

namespace qsqrt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Statevector qubit cap, overridable through QSQRT_SV_CAP.
inline std::size_t statevector_cap() {
    if (const char *env = std::getenv("QSQRT_SV_CAP")) {
        try {
            std::size_t pos = 0;
            const unsigned long v = std::stoul(env, &pos);
            if (pos == std::string(env).size() && v > 0 && v < 63) return v;
        } catch (const std::exception &) {
        }
        throw UsageError(std::string("QSQRT_SV_CAP must be an integer in 1..62, got '") + env + "'");
    }
    return kDefaultStatevectorCap;
}

/// Accepts "6", "6,8,10", "6..16" and "6..16:2". A bare range steps by 2 for
/// isqrt (even widths only) and by 1 otherwise.
inline std::vector<std::size_t> parse_n_range(const std::string &text, Block block) {
    auto number = [&](const std::string &s) -> std::size_t {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(s, &pos);
        } catch (const std::exception &) {
            pos = 0;
        }
        if (pos == 0 || pos != s.size()) throw UsageError("bad width '" + s + "' in --n " + text);
        return v;
    };
    std::vector<std::size_t> out;
    if (auto dots = text.find(".."); dots != std::string::npos) {
        std::string tail = text.substr(dots + 2);
        std::size_t step = block == Block::isqrt ? 2 : 1;
        if (auto colon = tail.find(':'); colon != std::string::npos) {
            step = number(tail.substr(colon + 1));
            tail = tail.substr(0, colon);
        }
        const std::size_t lo = number(text.substr(0, dots)), hi = number(tail);
        if (step == 0 || lo > hi) throw UsageError("empty range --n " + text);
        for (std::size_t n = lo; n <= hi; n += step) out.push_back(n);
    } else {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(number(item));
    }
    if (out.empty()) throw UsageError("no widths in --n " + text);
    return out;
}

inline Block require_block(const std::string &name) {
    if (auto b = parse_block(name)) return *b;
    throw UsageError("unknown circuit '" + name + "' (expected adder, subtractor, ctrl-add-sub, ctrl-add or isqrt)");
}

/// Builds the block, turning domain errors into usage errors.
inline Circuit require_circuit(Block block, std::size_t n) {
    try {
        return build_block(block, n);
    } catch (const Error &e) {
        throw UsageError(std::string(block_name(block)) + " at n = " + std::to_string(n) + ": " + e.what());
    }
}

inline void write_output(const std::string &path, const std::string &text, std::ostream &out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text) || !f.flush()) {
        throw UsageError("cannot write '" + path + "'");
    }
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    [[nodiscard]] double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
};

inline void print_timing(std::ostream &out, bool enabled, const Timer &timer) {
    if (enabled) out << "elapsed: " << std::fixed << std::setprecision(1) << timer.ms() << " ms\n";
}

struct IsqrtArgs {
    std::uint64_t value = 0;
    std::optional<std::size_t> n;
    bool resources = false;
};

inline int cmd_isqrt(const IsqrtArgs &args, std::ostream &out) {
    std::size_t n = 0;
    if (args.n) {
        n = *args.n;
        try {
            require_sqrt_width(n);
        } catch (const Error &e) {
            throw UsageError(e.what());
        }
    } else {
        n = select_width(args.value);
        out << "n = " << n << " (smallest even n >= 4 with value <= 2^(n-1)-1)\n";
    }
    if (n > 64 || args.value > max_sqrt_input(n)) {
        throw UsageError("value " + std::to_string(args.value) + " out of range for n = " + std::to_string(n) +
                         " (supported: 0 .. 2^(n-1)-1)");
    }
    const SqrtResult r = isqrt(args.value, n);
    out << "a = " << args.value << ", root = " << r.root << ", remainder = " << r.remainder << '\n';
    if (args.resources) {
        const ResourceReport rep = analyze(build_isqrt_circuit(n));
        out << "qubits = " << rep.width << ", t_count = " << rep.t_count
            << ", scheduled t_depth (upper bound) = " << rep.t_depth << ", total_depth = " << rep.total_depth << '\n';
    }
    return kExitOk;
}

struct ResourcesArgs {
    std::string circuit = "isqrt";
    std::string n;
    std::string format = "table";
    std::string output;
};

inline std::string resources_table(Block block, std::span<const ResourceRow> rows) {
    std::ostringstream os;
    os << "circuit: " << block_name(block) << '\n';
    os << std::setw(4) << "n" << std::setw(12) << "qubits(C)" << std::setw(12) << "qubits(E)" << std::setw(12)
       << "t_count(C)" << std::setw(12) << "t_count(E)" << std::setw(10) << "t_depth" << std::setw(13)
       << "total_depth" << std::setw(7) << "match" << '\n';
    for (const auto &r : rows) {
        os << std::setw(4) << r.n << std::setw(12) << r.report.width << std::setw(12) << r.width_expected
           << std::setw(12) << r.report.t_count << std::setw(12) << r.t_count_expected << std::setw(10)
           << r.report.t_depth << std::setw(13) << r.report.total_depth << std::setw(7)
           << (r.matches() ? "yes" : "NO") << '\n';
    }
    os << "t_depth is the scheduled T-depth (ASAP layering; upper bound)\n";
    return os.str();
}

inline int cmd_resources(const ResourcesArgs &args, bool timing, std::ostream &out) {
    Timer timer;
    const Block block = require_block(args.circuit);
    std::vector<ResourceRow> rows;
    for (std::size_t n : parse_n_range(args.n, block)) {
        require_circuit(block, n);
        rows.push_back(resource_row(block, n));
    }
    std::string text;
    if (args.format == "table") {
        text = resources_table(block, rows);
    } else if (args.format == "json") {
        text = to_json(std::span<const ResourceRow>(rows)).dump(2) + "\n";
    } else if (args.format == "csv") {
        text = to_csv(rows);
    } else {
        throw UsageError("unknown format '" + args.format + "' (expected table, json or csv)");
    }
    write_output(args.output, text, out);
    if (!args.output.empty()) out << "wrote " << args.output << '\n';
    print_timing(out, timing, timer);
    const bool all_match = std::all_of(rows.begin(), rows.end(), [](const auto &r) { return r.matches(); });
    return all_match ? kExitOk : kExitFailure;
}

struct VerifyArgs {
    std::string circuit;
    std::size_t n = 0;
    bool exhaustive = false;
    bool sampled = false;
    std::size_t samples = 1000;
    std::uint64_t seed = 2024;
    std::string backend = "perm";
};

inline int cmd_verify(const VerifyArgs &args, bool timing, std::ostream &out) {
    Timer timer;
    const Block block = require_block(args.circuit);
    require_circuit(block, args.n);
    VerifyOptions opts;
    opts.mode = args.sampled ? EquivMode::sampled : EquivMode::exhaustive;
    opts.samples = args.samples;
    opts.seed = args.seed;
    if (args.backend == "sv") {
        opts.backend = Backend::statevector;
        opts.sv_cap = statevector_cap();
    } else if (args.backend != "perm") {
        throw UsageError("unknown backend '" + args.backend + "' (expected perm or sv)");
    }
    VerifyOutcome outcome;
    try {
        outcome = verify_block(block, args.n, opts);
    } catch (const Error &e) {
        if (e.code() == Errc::capacity_exceeded) {
            throw UsageError(std::string(e.what()) + (args.sampled ? "" : " (try --sampled)"));
        }
        throw;
    }
    out << block_name(block) << " n=" << args.n << ' ' << (args.sampled ? "sampled" : "exhaustive") << ": "
        << outcome.checked << " cases checked, " << outcome.passed << " passed\n";
    if (const auto &f = outcome.first_failure) {
        out << "first counterexample: input " << f->input.to_string() << ", expected " << f->expected.to_string()
            << ", got " << (f->actual ? f->actual->to_string() : std::string("(not a basis state)")) << '\n';
    }
    print_timing(out, timing, timer);
    return outcome.ok() ? kExitOk : kExitFailure;
}

struct ExportArgs {
    std::string circuit;
    std::size_t n = 0;
    std::string output;
    bool lowered = false;
};

inline int cmd_export(const ExportArgs &args, std::ostream &out) {
    const Block block = require_block(args.circuit);
    Circuit c = require_circuit(block, args.n);
    if (args.lowered) c = lower_to_clifford_t(c);
    const std::string text = to_qasm(c);
    std::size_t gates = 0;
    for (const auto &[kind, count] : exported_counts(c)) gates += count;
    write_output(args.output, text, out);
    if (!args.output.empty()) {
        out << "wrote " << args.output << " (" << gates << " gates, " << c.width() << " qubits)\n";
    }
    return kExitOk;
}

/// Parses and dispatches one invocation. Output goes to `out`, diagnostics to `err`.
inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Reversible integer square root: circuit generation, simulation and resource analysis", "qsqrt"};
    app.require_subcommand(1);
    bool no_timing = false;
    app.add_flag("--no-timing", no_timing, "Suppress elapsed-time lines");

    IsqrtArgs isqrt_args;
    auto *isqrt_cmd = app.add_subcommand("isqrt", "Compute a root and remainder by simulating the circuit");
    isqrt_cmd->add_option("--value,-a", isqrt_args.value, "Input value")->required();
    isqrt_cmd->add_option("--n", isqrt_args.n, "Register width (even, >= 4); auto-selected if absent");
    isqrt_cmd->add_flag("--resources", isqrt_args.resources, "Also print the resource report");
    isqrt_cmd->add_flag("--no-timing", no_timing, "Suppress elapsed-time lines");

    ResourcesArgs res_args;
    auto *res_cmd = app.add_subcommand("resources", "Qubit and T-count table versus closed forms");
    res_cmd->add_option("--circuit,-c", res_args.circuit, "adder|subtractor|ctrl-add-sub|ctrl-add|isqrt");
    res_cmd->add_option("--n", res_args.n, "Width, list (6,8) or range (6..16[:step])")->required();
    res_cmd->add_option("--format,-f", res_args.format, "table|json|csv");
    res_cmd->add_option("--output,-o", res_args.output, "Write to file instead of stdout");
    res_cmd->add_flag("--no-timing", no_timing, "Suppress elapsed-time lines");

    VerifyArgs ver_args;
    auto *ver_cmd = app.add_subcommand("verify", "Compare a block against its integer oracle");
    ver_cmd->add_option("--circuit,-c", ver_args.circuit, "adder|subtractor|ctrl-add-sub|ctrl-add|isqrt")
        ->required();
    ver_cmd->add_option("--n", ver_args.n, "Register width")->required();
    auto *exh = ver_cmd->add_flag("--exhaustive", ver_args.exhaustive, "Enumerate every input (default)");
    auto *smp = ver_cmd->add_flag("--sampled", ver_args.sampled, "Check random inputs");
    exh->excludes(smp);
    ver_cmd->add_option("--samples", ver_args.samples, "Inputs checked in sampled mode");
    ver_cmd->add_option("--seed", ver_args.seed, "Sampling seed");
    ver_cmd->add_option("--backend", ver_args.backend, "perm (logical circuit) or sv (lowered, statevector)");
    ver_cmd->add_flag("--no-timing", no_timing, "Suppress elapsed-time lines");

    ExportArgs exp_args;
    auto *exp_cmd = app.add_subcommand("export", "Write a block as OpenQASM 2.0");
    exp_cmd->add_option("--circuit,-c", exp_args.circuit, "adder|subtractor|ctrl-add-sub|ctrl-add|isqrt")
        ->required();
    exp_cmd->add_option("--n", exp_args.n, "Register width")->required();
    exp_cmd->add_option("--output,-o", exp_args.output, "Output file (stdout if absent)");
    exp_cmd->add_flag("--lowered", exp_args.lowered, "Export the Clifford+T lowering");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*isqrt_cmd) return cmd_isqrt(isqrt_args, out);
        if (*res_cmd) return cmd_resources(res_args, !no_timing, out);
        if (*ver_cmd) return cmd_verify(ver_args, !no_timing, out);
        if (*exp_cmd) return cmd_export(exp_args, out);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace qsqrt::cli
