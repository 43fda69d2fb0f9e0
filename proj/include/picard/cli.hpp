#ifndef PICARD_CLI_HPP
#define PICARD_CLI_HPP

#include <picard/serialize.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace picard::cli {

enum class Command { mirror, yukawa, instantons, prepotential, verify, wronskian, search_relation, eval_f0, golden };
enum class Emit { z_of_q, q_of_z, f0_tilde };
enum class Format { json, text };

struct RunConfig {
    Command command = Command::mirror;
    int s = 5;
    int order = 64;
    std::uint64_t seed = 1;
    Emit emit = Emit::z_of_q;
    std::optional<std::string> output_path;
    Format format = Format::json;

    std::string verify_target = "all"; // eq2 eq5 eq9 eq16 eq19 eq25 pandharipande integrality all
    int count = 10;                    // instantons
    double t = -6.283185307179586;     // eval-f0
    std::string input_path;            // wronskian
    std::string mode = "p2";           // search-relation
    int weight_bound = 12;
    int trials = 40;
};

enum ExitCode { exit_ok = 0, exit_verification_failed = 1, exit_usage = 2 };

struct RunResult {
    int exit_code = exit_ok;
    Json report;
};

/// Executes one command. Usage problems (bad s, order too small, unreadable
/// input) give exit_usage with an "error" entry in the report.
RunResult run(const RunConfig& config);

/// Text rendering: one "path = value" line per scalar.
std::string render(const Json& report, Format format);

/// Parses argv, runs, writes the report to stdout or --out, diagnostics to err.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace picard::cli

#endif // PICARD_CLI_HPP
