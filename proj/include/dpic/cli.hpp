#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dpic::cli {

enum class Command { run, trace, verify, sweep, predict };
enum class Format { table, csv, json };

/// How a sweep derives (K, P) from C when they are not given explicitly.
///   min:  P = max(1, r_max(C) - 2), K = 2P
///   wide: P = r_max(C),             K = 2P + 3
enum class SweepRule { min, wide, both };

struct RunConfig {
    Command command = Command::run;
    std::uint32_t c_low = 0;
    std::uint32_t c_high = 0;
    std::optional<std::uint32_t> k;
    std::optional<std::uint32_t> p;
    SweepRule rule = SweepRule::min;
    bool force = false;
    bool mutation = false;
    Format format = Format::table;
    std::uint64_t seed = 1;
    unsigned payload_bits = 0;
    std::string output;  // empty: standard output
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_invalid = 2;

struct SweepRow {
    std::uint32_t c = 0;
    std::uint32_t k = 0;
    std::uint32_t p = 0;
    std::uint32_t r_max = 0;
    std::uint64_t n = 0;
    std::uint64_t s_opt = 0;
    std::uint64_t gap = 0;
    /// "true", "false" or "skip:<reason>".
    std::string ok;
};

std::vector<SweepRow> sweep_rows(const RunConfig& cfg);

int cmd_run(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_trace(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_predict(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Dispatches on cfg.command, honouring cfg.output.
int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and dispatches.
int run_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dpic::cli
