#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace griesskit::cli {

enum class Format { json, csv, text };

struct RunConfig {
    std::string subcommand;
    std::optional<int> n;
    std::optional<int> m;
    std::optional<int> m_max;
    Format format = Format::text;
    int weight_cap = 4;
    std::optional<std::string> out_path;
};

/** Executes one subcommand. Returns 0 on success, 1 when a verification
 *  subcommand finds a failing identity, 2 on parameter errors. */
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Argument-vector front end over run(); same exit-code contract.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Rank ceiling: 8, or GRIESSKIT_MAX_N when that raises it.
int max_rank_bound();

}  // namespace griesskit::cli
