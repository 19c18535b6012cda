#pragma once

#include <iosfwd>
#include <string>

namespace lef::cli {

struct RunConfig {
    enum class Command { Newton, Region, Euler, Lefschetz, Hecke };
    enum class Format { Json, Csv, Text };

    Command command = Command::Lefschetz;
    std::string input_path;
    int m_max = 12;           // guardrail: must stay <= 32
    std::string twist_path;   // lefschetz only
    Format format = Format::Json;
    long seed = 0;
    long random_count = 0;    // > 0 switches newton/region/euler to suite mode
    std::string out_path;     // empty: stdout
};

// Dispatches to the named module, writes the report in the requested format,
// and returns the exit status: 0 all-pass, 1 identity failure, 2 input error
// (parse errors, invariant violations, guardrail breaches).
int run(const RunConfig& cfg, std::ostream& out, std::ostream& diag);

}  // namespace lef::cli
