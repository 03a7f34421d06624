#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ecmf::cli {

// Runtime configuration shared by the subcommands; flags win over the
// optional key=value config file.
struct CliConfig {
    long prec = 64;        // q-series truncation
    long pmax = 1000;      // prime scan bound
    int radius = 40;       // lattice truncation
    double tol = 1e-6;     // lattice comparison tolerance
    std::string format;    // json, csv or text; empty means per-command default
    std::string method = "rows"; // lattice summation: rows or shells
};

// Dispatch the argument vector (without the program name). Returns 0 on
// success, 1 on usage errors, 2 on domain errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ecmf::cli
