#pragma once

// Subcommands behind the `ringcav` executable.
//
// Exit codes: 0 success, 1 validation failure, 2 configuration error,
// 3 I/O error.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "ringcav/cli/config.hpp"
#include "ringcav/entanglement.hpp"

namespace ringcav::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitValidation = 1,
    kExitConfig = 2,
    kExitIo = 3,
};

/// CSV export of each command. `binary_base` is the --out path used to name
/// binary side files; empty disables them.
void write_factor(const ScenarioConfig& cfg, std::ostream& os);
void write_density(const ScenarioConfig& cfg, std::ostream& os, const std::string& binary_base = {});
void write_wigner(const ScenarioConfig& cfg, std::ostream& os, const std::string& binary_base = {});

struct ConcurrenceModes {
    bool literal_d00 = false;
    bool printed_w = false;
    bool printed_z = false;
};

void write_concurrence(const ScenarioConfig& cfg, const ConcurrenceModes& modes, std::ostream& os);

struct ValidationCheck {
    std::string name;
    double defect = 0.0;
    double tolerance = 0.0;
    std::size_t samples = 0;

    bool passed() const noexcept { return defect <= tolerance; }
};

struct ValidationFaults {
    bool flip_f2 = false;  ///< negate f2 in the closed-form eigenvectors
};

std::vector<ValidationCheck> run_validation(const ValidationFaults& faults = {});
void print_validation(std::ostream& os, const std::vector<ValidationCheck>& checks);

/// Parse `args` (without the program name) and run one subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ringcav::cli
