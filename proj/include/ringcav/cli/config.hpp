#pragma once

// Scenario configuration shared by all subcommands.
//
// The file format is INI-style:
//
//   [field]
//   kind = coherent
//   alpha = 10
//
// and every key is addressed as "section.key" in diagnostics and overrides.
// Every key has a default, so an empty file is a valid configuration.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ringcav/entanglement.hpp"
#include "ringcav/field.hpp"
#include "ringcav/spatial.hpp"

namespace ringcav::cli {

struct FieldSpec {
    FieldKind kind = FieldKind::Coherent;
    int n0 = 0;
    double alpha = 10.0;
    double tail_tol = kDefaultTailTolerance;
    std::size_t max_terms = kDefaultMaxPhotonTerms;

    FieldDistribution build() const;
};

struct GridSpec {
    double x_min = -0.5;
    double x_max = 0.5;
    std::size_t x_points = 512;
    double p_max = 160.0;
    std::size_t p_points = 256;
    double t_min = 0.0;
    double t_max = 10.0;
    std::size_t t_points = 201;
    std::vector<double> snapshots{2.0};  ///< evolved times for density / wigner

    std::vector<double> positions() const;
    std::vector<double> momenta() const;
    std::vector<double> times() const;
};

struct ScenarioConfig {
    std::string command;      ///< informational, from [meta]
    std::string description;  ///< informational, from [meta]
    FieldSpec field;
    SpatialScenario spatial;
    int entanglement_case = 1;
    EntanglementScenario entanglement;
    GridSpec grids;
    std::vector<std::string> outputs{"csv"};

    bool wants(std::string_view format) const;
    InitialState initial_state() const;

    /// Every key with its resolved value, in a fixed order.
    std::vector<std::pair<std::string, std::string>> resolved_entries() const;
    /// FNV-1a of the resolved entries.
    std::uint64_t hash() const;
};

/// Parse and validate. `overrides` are "section.key=value" strings applied on
/// top of the text. Throws ConfigError with the offending key path.
ScenarioConfig parse_config(std::istream& text, const std::vector<std::string>& overrides = {});
ScenarioConfig parse_config_string(const std::string& text, const std::vector<std::string>& overrides = {});

/// Built-in preset text, or nullptr for an unknown name.
const char* find_preset(std::string_view name);
std::vector<std::string> preset_names();

}  // namespace ringcav::cli
