#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ringcav/cli/app.hpp"
#include "ringcav/errors.hpp"
#include "ringcav/grid_io.hpp"
#include "ringcav/spatial.hpp"
#include "ringcav/wigner.hpp"

namespace ringcav::cli {

namespace {

using io::append_double;
using io::format_double;
using Entries = std::vector<std::pair<std::string, std::string>>;

std::string hex(std::uint64_t v) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string s = "0x";
    for (int shift = 60; shift >= 0; shift -= 4) s += digits[(v >> shift) & 0xfU];
    return s;
}

void write_metadata(std::ostream& os, std::string_view command, const ScenarioConfig& cfg,
                    const Entries& derived) {
    os << "# ringcav " << command << '\n';
    for (const auto& [k, v] : cfg.resolved_entries()) os << "# " << k << " = " << v << '\n';
    os << "# scenario_hash = " << hex(cfg.hash()) << '\n';
    for (const auto& [k, v] : derived) os << "# " << k << " = " << v << '\n';
}

Entries field_entries(const FieldDistribution& field) {
    return {
        {"derived.field_terms", std::to_string(field.size())},
        {"derived.field_tail_bound", format_double(field.tail_bound())},
    };
}

// Evaluation times of density and wigner exports: t = 0, then the snapshots.
std::vector<double> export_times(const ScenarioConfig& cfg) {
    std::vector<double> times{0.0};
    times.insert(times.end(), cfg.grids.snapshots.begin(), cfg.grids.snapshots.end());
    return times;
}

std::ofstream open_binary(const std::string& path) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    return f;
}

}  // namespace

void write_factor(const ScenarioConfig& cfg, std::ostream& os) {
    cfg.spatial.validate();
    const FieldDistribution field = cfg.field.build();
    const auto xs = cfg.grids.positions();
    const auto times = cfg.grids.times();
    const double k = cfg.spatial.wavenumber();

    write_metadata(os, "factor", cfg, field_entries(field));
    os << "gt,x,F\n";
    std::string line;
    for (double t : times) {
        const FactorTerms terms = factor_terms(field, t);
        for (double x : xs) {
            // x' = -x, so k (x - x') / 2 = k x.
            line.clear();
            append_double(line, t);
            line += ',';
            append_double(line, x);
            line += ',';
            append_double(line, terms.constant + terms.modulated * std::cos(k * x));
            line += '\n';
            os << line;
        }
    }
}

void write_density(const ScenarioConfig& cfg, std::ostream& os, const std::string& binary_base) {
    const FieldDistribution field = cfg.field.build();
    const auto xs = cfg.grids.positions();
    const auto times = export_times(cfg);

    std::vector<RelativeDensityGrid> grids;
    for (double t : times) grids.push_back(frozen_density(cfg.spatial, field, t, xs));

    Entries derived = field_entries(field);
    for (std::size_t i = 0; i < grids.size(); ++i) {
        const std::string key = "snapshot." + std::to_string(i);
        derived.emplace_back(key + ".gt", format_double(grids[i].time()));
        derived.emplace_back(key + ".trace", format_double(grids[i].trace()));
    }
    write_metadata(os, "density", cfg, derived);
    os << "gt,x,xp,re,im\n";
    for (const auto& g : grids) io::write_density_rows(os, g);

    if (!binary_base.empty() && cfg.wants("binary")) {
        for (std::size_t i = 0; i < grids.size(); ++i) {
            auto f = open_binary(binary_base + "." + std::to_string(i) + ".rdg");
            io::write_density_binary(f, grids[i], cfg.hash());
        }
    }
}

void write_wigner(const ScenarioConfig& cfg, std::ostream& os, const std::string& binary_base) {
    const FieldDistribution field = cfg.field.build();
    const auto xs = cfg.grids.positions();
    const auto ps = cfg.grids.momenta();
    const auto times = export_times(cfg);

    std::vector<WignerGrid> grids;
    Entries derived = field_entries(field);
    for (std::size_t i = 0; i < times.size(); ++i) {
        const RelativeDensityGrid rho = frozen_density(cfg.spatial, field, times[i], xs);
        grids.push_back(wigner_transform(rho, ps));
        const auto& w = grids.back();
        const std::string key = "snapshot." + std::to_string(i);
        derived.emplace_back(key + ".gt", format_double(times[i]));
        derived.emplace_back(key + ".norm_defect", format_double(w.norm_defect));
        derived.emplace_back(key + ".imag_residue", format_double(w.imag_residue));
        derived.emplace_back(key + ".fringe_amplitude", format_double(fringe_amplitude(rho, ps)));
        derived.emplace_back(key + ".min", format_double(w.values.minCoeff()));
        derived.emplace_back(key + ".max", format_double(w.values.maxCoeff()));
    }
    write_metadata(os, "wigner", cfg, derived);
    os << "gt,x,p,W\n";
    for (const auto& g : grids) io::write_wigner_rows(os, g);

    if (!binary_base.empty() && cfg.wants("binary")) {
        for (std::size_t i = 0; i < grids.size(); ++i) {
            auto f = open_binary(binary_base + "." + std::to_string(i) + ".wig");
            io::write_wigner_binary(f, grids[i], cfg.hash());
        }
    }
}

void write_concurrence(const ScenarioConfig& cfg, const ConcurrenceModes& modes, std::ostream& os) {
    const InitialState initial = cfg.initial_state();
    const bool case1 = initial == InitialState::GroundExcited;
    if (modes.literal_d00 && !case1)
        throw ConfigError("entanglement.case", "--literal-d00 applies to case 1 only");
    if ((modes.printed_w || modes.printed_z) && case1)
        throw ConfigError("entanglement.case", "--printed-w and --printed-z apply to case 2 only");

    const auto& scn = cfg.entanglement;
    scn.validate();
    const auto times = cfg.grids.times();

    std::vector<std::pair<std::string, ReadingOptions>> runs{{"derived", {}}};
    if (modes.literal_d00) runs.push_back({"literal-d00", {.literal_d00 = true}});
    if (modes.printed_w) runs.push_back({"printed-w", {.printed_w = true}});
    if (modes.printed_z) runs.push_back({"printed-z", {.printed_z = true}});

    const double prefactor = envelope_prefactor(scn, initial);
    std::vector<std::vector<ConcurrenceSample>> series;
    Entries derived{{"derived.envelope_prefactor", format_double(prefactor)}};
    for (const auto& [mode, opts] : runs) {
        series.push_back(concurrence_series(scn, initial, times, opts));
        const auto crossing = first_time_at_or_below(series.back(), 0.1);
        derived.emplace_back("mode." + mode + ".first_gt_at_or_below_0.1",
                             crossing ? format_double(*crossing) : "none");
    }
    write_metadata(os, "concurrence", cfg, derived);

    os << "mode,gt,C,envelope,bound,trace\n";
    std::string line;
    for (std::size_t r = 0; r < runs.size(); ++r) {
        for (const auto& s : series[r]) {
            line = runs[r].first;
            line += ',';
            append_double(line, s.gt);
            line += ',';
            append_double(line, s.concurrence);
            line += ',';
            append_double(line, s.envelope);
            line += ',';
            append_double(line, prefactor * s.envelope);
            line += ',';
            append_double(line, s.trace);
            line += '\n';
            os << line;
        }
    }
}

}  // namespace ringcav::cli
