#include "ringcav/cli/app.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ringcav/errors.hpp"

namespace ringcav::cli {

namespace {

struct SourceOptions {
    std::string config_path;
    std::string preset;
    std::string out_path;
    std::vector<std::string> overrides;
};

void add_source_options(CLI::App* cmd, SourceOptions& opts) {
    auto* config = cmd->add_option("--config", opts.config_path, "Scenario file (INI)");
    auto* preset = cmd->add_option("--preset", opts.preset, "Built-in scenario: fig2 ... fig6, nodes");
    config->excludes(preset);
    cmd->add_option("--out", opts.out_path, "Output CSV path (default: standard output)");
    cmd->add_option("--set", opts.overrides, "Override one key, e.g. --set field.alpha=5")
        ->allow_extra_args(false);
}

ScenarioConfig load(const SourceOptions& opts) {
    if (!opts.preset.empty()) {
        const char* text = find_preset(opts.preset);
        if (!text) throw ConfigError("--preset", "unknown preset '" + opts.preset + "'");
        return parse_config_string(text, opts.overrides);
    }
    if (!opts.config_path.empty()) {
        std::ifstream in(opts.config_path);
        if (!in) throw IoError("cannot read config '" + opts.config_path + "'");
        return parse_config(in, opts.overrides);
    }
    return parse_config_string("", opts.overrides);
}

// Render the whole export first so a failed run never leaves a partial file.
template <class Fn>
void emit(const SourceOptions& opts, std::ostream& out, Fn&& render) {
    std::ostringstream buf;
    render(buf, opts.out_path);
    if (opts.out_path.empty()) {
        out << buf.view();
        return;
    }
    std::ofstream f(opts.out_path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open '" + opts.out_path + "' for writing");
    f << buf.view();
    if (!f.flush()) throw IoError("write to '" + opts.out_path + "' failed");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Two atoms in a ring cavity: decoherence, Wigner function and concurrence datasets"};
    app.name("ringcav");
    app.require_subcommand(1);

    SourceOptions src;
    ConcurrenceModes modes;
    std::string fault;

    auto* factor = app.add_subcommand("factor", "Decoherence factor F(x, -x, t) over the time x position grid");
    auto* density = app.add_subcommand("density", "Relative-position density matrix at t = 0 and snapshots");
    auto* wigner = app.add_subcommand("wigner", "Wigner function at t = 0 and snapshots");
    auto* concurrence = app.add_subcommand("concurrence", "Concurrence time series");
    auto* validate = app.add_subcommand("validate", "Run the invariant suite and print a pass/fail table");
    for (auto* cmd : {factor, density, wigner, concurrence}) add_source_options(cmd, src);
    concurrence->add_flag("--literal-d00", modes.literal_d00, "Case 1: also emit D(0,0) taken at t = 0");
    concurrence->add_flag("--printed-w", modes.printed_w, "Case 2: also emit w as printed (trace != 1)");
    concurrence->add_flag("--printed-z", modes.printed_z, "Case 2: also emit z with e^-beta as printed");
    validate->add_option("--inject-fault", fault)->check(CLI::IsMember({"flip-f2"}))->group("");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (validate->parsed()) {
            const auto checks = run_validation({.flip_f2 = fault == "flip-f2"});
            print_validation(out, checks);
            const bool ok = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed(); });
            return ok ? kExitOk : kExitValidation;
        }

        const ScenarioConfig cfg = load(src);
        if (cfg.wants("binary") && src.out_path.empty())
            throw ConfigError("output.formats", "binary output needs --out");

        if (factor->parsed()) {
            emit(src, out, [&](std::ostream& os, const std::string&) { write_factor(cfg, os); });
        } else if (density->parsed()) {
            emit(src, out, [&](std::ostream& os, const std::string& base) { write_density(cfg, os, base); });
        } else if (wigner->parsed()) {
            emit(src, out, [&](std::ostream& os, const std::string& base) { write_wigner(cfg, os, base); });
        } else {
            emit(src, out, [&](std::ostream& os, const std::string&) { write_concurrence(cfg, modes, os); });
        }
        return kExitOk;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << '\n';
        return kExitIo;
    } catch (const InvalidArgument& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const ResolutionError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const ResourceLimitError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    }
}

}  // namespace ringcav::cli
