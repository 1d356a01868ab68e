#include "ringcav/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "ringcav/errors.hpp"
#include "ringcav/grid_io.hpp"

namespace ringcav::cli {

namespace {

namespace pt = boost::property_tree;

const std::map<std::string, std::set<std::string>>& known_keys() {
    static const std::map<std::string, std::set<std::string>> keys{
        {"meta", {"command", "description"}},
        {"field", {"kind", "alpha", "n0", "tail_tol", "max_terms"}},
        {"spatial", {"a", "d", "lambda", "recoil_sigma"}},
        {"entanglement", {"case", "gamma", "a", "d", "recoil_sigma", "omega", "lambda"}},
        {"grid",
         {"x_min", "x_max", "x_points", "p_max", "p_points", "t_min", "t_max", "t_points", "snapshots"}},
        {"output", {"formats"}},
    };
    return keys;
}

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

double to_double(const std::string& path, const std::string& raw) {
    const std::string text = trim(raw);
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || !std::isfinite(v))
        throw ConfigError(path, "expected a finite number, got '" + raw + "'");
    return v;
}

long long to_integer(const std::string& path, const std::string& raw) {
    const std::string text = trim(raw);
    long long v = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw ConfigError(path, "expected an integer, got '" + raw + "'");
    return v;
}

class Reader {
public:
    explicit Reader(const pt::ptree& tree) : tree_(tree) {}

    std::optional<std::string> raw(const std::string& path) const {
        if (auto v = tree_.get_optional<std::string>(pt::ptree::path_type(path, '.'))) return trim(*v);
        return std::nullopt;
    }

    double number(const std::string& path, double fallback) const {
        const auto v = raw(path);
        return v ? to_double(path, *v) : fallback;
    }

    long long integer(const std::string& path, long long fallback) const {
        const auto v = raw(path);
        return v ? to_integer(path, *v) : fallback;
    }

    std::size_t count(const std::string& path, std::size_t fallback) const {
        const long long v = integer(path, static_cast<long long>(fallback));
        if (v < 0) throw ConfigError(path, "must be non-negative");
        return static_cast<std::size_t>(v);
    }

    std::string text(const std::string& path, const std::string& fallback) const {
        return raw(path).value_or(fallback);
    }

private:
    const pt::ptree& tree_;
};

void check_known(const pt::ptree& tree) {
    const auto& keys = known_keys();
    for (const auto& [section, body] : tree) {
        const auto it = keys.find(section);
        if (it == keys.end()) {
            if (body.empty()) throw ConfigError(section, "keys must live inside a [section]");
            throw ConfigError(section, "unknown section");
        }
        for (const auto& [key, value] : body) {
            if (!it->second.count(key)) throw ConfigError(section + "." + key, "unknown key");
        }
    }
}

void require(bool ok, const std::string& path, const std::string& message) {
    if (!ok) throw ConfigError(path, message);
}

ScenarioConfig resolve(const pt::ptree& tree) {
    check_known(tree);
    const Reader in(tree);
    ScenarioConfig cfg;

    cfg.command = in.text("meta.command", "");
    cfg.description = in.text("meta.description", "");

    const std::string kind = in.text("field.kind", "coherent");
    require(kind == "coherent" || kind == "fock", "field.kind", "must be 'coherent' or 'fock'");
    cfg.field.kind = kind == "fock" ? FieldKind::Fock : FieldKind::Coherent;
    cfg.field.alpha = in.number("field.alpha", cfg.field.alpha);
    require(cfg.field.alpha >= 0.0, "field.alpha", "must be non-negative");
    const long long n0 = in.integer("field.n0", 0);
    require(n0 >= 0 && n0 <= 1000000, "field.n0", "must lie in [0, 1000000]");
    cfg.field.n0 = static_cast<int>(n0);
    cfg.field.tail_tol = in.number("field.tail_tol", cfg.field.tail_tol);
    require(cfg.field.tail_tol > 0.0 && cfg.field.tail_tol < 1.0, "field.tail_tol", "must lie in (0, 1)");
    cfg.field.max_terms = in.count("field.max_terms", cfg.field.max_terms);
    require(cfg.field.max_terms >= 1, "field.max_terms", "must be at least 1");

    auto& sp = cfg.spatial;
    sp.a = in.number("spatial.a", 0.25);
    sp.d = in.number("spatial.d", sp.a / 10.0);
    sp.lambda = in.number("spatial.lambda", 1.0);
    sp.recoil_sigma = in.number("spatial.recoil_sigma", 0.0);
    require(sp.d > 0.0, "spatial.d", "must be strictly positive");
    require(sp.d <= sp.a, "spatial.d", "must not exceed spatial.a");
    require(sp.lambda > 0.0, "spatial.lambda", "must be positive");
    require(sp.recoil_sigma >= 0.0, "spatial.recoil_sigma", "must be non-negative");

    const long long which = in.integer("entanglement.case", 1);
    require(which == 1 || which == 2, "entanglement.case", "must be 1 or 2");
    cfg.entanglement_case = static_cast<int>(which);
    auto& en = cfg.entanglement;
    en.gamma = in.number("entanglement.gamma", std::numbers::pi / 4.0);
    en.a = in.number("entanglement.a", 0.25);
    en.d = in.number("entanglement.d", en.a / 100.0);
    en.recoil_sigma = in.number("entanglement.recoil_sigma", 0.5);
    en.omega = in.number("entanglement.omega", 0.0);
    en.lambda = in.number("entanglement.lambda", 1.0);
    require(en.gamma >= 0.0 && en.gamma <= std::numbers::pi / 2.0, "entanglement.gamma",
            "must lie in [0, pi/2]");
    require(en.d > 0.0, "entanglement.d", "must be strictly positive");
    require(en.recoil_sigma >= 0.0, "entanglement.recoil_sigma", "must be non-negative");
    require(en.lambda > 0.0, "entanglement.lambda", "must be positive");

    auto& g = cfg.grids;
    g.x_min = in.number("grid.x_min", -2.0 * sp.a);
    g.x_max = in.number("grid.x_max", 2.0 * sp.a);
    g.x_points = in.count("grid.x_points", g.x_points);
    require(g.x_max > g.x_min, "grid.x_max", "must exceed grid.x_min");
    require(g.x_points >= 2, "grid.x_points", "needs at least 2 points");
    g.p_max = in.number("grid.p_max", 4.0 / sp.d);
    g.p_points = in.count("grid.p_points", g.p_points);
    require(g.p_max > 0.0, "grid.p_max", "must be positive");
    require(g.p_points >= 2, "grid.p_points", "needs at least 2 points");
    g.t_min = in.number("grid.t_min", 0.0);
    g.t_max = in.number("grid.t_max", g.t_max);
    g.t_points = in.count("grid.t_points", g.t_points);
    require(g.t_points >= 1, "grid.t_points", "time grid is empty");
    require(g.t_min >= 0.0, "grid.t_min", "must be non-negative");
    require(g.t_max >= g.t_min, "grid.t_max", "must not precede grid.t_min");
    if (const auto snaps = in.raw("grid.snapshots")) {
        g.snapshots.clear();
        for (const auto& item : split_list(*snaps)) g.snapshots.push_back(to_double("grid.snapshots", item));
    }
    for (double t : g.snapshots) require(t >= 0.0, "grid.snapshots", "times must be non-negative");

    if (const auto formats = in.raw("output.formats")) cfg.outputs = split_list(*formats);
    for (const auto& f : cfg.outputs)
        require(f == "csv" || f == "binary", "output.formats", "unknown format '" + f + "'");

    try {
        cfg.field.build();
    } catch (const std::exception& e) {
        throw ConfigError("field", e.what());
    }
    return cfg;
}

}  // namespace

FieldDistribution FieldSpec::build() const {
    return kind == FieldKind::Fock ? fock_distribution(n0) : coherent_distribution(alpha, tail_tol, max_terms);
}

std::vector<double> GridSpec::positions() const { return uniform_grid(x_min, x_max, x_points); }

std::vector<double> GridSpec::momenta() const { return uniform_grid(-p_max, p_max, p_points); }

std::vector<double> GridSpec::times() const { return uniform_grid(t_min, t_max, t_points); }

bool ScenarioConfig::wants(std::string_view format) const {
    return std::find(outputs.begin(), outputs.end(), format) != outputs.end();
}

InitialState ScenarioConfig::initial_state() const {
    return entanglement_case == 1 ? InitialState::GroundExcited : InitialState::SingleExcitation;
}

std::vector<std::pair<std::string, std::string>> ScenarioConfig::resolved_entries() const {
    using io::format_double;
    const auto join = [](const auto& items, auto fmt) {
        std::string s;
        for (const auto& item : items) {
            if (!s.empty()) s += ',';
            s += fmt(item);
        }
        return s;
    };
    return {
        {"meta.command", command},
        {"meta.description", description},
        {"field.kind", field.kind == FieldKind::Fock ? "fock" : "coherent"},
        {"field.alpha", format_double(field.alpha)},
        {"field.n0", std::to_string(field.n0)},
        {"field.tail_tol", format_double(field.tail_tol)},
        {"field.max_terms", std::to_string(field.max_terms)},
        {"spatial.a", format_double(spatial.a)},
        {"spatial.d", format_double(spatial.d)},
        {"spatial.lambda", format_double(spatial.lambda)},
        {"spatial.recoil_sigma", format_double(spatial.recoil_sigma)},
        {"entanglement.case", std::to_string(entanglement_case)},
        {"entanglement.gamma", format_double(entanglement.gamma)},
        {"entanglement.a", format_double(entanglement.a)},
        {"entanglement.d", format_double(entanglement.d)},
        {"entanglement.recoil_sigma", format_double(entanglement.recoil_sigma)},
        {"entanglement.omega", format_double(entanglement.omega)},
        {"entanglement.lambda", format_double(entanglement.lambda)},
        {"grid.x_min", format_double(grids.x_min)},
        {"grid.x_max", format_double(grids.x_max)},
        {"grid.x_points", std::to_string(grids.x_points)},
        {"grid.p_max", format_double(grids.p_max)},
        {"grid.p_points", std::to_string(grids.p_points)},
        {"grid.t_min", format_double(grids.t_min)},
        {"grid.t_max", format_double(grids.t_max)},
        {"grid.t_points", std::to_string(grids.t_points)},
        {"grid.snapshots", join(grids.snapshots, [](double t) { return format_double(t); })},
        {"output.formats", join(outputs, [](const std::string& s) { return s; })},
    };
}

std::uint64_t ScenarioConfig::hash() const {
    std::string text;
    for (const auto& [k, v] : resolved_entries()) text += k + "=" + v + "\n";
    return io::fnv1a(text);
}

ScenarioConfig parse_config(std::istream& text, const std::vector<std::string>& overrides) {
    pt::ptree tree;
    try {
        pt::ini_parser::read_ini(text, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError("line " + std::to_string(e.line()), e.message());
    }
    for (const auto& item : overrides) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ConfigError(item, "override must look like section.key=value");
        const std::string key = trim(std::string_view(item).substr(0, eq));
        if (key.find('.') == std::string::npos) throw ConfigError(key, "override key must be section.key");
        tree.put(pt::ptree::path_type(key, '.'), trim(std::string_view(item).substr(eq + 1)));
    }
    return resolve(tree);
}

ScenarioConfig parse_config_string(const std::string& text, const std::vector<std::string>& overrides) {
    std::istringstream in(text);
    return parse_config(in, overrides);
}

}  // namespace ringcav::cli
