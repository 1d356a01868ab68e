// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ringcav/cli/app.hpp"
#include "ringcav/dressed.hpp"
#include "ringcav/entanglement.hpp"
#include "ringcav/field.hpp"
#include "ringcav/spatial.hpp"
#include "ringcav/wigner.hpp"

using namespace ringcav;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

Outcome within(double defect, double tol) { return {defect <= tol, "max defect " + sci(defect) + ", tol " + sci(tol)}; }

Outcome conservation() {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> time(0.0, 50.0);
    double worst = 0.0;
    for (int n = 0; n <= 10000; ++n) {
        for (int k = 0; k < 100; ++k) {
            const auto a = evolution_amplitudes(n, time(rng));
            worst = std::max(worst, std::abs(a.d1 * a.d1 + 2.0 * std::norm(a.d2) + a.d3 * a.d3 - 1.0));
        }
    }
    return within(worst, 1e-12);
}

Outcome eigensystem() {
    double values = 0.0, projectors = 0.0;
    for (double omega : {0.0, 1.0}) {
        for (int n = 0; n <= 100; ++n) {
            const auto closed = block_eigensystem(n, omega);
            const auto oracle = oracle_block_diagonalize(n, omega);
            Eigen::Vector4d sorted = closed.energies;
            std::sort(sorted.begin(), sorted.end());
            values = std::max(values, (sorted - oracle.energies).cwiseAbs().maxCoeff());
            for (int k = 0; k < 4; ++k) {
                const double e = closed.energies[k];
                projectors = std::max(
                    projectors, (spectral_projector(closed, e) - spectral_projector(oracle, e)).cwiseAbs().maxCoeff());
            }
        }
    }
    return {values <= 1e-10 && projectors <= 1e-10,
            "energies " + sci(values) + ", projectors " + sci(projectors) + ", tol 1.000e-10"};
}

Outcome node_lines() {
    const auto field = coherent_distribution(10.0);
    double worst = 0.0;
    for (double t : uniform_grid(0.0, 5.0, 501))
        for (double x : {0.0, 1.0, 2.0}) worst = std::max(worst, std::abs(decoherence_factor(field, x, -x, t) - 1.0));
    return within(worst, 1e-9);
}

Outcome plateau() {
    const auto field = coherent_distribution(10.0);
    double lo = 1.0, hi = 0.0;
    for (double t : uniform_grid(1.5, 10.0, 851)) {
        const double f = decoherence_factor(field, 0.5, -0.5, t);
        lo = std::min(lo, f);
        hi = std::max(hi, f);
    }
    const double worst = std::max(std::abs(lo - 0.5), std::abs(hi - 0.5));
    return {worst <= 0.05, "F in [" + sci(lo) + ", " + sci(hi) + "], max |F - 0.5| " + sci(worst) + ", tol 5e-2"};
}

Outcome cosine_law() {
    const auto field = coherent_distribution(10.0);
    const auto xs = uniform_grid(0.0, 2.0, 200);
    double worst = 0.0;
    for (double t : {1.0, 2.0, 4.0}) {
        Eigen::MatrixXd a(200, 2);
        Eigen::VectorXd f(200);
        for (int i = 0; i < 200; ++i) {
            a(i, 0) = 1.0;
            a(i, 1) = std::cos(2.0 * kPi * xs[static_cast<std::size_t>(i)]);
            f[i] = decoherence_factor(field, xs[static_cast<std::size_t>(i)], -xs[static_cast<std::size_t>(i)], t);
        }
        const Eigen::Vector2d coef = a.colPivHouseholderQr().solve(f);
        worst = std::max(worst, (a * coef - f).cwiseAbs().maxCoeff());
    }
    return within(worst, 1e-10);
}

Outcome frozen_diagonal() {
    const SpatialScenario scn;
    const auto field = coherent_distribution(10.0);
    const auto xs = uniform_grid(-0.5, 0.5, 512);
    const auto rho0 = frozen_density(scn, field, 0.0, xs);
    double worst = 0.0;
    for (double t : {0.25, 0.5, 1.0, 2.0, 3.7, 5.0, 10.0}) {
        const auto rho = frozen_density(scn, field, t, xs);
        worst = std::max(worst, (rho.values().diagonal() - rho0.values().diagonal()).cwiseAbs().maxCoeff());
    }
    return within(worst, 1e-12);
}

Outcome wigner_structure() {
    const SpatialScenario scn;
    const auto field = coherent_distribution(10.0);
    const auto xs = uniform_grid(-0.5, 0.5, 512);
    const auto ps = default_momentum_grid(scn.d);
    const auto rho0 = frozen_density(scn, field, 0.0, xs);
    const auto w = wigner_transform(rho0, ps);

    const double negativity = w.values.minCoeff() / w.values.maxCoeff();
    const auto marginal = w.position_marginal();
    double marginal_err = 0.0;
    for (std::size_t i = 0; i < marginal.size(); ++i) {
        const auto k = static_cast<Eigen::Index>(i);
        marginal_err = std::max(marginal_err, std::abs(marginal[i] - rho0.values()(k, k).real()));
    }
    const double ratio = fringe_amplitude(frozen_density(scn, field, 2.0, xs), ps) / fringe_amplitude(rho0, ps);
    const double f = decoherence_factor(field, scn.a, -scn.a, 2.0);

    const bool ok = negativity < -0.01 && w.norm_defect <= 1e-6 && marginal_err <= 1e-6 && std::abs(ratio - f) <= 5e-2;
    return {ok, "min/max " + sci(negativity) + ", |int W - 1| " + sci(w.norm_defect) + ", marginal " +
                    sci(marginal_err) + ", fringe ratio " + sci(ratio) + " vs F " + sci(f)};
}

Outcome initial_concurrence() {
    double worst = 0.0;
    for (double gamma : {0.0, kPi / 8.0, kPi / 4.0}) {
        EntanglementScenario scn;
        scn.gamma = gamma;
        for (auto initial : {InitialState::GroundExcited, InitialState::SingleExcitation})
            worst = std::max(worst, std::abs(concurrence_x_state(internal_state(scn, initial, 0.0)) - std::sin(2.0 * gamma)));
    }
    return within(worst, 1e-12);
}

Outcome concurrence_oracle() {
    double worst = 0.0;
    std::size_t count = 0;
    for (double gamma : {0.0, kPi / 8.0, kPi / 4.0, 1.1}) {
        for (double d : {0.0025, 0.01}) {
            EntanglementScenario scn;
            scn.gamma = gamma;
            scn = scn.with_spread(d);
            for (double t : uniform_grid(0.0, 10.0, 1001)) {
                for (auto initial : {InitialState::GroundExcited, InitialState::SingleExcitation}) {
                    const auto st = internal_state(scn, initial, t);
                    worst = std::max(worst, std::abs(concurrence_x_state(st) - concurrence_general(st)));
                    ++count;
                }
            }
        }
    }
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 1000; ++k, ++count) {
        Eigen::Vector4d p(u(rng), u(rng), u(rng), u(rng));
        p /= p.sum();
        TwoQubitState st;
        st.matrix.diagonal() = p.cast<std::complex<double>>();
        st.matrix(0, 3) = std::polar(u(rng) * std::sqrt(p[0] * p[3]), 2.0 * kPi * u(rng));
        st.matrix(1, 2) = std::polar(u(rng) * std::sqrt(p[1] * p[2]), 2.0 * kPi * u(rng));
        st.matrix(3, 0) = std::conj(st.matrix(0, 3));
        st.matrix(2, 1) = std::conj(st.matrix(1, 2));
        worst = std::max(worst, std::abs(concurrence_x_state(st) - concurrence_general(st)));
    }
    auto out = within(worst, 1e-10);
    out.detail += ", " + std::to_string(count) + " states";
    return out;
}

Outcome trace_restoration() {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        EntanglementScenario scn;
        scn.gamma = u(rng) * kPi / 2.0;
        scn.a = 0.01 + 2.0 * u(rng);
        scn.d = 0.0005 + 0.1 * u(rng);
        worst = std::max(worst, std::abs(rho_case2(scn, 20.0 * u(rng)).trace() - 1.0));
    }
    EntanglementScenario scn;
    scn.a = 0.1;
    const double printed = rho_case2(scn, kPi / (2.0 * std::numbers::sqrt2), {.printed_w = true}).trace();
    const bool ok = worst <= 1e-12 && std::abs(printed - 1.0) > 1e-3;
    return {ok, "corrected max |tr - 1| " + sci(worst) + ", tol 1e-12; printed-w trace at gt = pi/(2 sqrt 2) " +
                    sci(printed)};
}

Outcome envelope_and_decay() {
    const auto times = uniform_grid(0.0, 20.0, 2001);
    double excess = 0.0, late = 0.0;
    std::string crossings;
    bool faster = true;
    for (auto initial : {InitialState::GroundExcited, InitialState::SingleExcitation}) {
        const EntanglementScenario scn;  // sigma = 0.5 g
        const double k = envelope_prefactor(scn, initial);
        const auto series = concurrence_series(scn, initial, times);
        for (const auto& s : series) {
            excess = std::max(excess, s.concurrence - k * s.envelope);
            if (scn.s(s.gt) >= 30.0) late = std::max(late, s.concurrence);
        }
        const auto narrow = concurrence_series(scn.with_spread(scn.d / 2.0), initial, times);
        const auto t_wide = first_time_at_or_below(series, 0.1);
        const auto t_narrow = first_time_at_or_below(narrow, 0.1);
        faster = faster && t_wide && t_narrow && *t_narrow < *t_wide;
        crossings += " " + (t_wide ? sci(*t_wide) : "none") + "->" + (t_narrow ? sci(*t_narrow) : "none");
    }
    const bool ok = excess <= 0.0 && late <= 1e-12 && faster;
    return {ok, "max(C - K e^-s) " + sci(excess) + ", max C once s >= 30 " + sci(late) + ", C <= 0.1 crossing" + crossings};
}

Outcome determinism() {
    std::string detail;
    bool ok = true;
    for (const auto& name : cli::preset_names()) {
        const auto cfg = cli::parse_config_string(cli::find_preset(name));
        std::vector<std::string> args{cfg.command, "--preset", name};
        std::string first;
        for (int rep = 0; rep < 2; ++rep) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            ok = ok && code == 0;
            if (rep == 0) first = out.str();
            else ok = ok && first == out.str() && !first.empty();
        }
        detail += (detail.empty() ? "" : ", ") + name + " (" + std::to_string(first.size()) + " bytes)";
    }
    return {ok, detail};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"probability conservation", conservation},
        {"eigensystem oracle", eigensystem},
        {"node lines F = 1 at x = 0, lambda, 2 lambda", node_lines},
        {"plateau F(lambda/2) ~ 0.5 for gt >= 1.5", plateau},
        {"cosine law in x", cosine_law},
        {"frozen-density diagonal unchanged", frozen_diagonal},
        {"Wigner structure", wigner_structure},
        {"initial concurrence sin 2 gamma", initial_concurrence},
        {"concurrence oracle", concurrence_oracle},
        {"trace restoration", trace_restoration},
        {"envelope and decay", envelope_and_decay},
        {"determinism of presets", determinism},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome r;
        try {
            r = criteria[i].second();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        if (!r.pass) ++failed;
        std::printf("%s criterion %zu: %s (%s)\n", r.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    r.detail.c_str());
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
