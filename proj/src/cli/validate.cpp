#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <random>

#include "ringcav/cli/app.hpp"
#include "ringcav/dressed.hpp"
#include "ringcav/entanglement.hpp"
#include "ringcav/spatial.hpp"

namespace ringcav::cli {

namespace {

constexpr std::uint64_t kSeed = 0x5eed2024;

ValidationCheck conservation_sweep() {
    ValidationCheck c{"conservation D1^2+2|D2|^2+D3^2=1", 0.0, 1e-12, 0};
    std::mt19937_64 rng(kSeed);
    std::uniform_real_distribution<double> time(0.0, 50.0);
    for (int n = 0; n <= 10000; ++n) {
        const auto coeffs = block_coefficients(n);
        for (int k = 0; k < 100; ++k) {
            const auto amp = evolution_amplitudes(coeffs, time(rng));
            c.defect = std::max(c.defect, std::abs(amp.norm() - 1.0));
            ++c.samples;
        }
    }
    return c;
}

std::pair<ValidationCheck, ValidationCheck> eigensystem_oracle(const ValidationFaults& faults) {
    ValidationCheck values{"eigensystem oracle: energies", 0.0, 1e-10, 0};
    ValidationCheck projectors{"eigensystem oracle: projectors", 0.0, 1e-10, 0};
    for (double omega : {0.0, 1.0, 3.7}) {
        for (int n = 0; n <= 100; ++n) {
            auto coeffs = block_coefficients(n);
            if (faults.flip_f2) coeffs.f2 = -coeffs.f2;
            const auto closed = block_eigensystem(coeffs, omega);
            const auto oracle = oracle_block_diagonalize(n, omega);

            Eigen::Vector4d sorted = closed.energies;
            std::sort(sorted.begin(), sorted.end());
            values.defect = std::max(values.defect, (sorted - oracle.energies).cwiseAbs().maxCoeff());
            ++values.samples;

            for (int k = 0; k < 4; ++k) {
                const double e = closed.energies[k];
                const Eigen::Matrix4d diff = spectral_projector(closed, e) - spectral_projector(oracle, e);
                projectors.defect = std::max(projectors.defect, diff.cwiseAbs().maxCoeff());
                ++projectors.samples;
            }
        }
    }
    return {values, projectors};
}

TwoQubitState random_x_state(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    Eigen::Vector4d p;
    for (auto& v : p) v = unit(rng) + 1e-3;
    p /= p.sum();
    const auto w = std::polar(unit(rng) * std::sqrt(p[0] * p[3]), angle(rng));
    const auto z = std::polar(unit(rng) * std::sqrt(p[1] * p[2]), angle(rng));

    TwoQubitState st;
    for (int i = 0; i < 4; ++i) st.matrix(i, i) = p[i];
    st.matrix(0, 3) = w;
    st.matrix(3, 0) = std::conj(w);
    st.matrix(1, 2) = z;
    st.matrix(2, 1) = std::conj(z);
    return st;
}

std::vector<TwoQubitState> produced_states() {
    std::vector<TwoQubitState> out;
    const auto times = uniform_grid(0.0, 10.0, 201);
    for (double gamma : {0.0, std::numbers::pi / 8.0, std::numbers::pi / 4.0, 1.2}) {
        for (double d : {0.0025, 0.01, 0.05}) {
            EntanglementScenario scn;
            scn.gamma = gamma;
            scn = scn.with_spread(d);
            for (double t : times) {
                out.push_back(rho_case1(scn, t));
                out.push_back(rho_case2(scn, t));
            }
        }
    }
    return out;
}

}  // namespace

std::vector<ValidationCheck> run_validation(const ValidationFaults& faults) {
    std::vector<ValidationCheck> checks;
    checks.push_back(conservation_sweep());
    const auto [values, projectors] = eigensystem_oracle(faults);
    checks.push_back(values);
    checks.push_back(projectors);

    const auto states = produced_states();
    ValidationCheck oracle{"concurrence: X-state form vs Wootters", 0.0, 1e-10, 0};
    ValidationCheck trace{"trace of rho_i(t)", 0.0, 1e-12, 0};
    ValidationCheck positivity{"positivity of rho_i(t)", 0.0, 1e-12, 0};
    for (const auto& st : states) {
        oracle.defect = std::max(oracle.defect, std::abs(concurrence_x_state(st) - concurrence_general(st)));
        trace.defect = std::max(trace.defect, std::abs(st.trace() - 1.0));
        positivity.defect = std::max(positivity.defect, -st.min_eigenvalue());
    }
    oracle.samples = trace.samples = positivity.samples = states.size();
    std::mt19937_64 rng(kSeed + 1);
    for (int i = 0; i < 1000; ++i) {
        const auto st = random_x_state(rng);
        oracle.defect = std::max(oracle.defect, std::abs(concurrence_x_state(st) - concurrence_general(st)));
        ++oracle.samples;
    }
    checks.push_back(oracle);
    checks.push_back(trace);
    checks.push_back(positivity);

    ValidationCheck envelope{"concurrence below envelope", 0.0, 1e-12, 0};
    const auto times = uniform_grid(0.0, 20.0, 401);
    for (auto initial : {InitialState::GroundExcited, InitialState::SingleExcitation}) {
        for (double d : {0.0025, 0.00125}) {
            const auto scn = EntanglementScenario{}.with_spread(d);
            const double k = envelope_prefactor(scn, initial);
            for (const auto& s : concurrence_series(scn, initial, times)) {
                envelope.defect = std::max(envelope.defect, s.concurrence - k * s.envelope);
                ++envelope.samples;
            }
        }
    }
    checks.push_back(envelope);

    ValidationCheck bounds{"decoherence factor: F(x,x)=1, |F|<=1", 0.0, 1e-12, 0};
    std::uniform_real_distribution<double> pos(-2.0, 2.0);
    std::uniform_real_distribution<double> time(0.0, 20.0);
    for (const auto& field : {coherent_distribution(10.0), coherent_distribution(2.0), fock_distribution(3)}) {
        for (int i = 0; i < 200; ++i) {
            const double x = pos(rng);
            const double xp = pos(rng);
            const double t = time(rng);
            const double diag = decoherence_factor(field, x, x, t);
            const double off = decoherence_factor(field, x, xp, t);
            bounds.defect = std::max({bounds.defect, std::abs(diag - 1.0), std::abs(off) - 1.0});
            ++bounds.samples;
        }
    }
    checks.push_back(bounds);
    return checks;
}

void print_validation(std::ostream& os, const std::vector<ValidationCheck>& checks) {
    std::size_t width = 5;
    for (const auto& c : checks) width = std::max(width, c.name.size());
    const auto flags = os.flags();
    os << std::left << std::setw(static_cast<int>(width)) << "check" << "  " << std::setw(12) << "max defect"
       << "  " << std::setw(9) << "tolerance" << "  " << std::setw(8) << "samples" << "  result\n";
    for (const auto& c : checks) {
        os << std::setw(static_cast<int>(width)) << c.name << "  " << std::setw(12) << std::setprecision(3)
           << std::scientific << c.defect << "  " << std::setw(9) << std::setprecision(0) << c.tolerance << "  "
           << std::setw(8) << c.samples << "  " << (c.passed() ? "PASS" : "FAIL") << '\n';
    }
    os.flags(flags);
}

}  // namespace ringcav::cli
