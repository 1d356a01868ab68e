#include "ringcav/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ringcav/dressed.hpp"
#include "ringcav/errors.hpp"

namespace ringcav {

namespace {

using cd = std::complex<double>;

constexpr cd kI{0.0, 1.0};

// sigma_y (x) sigma_y in the {ee, eg, ge, gg} basis.
Eigen::Matrix4cd spin_flip() {
    Eigen::Matrix4cd y = Eigen::Matrix4cd::Zero();
    y(0, 3) = y(3, 0) = -1.0;
    y(1, 2) = y(2, 1) = 1.0;
    return y;
}

Eigen::Matrix4cd hermitian_sqrt(const Eigen::Matrix4cd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(m);
    const Eigen::Vector4d roots = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return solver.eigenvectors() * roots.asDiagonal() * solver.eigenvectors().adjoint();
}

}  // namespace

double EntanglementScenario::wavenumber() const noexcept { return 2.0 * std::numbers::pi / lambda; }

double EntanglementScenario::s(double t) const noexcept {
    const double st = recoil_sigma * t;
    return st * st;
}

double EntanglementScenario::delta() const noexcept {
    const double dk = d * wavenumber();
    return dk * dk;
}

cd EntanglementScenario::xi(double t) const noexcept {
    return {s(t) + delta(), -a * wavenumber()};
}

cd EntanglementScenario::alpha() const noexcept { return {delta(), a * wavenumber()}; }

cd EntanglementScenario::beta() const noexcept { return std::conj(alpha()); }

cd EntanglementScenario::eta() const noexcept { return {4.0 * delta(), 2.0 * a * wavenumber()}; }

EntanglementScenario EntanglementScenario::with_spread(double new_d) const {
    if (!(new_d > 0.0)) throw InvalidArgument("spread d must be positive");
    EntanglementScenario out = *this;
    out.recoil_sigma = recoil_sigma * d / new_d;
    out.d = new_d;
    return out;
}

void EntanglementScenario::validate() const {
    if (!(d > 0.0)) throw InvalidArgument("spread d must be strictly positive");
    if (!(gamma >= 0.0 && gamma <= std::numbers::pi / 2.0))
        throw InvalidArgument("mixing angle gamma must lie in [0, pi/2]");
    if (!(recoil_sigma >= 0.0)) throw InvalidArgument("recoil_sigma must be non-negative");
    if (!(lambda > 0.0)) throw InvalidArgument("wavelength must be positive");
    if (!std::isfinite(a) || !std::isfinite(omega) || !std::isfinite(recoil_sigma))
        throw InvalidArgument("scenario fields must be finite");
}

double TwoQubitState::trace() const { return matrix.trace().real(); }

double TwoQubitState::hermiticity_defect() const {
    return (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
}

double TwoQubitState::min_eigenvalue() const {
    const Eigen::Matrix4cd h = 0.5 * (matrix + matrix.adjoint());
    return Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd>(h, Eigen::EigenvaluesOnly).eigenvalues()[0];
}

double TwoQubitState::x_sparsity_defect() const {
    double worst = 0.0;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            if (r != c && r + c != 3) worst = std::max(worst, std::abs(matrix(r, c)));
    return worst;
}

TwoQubitState rho_case1(const EntanglementScenario& scn, double t, const ReadingOptions& opts) {
    scn.validate();
    if (!(t >= 0.0)) throw InvalidArgument("time must be non-negative");

    // Vacuum field: only the n = 0 block is populated.
    const auto amp = evolution_amplitudes(0, opts.literal_d00 ? 0.0 : t);
    const double cg = std::cos(scn.gamma);
    const double sg = std::sin(scn.gamma);
    const double s2 = sg * sg;

    const double a = amp.d1 * amp.d1 * s2;
    const double b = std::norm(amp.d2) * s2;
    const double d = cg * cg + amp.d3 * amp.d3 * s2;
    const cd w = amp.d1 * cg * sg * std::exp(-2.0 * kI * scn.omega * t) * std::exp(-scn.s(t));
    const cd z = b * std::exp(-scn.xi(t));

    TwoQubitState st;
    auto& m = st.matrix;
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = b;
    m(3, 3) = d;
    m(0, 3) = w;
    m(3, 0) = std::conj(w);
    m(1, 2) = z;
    m(2, 1) = std::conj(z);
    return st;
}

TwoQubitState rho_case2(const EntanglementScenario& scn, double t, const ReadingOptions& opts) {
    scn.validate();
    if (!(t >= 0.0)) throw InvalidArgument("time must be non-negative");

    // Single excitation in vacuum: the symmetric atomic state couples to
    // |g1 g2, 1> at rate sqrt(2) g.
    const double phase = std::numbers::sqrt2 * t;
    const double ap = (std::cos(phase) + 1.0) / 2.0;
    const double am = (std::cos(phase) - 1.0) / 2.0;
    const double b2 = std::sin(phase) * std::sin(phase) / 2.0;  // |B|^2

    const double cg = std::cos(scn.gamma);
    const double sg = std::sin(scn.gamma);
    const double cross = cg * sg * std::exp(-scn.delta()) * std::cos(scn.a * scn.wavenumber());

    const double b = ap * ap * cg * cg + am * am * sg * sg + 2.0 * ap * am * cross;
    const double c = am * am * cg * cg + ap * ap * sg * sg + 2.0 * ap * am * cross;
    const double w = opts.printed_w ? b2 + 2.0 * cross : b2 * (1.0 + 2.0 * cross);

    // Both recoil-shifted overlaps <exp(ik(x1 - x2))> equal exp(-alpha).
    const cd shifted = opts.printed_z ? cg * cg * std::exp(-scn.alpha()) + sg * sg * std::exp(-scn.beta())
                                      : std::exp(-scn.alpha());
    const cd z = std::exp(-scn.s(t)) *
                 (ap * am * shifted + (ap * ap + am * am * std::exp(-scn.eta())) * cg * sg);

    TwoQubitState st;
    auto& m = st.matrix;
    m(1, 1) = b;
    m(2, 2) = c;
    m(3, 3) = w;
    m(1, 2) = z;
    m(2, 1) = std::conj(z);
    return st;
}

TwoQubitState internal_state(const EntanglementScenario& scn, InitialState initial, double t,
                             const ReadingOptions& opts) {
    return initial == InitialState::GroundExcited ? rho_case1(scn, t, opts) : rho_case2(scn, t, opts);
}

double concurrence_x_state(const TwoQubitState& state) {
    if (!state.is_x_state) throw InvalidArgument("closed-form concurrence needs an X-state");
    const auto& m = state.matrix;
    const double outer = std::sqrt(std::max(0.0, m(0, 0).real() * m(3, 3).real()));
    const double inner = std::sqrt(std::max(0.0, m(1, 1).real() * m(2, 2).real()));
    return 2.0 * std::max({0.0, std::abs(m(1, 2)) - outer, std::abs(m(0, 3)) - inner});
}

double concurrence_general(const TwoQubitState& state) {
    if (state.hermiticity_defect() > 1e-9) throw InvalidArgument("density matrix is not Hermitian");
    if (std::abs(state.matrix.trace() - 1.0) > 1e-9) throw InvalidArgument("density matrix trace is not 1");

    // sqrt(lambda_i) are the singular values of sqrt(rho) Y sqrt(rho)^*: the
    // product times Y is similar to the square root of rho * rho~.
    const Eigen::Matrix4cd root = hermitian_sqrt(state.matrix);
    const Eigen::Matrix4cd product = root * spin_flip() * root.conjugate();
    const Eigen::Vector4d sv = Eigen::JacobiSVD<Eigen::Matrix4cd>(product).singularValues();
    return std::max(0.0, sv[0] - sv[1] - sv[2] - sv[3]);
}

double envelope_prefactor(const EntanglementScenario& scn, InitialState initial) {
    const double cs = std::abs(std::cos(scn.gamma) * std::sin(scn.gamma));
    if (initial == InitialState::GroundExcited) {
        // |w| <= cs e^-s and |z| <= sin^2(gamma) max|D2(0,t)|^2 e^-s, max|D2|^2 = f1^2 = 1/6.
        const double sg = std::sin(scn.gamma);
        return 2.0 * std::max(cs, sg * sg / 6.0);
    }
    // |A+ A-| <= 1/4 and A+^2 + A-^2 <= 1.
    return 2.0 * (0.25 * std::exp(-scn.delta()) + cs);
}

std::vector<ConcurrenceSample> concurrence_series(const EntanglementScenario& scn,
                                                  InitialState initial,
                                                  std::span<const double> times,
                                                  const ReadingOptions& opts) {
    if (!std::is_sorted(times.begin(), times.end()))
        throw InvalidArgument("time grid must be ascending");

    std::vector<ConcurrenceSample> out;
    out.reserve(times.size());
    for (double t : times) {
        const TwoQubitState st = internal_state(scn, initial, t, opts);
        out.push_back({t, concurrence_x_state(st), std::exp(-scn.s(t)), st.trace()});
    }
    return out;
}

std::optional<double> first_time_at_or_below(std::span<const ConcurrenceSample> series,
                                             double threshold) {
    const auto it = std::find_if(series.begin(), series.end(),
                                 [&](const ConcurrenceSample& s) { return s.concurrence <= threshold; });
    if (it == series.end()) return std::nullopt;
    return it->gt;
}

}  // namespace ringcav
