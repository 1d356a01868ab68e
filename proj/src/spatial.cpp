#include "ringcav/spatial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ringcav/dressed.hpp"
#include "ringcav/errors.hpp"

namespace ringcav {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_non_negative_time(double t) {
    if (!(t >= 0.0)) throw InvalidArgument("time must be non-negative");
}

}  // namespace

double SpatialScenario::wavenumber() const noexcept { return kTwoPi / lambda; }

double SpatialScenario::overlap_norm() const noexcept {
    return 1.0 + std::exp(-a * a / (2.0 * d * d));
}

double SpatialScenario::dispersion_scale(double t) const noexcept {
    return 2.0 * d * recoil_sigma * t / wavenumber();
}

void SpatialScenario::validate() const {
    if (!(d > 0.0)) throw InvalidArgument("spread d must be strictly positive");
    if (!(d <= a)) throw InvalidArgument("spread d must not exceed the offset a");
    if (!(lambda > 0.0)) throw InvalidArgument("wavelength must be positive");
    if (!(recoil_sigma >= 0.0)) throw InvalidArgument("recoil_sigma must be non-negative");
    if (!std::isfinite(a) || !std::isfinite(recoil_sigma))
        throw InvalidArgument("scenario fields must be finite");
}

double gaussian_superposition(const SpatialScenario& scn, double x) {
    const double amp = 1.0 / std::sqrt(std::sqrt(kTwoPi) * scn.d);
    const double w = 4.0 * scn.d * scn.d;
    const double gp = amp * std::exp(-(x + scn.a) * (x + scn.a) / w);
    const double gm = amp * std::exp(-(x - scn.a) * (x - scn.a) / w);
    return (gp + gm) / std::sqrt(2.0 * scn.overlap_norm());
}

std::complex<double> free_evolution_wavefunction(const SpatialScenario& scn, double x, double t) {
    require_non_negative_time(t);
    using cd = std::complex<double>;
    const double tau = scn.dispersion_scale(t);
    // The Gaussian momentum integral gives a complex width d^2 + i tau.
    const cd width2{scn.d * scn.d, tau};
    const cd amp = 1.0 / std::sqrt(std::sqrt(kTwoPi) * cd{scn.d, tau / scn.d});
    const auto packet = [&](double center) {
        return amp * std::exp(-(x - center) * (x - center) / (4.0 * width2));
    };
    return (packet(-scn.a) + packet(scn.a)) / std::sqrt(2.0 * scn.overlap_norm());
}

FactorTerms factor_terms(const FieldDistribution& field, double t) {
    require_non_negative_time(t);
    const auto w = field.weights();
    double constant = 0.0;
    double modulated = 0.0;
    for (std::size_t n = 0; n < w.size(); ++n) {
        if (w[n] == 0.0) continue;
        const auto amp = evolution_amplitudes(block_coefficients(static_cast<int>(n)), t);
        constant += w[n] * (amp.d1 * amp.d1 + amp.d3 * amp.d3);
        modulated += w[n] * 2.0 * std::norm(amp.d2);
    }
    return {constant / field.total(), modulated / field.total()};
}

double decoherence_factor(const FieldDistribution& field, double x, double xp, double t,
                          double lambda) {
    require_non_negative_time(t);
    const double fringe = std::cos(kTwoPi / lambda * (x - xp) / 2.0);
    const auto w = field.weights();
    double acc = 0.0;
    for (std::size_t n = 0; n < w.size(); ++n) {
        if (w[n] == 0.0) continue;
        const auto amp = evolution_amplitudes(block_coefficients(static_cast<int>(n)), t);
        acc += w[n] * (amp.d1 * amp.d1 + amp.d3 * amp.d3 + 2.0 * std::norm(amp.d2) * fringe);
    }
    return acc / field.total();
}

double antidiagonal_factor(const FieldDistribution& field, double x, double t, double lambda) {
    const FactorTerms terms = factor_terms(field, t);
    return terms.constant + terms.modulated * std::cos(kTwoPi / lambda * x);
}

RelativeDensityGrid::RelativeDensityGrid(std::vector<double> xs, Eigen::MatrixXcd values,
                                         double time, SpatialScenario scenario)
    : xs_(std::move(xs)), values_(std::move(values)), time_(time), scenario_(scenario) {
    const auto n = static_cast<Eigen::Index>(xs_.size());
    if (values_.rows() != n || values_.cols() != n)
        throw InvalidArgument("density values must be a square matrix matching the grid");
}

double RelativeDensityGrid::trace() const {
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < xs_.size(); ++i) {
        const auto k = static_cast<Eigen::Index>(i);
        acc += 0.5 * (xs_[i + 1] - xs_[i]) * (values_(k, k).real() + values_(k + 1, k + 1).real());
    }
    return acc;
}

double RelativeDensityGrid::hermiticity_defect() const {
    return (values_ - values_.adjoint()).cwiseAbs().maxCoeff();
}

RelativeDensityGrid frozen_density(const SpatialScenario& scn, const FieldDistribution& field,
                                   double t, std::span<const double> xs) {
    scn.validate();
    require_non_negative_time(t);
    if (xs.size() < 2) throw InvalidArgument("position grid needs at least two points");
    if (!std::is_sorted(xs.begin(), xs.end()) ||
        std::adjacent_find(xs.begin(), xs.end()) != xs.end())
        throw InvalidArgument("position grid must be strictly ascending");

    const double slack = 1e-12 * std::max(1.0, scn.a);
    if (xs.front() > -2.0 * scn.a + slack || xs.back() < 2.0 * scn.a - slack) {
        std::ostringstream msg;
        msg << "position grid [" << xs.front() << ", " << xs.back() << "] does not cover [-2a, 2a]";
        throw InvalidArgument(msg.str());
    }

    double widest = 0.0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) widest = std::max(widest, xs[i + 1] - xs[i]);
    if (scn.d / widest < kMinPointsPerSpread) {
        std::ostringstream msg;
        msg << "grid spacing " << widest << " gives " << scn.d / widest
            << " points per spread d (minimum " << kMinPointsPerSpread << ")";
        throw ResolutionError(msg.str());
    }

    const auto n = static_cast<Eigen::Index>(xs.size());
    Eigen::VectorXd phi(n);
    for (Eigen::Index i = 0; i < n; ++i) phi[i] = gaussian_superposition(scn, xs[i]);

    const FactorTerms terms = factor_terms(field, t);
    const double half_k = scn.wavenumber() / 2.0;

    Eigen::MatrixXcd values(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = j; i < n; ++i) {
            const double f = terms.constant + terms.modulated * std::cos(half_k * (xs[i] - xs[j]));
            values(i, j) = values(j, i) = phi[i] * phi[j] * f;
        }
    }
    return RelativeDensityGrid({xs.begin(), xs.end()}, std::move(values), t, scn);
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
    std::vector<double> out(n);
    if (n == 1) out[0] = lo;
    for (std::size_t i = 0; i < n && n > 1; ++i)
        out[i] = i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    return out;
}

}  // namespace ringcav
