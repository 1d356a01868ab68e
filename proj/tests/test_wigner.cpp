#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ringcav/errors.hpp"
#include "ringcav/spatial.hpp"
#include "ringcav/wigner.hpp"

using namespace ringcav;

namespace {

constexpr double kPi = std::numbers::pi;

// Pure Gaussian of spread d centred at 0, sampled as a density grid.
RelativeDensityGrid single_gaussian(double d, std::size_t n, double half_width) {
    auto xs = uniform_grid(-half_width, half_width, n);
    Eigen::VectorXd psi(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
        psi[static_cast<Eigen::Index>(i)] = std::exp(-xs[i] * xs[i] / (4.0 * d * d)) / std::sqrt(std::sqrt(2.0 * kPi) * d);
    Eigen::MatrixXcd rho = (psi * psi.transpose()).cast<std::complex<double>>();
    return RelativeDensityGrid(std::move(xs), std::move(rho), 0.0, SpatialScenario{});
}

}  // namespace

TEST_CASE("single Gaussian matches the analytic Wigner function") {
    const double d = 0.05;
    const auto rho = single_gaussian(d, 401, 0.5);
    const auto ps = default_momentum_grid(d, 129);
    const auto w = wigner_transform(rho, ps);
    double worst = 0.0;
    for (std::size_t i = 0; i < w.xs.size(); ++i) {
        for (std::size_t m = 0; m < ps.size(); ++m) {
            const double exact = std::exp(-w.xs[i] * w.xs[i] / (2.0 * d * d) - 2.0 * d * d * ps[m] * ps[m]) / kPi;
            worst = std::max(worst, std::abs(w.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(m)) - exact));
        }
    }
    CHECK(worst < 1e-6 / kPi);
    CHECK(w.values.minCoeff() > -1e-9);
}

TEST_CASE("two-packet state: negativity, normalization, marginal") {
    const SpatialScenario scn;
    const auto field = coherent_distribution(10.0);
    const auto rho = frozen_density(scn, field, 0.0, uniform_grid(-0.5, 0.5, 512));
    const auto ps = default_momentum_grid(scn.d);
    const auto w = wigner_transform(rho, ps);

    CHECK(w.values.minCoeff() < -0.01 * w.values.maxCoeff());
    CHECK(w.norm_defect < 1e-6);
    CHECK(std::abs(w.integral() - 1.0) < 1e-6);
    const auto marginal = w.position_marginal();
    for (std::size_t i = 0; i < marginal.size(); ++i) {
        const auto k = static_cast<Eigen::Index>(i);
        CHECK(std::abs(marginal[i] - rho.values()(k, k).real()) < 1e-6);
    }
    CHECK(w.imag_residue < 1e-12);
}

TEST_CASE("fringe damping follows F(a, -a, t)") {
    const SpatialScenario scn;
    const auto field = coherent_distribution(10.0);
    const auto xs = uniform_grid(-0.5, 0.5, 512);
    const auto ps = default_momentum_grid(scn.d);
    const double f0 = fringe_amplitude(frozen_density(scn, field, 0.0, xs), ps);
    const double f2 = fringe_amplitude(frozen_density(scn, field, 2.0, xs), ps);
    CHECK(f2 < f0);
    CHECK(std::abs(f2 / f0 - decoherence_factor(field, scn.a, -scn.a, 2.0)) < 5e-2);
}

TEST_CASE("slice at a node reproduces the grid row; off-node interpolates") {
    const SpatialScenario scn;
    const auto rho = frozen_density(scn, fock_distribution(0), 1.0, uniform_grid(-0.5, 0.5, 513));
    const auto ps = default_momentum_grid(scn.d, 64);
    const auto w = wigner_transform(rho, ps);
    const auto row = wigner_slice(rho, rho.xs()[100], ps);
    for (std::size_t m = 0; m < ps.size(); ++m) CHECK(row[m] == doctest::Approx(w.values(100, static_cast<Eigen::Index>(m))));

    const double mid = 0.5 * (rho.xs()[256] + rho.xs()[257]);
    const auto between = wigner_slice(rho, mid, ps);
    const auto left = wigner_slice(rho, rho.xs()[256], ps);
    CHECK(std::abs(between[32] - left[32]) < 0.2 * std::abs(left[32]) + 1e-3);
}

TEST_CASE("input guards") {
    const SpatialScenario scn;
    const auto rho = frozen_density(scn, fock_distribution(0), 0.0, uniform_grid(-0.5, 0.5, 513));
    const double h = 1.0 / 512.0;
    const std::vector<double> aliasing{-kPi / (2.0 * h) * 1.01, 0.0, kPi / (2.0 * h) * 1.01};
    CHECK_THROWS_AS(wigner_transform(rho, aliasing), ResolutionError);
    CHECK_THROWS_AS(wigner_transform(rho, std::vector<double>{}), InvalidArgument);

    auto xs = rho.xs();
    xs[10] += 0.3 * h;
    CHECK_THROWS_AS(wigner_transform(RelativeDensityGrid(xs, rho.values(), 0.0, scn), default_momentum_grid(scn.d)),
                    InvalidArgument);

    Eigen::MatrixXcd skew = rho.values();
    skew(3, 40) += std::complex<double>(0.0, 0.5);
    CHECK_THROWS_AS(wigner_transform(RelativeDensityGrid(rho.xs(), skew, 0.0, scn), default_momentum_grid(scn.d)),
                    InvalidArgument);
}

TEST_CASE("default momentum grid spans +-4/d") {
    const auto ps = default_momentum_grid(0.025);
    CHECK(ps.size() == 256);
    CHECK(ps.front() == -160.0);
    CHECK(ps.back() == 160.0);
    CHECK_THROWS_AS(default_momentum_grid(0.0), InvalidArgument);
}
