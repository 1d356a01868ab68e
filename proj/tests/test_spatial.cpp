#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "ringcav/dressed.hpp"
#include "ringcav/errors.hpp"
#include "ringcav/spatial.hpp"

using namespace ringcav;

namespace {

constexpr double kPi = std::numbers::pi;

double integrate(const auto& f, double lo, double hi) {
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, lo, hi, 15, 1e-13);
}

// F for a single Fock block straight from the amplitude definitions.
double fock_factor_oracle(int n, double x, double xp, double t) {
    const auto a = evolution_amplitudes(n, t);
    const double fringe = std::cos(kPi * (x - xp));
    return a.d1 * a.d1 + a.d3 * a.d3 + 2.0 * std::norm(a.d2) * fringe;
}

}  // namespace

TEST_CASE("superposition is normalized") {
    for (auto [a, d] : {std::pair{0.25, 0.025}, {0.25, 0.25}, {1.0, 0.1}, {0.05, 0.04}}) {
        const SpatialScenario scn{a, d};
        const double lo = -a - 12.0 * d;
        const double hi = a + 12.0 * d;
        const double norm = integrate([&](double x) { return std::pow(gaussian_superposition(scn, x), 2); }, lo, hi);
        CHECK(norm == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("free evolution starts at the superposition and stays normalized") {
    SpatialScenario scn{0.25, 0.025, 1.0, 0.5};
    for (double x : {-0.3, -0.25, 0.0, 0.1, 0.25}) {
        CHECK(std::abs(free_evolution_wavefunction(scn, x, 0.0) - gaussian_superposition(scn, x)) < 1e-14);
    }
    for (double t : {0.5, 2.0, 10.0}) {
        const double tau = scn.dispersion_scale(t);
        const double width = std::sqrt(scn.d * scn.d + tau * tau / (scn.d * scn.d));
        const double reach = scn.a + 14.0 * width;
        const double norm =
            integrate([&](double x) { return std::norm(free_evolution_wavefunction(scn, x, t)); }, -reach, reach);
        CHECK(norm == doctest::Approx(1.0).epsilon(1e-8));
    }
}

TEST_CASE("F(x, x, t) = 1 and F(a, -a, 0) = 1") {
    const auto field = coherent_distribution(10.0);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> pos(-2.0, 2.0);
    std::uniform_real_distribution<double> time(0.0, 30.0);
    for (int k = 0; k < 50; ++k) {
        const double x = pos(rng);
        CHECK(std::abs(decoherence_factor(field, x, x, time(rng)) - 1.0) < 1e-13);
    }
    CHECK(std::abs(decoherence_factor(field, 0.25, -0.25, 0.0) - 1.0) < 1e-13);
}

TEST_CASE("Fock field matches the single-block oracle") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> pos(-1.0, 1.0);
    std::uniform_real_distribution<double> time(0.0, 10.0);
    for (int n : {0, 1, 4, 25}) {
        const auto field = fock_distribution(n);
        for (int k = 0; k < 20; ++k) {
            const double x = pos(rng), xp = pos(rng), t = time(rng);
            CHECK(std::abs(decoherence_factor(field, x, xp, t) - fock_factor_oracle(n, x, xp, t)) < 1e-13);
        }
    }
}

TEST_CASE("affine and direct paths agree; F symmetric and bounded") {
    const auto field = coherent_distribution(3.0);
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> pos(-2.0, 2.0);
    std::uniform_real_distribution<double> time(0.0, 10.0);
    for (int k = 0; k < 100; ++k) {
        const double x = pos(rng), xp = pos(rng), t = time(rng);
        const double f = decoherence_factor(field, x, xp, t);
        CHECK(std::abs(f - decoherence_factor(field, xp, x, t)) < 1e-14);
        CHECK(std::abs(f) <= 1.0 + 1e-14);
        CHECK(std::abs(decoherence_factor(field, x, -x, t) - antidiagonal_factor(field, x, t)) < 1e-13);
    }
}

TEST_CASE("factor terms sum to one") {
    const auto field = coherent_distribution(10.0);
    for (double t : {0.0, 0.3, 1.0, 5.0, 40.0}) {
        const auto terms = factor_terms(field, t);
        CHECK(std::abs(terms.constant + terms.modulated - 1.0) < 1e-13);
        CHECK(terms.modulated >= 0.0);
    }
    CHECK(factor_terms(field, 0.0).modulated == 0.0);
}

TEST_CASE("nodes at integer multiples of lambda stay at 1") {
    const auto field = coherent_distribution(10.0);
    for (double t = 0.0; t <= 5.0; t += 0.05) {
        for (double x : {0.0, 1.0, 2.0}) CHECK(std::abs(antidiagonal_factor(field, x, t) - 1.0) < 1e-9);
    }
}

TEST_CASE("wavelength rescales the fringe") {
    const auto field = coherent_distribution(2.0);
    CHECK(decoherence_factor(field, 0.5, -0.5, 2.0, 2.0) ==
          doctest::Approx(decoherence_factor(field, 0.25, -0.25, 2.0, 1.0)).epsilon(1e-14));
}

TEST_CASE("frozen density at t = 0 has four peaks") {
    const SpatialScenario scn;
    const auto xs = uniform_grid(-0.5, 0.5, 401);  // 0.25 is node 300
    const auto rho = frozen_density(scn, coherent_distribution(10.0), 0.0, xs);
    const auto& v = rho.values();
    const double peak = v(300, 300).real();
    CHECK(v(100, 100).real() == doctest::Approx(peak));
    CHECK(v(100, 300).real() == doctest::Approx(peak));
    CHECK(v(300, 100).real() == doctest::Approx(peak));
    CHECK(v.real().maxCoeff() == doctest::Approx(peak));
    CHECK(v(200, 200).real() < 1e-10 * peak);
    CHECK(rho.hermiticity_defect() == 0.0);
    CHECK(rho.trace() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("diagonal does not decohere; anti-diagonal does") {
    const SpatialScenario scn;
    const auto field = coherent_distribution(10.0);
    const auto xs = uniform_grid(-0.5, 0.5, 401);
    const auto rho0 = frozen_density(scn, field, 0.0, xs);
    for (double t : {0.5, 2.0, 7.0}) {
        const auto rho = frozen_density(scn, field, t, xs);
        double worst = 0.0;
        for (Eigen::Index i = 0; i < rho.values().rows(); ++i)
            worst = std::max(worst, std::abs(rho.values()(i, i) - rho0.values()(i, i)));
        CHECK(worst < 1e-12);
        CHECK(rho.values()(100, 300).real() < 0.9 * rho0.values()(100, 300).real());
    }
}

TEST_CASE("a = lambda: no recoil decoherence at the peaks") {
    const SpatialScenario scn{1.0, 0.1};
    const auto field = coherent_distribution(10.0);
    const auto xs = uniform_grid(-2.0, 2.0, 401);  // x = -1 is node 100, x = 1 node 300
    const auto rho0 = frozen_density(scn, field, 0.0, xs);
    for (double t : {1.0, 2.0, 5.0}) {
        const auto rho = frozen_density(scn, field, t, xs);
        CHECK(std::abs(rho.values()(100, 300) - rho0.values()(100, 300)) < 1e-10);
        CHECK(std::abs(rho.values()(300, 100) - rho0.values()(300, 100)) < 1e-10);
    }
}

TEST_CASE("grid guards") {
    const SpatialScenario scn;
    const auto field = fock_distribution(0);
    const auto coarse = uniform_grid(-0.5, 0.5, 60);
    CHECK_THROWS_AS(frozen_density(scn, field, 0.0, coarse), ResolutionError);
    const auto narrow = uniform_grid(-0.4, 0.4, 401);
    CHECK_THROWS_AS(frozen_density(scn, field, 0.0, narrow), InvalidArgument);
    std::vector<double> unsorted = uniform_grid(-0.5, 0.5, 401);
    std::swap(unsorted[3], unsorted[4]);
    CHECK_THROWS_AS(frozen_density(scn, field, 0.0, unsorted), InvalidArgument);
    CHECK_THROWS_AS(frozen_density(scn, field, -1.0, uniform_grid(-0.5, 0.5, 401)), InvalidArgument);
}

TEST_CASE("scenario invariants") {
    CHECK_THROWS_AS((SpatialScenario{0.25, 0.0}.validate()), InvalidArgument);
    CHECK_THROWS_AS((SpatialScenario{0.25, 0.3}.validate()), InvalidArgument);
    CHECK_THROWS_AS((SpatialScenario{0.25, 0.025, -1.0}.validate()), InvalidArgument);
    CHECK_NOTHROW((SpatialScenario{0.25, 0.25}.validate()));
}

TEST_CASE("uniform grid endpoints are exact") {
    const auto g = uniform_grid(-0.5, 0.5, 512);
    CHECK(g.front() == -0.5);
    CHECK(g.back() == 0.5);
    CHECK(uniform_grid(0.0, 2.0, 201)[100] == 1.0);
    CHECK(uniform_grid(3.0, 4.0, 1) == std::vector<double>{3.0});
}
