#pragma once

// Relative-position decoherence of the two-atom wave packet.
//
// Lengths are in units of the cavity wavelength (so k = 2 pi / lambda with
// lambda = 1 by default) and times are g*t.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ringcav/field.hpp"

namespace ringcav {

struct SpatialScenario {
    double a = 0.25;             ///< packet-center offset
    double d = 0.025;            ///< Gaussian spread, 0 < d <= a
    double lambda = 1.0;         ///< cavity wavelength
    double recoil_sigma = 0.0;   ///< hbar k / (2 d m0) in units of g

    double wavenumber() const noexcept;
    /// Normalization constant 1 + exp(-a^2 / (2 d^2)).
    double overlap_norm() const noexcept;
    /// hbar t / m0 in squared length units, from recoil_sigma.
    double dispersion_scale(double t) const noexcept;

    /// Throws InvalidArgument naming the violated invariant.
    void validate() const;
};

/// phi(x, 0) = [G+(x) + G-(x)] / sqrt(2 delta).
double gaussian_superposition(const SpatialScenario& scn, double x);

/// Freely dispersed phi(x, t) under the relative-coordinate kinetic energy
/// p^2/m0. Reduces to `gaussian_superposition` at t = 0.
std::complex<double> free_evolution_wavefunction(const SpatialScenario& scn, double x, double t);

/// The two field-averaged sums of the decoherence factor at time t:
/// F(x, x') = constant + modulated * cos(k (x - x') / 2). Both are normalized
/// by the retained field mass, so constant + modulated = 1.
struct FactorTerms {
    double constant = 1.0;   ///< <D1^2 + D3^2>
    double modulated = 0.0;  ///< <2 |D2|^2>
};

FactorTerms factor_terms(const FieldDistribution& field, double t);

/// F(x, x', t) evaluated block by block.
double decoherence_factor(const FieldDistribution& field, double x, double xp, double t,
                          double lambda = 1.0);

/// F(x, -x, t) through the affine-in-cos(kx) form.
double antidiagonal_factor(const FieldDistribution& field, double x, double t,
                           double lambda = 1.0);

/// rho(x, x', t) sampled on a grid; entry (i, j) is rho(xs[i], xs[j]).
class RelativeDensityGrid {
public:
    RelativeDensityGrid(std::vector<double> xs, Eigen::MatrixXcd values, double time,
                        SpatialScenario scenario);

    const std::vector<double>& xs() const noexcept { return xs_; }
    const Eigen::MatrixXcd& values() const noexcept { return values_; }
    double time() const noexcept { return time_; }
    const SpatialScenario& scenario() const noexcept { return scenario_; }
    std::size_t size() const noexcept { return xs_.size(); }

    /// Trapezoid-rule integral of rho(x, x) over the grid.
    double trace() const;
    /// Largest |rho_ij - conj(rho_ji)|.
    double hermiticity_defect() const;

private:
    std::vector<double> xs_;
    Eigen::MatrixXcd values_;
    double time_;
    SpatialScenario scenario_;
};

inline constexpr double kMinPointsPerSpread = 8.0;

/// rho(x, x', t) = phi(x, 0) phi(x', 0) F(x, x', t) with the packets frozen.
/// The grid must be ascending and cover [-2a, 2a]; fewer than 8 points per
/// spread d raises ResolutionError.
RelativeDensityGrid frozen_density(const SpatialScenario& scn, const FieldDistribution& field,
                                   double t, std::span<const double> xs);

/// n evenly spaced points spanning [lo, hi], endpoints exact.
std::vector<double> uniform_grid(double lo, double hi, std::size_t n);

}  // namespace ringcav
