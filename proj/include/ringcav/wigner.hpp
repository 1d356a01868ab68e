#pragma once

// Wigner transform of a sampled relative-position density matrix,
//
//   W(x, p) = 1/(2 pi hbar) \int rho(x + y/2, x - y/2) exp(-i p y / hbar) dy,
//
// with hbar = 1. Positions are in units of lambda, so momenta come out in
// units of hbar/lambda (hbar k = 2 pi in these units).

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ringcav/spatial.hpp"

namespace ringcav {

struct WignerGrid {
    std::vector<double> xs;
    std::vector<double> ps;
    Eigen::MatrixXd values;     ///< values(i, m) = W(xs[i], ps[m])
    double time = 0.0;
    double norm_defect = 0.0;   ///< |\int\int W dx dp - 1|
    double imag_residue = 0.0;  ///< largest |Im W| discarded

    /// Trapezoid integral over p at each x node.
    std::vector<double> position_marginal() const;
    double integral() const;
};

/// Transform on the density's own position nodes. Requires a uniform,
/// Hermitian density and a momentum grid with max|p| * 2 dx <= pi.
WignerGrid wigner_transform(const RelativeDensityGrid& density, std::span<const double> ps);

/// W(x, p) along one x, which need not be a grid node; off-node density
/// entries are bilinearly interpolated.
std::vector<double> wigner_slice(const RelativeDensityGrid& density, double x,
                                 std::span<const double> ps);

/// Interference-fringe amplitude max_p |W(0, p)|.
double fringe_amplitude(const RelativeDensityGrid& density, std::span<const double> ps);

/// n points spanning [-4/d, 4/d].
std::vector<double> default_momentum_grid(double d, std::size_t n = 256);

}  // namespace ringcav
