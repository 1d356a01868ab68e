#pragma once

// Dressed-state eigensystem of the two-atom / one-mode interaction block.
//
// The excitation-(n+2) block is spanned by the ordered basis
//   { |e1 e2, n>, |g1 e2, n+1>, |e1 g2, n+1>, |g1 g2, n+2> }
// and every 4-vector and 4x4 matrix in this module uses that order.
// Units: hbar = 1, and times are the dimensionless product g*t.

#include <complex>

#include <Eigen/Dense>

namespace ringcav {

struct BlockCoefficients {
    int n = 0;
    double f1 = 0.0;
    double f2 = 0.0;
    double rabi = 0.0;  ///< A_n = sqrt(2(2n+3)) g
};

/// f1 = sqrt((n+1)/(2(2n+3))), f2 = sqrt((n+2)/(2(2n+3))), rabi = sqrt(2(2n+3)) g.
BlockCoefficients block_coefficients(int n, double g = 1.0);

/// Atomic-population amplitudes of block n at time t for an initial |e1 e2, n>.
struct EvolutionAmplitudes {
    double d1 = 1.0;
    std::complex<double> d2{};  ///< purely imaginary
    double d3 = 0.0;
    int n = 0;
    double t = 0.0;

    /// d1^2 + 2|d2|^2 + d3^2, identically one.
    double norm() const noexcept { return d1 * d1 + 2.0 * std::norm(d2) + d3 * d3; }
};

EvolutionAmplitudes evolution_amplitudes(int n, double t, double g = 1.0);
EvolutionAmplitudes evolution_amplitudes(const BlockCoefficients& c, double t);

/// Four eigenpairs of one block. Column k of `vectors` belongs to `energies[k]`.
struct BlockEigensystem {
    int n = 0;
    Eigen::Vector4d energies = Eigen::Vector4d::Zero();
    Eigen::Matrix4d vectors = Eigen::Matrix4d::Zero();
};

/// Closed forms, ordered as the dressed states Psi_1..Psi_4:
/// energies {E0, E0, E0 + A_n, E0 - A_n} with E0 = (n+1) omega.
BlockEigensystem block_eigensystem(int n, double omega, double g = 1.0);

/// Same closed forms built from caller-supplied coefficients (used to
/// inject faults into the validation suite).
BlockEigensystem block_eigensystem(const BlockCoefficients& c, double omega);

/// The 4x4 Hermitian matrix of H1 restricted to block n.
Eigen::Matrix4d interaction_block(int n, double omega, double g = 1.0);

/// Numeric diagonalization of `interaction_block`; eigenvalues ascending.
BlockEigensystem oracle_block_diagonalize(int n, double omega, double g = 1.0);

/// Orthogonal projector onto the span of all eigenvectors whose energy lies
/// within `tol` of `energy`.
Eigen::Matrix4d spectral_projector(const BlockEigensystem& sys, double energy, double tol = 1e-8);

}  // namespace ringcav
