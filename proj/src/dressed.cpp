#include "ringcav/dressed.hpp"

#include <cmath>

#include "ringcav/errors.hpp"

namespace ringcav {

BlockCoefficients block_coefficients(int n, double g) {
    if (n < 0) throw InvalidArgument("block index must be non-negative");
    if (!(g > 0.0)) throw InvalidArgument("coupling g must be positive");

    const double denom = 2.0 * (2.0 * n + 3.0);
    BlockCoefficients c;
    c.n = n;
    c.f1 = std::sqrt((n + 1.0) / denom);
    c.f2 = std::sqrt((n + 2.0) / denom);
    c.rabi = std::sqrt(denom) * g;
    return c;
}

EvolutionAmplitudes evolution_amplitudes(const BlockCoefficients& c, double t) {
    const double phase = c.rabi * t;
    const double cs = std::cos(phase);
    const double sn = std::sin(phase);

    EvolutionAmplitudes amp;
    amp.n = c.n;
    amp.t = t;
    amp.d1 = 2.0 * c.f1 * c.f1 * cs + 2.0 * c.f2 * c.f2;
    amp.d2 = {0.0, -c.f1 * sn};
    amp.d3 = 2.0 * c.f1 * c.f2 * (cs - 1.0);
    return amp;
}

EvolutionAmplitudes evolution_amplitudes(int n, double t, double g) {
    if (t < 0.0) throw InvalidArgument("time must be non-negative");
    return evolution_amplitudes(block_coefficients(n, g), t);
}

BlockEigensystem block_eigensystem(const BlockCoefficients& c, double omega) {
    const double e0 = (c.n + 1.0) * omega;
    const double r2 = std::sqrt(2.0);

    BlockEigensystem sys;
    sys.n = c.n;
    sys.energies << e0, e0, e0 + c.rabi, e0 - c.rabi;
    sys.vectors.col(0) << r2 * c.f2, 0.0, 0.0, -r2 * c.f1;
    sys.vectors.col(1) << 0.0, r2 / 2.0, -r2 / 2.0, 0.0;
    sys.vectors.col(2) << c.f1, 0.5, 0.5, c.f2;
    sys.vectors.col(3) << -c.f1, 0.5, 0.5, -c.f2;
    return sys;
}

BlockEigensystem block_eigensystem(int n, double omega, double g) {
    return block_eigensystem(block_coefficients(n, g), omega);
}

Eigen::Matrix4d interaction_block(int n, double omega, double g) {
    if (n < 0) throw InvalidArgument("block index must be non-negative");

    const double lower = g * std::sqrt(n + 1.0);  // |ee,n> <-> single excitations
    const double upper = g * std::sqrt(n + 2.0);  // single excitations <-> |gg,n+2>

    Eigen::Matrix4d h = Eigen::Matrix4d::Identity() * ((n + 1.0) * omega);
    h(0, 1) = h(1, 0) = lower;
    h(0, 2) = h(2, 0) = lower;
    h(1, 3) = h(3, 1) = upper;
    h(2, 3) = h(3, 2) = upper;
    return h;
}

BlockEigensystem oracle_block_diagonalize(int n, double omega, double g) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(interaction_block(n, omega, g));
    if (solver.info() != Eigen::Success) throw std::runtime_error("4x4 eigensolver failed");

    BlockEigensystem sys;
    sys.n = n;
    sys.energies = solver.eigenvalues();
    sys.vectors = solver.eigenvectors();
    return sys;
}

Eigen::Matrix4d spectral_projector(const BlockEigensystem& sys, double energy, double tol) {
    Eigen::Matrix4d p = Eigen::Matrix4d::Zero();
    for (int k = 0; k < 4; ++k) {
        if (std::abs(sys.energies[k] - energy) <= tol) {
            const Eigen::Vector4d v = sys.vectors.col(k);
            p += v * v.transpose();
        }
    }
    return p;
}

}  // namespace ringcav
