#pragma once

// Internal-state entanglement of the two atoms with the cavity starting in
// vacuum. Two-qubit matrices use the basis {|e1 e2>, |e1 g2>, |g1 e2>, |g1 g2>}.

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace ringcav {

struct EntanglementScenario {
    double gamma = 0.7853981633974483;  ///< mixing angle in [0, pi/2]
    double a = 0.25;                    ///< packet-center separation (units of lambda)
    double d = 0.0025;                  ///< packet spread (units of lambda)
    double recoil_sigma = 0.5;          ///< sigma, s(t) = (sigma t)^2 (units of g)
    double omega = 0.0;                 ///< mode frequency; only enters a phase of w
    double lambda = 1.0;

    double wavenumber() const noexcept;
    double s(double t) const noexcept;
    double delta() const noexcept;           ///< d^2 k^2
    std::complex<double> xi(double t) const noexcept;  ///< s(t) + d^2 k^2 - i a k
    std::complex<double> alpha() const noexcept;       ///< d^2 k^2 + i a k
    std::complex<double> beta() const noexcept;        ///< conj(alpha)
    std::complex<double> eta() const noexcept;         ///< 4 d^2 k^2 + 2 i a k

    /// Same atoms and cavity with a different spread; sigma scales as 1/d.
    EntanglementScenario with_spread(double new_d) const;

    void validate() const;
};

/// Initial internal state.
enum class InitialState {
    GroundExcited = 1,     ///< cos(gamma)|g1 g2> + sin(gamma)|e1 e2>
    SingleExcitation = 2,  ///< cos(gamma)|e1 g2> + sin(gamma)|g1 e2>
};

/// Alternative readings of the closed forms, kept for comparison.
struct ReadingOptions {
    bool literal_d00 = false;  ///< case 1: take D_i(0, 0) literally (frozen at t = 0)
    bool printed_w = false;    ///< case 2: w = |B|^2 + 2 cos sin e^-delta cos(ak) as printed
    bool printed_z = false;    ///< case 2: sin^2(gamma) term carries e^-beta as printed
};

struct TwoQubitState {
    Eigen::Matrix4cd matrix = Eigen::Matrix4cd::Zero();
    bool is_x_state = true;

    double trace() const;
    double hermiticity_defect() const;
    double min_eigenvalue() const;
    /// Largest |entry| outside the diagonal and anti-diagonal.
    double x_sparsity_defect() const;
};

TwoQubitState rho_case1(const EntanglementScenario& scn, double t, const ReadingOptions& opts = {});
TwoQubitState rho_case2(const EntanglementScenario& scn, double t, const ReadingOptions& opts = {});
TwoQubitState internal_state(const EntanglementScenario& scn, InitialState initial, double t,
                             const ReadingOptions& opts = {});

/// 2 max{0, |z| - sqrt(a d), |w| - sqrt(b c)}. Throws InvalidArgument when the
/// state is not flagged as an X-state.
double concurrence_x_state(const TwoQubitState& state);

/// Wootters concurrence from the spectrum of rho (sy x sy) rho* (sy x sy).
/// Throws InvalidArgument for a non-Hermitian or non-unit-trace matrix.
double concurrence_general(const TwoQubitState& state);

/// K such that C(t) <= K exp(-s(t)) for every t.
double envelope_prefactor(const EntanglementScenario& scn, InitialState initial);

struct ConcurrenceSample {
    double gt = 0.0;
    double concurrence = 0.0;
    double envelope = 1.0;  ///< exp(-s(t))
    double trace = 1.0;
};

/// Closed-form concurrence on an ascending time grid.
std::vector<ConcurrenceSample> concurrence_series(const EntanglementScenario& scn,
                                                  InitialState initial,
                                                  std::span<const double> times,
                                                  const ReadingOptions& opts = {});

/// First sampled time with C <= threshold.
std::optional<double> first_time_at_or_below(std::span<const ConcurrenceSample> series,
                                             double threshold);

}  // namespace ringcav
