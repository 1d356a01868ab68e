#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ringcav {

enum class FieldKind { Fock, Coherent };

/// Diagonal photon-number weights c_{n,n} of the initial cavity field.
///
/// Only the diagonal is kept: the decoherence factor depends on c_{n,n}
/// alone. `tail_bound()` is a guaranteed upper bound on the probability mass
/// beyond the last stored index.
class FieldDistribution {
public:
    FieldDistribution() = default;

    FieldKind kind() const noexcept { return kind_; }
    /// Photon number of a Fock state; 0 for a coherent state.
    int fock_number() const noexcept { return fock_n_; }
    /// Coherent amplitude |alpha|; 0 for a Fock state.
    double alpha() const noexcept { return alpha_; }
    double tail_bound() const noexcept { return tail_bound_; }

    std::span<const double> weights() const noexcept { return weights_; }
    std::size_t size() const noexcept { return weights_.size(); }
    double operator[](std::size_t n) const { return weights_[n]; }

    /// Sum of the stored weights (compensated).
    double total() const noexcept { return total_; }
    double mean() const;
    double variance() const;

private:
    friend FieldDistribution fock_distribution(int);
    friend FieldDistribution coherent_distribution(double, double, std::size_t);

    std::vector<double> weights_{1.0};
    FieldKind kind_ = FieldKind::Fock;
    int fock_n_ = 0;
    double alpha_ = 0.0;
    double tail_bound_ = 0.0;
    double total_ = 1.0;
};

inline constexpr double kDefaultTailTolerance = 1e-12;
inline constexpr std::size_t kDefaultMaxPhotonTerms = 200000;

/// Number state |n0>: a single unit weight, no tail.
FieldDistribution fock_distribution(int n0);

/// Coherent state |alpha>: Poisson weights exp(-alpha^2) alpha^(2n) / n!,
/// truncated once the certified tail mass drops below `tail_tol`.
/// Throws InvalidArgument for tail_tol outside (0, 1) or a negative/non-finite
/// alpha, and ResourceLimitError if more than `max_terms` weights are needed.
FieldDistribution coherent_distribution(double alpha, double tail_tol = kDefaultTailTolerance,
                                        std::size_t max_terms = kDefaultMaxPhotonTerms);

}  // namespace ringcav
