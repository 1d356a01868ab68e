#include "ringcav/field.hpp"

#include <cmath>
#include <string>

#include <boost/math/distributions/poisson.hpp>

#include "ringcav/errors.hpp"

namespace ringcav {

namespace {

double compensated_sum(std::span<const double> xs) {
    double sum = 0.0;
    double carry = 0.0;
    for (double x : xs) {
        const double t = sum + x;
        carry += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    }
    return sum + carry;
}

}  // namespace

double FieldDistribution::mean() const {
    double acc = 0.0;
    for (std::size_t n = 0; n < weights_.size(); ++n) acc += static_cast<double>(n) * weights_[n];
    return acc / total_;
}

double FieldDistribution::variance() const {
    const double mu = mean();
    double acc = 0.0;
    for (std::size_t n = 0; n < weights_.size(); ++n) {
        const double dn = static_cast<double>(n) - mu;
        acc += dn * dn * weights_[n];
    }
    return acc / total_;
}

FieldDistribution fock_distribution(int n0) {
    if (n0 < 0) throw InvalidArgument("Fock photon number must be non-negative");

    FieldDistribution f;
    f.weights_.assign(static_cast<std::size_t>(n0) + 1, 0.0);
    f.weights_.back() = 1.0;
    f.kind_ = FieldKind::Fock;
    f.fock_n_ = n0;
    f.tail_bound_ = 0.0;
    f.total_ = 1.0;
    return f;
}

FieldDistribution coherent_distribution(double alpha, double tail_tol, std::size_t max_terms) {
    if (!(tail_tol > 0.0 && tail_tol < 1.0))
        throw InvalidArgument("tail tolerance must lie in (0, 1), got " + std::to_string(tail_tol));
    if (!std::isfinite(alpha) || alpha < 0.0)
        throw InvalidArgument("coherent amplitude must be finite and non-negative");

    FieldDistribution f;
    f.kind_ = FieldKind::Coherent;
    f.alpha_ = alpha;

    const double mu = alpha * alpha;
    if (mu == 0.0) return f;  // vacuum
    if (mu + 1.0 > static_cast<double>(max_terms))
        throw ResourceLimitError("coherent amplitude " + std::to_string(alpha) +
                                 " needs more than " + std::to_string(max_terms) + " photon terms");

    // Anchor at the mode, where the pmf is largest, then walk both ways with
    // the ratio w[n+1]/w[n] = mu/(n+1). Neither direction can overflow.
    const auto mode = static_cast<std::size_t>(std::floor(mu));
    std::vector<double>& w = f.weights_;
    w.assign(mode + 1, 0.0);
    w[mode] = boost::math::pdf(boost::math::poisson_distribution<double>(mu),
                               static_cast<double>(mode));
    for (std::size_t n = mode; n > 0; --n) w[n - 1] = w[n] * static_cast<double>(n) / mu;

    // Past the mode the ratios keep shrinking, so the discarded tail after
    // index N is bounded by the geometric series w[N+1] / (1 - mu/(N+2)).
    for (;;) {
        const std::size_t last = w.size() - 1;
        const double next = w[last] * mu / static_cast<double>(last + 1);
        const double bound = next / (1.0 - mu / static_cast<double>(last + 2));
        if (bound <= tail_tol) {
            f.tail_bound_ = bound;
            break;
        }
        if (w.size() >= max_terms)
            throw ResourceLimitError("coherent amplitude " + std::to_string(alpha) +
                                     " needs more than " + std::to_string(max_terms) +
                                     " photon terms");
        w.push_back(next);
    }

    f.total_ = compensated_sum(w);
    return f;
}

}  // namespace ringcav
