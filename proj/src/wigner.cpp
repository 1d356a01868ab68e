#include "ringcav/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "ringcav/errors.hpp"

namespace ringcav {

namespace {

using cd = std::complex<double>;

double trapezoid(std::span<const double> xs, const auto& f) {
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) acc += 0.5 * (xs[i + 1] - xs[i]) * (f(i) + f(i + 1));
    return acc;
}

// Validated view of the inputs shared by the grid and slice transforms.
class Transformer {
public:
    Transformer(const RelativeDensityGrid& density, std::span<const double> ps)
        : rho_(density.values()), ps_(ps) {
        const auto& xs = density.xs();
        if (xs.size() < 2) throw InvalidArgument("density grid needs at least two points");
        x0_ = xs.front();
        h_ = (xs.back() - xs.front()) / static_cast<double>(xs.size() - 1);
        for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
            if (std::abs(xs[i + 1] - xs[i] - h_) > 1e-9 * h_)
                throw InvalidArgument("Wigner transform needs a uniform position grid");
        }

        const double scale = rho_.cwiseAbs().maxCoeff();
        if (density.hermiticity_defect() > 1e-10 * std::max(scale, 1.0))
            throw InvalidArgument("Wigner transform needs a Hermitian density matrix");

        if (ps_.empty()) throw InvalidArgument("momentum grid is empty");
        if (!std::is_sorted(ps_.begin(), ps_.end()))
            throw InvalidArgument("momentum grid must be ascending");

        // Samples in the relative coordinate y are spaced 2h apart.
        const double pmax = std::max(std::abs(ps_.front()), std::abs(ps_.back()));
        if (pmax * 2.0 * h_ > std::numbers::pi) {
            std::ostringstream msg;
            msg << "momentum grid reaches |p| = " << pmax << " beyond the Nyquist limit "
                << std::numbers::pi / (2.0 * h_) << " of the position spacing";
            throw ResolutionError(msg.str());
        }

        const auto n = static_cast<std::size_t>(rho_.rows());
        phases_.resize(static_cast<Eigen::Index>(ps_.size()), static_cast<Eigen::Index>(n + 1));
        for (std::size_t m = 0; m < ps_.size(); ++m)
            for (std::size_t j = 0; j <= n; ++j)
                phases_(m, j) = std::polar(1.0, -ps_[m] * 2.0 * h_ * static_cast<double>(j));
    }

    double spacing() const noexcept { return h_; }

    // Fills `out` with W(x, ps[m]); returns the largest discarded |Im W|.
    double row(double x, std::span<double> out) const {
        const double u = (x - x0_) / h_;
        const double base = std::floor(u);
        double frac = u - base;
        auto i0 = static_cast<long>(base);
        if (frac < 1e-12) frac = 0.0;
        if (frac > 1.0 - 1e-12) {
            frac = 0.0;
            ++i0;
        }

        const long n = static_cast<long>(rho_.rows());
        const auto at = [&](long r, long c) -> cd {
            if (r < 0 || c < 0 || r >= n || c >= n) return {};
            return rho_(r, c);
        };
        // rho(x + j h, x - j h): both coordinates share the fractional offset.
        const auto sample = [&](long j) -> cd {
            const long r = i0 + j;
            const long c = i0 - j;
            if (frac == 0.0) return at(r, c);
            const double g = 1.0 - frac;
            return g * g * at(r, c) + frac * g * (at(r + 1, c) + at(r, c + 1)) +
                   frac * frac * at(r + 1, c + 1);
        };

        // Beyond this offset one of the two coordinates has left the grid.
        const long reach = std::clamp(std::min(i0, n - 1 - i0) + 1, 0L, n);
        std::vector<cd> plus(static_cast<std::size_t>(reach) + 1);
        std::vector<cd> minus(static_cast<std::size_t>(reach) + 1);
        for (long j = 0; j <= reach; ++j) {
            plus[static_cast<std::size_t>(j)] = sample(j);
            minus[static_cast<std::size_t>(j)] = sample(-j);
        }

        // The integrand vanishes off the grid, so the plain sum is the
        // trapezoid rule on the zero-extended integrand.
        const double weight = 2.0 * h_ / (2.0 * std::numbers::pi);
        double residue = 0.0;
        for (std::size_t m = 0; m < ps_.size(); ++m) {
            cd acc = plus[0];
            const auto pm = static_cast<Eigen::Index>(m);
            for (long j = 1; j <= reach && j <= n; ++j) {
                const cd e = phases_(pm, j);
                const auto k = static_cast<std::size_t>(j);
                acc += plus[k] * e + minus[k] * std::conj(e);
            }
            out[m] = weight * acc.real();
            residue = std::max(residue, weight * std::abs(acc.imag()));
        }
        return residue;
    }

private:
    const Eigen::MatrixXcd& rho_;
    std::span<const double> ps_;
    double x0_ = 0.0;
    double h_ = 0.0;
    Eigen::MatrixXcd phases_;
};

}  // namespace

std::vector<double> WignerGrid::position_marginal() const {
    std::vector<double> out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const auto r = static_cast<Eigen::Index>(i);
        out[i] = trapezoid(ps, [&](std::size_t m) { return values(r, static_cast<Eigen::Index>(m)); });
    }
    return out;
}

double WignerGrid::integral() const {
    const auto marginal = position_marginal();
    return trapezoid(xs, [&](std::size_t i) { return marginal[i]; });
}

WignerGrid wigner_transform(const RelativeDensityGrid& density, std::span<const double> ps) {
    const Transformer transform(density, ps);

    WignerGrid grid;
    grid.xs = density.xs();
    grid.ps.assign(ps.begin(), ps.end());
    grid.time = density.time();
    grid.values.resize(static_cast<Eigen::Index>(grid.xs.size()), static_cast<Eigen::Index>(ps.size()));

    std::vector<double> row(ps.size());
    for (std::size_t i = 0; i < grid.xs.size(); ++i) {
        grid.imag_residue = std::max(grid.imag_residue, transform.row(grid.xs[i], row));
        for (std::size_t m = 0; m < ps.size(); ++m)
            grid.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(m)) = row[m];
    }
    grid.norm_defect = std::abs(grid.integral() - 1.0);
    return grid;
}

std::vector<double> wigner_slice(const RelativeDensityGrid& density, double x,
                                 std::span<const double> ps) {
    const Transformer transform(density, ps);
    std::vector<double> out(ps.size());
    transform.row(x, out);
    return out;
}

double fringe_amplitude(const RelativeDensityGrid& density, std::span<const double> ps) {
    const auto slice = wigner_slice(density, 0.0, ps);
    double amp = 0.0;
    for (double w : slice) amp = std::max(amp, std::abs(w));
    return amp;
}

std::vector<double> default_momentum_grid(double d, std::size_t n) {
    if (!(d > 0.0)) throw InvalidArgument("spread d must be positive");
    return uniform_grid(-4.0 / d, 4.0 / d, n);
}

}  // namespace ringcav
