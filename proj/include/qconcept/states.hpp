// states.hpp
// Concept states as normalized wavefunctions: analytic Gaussians, grid
// discretizations, inner products, the Hilbert-norm metric and the
// Gaussian uncertainty product (hbar = 1).

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "qconcept/errors.hpp"
#include "qconcept/numerics.hpp"

namespace qconcept {

// Widths below this are delta-like and unrepresentable on practical grids.
inline constexpr double min_sigma = 1e-8;

// Exponents below this would produce subnormal noise; the overlap is
// reported as exactly zero instead.
inline constexpr double underflow_exponent = -700.0;

// Normalized Gaussian wavefunction, parameterized by center and width.
class gaussian_state {
public:
    gaussian_state(double mu, double sigma) : mu_(mu), sigma_(sigma) {
        if (!(sigma >= min_sigma))
            throw std::invalid_argument("gaussian_state: sigma must be >= 1e-8, got " +
                                        std::to_string(sigma));
    }

    double mu() const { return mu_; }
    double sigma() const { return sigma_; }

private:
    double mu_;
    double sigma_;
};

// A concept (mu, sigma) carries two normalized Gaussian profiles that
// differ in how sigma is read:
//
//   plot profile     psi(x) = (pi sigma^2)^(-1/4) exp(-(x-mu)^2 / (2 sigma^2))
//   overlap profile  phi(x) = (2 pi sigma^2)^(-1/4) exp(-(x-mu)^2 / (4 sigma^2))
//
// The plot profile takes sigma as the Gaussian width of the
// wavefunction itself; its density peaks at 1/sqrt(pi sigma^2). The
// overlap profile takes sigma as the standard deviation of the
// probability density |phi|^2; with that reading the squared overlap
// of two states is the width prefactor times an RBF kernel. Inner
// products, distances and classification scores use the overlap
// profile; figure data and the uncertainty report use the plot
// profile. Both conventions are needed to reproduce the reference
// numbers this library is built around, which mix the two.

// Plot-profile evaluation; real-valued.
inline cdouble evaluate_gaussian(const gaussian_state& s, double x) {
    const double d = x - s.mu();
    const double expo = -d * d / (2.0 * s.sigma() * s.sigma());
    if (expo < underflow_exponent) return {0.0, 0.0};
    const double prefactor = std::pow(std::numbers::pi * s.sigma() * s.sigma(), -0.25);
    return {prefactor * std::exp(expo), 0.0};
}

// Overlap-profile evaluation; real-valued. Quadrature of products of
// these reproduces inner_product_gaussian.
inline cdouble overlap_profile(const gaussian_state& s, double x) {
    const double d = x - s.mu();
    const double expo = -d * d / (4.0 * s.sigma() * s.sigma());
    if (expo < underflow_exponent) return {0.0, 0.0};
    const double prefactor =
        std::pow(2.0 * std::numbers::pi * s.sigma() * s.sigma(), -0.25);
    return {prefactor * std::exp(expo), 0.0};
}

// Uniform grid on [x_min, x_max]; odd point count so Simpson applies.
class grid {
public:
    grid(double x_min, double x_max, int n_points)
        : x_min_(x_min), x_max_(x_max), n_points_(n_points) {
        if (!(x_max > x_min))
            throw std::invalid_argument("grid: x_max must exceed x_min");
        if (n_points < 3 || n_points % 2 == 0)
            throw std::invalid_argument("grid: n_points must be odd and >= 3");
    }

    double x_min() const { return x_min_; }
    double x_max() const { return x_max_; }
    int n_points() const { return n_points_; }
    double dx() const { return (x_max_ - x_min_) / (n_points_ - 1); }
    double x(int i) const { return x_min_ + i * dx(); }

    bool operator==(const grid&) const = default;

private:
    double x_min_;
    double x_max_;
    int n_points_;
};

// Smallest grid covering [mu - 8 sigma, mu + 8 sigma] for every state.
// Gaussian tails beyond 8 sigma are below 1e-14.
inline grid default_grid(std::span<const gaussian_state> states, int n_points = 4097) {
    if (states.empty()) throw std::invalid_argument("default_grid: no states");
    double lo = states[0].mu() - 8.0 * states[0].sigma();
    double hi = states[0].mu() + 8.0 * states[0].sigma();
    for (const auto& s : states) {
        lo = std::min(lo, s.mu() - 8.0 * s.sigma());
        hi = std::max(hi, s.mu() + 8.0 * s.sigma());
    }
    return grid(lo, hi, n_points);
}

// Discretized complex wavefunction; renormalized so the Simpson
// quadrature of |amplitude|^2 equals 1.
class grid_state {
public:
    grid_state(grid g, std::vector<cdouble> amplitudes)
        : grid_(g), amplitudes_(std::move(amplitudes)) {
        if (static_cast<int>(amplitudes_.size()) != grid_.n_points())
            throw std::invalid_argument("grid_state: amplitude count must match grid");
        normalize();
    }

    const grid& get_grid() const { return grid_; }
    std::span<const cdouble> amplitudes() const { return amplitudes_; }

    double squared_norm() const {
        std::vector<cdouble> density(amplitudes_.size());
        for (std::size_t i = 0; i < amplitudes_.size(); ++i)
            density[i] = std::norm(amplitudes_[i]);
        return integrate(density, grid_.dx()).real();
    }

private:
    void normalize() {
        const double n2 = squared_norm();
        if (n2 < 1e-24) throw zero_vector("grid_state: cannot normalize a zero vector");
        const double inv = 1.0 / std::sqrt(n2);
        for (auto& a : amplitudes_) a *= inv;
    }

    grid grid_;
    std::vector<cdouble> amplitudes_;
};

namespace detail {
inline void require_span(const gaussian_state& s, const grid& g) {
    if (g.x_min() > s.mu() - 6.0 * s.sigma() || g.x_max() < s.mu() + 6.0 * s.sigma())
        throw grid_too_narrow("discretize: grid [" + std::to_string(g.x_min()) + ", " +
                              std::to_string(g.x_max()) + "] does not cover mu +/- 6 sigma");
}
}  // namespace detail

// Samples the overlap profile on the grid and renormalizes. The grid
// must cover [mu - 6 sigma, mu + 6 sigma] or the truncation error is
// unacceptable.
inline grid_state discretize(const gaussian_state& s, const grid& g) {
    detail::require_span(s, g);
    std::vector<cdouble> amps(g.n_points());
    for (int i = 0; i < g.n_points(); ++i) amps[i] = overlap_profile(s, g.x(i));
    return grid_state(g, std::move(amps));
}

// Samples the plot profile instead; used for figure-data emission.
inline grid_state discretize_plot(const gaussian_state& s, const grid& g) {
    detail::require_span(s, g);
    std::vector<cdouble> amps(g.n_points());
    for (int i = 0; i < g.n_points(); ++i) amps[i] = evaluate_gaussian(s, g.x(i));
    return grid_state(g, std::move(amps));
}

// Closed-form overlap amplitude of two Gaussians; its square is the
// Born-rule score. Symmetric, in (0, 1].
inline double inner_product_gaussian(const gaussian_state& a, const gaussian_state& b) {
    const double sa2 = a.sigma() * a.sigma();
    const double sb2 = b.sigma() * b.sigma();
    const double d = a.mu() - b.mu();
    const double expo = -d * d / (4.0 * (sa2 + sb2));
    if (expo < underflow_exponent) return 0.0;
    return std::sqrt(2.0 * a.sigma() * b.sigma() / (sa2 + sb2)) * std::exp(expo);
}

// Quadrature approximation of integral conj(a) * b. Conjugate-symmetric.
inline cdouble inner_product_grid(const grid_state& a, const grid_state& b) {
    if (!(a.get_grid() == b.get_grid()))
        throw grid_mismatch("inner_product_grid: states live on different grids");
    const auto av = a.amplitudes();
    const auto bv = b.amplitudes();
    std::vector<cdouble> integrand(av.size());
    for (std::size_t i = 0; i < av.size(); ++i)
        integrand[i] = std::conj(av[i]) * bv[i];
    return integrate(integrand, a.get_grid().dx());
}

namespace detail {
inline double distance_from_overlap(double overlap_term) {
    // Clamp against tiny negative arguments from roundoff.
    return std::sqrt(std::max(0.0, 2.0 - 2.0 * overlap_term));
}
}  // namespace detail

// ||a - b|| for normalized states: sqrt(2 - 2 Re<a|b>).
inline double hilbert_distance(const gaussian_state& a, const gaussian_state& b) {
    return detail::distance_from_overlap(inner_product_gaussian(a, b));
}

inline double hilbert_distance(const grid_state& a, const grid_state& b) {
    return detail::distance_from_overlap(inner_product_grid(a, b).real());
}

// sqrt(2 - 2 |<a|b>|); zero iff the states agree up to a global phase.
inline double phase_invariant_distance(const gaussian_state& a, const gaussian_state& b) {
    return detail::distance_from_overlap(std::abs(inner_product_gaussian(a, b)));
}

inline double phase_invariant_distance(const grid_state& a, const grid_state& b) {
    return detail::distance_from_overlap(std::abs(inner_product_grid(a, b)));
}

struct uncertainty_report {
    double delta_x;
    double delta_p;
    double product;
};

// Position/momentum spreads of the plot profile at hbar = 1. Gaussians
// saturate the Heisenberg bound: the product is exactly 1/2.
inline uncertainty_report uncertainty_gaussian(const gaussian_state& s) {
    const double dx = s.sigma() / std::numbers::sqrt2;
    const double dp = 1.0 / (std::numbers::sqrt2 * s.sigma());
    return {dx, dp, dx * dp};
}

}  // namespace qconcept
