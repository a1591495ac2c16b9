// numerics.hpp
// Uniform-grid quadrature and finite-difference kernels used by all
// state computations.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "qconcept/errors.hpp"

namespace qconcept {

using cdouble = std::complex<double>;

enum class quadrature_rule { simpson, trapezoid };

struct quadrature_result {
    cdouble value;
    quadrature_rule rule;
};

// Composite quadrature of uniformly spaced samples with spacing dx.
// Simpson requires an odd sample count (even number of panels).
inline cdouble integrate(std::span<const cdouble> samples, double dx,
                         quadrature_rule rule = quadrature_rule::simpson) {
    if (dx <= 0.0) throw std::invalid_argument("integrate: dx must be positive");
    const std::size_t n = samples.size();
    if (n < 3) throw bad_sample_count("integrate: need at least 3 samples");

    if (rule == quadrature_rule::simpson) {
        if (n % 2 == 0)
            throw bad_sample_count("integrate: simpson rule requires an odd sample count");
        cdouble acc = samples[0] + samples[n - 1];
        for (std::size_t i = 1; i + 1 < n; i += 2) acc += 4.0 * samples[i];
        for (std::size_t i = 2; i + 1 < n; i += 2) acc += 2.0 * samples[i];
        return acc * (dx / 3.0);
    }

    cdouble acc = 0.5 * (samples[0] + samples[n - 1]);
    for (std::size_t i = 1; i + 1 < n; ++i) acc += samples[i];
    return acc * dx;
}

inline double integrate_real(std::span<const double> samples, double dx,
                             quadrature_rule rule = quadrature_rule::simpson) {
    std::vector<cdouble> tmp(samples.begin(), samples.end());
    return integrate(tmp, dx, rule).real();
}

// Second-order central differences; one-sided second-order stencils at
// the two boundary points. Output length equals input length.
inline std::vector<cdouble> central_derivative(std::span<const cdouble> samples, double dx) {
    if (dx <= 0.0) throw std::invalid_argument("central_derivative: dx must be positive");
    const std::size_t n = samples.size();
    if (n < 3) throw bad_sample_count("central_derivative: need at least 3 samples");

    std::vector<cdouble> out(n);
    const double inv2dx = 1.0 / (2.0 * dx);
    out[0] = (-3.0 * samples[0] + 4.0 * samples[1] - samples[2]) * inv2dx;
    for (std::size_t i = 1; i + 1 < n; ++i)
        out[i] = (samples[i + 1] - samples[i - 1]) * inv2dx;
    out[n - 1] = (3.0 * samples[n - 1] - 4.0 * samples[n - 2] + samples[n - 3]) * inv2dx;
    return out;
}

}  // namespace qconcept
