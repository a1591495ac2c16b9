// property_checks.hpp
// Seeded randomized axiom suites: metric axioms for the Hilbert-norm
// distance, t-norm axioms, and the KM fuzzy-metric axioms. Used by the
// metric-check CLI command and by the test suites.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "qconcept/fuzzy.hpp"
#include "qconcept/states.hpp"

namespace qconcept {

// Deterministic uniform doubles decoupled from libstdc++'s
// distribution internals, so seeded runs are bit-stable.
class uniform_sampler {
public:
    explicit uniform_sampler(std::uint64_t seed) : rng_(seed) {}

    double next(double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(rng_() >> 11) * 0x1.0p-53);
    }

    gaussian_state next_state(double mu_lo = -5.0, double mu_hi = 10.0,
                              double sigma_lo = 0.5, double sigma_hi = 3.0) {
        const double mu = next(mu_lo, mu_hi);
        return {mu, next(sigma_lo, sigma_hi)};
    }

private:
    std::mt19937_64 rng_;
};

// Metric axioms for hilbert_distance on random Gaussian state triples.
// With inject_fault the symmetry check is deliberately broken; the test
// harness uses this to verify failure reporting.
inline km_axiom_report check_metric_axioms(int trials, std::uint64_t seed,
                                           bool inject_fault = false) {
    axiom_check nonneg{"metric non-negativity"};
    axiom_check identity{"metric identity of indiscernibles"};
    axiom_check symmetry{"metric symmetry"};
    axiom_check triangle{"metric triangle inequality"};

    uniform_sampler sampler(seed);
    for (int i = 0; i < trials; ++i) {
        const gaussian_state a = sampler.next_state();
        const gaussian_state b = sampler.next_state();
        const gaussian_state c = sampler.next_state();
        const auto witness = [&] {
            return "a=(" + std::to_string(a.mu()) + "," + std::to_string(a.sigma()) +
                   ") b=(" + std::to_string(b.mu()) + "," + std::to_string(b.sigma()) +
                   ") c=(" + std::to_string(c.mu()) + "," + std::to_string(c.sigma()) + ")";
        };

        const double dab = hilbert_distance(a, b);
        const double dba = hilbert_distance(b, a) + (inject_fault ? 1e-6 : 0.0);
        const double dac = hilbert_distance(a, c);
        const double dbc = hilbert_distance(b, c);

        if (dab < 0.0) detail::record_failure(nonneg, witness());
        if (hilbert_distance(a, a) > 1e-9) detail::record_failure(identity, witness());
        // Distinct parameters must give a strictly positive distance.
        if ((std::abs(a.mu() - b.mu()) > 1e-6 || std::abs(a.sigma() - b.sigma()) > 1e-6) &&
            dab <= 1e-9)
            detail::record_failure(identity, witness());
        if (std::abs(dab - dba) > 1e-12) detail::record_failure(symmetry, witness());
        if (dac > dab + dbc + 1e-9) detail::record_failure(triangle, witness());
    }
    return {{nonneg, identity, symmetry, triangle}};
}

// T-norm axioms for all three kinds on random tuples in [0,1].
inline km_axiom_report check_tnorm_axioms(int trials, std::uint64_t seed) {
    axiom_check assoc{"t-norm associativity"};
    axiom_check comm{"t-norm commutativity"};
    axiom_check mono{"t-norm monotonicity"};
    axiom_check unit{"t-norm unit"};

    uniform_sampler sampler(seed);
    for (int i = 0; i < trials; ++i) {
        const double a = sampler.next(0, 1);
        const double b = sampler.next(0, 1);
        const double c = sampler.next(0, 1);
        for (const t_norm t : {t_norm::minimum, t_norm::product, t_norm::lukasiewicz}) {
            const auto witness = [&] {
                return std::string(t_norm_name(t)) + " a=" + std::to_string(a) +
                       " b=" + std::to_string(b) + " c=" + std::to_string(c);
            };
            if (std::abs(apply_tnorm(t, apply_tnorm(t, a, b), c) -
                         apply_tnorm(t, a, apply_tnorm(t, b, c))) > 1e-12)
                detail::record_failure(assoc, witness());
            if (std::abs(apply_tnorm(t, a, b) - apply_tnorm(t, b, a)) > 1e-12)
                detail::record_failure(comm, witness());
            // a <= c implies a*b <= c*b.
            const double lo = std::min(a, c), hi = std::max(a, c);
            if (apply_tnorm(t, lo, b) > apply_tnorm(t, hi, b) + 1e-12)
                detail::record_failure(mono, witness());
            if (std::abs(apply_tnorm(t, a, 1.0) - a) > 1e-12)
                detail::record_failure(unit, witness());
        }
    }
    return {{assoc, comm, mono, unit}};
}

}  // namespace qconcept
