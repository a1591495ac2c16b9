// fuzzy.hpp
// Fuzzy-metric-space baseline: t-norms, the indicator fuzzy metric,
// triangular memberships and the KM axiom checker. Implemented so the
// quantum-vs-fuzzy comparison is executable rather than rhetorical.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "qconcept/classifier.hpp"
#include "qconcept/errors.hpp"

namespace qconcept {

enum class t_norm { minimum, product, lukasiewicz };

inline const char* t_norm_name(t_norm t) {
    switch (t) {
        case t_norm::minimum: return "minimum";
        case t_norm::product: return "product";
        default: return "lukasiewicz";
    }
}

inline double apply_tnorm(t_norm t, double a, double b) {
    if (!(a >= 0.0 && a <= 1.0 && b >= 0.0 && b <= 1.0))
        throw std::domain_error("apply_tnorm: arguments must lie in [0,1]");
    switch (t) {
        case t_norm::minimum: return std::min(a, b);
        case t_norm::product: return a * b;
        default: return std::max(0.0, a + b - 1.0);
    }
}

// Indicator fuzzy metric over a classical base metric d:
// M(x,y,t) = 1 if d(x,y) < t, else 0. A fuzzy metric under the
// minimum t-norm.
class indicator_fuzzy_metric {
public:
    using base_metric_fn = std::function<double(double, double)>;

    indicator_fuzzy_metric()
        : base_([](double x, double y) { return std::abs(x - y); }) {}
    explicit indicator_fuzzy_metric(base_metric_fn base) : base_(std::move(base)) {}

    double base_metric(double x, double y) const { return base_(x, y); }

    double operator()(double x, double y, double t) const {
        if (t < 0.0) throw std::domain_error("indicator_fuzzy_metric: t must be >= 0");
        return base_(x, y) < t ? 1.0 : 0.0;
    }

private:
    base_metric_fn base_;
};

// max(0, 1 - |x - center| / half_width).
class triangular_membership {
public:
    triangular_membership(double center, double half_width)
        : center_(center), half_width_(half_width) {
        if (!(half_width > 0.0))
            throw std::invalid_argument("triangular_membership: half_width must be positive");
    }

    double center() const { return center_; }
    double half_width() const { return half_width_; }

    double operator()(double x) const {
        return std::max(0.0, 1.0 - std::abs(x - center_) / half_width_);
    }

private:
    double center_;
    double half_width_;
};

// Pointwise max union of membership degrees.
inline double membership_union(double a, double b) { return std::max(a, b); }

struct axiom_check {
    std::string name;
    bool passed = true;
    std::optional<std::string> counterexample;
};

struct km_axiom_report {
    std::vector<axiom_check> checks;

    bool all_passed() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const auto& c) { return c.passed; });
    }
};

namespace detail {
inline void record_failure(axiom_check& check, const std::string& witness) {
    if (check.passed) {
        check.passed = false;
        check.counterexample = witness;
    }
}
}  // namespace detail

// Evaluates the Kramosil-Michalek axioms on sampled (x,y,z,t,s) tuples.
// KM5 is checked structurally: M(x,y,.) must be a monotone 0->1 step in
// t (the indicator metric is right-continuous but not continuous at
// t = d(x,y), so epsilon-delta sampling would be the wrong test).
// Metric is any object with operator()(x, y, t) and base_metric(x, y);
// the test suites also pass deliberately broken metrics through here.
template <typename Metric>
km_axiom_report check_km_axioms(const Metric& m, t_norm tnorm,
                                std::span<const std::array<double, 5>> tuples) {
    axiom_check km1{"KM1 boundary M(x,y,0)=0"};
    axiom_check km2{"KM2 identity M(x,x,t)=1 for t>0"};
    axiom_check km3{"KM3 symmetry"};
    axiom_check km4{"KM4 fuzzy triangle inequality"};
    axiom_check km5{"KM5 monotone step in t"};

    for (const auto& [x, y, z, t, s] : tuples) {
        const double tp = std::abs(t) + 1e-6;  // strictly positive tolerances
        const double sp = std::abs(s) + 1e-6;
        const auto witness = [&] {
            return "x=" + std::to_string(x) + " y=" + std::to_string(y) +
                   " z=" + std::to_string(z) + " t=" + std::to_string(tp) +
                   " s=" + std::to_string(sp);
        };

        if (m(x, y, 0.0) != 0.0) detail::record_failure(km1, witness());
        if (m(x, x, tp) != 1.0) detail::record_failure(km2, witness());
        if (m(x, y, tp) != m(y, x, tp)) detail::record_failure(km3, witness());
        if (apply_tnorm(tnorm, m(x, y, tp), m(y, z, sp)) > m(x, z, tp + sp))
            detail::record_failure(km4, witness());

        // Step behavior: 0 at and below d(x,y), 1 above.
        const double d = m.base_metric(x, y);
        if (m(x, y, d) != 0.0 || m(x, y, d + 1.0) != 1.0 ||
            m(x, y, d / 2.0) > m(x, y, d * 2.0 + 1e-9))
            detail::record_failure(km5, witness());
    }

    return {{km1, km2, km3, km4, km5}};
}

inline std::vector<std::array<double, 5>> sample_km_tuples(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto uniform = [&](double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    };
    std::vector<std::array<double, 5>> tuples;
    tuples.reserve(count);
    for (int i = 0; i < count; ++i)
        tuples.push_back({uniform(-10, 10), uniform(-10, 10), uniform(-10, 10),
                          uniform(0, 5), uniform(0, 5)});
    return tuples;
}

struct named_membership {
    std::string name;
    triangular_membership membership;
};

// Membership values normalized the same way as the Born classifier so
// the two reports are directly comparable side by side. The memberships
// themselves carry no probabilistic meaning.
inline classification_result fuzzy_classify(std::span<const named_membership> memberships,
                                            double x) {
    if (memberships.empty()) throw empty_registry("fuzzy_classify: no memberships");
    std::vector<score_entry> entries;
    entries.reserve(memberships.size());
    for (const auto& m : memberships)
        entries.push_back({m.name, m.membership(x), 0.0});
    return classify_scores(std::move(entries));
}

}  // namespace qconcept
