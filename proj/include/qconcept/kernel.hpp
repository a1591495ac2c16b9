// kernel.hpp
// Tensor-product composition of per-axis Gaussian states and the
// RBF-kernel reading of the squared overlap.

#pragma once

#include <cmath>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "qconcept/errors.hpp"
#include "qconcept/states.hpp"

namespace qconcept {

// Separable multi-axis concept: one Gaussian factor per feature axis.
class product_state {
public:
    explicit product_state(std::vector<gaussian_state> factors)
        : factors_(std::move(factors)) {
        if (factors_.empty())
            throw std::invalid_argument("product_state: needs at least one factor");
    }

    std::span<const gaussian_state> factors() const { return factors_; }
    std::size_t axes() const { return factors_.size(); }

private:
    std::vector<gaussian_state> factors_;
};

// Squared overlap of two product states: the product over axes of the
// per-axis squared overlaps.
inline double product_overlap(const product_state& a, const product_state& b) {
    if (a.axes() != b.axes())
        throw dimension_mismatch("product_overlap: factor counts differ (" +
                                 std::to_string(a.axes()) + " vs " +
                                 std::to_string(b.axes()) + ")");
    double result = 1.0;
    for (std::size_t i = 0; i < a.axes(); ++i) {
        const double amp = inner_product_gaussian(a.factors()[i], b.factors()[i]);
        result *= amp * amp;
    }
    return result;
}

// k(x, c) = exp(-(x - mu_c)^2 / (2 sigma_c^2)), in (0, 1].
inline double rbf_kernel(double x, const gaussian_state& center) {
    const double d = x - center.mu();
    const double expo = -d * d / (2.0 * center.sigma() * center.sigma());
    return expo < underflow_exponent ? 0.0 : std::exp(expo);
}

struct named_state {
    std::string name;
    gaussian_state state;
};

// Gram matrix of squared overlaps. Symmetric with unit diagonal and
// positive semidefinite (it is a Gram matrix of unit vectors).
struct kernel_matrix_t {
    std::vector<std::string> labels;
    std::vector<std::vector<double>> entries;  // row-major, square
};

inline kernel_matrix_t kernel_matrix(std::span<const named_state> states) {
    if (states.empty()) throw std::invalid_argument("kernel_matrix: no states");
    std::unordered_set<std::string> seen;
    for (const auto& s : states)
        if (!seen.insert(s.name).second)
            throw duplicate_name("kernel_matrix: duplicate name '" + s.name + "'");

    kernel_matrix_t km;
    for (const auto& s : states) km.labels.push_back(s.name);
    const std::size_t n = states.size();
    km.entries.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        km.entries[i][i] = 1.0;
        for (std::size_t j = i + 1; j < n; ++j) {
            const double amp = inner_product_gaussian(states[i].state, states[j].state);
            km.entries[i][j] = km.entries[j][i] = amp * amp;
        }
    }
    return km;
}

struct overlap_rbf_decomposition {
    double overlap_sq;  // squared Gaussian overlap
    double rbf_form;    // RBF kernel with bandwidth sigma_a^2 + sigma_b^2
    double prefactor;   // width-mismatch factor; 1 when sigma_a == sigma_b
};

// Splits the squared overlap into prefactor * RBF form, making the
// kernel equivalence explicit: overlap_sq == prefactor * rbf_form, and
// for equal widths the squared overlap is exactly an RBF kernel with
// doubled bandwidth.
inline overlap_rbf_decomposition overlap_equals_rbf_check(const gaussian_state& a,
                                                          const gaussian_state& b) {
    const double sa2 = a.sigma() * a.sigma();
    const double sb2 = b.sigma() * b.sigma();
    const double amp = inner_product_gaussian(a, b);
    const gaussian_state combined(b.mu(), std::sqrt(sa2 + sb2));
    return {amp * amp, rbf_kernel(a.mu(), combined),
            2.0 * a.sigma() * b.sigma() / (sa2 + sb2)};
}

}  // namespace qconcept
