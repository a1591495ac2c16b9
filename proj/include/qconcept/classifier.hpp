// classifier.hpp
// Born-rule classification of an input state against a registry of
// named concept states, plus superpositions and interference.

#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qconcept/errors.hpp"
#include "qconcept/states.hpp"

namespace qconcept {

using state_variant = std::variant<gaussian_state, grid_state>;

// Named concept state. Names are unique keys within a registry.
struct concept_entry {
    std::string name;
    state_variant state;
};

// Raw-score ties closer than this are reported as TIE, never resolved.
inline constexpr double tie_tolerance = 1e-12;

struct score_entry {
    std::string name;
    double raw_score;    // |<psi_C|psi_obj>|^2
    double probability;  // raw / sum(raw), or 0 when all raws vanish
};

// Scores sorted by name; winners holds one name, or several on a tie
// (lexicographic order).
struct classification_result {
    std::vector<score_entry> entries;
    std::vector<std::string> winners;

    bool is_tie() const { return winners.size() > 1; }
};

// |<concept|object>|^2. Closed form for two Gaussians; quadrature on a
// shared grid otherwise (Gaussians are discretized onto the grid first).
inline double raw_score(const state_variant& concept_state, const state_variant& object) {
    if (std::holds_alternative<gaussian_state>(concept_state) &&
        std::holds_alternative<gaussian_state>(object)) {
        const double amp = inner_product_gaussian(std::get<gaussian_state>(concept_state),
                                                  std::get<gaussian_state>(object));
        return amp * amp;
    }
    const auto to_grid = [](const state_variant& v, const grid& g) {
        if (const auto* gs = std::get_if<grid_state>(&v)) return *gs;
        return discretize(std::get<gaussian_state>(v), g);
    };
    const grid& g = std::holds_alternative<grid_state>(concept_state)
                        ? std::get<grid_state>(concept_state).get_grid()
                        : std::get<grid_state>(object).get_grid();
    return std::norm(inner_product_grid(to_grid(concept_state, g), to_grid(object, g)));
}

// Normalizes raw scores over the supplied registry (closed world) and
// picks the winner(s). All-zero raw scores yield all-zero probabilities
// and a tie over every name.
inline classification_result classify_scores(std::vector<score_entry> entries) {
    if (entries.empty()) throw empty_registry("classify: registry is empty");
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.name < b.name; });

    double total = 0.0;
    for (const auto& e : entries) total += e.raw_score;
    for (auto& e : entries)
        e.probability = total > 0.0 ? e.raw_score / total : 0.0;

    double best = 0.0;
    for (const auto& e : entries) best = std::max(best, e.raw_score);
    std::vector<std::string> winners;
    for (const auto& e : entries)
        if (total == 0.0 || best - e.raw_score < tie_tolerance) winners.push_back(e.name);
    return {std::move(entries), std::move(winners)};
}

inline classification_result classify(std::span<const concept_entry> registry,
                                      const state_variant& object) {
    if (registry.empty()) throw empty_registry("classify: registry is empty");
    std::vector<score_entry> entries;
    entries.reserve(registry.size());
    for (const auto& c : registry)
        entries.push_back({c.name, raw_score(c.state, object), 0.0});
    return classify_scores(std::move(entries));
}

// One term of a superposition: coefficient times a grid state.
struct weighted_component {
    cdouble coefficient;
    grid_state state;
};

// Pointwise complex linear combination, renormalized to unit norm.
// Throws zero_vector when the components cancel identically.
inline grid_state superpose(std::span<const weighted_component> components) {
    if (components.empty()) throw std::invalid_argument("superpose: no components");
    const grid& g = components[0].state.get_grid();
    std::vector<cdouble> amps(g.n_points(), cdouble{0.0, 0.0});
    for (const auto& [coeff, state] : components) {
        if (!(state.get_grid() == g))
            throw grid_mismatch("superpose: components live on different grids");
        const auto sv = state.amplitudes();
        for (std::size_t i = 0; i < sv.size(); ++i) amps[i] += coeff * sv[i];
    }
    return grid_state(g, std::move(amps));  // throws zero_vector if cancelled
}

struct interference_scores {
    double constructive;  // equal-phase superposition score
    double dephased;      // score with relative phase applied to b
};

// Scores the object against (a + b) and against (a + e^{i phase} b).
inline interference_scores interference_demo(const state_variant& object, const grid_state& a,
                                             const grid_state& b, double phase) {
    const std::vector<weighted_component> equal{{{1.0, 0.0}, a}, {{1.0, 0.0}, b}};
    const std::vector<weighted_component> shifted{{{1.0, 0.0}, a},
                                                  {std::polar(1.0, phase), b}};
    return {raw_score(state_variant{superpose(equal)}, object),
            raw_score(state_variant{superpose(shifted)}, object)};
}

}  // namespace qconcept
