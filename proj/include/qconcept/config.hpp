// config.hpp
// Concept configuration: JSON ingestion with strict schema validation.
// Misconfigured sigma or width silently corrupts every downstream
// number, so unknown keys and out-of-range values are hard errors.

#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "qconcept/errors.hpp"
#include "qconcept/fuzzy.hpp"
#include "qconcept/states.hpp"

namespace qconcept {

struct concept_config_entry {
    std::string name;
    double mu;
    double sigma;
};

struct membership_config_entry {
    std::string name;
    double center;
    double half_width;
};

struct grid_config {
    double x_min;
    double x_max;
    int n_points;
};

struct concept_config {
    std::vector<concept_config_entry> concepts;
    std::optional<grid_config> grid_spec;
    std::vector<membership_config_entry> memberships;
    // Paper's ambiguous default object.
    double object_mu = 3.0;
    double object_sigma = 2.0;
};

namespace detail {

inline void reject_unknown_keys(const nlohmann::json& obj, const std::string& where,
                                const std::unordered_set<std::string>& allowed) {
    for (const auto& [key, _] : obj.items())
        if (!allowed.contains(key))
            throw config_error(where + ": unknown key '" + key + "'");
}

inline double require_number(const nlohmann::json& obj, const std::string& where,
                             const std::string& key) {
    if (!obj.contains(key)) throw config_error(where + ": missing key '" + key + "'");
    if (!obj[key].is_number()) throw config_error(where + ": '" + key + "' must be a number");
    return obj[key].get<double>();
}

inline std::string require_name(const nlohmann::json& obj, const std::string& where) {
    if (!obj.contains("name") || !obj["name"].is_string() ||
        obj["name"].get<std::string>().empty())
        throw config_error(where + ": requires a non-empty string 'name'");
    return obj["name"].get<std::string>();
}

}  // namespace detail

inline concept_config validate_config(const nlohmann::json& doc) {
    if (!doc.is_object()) throw config_error("config: top level must be an object");
    detail::reject_unknown_keys(doc, "config",
                                {"concepts", "object", "grid", "memberships"});

    concept_config cfg;

    if (!doc.contains("concepts") || !doc["concepts"].is_array() || doc["concepts"].empty())
        throw config_error("config: requires a non-empty 'concepts' array");
    std::unordered_set<std::string> names;
    for (const auto& c : doc["concepts"]) {
        const std::string name = detail::require_name(c, "concepts entry");
        const std::string where = "concept '" + name + "'";
        detail::reject_unknown_keys(c, where, {"name", "mu", "sigma"});
        if (!names.insert(name).second)
            throw config_error("config: duplicate concept name '" + name + "'");
        const double mu = detail::require_number(c, where, "mu");
        const double sigma = detail::require_number(c, where, "sigma");
        if (!(sigma > 0.0)) throw config_error(where + ": sigma must be positive");
        cfg.concepts.push_back({name, mu, sigma});
    }

    if (doc.contains("object")) {
        detail::reject_unknown_keys(doc["object"], "object", {"mu", "sigma"});
        cfg.object_mu = detail::require_number(doc["object"], "object", "mu");
        cfg.object_sigma = detail::require_number(doc["object"], "object", "sigma");
        if (!(cfg.object_sigma > 0.0)) throw config_error("object: sigma must be positive");
    }

    if (doc.contains("grid")) {
        const auto& g = doc["grid"];
        detail::reject_unknown_keys(g, "grid", {"x_min", "x_max", "n_points"});
        grid_config gc;
        gc.x_min = detail::require_number(g, "grid", "x_min");
        gc.x_max = detail::require_number(g, "grid", "x_max");
        if (!g.contains("n_points") || !g["n_points"].is_number_integer())
            throw config_error("grid: 'n_points' must be an integer");
        gc.n_points = g["n_points"].get<int>();
        if (!(gc.x_max > gc.x_min)) throw config_error("grid: x_max must exceed x_min");
        if (gc.n_points < 3 || gc.n_points % 2 == 0)
            throw config_error("grid: n_points must be odd and >= 3");
        cfg.grid_spec = gc;
    }

    if (doc.contains("memberships")) {
        if (!doc["memberships"].is_array())
            throw config_error("config: 'memberships' must be an array");
        std::unordered_set<std::string> mnames;
        for (const auto& m : doc["memberships"]) {
            const std::string name = detail::require_name(m, "memberships entry");
            const std::string where = "membership '" + name + "'";
            detail::reject_unknown_keys(m, where, {"name", "center", "half_width"});
            if (!mnames.insert(name).second)
                throw config_error("config: duplicate membership name '" + name + "'");
            const double center = detail::require_number(m, where, "center");
            const double half_width = detail::require_number(m, where, "half_width");
            if (!(half_width > 0.0))
                throw config_error(where + ": half_width must be positive");
            cfg.memberships.push_back({name, center, half_width});
        }
    }

    return cfg;
}

inline concept_config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file: " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw config_error(path + ": " + e.what());
    }
    return validate_config(doc);
}

inline nlohmann::json config_to_json(const concept_config& cfg) {
    nlohmann::json doc;
    doc["concepts"] = nlohmann::json::array();
    for (const auto& c : cfg.concepts)
        doc["concepts"].push_back({{"name", c.name}, {"mu", c.mu}, {"sigma", c.sigma}});
    doc["object"] = {{"mu", cfg.object_mu}, {"sigma", cfg.object_sigma}};
    if (cfg.grid_spec)
        doc["grid"] = {{"x_min", cfg.grid_spec->x_min},
                       {"x_max", cfg.grid_spec->x_max},
                       {"n_points", cfg.grid_spec->n_points}};
    if (!cfg.memberships.empty()) {
        doc["memberships"] = nlohmann::json::array();
        for (const auto& m : cfg.memberships)
            doc["memberships"].push_back({{"name", m.name},
                                          {"center", m.center},
                                          {"half_width", m.half_width}});
    }
    return doc;
}

inline std::vector<gaussian_state> config_states(const concept_config& cfg) {
    std::vector<gaussian_state> states;
    for (const auto& c : cfg.concepts) states.emplace_back(c.mu, c.sigma);
    return states;
}

}  // namespace qconcept
