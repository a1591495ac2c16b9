// errors.hpp
// Exception types shared across the qconcept library.

#pragma once

#include <stdexcept>
#include <string>

namespace qconcept {

// Two grid states were combined but live on different grids.
struct grid_mismatch : std::invalid_argument {
    explicit grid_mismatch(const std::string& what) : std::invalid_argument(what) {}
};

// A grid does not cover enough of a Gaussian's support to discretize it.
struct grid_too_narrow : std::invalid_argument {
    explicit grid_too_narrow(const std::string& what) : std::invalid_argument(what) {}
};

// A superposition cancelled identically and cannot be normalized.
struct zero_vector : std::invalid_argument {
    explicit zero_vector(const std::string& what) : std::invalid_argument(what) {}
};

// Sample count incompatible with the requested quadrature rule.
struct bad_sample_count : std::invalid_argument {
    explicit bad_sample_count(const std::string& what) : std::invalid_argument(what) {}
};

struct dimension_mismatch : std::invalid_argument {
    explicit dimension_mismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct duplicate_name : std::invalid_argument {
    explicit duplicate_name(const std::string& what) : std::invalid_argument(what) {}
};

struct empty_registry : std::invalid_argument {
    explicit empty_registry(const std::string& what) : std::invalid_argument(what) {}
};

// Config file failed parsing or schema validation.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qconcept
