#pragma once

#include <stdexcept>
#include <string>

namespace hoc {

/// Malformed caller input: wrong dimensions, bad indices, invalid fixtures.
struct input_error : std::invalid_argument {
    explicit input_error(const std::string& msg) : std::invalid_argument(msg) {}
};

/// A feasibility bound was exceeded (ambient too large, group too big).
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Requested quotient U/W with W not contained in U.
struct containment_error : input_error {
    explicit containment_error(const std::string& msg) : input_error(msg) {}
};

/// A point left the region where q-expansions are certified to converge.
struct evaluation_domain_error : std::runtime_error {
    explicit evaluation_domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Adaptive refinement or rewriting failed to settle within its budget.
struct convergence_error : std::runtime_error {
    explicit convergence_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace hoc
