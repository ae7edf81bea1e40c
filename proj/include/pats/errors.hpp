#pragma once

#include <stdexcept>
#include <string>

namespace pats {

// Invalid sampling parameters or stream metadata.
struct ParameterError : std::invalid_argument {
    explicit ParameterError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Unknown key in an embedded reference table.
struct LookupError : std::invalid_argument {
    explicit LookupError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Synthetic corpus could not be generated (infeasible packing).
struct GenerationError : std::runtime_error {
    explicit GenerationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Manifest file unreadable or structurally broken.
struct ManifestError : std::runtime_error {
    explicit ManifestError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace pats
