#pragma once

#include <stdexcept>
#include <string>

namespace coprime {

// Resource-guard violation (configured caps on n, vertex counts, label width).
// Distinct from std::domain_error / std::invalid_argument, which signal a
// malformed request rather than an oversized one. CLI exit codes: domain and
// usage errors map to 1, CapExceeded to 2, solver non-convergence to 3.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by rep_value when some handle inner product vanishes: the value
// 1/(c.x)^2 would be infinite, so the representation is useless for this
// handle and we refuse to score it.
struct DegenerateHandle : std::domain_error {
    explicit DegenerateHandle(const std::string& what) : std::domain_error(what) {}
};

}  // namespace coprime
