#pragma once

#include <stdexcept>
#include <string>

namespace pw {

// Thrown when an exact computation would exceed its configured size limit.
// Distinct from std::invalid_argument (bad input) and std::logic_error
// (internal inconsistency): a resource error means the instance was legal
// but too large for the requested limits.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace pw
