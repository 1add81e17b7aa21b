#pragma once

#include <stdexcept>
#include <string>

namespace specdet {

// A series argument landed exactly on the simple pole of the Hurwitz zeta
// continuation (s = 1), outside the cancellation path.
class PoleError : public std::runtime_error {
public:
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

// The continuation could not reach the requested target error within the
// allowed parameter range (head cutoff doublings exhausted).
class ContinuationFailure : public std::runtime_error {
public:
    explicit ContinuationFailure(const std::string& what) : std::runtime_error(what) {}
};

// A family description file failed to parse or validate.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace specdet
