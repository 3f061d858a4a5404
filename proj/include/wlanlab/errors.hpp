#pragma once

#include <stdexcept>
#include <string>

namespace wlanlab {

// Bad or inconsistent configuration input (CLI exit code 2).
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Mathematical domain violation (nonpositive distance, probability out of
// range, ...).
class DomainError : public std::runtime_error {
  public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

class SolverError : public std::runtime_error {
  public:
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace wlanlab
