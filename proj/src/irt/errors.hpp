#pragma once

#include <stdexcept>
#include <string>

namespace irt {

// Invalid scenario document or parameter set.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical or state failure while evaluating a model block.
class ModelError : public std::runtime_error {
  public:
    explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace irt
