#pragma once

#include <stdexcept>
#include <string>

namespace ringmap {

/// Malformed map or patch (wrong valence, not connected, bad rotation system).
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Some quadrangle would need more than q-4 tails on one side.
class ComplementUndefined : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A search hit its node or time budget. Never means "does not exist".
class ResourceExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GlueMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotARing : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace ringmap
