#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace signet {

/// Bad or unresolvable experiment configuration (files, keys, value ranges).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// An arc appears with both signs, so no total signed graph exists.
class SignConflictError : public std::runtime_error {
 public:
  SignConflictError(int tail, int head)
      : std::runtime_error("arc (" + std::to_string(tail) + "," + std::to_string(head) +
                           ") appears with both signs"),
        tail(tail),
        head(head) {}

  int tail;
  int head;
};

/// alpha outside the open interval (0, 1/(n-1)) required by the window constants.
class InvalidAlphaError : public std::runtime_error {
 public:
  InvalidAlphaError(double alpha, int n)
      : std::runtime_error("alpha=" + std::to_string(alpha) + " outside (0, 1/(n-1)) for n=" +
                           std::to_string(n)) {}
};

/// A state update produced a non-finite entry; the trial stops at the last finite slot.
class NonFiniteStateError : public std::runtime_error {
 public:
  explicit NonFiniteStateError(std::int64_t slot)
      : std::runtime_error("state became non-finite at slot " + std::to_string(slot)),
        slot(slot) {}

  std::int64_t slot;
};

}  // namespace signet
