#pragma once

#include <stdexcept>
#include <string>

namespace permfe {

// Malformed permutations, patterns, or parameters.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Arithmetic between polynomials of different coefficient kinds.
class KindMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A pattern family without an implemented weight or engine.
class NotImplemented : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A computation refused because it would exceed a configured size limit.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace permfe
