// Error types shared across the library. The CLI maps these onto exit codes.

#ifndef CONJREP_ERROR_HPP_
#define CONJREP_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace conjrep {

// Malformed input: bad files, degree mismatches, violated preconditions.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A mathematical hypothesis required by an analysis does not hold
// (non-inverse table, bad field characteristic).
class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& msg) : std::runtime_error(msg) {}
};

// Enumeration exceeded a configured resource cap.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace conjrep

#endif  // CONJREP_ERROR_HPP_
