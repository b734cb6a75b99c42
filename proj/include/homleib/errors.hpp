#ifndef HOMLEIB_ERRORS_HPP
#define HOMLEIB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace homleib {

// Malformed input: bad file, dimension mismatch, index out of range.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A documented precondition of an operation does not hold.
struct precondition_error : std::runtime_error {
  explicit precondition_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace homleib

#endif
