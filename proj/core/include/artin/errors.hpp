#ifndef ARTIN_ERRORS_HPP
#define ARTIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace artin {

// Malformed user input: unknown vertices, bad labels, unreadable files.
// The CLI maps this to exit code 1.
class input_error : public std::runtime_error {
public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A broken precondition or internal invariant. The CLI maps this to
// exit code 2.
class internal_error : public std::logic_error {
public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace artin

#endif // ARTIN_ERRORS_HPP
