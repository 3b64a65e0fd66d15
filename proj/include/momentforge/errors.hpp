#ifndef MOMENTFORGE_ERRORS_HPP
#define MOMENTFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace momentforge {

/* Malformed or out-of-domain input (bad flags, non prime-power h, a moment
 * table that is missing entries, ...). */
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/* An internal cross-check failed, e.g. an extension class count that is not
 * an integer. Indicates a bug, never bad input. */
class ConsistencyError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/* A brute-force enumeration would exceed the configured budget. */
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace momentforge

#endif // MOMENTFORGE_ERRORS_HPP
