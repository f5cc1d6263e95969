#pragma once

#include <stdexcept>
#include <string>

namespace monoendo {

// Malformed input: unknown type string, bad lattice, bad config field.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed request that the library declines to compute.
class RefusalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration would exceed its configured cap.
class SizeError : public RefusalError {
 public:
  using RefusalError::RefusalError;
};

// A checked identity failed. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {
[[noreturn]] void check_failed(const char* expr, const std::string& msg,
                               const char* file, int line);
}

}  // namespace monoendo

#define MONOENDO_CHECK(cond, msg)                                          \
  do {                                                                     \
    if (!(cond)) {                                                         \
      ::monoendo::detail::check_failed(#cond, (msg), __FILE__, __LINE__); \
    }                                                                      \
  } while (false)
