#ifndef LAWS_COMMON_HPP
#define LAWS_COMMON_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace laws {

// Base class for all library errors.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A requested computation exceeds a configured cap (degree, group order,
// flatten size, ...).  Callers may retry with a larger cap or another mode.
class scale_error : public error {
 public:
  using error::error;
};

// Malformed textual/JSON input.
class parse_error : public error {
 public:
  using error::error;
};

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    throw scale_error("64-bit overflow in length/exponent arithmetic");
  return a * b;
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (b > std::numeric_limits<std::uint64_t>::max() - a)
    throw scale_error("64-bit overflow in length/exponent arithmetic");
  return a + b;
}

}  // namespace laws

#endif
