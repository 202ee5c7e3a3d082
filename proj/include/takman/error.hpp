#pragma once

#include <stdexcept>
#include <string>

namespace takman {

// Category of input rejection, so callers can tell apart e.g. a two-bridge
// link (even numerator) from the unknot without parsing messages.
enum class errc {
  generic,
  parse,             // malformed text input
  non_coprime,       // surgery coefficient pair with gcd != 1
  sign_constraint,   // negative p or r coefficient
  even_numerator,    // fraction a/b with a even: two-bridge link, not a knot
  unknot,            // fraction with a = 1
  zero_denominator,  // continued fraction hits 1/0
  missing_image,     // substitution without an image for a generator
  out_of_range,      // generator index or fraction parameter out of range
  zero_parameter,    // q_j or s_j equal to zero where nonzero is required
};

// Invalid user input. The CLI maps this to exit code 2.
class invalid_input : public std::runtime_error {
 public:
  explicit invalid_input(std::string msg, errc code = errc::generic)
      : std::runtime_error(std::move(msg)), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

// A checked postcondition failed: a bug, not bad input. CLI exit code 3.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(std::string msg) : std::logic_error(std::move(msg)) {}
};

}  // namespace takman
