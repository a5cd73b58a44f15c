#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ubp {

  //! Thrown when a value fails its structural invariants (overlapping
  //! blocks, non-bijective maps, size mismatches, ...).
  class ValidationError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  //! Thrown by the text parsers. position() is a byte offset into the input.
  class ParseError : public std::invalid_argument {
   public:
    ParseError(std::string const& what, std::size_t position)
        : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept {
      return position_;
    }

   private:
    std::size_t position_;
  };

  //! Thrown when an enumeration or matrix construction would exceed the
  //! configured size ceiling.
  class CeilingError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

}  // namespace ubp
