#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nildist {

/// Malformed word expression. Carries the byte offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A request the caller could have avoided: bad sizes, trivial input where a
/// nontrivial one is required, too little data for a fit.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured resource cap (Hirsch length, queue events, ball size) was hit.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Something that cannot happen if the engine is correct.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nildist
