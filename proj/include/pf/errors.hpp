#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pf {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed external input: graph6 text, signatures, problem encodings,
/// expressions, constraint strings.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t offset = 0)
      : Error(what), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Requested corpus, order or column does not exist on disk.
class NotFoundError : public Error {
 public:
  using Error::Error;
};

/// Well-formed request that violates a domain rule: unknown invariant id,
/// kind mismatch, precondition of a construction, empty search space.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace pf
