#pragma once

#include <stdexcept>
#include <string>

namespace glr {

  // Base for every error the library raises. The CLI maps the subclasses
  // onto exit codes: FormatError -> 2, everything else -> 1.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed input: bad file syntax, non-square tables, out-of-range entries.
  class FormatError : public Error {
   public:
    using Error::Error;
  };

  // Well-formed input that violates a mathematical precondition.
  class DomainError : public Error {
   public:
    using Error::Error;
  };

  // A configured search or size cap was exceeded.
  class ResourceError : public Error {
   public:
    using Error::Error;
  };

  class MoveNotApplicable : public DomainError {
   public:
    using DomainError::DomainError;
  };

}  // namespace glr
