#pragma once

#include <stdexcept>
#include <string>

namespace vlink {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SyntaxError : Error {
  using Error::Error;
};
struct SignMismatch : Error {
  using Error::Error;
};
struct BadMultiplicity : Error {
  using Error::Error;
};
struct IndexOutOfRange : Error {
  using Error::Error;
};
struct UnknownCrossing : Error {
  using Error::Error;
};
struct NotAKnot : Error {
  using Error::Error;
};
struct MissingMetadata : Error {
  using Error::Error;
};
struct NotApplicable : Error {
  using Error::Error;
};
struct TooLarge : Error {
  using Error::Error;
};
struct PreconditionViolated : Error {
  using Error::Error;
};
struct UnknownLabel : Error {
  using Error::Error;
};
struct EmptyParams : Error {
  using Error::Error;
};

} // namespace vlink
