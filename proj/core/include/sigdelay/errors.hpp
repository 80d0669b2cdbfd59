#pragma once

#include <stdexcept>
#include <string>

namespace sigdelay {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A step function was asked to become a Signal but is nonzero before t = 0.
struct NegativeSupport : Error {
  using Error::Error;
};

/// Window parameters outside 0 <= m <= d.
struct InvalidWindow : Error {
  using Error::Error;
};

struct NegativeDelay : Error {
  using Error::Error;
};

/// The consistency condition of the requested delay condition fails.
struct ConsistencyViolated : Error {
  using Error::Error;
};

struct PreconditionFailed : Error {
  using Error::Error;
};

/// apply_deterministic on an element whose solution set is not a singleton.
struct Nondeterministic : Error {
  using Error::Error;
};

struct Unsupported : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace sigdelay
