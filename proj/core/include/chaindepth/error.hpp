#pragma once

#include <stdexcept>
#include <string>

namespace chaindepth {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the requested operation
/// (not prime, unsupported field, malformed descriptor, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class OrderCapExceeded : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

class LatticeCapExceeded : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

/// A bounded search ran to its limit without finding a result.
class NotFoundWithinLimit : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

/// A computation needed a complete factorization that the budget could not
/// provide.
class IncompleteFactorization : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

}  // namespace chaindepth
