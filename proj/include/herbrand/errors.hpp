#pragma once

#include <stdexcept>
#include <string>

namespace herbrand {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownVertex : public Error {
 public:
  using Error::Error;
};

class InvalidVoltage : public Error {
 public:
  using Error::Error;
};

class DisconnectedGraph : public Error {
 public:
  using Error::Error;
};

/// The derived graph is disconnected, so the voltages do not define a Galois
/// cover with the full group F_p^x.
class DisconnectedCover : public Error {
 public:
  using Error::Error;
};

class GroupMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A p-adic quantity is zero to the working precision; recompute at a higher one.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

class InsufficientPrecision : public Error {
 public:
  using Error::Error;
};

/// Two independent computations that must agree did not.
class ConsistencyFailure : public Error {
 public:
  using Error::Error;
};

/// Malformed cover specification input.
class SpecParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace herbrand
