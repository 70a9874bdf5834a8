#pragma once

#include <stdexcept>
#include <string>

namespace tanpick {

// Base for every error the library raises on a violated precondition.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Argument outside the domain where the quantity is defined.
class DomainError : public Error {
  public:
    using Error::Error;
};

// Evaluation point inside the exclusion zone of a pole.
class PoleProximity : public Error {
  public:
    using Error::Error;
};

class ZeroArgument : public Error {
  public:
    using Error::Error;
};

// Integrand has not decayed at the quadrature cutoff.
class Divergent : public Error {
  public:
    using Error::Error;
};

class EmptySample : public Error {
  public:
    using Error::Error;
};

class UnknownIdentity : public Error {
  public:
    using Error::Error;
};

class InvalidOverride : public Error {
  public:
    using Error::Error;
};

class IoError : public Error {
  public:
    using Error::Error;
};

} // namespace tanpick
