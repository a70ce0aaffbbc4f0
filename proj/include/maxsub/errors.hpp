#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace maxsub {

/// Base of every error raised by the library. Callers that only need to
/// distinguish "bad input" from "found something" catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeMismatch : public Error {
 public:
  DegreeMismatch(std::size_t a, std::size_t b)
    : Error("degree mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class NotSubgroup : public Error {
 public:
  using Error::Error;
};

class NotNormal : public Error {
 public:
  using Error::Error;
};

class AmbientMismatch : public Error {
 public:
  AmbientMismatch() : Error("subgroups belong to different ambient groups") {}
};

class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class NotPrime : public Error {
 public:
  explicit NotPrime(unsigned long long p) : Error(std::to_string(p) + " is not prime") {}
};

class TrivialGroup : public Error {
 public:
  TrivialGroup() : Error("operation undefined on the trivial group") {}
};

/// A simple chief factor whose order does not determine it.
class UnidentifiableFactor : public Error {
 public:
  using Error::Error;
};

/// The class predicate has no unique least normal subgroup with quotient in
/// the class; a formation-axiom failure observed on a concrete group.
class NonUniqueMinimal : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string &what, std::size_t position)
    : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

class LevelMismatch : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

} // namespace maxsub
