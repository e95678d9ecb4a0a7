#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidshear {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A rational function was evaluated where its denominator vanishes.
class PoleError : public Error {
 public:
  using Error::Error;
};

class MissingVariable : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (braid words, polynomials, rationals, configs).
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position, std::string expected)
      : Error(message), position_(position), expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Input point set violates a genericity precondition. `vertices` names the
/// offending subset (coincident pair, collinear set or cocircular 4-tuple).
class DegenerateInput : public Error {
 public:
  enum class Kind { kTooFewPoints, kCoincident, kCollinear, kCocircular };

  DegenerateInput(Kind kind, std::vector<int> vertices, const std::string& message)
      : Error(message), kind_(kind), vertices_(std::move(vertices)) {}

  Kind kind() const noexcept { return kind_; }
  const std::vector<int>& vertices() const noexcept { return vertices_; }

 private:
  Kind kind_;
  std::vector<int> vertices_;
};

class HullEdgeError : public Error {
 public:
  using Error::Error;
};

class NonConvexQuad : public Error {
 public:
  using Error::Error;
};

/// Two flip events could not be separated and their quadrilaterals overlap:
/// the motion is not generic.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

/// Two strands met.
class CollisionError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Always indicates a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace braidshear
