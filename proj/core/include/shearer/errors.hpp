#pragma once

#include <stdexcept>
#include <string>

namespace shearer {

/// A subset-exponential operation was asked to exceed its documented cap.
class CapExceeded : public std::runtime_error {
public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Base class for violated operation preconditions.
class PreconditionError : public std::invalid_argument {
public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// A ratio or construction needed parameters inside the admissible region.
class OutsideRegion : public PreconditionError {
public:
  explicit OutsideRegion(const std::string& what) : PreconditionError(what) {}
};

/// A component of the requested window has no neighbour in the exterior.
class NoEscape : public PreconditionError {
public:
  explicit NoEscape(const std::string& what) : PreconditionError(what) {}
};

/// The sequential coupling met a conditional probability below its floor.
class MinorationViolated : public PreconditionError {
public:
  MinorationViolated(const std::string& what, unsigned long long prefix_bits, int index)
      : PreconditionError(what), prefix(prefix_bits), vertex(index) {}
  unsigned long long prefix;
  int vertex;
};

/// Malformed input file or option string.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace shearer
