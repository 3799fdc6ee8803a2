#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pbdraw {

// Input text could not be parsed, or it referenced unknown labels.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A supplied path decomposition failed validation against its graph.
class DecompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Topological sorting was attempted on a graph that still contains a cycle.
// `cycle` lists the offending vertices in edge direction; the last one has an
// edge back to the first.
class CycleError : public std::runtime_error {
 public:
  CycleError(const std::string& msg, std::vector<int> cycle_vertices)
      : std::runtime_error(msg), cycle(std::move(cycle_vertices)) {}

  std::vector<int> cycle;
};

// A guarantee the algorithms promise was violated. Seeing this means a bug in
// this library, not bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pbdraw
