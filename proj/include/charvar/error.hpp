#pragma once

#include <stdexcept>
#include <string>

namespace charvar {

// Malformed user input: unparsable words, undeclared generators, schema
// violations, points off a required locus.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Structurally invalid operation: mixed coefficient rings, mismatched
// variable sets, non-square matrices, unknown variables.
struct structural_error : std::runtime_error {
  explicit structural_error(const std::string& what) : std::runtime_error(what) {}
};

// Mathematically degenerate input: vanishing discriminant, parabolic
// boundary trace, pole of a rational function, non-invertible norm.
struct degenerate_error : std::runtime_error {
  explicit degenerate_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant failed to hold; indicates a bug, not bad input.
struct invariant_error : std::runtime_error {
  explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

inline void require_invariant(bool ok, const std::string& what) {
  if (!ok) throw invariant_error(what);
}

}  // namespace charvar
