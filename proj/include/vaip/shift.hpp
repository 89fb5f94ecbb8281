#pragma once

#include <cstddef>
#include <vector>

#include "vaip/diagram.hpp"
#include "vaip/invariant.hpp"
#include "vaip/poly.hpp"

namespace vaip {

/// Moves the starting point of `component` forward past `steps` passes.
/// steps ranges over 0..length; a full loop returns to the start.
struct ShiftSpec {
  std::size_t component = 0;
  std::size_t steps = 0;
};

struct ShiftMultiplier {
  int crossing = 0;
  int var = 0;
  Int increment = 0;
};

struct ShiftPrediction {
  /// Total index change of the passes crossed, per component.
  std::vector<Int> index_change;
  std::vector<ShiftMultiplier> multipliers;
};

void check_spec(const LinkDiagram& d, const ShiftSpec& spec);

/// Rotates the component's sequence left by spec.steps.
LinkDiagram shift_diagram(const LinkDiagram& d, const ShiftSpec& spec);

ShiftPrediction prediction(const LinkDiagram& d, const ShiftSpec& spec);

/// Applies a prediction to per-crossing terms: X_i -> X_i - I_i in every
/// exponent, then each multiplier adds its increment to its crossing's term.
std::vector<CrossingTerm> transport(std::vector<CrossingTerm> terms,
                                   const ShiftPrediction& pred);

/// Polynomial of the shifted diagram computed from inv alone. Throws when
/// inv's crossings do not match d.
MVPolynomial predict(const InvariantResult& inv, const LinkDiagram& d,
                     const ShiftSpec& spec);

bool verify_shift(const LinkDiagram& d, const ShiftSpec& spec);

}  // namespace vaip
