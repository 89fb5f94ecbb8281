#pragma once

#include <vector>

#include "vaip/diagram.hpp"
#include "vaip/labeling.hpp"
#include "vaip/poly.hpp"

namespace vaip {

struct InvariantResult {
  MVPolynomial polynomial;
  /// One entry per crossing, sorted by crossing id; var is the over
  /// component. polynomial == assemble(per_crossing).
  std::vector<CrossingTerm> per_crossing;
  std::vector<Int> component_weights;

  bool compatible() const;
};

/// Multi-variable affine index polynomial of a classical diagram with the
/// coloring given by its starting points: sum sign(c) (t_i^W(c) - 1) with i
/// the over component. Non-compatible diagrams are accepted.
InvariantResult mvaip(const LinkDiagram& d);

/// Single-variable affine index polynomial of a knot.
MVPolynomial aip_knot(const LinkDiagram& d);

/// Link polynomial of a compatible diagram: every t_i set to t. Starting
/// label symbols stay in the exponents.
MVPolynomial kauffman_link_aip(const LinkDiagram& d);

/// Contributions of self-crossings only.
MVPolynomial self_crossing_part(const InvariantResult& inv, const LinkDiagram& d);

}  // namespace vaip
