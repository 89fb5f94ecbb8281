#pragma once

#include <cstddef>
#include <vector>

#include "vaip/diagram.hpp"
#include "vaip/poly.hpp"

namespace vaip {

/// Bilabel of an arc as offsets from the component's symbolic start
/// (a1, a2): the first coordinate moves at self-crossings, the second at
/// external crossings.
struct ArcLabel {
  Int self_offset = 0;
  Int ext_offset = 0;

  Int total() const { return self_offset + ext_offset; }
  friend bool operator==(const ArcLabel&, const ArcLabel&) = default;
};

struct ArcLabeling {
  /// labels[c][k] is the arc entering pass k of component c; labels[c][0]
  /// starts at the starting point and is always (0, 0). An empty component
  /// has the single arc (0, 0).
  std::vector<std::vector<ArcLabel>> labels;
  /// Final ext_offset of each component: the excess discharged at its
  /// starting point. All zero exactly for compatible diagrams.
  std::vector<Int> component_weights;

  bool compatible() const;
  const ArcLabel& incoming(PassRef ref) const {
    return labels.at(ref.component).at(ref.position);
  }
  friend bool operator==(const ArcLabeling&, const ArcLabeling&) = default;
};

/// X_component + self_offset + ext_offset as an affine expression.
AffineExponent combined_label(std::size_t component, const ArcLabel& label);

/// Walks every component from its starting point. Singular passes
/// propagate like the flat crossing their l/r marks describe.
ArcLabeling propagate(const LinkDiagram& d);

struct CrossingWeight {
  int crossing = 0;
  int sign = 0;
  std::size_t over_component = 0;
  AffineExponent exponent;

  friend bool operator==(const CrossingWeight&, const CrossingWeight&) = default;
};

/// With M and P the incoming combined labels of the MinusOne and PlusOne
/// strands: positive crossings weigh M - P - 1, negative ones P - M + 1.
/// Sorted by crossing id. Throws on singular crossings.
std::vector<CrossingWeight> crossing_weights(const LinkDiagram& d,
                                             const ArcLabeling& lab);

}  // namespace vaip
