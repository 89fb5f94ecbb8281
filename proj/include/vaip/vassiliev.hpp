#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "vaip/diagram.hpp"
#include "vaip/poly.hpp"

namespace vaip {

// A singular diagram is a LinkDiagram whose singular crossings are the
// double points.

struct Resolution {
  int coefficient = 1;  // (-1)^(number of negative resolutions)
  LinkDiagram diagram;
};

/// All 2^k resolutions. Double points are taken in id order; bit j of the
/// index is set when the j-th one is resolved negatively. The positive
/// resolution makes the SingularLeft pass Over with sign +1, the negative
/// one makes the SingularRight pass Over with sign -1.
std::vector<Resolution> resolve(const LinkDiagram& sd);

/// Alternating sum of mvaip over the resolutions.
MVPolynomial v_extend(const LinkDiagram& sd);

/// Marks the given classical crossings as double points, keeping strand
/// roles (the MinusOne pass becomes SingularLeft).
LinkDiagram singularize(const LinkDiagram& d, std::span<const int> ids);

std::vector<LinkDiagram> single_singularizations(const LinkDiagram& d);
std::vector<LinkDiagram> pair_singularizations(const LinkDiagram& d);

struct OrderEntry {
  LinkDiagram diagram;
  MVPolynomial value;
};

struct OrderReport {
  std::size_t checked = 0;
  std::size_t single_count = 0;        // members with one double point
  std::vector<OrderEntry> failures;    // two or more double points, nonzero
  std::vector<OrderEntry> witnesses;   // one double point, nonzero

  bool passed() const { return failures.empty() && (single_count == 0 || !witnesses.empty()); }
};

OrderReport order_report(std::span<const LinkDiagram> corpus);

}  // namespace vaip
