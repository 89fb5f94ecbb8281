#include "vaip/invariant.hpp"

#include <algorithm>
#include <unordered_set>

namespace vaip {

bool InvariantResult::compatible() const {
  return std::all_of(component_weights.begin(), component_weights.end(),
                     [](Int w) { return w == 0; });
}

InvariantResult mvaip(const LinkDiagram& d) {
  require_valid(d);
  if (has_singular(d))
    throw Error("diagram has double points; use v_extend");
  const auto lab = propagate(d);
  InvariantResult out;
  out.component_weights = lab.component_weights;
  for (const auto& w : crossing_weights(d, lab)) {
    out.per_crossing.push_back(
        {w.crossing, w.sign, static_cast<int>(w.over_component), w.exponent});
  }
  out.polynomial = assemble(out.per_crossing);
  return out;
}

MVPolynomial aip_knot(const LinkDiagram& d) {
  if (d.num_components() != 1)
    throw Error("aip_knot needs a single component, got " +
                std::to_string(d.num_components()));
  return mvaip(d).polynomial;
}

MVPolynomial kauffman_link_aip(const LinkDiagram& d) {
  auto inv = mvaip(d);
  if (!inv.compatible())
    throw Error("the single-variable link polynomial needs a compatible diagram");
  return collapse(inv.polynomial, Collapse::single_variable(d.num_components()));
}

MVPolynomial self_crossing_part(const InvariantResult& inv, const LinkDiagram& d) {
  std::unordered_set<int> self;
  for (const auto& site : crossings(d))
    if (site.is_self()) self.insert(site.id);
  std::vector<CrossingTerm> kept;
  for (const auto& t : inv.per_crossing)
    if (self.contains(t.crossing)) kept.push_back(t);
  return assemble(kept);
}

}  // namespace vaip
