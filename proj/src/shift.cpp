#include "vaip/shift.hpp"

#include <algorithm>

namespace vaip {

void check_spec(const LinkDiagram& d, const ShiftSpec& spec) {
  if (spec.component >= d.num_components())
    throw Error("no component " + std::to_string(spec.component + 1));
  const std::size_t len = d.components[spec.component].size();
  if (spec.steps > len)
    throw Error("cannot shift " + std::to_string(spec.steps) + " steps along a component of length " +
                std::to_string(len));
}

LinkDiagram shift_diagram(const LinkDiagram& d, const ShiftSpec& spec) {
  check_spec(d, spec);
  LinkDiagram out = d;
  auto& passes = out.components[spec.component].passes;
  std::rotate(passes.begin(), passes.begin() + static_cast<std::ptrdiff_t>(spec.steps),
              passes.end());
  return out;
}

ShiftPrediction prediction(const LinkDiagram& d, const ShiftSpec& spec) {
  require_valid(d);
  check_spec(d, spec);
  if (has_singular(d)) throw Error("shift prediction needs a classical diagram");
  const Int n = propagate(d).component_weights[spec.component];

  ShiftPrediction pred;
  pred.index_change.assign(d.num_components(), 0);
  const auto& passes = d.components[spec.component].passes;
  std::vector<int> over_component(static_cast<std::size_t>(max_crossing_id(d)) + 1, 0);
  for (const auto& site : crossings(d))
    over_component[static_cast<std::size_t>(site.id)] = static_cast<int>(site.over().component);

  Int& total = pred.index_change[spec.component];
  for (std::size_t k = 0; k < spec.steps; ++k) {
    const Pass& p = passes[k];
    total = checked_add(total, index_change(p));
    if (n == 0) continue;
    pred.multipliers.push_back({p.crossing, over_component[static_cast<std::size_t>(p.crossing)],
                                p.kind == PassKind::Over ? n : checked_neg(n)});
  }
  return pred;
}

std::vector<CrossingTerm> transport(std::vector<CrossingTerm> terms,
                                   const ShiftPrediction& pred) {
  for (auto& t : terms) {
    for (std::size_t i = 0; i < pred.index_change.size(); ++i) {
      if (pred.index_change[i] != 0)
        t.exponent = shift_symbol(t.exponent, static_cast<int>(i),
                                  checked_neg(pred.index_change[i]));
    }
  }
  for (const auto& m : pred.multipliers)
    terms = multiply_term(std::move(terms), m.crossing, m.var, m.increment);
  return terms;
}

MVPolynomial predict(const InvariantResult& inv, const LinkDiagram& d,
                     const ShiftSpec& spec) {
  const auto sites = crossings(d);
  bool match = sites.size() == inv.per_crossing.size();
  for (std::size_t i = 0; match && i < sites.size(); ++i) {
    const auto& t = inv.per_crossing[i];
    match = t.crossing == sites[i].id && t.sign == sites[i].sign &&
            t.var == static_cast<int>(sites[i].over().component);
  }
  if (!match) throw Error("invariant provenance does not match the diagram");
  return assemble(transport(inv.per_crossing, prediction(d, spec)));
}

bool verify_shift(const LinkDiagram& d, const ShiftSpec& spec) {
  const auto inv = mvaip(d);
  return predict(inv, d, spec) == mvaip(shift_diagram(d, spec)).polynomial;
}

}  // namespace vaip
