#include "vaip/labeling.hpp"

#include <algorithm>
#include <unordered_set>

namespace vaip {

bool ArcLabeling::compatible() const {
  return std::all_of(component_weights.begin(), component_weights.end(),
                     [](Int w) { return w == 0; });
}

AffineExponent combined_label(std::size_t component, const ArcLabel& label) {
  AffineExponent e = AffineExponent::symbol(static_cast<int>(component));
  e.add_constant(checked_add(label.self_offset, label.ext_offset));
  return e;
}

ArcLabeling propagate(const LinkDiagram& d) {
  require_valid(d);

  // A crossing is a self-crossing when both passes sit on one component.
  std::vector<std::unordered_set<int>> seen(d.num_components());
  std::unordered_set<int> self;
  for (std::size_t c = 0; c < d.num_components(); ++c) {
    for (const auto& p : d.components[c].passes) {
      if (!seen[c].insert(p.crossing).second) self.insert(p.crossing);
    }
  }

  ArcLabeling lab;
  lab.labels.resize(d.num_components());
  lab.component_weights.resize(d.num_components(), 0);
  for (std::size_t c = 0; c < d.num_components(); ++c) {
    const auto& passes = d.components[c].passes;
    auto& arcs = lab.labels[c];
    arcs.reserve(std::max<std::size_t>(passes.size(), 1));
    ArcLabel cur;
    for (const auto& p : passes) {
      arcs.push_back(cur);
      const int delta = index_change(p);
      if (self.contains(p.crossing)) cur.self_offset = checked_add(cur.self_offset, delta);
      else cur.ext_offset = checked_add(cur.ext_offset, delta);
    }
    if (passes.empty()) arcs.push_back(cur);
    lab.component_weights[c] = cur.ext_offset;
  }
  return lab;
}

std::vector<CrossingWeight> crossing_weights(const LinkDiagram& d,
                                             const ArcLabeling& lab) {
  std::vector<CrossingWeight> out;
  for (const auto& site : crossings(d)) {
    if (site.singular())
      throw Error("crossing " + std::to_string(site.id) + " is singular");
    const auto m = combined_label(site.minus_one.component, lab.incoming(site.minus_one));
    const auto p = combined_label(site.plus_one.component, lab.incoming(site.plus_one));
    CrossingWeight w;
    w.crossing = site.id;
    w.sign = site.sign;
    w.over_component = site.over().component;
    if (site.sign > 0) {
      w.exponent = m - p;
      w.exponent.add_constant(-1);
    } else {
      w.exponent = p - m;
      w.exponent.add_constant(1);
    }
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace vaip
