#include "vaip/vassiliev.hpp"

#include <unordered_set>

#include "vaip/invariant.hpp"

namespace vaip {

std::vector<Resolution> resolve(const LinkDiagram& sd) {
  require_valid(sd);
  std::vector<CrossingSite> points;
  for (const auto& site : crossings(sd))
    if (site.singular()) points.push_back(site);
  if (points.size() > 20) throw Error("too many double points to resolve");

  std::vector<Resolution> out;
  const std::size_t total = std::size_t{1} << points.size();
  out.reserve(total);
  for (std::size_t mask = 0; mask < total; ++mask) {
    Resolution r{1, sd};
    for (std::size_t j = 0; j < points.size(); ++j) {
      const int id = points[j].id;
      auto& left = r.diagram.components[points[j].minus_one.component]
                       .passes[points[j].minus_one.position];
      auto& right = r.diagram.components[points[j].plus_one.component]
                        .passes[points[j].plus_one.position];
      if (mask >> j & 1) {
        right = Pass::over(id, -1);
        left = Pass::under(id, -1);
        r.coefficient = -r.coefficient;
      } else {
        left = Pass::over(id, 1);
        right = Pass::under(id, 1);
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

MVPolynomial v_extend(const LinkDiagram& sd) {
  MVPolynomial sum;
  for (const auto& r : resolve(sd)) {
    const auto p = mvaip(r.diagram).polynomial;
    sum += r.coefficient > 0 ? p : -p;
  }
  return sum;
}

LinkDiagram singularize(const LinkDiagram& d, std::span<const int> ids) {
  require_valid(d);
  const std::unordered_set<int> wanted(ids.begin(), ids.end());
  std::unordered_set<int> found;
  LinkDiagram out = d;
  for (auto& comp : out.components) {
    for (auto& p : comp.passes) {
      if (!wanted.contains(p.crossing)) continue;
      if (p.is_singular())
        throw Error("crossing " + std::to_string(p.crossing) + " is already singular");
      found.insert(p.crossing);
      p = role_of(p) == StrandRole::MinusOne ? Pass::singular_left(p.crossing)
                                             : Pass::singular_right(p.crossing);
    }
  }
  for (int id : wanted)
    if (!found.contains(id)) throw Error("unknown crossing " + std::to_string(id));
  return out;
}

namespace {

std::vector<int> classical_ids(const LinkDiagram& d) {
  std::vector<int> ids;
  for (const auto& site : crossings(d))
    if (!site.singular()) ids.push_back(site.id);
  return ids;
}

}  // namespace

std::vector<LinkDiagram> single_singularizations(const LinkDiagram& d) {
  std::vector<LinkDiagram> out;
  for (int id : classical_ids(d)) {
    const int one[] = {id};
    out.push_back(singularize(d, one));
  }
  return out;
}

std::vector<LinkDiagram> pair_singularizations(const LinkDiagram& d) {
  const auto ids = classical_ids(d);
  std::vector<LinkDiagram> out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      const int two[] = {ids[i], ids[j]};
      out.push_back(singularize(d, two));
    }
  }
  return out;
}

OrderReport order_report(std::span<const LinkDiagram> corpus) {
  OrderReport rep;
  for (const auto& sd : corpus) {
    const std::size_t k = singular_count(sd);
    if (k == 0) continue;
    ++rep.checked;
    auto value = v_extend(sd);
    if (k == 1) {
      ++rep.single_count;
      if (!value.is_zero()) rep.witnesses.push_back({sd, std::move(value)});
    } else if (!value.is_zero()) {
      rep.failures.push_back({sd, std::move(value)});
    }
  }
  return rep;
}

}  // namespace vaip
