#include "vaip/diagram.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace vaip {

StrandRole role_of(const Pass& pass) {
  switch (pass.kind) {
    case PassKind::SingularLeft:
      return StrandRole::MinusOne;
    case PassKind::SingularRight:
      return StrandRole::PlusOne;
    case PassKind::Over:
      return pass.sign > 0 ? StrandRole::MinusOne : StrandRole::PlusOne;
    case PassKind::Under:
      return pass.sign > 0 ? StrandRole::PlusOne : StrandRole::MinusOne;
  }
  throw Error("unknown pass kind");
}

int index_change(StrandRole role) {
  return role == StrandRole::MinusOne ? -1 : 1;
}

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) out << "; ";
    out << violations[i].message;
  }
  return out.str();
}

ValidationError::ValidationError(ValidationReport report)
    : Error("invalid diagram: " + report.to_string()),
      report_(std::move(report)) {}

ValidationReport validate(const LinkDiagram& d) {
  ValidationReport report;
  std::map<int, std::vector<const Pass*>> seen;
  for (const auto& comp : d.components) {
    for (const auto& p : comp.passes) {
      if (p.crossing <= 0) {
        report.violations.push_back(
            {p.crossing, "non-positive crossing id " + std::to_string(p.crossing)});
        continue;
      }
      if (p.is_singular() ? p.sign != 0 : (p.sign != 1 && p.sign != -1)) {
        report.violations.push_back(
            {p.crossing, "bad sign at crossing " + std::to_string(p.crossing)});
      }
      seen[p.crossing].push_back(&p);
    }
  }
  for (const auto& [id, passes] : seen) {
    const auto tag = std::to_string(id);
    if (passes.size() != 2) {
      report.violations.push_back(
          {id, "crossing " + tag + (passes.size() == 1 ? " occurs once"
                                                       : " occurs " +
                                                             std::to_string(passes.size()) +
                                                             " times")});
      continue;
    }
    const Pass& a = *passes[0];
    const Pass& b = *passes[1];
    if (a.is_singular() != b.is_singular()) {
      report.violations.push_back(
          {id, "crossing " + tag + " mixes singular and classical passes"});
    } else if (a.is_singular()) {
      if (a.kind == b.kind) {
        report.violations.push_back(
            {id, "singular crossing " + tag + " needs one l and one r pass"});
      }
    } else {
      if (a.kind == b.kind) {
        report.violations.push_back(
            {id, "crossing " + tag + " needs one over and one under pass"});
      }
      if (a.sign != b.sign) {
        report.violations.push_back({id, "sign mismatch at crossing " + tag});
      }
    }
  }
  return report;
}

void require_valid(const LinkDiagram& d) {
  auto report = validate(d);
  if (!report.ok()) throw ValidationError(std::move(report));
}

const Pass& pass_at(const LinkDiagram& d, PassRef ref) {
  return d.components.at(ref.component).passes.at(ref.position);
}

std::vector<CrossingSite> crossings(const LinkDiagram& d) {
  std::map<int, CrossingSite> sites;
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    const auto& passes = d.components[c].passes;
    for (std::size_t k = 0; k < passes.size(); ++k) {
      const Pass& p = passes[k];
      auto& site = sites[p.crossing];
      site.id = p.crossing;
      site.sign = p.sign;
      if (role_of(p) == StrandRole::MinusOne) {
        site.minus_one = {c, k};
      } else {
        site.plus_one = {c, k};
      }
    }
  }
  std::vector<CrossingSite> out;
  out.reserve(sites.size());
  for (auto& [id, site] : sites) out.push_back(site);
  return out;
}

int max_crossing_id(const LinkDiagram& d) {
  int m = 0;
  for (const auto& comp : d.components)
    for (const auto& p : comp.passes) m = std::max(m, p.crossing);
  return m;
}

std::size_t singular_count(const LinkDiagram& d) {
  std::size_t n = 0;
  for (const auto& comp : d.components)
    for (const auto& p : comp.passes)
      if (p.kind == PassKind::SingularLeft) ++n;
  return n;
}

bool has_singular(const LinkDiagram& d) { return singular_count(d) > 0; }

int writhe(const LinkDiagram& d) {
  if (has_singular(d)) throw Error("writhe is undefined on singular diagrams");
  int w = 0;
  for (const auto& comp : d.components)
    for (const auto& p : comp.passes)
      if (p.kind == PassKind::Over) w += p.sign;
  return w;
}

std::vector<std::vector<std::int64_t>> linking_degrees(const LinkDiagram& d) {
  const auto n = d.num_components();
  std::vector<std::vector<std::int64_t>> lk(n, std::vector<std::int64_t>(n, 0));
  for (const auto& site : crossings(d)) {
    if (site.singular() || site.is_self()) continue;
    lk[site.over().component][site.under().component] += site.sign;
  }
  return lk;
}

LinkDiagram mirror(const LinkDiagram& d) {
  LinkDiagram out = d;
  for (auto& comp : out.components) {
    for (auto& p : comp.passes) {
      if (p.is_singular()) continue;
      p.kind = p.kind == PassKind::Over ? PassKind::Under : PassKind::Over;
      p.sign = -p.sign;
    }
  }
  return out;
}

LinkDiagram reverse(const LinkDiagram& d) {
  LinkDiagram out = d;
  for (auto& comp : out.components)
    std::reverse(comp.passes.begin(), comp.passes.end());
  return out;
}

LinkDiagram switch_crossing(const LinkDiagram& d, int id) {
  LinkDiagram out = d;
  int found = 0;
  for (auto& comp : out.components) {
    for (auto& p : comp.passes) {
      if (p.crossing != id) continue;
      if (p.is_singular())
        throw Error("cannot switch singular crossing " + std::to_string(id));
      p.kind = p.kind == PassKind::Over ? PassKind::Under : PassKind::Over;
      p.sign = -p.sign;
      ++found;
    }
  }
  if (found == 0) throw Error("unknown crossing " + std::to_string(id));
  return out;
}

LinkDiagram reorder_components(const LinkDiagram& d,
                               std::span<const std::size_t> perm) {
  const auto n = d.num_components();
  if (perm.size() != n) throw Error("permutation has the wrong length");
  std::vector<bool> hit(n, false);
  for (auto target : perm) {
    if (target >= n || hit[target]) throw Error("permutation is not a bijection");
    hit[target] = true;
  }
  LinkDiagram out;
  out.components.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.components[perm[i]] = d.components[i];
  return out;
}

}  // namespace vaip
