#pragma once

// Reference computations written against the raw Gauss-code data only. They
// share no code with the labeling or invariant modules.

#include <map>
#include <tuple>
#include <vector>

#include "vaip/diagram.hpp"
#include "vaip/poly.hpp"

namespace oracle {

using Coeffs = std::vector<long long>;  // one entry per starting symbol
using Key = std::tuple<int, Coeffs, long long>;  // variable, symbols, constant
using Poly = std::map<Key, long long>;  // the constant term has variable -1

struct Result {
  Poly poly;
  std::vector<long long> weights;
};

// Index change of a pass read straight off the convention table.
inline int change(const vaip::Pass& p) {
  switch (p.kind) {
    case vaip::PassKind::Over: return p.sign > 0 ? -1 : 1;
    case vaip::PassKind::Under: return p.sign > 0 ? 1 : -1;
    case vaip::PassKind::SingularLeft: return -1;
    case vaip::PassKind::SingularRight: return 1;
  }
  return 0;
}

struct Label {
  Coeffs coeffs;
  long long constant = 0;
};

inline Label minus(const Label& a, const Label& b) {
  Label out{a.coeffs, a.constant - b.constant};
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] -= b.coeffs[i];
  return out;
}

inline bool zero(const Label& l) {
  if (l.constant != 0) return false;
  for (auto c : l.coeffs)
    if (c != 0) return false;
  return true;
}

inline void add(Poly& p, int var, const Label& exponent, long long coeff) {
  Key k = zero(exponent) ? Key{-1, Coeffs(exponent.coeffs.size(), 0), 0}
                         : Key{var, exponent.coeffs, exponent.constant};
  if ((p[k] += coeff) == 0) p.erase(k);
}

struct Visit {
  std::size_t component;
  Label in;
  Label out;
  int delta;
  bool over;
};

// Multi-variable polynomial: W+ = M_in - P_out, W- = P_in - M_out, where M is
// the strand whose label drops by one and P the one whose label rises.
inline Result mvaip(const vaip::LinkDiagram& d) {
  const std::size_t n = d.components.size();
  std::map<int, std::vector<Visit>> visits;
  std::map<int, int> sign;
  for (std::size_t c = 0; c < n; ++c) {
    Label cur{Coeffs(n, 0), 0};
    cur.coeffs[c] = 1;
    for (const auto& p : d.components[c].passes) {
      Label next = cur;
      next.constant += change(p);
      visits[p.crossing].push_back({c, cur, next, change(p), p.kind == vaip::PassKind::Over});
      sign[p.crossing] = p.sign;
      cur = next;
    }
  }
  Result r;
  r.weights.assign(n, 0);
  for (const auto& [id, v] : visits) {
    if (v[0].component != v[1].component) {
      r.weights[v[0].component] += v[0].delta;
      r.weights[v[1].component] += v[1].delta;
    }
    const Visit& m = v[0].delta < 0 ? v[0] : v[1];
    const Visit& p = v[0].delta < 0 ? v[1] : v[0];
    const int var = static_cast<int>(v[0].over ? v[0].component : v[1].component);
    const int s = sign.at(id);
    const Label w = s > 0 ? minus(m.in, p.out) : minus(p.in, m.out);
    add(r.poly, var, w, s);
    add(r.poly, -1, Label{Coeffs(n, 0), 0}, -s);
  }
  return r;
}

// Single-variable link polynomial: labels counted from scratch for each
// crossing as the starting symbol plus the changes of all earlier passes.
inline Poly single_label(const vaip::LinkDiagram& d) {
  const std::size_t n = d.components.size();
  auto label_before = [&](std::size_t c, std::size_t k) {
    Label l{Coeffs(n, 0), 0};
    l.coeffs[c] = 1;
    for (std::size_t j = 0; j < k; ++j) l.constant += change(d.components[c].passes[j]);
    return l;
  };
  struct Where {
    std::size_t c, k;
  };
  std::map<int, std::vector<Where>> at;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t k = 0; k < d.components[c].passes.size(); ++k)
      at[d.components[c].passes[k].crossing].push_back({c, k});

  Poly out;
  for (const auto& [id, w] : at) {
    const auto& p0 = d.components[w[0].c].passes[w[0].k];
    const Where lo = change(p0) < 0 ? w[0] : w[1];
    const Where hi = change(p0) < 0 ? w[1] : w[0];
    const int s = p0.sign;
    const Label lo_in = label_before(lo.c, lo.k);
    const Label hi_in = label_before(hi.c, hi.k);
    Label e = s > 0 ? minus(lo_in, hi_in) : minus(hi_in, lo_in);
    e.constant += s > 0 ? -1 : 1;
    add(out, 0, e, s);
    add(out, -1, Label{Coeffs(n, 0), 0}, -s);
  }
  return out;
}

// Same shape from a library polynomial over `arity` symbols.
inline Poly from_library(const vaip::MVPolynomial& p, std::size_t arity) {
  Poly out;
  for (const auto& t : p.terms()) {
    Label e{Coeffs(arity, 0), t.exponent.constant()};
    for (const auto& [i, c] : t.exponent.coeffs()) e.coeffs.at(static_cast<std::size_t>(i)) = c;
    add(out, t.var, e, t.coeff);
  }
  if (p.constant() != 0) add(out, -1, Label{Coeffs(arity, 0), 0}, p.constant());
  return out;
}

}  // namespace oracle
