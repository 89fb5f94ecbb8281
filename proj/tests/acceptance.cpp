// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "support.hpp"
#include "vaip/gauss.hpp"
#include "vaip/invariant.hpp"
#include "vaip/moves.hpp"
#include "vaip/poly_json.hpp"
#include "vaip/shift.hpp"
#include "vaip/vassiliev.hpp"

using namespace vaip;

namespace {

struct Outcome {
  std::size_t checks = 0;
  std::vector<std::string> problems;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && problems.size() < 5) problems.push_back(what);
    if (!ok && problems.size() == 5) problems.push_back("...");
  }
  bool ok() const { return problems.empty(); }
};

bool run(int number, const std::string& title, double budget_s,
         const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.problems.push_back(std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > budget_s) {
    std::ostringstream msg;
    msg << "took " << secs << " s, budget " << budget_s << " s";
    out.problems.push_back(msg.str());
  }
  const bool ok = out.ok();
  std::printf("%s criterion %d: %s (%zu checks, %.2f s)\n", ok ? "PASS" : "FAIL", number,
              title.c_str(), out.checks, secs);
  for (const auto& p : out.problems) std::printf("    %s\n", p.c_str());
  std::fflush(stdout);
  return ok;
}

MVPolynomial poly_of(const LinkDiagram& d) { return mvaip(d).polynomial; }

std::vector<LinkDiagram> with_random(std::vector<LinkDiagram> base, std::uint64_t seed,
                                     std::size_t count, int max_crossings) {
  const auto extra = support::random_corpus(seed, count, max_crossings);
  base.insert(base.end(), extra.begin(), extra.end());
  return base;
}

void fixture_values(Outcome& out) {
  struct Fixture {
    const char* code;
    const char* text;
    std::vector<long long> weights;
  };
  const std::vector<Fixture> fixtures{
      {"O1+ U2+ U1+ O2+", "t1 + t1^(-1) - 2", {0}},
      {"O1+ ; U1+", "t1^(A-B-1) - 1", {-1, 1}},
      {"O1+ O2+ ; U1+ U2+", "t1^(A-B-1) + t1^(A-B-3) - 2", {-2, 2}},
      {"O1+ U2+ O3+ U1+ O2+ U3+", "0", {0}},
      {"O1+ U2+ O3- U4- U1+ O2+ U3- O4-", "0", {0}},
      {"O1+ U2- O3- U1+ O4+ U3- O2- U4+", "0", {0}},
  };
  for (const auto& f : fixtures) {
    const auto d = parse(f.code);
    const auto inv = mvaip(d);
    const auto ref = oracle::mvaip(d);
    out.expect(render(inv.polynomial) == f.text,
               std::string(f.code) + " gave " + render(inv.polynomial));
    out.expect(oracle::from_library(inv.polynomial, d.num_components()) == ref.poly,
               std::string(f.code) + " disagrees with the oracle");
    out.expect(ref.weights == f.weights, std::string(f.code) + " oracle weights");
    out.expect(std::vector<long long>(inv.component_weights.begin(),
                                      inv.component_weights.end()) == f.weights,
               std::string(f.code) + " weights");
  }
  // the fixture text itself, rebuilt from oracle terms
  oracle::Poly trefoil;
  oracle::add(trefoil, 0, {{0}, 1}, 1);
  oracle::add(trefoil, 0, {{0}, -1}, 1);
  oracle::add(trefoil, -1, {{0}, 0}, -2);
  out.expect(oracle::mvaip(parse("O1+ U2+ U1+ O2+")).poly == trefoil, "oracle trefoil");
}

void reidemeister_fuzz(Outcome& out, const std::vector<LinkDiagram>& corpus) {
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& d = corpus[i];
    const auto expected = poly_of(d);
    const auto links = linking_degrees(d);
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      const auto res = fuzz(d, seed * 1000 + i, 20);
      ++pairs;
      const std::string where = serialize(d) + " seed " + std::to_string(seed * 1000 + i);
      out.expect(res.moves.size() == 20, where + ": only " + std::to_string(res.moves.size()) +
                                             " moves");
      out.expect(poly_of(res.diagram) == expected, where + ": " + format_trace(res.moves));
      out.expect(linking_degrees(res.diagram) == links, where + ": linking degrees");
    }
  }
  out.expect(corpus.size() >= 20, "corpus has fewer than 20 diagrams");
  out.expect(pairs >= 1000, "fewer than 1000 pairs");
}

void vassiliev_order(Outcome& out, const std::vector<LinkDiagram>& corpus) {
  std::vector<LinkDiagram> singular;
  for (const auto& d : corpus) {
    if (crossings(d).size() > 6) continue;
    for (auto& sd : pair_singularizations(d)) singular.push_back(std::move(sd));
    for (auto& sd : single_singularizations(d)) singular.push_back(std::move(sd));
  }
  const auto witness = parse("S1l O2+ S1r U2+");
  singular.push_back(witness);
  const auto rep = order_report(singular);
  out.checks += rep.checked;
  for (const auto& f : rep.failures)
    out.expect(false, to_text(f.diagram) + " gave " + render(f.value));
  out.expect(!rep.witnesses.empty(), "no nonzero value with one double point");
  out.expect(render(v_extend(witness)) == "t1 + t1^(-1) - 2",
             "singular trefoil gave " + render(v_extend(witness)));
  out.expect(v_extend(parse("S1l S2l S1r S2r")).is_zero(), "fully singular trefoil");
}

void knot_symmetries(Outcome& out, const std::vector<LinkDiagram>& corpus) {
  std::size_t knots = 0;
  for (const auto& d : corpus) {
    if (d.num_components() != 1) continue;
    ++knots;
    const auto p = poly_of(d);
    out.expect(poly_of(mirror(d)) == poly_negate(negate_exponents(p)), "mirror of " + serialize(d));
    out.expect(poly_of(reverse(d)) == negate_exponents(p), "reverse of " + serialize(d));
  }
  out.expect(knots >= 10, "too few knots");
}

void shift_transport(Outcome& out, const std::vector<LinkDiagram>& corpus) {
  std::size_t triples = 0;
  for (const auto& d : corpus) {
    const auto inv = mvaip(d);
    const auto self = self_crossing_part(inv, d);
    for (std::size_t c = 0; c < d.num_components(); ++c) {
      const std::size_t len = d.components[c].size();
      for (std::size_t k = 0; k <= len; ++k) {
        ++triples;
        const ShiftSpec spec{c, k};
        const auto moved = shift_diagram(d, spec);
        const auto moved_inv = mvaip(moved);
        const std::string where =
            serialize(d) + " component " + std::to_string(c + 1) + " steps " + std::to_string(k);
        out.expect(predict(inv, d, spec) == moved_inv.polynomial, where);
        if (k == len) out.expect(predict(inv, d, spec) == inv.polynomial, where + " full loop");
        if (inv.compatible())
          out.expect(self_crossing_part(moved_inv, moved) == self, where + " self crossings");
      }
    }
  }
  out.expect(triples >= 500, "only " + std::to_string(triples) + " triples");
}

void collapse_consistency(Outcome& out, const std::vector<LinkDiagram>& corpus) {
  std::size_t links = 0;
  for (const auto& d : corpus) {
    if (!mvaip(d).compatible()) continue;
    if (d.num_components() > 1) ++links;
    out.expect(oracle::from_library(kauffman_link_aip(d), d.num_components()) ==
                   oracle::single_label(d),
               serialize(d));
  }
  out.expect(links >= 5, "too few compatible links");

  const auto fig8 = parse("O1+ O2+ U1+ U3+ ; O3+ U2+");
  out.expect(render(mvaip(fig8).polynomial) == "t1 + t1^(A-B-1) + t2^(B-A) - 3", "two-component fixture");
  const auto n_form = collapse(mvaip(fig8).polynomial, Collapse::difference_form(2));
  MVPolynomial expected(-3);
  expected.add_term(0, AffineExponent::symbol(2).add_constant(-1), 1);
  expected.add_term(0, AffineExponent::symbol(2, -1), 1);
  expected.add_term(0, AffineExponent(1), 1);
  out.expect(n_form == expected, "N-form collapse");
}

void serialization(Outcome& out) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const auto d = support::random_diagram(rng, 1 + i % 4, i % 9, 0.25);
    const auto text = serialize(d);
    const auto back = parse(text);
    out.expect(back == canonicalize(d), "round trip of " + text);
    out.expect(serialize(back) == text, "fixpoint of " + text);

    const auto classical = support::random_diagram(rng, 1 + i % 3, i % 8);
    const auto p = poly_of(classical);
    const auto j = to_json(p);
    std::string why;
    out.expect(matches_schema(j, &why), "schema: " + why);
    out.expect(from_json(nlohmann::json::parse(j.dump())) == p, "json round trip " + j.dump());
  }
}

}  // namespace

int main() {
  const auto corpus = support::load_corpus();
  bool ok = true;
  ok &= run(1, "fixture values", 1.0, fixture_values);
  ok &= run(2, "Reidemeister invariance fuzz", 60.0,
            [&](Outcome& o) { reidemeister_fuzz(o, corpus); });
  ok &= run(3, "Vassiliev order one", 30.0,
            [&](Outcome& o) { vassiliev_order(o, with_random(corpus, 3, 300, 6)); });
  ok &= run(4, "knot symmetries", 10.0,
            [&](Outcome& o) { knot_symmetries(o, with_random(corpus, 4, 300, 8)); });
  ok &= run(5, "starting-point transport", 30.0,
            [&](Outcome& o) { shift_transport(o, with_random(corpus, 5, 200, 7)); });
  ok &= run(6, "collapse consistency", 10.0,
            [&](Outcome& o) { collapse_consistency(o, with_random(corpus, 6, 300, 7)); });
  ok &= run(7, "serialization round trips", 10.0, serialization);
  return ok ? 0 : 1;
}
