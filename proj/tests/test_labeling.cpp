#include <gtest/gtest.h>

#include "support.hpp"
#include "vaip/gauss.hpp"
#include "vaip/labeling.hpp"

using namespace vaip;

TEST(Labeling, TrefoilArcs) {
  const auto lab = propagate(parse("O1+ U2+ U1+ O2+"));
  ASSERT_EQ(lab.labels[0].size(), 4u);
  const Int expected[] = {0, -1, 0, 1};
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_EQ(lab.labels[0][k].self_offset, expected[k]);
    EXPECT_EQ(lab.labels[0][k].ext_offset, 0);
  }
  EXPECT_EQ(lab.component_weights, std::vector<Int>{0});
  EXPECT_TRUE(lab.compatible());
}

TEST(Labeling, HopfWeights) {
  const auto lab = propagate(parse("O1+ ; U1+"));
  EXPECT_EQ(lab.labels[0][0], (ArcLabel{0, 0}));
  EXPECT_EQ(lab.component_weights, (std::vector<Int>{-1, 1}));
  EXPECT_FALSE(lab.compatible());
}

TEST(Labeling, EmptyComponentHasOneArc) {
  const auto lab = propagate(parse("O1+ U1+ ;"));
  ASSERT_EQ(lab.labels[1].size(), 1u);
  EXPECT_EQ(lab.labels[1][0], (ArcLabel{0, 0}));
}

TEST(Labeling, TrefoilCrossingWeights) {
  const auto d = parse("O1+ U2+ U1+ O2+");
  const auto w = crossing_weights(d, propagate(d));
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w[0].exponent, AffineExponent(-1));
  EXPECT_EQ(w[1].exponent, AffineExponent(1));
  EXPECT_EQ(w[0].over_component, 0u);
}

TEST(Labeling, HopfCrossingWeight) {
  const auto d = parse("O1+ ; U1+");
  const auto w = crossing_weights(d, propagate(d));
  AffineExponent e = AffineExponent::symbol(0) - AffineExponent::symbol(1);
  e.add_constant(-1);
  EXPECT_EQ(w[0].exponent, e);
  EXPECT_EQ(w[0].over_component, 0u);
}

TEST(Labeling, PlanarTrefoilWeightsVanish) {
  const auto d = parse("O1+ U2+ O3+ U1+ O2+ U3+");
  for (const auto& w : crossing_weights(d, propagate(d))) EXPECT_TRUE(w.exponent.is_zero());
}

TEST(Labeling, SingularPassesPropagate) {
  EXPECT_EQ(propagate(parse("S1l O2+ S1r U2+")), propagate(parse("O1+ O2+ U1+ U2+")));
  EXPECT_THROW(crossing_weights(parse("S1l S1r"), propagate(parse("S1l S1r"))), Error);
}

TEST(Labeling, RandomDiagramProperties) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const auto d = support::random_diagram(rng, 1 + i % 3, 1 + i % 6);
    const auto lab = propagate(d);
    Int total = 0;
    for (std::size_t c = 0; c < d.num_components(); ++c) {
      const auto& passes = d.components[c].passes;
      if (!passes.empty()) {
        // the self offset returns to zero after a full loop
        const auto last = lab.labels[c].back();
        const auto& p = passes.back();
        const bool self = crossings(d)[static_cast<std::size_t>(p.crossing - 1)].is_self();
        EXPECT_EQ(last.self_offset + (self ? index_change(p) : 0), 0);
      }
      total += lab.component_weights[c];
    }
    EXPECT_EQ(total, 0);

    // labels do not depend on over/under information
    for (const auto& site : crossings(d)) EXPECT_EQ(propagate(switch_crossing(d, site.id)), lab);

    const auto weights = crossing_weights(d, lab);
    for (const auto& w : weights) {
      const auto site = crossings(d)[static_cast<std::size_t>(w.crossing - 1)];
      if (site.is_self()) {
        EXPECT_TRUE(w.exponent.is_constant());
      } else {
        ASSERT_EQ(w.exponent.coeffs().size(), 2u);
      }
      // the negative-crossing formula is the negation of the positive one
      const auto m = combined_label(site.minus_one.component, lab.incoming(site.minus_one));
      const auto p = combined_label(site.plus_one.component, lab.incoming(site.plus_one));
      auto plus_form = m - p;
      plus_form.add_constant(-1);
      auto minus_form = p - m;
      minus_form.add_constant(1);
      EXPECT_EQ(minus_form, negate(plus_form));
      EXPECT_EQ(w.exponent, w.sign > 0 ? plus_form : minus_form);
    }
  }
}
