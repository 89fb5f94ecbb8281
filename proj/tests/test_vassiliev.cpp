#include <gtest/gtest.h>

#include "support.hpp"
#include "vaip/gauss.hpp"
#include "vaip/invariant.hpp"
#include "vaip/labeling.hpp"
#include "vaip/vassiliev.hpp"

using namespace vaip;

TEST(Vassiliev, ClassicalDiagramResolvesToItself) {
  const auto d = parse("O1+ U2+ U1+ O2+");
  const auto r = resolve(d);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].coefficient, 1);
  EXPECT_EQ(r[0].diagram, d);
  EXPECT_EQ(v_extend(d), mvaip(d).polynomial);
}

TEST(Vassiliev, OneDoublePoint) {
  const auto sd = parse("S1l O2+ S1r U2+");
  const auto r = resolve(sd);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].coefficient, 1);
  EXPECT_EQ(r[0].diagram, parse("O1+ O2+ U1+ U2+"));
  EXPECT_EQ(r[1].coefficient, -1);
  EXPECT_EQ(r[1].diagram, parse("U1- O2+ O1- U2+"));
  EXPECT_TRUE(mvaip(r[1].diagram).polynomial.is_zero());
  EXPECT_EQ(render(v_extend(sd)), "t1 + t1^(-1) - 2");
}

TEST(Vassiliev, TwoDoublePoints) {
  const auto sd = parse("S1l S2l S1r S2r");
  const auto r = resolve(sd);
  ASSERT_EQ(r.size(), 4u);
  EXPECT_EQ(r[0].coefficient, 1);
  EXPECT_EQ(r[1].coefficient, -1);
  EXPECT_EQ(r[2].coefficient, -1);
  EXPECT_EQ(r[3].coefficient, 1);
  EXPECT_TRUE(v_extend(sd).is_zero());
}

TEST(Vassiliev, LabelsIgnoreResolution) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 60; ++i) {
    const auto sd = support::random_diagram(rng, 1 + i % 3, 2 + i % 4, 0.5);
    const auto lab = propagate(sd);
    for (const auto& r : resolve(sd)) EXPECT_EQ(propagate(r.diagram), lab);
  }
}

TEST(Vassiliev, SingleDoublePointIsADifference) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 60; ++i) {
    const auto d = support::random_diagram(rng, 1 + i % 3, 1 + i % 5);
    for (const auto& sd : single_singularizations(d)) {
      const auto r = resolve(sd);
      EXPECT_EQ(v_extend(sd), mvaip(r[0].diagram).polynomial - mvaip(r[1].diagram).polynomial);
    }
  }
}

TEST(Vassiliev, SingularizeKeepsRoles) {
  const auto d = parse("O1+ U2- U1+ O2-");
  const int ids[] = {1, 2};
  EXPECT_EQ(singularize(d, ids), parse("S1l S2l S1r S2r"));
  const int missing[] = {5};
  EXPECT_THROW(singularize(d, missing), Error);
  // resolving with the original signs gives back the original diagram
  const int one[] = {1};
  EXPECT_EQ(resolve(singularize(d, one))[0].diagram, d);
  EXPECT_EQ(pair_singularizations(parse("O1+ U2+ O3+ U1+ O2+ U3+")).size(), 3u);
}

TEST(Vassiliev, OrderReport) {
  EXPECT_TRUE(order_report({}).passed());
  const auto pairs = pair_singularizations(parse("O1+ U2+ U1+ O2+"));
  const auto rep = order_report(pairs);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.checked, 1u);

  const std::vector<LinkDiagram> with_witness{parse("S1l O2+ S1r U2+")};
  const auto w = order_report(with_witness);
  EXPECT_TRUE(w.passed());
  ASSERT_EQ(w.witnesses.size(), 1u);

  const std::vector<LinkDiagram> no_witness{parse("S1l S1r")};
  EXPECT_FALSE(order_report(no_witness).passed());
}

TEST(Vassiliev, OrderOneOnRandomDiagrams) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 80; ++i) {
    const auto d = support::random_diagram(rng, 1 + i % 3, 2 + i % 5);
    for (const auto& sd : pair_singularizations(d)) EXPECT_TRUE(v_extend(sd).is_zero());
  }
  for (int i = 0; i < 40; ++i) {
    auto sd = support::random_diagram(rng, 1 + i % 2, 3 + i % 3, 1.0);
    EXPECT_TRUE(v_extend(sd).is_zero());
  }
}

TEST(Vassiliev, CompatibleLinkWitness) {
  const auto sd = parse("S1l U2+ ; S1r O2+");
  EXPECT_FALSE(v_extend(sd).is_zero());
}
