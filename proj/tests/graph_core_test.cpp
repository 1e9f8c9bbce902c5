#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "graphclass/errors.hpp"
#include "graphclass/families.hpp"
#include "graphclass/multigraph.hpp"
#include "oracle.hpp"

using namespace graphclass;

namespace {

Multigraph c3() { return Multigraph(3, {{0, 1}, {1, 2}, {2, 0}}); }
Multigraph banana(unsigned m) { return generate_family({Family::Banana, m}); }
Multigraph bouquet(unsigned m) { return generate_family({Family::Bouquet, m}); }

}  // namespace

TEST(ClassifyEdge, SingleEdgeIsBridge) {
  EXPECT_EQ(classify_edge(Multigraph(2, {{0, 1}}), 0), EdgeKind::Bridge);
}

TEST(ClassifyEdge, SingleLoop) { EXPECT_EQ(classify_edge(Multigraph(1, {{0, 0}}), 0), EdgeKind::Loop); }

TEST(ClassifyEdge, TriangleEdgesAreRegular) {
  for (EdgeLabel e = 0; e < 3; ++e) EXPECT_EQ(classify_edge(c3(), e), EdgeKind::Regular);
}

TEST(ClassifyEdge, UnknownLabel) {
  EXPECT_THROW(classify_edge(c3(), 7), LabelError);
  EXPECT_THROW(delete_edge(c3(), 3), LabelError);
  EXPECT_THROW(contract_edge(c3(), 3), LabelError);
}

TEST(DeleteEdge, TriangleBecomesPathWithOriginalLabels) {
  const Multigraph path = delete_edge(c3(), 1);
  EXPECT_EQ(path.vertex_count(), 3u);
  ASSERT_EQ(path.edge_count(), 2u);
  EXPECT_EQ(path.edges()[0], (Edge{0, 1, 0}));
  EXPECT_EQ(path.edges()[1], (Edge{2, 0, 2}));
  EXPECT_EQ(path.label_space(), 3u);
  EXPECT_TRUE(path.is_forest());
}

TEST(DeleteEdge, LoopLeavesBareVertex) {
  const Multigraph g = delete_edge(bouquet(1), 0);
  EXPECT_EQ(g.vertex_count(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(DeleteEdge, BananaShrinks) {
  const Multigraph g = delete_edge(banana(3), 0);
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.edge_mask(), EdgeMask{0b110});
}

TEST(ContractEdge, BananaTwoGivesLoop) {
  const Multigraph g = contract_edge(banana(2), 0);
  EXPECT_EQ(g.vertex_count(), 1u);
  ASSERT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 0, 1}));
}

TEST(ContractEdge, TriangleGivesBananaTwo) {
  const Multigraph g = contract_edge(c3(), 2);
  EXPECT_EQ(g.vertex_count(), 2u);
  ASSERT_EQ(g.edge_count(), 2u);
  for (const Edge& e : g.edges()) EXPECT_FALSE(e.is_loop());
  EXPECT_EQ(classify_edge(g, 0), EdgeKind::Regular);
}

TEST(ContractEdge, BridgeLeavesIsolatedVertex) {
  const Multigraph g = contract_edge(Multigraph(2, {{0, 1}}), 0);
  EXPECT_EQ(g.vertex_count(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(ContractEdge, LoopIsRejected) {
  EXPECT_THROW(contract_edge(bouquet(2), 0), PreconditionError);
}

TEST(SpanningForests, Triangle) {
  EXPECT_EQ(spanning_forests(c3()), (std::vector<EdgeMask>{0b011, 0b101, 0b110}));
}

TEST(SpanningForests, LoopHasOnlyEmptyForest) {
  EXPECT_EQ(spanning_forests(bouquet(1)), (std::vector<EdgeMask>{0}));
}

TEST(SpanningForests, TreeIsItsOwnForest) {
  const Multigraph tree = generate_family({Family::TreePath, 4});
  EXPECT_EQ(spanning_forests(tree), (std::vector<EdgeMask>{0b1111}));
}

TEST(SpanningForests, DisconnectedGraphTakesOneTreePerComponent) {
  // triangle plus a separate banana B_2: 3 * 2 forests of size 3
  const Multigraph g(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {3, 4}});
  const auto fs = spanning_forests(g);
  EXPECT_EQ(fs.size(), 6u);
  for (EdgeMask f : fs) EXPECT_EQ(__builtin_popcountll(f), 3);
}

TEST(Betti, Examples) {
  EXPECT_EQ(betti_1(c3()), 1u);
  EXPECT_EQ(betti_1(generate_family({Family::TreePath, 3})), 0u);
  EXPECT_EQ(betti_1(bouquet(4)), 4u);
  EXPECT_EQ(betti_1(Multigraph(3, {})), 0u);
}

TEST(Multigraph, IsolatedVerticesAllowed) {
  const Multigraph g(5, {{0, 1}});
  EXPECT_EQ(g.component_count(), 4u);
  EXPECT_EQ(classify_edge(g, 0), EdgeKind::Bridge);
  EXPECT_EQ(spanning_forests(g), (std::vector<EdgeMask>{1}));
}

TEST(Multigraph, RejectsBadEndpointsAndLabels) {
  EXPECT_THROW(Multigraph(2, {{0, 2}}), std::out_of_range);
  EXPECT_THROW(Multigraph::with_labels(2, {Edge{0, 1, 1}, Edge{0, 1, 1}}), std::invalid_argument);
}

TEST(Multigraph, DisjointUnionShiftsLabels) {
  const Multigraph u = disjoint_union(c3(), bouquet(2));
  EXPECT_EQ(u.vertex_count(), 4u);
  EXPECT_EQ(u.label_space(), 5u);
  EXPECT_EQ(u.edge(3), (Edge{3, 3, 3}));
  EXPECT_EQ(u.component_count(), 2u);
}

// Properties over random multigraphs.

TEST(GraphProperties, ForestCountSplitsOverAnyNonLoopEdge) {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 200; ++iter) {
    const Multigraph g = oracle::random_multigraph(rng, 5, 7);
    const auto total = spanning_forests(g).size();
    for (const Edge& e : g.edges()) {
      if (e.is_loop()) continue;
      EXPECT_EQ(total, spanning_forests(contract_edge(g, e.label)).size() +
                           (classify_edge(g, e.label) == EdgeKind::Bridge
                                ? 0
                                : spanning_forests(delete_edge(g, e.label)).size()));
    }
  }
}

TEST(GraphProperties, KindMatchesForestMembership) {
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 200; ++iter) {
    const Multigraph g = oracle::random_multigraph(rng, 5, 7);
    const auto fs = spanning_forests(g);
    for (const Edge& e : g.edges()) {
      const EdgeMask bit = EdgeMask{1} << e.label;
      std::size_t containing = 0;
      for (EdgeMask f : fs) containing += (f & bit) ? 1 : 0;
      const EdgeKind kind = classify_edge(g, e.label);
      EXPECT_EQ(kind == EdgeKind::Bridge, containing == fs.size());
      EXPECT_EQ(kind == EdgeKind::Loop, containing == 0);
    }
  }
}

TEST(GraphProperties, ForestsMatchSubsetEnumeration) {
  std::mt19937_64 rng(29);
  for (int iter = 0; iter < 200; ++iter) {
    const Multigraph g = oracle::random_multigraph(rng, 6, 8);
    auto ours = spanning_forests(g);
    // lexicographic on ascending label sequences
    for (std::size_t i = 1; i < ours.size(); ++i) {
      const auto a = labels_of(ours[i - 1]);
      const auto b = labels_of(ours[i]);
      EXPECT_TRUE(std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()));
    }
    auto theirs = oracle::forests(g);
    std::sort(ours.begin(), ours.end());
    std::sort(theirs.begin(), theirs.end());
    EXPECT_EQ(ours, theirs);
  }
}

TEST(GraphProperties, DeleteAndContractCommuteOnDistinctLabels) {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 200; ++iter) {
    const Multigraph g = oracle::random_multigraph(rng, 5, 6);
    for (const Edge& a : g.edges()) {
      for (const Edge& b : g.edges()) {
        if (a.label == b.label || b.is_loop()) continue;
        EXPECT_EQ(contract_edge(delete_edge(g, a.label), b.label),
                  delete_edge(contract_edge(g, b.label), a.label));
      }
    }
  }
}
