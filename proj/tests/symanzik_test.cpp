#include <gtest/gtest.h>

#include <random>

#include "graphclass/errors.hpp"
#include "graphclass/families.hpp"
#include "graphclass/multilinear_poly.hpp"
#include "graphclass/symanzik.hpp"
#include "oracle.hpp"

using namespace graphclass;

namespace {

Multigraph c3() { return Multigraph(3, {{0, 1}, {1, 2}, {2, 0}}); }
Multigraph family(Family f, unsigned m) { return generate_family({f, m}); }

MultilinearPoly poly(std::size_t n, std::initializer_list<EdgeMask> masks) {
  MultilinearPoly p(n);
  for (EdgeMask m : masks) p.add_term(m, 1);
  return p;
}

}  // namespace

TEST(PsiByTrees, SingleBridgeIsOne) {
  EXPECT_EQ(psi_by_trees(Multigraph(2, {{0, 1}})), MultilinearPoly::constant(1, 1));
}

TEST(PsiByTrees, SingleLoopIsItsVariable) {
  EXPECT_EQ(psi_by_trees(Multigraph(1, {{0, 0}})), poly(1, {0b1}));
}

TEST(PsiByTrees, TriangleAndBanana) {
  // forests of C_3: {0,1},{0,2},{1,2}; complements t2, t1, t0
  EXPECT_EQ(psi_by_trees(c3()).to_string(), "t0 + t1 + t2");
  // forests of B_3: single edges; complements are the pairs
  EXPECT_EQ(psi_by_trees(family(Family::Banana, 3)).to_string(), "t0*t1 + t0*t2 + t1*t2");
}

TEST(PsiByTrees, EdgelessGraphIsOne) {
  EXPECT_EQ(psi_by_trees(Multigraph(4, {})).to_string(), "1");
}

TEST(PsiByMatrixTree, Examples) {
  EXPECT_EQ(psi_by_matrix_tree(c3()), poly(3, {0b001, 0b010, 0b100}));
  EXPECT_EQ(psi_by_matrix_tree(family(Family::TreePath, 3)), MultilinearPoly::constant(3, 1));
  EXPECT_EQ(psi_by_matrix_tree(family(Family::Bouquet, 2)), poly(2, {0b11}));
}

TEST(PsiByMatrixTree, CompleteGraphK4) {
  // 16 spanning trees (Cayley), each complement has 3 edges
  const MultilinearPoly psi = psi_by_matrix_tree(family(Family::Complete, 4));
  EXPECT_EQ(psi.term_count(), 16u);
  EXPECT_EQ(psi.homogeneous_degree(), 3);
}

TEST(PsiByDeletionContraction, OneStepOnTriangle) {
  // t2 * psi(path) + psi(B_2) = t2 + (t0 + t1)
  const Multigraph g = c3();
  const MultilinearPoly step =
      psi_by_trees(delete_edge(g, 2)).times_var(2) + psi_by_trees(contract_edge(g, 2));
  EXPECT_EQ(step, psi_by_trees(g));
  EXPECT_EQ(psi_by_deletion_contraction(g), psi_by_trees(g));
}

TEST(PsiByDeletionContraction, BridgeAndBouquet) {
  EXPECT_EQ(psi_by_deletion_contraction(Multigraph(2, {{0, 1}})), MultilinearPoly::constant(1, 1));
  EXPECT_EQ(psi_by_deletion_contraction(family(Family::Bouquet, 4)), poly(4, {0b1111}));
}

TEST(Evaluate, Examples) {
  const std::uint64_t ones[] = {1, 1, 1};
  EXPECT_EQ(evaluate(psi_by_trees(c3()), ones, 5), 3u);
  const std::uint64_t x[] = {1, 2, 3};
  // 1*2 + 1*3 + 2*3 = 11 = 4 mod 7
  EXPECT_EQ(evaluate(psi_by_trees(family(Family::Banana, 3)), x, 7), 4u);
  const std::uint64_t y[] = {4, 0};
  EXPECT_EQ(evaluate(MultilinearPoly::constant(2, 1), y, 3), 1u);
}

TEST(Evaluate, Errors) {
  const std::uint64_t x[] = {1, 2, 3};
  EXPECT_THROW(evaluate(psi_by_trees(c3()), x, 9), NotPrimeError);
  EXPECT_THROW(evaluate(psi_by_trees(c3()), std::span(x, 2), 5), std::invalid_argument);
}

TEST(Evaluate, NegativeCoefficientsReduceIntoRange) {
  MultilinearPoly p(2);
  p.add_term(0b01, -3);
  p.add_term(0, 1);
  const std::uint64_t x[] = {2, 0};
  // -6 + 1 = -5 = 2 mod 7
  EXPECT_EQ(evaluate(p, x, 7), 2u);
}

TEST(SplitLastVar, Examples) {
  auto [a, b] = split_last_var(psi_by_trees(c3()), 2);
  EXPECT_EQ(a, MultilinearPoly::constant(3, 1));
  EXPECT_EQ(b, poly(3, {0b001, 0b010}));

  auto [la, lb] = split_last_var(psi_by_trees(Multigraph(1, {{0, 0}})), 0);
  EXPECT_EQ(la, MultilinearPoly::constant(1, 1));
  EXPECT_TRUE(lb.is_zero());

  auto [oa, ob] = split_last_var(MultilinearPoly::constant(3, 1), 1);
  EXPECT_TRUE(oa.is_zero());
  EXPECT_EQ(ob, MultilinearPoly::constant(3, 1));
}

TEST(MultilinearPoly, PrintFormat) {
  MultilinearPoly p(3);
  EXPECT_EQ(p.to_string(), "0");
  p.add_term(0b110, -2);
  p.add_term(0b001, 1);
  p.add_term(0, 5);
  EXPECT_EQ(p.to_string(), "5 + t0 - 2*t1*t2");
}

TEST(MultilinearPoly, ProductRejectsSquares) {
  const MultilinearPoly t0 = MultilinearPoly::monomial(2, 0b01);
  EXPECT_THROW(t0 * t0, PreconditionError);
  EXPECT_THROW(t0.times_var(0), PreconditionError);
  EXPECT_EQ((t0 * MultilinearPoly::monomial(2, 0b10)).to_string(), "t0*t1");
}

TEST(MultilinearPoly, Compacted) {
  // t1*t3 + t3 over ambient {1,3} -> t0*t1 + t1
  MultilinearPoly p(4);
  p.add_term(0b1010, 1);
  p.add_term(0b1000, 1);
  const MultilinearPoly c = p.compacted(0b1010);
  EXPECT_EQ(c.var_count(), 2u);
  EXPECT_EQ(c.to_string(), "t1 + t0*t1");
  EXPECT_THROW(p.compacted(0b0010), std::invalid_argument);
}

// Properties over random multigraphs.

TEST(PsiProperties, ThreeConstructionsAgree) {
  std::mt19937_64 rng(101);
  for (int iter = 0; iter < 150; ++iter) {
    const Multigraph g = oracle::random_multigraph(rng, 5, 8);
    const MultilinearPoly trees = psi_by_trees(g);
    EXPECT_EQ(trees, psi_by_matrix_tree(g));
    EXPECT_EQ(trees, psi_by_deletion_contraction(g));
  }
}

TEST(PsiProperties, StructuralInvariants) {
  std::mt19937_64 rng(103);
  for (int iter = 0; iter < 150; ++iter) {
    const Multigraph g = oracle::random_multigraph(rng, 6, 8);
    const MultilinearPoly psi = psi_by_trees(g);
    for (const auto& [vars, c] : psi.terms()) EXPECT_EQ(c, 1);
    EXPECT_EQ(psi.term_count(), oracle::forests(g).size());
    EXPECT_EQ(psi.homogeneous_degree(), static_cast<int>(betti_1(g)));
    std::vector<std::uint64_t> ones(psi.var_count(), 1);
    EXPECT_EQ(evaluate(psi, ones, 1'000'003), psi.term_count() % 1'000'003);
  }
}

TEST(PsiProperties, SplitReassemblesAndMatchesMinors) {
  std::mt19937_64 rng(107);
  for (int iter = 0; iter < 100; ++iter) {
    const Multigraph g = oracle::random_multigraph(rng, 5, 7);
    const MultilinearPoly psi = psi_by_trees(g);
    for (const Edge& e : g.edges()) {
      auto [a, b] = split_last_var(psi, e.label);
      EXPECT_EQ(a.times_var(e.label) + b, psi);
      if (classify_edge(g, e.label) == EdgeKind::Regular) {
        EXPECT_EQ(a, psi_by_trees(delete_edge(g, e.label)));
        EXPECT_EQ(b, psi_by_trees(contract_edge(g, e.label)));
      }
    }
  }
}

TEST(PsiProperties, DisjointUnionMultiplies) {
  std::mt19937_64 rng(109);
  for (int iter = 0; iter < 60; ++iter) {
    const Multigraph a = oracle::random_multigraph(rng, 4, 4);
    const Multigraph b = oracle::random_multigraph(rng, 4, 4);
    const Multigraph u = disjoint_union(a, b);
    MultilinearPoly pb(u.label_space());
    const MultilinearPoly psi_b = psi_by_trees(b);
    for (const auto& [vars, c] : psi_b.terms()) pb.add_term(vars << a.label_space(), c);
    EXPECT_EQ(psi_by_trees(u), psi_by_trees(a).with_var_count(u.label_space()) * pb);
  }
}
