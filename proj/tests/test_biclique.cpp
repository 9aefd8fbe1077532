#include <gtest/gtest.h>

#include "support.hpp"
#include "vcldim/biclique.hpp"
#include "vcldim/error.hpp"

using namespace vcldim;

TEST(Biclique, CompleteGraph) {
  const BipartiteGraph g = BipartiteGraph::complete(3, 8);
  const auto w = contains_biclique(g, 3, 8);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->side_a, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(w->side_b, (std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6, 7}));
  EXPECT_TRUE(is_biclique(g, *w));
}

TEST(Biclique, EdgelessAndEmptySide) {
  const BipartiteGraph g(4, 5);
  EXPECT_FALSE(contains_biclique(g, 1, 1));
  const auto w = contains_biclique(g, 0, 3);
  ASSERT_TRUE(w);
  EXPECT_TRUE(w->side_a.empty());
  EXPECT_EQ(w->side_b, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_FALSE(contains_biclique(g, 0, 6));
  EXPECT_FALSE(contains_biclique(g, 5, 0));
  EXPECT_TRUE(contains_biclique(g, 4, 0));
}

TEST(Biclique, Exponential) {
  EXPECT_TRUE(contains_exponential_biclique(BipartiteGraph::complete(3, 8), 3));
  EXPECT_FALSE(contains_exponential_biclique(BipartiteGraph::complete(3, 7), 3));
  EXPECT_TRUE(contains_exponential_biclique(BipartiteGraph(2, 1), 0));
  EXPECT_FALSE(contains_exponential_biclique(BipartiteGraph(2, 0), 0));
  EXPECT_THROW(contains_exponential_biclique(BipartiteGraph(2, 2), 63), InvalidArgument);
}

TEST(Biclique, MaxBalanced) {
  EXPECT_EQ(max_balanced_biclique(BipartiteGraph::complete(4, 4), 4), 4u);
  EXPECT_EQ(max_balanced_biclique(BipartiteGraph::complete(4, 4), 2), 2u);
  EXPECT_EQ(max_balanced_biclique(BipartiteGraph(5, 5), 5), 0u);
  EXPECT_EQ(max_balanced_biclique(BipartiteGraph::complete(3, 6), 10), 3u);
}

TEST(Biclique, LexicographicallyFirstWitness) {
  // rows: a0 -> {0}, a1 -> {0,1,2}, a2 -> {1,2}, a3 -> {0,1,2}
  BipartiteGraph g(4, 3);
  g.add_edge(0, 0);
  for (std::size_t b : {0, 1, 2}) g.add_edge(1, b);
  g.add_edge(2, 1);
  g.add_edge(2, 2);
  for (std::size_t b : {0, 1, 2}) g.add_edge(3, b);
  const auto w = contains_biclique(g, 2, 2);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->side_a, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(w->side_b, (std::vector<std::size_t>{1, 2}));
  const auto w3 = contains_biclique(g, 2, 3);
  ASSERT_TRUE(w3);
  EXPECT_EQ(w3->side_a, (std::vector<std::size_t>{1, 3}));
}

TEST(Biclique, IsBicliqueRejectsMissingEdge) {
  BipartiteGraph g = BipartiteGraph::complete(2, 2);
  g.remove_edge(1, 1);
  EXPECT_FALSE(is_biclique(g, {{0, 1}, {0, 1}}));
  EXPECT_TRUE(is_biclique(g, {{0, 1}, {0}}));
  EXPECT_FALSE(is_biclique(g, {{0, 2}, {0}}));
}

TEST(Biclique, AgreesWithBruteForceAndMonotone) {
  RandomSource rng(31);
  for (int k = 0; k < 120; ++k) {
    const std::size_t na = 1 + rng.uniform_below(9), nb = 1 + rng.uniform_below(12);
    const BipartiteGraph g = testsupport::random_bigraph(rng, na, nb, {1 + rng.uniform_below(3), 4});
    for (std::size_t a = 0; a <= na; ++a) {
      for (std::size_t b = 0; b <= nb + 1; ++b) {
        const auto w = contains_biclique(g, a, b);
        ASSERT_EQ(w.has_value(), testsupport::brute_has_biclique(g, a, b)) << a << " " << b;
        if (w) {
          EXPECT_EQ(w->side_a.size(), a);
          EXPECT_EQ(w->side_b.size(), b);
          EXPECT_TRUE(is_biclique(g, *w));
          if (a > 0) {
            EXPECT_TRUE(contains_biclique(g, a - 1, b));
          }
          if (b > 0) {
            EXPECT_TRUE(contains_biclique(g, a, b - 1));
          }
        }
      }
    }
    // deleting an edge never creates a biclique
    BipartiteGraph h = g;
    h.remove_edge(rng.uniform_below(na), rng.uniform_below(nb));
    EXPECT_TRUE(h.is_subgraph_of(g));
    for (std::size_t a = 1; a <= na; ++a) {
      for (std::size_t b = 1; b <= nb; ++b) {
        if (contains_biclique(h, a, b)) {
          EXPECT_TRUE(contains_biclique(g, a, b));
        }
      }
    }
    const std::size_t cap = std::min(na, nb);
    std::size_t expect = 0;
    for (std::size_t s = 1; s <= cap; ++s) {
      if (testsupport::brute_has_biclique(g, s, s)) expect = s;
    }
    EXPECT_EQ(max_balanced_biclique(g, cap), expect);
  }
}

TEST(GapVerdict, Biclique) {
  EXPECT_EQ(gap_biclique_verdict(BipartiteGraph::complete(4, 4), 4, 2), GapVerdict::kYes);
  EXPECT_EQ(gap_biclique_verdict(BipartiteGraph(4, 4), 4, 2), GapVerdict::kNo);
  BipartiteGraph g(5, 5);
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) g.add_edge(a, b);
  }
  EXPECT_EQ(gap_biclique_verdict(g, 4, 2), GapVerdict::kNeither);
  EXPECT_THROW(gap_biclique_verdict(g, 2, 4), InvalidArgument);
}

TEST(GapVerdict, ExponentialBiclique) {
  EXPECT_EQ(gap_exp_biclique_verdict(BipartiteGraph::complete(3, 8), 3, 1), GapVerdict::kYes);
  BipartiteGraph single(2, 2);
  single.add_edge(0, 0);
  EXPECT_EQ(gap_exp_biclique_verdict(single, 2, 1), GapVerdict::kNo);
  EXPECT_EQ(gap_exp_biclique_verdict(BipartiteGraph::complete(1, 2), 2, 1), GapVerdict::kNeither);
  EXPECT_THROW(gap_exp_biclique_verdict(single, 1, 2), InvalidArgument);
}

TEST(GapVerdict, VcLdim) {
  EXPECT_EQ(gap_vcldim_verdict(testsupport::full_class(3), 3, 1), GapVerdict::kYes);
  EXPECT_EQ(gap_vcldim_verdict(ConceptClass::from_columns(2, {"01"}), 2, 1), GapVerdict::kNo);
  EXPECT_EQ(gap_vcldim_verdict(ConceptClass::from_columns(2, {"00", "11"}), 2, 1), GapVerdict::kNeither);
  EXPECT_THROW(gap_vcldim_verdict(ConceptClass(2, 0), 2, 1), InvalidArgument);
  EXPECT_THROW(gap_vcldim_verdict(testsupport::full_class(2), 1, 2), InvalidArgument);
  EXPECT_EQ(to_string(GapVerdict::kYes), "YES");
  EXPECT_EQ(to_string(GapVerdict::kNo), "NO");
  EXPECT_EQ(to_string(GapVerdict::kNeither), "NEITHER");
}
