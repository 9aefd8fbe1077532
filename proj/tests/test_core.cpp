#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <set>

#include "support.hpp"
#include "vcldim/bit_row.hpp"
#include "vcldim/concept_class.hpp"
#include "vcldim/error.hpp"
#include "vcldim/formats.hpp"
#include "vcldim/graphs.hpp"
#include "vcldim/random.hpp"

using namespace vcldim;

TEST(BitRow, SetTestCountAcrossWords) {
  BitRow r(130);
  EXPECT_TRUE(r.none());
  r.set(0);
  r.set(63);
  r.set(64);
  r.set(129);
  EXPECT_EQ(r.count(), 4u);
  EXPECT_TRUE(r.test(64));
  EXPECT_FALSE(r.test(65));
  EXPECT_EQ(r.find_first(), 0u);
  EXPECT_EQ(r.find_next(1), 63u);
  EXPECT_EQ(r.find_next(65), 129u);
  EXPECT_EQ(r.find_next(130), 130u);
  std::vector<std::size_t> seen;
  r.for_each_set([&](std::size_t i) { seen.push_back(i); });
  EXPECT_EQ(seen, (std::vector<std::size_t>{0, 63, 64, 129}));
}

TEST(BitRow, FilledRowHasNoStrayBits) {
  BitRow r(70, true);
  EXPECT_EQ(r.count(), 70u);
  BitRow s(70);
  s.set(3);
  EXPECT_TRUE(s.is_subset_of(r));
  EXPECT_FALSE(r.is_subset_of(s));
  EXPECT_EQ(r.and_count(s), 1u);
  BitRow d = r;
  d.subtract(s);
  EXPECT_EQ(d.count(), 69u);
  EXPECT_EQ((d | s), r);
  EXPECT_TRUE((d & s).none());
}

TEST(BitMatrix, ColumnExtraction) {
  BitMatrix m(3, 4);
  m.set(0, 1, true);
  m.set(2, 1, true);
  m.set(1, 3, true);
  const BitRow col = m.column(1);
  EXPECT_TRUE(col.test(0));
  EXPECT_FALSE(col.test(1));
  EXPECT_TRUE(col.test(2));
  EXPECT_EQ(m.count(), 3u);
}

// --- ccls format

TEST(Formats, SmallestClass) {
  const ConceptClass c = parse_concept_class("ccls 1\npoints 1\nconcepts 2\n01\n");
  ASSERT_EQ(c.n_points(), 1u);
  ASSERT_EQ(c.n_concepts(), 2u);
  EXPECT_FALSE(c.label(0, 0));
  EXPECT_TRUE(c.label(0, 1));
}

TEST(Formats, FullClassOnTwoPointsRoundTrip) {
  const std::string text = "ccls 1\npoints 2\nconcepts 4\n0101\n0011\n";
  const ConceptClass c = parse_concept_class(text);
  EXPECT_EQ(c, testsupport::full_class(2));
  EXPECT_EQ(serialize_concept_class(c), text);
}

TEST(Formats, EmptyClass) {
  const std::string text = serialize_concept_class(ConceptClass(0, 0));
  EXPECT_EQ(text, "ccls 1\npoints 0\nconcepts 0\n");
  EXPECT_EQ(parse_concept_class(text), ConceptClass(0, 0));
}

TEST(Formats, BadCharacterReportsLine) {
  try {
    parse_concept_class("ccls 1\npoints 2\nconcepts 3\n010\n012\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 5u);
  }
}

TEST(Formats, ConceptClassRejections) {
  EXPECT_THROW(parse_concept_class("ccls 2\npoints 1\nconcepts 1\n0\n"), ParseError);
  EXPECT_THROW(parse_concept_class("ccls 1\npoints 1\nconcepts 2\n0\n"), ParseError);
  EXPECT_THROW(parse_concept_class("ccls 1\npoints 2\nconcepts 1\n0\n"), ParseError);
  EXPECT_THROW(parse_concept_class("ccls 1\npoints 1\nconcepts 1\n0"), ParseError);
  EXPECT_THROW(parse_concept_class("ccls 1\r\npoints 1\nconcepts 1\n0\n"), ParseError);
  EXPECT_THROW(parse_concept_class("ccls 1\npoints 1\nconcepts 1\n0\n1\n"), ParseError);
}

TEST(Formats, RandomClassesRoundTrip) {
  RandomSource rng(11);
  for (int k = 0; k < 50; ++k) {
    const ConceptClass c = testsupport::random_class(rng, rng.uniform_below(9), rng.uniform_below(70));
    const std::string text = serialize_concept_class(c);
    EXPECT_EQ(parse_concept_class(text), c);
    EXPECT_EQ(serialize_concept_class(parse_concept_class(text)), text);
  }
}

// --- bigraph / graph formats

TEST(Formats, CompleteBigraphRoundTrip) {
  const BipartiteGraph g = BipartiteGraph::complete(2, 2);
  const std::string text = serialize_bigraph(g);
  EXPECT_EQ(text, "bigraph 1\nA 2\nB 2\nedges 4\n0 0\n0 1\n1 0\n1 1\n");
  EXPECT_EQ(parse_bigraph(text), g);
}

TEST(Formats, BigraphOutOfRangeAndDuplicates) {
  EXPECT_THROW(parse_bigraph("bigraph 1\nA 2\nB 2\nedges 1\n0 2\n"), ParseError);
  EXPECT_THROW(parse_bigraph("bigraph 1\nA 2\nB 2\nedges 2\n0 1\n"), ParseError);
  const BipartiteGraph g = parse_bigraph("bigraph 1\nA 2\nB 2\nedges 3\n0 1\n0 1\n1 0\n");
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(serialize_bigraph(g), "bigraph 1\nA 2\nB 2\nedges 2\n0 1\n1 0\n");
}

TEST(Formats, GraphRoundTripAndOrdering) {
  UndirectedGraph g(4);
  g.add_edge(2, 0);
  g.add_edge(1, 3);
  const std::string text = serialize_graph(g);
  EXPECT_EQ(text, "graph 1\nN 4\nedges 2\n0 2\n1 3\n");
  EXPECT_EQ(parse_graph(text), g);
  EXPECT_THROW(parse_graph("graph 1\nN 4\nedges 1\n2 1\n"), ParseError);
  EXPECT_THROW(parse_graph("graph 1\nN 4\nedges 1\n1 1\n"), ParseError);
  EXPECT_THROW(parse_graph("graph 1\nN 4\nedges 1\n1 4\n"), ParseError);
}

TEST(Formats, MissingFile) {
  EXPECT_THROW(read_file("/nonexistent/definitely/missing.ccls"), ParseError);
}

// --- class <-> graph

TEST(ClassGraph, FullClassDegrees) {
  const BipartiteGraph g = class_to_graph(testsupport::full_class(2));
  EXPECT_EQ(g.n_a(), 2u);
  EXPECT_EQ(g.n_b(), 4u);
  EXPECT_EQ(g.neighbors(0).count(), 2u);
  EXPECT_EQ(g.neighbors(1).count(), 2u);
}

TEST(ClassGraph, ZeroAndSingleEdge) {
  EXPECT_EQ(class_to_graph(ConceptClass(3, 5)).edge_count(), 0u);
  const BipartiteGraph g = class_to_graph(ConceptClass::from_columns(1, {"0", "1"}));
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(g.has_edge(0, 1));
}

TEST(ClassGraph, K23GivesThreeIdenticalConcepts) {
  const ConceptClass c = graph_to_class(BipartiteGraph::complete(2, 3));
  EXPECT_EQ(c, ConceptClass::from_columns(2, {"11", "11", "11"}));
  EXPECT_EQ(c.distinct_concept_count(), 1u);
  EXPECT_EQ(graph_to_class(BipartiteGraph(2, 2)), ConceptClass(2, 2));
}

TEST(ClassGraph, RoundTripOnRandomGraphs) {
  RandomSource rng(5);
  for (int k = 0; k < 100; ++k) {
    const BipartiteGraph g = testsupport::random_bigraph(rng, rng.uniform_below(10), rng.uniform_below(10));
    EXPECT_EQ(class_to_graph(graph_to_class(g)), g);
  }
}

// --- restrict / consistent_subclass

TEST(Restrict, FullClassOnThreeToTwo) {
  const std::size_t pts[] = {0, 1};
  const ConceptClass r = restrict(testsupport::full_class(3), pts);
  ASSERT_EQ(r.n_points(), 2u);
  ASSERT_EQ(r.n_concepts(), 8u);
  std::map<std::uint32_t, int> counts;
  for (auto col : testsupport::columns_of(r)) ++counts[col];
  EXPECT_EQ(counts.size(), 4u);
  for (const auto& [pattern, n] : counts) EXPECT_EQ(n, 2) << pattern;
}

TEST(Restrict, EmptyAndIdentityAndOrder) {
  const ConceptClass c = ConceptClass::from_columns(3, {"011", "100", "110"});
  const ConceptClass e = restrict(c, std::span<const std::size_t>{});
  EXPECT_EQ(e.n_points(), 0u);
  EXPECT_EQ(e.n_concepts(), 3u);
  const std::size_t all[] = {0, 1, 2};
  EXPECT_EQ(restrict(c, all), c);
  const std::size_t rev[] = {2, 0};
  EXPECT_EQ(restrict(c, rev), ConceptClass::from_columns(2, {"10", "01", "01"}));
  const std::size_t bad[] = {3};
  EXPECT_THROW(restrict(c, bad), InvalidArgument);
  const std::size_t dup[] = {1, 1};
  EXPECT_THROW(restrict(c, dup), InvalidArgument);
}

TEST(Consistent, Examples) {
  const ConceptClass full2 = testsupport::full_class(2);
  EXPECT_EQ(consistent_subclass(full2, {}), full2);
  EXPECT_EQ(consistent_subclass(full2, {{0, true}}), ConceptClass::from_columns(2, {"10", "11"}));
  const ConceptClass c = ConceptClass::from_columns(2, {"00", "00"});
  EXPECT_EQ(consistent_subclass(c, {{1, true}}).n_concepts(), 0u);
  EXPECT_THROW(consistent_subclass(c, {{0, true}, {0, false}}), InvalidArgument);
  EXPECT_THROW(consistent_subclass(c, {{2, true}}), InvalidArgument);
}

TEST(Consistent, ShrinksAndCommutesWithRestrict) {
  RandomSource rng(9);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 1 + rng.uniform_below(7);
    const ConceptClass c = testsupport::random_class(rng, n, 1 + rng.uniform_below(20));
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = n - 1; i > 0; --i) std::swap(order[i], order[rng.uniform_below(i + 1)]);
    LabeledSequence seq;
    std::size_t prev = c.n_concepts();
    const std::size_t len = rng.uniform_below(n + 1);
    for (std::size_t i = 0; i < len; ++i) {
      seq.push_back({order[i], rng.next_bit()});
      const std::size_t now = consistent_subclass(c, seq).n_concepts();
      EXPECT_LE(now, prev);
      prev = now;
    }
    // restricting to a superset of the sequence points (in original order)
    std::vector<std::size_t> keep(order.begin(), order.begin() + len);
    std::sort(keep.begin(), keep.end());
    LabeledSequence mapped;
    for (const auto& item : seq) {
      const auto pos = std::lower_bound(keep.begin(), keep.end(), item.point) - keep.begin();
      mapped.push_back({static_cast<std::size_t>(pos), item.label});
    }
    EXPECT_EQ(restrict(consistent_subclass(c, seq), keep), consistent_subclass(restrict(c, keep), mapped));
  }
}

TEST(Sequence, ParseAndFormat) {
  const LabeledSequence s = parse_sequence("0:1,3:0");
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0], (LabeledPoint{0, true}));
  EXPECT_EQ(s[1], (LabeledPoint{3, false}));
  EXPECT_EQ(format_sequence(s), "0:1,3:0");
  EXPECT_TRUE(parse_sequence("").empty());
  EXPECT_THROW(parse_sequence("0:2"), InvalidArgument);
  EXPECT_THROW(parse_sequence("0-1"), InvalidArgument);
  EXPECT_THROW(parse_sequence("0:1,"), InvalidArgument);
  EXPECT_THROW(validate_sequence(parse_sequence("1:1,1:0"), 3), InvalidArgument);
}

// --- graphs

TEST(UndirectedGraph, SymmetricNoLoops) {
  UndirectedGraph g(3);
  g.add_edge(0, 2);
  EXPECT_TRUE(g.has_edge(2, 0));
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_THROW(g.add_edge(1, 1), InvalidArgument);
  EXPECT_TRUE(g.is_clique({0, 2}));
  EXPECT_FALSE(g.is_clique({0, 1, 2}));
}

// --- random

TEST(Random, Splitmix64ReferenceOutputs) {
  // published splitmix64 outputs for state 0
  std::uint64_t s = 0;
  EXPECT_EQ(splitmix64(s), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(splitmix64(s), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(splitmix64(s), 0x06C45D188009454FULL);
}

TEST(Random, SubstreamDerivation) {
  // seed 0, stream 0 starts at the first splitmix64 output of state 0
  RandomSource r(0, 0);
  EXPECT_EQ(r.next_u64(), 0xA706DD2F4D197E6FULL);
  RandomSource u(7, 3);
  std::vector<std::uint64_t> draws;
  for (int i = 0; i < 8; ++i) draws.push_back(u.uniform_below(10));
  EXPECT_EQ(draws, (std::vector<std::uint64_t>{2, 5, 3, 4, 7, 3, 4, 0}));
  RandomSource a(123, 4), b = RandomSource(123, 0).substream(4);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
}

TEST(Random, UniformAndBernoulliBounds) {
  RandomSource r(99);
  EXPECT_THROW(r.uniform_below(0), InvalidArgument);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(r.uniform_below(3), 3u);
  EXPECT_EQ(r.uniform_below(1), 0u);
  for (int i = 0; i < 100; ++i) {
    EXPECT_FALSE(r.bernoulli({0, 1}));
    EXPECT_TRUE(r.bernoulli({1, 1}));
  }
  EXPECT_THROW(r.bernoulli({3, 2}), InvalidArgument);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 200; ++i) seen.insert(r.uniform_below(6));
  EXPECT_EQ(seen.size(), 6u);
}
