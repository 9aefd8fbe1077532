#include <gtest/gtest.h>

#include <bit>
#include <cmath>

#include "support.hpp"
#include "vcldim/dimensions.hpp"
#include "vcldim/error.hpp"
#include "vcldim/learners.hpp"

using namespace vcldim;
using testsupport::full_class;
using testsupport::thresholds;

namespace {

std::size_t floor_log2(std::size_t v) { return static_cast<std::size_t>(std::bit_width(v)) - 1; }

}  // namespace

TEST(Shatters, Examples) {
  const ConceptClass full2 = full_class(2);
  const std::size_t both[] = {0, 1};
  EXPECT_TRUE(shatters(full2, both));
  EXPECT_TRUE(shatters(ConceptClass::from_columns(3, {"010"}), std::span<const std::size_t>{}));
  const ConceptClass diag = ConceptClass::from_columns(2, {"00", "11"});
  const std::size_t first[] = {0};
  EXPECT_TRUE(shatters(diag, first));
  EXPECT_FALSE(shatters(diag, both));
  const std::size_t bad[] = {2};
  EXPECT_THROW(shatters(diag, bad), InvalidArgument);
  const std::size_t dup[] = {0, 0};
  EXPECT_THROW(shatters(diag, dup), InvalidArgument);
}

TEST(VcDimension, FullClassAndSingleConcept) {
  const VcReport full = vc_dimension(full_class(3));
  EXPECT_EQ(full.value, 3u);
  EXPECT_EQ(full.witness, (std::vector<std::size_t>{0, 1, 2}));
  const VcReport single = vc_dimension(ConceptClass::from_columns(4, {"0110"}));
  EXPECT_EQ(single.value, 0u);
  EXPECT_TRUE(single.witness.empty());
}

TEST(VcDimension, ThresholdsOnFourPoints) {
  const ConceptClass c = thresholds(4);
  ASSERT_EQ(c.n_concepts(), 5u);
  EXPECT_EQ(testsupport::brute_vc(c), 1u);
  const VcReport r = vc_dimension(c);
  EXPECT_EQ(r.value, 1u);
  EXPECT_EQ(r.witness, (std::vector<std::size_t>{0}));
  EXPECT_EQ(vc_dimension_oracle(c), 1u);
}

TEST(VcDimension, EmptyClassIsAnError) {
  EXPECT_THROW(vc_dimension(ConceptClass(3, 0)), InvalidArgument);
  EXPECT_THROW(ldim(ConceptClass(3, 0)), InvalidArgument);
  EXPECT_THROW(vc_dimension_oracle(ConceptClass(3, 0)), InvalidArgument);
  EXPECT_THROW(ldim_oracle(ConceptClass(3, 0)), InvalidArgument);
}

TEST(VcDimension, ZeroPoints) {
  EXPECT_EQ(vc_dimension(ConceptClass(0, 2)).value, 0u);
  EXPECT_EQ(ldim(ConceptClass(0, 2)).value, 0u);
}

TEST(Ldim, FullClassIsDepth) {
  for (std::size_t d = 0; d <= 6; ++d) {
    const LdimReport r = ldim(full_class(d));
    EXPECT_EQ(r.value, d);
    EXPECT_EQ(r.witness.depth, d);
    EXPECT_TRUE(is_mistake_tree(full_class(d), r.witness));
  }
}

TEST(Ldim, AllZerosAllOnes) {
  for (std::size_t n = 1; n <= 6; ++n) {
    ConceptClass c(n, 2);
    for (std::size_t i = 0; i < n; ++i) c.set_label(i, 1, true);
    EXPECT_EQ(ldim(c).value, 1u);
  }
}

TEST(Ldim, ThresholdsMatchGameOracle) {
  const ConceptClass c = thresholds(4);
  EXPECT_EQ(testsupport::brute_ldim(c), 2u);
  EXPECT_EQ(ldim(c).value, 2u);
  EXPECT_EQ(ldim_oracle(c), 2u);
  EXPECT_EQ(optimal_adversary_value(c), 2u);
}

TEST(Ldim, ThresholdsOnLongLineAreLogarithmic) {
  // thresholds on n points: Ldim = floor(log2(n + 1)), VC = 1
  for (std::size_t n = 1; n <= 40; n += 3) {
    const ConceptClass c = thresholds(n);
    EXPECT_EQ(ldim(c).value, floor_log2(n + 1)) << n;
    EXPECT_EQ(vc_dimension(c).value, 1u);
  }
}

TEST(Oracles, SmallExamplesAndGuards) {
  EXPECT_EQ(vc_dimension_oracle(full_class(2)), 2u);
  EXPECT_EQ(ldim_oracle(full_class(2)), 2u);
  const ConceptClass single = ConceptClass::from_columns(2, {"10"});
  EXPECT_EQ(vc_dimension_oracle(single), 0u);
  EXPECT_EQ(ldim_oracle(single), 0u);
  EXPECT_THROW(vc_dimension_oracle(ConceptClass(kOracleMaxPoints + 1, 1)), BudgetExceeded);
  EXPECT_THROW(ldim_oracle(ConceptClass(kOracleMaxPoints + 1, 1)), BudgetExceeded);
}

TEST(MistakeTree, RejectsBrokenTrees) {
  const ConceptClass c = full_class(2);
  MistakeTree t = ldim(c).witness;
  ASSERT_EQ(t.depth, 2u);
  EXPECT_TRUE(is_mistake_tree(c, t));
  MistakeTree repeat = t;
  repeat.nodes[repeat.nodes[0].child[0]].point = repeat.nodes[0].point;
  EXPECT_FALSE(is_mistake_tree(c, repeat));
  MistakeTree deep = t;
  deep.depth = 3;
  EXPECT_FALSE(is_mistake_tree(c, deep));
  // a class without 01 cannot support a tree that needs it
  const ConceptClass missing = ConceptClass::from_columns(2, {"00", "10", "11"});
  EXPECT_FALSE(is_mistake_tree(missing, t));
}

// Randomized cross-checks against the test-side brute-force references.
class DimensionProperties : public ::testing::TestWithParam<int> {};

TEST_P(DimensionProperties, AgreeWithReferences) {
  RandomSource rng(1000 + static_cast<std::uint64_t>(GetParam()));
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = rng.uniform_below(8);
    const std::size_t m = 1 + rng.uniform_below(24);
    const Probability p{1 + rng.uniform_below(3), 4};
    const ConceptClass c = testsupport::random_class(rng, n, m, p);

    const VcReport vc = vc_dimension(c);
    const LdimReport ld = ldim(c);
    EXPECT_EQ(vc.value, testsupport::brute_vc(c));
    EXPECT_EQ(ld.value, testsupport::brute_ldim(c));
    EXPECT_EQ(vc.value, vc_dimension_oracle(c));
    EXPECT_EQ(ld.value, ldim_oracle(c));

    // lexicographically smallest shattered set of maximum size
    const auto cols = testsupport::columns_of(c);
    std::vector<std::size_t> expect;
    bool found = false;
    std::vector<std::size_t> pick(vc.value);
    std::function<void(std::size_t, std::size_t)> scan = [&](std::size_t pos, std::size_t from) {
      if (found) return;
      if (pos == pick.size()) {
        std::uint32_t mask = 0;
        for (auto v : pick) mask |= 1u << v;
        if (testsupport::brute_shatters(cols, mask)) {
          expect = pick;
          found = true;
        }
        return;
      }
      for (std::size_t v = from; v < n && !found; ++v) {
        pick[pos] = v;
        scan(pos + 1, v + 1);
      }
    };
    scan(0, 0);
    EXPECT_EQ(vc.witness, expect);
    EXPECT_TRUE(shatters(c, vc.witness));

    EXPECT_LE(vc.value, ld.value);
    EXPECT_LE(ld.value, floor_log2(c.distinct_concept_count()));
    EXPECT_LE(ld.value, n);
    EXPECT_TRUE(is_mistake_tree(c, ld.witness));

    const ConceptClass dedup = c.deduplicated();
    EXPECT_EQ(vc_dimension(dedup).value, vc.value);
    EXPECT_EQ(ldim(dedup).value, ld.value);

    for (std::size_t d = 0; d <= n + 1; ++d) {
      EXPECT_EQ(vc_at_least(c, d), vc.value >= d);
      EXPECT_EQ(ldim_at_least(c, d), ld.value >= d);
    }

    // dropping a concept never increases either dimension
    if (m > 1) {
      BitRow keep(m, true);
      keep.set(rng.uniform_below(m), false);
      const ConceptClass smaller = c.select_concepts(keep);
      EXPECT_LE(vc_dimension(smaller).value, vc.value);
      EXPECT_LE(ldim(smaller).value, ld.value);
    }
    // restriction never increases VC
    std::vector<std::size_t> pts;
    for (std::size_t i = 0; i < n; ++i) {
      if (rng.next_bit()) pts.push_back(i);
    }
    EXPECT_LE(vc_dimension(restrict(c, pts)).value, vc.value);

    // the mistake tree forces exactly `value` mistakes on both learners
    EXPECT_EQ(force_mistakes(c, ld.witness, make_optimal_learner(c)).mistakes, ld.value);
    EXPECT_EQ(force_mistakes(c, ld.witness, make_biclique_learner(c, 2)).mistakes, ld.value);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, DimensionProperties, ::testing::Range(0, 8));

TEST(LittlestoneSolver, SubclassQueries) {
  const ConceptClass c = full_class(3);
  LittlestoneSolver s(c);
  EXPECT_EQ(s.value(s.all_concepts()), 3);
  EXPECT_EQ(s.value(BitRow(8)), -1);
  BitRow two(8);
  two.set(0);
  two.set(7);
  EXPECT_EQ(s.value(two), 1);
  EXPECT_TRUE(s.at_least(two, 1));
  EXPECT_FALSE(s.at_least(two, 2));
  const MistakeTree t = s.tree(s.all_concepts(), 2);
  EXPECT_EQ(t.depth, 2u);
  EXPECT_TRUE(is_mistake_tree(c, t));
}

TEST(Dimensions, LargerInstancesStayExact) {
  // 13 points is above the oracle guard; compare against the recursion reference
  RandomSource rng(77);
  for (int k = 0; k < 5; ++k) {
    const ConceptClass c = testsupport::random_class(rng, 13, 12, {1, 2});
    EXPECT_EQ(vc_dimension(c).value, testsupport::brute_vc(c));
    EXPECT_EQ(ldim(c).value, testsupport::brute_ldim(c));
  }
}
