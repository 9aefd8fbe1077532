#pragma once

// Test-side helpers: random instance generators and brute-force references
// that share no code with the library's search routines.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "vcldim/concept_class.hpp"
#include "vcldim/graphs.hpp"
#include "vcldim/random.hpp"

namespace testsupport {

using vcldim::BipartiteGraph;
using vcldim::ConceptClass;
using vcldim::RandomSource;

inline ConceptClass random_class(RandomSource& rng, std::size_t n_points, std::size_t n_concepts,
                                 vcldim::Probability p = {1, 2}) {
  ConceptClass c(n_points, n_concepts);
  for (std::size_t i = 0; i < n_points; ++i) {
    for (std::size_t j = 0; j < n_concepts; ++j) c.set_label(i, j, rng.bernoulli(p));
  }
  return c;
}

inline BipartiteGraph random_bigraph(RandomSource& rng, std::size_t n_a, std::size_t n_b,
                                     vcldim::Probability p = {1, 2}) {
  BipartiteGraph g(n_a, n_b);
  for (std::size_t a = 0; a < n_a; ++a) {
    for (std::size_t b = 0; b < n_b; ++b) {
      if (rng.bernoulli(p)) g.add_edge(a, b);
    }
  }
  return g;
}

// Concepts as point bitmasks (n_points <= 16).
inline std::vector<std::uint32_t> columns_of(const ConceptClass& c) {
  std::vector<std::uint32_t> cols(c.n_concepts(), 0);
  for (std::size_t j = 0; j < c.n_concepts(); ++j) {
    for (std::size_t i = 0; i < c.n_points(); ++i) {
      if (c.label(i, j)) cols[j] |= 1u << i;
    }
  }
  return cols;
}

inline bool brute_shatters(const std::vector<std::uint32_t>& cols, std::uint32_t s) {
  std::set<std::uint32_t> patterns;
  for (auto col : cols) patterns.insert(col & s);
  return patterns.size() == (std::size_t{1} << std::popcount(s));
}

// Largest shattered set, scanning every subset of points.
inline std::size_t brute_vc(const ConceptClass& c) {
  const auto cols = columns_of(c);
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < (1u << c.n_points()); ++s) {
    if (brute_shatters(cols, s)) best = std::max<std::size_t>(best, std::popcount(s));
  }
  return best;
}

// Ldim from the recursion, straight over sets of column patterns; no memo.
inline int brute_ldim_rec(const std::vector<std::uint32_t>& cols, std::uint32_t free_points) {
  if (cols.empty()) return -1;
  int best = 0;
  for (std::uint32_t rest = free_points; rest; rest &= rest - 1) {
    const std::uint32_t bit = rest & (~rest + 1);
    std::vector<std::uint32_t> zero, one;
    for (auto col : cols) (col & bit ? one : zero).push_back(col);
    if (zero.empty() || one.empty()) continue;
    const int v = 1 + std::min(brute_ldim_rec(zero, free_points & ~bit), brute_ldim_rec(one, free_points & ~bit));
    best = std::max(best, v);
  }
  return best;
}

inline std::size_t brute_ldim(const ConceptClass& c) {
  auto cols = columns_of(c);
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  return static_cast<std::size_t>(brute_ldim_rec(cols, (1u << c.n_points()) - 1));
}

// Some a-subset of A (n_a <= 20) with at least b common neighbours.
inline bool brute_has_biclique(const BipartiteGraph& g, std::size_t a, std::size_t b) {
  if (a > g.n_a() || b > g.n_b()) return false;
  for (std::uint32_t s = 0; s < (1u << g.n_a()); ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) != a) continue;
    std::size_t common = 0;
    for (std::size_t j = 0; j < g.n_b(); ++j) {
      bool all = true;
      for (std::size_t i = 0; i < g.n_a() && all; ++i) {
        if ((s >> i) & 1u) all = g.has_edge(i, j);
      }
      if (all) ++common;
    }
    if (common >= b) return true;
  }
  return false;
}

// Threshold functions on n linearly ordered points: c_k(i) = 1 iff i >= k, k = 0..n.
inline ConceptClass thresholds(std::size_t n) {
  ConceptClass c(n, n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t i = k; i < n; ++i) c.set_label(i, k, true);
  }
  return c;
}

inline ConceptClass full_class(std::size_t n) {
  ConceptClass c(n, std::size_t{1} << n);
  for (std::size_t j = 0; j < c.n_concepts(); ++j) {
    for (std::size_t i = 0; i < n; ++i) c.set_label(i, j, (j >> i) & 1u);
  }
  return c;
}

}  // namespace testsupport
