#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "vcldim/concept_class.hpp"
#include "vcldim/graphs.hpp"

namespace vcldim {

// side_a x side_b are all edges. Both sides ascending.
struct BicliqueWitness {
  std::vector<std::size_t> side_a;
  std::vector<std::size_t> side_b;
};

enum class GapVerdict { kYes, kNo, kNeither };

std::string_view to_string(GapVerdict v);

// Some size-a subset of A with at least b common neighbours. A-subsets are
// enumerated in lexicographic order with a branch-and-bound cut when the
// running common neighbourhood drops below b, so the witness is the
// lexicographically first A-subset; side_b is its first b common neighbours.
std::optional<BicliqueWitness> contains_biclique(const BipartiteGraph& g, std::size_t a, std::size_t b);

// K_{t, 2^t}; t <= 62.
std::optional<BicliqueWitness> contains_exponential_biclique(const BipartiteGraph& g, std::size_t t);

// Largest a <= cap with K_{a,a} present. cap is clamped to min(n_a, n_b).
std::size_t max_balanced_biclique(const BipartiteGraph& g, std::size_t cap);

bool is_biclique(const BipartiteGraph& g, const BicliqueWitness& w);

// YES: contains K_{q1,q1}. NO: K_{q2,q2}-free. Requires q2 <= q1.
GapVerdict gap_biclique_verdict(const BipartiteGraph& g, std::size_t q1, std::size_t q2);
// YES: contains K_{t1,2^t1}. NO: K_{t2,2^t2}-free. Requires t2 <= t1.
GapVerdict gap_exp_biclique_verdict(const BipartiteGraph& g, std::size_t t1, std::size_t t2);
// YES: VC(c) >= d1. NO: Ldim(c) < d2. Requires d2 <= d1 and a nonempty class.
GapVerdict gap_vcldim_verdict(const ConceptClass& c, std::size_t d1, std::size_t d2);

}  // namespace vcldim
