#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vcldim/concept_class.hpp"
#include "vcldim/graphs.hpp"
#include "vcldim/random.hpp"

namespace vcldim {

inline constexpr std::size_t kDefaultBudget = std::size_t{1} << 26;

// One parameter inequality a lemma assumes; `satisfied` is empty when the
// parameters it mentions were not supplied.
struct PreconditionCheck {
  std::string name;
  std::optional<bool> satisfied;
};

struct ReductionCertificate {
  std::string reduction;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<PreconditionCheck> checks;
  std::vector<std::string> notes;

  void add_param(std::string key, std::string value) { params.emplace_back(std::move(key), std::move(value)); }
  // Status of the named check; nullopt if absent or not evaluated.
  std::optional<bool> check(const std::string& name) const;
};

// Line-oriented `key value` text; checks print as `check <name> : satisfied|violated|unknown`.
std::string serialize_certificate(const ReductionCertificate& cert);

// Parameters of the gap being transformed. Unset values leave the matching
// precondition checks as unknown.
struct LemmaParams {
  std::optional<std::size_t> q1, q2, t1, t2;
  std::optional<double> delta;
};

// X = A, one concept per b in B; non-edges become 0 and every edge gets a fair
// bit, drawn in row-major (a-major, b-minor) order.
ConceptClass flip_reduction(const BipartiteGraph& g, RandomSource& rng);
ReductionCertificate flip_certificate(const BipartiteGraph& g, const RandomSource& rng_at_start);

// floor(log2 d1); the graph itself is unchanged. Throws on d1 = 0.
std::size_t trivial_embed_params(std::size_t d1);

enum class TupleMode {
  kOrdered,   // B' = B^l, all n_b^l tuples in lexicographic order
  kMultiset,  // one vertex per size-l multiset (non-decreasing tuples)
};

struct ProductResult {
  BipartiteGraph graph;
  ReductionCertificate certificate;
  std::vector<std::vector<std::size_t>> a_tuples;  // empty for the one-sided product (A' = A)
  std::vector<std::vector<std::size_t>> b_tuples;
};

// A' = A; B' = l_R-tuples over B; (a, T) is an edge iff a is adjacent to every
// element of T. The certificate evaluates the precondition inequalities
// q1 >= t1, l_R*log2 q1 >= t1, q2 <= t2, l_R*log2 q2 <= t2.
// Throws BudgetExceeded if |A'| * |B'| exceeds `budget`.
ProductResult one_sided_product(const BipartiteGraph& g, std::size_t ell_r, const LemmaParams& params = {},
                                TupleMode mode = TupleMode::kOrdered, std::size_t budget = kDefaultBudget);

// n independent l-tuples from [n_a] (S_1..S_n), then n from [n_b] (T_1..T_n);
// each tuple draws its l elements in order with uniform_below.
struct TupleSample {
  std::vector<std::vector<std::size_t>> a_tuples;
  std::vector<std::vector<std::size_t>> b_tuples;
};
TupleSample sample_tuples(std::size_t n_a, std::size_t n_b, std::size_t n, std::size_t ell, RandomSource& rng);

// (i, j) is an edge iff every pair in S_i x T_j is an edge of g.
BipartiteGraph product_from_tuples(const BipartiteGraph& g, const std::vector<std::vector<std::size_t>>& a_tuples,
                                   const std::vector<std::vector<std::size_t>>& b_tuples);

// Two-sided randomized product. Duplicate tuples stay separate vertices.
// The certificate evaluates n >= 10*2^t1*(N/q1)^l, n <= 1000*N^((1-0.5*delta)*l),
// l >= 20 and 0.005*delta*t2*l >= q2 with N = n_a, and records gamma = 0.5*delta.
ProductResult two_sided_product(const BipartiteGraph& g, std::size_t n, std::size_t ell, RandomSource& rng,
                                const LemmaParams& params = {}, std::size_t budget = kDefaultBudget);

// True iff for every nonempty M with |M| <= max_m the union of the indexed
// sets has at least 0.01*gamma*|M|*ell elements.
bool disperser_check(const std::vector<std::vector<std::size_t>>& sets, double gamma, std::size_t ell,
                     std::size_t max_m, std::size_t budget = kDefaultBudget);

// G(n, p): each pair u < v in lexicographic order is an edge with probability p.
UndirectedGraph sample_gnp(std::size_t n, Probability p, RandomSource& rng);

struct PlantedGraph {
  UndirectedGraph graph;
  std::vector<std::size_t> planted;  // ascending
};

// G(n, p, kappa): sample_gnp, then a Fisher-Yates shuffle of the vertices
// (i = n-1 down to 1, swap with uniform_below(i+1)); the first kappa shuffled
// vertices become a clique.
PlantedGraph sample_planted(std::size_t n, Probability p, std::size_t kappa, RandomSource& rng);

// A' = B' = V; (a, b) is an edge iff a = b or {a, b} in E.
BipartiteGraph folklore_clique_to_biclique(const UndirectedGraph& g);

// Parses "1/2", "0.25", "0" or "1" into an exact probability.
Probability parse_probability(const std::string& text);
std::string format_probability(Probability p);

}  // namespace vcldim
