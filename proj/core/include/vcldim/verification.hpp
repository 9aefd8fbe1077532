#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vcldim/biclique.hpp"
#include "vcldim/graphs.hpp"
#include "vcldim/reductions.hpp"

namespace vcldim {

// Monte-Carlo tolerance below a probability bound: 3 sigma for a Bernoulli
// near 2/3 at 1000 trials, rounded up.
inline constexpr double kDefaultTolerance = 0.08;

// Outcome of repeated seeded trials of one claim. Probabilistic claims pass
// when the empirical rate is at least paper_bound - tolerance; deterministic
// claims pass only when every trial succeeds.
struct VerificationReport {
  std::string lemma_id;
  std::size_t trials = 0;
  std::size_t successes = 0;
  double paper_bound = 1.0;
  double tolerance = 0.0;
  bool deterministic = false;
  std::vector<std::pair<std::string, std::string>> extra;

  double empirical_rate() const {
    return trials == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(trials);
  }
  bool pass() const {
    if (deterministic) return successes == trials;
    return empirical_rate() >= paper_bound - tolerance;
  }
};

// `key value` lines in a fixed field order.
std::string format_report(const VerificationReport& r);

// 2^t uniform concepts on t points per trial (trial k uses substream k);
// success when VC >= t/2. Bound 2/3; `chain_bound` records 1 - 2^ceil(t/2) e^-2^floor(t/2).
VerificationReport verify_vc_random(std::size_t t, std::size_t trials, std::uint64_t seed,
                                    double tolerance = kDefaultTolerance);

struct FlipVerification {
  GapVerdict promise = GapVerdict::kNeither;  // of the input as a (d1, d2) exponential-biclique instance
  std::optional<VerificationReport> completeness;  // YES inputs: Pr[VC >= d1/2] >= 2/3
  std::optional<VerificationReport> soundness;     // NO inputs: Ldim < 2 d2 in every trial
};

// Requires d2 <= d1 and n_b >= 1.
FlipVerification verify_flip(const BipartiteGraph& g, std::size_t d1, std::size_t d2, std::size_t trials,
                             std::uint64_t seed, double tolerance = kDefaultTolerance);

// n tuples of ell uniform draws from [base_n] per trial, checked with
// disperser_check(gamma, ell, max_m). Bound 0.9.
VerificationReport verify_disperser(std::size_t base_n, std::size_t n, std::size_t ell, double gamma,
                                    std::size_t max_m, std::size_t trials, std::uint64_t seed,
                                    double tolerance = kDefaultTolerance, std::size_t budget = kDefaultBudget);

// two_sided_product per trial; success when the output contains K_{target,target}. Bound 0.9.
VerificationReport verify_two_sided(const BipartiteGraph& g, std::size_t n, std::size_t ell, std::size_t target,
                                    std::size_t trials, std::uint64_t seed, double tolerance = kDefaultTolerance,
                                    std::size_t budget = kDefaultBudget);

// Planted kappa-clique in G(N, 1/2) through the folklore reduction; success
// when K_{kappa,kappa} is present. Deterministic.
VerificationReport verify_folklore_planted(std::size_t n_vertices, std::size_t kappa, std::size_t trials,
                                           std::uint64_t seed);

// G(N, 1/2) through the folklore reduction; success when the maximum balanced
// biclique is at most ceil(3 log2 N). Required in every trial.
VerificationReport verify_folklore_random(std::size_t n_vertices, std::size_t trials, std::uint64_t seed);

}  // namespace vcldim
