#include "vcldim/verification.hpp"

#include <cmath>
#include <sstream>

#include "parallel.hpp"
#include "vcldim/dimensions.hpp"
#include "vcldim/error.hpp"

namespace vcldim {

std::string format_report(const VerificationReport& r) {
  std::ostringstream out;
  out << "lemma_id " << r.lemma_id << '\n';
  out << "trials " << r.trials << '\n';
  out << "successes " << r.successes << '\n';
  out << "empirical_rate " << r.empirical_rate() << '\n';
  out << "paper_bound " << r.paper_bound << '\n';
  out << "tolerance " << r.tolerance << '\n';
  out << "deterministic " << (r.deterministic ? "true" : "false") << '\n';
  for (const auto& [k, v] : r.extra) out << k << ' ' << v << '\n';
  out << "pass " << (r.pass() ? "true" : "false") << '\n';
  return out.str();
}

VerificationReport verify_vc_random(std::size_t t, std::size_t trials, std::uint64_t seed, double tolerance) {
  if (trials == 0) throw InvalidArgument("need at least one trial");
  if (t > 20) throw BudgetExceeded("vc-random limited to t <= 20");
  VerificationReport r;
  r.lemma_id = "vc-random";
  r.trials = trials;
  r.paper_bound = 2.0 / 3.0;
  r.tolerance = tolerance;
  const BipartiteGraph complete = BipartiteGraph::complete(t, std::size_t{1} << t);
  const std::size_t need = (t + 1) / 2;
  r.successes = detail::parallel_count(trials, [&](std::size_t k) {
    RandomSource rng(seed, k);
    return vc_at_least(flip_reduction(complete, rng), need);
  });
  const double chain = 1.0 - std::pow(2.0, static_cast<double>((t + 1) / 2)) *
                                 std::exp(-std::pow(2.0, static_cast<double>(t / 2)));
  std::ostringstream chain_text;
  chain_text << chain;
  r.extra.emplace_back("t", std::to_string(t));
  r.extra.emplace_back("chain_bound", chain_text.str());
  if (t < 4) r.extra.emplace_back("warning", "precondition t >= 4 violated");
  return r;
}

FlipVerification verify_flip(const BipartiteGraph& g, std::size_t d1, std::size_t d2, std::size_t trials,
                             std::uint64_t seed, double tolerance) {
  if (trials == 0) throw InvalidArgument("need at least one trial");
  if (g.n_b() == 0) throw InvalidArgument("flip verification needs at least one B vertex");
  FlipVerification out;
  out.promise = gap_exp_biclique_verdict(g, d1, d2);
  auto base = [&](const char* id) {
    VerificationReport r;
    r.lemma_id = id;
    r.trials = trials;
    r.tolerance = tolerance;
    r.extra.emplace_back("d1", std::to_string(d1));
    r.extra.emplace_back("d2", std::to_string(d2));
    return r;
  };
  if (out.promise == GapVerdict::kYes) {
    VerificationReport r = base("flip-completeness");
    r.paper_bound = 2.0 / 3.0;
    const std::size_t need = (d1 + 1) / 2;
    r.successes = detail::parallel_count(trials, [&](std::size_t k) {
      RandomSource rng(seed, k);
      return vc_at_least(flip_reduction(g, rng), need);
    });
    if (d1 < 4) r.extra.emplace_back("warning", "precondition d1 >= 4 violated");
    out.completeness = std::move(r);
  } else if (out.promise == GapVerdict::kNo) {
    VerificationReport r = base("flip-soundness");
    r.deterministic = true;
    r.paper_bound = 1.0;
    r.successes = detail::parallel_count(trials, [&](std::size_t k) {
      RandomSource rng(seed, k);
      return !ldim_at_least(flip_reduction(g, rng), 2 * d2);
    });
    out.soundness = std::move(r);
  }
  return out;
}

VerificationReport verify_disperser(std::size_t base_n, std::size_t n, std::size_t ell, double gamma,
                                    std::size_t max_m, std::size_t trials, std::uint64_t seed, double tolerance,
                                    std::size_t budget) {
  if (trials == 0) throw InvalidArgument("need at least one trial");
  if (base_n == 0 || n == 0 || ell == 0) throw InvalidArgument("disperser needs N, n, l >= 1");
  VerificationReport r;
  r.lemma_id = "disperser";
  r.trials = trials;
  r.paper_bound = 0.9;
  r.tolerance = tolerance;
  r.successes = detail::parallel_count(trials, [&](std::size_t k) {
    RandomSource rng(seed, k);
    std::vector<std::vector<std::size_t>> sets(n, std::vector<std::size_t>(ell));
    for (auto& s : sets) {
      for (auto& v : s) v = static_cast<std::size_t>(rng.uniform_below(base_n));
    }
    return disperser_check(sets, gamma, ell, max_m, budget);
  });
  std::ostringstream g;
  g << gamma;
  r.extra.emplace_back("N", std::to_string(base_n));
  r.extra.emplace_back("n", std::to_string(n));
  r.extra.emplace_back("l", std::to_string(ell));
  r.extra.emplace_back("gamma", g.str());
  r.extra.emplace_back("max_m", std::to_string(max_m));
  const double cap = std::log2(1000.0) + (1.0 - gamma) * static_cast<double>(ell) * std::log2(static_cast<double>(base_n));
  r.extra.emplace_back("precondition_n_cap", std::log2(static_cast<double>(n)) <= cap + 1e-9 ? "satisfied" : "violated");
  r.extra.emplace_back("precondition_l_ge_20", ell >= 20 ? "satisfied" : "violated");
  return r;
}

VerificationReport verify_two_sided(const BipartiteGraph& g, std::size_t n, std::size_t ell, std::size_t target,
                                    std::size_t trials, std::uint64_t seed, double tolerance, std::size_t budget) {
  if (trials == 0) throw InvalidArgument("need at least one trial");
  VerificationReport r;
  r.lemma_id = "two-sided-completeness";
  r.trials = trials;
  r.paper_bound = 0.9;
  r.tolerance = tolerance;
  r.successes = detail::parallel_count(trials, [&](std::size_t k) {
    RandomSource rng(seed, k);
    const ProductResult p = two_sided_product(g, n, ell, rng, {}, budget);
    return contains_biclique(p.graph, target, target).has_value();
  });
  r.extra.emplace_back("n", std::to_string(n));
  r.extra.emplace_back("l", std::to_string(ell));
  r.extra.emplace_back("target", std::to_string(target));
  return r;
}

VerificationReport verify_folklore_planted(std::size_t n_vertices, std::size_t kappa, std::size_t trials,
                                           std::uint64_t seed) {
  if (trials == 0) throw InvalidArgument("need at least one trial");
  VerificationReport r;
  r.lemma_id = "folklore-planted";
  r.trials = trials;
  r.deterministic = true;
  r.successes = detail::parallel_count(trials, [&](std::size_t k) {
    RandomSource rng(seed, k);
    const PlantedGraph pg = sample_planted(n_vertices, {1, 2}, kappa, rng);
    return contains_biclique(folklore_clique_to_biclique(pg.graph), kappa, kappa).has_value();
  });
  r.extra.emplace_back("N", std::to_string(n_vertices));
  r.extra.emplace_back("kappa", std::to_string(kappa));
  return r;
}

VerificationReport verify_folklore_random(std::size_t n_vertices, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw InvalidArgument("need at least one trial");
  if (n_vertices == 0) throw InvalidArgument("need at least one vertex");
  VerificationReport r;
  r.lemma_id = "folklore-random";
  r.trials = trials;
  r.deterministic = true;
  const auto cap = static_cast<std::size_t>(std::ceil(3.0 * std::log2(static_cast<double>(n_vertices)) - 1e-9));
  r.successes = detail::parallel_count(trials, [&](std::size_t k) {
    RandomSource rng(seed, k);
    const BipartiteGraph g = folklore_clique_to_biclique(sample_gnp(n_vertices, {1, 2}, rng));
    // one past the cap so that exceeding it is observable
    return max_balanced_biclique(g, cap + 1) <= cap;
  });
  r.extra.emplace_back("N", std::to_string(n_vertices));
  r.extra.emplace_back("cap", std::to_string(cap));
  return r;
}

}  // namespace vcldim
