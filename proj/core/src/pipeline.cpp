#include "vcldim/pipeline.hpp"

#include "vcldim/error.hpp"

namespace vcldim {
namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

PipelineResult run_pipeline(const PipelineConfig& config) {
  if (config.d2 > config.d1) throw InvalidArgument("pipeline: need d2 <= d1");
  PipelineResult out;

  RandomSource graph_rng(config.seed, 0);
  out.graph = sample_planted(config.n_vertices, config.p, config.kappa, graph_rng);

  out.biclique_instance = folklore_clique_to_biclique(out.graph.graph);
  auto& bc = out.biclique_certificate;
  bc.reduction = "clique-to-biclique";
  bc.add_param("seed", std::to_string(config.seed));
  bc.add_param("stream", "0");
  bc.add_param("N", std::to_string(config.n_vertices));
  bc.add_param("p", format_probability(config.p));
  bc.add_param("kappa", std::to_string(config.kappa));
  bc.add_param("planted", join(out.graph.planted));
  if (config.kappa > 0) {
    bc.checks.push_back({"planted set is a clique", out.graph.graph.is_clique(out.graph.planted)});
    bc.checks.push_back({"output contains K_{kappa,kappa}",
                         contains_biclique(out.biclique_instance, config.kappa, config.kappa).has_value()});
  }

  const BipartiteGraph* flip_input = &out.biclique_instance;
  if (config.product == ProductKind::kOneSided) {
    out.product = one_sided_product(out.biclique_instance, config.ell_r, config.params, config.tuple_mode,
                                    config.budget);
  } else if (config.product == ProductKind::kTwoSided) {
    RandomSource product_rng(config.seed, 1);
    out.product = two_sided_product(out.biclique_instance, config.two_sided_n, config.two_sided_ell, product_rng,
                                    config.params, config.budget);
  }
  if (out.product) {
    if (config.params.t1 && *config.params.t1 <= 20) {
      const std::size_t t1 = *config.params.t1;
      const bool present = config.product == ProductKind::kOneSided
                               ? contains_exponential_biclique(out.product->graph, t1).has_value()
                               : contains_biclique(out.product->graph, std::size_t{1} << t1, std::size_t{1} << t1)
                                     .has_value();
      out.product->certificate.checks.push_back({"oracle: output contains the YES-side biclique", present});
    }
    flip_input = &out.product->graph;
  }

  RandomSource flip_rng(config.seed, 2);
  out.flip_certificate = flip_certificate(*flip_input, flip_rng);
  out.concept_class = flip_reduction(*flip_input, flip_rng);
  if (out.concept_class.n_concepts() == 0) throw InvalidArgument("pipeline produced an empty class");
  out.verdict = gap_vcldim_verdict(out.concept_class, config.d1, config.d2);
  out.flip_certificate.add_param("d1", std::to_string(config.d1));
  out.flip_certificate.add_param("d2", std::to_string(config.d2));
  out.flip_certificate.add_param("verdict", std::string(to_string(out.verdict)));
  return out;
}

}  // namespace vcldim
