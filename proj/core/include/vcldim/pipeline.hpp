#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "vcldim/biclique.hpp"
#include "vcldim/reductions.hpp"

namespace vcldim {

enum class ProductKind { kNone, kOneSided, kTwoSided };

// Planted clique -> folklore biclique -> graph product -> edge flip.
// Random streams: 0 for the graph, 1 for the two-sided product, 2 for the flip.
struct PipelineConfig {
  std::uint64_t seed = 0;
  std::size_t n_vertices = 32;
  Probability p{1, 2};
  std::size_t kappa = 0;  // 0: no planting
  ProductKind product = ProductKind::kOneSided;
  std::size_t ell_r = 2;
  TupleMode tuple_mode = TupleMode::kOrdered;
  std::size_t two_sided_n = 0;
  std::size_t two_sided_ell = 1;
  LemmaParams params;
  std::size_t d1 = 1;
  std::size_t d2 = 1;
  std::size_t budget = kDefaultBudget;
};

struct PipelineResult {
  PlantedGraph graph;
  BipartiteGraph biclique_instance;
  ReductionCertificate biclique_certificate;
  std::optional<ProductResult> product;
  ConceptClass concept_class;
  ReductionCertificate flip_certificate;
  GapVerdict verdict = GapVerdict::kNeither;
};

PipelineResult run_pipeline(const PipelineConfig& config);

}  // namespace vcldim
