#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vcldim/biclique.hpp"
#include "vcldim/concept_class.hpp"
#include "vcldim/dimensions.hpp"

namespace vcldim {

enum class LearnerStage { kThreshold, kHalving };

// State of the two-stage learner for K_{t,2^t}-free classes. While at least
// 2^t concepts (counted with multiplicity) agree with the history it predicts
// 0; afterwards it predicts the label keeping more consistent concepts, ties
// going to 0. The stage only ever moves THRESHOLD -> HALVING.
struct LearnerState {
  const ConceptClass* cls = nullptr;
  LabeledSequence history;
  std::size_t t = 0;
  LearnerStage stage = LearnerStage::kThreshold;
};

LearnerState make_learner_state(const ConceptClass& c, std::size_t t);
// Stage implied by the consistent-concept count alone.
LearnerStage stage_for(const ConceptClass& c, std::size_t t, const LabeledSequence& history);

// Throws InvalidArgument if x was already seen or nothing is consistent.
bool biclique_learner_predict(const LearnerState& state, std::size_t x);
// Appends (x, y) and advances the stage. Throws if (x, y) leaves no consistent concept.
void biclique_learner_observe(LearnerState& state, std::size_t x, bool y);

struct TranscriptEntry {
  std::size_t point = 0;
  bool prediction = false;
  bool label = false;
};

struct MistakeReport {
  std::size_t mistakes = 0;
  std::vector<TranscriptEntry> transcript;
};

// Replays a realizable sequence through the two-stage learner.
MistakeReport run_learner(const ConceptClass& c, std::size_t t, const LabeledSequence& seq);

// Pluggable deterministic learner. `predict(history, x)` must depend only on
// the set of labeled examples in `history` (not their order); the exhaustive
// adversary memoizes on that set.
struct Learner {
  std::string name;
  std::function<bool(const LabeledSequence& history, std::size_t x)> predict;
};

Learner make_biclique_learner(const ConceptClass& c, std::size_t t);
// Standard optimal algorithm: predict the label whose consistent subclass has
// the larger Ldim (ties to 0). Holds its own copy of `c`.
Learner make_optimal_learner(const ConceptClass& c);

inline constexpr std::size_t kGameMaxPoints = 12;

// Maximum mistakes of `learner` over every realizable sequence (all orders,
// all consistent labelings); the transcript realizes the maximum.
// Throws BudgetExceeded above kGameMaxPoints.
MistakeReport worst_case_mistakes(const ConceptClass& c, const Learner& learner);

// Value of the learner-vs-adversary game with both sides playing optimally.
// Throws InvalidArgument on an empty class, BudgetExceeded above kGameMaxPoints.
std::size_t optimal_adversary_value(const ConceptClass& c);

// Walks a mistake tree against `learner`: the adversary always reveals the
// label opposite to the prediction.
MistakeReport force_mistakes(const ConceptClass& c, const MistakeTree& tree, const Learner& learner);

// Mistakes made while the two-stage learner was in THRESHOLD stage.
std::size_t threshold_stage_mistakes(const ConceptClass& c, std::size_t t, const MistakeReport& report);

// If the transcript shows more than t threshold-stage mistakes, the first t
// mistake points and the >= 2^t concepts still consistent just before the
// next one form a K_{t,2^t} in class_to_graph(c).
std::optional<BicliqueWitness> threshold_overflow_witness(const ConceptClass& c, std::size_t t,
                                                          const MistakeReport& report);

}  // namespace vcldim
