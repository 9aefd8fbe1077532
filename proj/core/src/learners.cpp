#include "vcldim/learners.hpp"

#include <algorithm>

#include "vcldim/error.hpp"

namespace vcldim {
namespace {

bool reaches_threshold(std::size_t count, std::size_t t) { return t < 64 && count >= (std::size_t{1} << t); }

BitRow refine(const ConceptClass& c, BitRow mask, std::size_t x, bool y) {
  if (y) {
    mask &= c.ones_on(x);
  } else {
    mask.subtract(c.ones_on(x));
  }
  return mask;
}

}  // namespace

LearnerState make_learner_state(const ConceptClass& c, std::size_t t) {
  LearnerState s;
  s.cls = &c;
  s.t = t;
  s.stage = stage_for(c, t, s.history);
  return s;
}

LearnerStage stage_for(const ConceptClass& c, std::size_t t, const LabeledSequence& history) {
  return reaches_threshold(consistent_mask(c, history).count(), t) ? LearnerStage::kThreshold
                                                                   : LearnerStage::kHalving;
}

bool biclique_learner_predict(const LearnerState& state, std::size_t x) {
  const ConceptClass& c = *state.cls;
  if (x >= c.n_points()) throw InvalidArgument("query point out of range");
  for (const auto& item : state.history) {
    if (item.point == x) throw InvalidArgument("query point already labeled");
  }
  const BitRow alive = consistent_mask(c, state.history);
  const std::size_t count = alive.count();
  if (count == 0) throw InvalidArgument("history is not realizable");
  if (reaches_threshold(count, state.t)) return false;
  const std::size_t ones = alive.and_count(c.ones_on(x));
  return ones > count - ones;
}

void biclique_learner_observe(LearnerState& state, std::size_t x, bool y) {
  LabeledSequence next = state.history;
  next.push_back({x, y});
  const BitRow alive = consistent_mask(*state.cls, next);
  if (alive.none()) throw InvalidArgument("sequence is not realizable");
  state.history = std::move(next);
  if (!reaches_threshold(alive.count(), state.t)) state.stage = LearnerStage::kHalving;
}

MistakeReport run_learner(const ConceptClass& c, std::size_t t, const LabeledSequence& seq) {
  if (consistent_mask(c, seq).none()) throw InvalidArgument("sequence is not realizable by the class");
  LearnerState state = make_learner_state(c, t);
  MistakeReport report;
  for (const auto& item : seq) {
    const bool z = biclique_learner_predict(state, item.point);
    report.transcript.push_back({item.point, z, item.label});
    if (z != item.label) ++report.mistakes;
    biclique_learner_observe(state, item.point, item.label);
  }
  return report;
}

Learner make_biclique_learner(const ConceptClass& c, std::size_t t) {
  auto cls = std::make_shared<const ConceptClass>(c);
  return {"biclique(t=" + std::to_string(t) + ")", [cls, t](const LabeledSequence& history, std::size_t x) {
            LearnerState s;
            s.cls = cls.get();
            s.t = t;
            s.history = history;
            return biclique_learner_predict(s, x);
          }};
}

Learner make_optimal_learner(const ConceptClass& c) {
  auto cls = std::make_shared<const ConceptClass>(c);
  auto solver = std::make_shared<LittlestoneSolver>(c);
  return {"optimal", [cls, solver](const LabeledSequence& history, std::size_t x) {
            const BitRow alive = consistent_mask(*cls, history);
            const int v1 = solver->value(refine(*cls, alive, x, true));
            const int v0 = solver->value(refine(*cls, alive, x, false));
            return v1 > v0;
          }};
}

namespace {

void require_game_size(const ConceptClass& c) {
  if (c.n_concepts() == 0) throw InvalidArgument("game undefined on empty class");
  if (c.n_points() > kGameMaxPoints) {
    throw BudgetExceeded("game search limited to " + std::to_string(kGameMaxPoints) + " points");
  }
}

std::vector<std::size_t> powers_of_three(std::size_t n) {
  std::vector<std::size_t> p(n + 1, 1);
  for (std::size_t i = 1; i <= n; ++i) p[i] = p[i - 1] * 3;
  return p;
}

// Exhaustive adversary against a fixed learner. State code: base-3 digit per
// point, 0 = unseen, 1 + label otherwise.
class AdversarySearch {
 public:
  AdversarySearch(const ConceptClass& c, const Learner& learner)
      : c_(c), learner_(learner), pow3_(powers_of_three(c.n_points())), value_(pow3_.back(), -1),
        move_(pow3_.back(), -1) {}

  int solve(std::size_t code, const BitRow& alive, LabeledSequence& history) {
    if (value_[code] >= 0) return value_[code];
    int best = 0;
    int best_move = -1;
    for (std::size_t x = 0; x < c_.n_points(); ++x) {
      if ((code / pow3_[x]) % 3 != 0) continue;
      const bool z = learner_.predict(history, x);
      for (int y = 0; y < 2; ++y) {
        const BitRow next = refine(c_, alive, x, y == 1);
        if (next.none()) continue;
        history.push_back({x, y == 1});
        const int v = (z != (y == 1) ? 1 : 0) + solve(code + static_cast<std::size_t>(1 + y) * pow3_[x], next, history);
        history.pop_back();
        if (v > best) {
          best = v;
          best_move = static_cast<int>(2 * x) + y;
        }
      }
    }
    value_[code] = best;
    move_[code] = best_move;
    return best;
  }

  MistakeReport transcript() {
    MistakeReport report;
    LabeledSequence history;
    std::size_t code = 0;
    while (move_[code] >= 0) {
      const std::size_t x = static_cast<std::size_t>(move_[code]) / 2;
      const bool y = (move_[code] % 2) == 1;
      const bool z = learner_.predict(history, x);
      report.transcript.push_back({x, z, y});
      if (z != y) ++report.mistakes;
      history.push_back({x, y});
      code += static_cast<std::size_t>(1 + (y ? 1 : 0)) * pow3_[x];
    }
    return report;
  }

 private:
  const ConceptClass& c_;
  const Learner& learner_;
  std::vector<std::size_t> pow3_;
  std::vector<int> value_;
  std::vector<int> move_;
};

class MinimaxGame {
 public:
  explicit MinimaxGame(const ConceptClass& c)
      : c_(c), pow3_(powers_of_three(c.n_points())), value_(pow3_.back(), -1) {}

  int solve(std::size_t code, const BitRow& alive) {
    if (value_[code] >= 0) return value_[code];
    int best = 0;
    for (std::size_t x = 0; x < c_.n_points(); ++x) {
      if ((code / pow3_[x]) % 3 != 0) continue;
      const BitRow zero = refine(c_, alive, x, false);
      const BitRow one = refine(c_, alive, x, true);
      int v;
      if (zero.none()) {
        v = solve(code + 2 * pow3_[x], one);
      } else if (one.none()) {
        v = solve(code + pow3_[x], zero);
      } else {
        const int v0 = solve(code + pow3_[x], zero);
        const int v1 = solve(code + 2 * pow3_[x], one);
        // learner picks z, adversary answers whichever label costs more
        v = std::min(std::max(v0, 1 + v1), std::max(1 + v0, v1));
      }
      best = std::max(best, v);
    }
    value_[code] = best;
    return best;
  }

 private:
  const ConceptClass& c_;
  std::vector<std::size_t> pow3_;
  std::vector<int> value_;
};

}  // namespace

MistakeReport worst_case_mistakes(const ConceptClass& c, const Learner& learner) {
  require_game_size(c);
  AdversarySearch search(c, learner);
  LabeledSequence history;
  search.solve(0, BitRow(c.n_concepts(), true), history);
  return search.transcript();
}

std::size_t optimal_adversary_value(const ConceptClass& c) {
  require_game_size(c);
  MinimaxGame game(c);
  return static_cast<std::size_t>(game.solve(0, BitRow(c.n_concepts(), true)));
}

MistakeReport force_mistakes(const ConceptClass& c, const MistakeTree& tree, const Learner& learner) {
  MistakeReport report;
  LabeledSequence history;
  int node = tree.depth == 0 ? -1 : 0;
  for (std::size_t step = 0; step < tree.depth; ++step) {
    if (node < 0) throw InvalidArgument("mistake tree is shallower than its depth");
    const auto& nd = tree.nodes[static_cast<std::size_t>(node)];
    const bool z = learner.predict(history, nd.point);
    const bool y = !z;
    report.transcript.push_back({nd.point, z, y});
    ++report.mistakes;
    history.push_back({nd.point, y});
    node = nd.child[y ? 1 : 0];
  }
  if (consistent_mask(c, history).none()) throw InvalidArgument("mistake tree path is not realizable");
  return report;
}

std::size_t threshold_stage_mistakes(const ConceptClass& c, std::size_t t, const MistakeReport& report) {
  std::size_t count = 0;
  LabeledSequence history;
  for (const auto& e : report.transcript) {
    if (e.prediction != e.label && stage_for(c, t, history) == LearnerStage::kThreshold) ++count;
    history.push_back({e.point, e.label});
  }
  return count;
}

std::optional<BicliqueWitness> threshold_overflow_witness(const ConceptClass& c, std::size_t t,
                                                          const MistakeReport& report) {
  if (t >= 63) return std::nullopt;
  std::vector<std::size_t> mistake_points;
  LabeledSequence history;
  for (const auto& e : report.transcript) {
    const BitRow alive = consistent_mask(c, history);
    const bool threshold = reaches_threshold(alive.count(), t);
    if (threshold && e.prediction != e.label) {
      if (mistake_points.size() == t) {
        BicliqueWitness w;
        w.side_a = mistake_points;
        std::sort(w.side_a.begin(), w.side_a.end());
        const std::size_t want = std::size_t{1} << t;
        alive.for_each_set([&](std::size_t j) {
          if (w.side_b.size() < want) w.side_b.push_back(j);
        });
        return w;
      }
      mistake_points.push_back(e.point);
    }
    history.push_back({e.point, e.label});
  }
  return std::nullopt;
}

}  // namespace vcldim
