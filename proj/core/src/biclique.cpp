#include "vcldim/biclique.hpp"

#include <algorithm>

#include "vcldim/dimensions.hpp"
#include "vcldim/error.hpp"

namespace vcldim {

std::string_view to_string(GapVerdict v) {
  switch (v) {
    case GapVerdict::kYes:
      return "YES";
    case GapVerdict::kNo:
      return "NO";
    case GapVerdict::kNeither:
      return "NEITHER";
  }
  return "NEITHER";
}

namespace {

class BicliqueSearch {
 public:
  BicliqueSearch(const BipartiteGraph& g, std::size_t a, std::size_t b) : g_(g), a_(a), b_(b) {}

  bool run(std::vector<std::size_t>& chosen, BitRow& common) { return extend(0, chosen, common); }

 private:
  bool extend(std::size_t start, std::vector<std::size_t>& chosen, BitRow& common) {
    if (chosen.size() == a_) return true;
    const std::size_t last = g_.n_a() - (a_ - chosen.size());
    for (std::size_t v = start; v <= last; ++v) {
      const BitRow& row = g_.neighbors(v);
      if (common.and_count(row) < b_) continue;
      BitRow next = common & row;
      chosen.push_back(v);
      if (extend(v + 1, chosen, next)) {
        common = std::move(next);
        return true;
      }
      chosen.pop_back();
    }
    return false;
  }

  const BipartiteGraph& g_;
  std::size_t a_;
  std::size_t b_;
};

}  // namespace

std::optional<BicliqueWitness> contains_biclique(const BipartiteGraph& g, std::size_t a, std::size_t b) {
  if (a > g.n_a() || b > g.n_b()) return std::nullopt;
  std::vector<std::size_t> chosen;
  BitRow common(g.n_b(), true);
  if (a > 0) {
    BicliqueSearch search(g, a, b);
    if (!search.run(chosen, common)) return std::nullopt;
  }
  BicliqueWitness w;
  w.side_a = std::move(chosen);
  for (std::size_t v = common.find_first(); v < common.size() && w.side_b.size() < b; v = common.find_next(v + 1)) {
    w.side_b.push_back(v);
  }
  return w;
}

std::optional<BicliqueWitness> contains_exponential_biclique(const BipartiteGraph& g, std::size_t t) {
  if (t > 62) throw InvalidArgument("exponential biclique: t must be <= 62");
  return contains_biclique(g, t, std::size_t{1} << t);
}

std::size_t max_balanced_biclique(const BipartiteGraph& g, std::size_t cap) {
  cap = std::min({cap, g.n_a(), g.n_b()});
  std::size_t best = 0;
  for (std::size_t a = 1; a <= cap; ++a) {
    if (!contains_biclique(g, a, a)) break;
    best = a;
  }
  return best;
}

bool is_biclique(const BipartiteGraph& g, const BicliqueWitness& w) {
  for (std::size_t a : w.side_a) {
    if (a >= g.n_a()) return false;
    for (std::size_t b : w.side_b) {
      if (b >= g.n_b() || !g.has_edge(a, b)) return false;
    }
  }
  auto distinct = [](std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  return distinct(w.side_a) && distinct(w.side_b);
}

GapVerdict gap_biclique_verdict(const BipartiteGraph& g, std::size_t q1, std::size_t q2) {
  if (q2 > q1) throw InvalidArgument("gap biclique: need q2 <= q1");
  if (contains_biclique(g, q1, q1)) return GapVerdict::kYes;
  if (!contains_biclique(g, q2, q2)) return GapVerdict::kNo;
  return GapVerdict::kNeither;
}

GapVerdict gap_exp_biclique_verdict(const BipartiteGraph& g, std::size_t t1, std::size_t t2) {
  if (t2 > t1) throw InvalidArgument("gap exponential biclique: need t2 <= t1");
  if (contains_exponential_biclique(g, t1)) return GapVerdict::kYes;
  if (!contains_exponential_biclique(g, t2)) return GapVerdict::kNo;
  return GapVerdict::kNeither;
}

GapVerdict gap_vcldim_verdict(const ConceptClass& c, std::size_t d1, std::size_t d2) {
  if (d2 > d1) throw InvalidArgument("gap VC-Ldim: need d2 <= d1");
  if (vc_at_least(c, d1)) return GapVerdict::kYes;
  if (!ldim_at_least(c, d2)) return GapVerdict::kNo;
  return GapVerdict::kNeither;
}

}  // namespace vcldim
