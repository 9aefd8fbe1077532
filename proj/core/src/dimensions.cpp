#include "vcldim/dimensions.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_set>

#include "vcldim/error.hpp"

namespace vcldim {
namespace {

int floor_log2(std::size_t n) { return static_cast<int>(std::bit_width(n)) - 1; }

void require_nonempty(const ConceptClass& c) {
  if (c.n_concepts() == 0) throw InvalidArgument("dimension undefined on empty class");
}

// Distinct columns of a class, addressed through per-point bitsets.
struct DistinctView {
  std::size_t n_points = 0;
  std::size_t n_distinct = 0;
  std::vector<BitRow> ones;  // per point over distinct concepts

  explicit DistinctView(const ConceptClass& c) : n_points(c.n_points()) {
    const ConceptClass d = c.deduplicated();
    n_distinct = d.n_concepts();
    ones.reserve(n_points);
    for (std::size_t i = 0; i < n_points; ++i) ones.push_back(d.ones_on(i));
  }
};

// Searches shattered sets level by level up to size `max_size`. Returns the
// largest size reached and its lexicographically first shattered set.
VcReport shattered_search(const ConceptClass& c, std::size_t max_size) {
  const DistinctView view(c);
  const std::size_t m = view.n_distinct;
  const std::size_t n = view.n_points;

  VcReport best;  // the empty set is shattered by any nonempty class
  std::vector<std::vector<std::size_t>> level{{}};
  std::vector<std::uint32_t> parent_patterns(m);
  std::vector<std::uint64_t> seen;

  for (std::size_t k = 0; k < max_size && k + 1 < 32; ++k) {
    const std::size_t needed = std::size_t{1} << (k + 1);
    if (needed > m) break;
    std::vector<std::vector<std::size_t>> next;
    seen.assign((needed + 63) / 64, 0);
    for (const auto& parent : level) {
      std::fill(parent_patterns.begin(), parent_patterns.end(), 0);
      for (std::size_t bit = 0; bit < parent.size(); ++bit) {
        view.ones[parent[bit]].for_each_set([&](std::size_t j) { parent_patterns[j] |= std::uint32_t{1} << bit; });
      }
      const std::size_t first = parent.empty() ? 0 : parent.back() + 1;
      for (std::size_t x = first; x < n; ++x) {
        std::fill(seen.begin(), seen.end(), 0);
        std::size_t distinct = 0;
        const BitRow& row = view.ones[x];
        for (std::size_t j = 0; j < m; ++j) {
          const std::uint32_t p = parent_patterns[j] | (static_cast<std::uint32_t>(row.test(j)) << k);
          std::uint64_t& w = seen[p / 64];
          const std::uint64_t mask = std::uint64_t{1} << (p % 64);
          if ((w & mask) == 0) {
            w |= mask;
            if (++distinct == needed) break;
          }
        }
        if (distinct == needed) {
          auto child = parent;
          child.push_back(x);
          next.push_back(std::move(child));
        }
      }
    }
    if (next.empty()) break;
    best.value = k + 1;
    best.witness = next.front();
    level = std::move(next);
  }
  return best;
}

}  // namespace

bool shatters(const ConceptClass& c, std::span<const std::size_t> points) {
  std::vector<bool> used(c.n_points(), false);
  for (std::size_t p : points) {
    if (p >= c.n_points()) throw InvalidArgument("shatters: point " + std::to_string(p) + " out of range");
    if (used[p]) throw InvalidArgument("shatters: point " + std::to_string(p) + " repeated");
    used[p] = true;
  }
  if (points.size() >= 63) return false;
  const std::size_t needed = std::size_t{1} << points.size();
  if (needed > c.n_concepts()) return false;
  std::unordered_set<std::uint64_t> patterns;
  for (std::size_t j = 0; j < c.n_concepts(); ++j) {
    std::uint64_t p = 0;
    for (std::size_t b = 0; b < points.size(); ++b) {
      if (c.label(points[b], j)) p |= std::uint64_t{1} << b;
    }
    patterns.insert(p);
  }
  return patterns.size() == needed;
}

VcReport vc_dimension(const ConceptClass& c) {
  require_nonempty(c);
  return shattered_search(c, c.n_points());
}

bool vc_at_least(const ConceptClass& c, std::size_t d) {
  require_nonempty(c);
  if (d == 0) return true;
  if (d > c.n_points()) return false;
  return shattered_search(c, d).value >= d;
}

LdimReport ldim(const ConceptClass& c) {
  require_nonempty(c);
  LittlestoneSolver solver(c);
  const BitRow all = solver.all_concepts();
  LdimReport report;
  report.value = static_cast<std::size_t>(solver.value(all));
  report.witness = solver.tree(all, report.value);
  return report;
}

bool ldim_at_least(const ConceptClass& c, std::size_t d) {
  require_nonempty(c);
  LittlestoneSolver solver(c);
  return solver.at_least(solver.all_concepts(), d);
}

namespace {

bool tree_ok(const ConceptClass& c, const MistakeTree& tree, int node, std::size_t remaining, const BitRow& alive,
             std::vector<bool>& used) {
  if (remaining == 0) return node == -1 && alive.any();
  if (node < 0 || static_cast<std::size_t>(node) >= tree.nodes.size()) return false;
  const auto& nd = tree.nodes[static_cast<std::size_t>(node)];
  if (nd.point >= c.n_points() || used[nd.point]) return false;
  used[nd.point] = true;
  bool ok = true;
  for (int y = 0; y < 2 && ok; ++y) {
    BitRow next = alive;
    if (y == 1) {
      next &= c.ones_on(nd.point);
    } else {
      next.subtract(c.ones_on(nd.point));
    }
    ok = tree_ok(c, tree, nd.child[y], remaining - 1, next, used);
  }
  used[nd.point] = false;
  return ok;
}

}  // namespace

bool is_mistake_tree(const ConceptClass& c, const MistakeTree& tree) {
  if (c.n_concepts() == 0) return false;
  std::vector<bool> used(c.n_points(), false);
  const int root = tree.depth == 0 ? -1 : 0;
  return tree_ok(c, tree, root, tree.depth, BitRow(c.n_concepts(), true), used);
}

// ---------------------------------------------------------------------------
// Oracles

namespace {

void require_oracle_size(const ConceptClass& c) {
  require_nonempty(c);
  if (c.n_points() > kOracleMaxPoints) {
    throw BudgetExceeded("oracle limited to " + std::to_string(kOracleMaxPoints) + " points");
  }
}

bool complete_tree_exists(const ConceptClass& c, const BitRow& alive, std::size_t depth) {
  if (depth == 0) return alive.any();
  for (std::size_t x = 0; x < c.n_points(); ++x) {
    const BitRow one = alive & c.ones_on(x);
    BitRow zero = alive;
    zero.subtract(c.ones_on(x));
    if (one.none() || zero.none()) continue;
    if (complete_tree_exists(c, zero, depth - 1) && complete_tree_exists(c, one, depth - 1)) return true;
  }
  return false;
}

}  // namespace

std::size_t vc_dimension_oracle(const ConceptClass& c) {
  require_oracle_size(c);
  const std::size_t n = c.n_points();
  std::size_t best = 0;
  for (std::uint32_t subset = 0; subset < (1U << n); ++subset) {
    const std::size_t size = static_cast<std::size_t>(std::popcount(subset));
    if (size <= best) continue;
    bool all_labelings = true;
    for (std::uint32_t labeling = 0; labeling < (1U << n) && all_labelings; ++labeling) {
      if ((labeling & ~subset) != 0) continue;
      bool realized = false;
      for (std::size_t j = 0; j < c.n_concepts() && !realized; ++j) {
        bool match = true;
        for (std::size_t i = 0; i < n && match; ++i) {
          if ((subset >> i) & 1U) match = c.label(i, j) == (((labeling >> i) & 1U) != 0);
        }
        realized = match;
      }
      all_labelings = realized;
    }
    if (all_labelings) best = size;
  }
  return best;
}

std::size_t ldim_oracle(const ConceptClass& c) {
  require_oracle_size(c);
  const BitRow all(c.n_concepts(), true);
  std::size_t d = 0;
  while (d < c.n_points() && complete_tree_exists(c, all, d + 1)) ++d;
  return d;
}

// ---------------------------------------------------------------------------
// LittlestoneSolver

LittlestoneSolver::LittlestoneSolver(const ConceptClass& c) : n_concepts_(c.n_concepts()), rep_(c.n_concepts()) {
  std::unordered_map<BitRow, std::size_t, BitRowHash> index;
  std::vector<std::size_t> representatives;
  for (std::size_t j = 0; j < c.n_concepts(); ++j) {
    const auto [it, inserted] = index.emplace(c.concept_bits(j), representatives.size());
    if (inserted) representatives.push_back(j);
    rep_[j] = it->second;
  }
  n_distinct_ = representatives.size();
  ones_.assign(c.n_points(), BitRow(n_distinct_));
  for (std::size_t d = 0; d < n_distinct_; ++d) {
    for (std::size_t i = 0; i < c.n_points(); ++i) {
      if (c.label(i, representatives[d])) ones_[i].set(d);
    }
  }
}

BitRow LittlestoneSolver::to_distinct(const BitRow& concepts) const {
  if (concepts.size() != n_concepts_) throw InvalidArgument("concept mask has wrong width");
  BitRow s(n_distinct_);
  concepts.for_each_set([&](std::size_t j) { s.set(rep_[j]); });
  return s;
}

LittlestoneSolver::Bounds& LittlestoneSolver::bounds(const BitRow& s, std::size_t count) {
  auto it = memo_.find(s);
  if (it == memo_.end()) it = memo_.emplace(s, Bounds{0, floor_log2(count)}).first;
  return it->second;
}

int LittlestoneSolver::value(const BitRow& concepts) { return value_distinct(to_distinct(concepts)); }

bool LittlestoneSolver::at_least(const BitRow& concepts, std::size_t d) {
  return at_least_distinct(to_distinct(concepts), d);
}

int LittlestoneSolver::value_distinct(const BitRow& s) {
  const std::size_t count = s.count();
  if (count == 0) return -1;
  if (count == 1) return 0;
  {
    const Bounds b = bounds(s, count);
    if (b.lo == b.hi) return b.lo;
  }
  int best = bounds(s, count).lo;
  const int ub = bounds(s, count).hi;
  for (std::size_t x = 0; x < ones_.size() && best < ub; ++x) {
    const BitRow one = s & ones_[x];
    const std::size_t c1 = one.count();
    const std::size_t c0 = count - c1;
    if (c0 == 0 || c1 == 0) continue;
    if (1 + floor_log2(std::min(c0, c1)) <= best) continue;
    BitRow zero = s;
    zero.subtract(ones_[x]);
    const BitRow& small = c1 <= c0 ? one : zero;
    const BitRow& large = c1 <= c0 ? zero : one;
    const int ls = value_distinct(small);
    if (1 + ls <= best) continue;
    const int ll = value_distinct(large);
    best = std::max(best, 1 + std::min(ls, ll));
  }
  Bounds& b = bounds(s, count);  // re-lookup: recursion may rehash
  b.lo = b.hi = best;
  return best;
}

bool LittlestoneSolver::at_least_distinct(const BitRow& s, std::size_t d) {
  const std::size_t count = s.count();
  if (count == 0) return false;
  if (d == 0) return true;
  if (d >= 63 || count < (std::size_t{1} << d)) return false;
  {
    const Bounds b = bounds(s, count);
    if (b.lo >= static_cast<int>(d)) return true;
    if (b.hi < static_cast<int>(d)) return false;
  }
  const std::size_t half = std::size_t{1} << (d - 1);
  for (std::size_t x = 0; x < ones_.size(); ++x) {
    const BitRow one = s & ones_[x];
    const std::size_t c1 = one.count();
    const std::size_t c0 = count - c1;
    if (c0 < half || c1 < half) continue;
    BitRow zero = s;
    zero.subtract(ones_[x]);
    const BitRow& small = c1 <= c0 ? one : zero;
    const BitRow& large = c1 <= c0 ? zero : one;
    if (at_least_distinct(small, d - 1) && at_least_distinct(large, d - 1)) {
      Bounds& b = bounds(s, count);
      b.lo = std::max(b.lo, static_cast<int>(d));
      return true;
    }
  }
  Bounds& b = bounds(s, count);
  b.hi = std::min(b.hi, static_cast<int>(d) - 1);
  return false;
}

MistakeTree LittlestoneSolver::tree(const BitRow& concepts, std::size_t depth) {
  const BitRow s = to_distinct(concepts);
  if (!at_least_distinct(s, depth)) throw InvalidArgument("no complete mistake tree of the requested depth");
  MistakeTree out;
  out.depth = depth;
  build(s, depth, out);
  return out;
}

int LittlestoneSolver::build(const BitRow& s, std::size_t depth, MistakeTree& out) {
  if (depth == 0) return -1;
  for (std::size_t x = 0; x < ones_.size(); ++x) {
    const BitRow one = s & ones_[x];
    BitRow zero = s;
    zero.subtract(ones_[x]);
    if (one.none() || zero.none()) continue;
    if (!at_least_distinct(zero, depth - 1) || !at_least_distinct(one, depth - 1)) continue;
    const int id = static_cast<int>(out.nodes.size());
    out.nodes.push_back({x, {-1, -1}});
    const int c0 = build(zero, depth - 1, out);
    const int c1 = build(one, depth - 1, out);
    out.nodes[static_cast<std::size_t>(id)].child[0] = c0;
    out.nodes[static_cast<std::size_t>(id)].child[1] = c1;
    return id;
  }
  throw InvalidArgument("mistake tree construction failed");
}

}  // namespace vcldim
