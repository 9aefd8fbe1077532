#pragma once

#include <cstddef>
#include <span>
#include <unordered_map>
#include <vector>

#include "vcldim/bit_row.hpp"
#include "vcldim/concept_class.hpp"

namespace vcldim {

struct VcReport {
  std::size_t value = 0;
  // Lexicographically smallest shattered set of size `value`, ascending.
  std::vector<std::size_t> witness;
};

// Complete binary mistake tree. Node i queries `point`; child[y] is the node
// reached when the adversary reveals label y, or -1 below the last level.
// Every root-to-leaf path is realizable by the class, so an adversary walking
// the tree (answering the opposite of each prediction) forces depth() mistakes.
struct MistakeTree {
  struct Node {
    std::size_t point = 0;
    int child[2] = {-1, -1};
  };
  std::vector<Node> nodes;  // nodes[0] is the root when depth > 0
  std::size_t depth = 0;
};

struct LdimReport {
  std::size_t value = 0;
  MistakeTree witness;
};

// True iff the restrictions of the concepts to `points` realize all 2^|points|
// labelings. Throws InvalidArgument on a bad or repeated index.
bool shatters(const ConceptClass& c, std::span<const std::size_t> points);

// Exact VC dimension by level-wise search over shattered sets (shattering is
// hereditary, so size-(k+1) candidates extend size-k shattered sets). The
// number of shattered sets never exceeds the number of distinct concepts.
// Throws InvalidArgument on an empty class.
VcReport vc_dimension(const ConceptClass& c);
// VC(c) >= d; stops at level d.
bool vc_at_least(const ConceptClass& c, std::size_t d);

// Exact Littlestone dimension with a mistake-tree witness.
// Throws InvalidArgument on an empty class.
LdimReport ldim(const ConceptClass& c);
// Ldim(c) >= d, without computing the full value.
bool ldim_at_least(const ConceptClass& c, std::size_t d);

// Checks that `tree` is a complete mistake tree for `c`: every node's query
// point is fresh on its path and every root-to-leaf path is realizable.
bool is_mistake_tree(const ConceptClass& c, const MistakeTree& tree);

// Brute-force references for n_points <= kOracleMaxPoints. VC: scan all point
// subsets and all labelings. Ldim: memo-free search for complete mistake trees
// of increasing depth. Throw BudgetExceeded above the guard.
inline constexpr std::size_t kOracleMaxPoints = 12;
std::size_t vc_dimension_oracle(const ConceptClass& c);
std::size_t ldim_oracle(const ConceptClass& c);

// Memoized Ldim engine over sub-multisets of one class. Subclasses are given
// as bitsets over the class's concepts; duplicates are folded internally.
class LittlestoneSolver {
 public:
  explicit LittlestoneSolver(const ConceptClass& c);

  // Ldim of the selected concepts; -1 when the selection is empty.
  int value(const BitRow& concepts);
  bool at_least(const BitRow& concepts, std::size_t d);
  // Complete mistake tree of the given depth; requires at_least(concepts, depth).
  MistakeTree tree(const BitRow& concepts, std::size_t depth);

  BitRow all_concepts() const { return BitRow(n_concepts_, true); }

 private:
  struct Bounds {
    int lo;
    int hi;
  };

  BitRow to_distinct(const BitRow& concepts) const;
  int value_distinct(const BitRow& s);
  bool at_least_distinct(const BitRow& s, std::size_t d);
  Bounds& bounds(const BitRow& s, std::size_t count);
  int build(const BitRow& s, std::size_t depth, MistakeTree& out);

  std::size_t n_concepts_;
  std::size_t n_distinct_;
  std::vector<BitRow> ones_;          // per point, over distinct concepts
  std::vector<std::size_t> rep_;      // original concept -> distinct index
  std::unordered_map<BitRow, Bounds, BitRowHash> memo_;
};

}  // namespace vcldim
