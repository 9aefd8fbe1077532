#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vcldim/bit_row.hpp"

namespace vcldim {

// A multiset of concepts over points 0..n_points-1. Row i of the matrix holds
// the labels of every concept on point i, so m[i][j] = c_j(i). Duplicate
// columns are kept.
class ConceptClass {
 public:
  ConceptClass() = default;
  ConceptClass(std::size_t n_points, std::size_t n_concepts) : matrix_(n_points, n_concepts) {}
  explicit ConceptClass(BitMatrix matrix) : matrix_(std::move(matrix)) {}

  // Builds a class from its concepts, each given as a string of '0'/'1' of
  // length n_points (character i = label on point i).
  static ConceptClass from_columns(std::size_t n_points, std::span<const std::string_view> columns);
  static ConceptClass from_columns(std::size_t n_points, std::initializer_list<std::string_view> columns) {
    return from_columns(n_points, std::span<const std::string_view>(columns.begin(), columns.size()));
  }

  std::size_t n_points() const { return matrix_.rows(); }
  std::size_t n_concepts() const { return matrix_.cols(); }
  bool label(std::size_t point, std::size_t concept_index) const { return matrix_.get(point, concept_index); }
  void set_label(std::size_t point, std::size_t concept_index, bool v) { matrix_.set(point, concept_index, v); }

  // Bitset over concepts that label `point` with 1.
  const BitRow& ones_on(std::size_t point) const { return matrix_.row(point); }
  // Concept j as a bitset over points.
  BitRow concept_bits(std::size_t j) const { return matrix_.column(j); }

  const BitMatrix& matrix() const { return matrix_; }

  // Keeps only the concepts whose bit is set in `keep`, in index order.
  ConceptClass select_concepts(const BitRow& keep) const;
  // One representative per distinct column, first occurrence order.
  ConceptClass deduplicated() const;
  std::size_t distinct_concept_count() const;

  friend bool operator==(const ConceptClass&, const ConceptClass&) = default;

 private:
  BitMatrix matrix_;
};

struct LabeledPoint {
  std::size_t point = 0;
  bool label = false;
  friend bool operator==(const LabeledPoint&, const LabeledPoint&) = default;
};

// Online-learning transcript; points must be distinct.
using LabeledSequence = std::vector<LabeledPoint>;

// Throws InvalidArgument if a point repeats or is out of range.
void validate_sequence(const LabeledSequence& seq, std::size_t n_points);

// `0:1,3:0` syntax; empty string is the empty sequence.
LabeledSequence parse_sequence(std::string_view text);
std::string format_sequence(const LabeledSequence& seq);

// Rows of `c` in the order of `points` (distinct, in range); columns untouched.
ConceptClass restrict(const ConceptClass& c, std::span<const std::size_t> points);

// Bitset over concepts of `c` agreeing with every item of `seq`.
BitRow consistent_mask(const ConceptClass& c, const LabeledSequence& seq);
// Columns of `c` agreeing with every item of `seq`, order and multiplicity kept.
ConceptClass consistent_subclass(const ConceptClass& c, const LabeledSequence& seq);

}  // namespace vcldim
