#include "vcldim/concept_class.hpp"

#include <charconv>
#include <unordered_set>

#include "vcldim/error.hpp"

namespace vcldim {

ConceptClass ConceptClass::from_columns(std::size_t n_points, std::span<const std::string_view> columns) {
  ConceptClass c(n_points, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != n_points) {
      throw InvalidArgument("concept " + std::to_string(j) + " has wrong length");
    }
    for (std::size_t i = 0; i < n_points; ++i) {
      const char ch = columns[j][i];
      if (ch != '0' && ch != '1') throw InvalidArgument("concept bits must be 0 or 1");
      c.set_label(i, j, ch == '1');
    }
  }
  return c;
}

ConceptClass ConceptClass::select_concepts(const BitRow& keep) const {
  ConceptClass out(n_points(), keep.count());
  std::size_t k = 0;
  keep.for_each_set([&](std::size_t j) {
    for (std::size_t i = 0; i < n_points(); ++i) {
      if (label(i, j)) out.set_label(i, k, true);
    }
    ++k;
  });
  return out;
}

namespace {

BitRow first_occurrences(const ConceptClass& c) {
  BitRow keep(c.n_concepts());
  std::unordered_set<BitRow, BitRowHash> seen;
  for (std::size_t j = 0; j < c.n_concepts(); ++j) {
    if (seen.insert(c.concept_bits(j)).second) keep.set(j);
  }
  return keep;
}

}  // namespace

ConceptClass ConceptClass::deduplicated() const { return select_concepts(first_occurrences(*this)); }

std::size_t ConceptClass::distinct_concept_count() const { return first_occurrences(*this).count(); }

void validate_sequence(const LabeledSequence& seq, std::size_t n_points) {
  std::vector<bool> used(n_points, false);
  for (const auto& item : seq) {
    if (item.point >= n_points) {
      throw InvalidArgument("sequence point " + std::to_string(item.point) + " out of range");
    }
    if (used[item.point]) {
      throw InvalidArgument("sequence repeats point " + std::to_string(item.point));
    }
    used[item.point] = true;
  }
}

LabeledSequence parse_sequence(std::string_view text) {
  LabeledSequence seq;
  if (text.empty()) return seq;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, comma - pos);
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos) throw InvalidArgument("sequence item '" + std::string(item) + "' lacks ':'");
    LabeledPoint lp;
    const auto point_text = item.substr(0, colon);
    const auto [p, ec] = std::from_chars(point_text.data(), point_text.data() + point_text.size(), lp.point);
    if (ec != std::errc() || p != point_text.data() + point_text.size() || point_text.empty()) {
      throw InvalidArgument("bad point index in '" + std::string(item) + "'");
    }
    const auto label_text = item.substr(colon + 1);
    if (label_text != "0" && label_text != "1") {
      throw InvalidArgument("bad label in '" + std::string(item) + "'");
    }
    lp.label = label_text == "1";
    seq.push_back(lp);
    pos = comma + 1;
  }
  return seq;
}

std::string format_sequence(const LabeledSequence& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(seq[i].point);
    out += seq[i].label ? ":1" : ":0";
  }
  return out;
}

ConceptClass restrict(const ConceptClass& c, std::span<const std::size_t> points) {
  std::vector<bool> used(c.n_points(), false);
  BitMatrix m(points.size(), c.n_concepts());
  for (std::size_t r = 0; r < points.size(); ++r) {
    const std::size_t p = points[r];
    if (p >= c.n_points()) throw InvalidArgument("restrict: point " + std::to_string(p) + " out of range");
    if (used[p]) throw InvalidArgument("restrict: point " + std::to_string(p) + " repeated");
    used[p] = true;
    m.row(r) = c.ones_on(p);
  }
  return ConceptClass(std::move(m));
}

BitRow consistent_mask(const ConceptClass& c, const LabeledSequence& seq) {
  validate_sequence(seq, c.n_points());
  BitRow mask(c.n_concepts(), true);
  for (const auto& item : seq) {
    if (item.label) {
      mask &= c.ones_on(item.point);
    } else {
      mask.subtract(c.ones_on(item.point));
    }
  }
  return mask;
}

ConceptClass consistent_subclass(const ConceptClass& c, const LabeledSequence& seq) {
  return c.select_concepts(consistent_mask(c, seq));
}

}  // namespace vcldim
