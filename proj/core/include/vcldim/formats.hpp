#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "vcldim/concept_class.hpp"
#include "vcldim/graphs.hpp"

namespace vcldim {

// ccls 1 / points n / concepts m / n rows of m characters in {0,1}.
ConceptClass parse_concept_class(std::string_view text);
std::string serialize_concept_class(const ConceptClass& c);

// bigraph 1 / A n_a / B n_b / edges k / k lines "i j". Duplicate edges are
// accepted; serialization lists each edge once in row-major order.
BipartiteGraph parse_bigraph(std::string_view text);
std::string serialize_bigraph(const BipartiteGraph& g);

// graph 1 / N n / edges k / k lines "u v" with u < v.
UndirectedGraph parse_graph(std::string_view text);
std::string serialize_graph(const UndirectedGraph& g);

// Whole-file helpers. Read failures surface as ParseError at line 0.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace vcldim
