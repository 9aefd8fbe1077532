#include "vcldim/formats.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "vcldim/error.hpp"

namespace vcldim {
namespace {

// Splits text into LF-terminated lines. The final line must end with '\n'.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool at_end() const { return pos_ == text_.size(); }
  std::size_t line_number() const { return line_; }

  std::string_view next() {
    if (at_end()) throw ParseError(line_ + 1, "unexpected end of input");
    const std::size_t nl = text_.find('\n', pos_);
    ++line_;
    if (nl == std::string_view::npos) throw ParseError(line_, "missing trailing newline");
    std::string_view line = text_.substr(pos_, nl - pos_);
    pos_ = nl + 1;
    return line;
  }

  void expect_end() const {
    if (!at_end()) throw ParseError(line_ + 1, "unexpected trailing content");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
};

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::size_t parse_count(std::string_view token, std::size_t line) {
  std::size_t v = 0;
  const auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || p != token.data() + token.size() || token.empty()) {
    throw ParseError(line, "expected a nonnegative integer, got '" + std::string(token) + "'");
  }
  return v;
}

std::size_t parse_keyed(LineReader& in, std::string_view key) {
  const auto line = in.next();
  const auto tokens = split_ws(line);
  if (tokens.size() != 2 || tokens[0] != key) {
    throw ParseError(in.line_number(), "expected '" + std::string(key) + " <n>'");
  }
  return parse_count(tokens[1], in.line_number());
}

void parse_magic(LineReader& in, std::string_view magic) {
  const auto line = in.next();
  if (line != std::string(magic) + " 1") {
    throw ParseError(in.line_number(), "expected header '" + std::string(magic) + " 1'");
  }
}

std::pair<std::size_t, std::size_t> parse_pair(LineReader& in) {
  const auto line = in.next();
  const auto tokens = split_ws(line);
  if (tokens.size() != 2) throw ParseError(in.line_number(), "expected two indices");
  return {parse_count(tokens[0], in.line_number()), parse_count(tokens[1], in.line_number())};
}

}  // namespace

ConceptClass parse_concept_class(std::string_view text) {
  LineReader in(text);
  parse_magic(in, "ccls");
  const std::size_t n = parse_keyed(in, "points");
  const std::size_t m = parse_keyed(in, "concepts");
  std::vector<BitRow> rows;
  for (std::size_t i = 0; i < n; ++i) {
    const auto line = in.next();
    if (line.size() != m) {
      throw ParseError(in.line_number(), "row has " + std::to_string(line.size()) + " characters, expected " +
                                             std::to_string(m));
    }
    BitRow row(m);
    for (std::size_t j = 0; j < m; ++j) {
      if (line[j] == '1') {
        row.set(j);
      } else if (line[j] != '0') {
        throw ParseError(in.line_number(), "invalid bit character");
      }
    }
    rows.push_back(std::move(row));
  }
  in.expect_end();
  BitMatrix matrix(n, m);
  for (std::size_t i = 0; i < n; ++i) matrix.row(i) = std::move(rows[i]);
  return ConceptClass(std::move(matrix));
}

std::string serialize_concept_class(const ConceptClass& c) {
  std::string out = "ccls 1\npoints " + std::to_string(c.n_points()) + "\nconcepts " +
                    std::to_string(c.n_concepts()) + "\n";
  out.reserve(out.size() + c.n_points() * (c.n_concepts() + 1));
  for (std::size_t i = 0; i < c.n_points(); ++i) {
    for (std::size_t j = 0; j < c.n_concepts(); ++j) out += c.label(i, j) ? '1' : '0';
    out += '\n';
  }
  return out;
}

BipartiteGraph parse_bigraph(std::string_view text) {
  LineReader in(text);
  parse_magic(in, "bigraph");
  const std::size_t n_a = parse_keyed(in, "A");
  const std::size_t n_b = parse_keyed(in, "B");
  const std::size_t k = parse_keyed(in, "edges");
  BipartiteGraph g(n_a, n_b);
  for (std::size_t e = 0; e < k; ++e) {
    const auto [a, b] = parse_pair(in);
    if (a >= n_a || b >= n_b) throw ParseError(in.line_number(), "edge index out of range");
    g.add_edge(a, b);
  }
  in.expect_end();
  return g;
}

std::string serialize_bigraph(const BipartiteGraph& g) {
  std::ostringstream out;
  out << "bigraph 1\nA " << g.n_a() << "\nB " << g.n_b() << "\nedges " << g.edge_count() << '\n';
  for (std::size_t a = 0; a < g.n_a(); ++a) {
    g.neighbors(a).for_each_set([&](std::size_t b) { out << a << ' ' << b << '\n'; });
  }
  return out.str();
}

UndirectedGraph parse_graph(std::string_view text) {
  LineReader in(text);
  parse_magic(in, "graph");
  const std::size_t n = parse_keyed(in, "N");
  const std::size_t k = parse_keyed(in, "edges");
  UndirectedGraph g(n);
  for (std::size_t e = 0; e < k; ++e) {
    const auto [u, v] = parse_pair(in);
    if (u >= n || v >= n) throw ParseError(in.line_number(), "vertex index out of range");
    if (u >= v) throw ParseError(in.line_number(), "edge must satisfy u < v");
    g.add_edge(u, v);
  }
  in.expect_end();
  return g;
}

std::string serialize_graph(const UndirectedGraph& g) {
  std::ostringstream out;
  out << "graph 1\nN " << g.size() << "\nedges " << g.edge_count() << '\n';
  for (std::size_t u = 0; u < g.size(); ++u) {
    g.neighbors(u).for_each_set([&](std::size_t v) {
      if (u < v) out << u << ' ' << v << '\n';
    });
  }
  return out.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidArgument("cannot write '" + path.string() + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw InvalidArgument("write failed for '" + path.string() + "'");
}

}  // namespace vcldim
