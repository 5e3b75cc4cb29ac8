#include "indcount/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string_view>
#include <vector>

#include "indcount/errors.hpp"

namespace indcount {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::uint64_t parse_index(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

bool is_skippable(std::string_view line) {
  for (char c : line) {
    if (c == '#') return true;
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

}  // namespace

Hypergraph read_instance(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0, m = 0, k = 0;
  std::vector<std::vector<Vertex>> edges;
  std::set<std::vector<Vertex>> seen;
  std::size_t last_line = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    last_line = line_no;
    const auto tokens = split_ws(line);
    if (!have_header) {
      if (tokens.size() != 3) throw ParseError(line_no, "header must be 'n m k'");
      n = parse_index(tokens[0], line_no);
      m = parse_index(tokens[1], line_no);
      k = parse_index(tokens[2], line_no);
      if (k < 1) throw ParseError(line_no, "k must be >= 1");
      if (n > (std::uint64_t{1} << 31)) throw ParseError(line_no, "vertex count too large");
      have_header = true;
      edges.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(m, 1U << 20)));
      continue;
    }
    if (edges.size() == m) throw ParseError(line_no, "more edge lines than the header's m");
    if (tokens.size() != k + 1) {
      throw ParseError(line_no, "edge line has " + std::to_string(tokens.size()) +
                                    " entries, expected " + std::to_string(k + 1));
    }
    std::vector<Vertex> edge;
    edge.reserve(tokens.size());
    for (auto t : tokens) {
      const auto v = parse_index(t, line_no);
      if (v >= n) throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range");
      edge.push_back(static_cast<Vertex>(v));
    }
    auto sorted = edge;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ParseError(line_no, "edge repeats a vertex");
    }
    if (!seen.insert(std::move(sorted)).second) throw ParseError(line_no, "duplicate edge");
    edges.push_back(std::move(edge));
  }
  if (!have_header) throw ParseError(line_no + 1, "missing 'n m k' header");
  if (edges.size() != m) {
    throw ParseError(last_line + 1, "expected " + std::to_string(m) + " edges, found " +
                                        std::to_string(edges.size()));
  }
  try {
    return Hypergraph::from_edges(n, k, edges);
  } catch (const InvalidInput& e) {
    throw ParseError(last_line, e.what());
  }
}

Hypergraph read_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open instance file '" + path.string() + "'");
  return read_instance(in);
}

void write_instance(std::ostream& out, const Hypergraph& h) {
  out << h.vertex_count() << ' ' << h.edge_count() << ' ' << h.k() << '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out << ' ';
      out << e[i];
    }
    out << '\n';
  }
}

void write_instance(std::ostream& out, const Graph& g) {
  write_instance(out, Hypergraph::from_graph(g));
}

void write_instance_file(const std::filesystem::path& path, const Hypergraph& h) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write instance file '" + path.string() + "'");
  write_instance(out, h);
}

std::string to_instance_text(const Hypergraph& h) {
  std::ostringstream out;
  write_instance(out, h);
  return out.str();
}

}  // namespace indcount
