#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "indcount/graph.hpp"
#include "indcount/hypergraph.hpp"

namespace indcount {

// Plain-text instance format:
//
//   # optional comment lines anywhere
//   n m k
//   v_0 v_1 ... v_k        (m lines, k+1 indices each)
//
// Graphs are written with k = 1. Blank lines are ignored.

/// Throws ParseError carrying the 1-based line of the first malformed line.
Hypergraph read_instance(std::istream& in);
Hypergraph read_instance_file(const std::filesystem::path& path);

void write_instance(std::ostream& out, const Hypergraph& h);
void write_instance(std::ostream& out, const Graph& g);
void write_instance_file(const std::filesystem::path& path, const Hypergraph& h);

std::string to_instance_text(const Hypergraph& h);

}  // namespace indcount
