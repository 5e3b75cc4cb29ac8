#pragma once

#include <cstdint>
#include <vector>

#include "indcount/big_count.hpp"
#include "indcount/graph.hpp"
#include "indcount/hypergraph.hpp"

namespace indcount::test {

inline Graph make_graph(std::size_t n, std::vector<VertexPair> edges) {
  return Graph::from_edges(n, edges);
}

inline Hypergraph make_hypergraph(std::size_t n, std::size_t k,
                                  std::vector<std::vector<Vertex>> edges) {
  return Hypergraph::from_edges(n, k, edges);
}

// F(1) = F(2) = 1.
inline BigCount fibonacci(std::size_t n) {
  mpz_class a = 0, b = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class c = a + b;
    a = b;
    b = c;
  }
  return BigCount(a);
}

// L(1) = 1, L(2) = 3.
inline BigCount lucas(std::size_t n) {
  mpz_class a = 2, b = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class c = a + b;
    a = b;
    b = c;
  }
  return BigCount(a);
}

inline Graph petersen() {
  std::vector<VertexPair> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edges(10, e);
}

inline Hypergraph fano_plane() {
  return make_hypergraph(7, 2, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6},
                                {2, 4, 5}});
}

}  // namespace indcount::test
