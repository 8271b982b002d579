#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "ramsey/errors.hpp"

namespace ramsey::oracle {

// Small graphs only; bitset adjacency rows.
constexpr int kMaxGraphOrder = 12;

class Graph {
 public:
  explicit Graph(int order);

  static Graph cycle(int order);
  static Graph complete(int order);

  int order() const { return order_; }
  bool edge(int i, int j) const { return (adj_[i] >> j) & 1; }
  void set_edge(int i, int j, bool present);
  std::uint16_t row(int v) const { return adj_[v]; }
  void set_row_prefix(int v, std::uint16_t mask);  // adjacency to 0..v-1

  int degree(int v) const;
  std::int64_t edge_count() const;
  std::vector<int> degree_sequence() const;
  // histogram[d] = number of vertices of degree d
  std::vector<int> degree_histogram() const;
  Graph complement() const;

 private:
  int order_;
  std::array<std::uint16_t, kMaxGraphOrder> adj_{};
};

// Backtracking clique search over bitset candidate masks.
bool has_clique(const Graph& g, int k);

// No K_m in g and no independent set of size n.
bool is_mn_graph(const Graph& g, int m, int n);

std::int64_t triangle_count(const Graph& g);
std::int64_t triangle_count_at(const Graph& g, int v);

// N(K3;G) + N(K3;comp G) = C(p,3) - (1/2) sum_v d_v (p - d_v - 1).
// Always true; false flags an implementation bug.
bool goodman_check(const Graph& g);

// Visits every labeled (m,n)-graph of order p, pruning prefixes as soon as a
// K_m or independent n-set appears. Returning false from the callback stops
// the enumeration.
void for_each_mn_graph(int m, int n, int p,
                       const std::function<bool(const Graph&)>& visit);

// Exact (min, max) edge counts over all (m,n;p)-graphs; nullopt when none
// exists. Throws CeilingExceeded above the enumeration ceiling. threads = 0
// picks the hardware concurrency.
std::optional<std::pair<std::int64_t, std::int64_t>> exact_edge_numbers(
    int m, int n, int p, int ceiling = 8, int threads = 1);

// Uniform labeled graph on p vertices.
Graph random_graph(int p, std::mt19937_64& rng);

}  // namespace ramsey::oracle
