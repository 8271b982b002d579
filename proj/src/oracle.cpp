#include "ramsey/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <mutex>
#include <thread>

namespace ramsey::oracle {

Graph::Graph(int order) : order_(order) {
  if (order < 0 || order > kMaxGraphOrder) {
    throw CeilingExceeded("graph order " + std::to_string(order) +
                          " outside [0," + std::to_string(kMaxGraphOrder) +
                          "]");
  }
}

Graph Graph::cycle(int order) {
  Graph g(order);
  for (int i = 0; i < order; ++i) g.set_edge(i, (i + 1) % order, true);
  return g;
}

Graph Graph::complete(int order) {
  Graph g(order);
  for (int i = 0; i < order; ++i)
    for (int j = i + 1; j < order; ++j) g.set_edge(i, j, true);
  return g;
}

void Graph::set_edge(int i, int j, bool present) {
  if (i == j) throw RamseyError("self-loops are not representable");
  if (present) {
    adj_[i] |= std::uint16_t(1u << j);
    adj_[j] |= std::uint16_t(1u << i);
  } else {
    adj_[i] &= std::uint16_t(~(1u << j));
    adj_[j] &= std::uint16_t(~(1u << i));
  }
}

void Graph::set_row_prefix(int v, std::uint16_t mask) {
  for (int u = 0; u < v; ++u) set_edge(u, v, (mask >> u) & 1);
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

std::int64_t Graph::edge_count() const {
  int total = 0;
  for (int v = 0; v < order_; ++v) total += degree(v);
  return total / 2;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(order_);
  for (int v = 0; v < order_; ++v) d[v] = degree(v);
  return d;
}

std::vector<int> Graph::degree_histogram() const {
  std::vector<int> h(order_ == 0 ? 1 : order_, 0);
  for (int v = 0; v < order_; ++v) ++h[degree(v)];
  return h;
}

Graph Graph::complement() const {
  Graph g(order_);
  std::uint16_t all = std::uint16_t((1u << order_) - 1);
  for (int v = 0; v < order_; ++v) {
    g.adj_[v] = std::uint16_t(~adj_[v] & all & ~(1u << v));
  }
  return g;
}

namespace {

using Rows = std::array<std::uint16_t, kMaxGraphOrder>;

// Is there a k-clique inside the candidate set? Vertices are taken in
// ascending order so each clique is visited once.
bool clique_in(const Rows& adj, std::uint16_t cand, int k) {
  if (k <= 0) return true;
  if (std::popcount(cand) < k) return false;
  while (cand) {
    int v = std::countr_zero(cand);
    cand &= std::uint16_t(cand - 1);
    if (clique_in(adj, std::uint16_t(cand & adj[v]), k - 1)) return true;
  }
  return false;
}

Rows rows_of(const Graph& g) {
  Rows r{};
  for (int v = 0; v < g.order(); ++v) r[v] = g.row(v);
  return r;
}

// Writes vertex k's adjacency (mask over vertices 0..k-1) into both the
// graph and complement row arrays. Bit k of earlier rows is overwritten in
// both directions, so no undo step is needed.
void place_vertex(Rows& adj, Rows& comp, int k, std::uint16_t mask) {
  std::uint16_t low = std::uint16_t((1u << k) - 1);
  adj[k] = mask;
  comp[k] = std::uint16_t(~mask & low);
  for (int v = 0; v < k; ++v) {
    if ((mask >> v) & 1) {
      adj[v] |= std::uint16_t(1u << k);
      comp[v] &= std::uint16_t(~(1u << k));
    } else {
      comp[v] |= std::uint16_t(1u << k);
      adj[v] &= std::uint16_t(~(1u << k));
    }
  }
}

struct EdgeExtrema {
  std::int64_t min_edges = std::numeric_limits<std::int64_t>::max();
  std::int64_t max_edges = -1;
  bool found() const { return max_edges >= 0; }
  void absorb(std::int64_t edges) {
    min_edges = std::min(min_edges, edges);
    max_edges = std::max(max_edges, edges);
  }
  void merge(const EdgeExtrema& o) {
    min_edges = std::min(min_edges, o.min_edges);
    max_edges = std::max(max_edges, o.max_edges);
  }
};

void extrema_dfs(Rows& adj, Rows& comp, int k, int p, int m, int n,
                 std::int64_t edges, EdgeExtrema& out) {
  if (k == p) {
    out.absorb(edges);
    return;
  }
  std::uint16_t limit = std::uint16_t(1u << k);
  for (std::uint16_t mask = 0;; ++mask) {
    // Prune as soon as the new vertex completes a K_m or independent n-set
    // among the first k+1 vertices.
    if (!clique_in(adj, mask, m - 1) &&
        !clique_in(comp, std::uint16_t(~mask & (limit - 1)), n - 1)) {
      place_vertex(adj, comp, k, mask);
      extrema_dfs(adj, comp, k + 1, p, m, n, edges + std::popcount(mask), out);
    }
    if (mask == limit - 1) break;
  }
}

struct Prefix {
  Rows adj;
  Rows comp;
  std::int64_t edges;
};

void collect_prefixes(Rows& adj, Rows& comp, int k, int depth, int m, int n,
                      std::int64_t edges, std::vector<Prefix>& out) {
  if (k == depth) {
    out.push_back({adj, comp, edges});
    return;
  }
  std::uint16_t limit = std::uint16_t(1u << k);
  for (std::uint16_t mask = 0;; ++mask) {
    if (!clique_in(adj, mask, m - 1) &&
        !clique_in(comp, std::uint16_t(~mask & (limit - 1)), n - 1)) {
      place_vertex(adj, comp, k, mask);
      collect_prefixes(adj, comp, k + 1, depth, m, n,
                       edges + std::popcount(mask), out);
    }
    if (mask == limit - 1) break;
  }
}

}  // namespace

bool has_clique(const Graph& g, int k) {
  if (k <= 0) return true;
  Rows adj = rows_of(g);
  std::uint16_t all = std::uint16_t((1u << g.order()) - 1);
  return clique_in(adj, all, k);
}

bool is_mn_graph(const Graph& g, int m, int n) {
  return !has_clique(g, m) && !has_clique(g.complement(), n);
}

std::int64_t triangle_count(const Graph& g) {
  std::int64_t total = 0;
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j) {
      if (!g.edge(i, j)) continue;
      std::uint16_t common = std::uint16_t(g.row(i) & g.row(j));
      common &= std::uint16_t(~((1u << (j + 1)) - 1));  // k > j only
      total += std::popcount(common);
    }
  return total;
}

std::int64_t triangle_count_at(const Graph& g, int v) {
  std::int64_t total = 0;
  std::uint16_t nb = g.row(v);
  for (int i = 0; i < g.order(); ++i) {
    if (!((nb >> i) & 1)) continue;
    std::uint16_t common = std::uint16_t(nb & g.row(i));
    common &= std::uint16_t(~((1u << (i + 1)) - 1));
    total += std::popcount(common);
  }
  return total;
}

bool goodman_check(const Graph& g) {
  std::int64_t p = g.order();
  std::int64_t both = triangle_count(g) + triangle_count(g.complement());
  std::int64_t degree_sum = 0;
  for (int v = 0; v < p; ++v) {
    std::int64_t d = g.degree(v);
    degree_sum += d * (p - d - 1);
  }
  // Doubled form of the identity keeps everything integral.
  return 2 * both + degree_sum == 2 * (p * (p - 1) * (p - 2) / 6);
}

void for_each_mn_graph(int m, int n, int p,
                       const std::function<bool(const Graph&)>& visit) {
  if (p < 0 || p > kMaxGraphOrder) {
    throw CeilingExceeded("order " + std::to_string(p) +
                          " beyond representable graphs");
  }
  struct Stop {};
  Rows adj{}, comp{};
  std::function<void(int)> dfs = [&](int k) {
    if (k == p) {
      Graph g(p);
      for (int v = 0; v < p; ++v)
        for (int u = 0; u < v; ++u)
          if ((adj[v] >> u) & 1) g.set_edge(u, v, true);
      if (!visit(g)) throw Stop{};
      return;
    }
    std::uint16_t limit = std::uint16_t(1u << k);
    for (std::uint16_t mask = 0;; ++mask) {
      if (!clique_in(adj, mask, m - 1) &&
          !clique_in(comp, std::uint16_t(~mask & (limit - 1)), n - 1)) {
        place_vertex(adj, comp, k, mask);
        dfs(k + 1);
      }
      if (mask == limit - 1) break;
    }
  };
  try {
    dfs(0);
  } catch (const Stop&) {
  }
}

std::optional<std::pair<std::int64_t, std::int64_t>> exact_edge_numbers(
    int m, int n, int p, int ceiling, int threads) {
  if (m < 1 || n < 1 || p < 0) throw RamseyError("bad exact_edge_numbers args");
  if (p > ceiling || p > kMaxGraphOrder) {
    throw CeilingExceeded("order " + std::to_string(p) +
                          " above enumeration ceiling " +
                          std::to_string(std::min<int>(ceiling, kMaxGraphOrder)));
  }
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
  }

  EdgeExtrema total;
  const int split_depth = 5;
  if (threads == 1 || p <= split_depth + 1) {
    Rows adj{}, comp{};
    extrema_dfs(adj, comp, 0, p, m, n, 0, total);
  } else {
    std::vector<Prefix> prefixes;
    {
      Rows adj{}, comp{};
      collect_prefixes(adj, comp, 0, split_depth, m, n, 0, prefixes);
    }
    std::atomic<std::size_t> next{0};
    std::mutex merge_mutex;
    auto worker = [&] {
      EdgeExtrema local;
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= prefixes.size()) break;
        Prefix pre = prefixes[i];
        extrema_dfs(pre.adj, pre.comp, split_depth, p, m, n, pre.edges, local);
      }
      std::lock_guard<std::mutex> lock(merge_mutex);
      total.merge(local);
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  if (!total.found()) return std::nullopt;
  return std::make_pair(total.min_edges, total.max_edges);
}

Graph random_graph(int p, std::mt19937_64& rng) {
  Graph g(p);
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) g.set_edge(i, j, (rng() & 1) != 0);
  return g;
}

}  // namespace ramsey::oracle
