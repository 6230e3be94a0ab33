#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "hybridlab/rng.hpp"

namespace hybridlab {

using i64 = std::int64_t;

// Distance / hop sentinel. Never add to kInf without checking; use add_dist.
inline constexpr i64 kInf = std::numeric_limits<i64>::max();

inline i64 add_dist(i64 a, i64 b) { return (a == kInf || b == kInf) ? kInf : a + b; }

struct Edge {
  int u;
  int v;
  i64 w;
};

// Simple weighted undirected graph with dense node ids [0, n).
// No self-loops, at most one edge per pair, weights >= 1.
class Graph {
 public:
  Graph() : n_(0) {}
  explicit Graph(int n) : n_(n), adj_(n) {}

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::pair<int, i64>>& neighbors(int v) const { return adj_[v]; }

  void add_edge(int u, int v, i64 w);
  bool has_edge(int u, int v) const;
  i64 edge_weight(int u, int v) const;  // kInf when absent
  i64 max_weight() const;               // 1 for edgeless graphs

  // Canonical ordering: edges sorted by (min endpoint, max endpoint).
  std::vector<Edge> sorted_edges() const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, i64>>> adj_;
};

struct DistanceTable {
  int source = 0;
  std::vector<i64> dist;   // kInf when unreachable
  std::vector<int> parent; // -1 at source / unreachable
};

struct HopLimitedTable {
  int source = 0;
  int h = 0;
  std::vector<i64> dist_h;  // min weight over paths with <= h edges; kInf when none
};

struct InducedSubgraph {
  std::vector<int> nodes;  // ids preserved, sorted ascending
  Graph graph;             // same node count as parent, induced edges only
};

DistanceTable shortest_paths(const Graph& g, int s);

// Ground-truth all-pairs kernels. all_pairs runs the per-source Dijkstra loop
// with OpenMP when available; all_pairs_serial is the plain reference.
std::vector<DistanceTable> all_pairs(const Graph& g);
std::vector<DistanceTable> all_pairs_serial(const Graph& g);

HopLimitedTable hop_limited(const Graph& g, int s, int h);

// Hop distances (unweighted BFS) from s.
std::vector<int> hop_distances(const Graph& g, int s);
std::vector<int> hop_distances_multi(const Graph& g, const std::vector<int>& sources);

// Edge count of the shortest cycle; kInf for forests. girth is the OpenMP
// kernel, girth_serial the reference.
i64 girth(const Graph& g);
i64 girth_serial(const Graph& g);

Graph complete_bipartite(int k);
Graph bipartite_double_cover(const Graph& g);

InducedSubgraph ball(const Graph& g, int v, int h);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g, std::vector<int>* coloring = nullptr);

// Random connected graph: spanning tree plus extra random edges, weights
// uniform in [1, max_w]. Deterministic under seed.
Graph random_connected_graph(int n, int extra_edges, i64 max_w, std::uint64_t seed);

}  // namespace hybridlab
