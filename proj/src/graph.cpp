#include "hybridlab/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace hybridlab {

void Graph::add_edge(int u, int v, i64 w) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loop rejected");
  if (w < 1) throw std::invalid_argument("edge weight must be >= 1");
  if (has_edge(u, v)) throw std::invalid_argument("duplicate edge rejected");
  edges_.push_back({u, v, w});
  adj_[u].push_back({v, w});
  adj_[v].push_back({u, w});
}

bool Graph::has_edge(int u, int v) const { return edge_weight(u, v) != kInf; }

i64 Graph::edge_weight(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return kInf;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  int other = adj_[u].size() <= adj_[v].size() ? v : u;
  for (const auto& [to, w] : a)
    if (to == other) return w;
  return kInf;
}

i64 Graph::max_weight() const {
  i64 w = 1;
  for (const Edge& e : edges_) w = std::max(w, e.w);
  return w;
}

std::vector<Edge> Graph::sorted_edges() const {
  std::vector<Edge> es = edges_;
  for (Edge& e : es)
    if (e.u > e.v) std::swap(e.u, e.v);
  std::sort(es.begin(), es.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  return es;
}

DistanceTable shortest_paths(const Graph& g, int s) {
  if (s < 0 || s >= g.n()) throw std::invalid_argument("invalid source node");
  DistanceTable t;
  t.source = s;
  t.dist.assign(g.n(), kInf);
  t.parent.assign(g.n(), -1);
  using Item = std::pair<i64, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  t.dist[s] = 0;
  pq.push({0, s});
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (d != t.dist[v]) continue;
    for (const auto& [to, w] : g.neighbors(v)) {
      if (d + w < t.dist[to]) {
        t.dist[to] = d + w;
        t.parent[to] = v;
        pq.push({t.dist[to], to});
      }
    }
  }
  return t;
}

std::vector<DistanceTable> all_pairs_serial(const Graph& g) {
  std::vector<DistanceTable> out(g.n());
  for (int s = 0; s < g.n(); ++s) out[s] = shortest_paths(g, s);
  return out;
}

std::vector<DistanceTable> all_pairs(const Graph& g) {
  std::vector<DistanceTable> out(g.n());
#pragma omp parallel for schedule(dynamic)
  for (int s = 0; s < g.n(); ++s) out[s] = shortest_paths(g, s);
  return out;
}

HopLimitedTable hop_limited(const Graph& g, int s, int h) {
  if (s < 0 || s >= g.n()) throw std::invalid_argument("invalid source node");
  if (h < 0) throw std::invalid_argument("hop budget must be >= 0");
  // Dijkstra over layered (node, hops-used) states.
  HopLimitedTable t;
  t.source = s;
  t.h = h;
  t.dist_h.assign(g.n(), kInf);
  const int layers = h + 1;
  std::vector<i64> dist(static_cast<size_t>(g.n()) * layers, kInf);
  auto at = [&](int v, int j) -> i64& { return dist[static_cast<size_t>(j) * g.n() + v]; };
  using Item = std::tuple<i64, int, int>;  // (dist, node, hops used)
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  at(s, 0) = 0;
  pq.push({0, s, 0});
  while (!pq.empty()) {
    auto [d, v, j] = pq.top();
    pq.pop();
    if (d != at(v, j)) continue;
    if (j == h) continue;
    for (const auto& [to, w] : g.neighbors(v)) {
      if (d + w < at(to, j + 1)) {
        at(to, j + 1) = d + w;
        pq.push({d + w, to, j + 1});
      }
    }
  }
  for (int v = 0; v < g.n(); ++v)
    for (int j = 0; j < layers; ++j) t.dist_h[v] = std::min(t.dist_h[v], at(v, j));
  return t;
}

std::vector<int> hop_distances(const Graph& g, int s) {
  return hop_distances_multi(g, {s});
}

std::vector<int> hop_distances_multi(const Graph& g, const std::vector<int>& sources) {
  std::vector<int> d(g.n(), -1);
  std::queue<int> q;
  for (int s : sources) {
    if (d[s] == -1) {
      d[s] = 0;
      q.push(s);
    }
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (const auto& [to, w] : g.neighbors(v)) {
      (void)w;
      if (d[to] == -1) {
        d[to] = d[v] + 1;
        q.push(to);
      }
    }
  }
  return d;
}

namespace {

// Shortest cycle through the BFS tree rooted at r: when a non-tree edge joins
// two explored vertices in different subtrees, level(a) + level(b) + 1 bounds
// a cycle; the minimum over all roots is the exact girth.
i64 girth_from_root(const Graph& g, int r) {
  std::vector<int> level(g.n(), -1), parent(g.n(), -1);
  std::queue<int> q;
  level[r] = 0;
  q.push(r);
  i64 best = kInf;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (const auto& [to, w] : g.neighbors(v)) {
      (void)w;
      if (to == parent[v]) continue;
      if (level[to] == -1) {
        level[to] = level[v] + 1;
        parent[to] = v;
        q.push(to);
      } else {
        best = std::min<i64>(best, static_cast<i64>(level[v]) + level[to] + 1);
      }
    }
  }
  return best;
}

}  // namespace

i64 girth_serial(const Graph& g) {
  i64 best = kInf;
  for (int r = 0; r < g.n(); ++r) best = std::min(best, girth_from_root(g, r));
  return best;
}

i64 girth(const Graph& g) {
  i64 best = kInf;
#pragma omp parallel for schedule(dynamic) reduction(min : best)
  for (int r = 0; r < g.n(); ++r) best = std::min(best, girth_from_root(g, r));
  return best;
}

Graph complete_bipartite(int k) {
  if (k < 1) throw std::invalid_argument("complete_bipartite requires k >= 1");
  Graph g(2 * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) g.add_edge(i, k + j, 1);
  return g;
}

Graph bipartite_double_cover(const Graph& g) {
  Graph out(2 * g.n());
  for (const Edge& e : g.edges()) {
    out.add_edge(e.u, g.n() + e.v, e.w);
    out.add_edge(e.v, g.n() + e.u, e.w);
  }
  return out;
}

InducedSubgraph ball(const Graph& g, int v, int h) {
  if (h < 0) throw std::invalid_argument("ball radius must be >= 0");
  std::vector<int> hd = hop_distances(g, v);
  InducedSubgraph out;
  out.graph = Graph(g.n());
  std::vector<char> in(g.n(), 0);
  for (int u = 0; u < g.n(); ++u) {
    if (hd[u] != -1 && hd[u] <= h) {
      in[u] = 1;
      out.nodes.push_back(u);
    }
  }
  for (const Edge& e : g.edges())
    if (in[e.u] && in[e.v]) out.graph.add_edge(e.u, e.v, e.w);
  return out;
}

bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  std::vector<int> d = hop_distances(g, 0);
  for (int v = 0; v < g.n(); ++v)
    if (d[v] == -1) return false;
  return true;
}

bool is_bipartite(const Graph& g, std::vector<int>* coloring) {
  std::vector<int> color(g.n(), -1);
  std::queue<int> q;
  for (int s = 0; s < g.n(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const auto& [to, w] : g.neighbors(v)) {
        (void)w;
        if (color[to] == -1) {
          color[to] = 1 - color[v];
          q.push(to);
        } else if (color[to] == color[v]) {
          return false;
        }
      }
    }
  }
  if (coloring) *coloring = color;
  return true;
}

Graph random_connected_graph(int n, int extra_edges, i64 max_w, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  Rng rng = substream(seed, 0x6772617068ULL);
  Graph g(n);
  // Random spanning tree: attach each node to a random earlier node, over a
  // random permutation of ids.
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
  for (int i = 1; i < n; ++i)
    g.add_edge(perm[i], perm[rng.below(i)], rng.range(1, max_w));
  for (int tries = 0; extra_edges > 0 && tries < 50 * extra_edges; ++tries) {
    int u = static_cast<int>(rng.below(n));
    int v = static_cast<int>(rng.below(n));
    if (u == v || g.has_edge(u, v)) continue;
    g.add_edge(u, v, rng.range(1, max_w));
    --extra_edges;
  }
  return g;
}

}  // namespace hybridlab
