#include "oddcolor/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

namespace oddcolor {

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw GraphError("negative vertex count");
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range 1.." +
                       std::to_string(n));
    }
    if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  std::size_t twice = 0;
  for (auto& list : g.adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    twice += list.size();
  }
  g.edge_count_ = twice / 2;
  return g;
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  if (!contains(v)) throw GraphError("unknown vertex " + std::to_string(v));
  return adj_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nu = neighbors(u);
  return std::binary_search(nu.begin(), nu.end(), v);
}

int Graph::min_degree() const {
  int best = std::numeric_limits<int>::max();
  for (Vertex v = 1; v <= order(); ++v) best = std::min(best, degree(v));
  return order() == 0 ? 0 : best;
}

int Graph::max_degree() const {
  int best = 0;
  for (Vertex v = 1; v <= order(); ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 1; u <= order(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<Vertex> Graph::common_neighbors(Vertex u, Vertex v) const {
  const auto& a = neighbors(u);
  const auto& b = neighbors(v);
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

BlockDecomposition blocks(const Graph& g) {
  // Iterative Hopcroft-Tarjan with an edge stack.
  const int n = g.order();
  BlockDecomposition out;
  std::vector<int> disc(n + 1, 0), low(n + 1, 0);
  std::vector<int> block_count(n + 1, 0);
  std::vector<Edge> edge_stack;
  int timer = 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };

  for (Vertex root = 1; root <= n; ++root) {
    if (disc[root] != 0) continue;
    if (g.degree(root) == 0) {
      disc[root] = ++timer;
      out.blocks.push_back(Block{{root}, {}});
      block_count[root] = 1;
      continue;
    }
    std::vector<Frame> stack{{root, 0, 0}};
    disc[root] = low[root] = ++timer;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        Vertex w = nbrs[f.next++];
        if (w == f.parent) continue;
        if (disc[w] == 0) {
          edge_stack.emplace_back(f.v, w);
          disc[w] = low[w] = ++timer;
          stack.push_back({w, f.v, 0});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Vertex v = f.v;
      Vertex parent = f.parent;
      stack.pop_back();
      if (parent == 0) continue;
      low[parent] = std::min(low[parent], low[v]);
      if (low[v] >= disc[parent]) {
        Block b;
        while (true) {
          Edge e = edge_stack.back();
          edge_stack.pop_back();
          b.edges.emplace_back(std::min(e.first, e.second), std::max(e.first, e.second));
          b.vertices.push_back(e.first);
          b.vertices.push_back(e.second);
          if (e == Edge{parent, v}) break;
        }
        std::sort(b.vertices.begin(), b.vertices.end());
        b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
        std::sort(b.edges.begin(), b.edges.end());
        for (Vertex x : b.vertices) ++block_count[x];
        out.blocks.push_back(std::move(b));
      }
    }
  }
  for (Vertex v = 1; v <= n; ++v)
    if (block_count[v] >= 2) out.cut_vertices.push_back(v);
  return out;
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(n + 1), parent(n + 1);
  for (Vertex root = 1; root <= n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = 0;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      if (2 * dist[u] + 1 >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

namespace {

void require_vertex(const Graph& g, Vertex v) {
  if (!g.contains(v)) throw GraphError("unknown vertex " + std::to_string(v));
}

// Rebuilds a graph from an old->new relabel map, mapping every surviving edge.
Graph rebuild(const Graph& g, const std::vector<Vertex>& relabel, int new_n) {
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (auto [u, v] : g.edges()) {
    Vertex a = relabel[u], b = relabel[v];
    if (a != 0 && b != 0 && a != b) edges.emplace_back(a, b);
  }
  return Graph::from_edges(new_n, edges);
}

}  // namespace

Surgery delete_vertices(const Graph& g, std::span<const Vertex> removed) {
  std::vector<char> gone(g.order() + 1, 0);
  for (Vertex v : removed) {
    require_vertex(g, v);
    gone[v] = 1;
  }
  std::vector<Vertex> relabel(g.order() + 1, 0);
  int next = 0;
  for (Vertex v = 1; v <= g.order(); ++v)
    if (!gone[v]) relabel[v] = ++next;
  return {rebuild(g, relabel, next), std::move(relabel)};
}

namespace {

Surgery merge_pair(const Graph& g, Vertex u, Vertex w) {
  Vertex keep = std::min(u, w), drop = std::max(u, w);
  std::vector<Vertex> relabel(g.order() + 1, 0);
  int next = 0;
  for (Vertex v = 1; v <= g.order(); ++v)
    if (v != drop) relabel[v] = ++next;
  relabel[drop] = relabel[keep];
  return {rebuild(g, relabel, next), std::move(relabel)};
}

}  // namespace

Surgery identify_vertices(const Graph& g, Vertex u, Vertex w) {
  require_vertex(g, u);
  require_vertex(g, w);
  if (u == w) throw GraphError("cannot identify a vertex with itself");
  if (g.adjacent(u, w)) throw GraphError("cannot identify adjacent vertices");
  return merge_pair(g, u, w);
}

Surgery contract_edge(const Graph& g, Vertex u, Vertex w) {
  require_vertex(g, u);
  require_vertex(g, w);
  if (!g.adjacent(u, w)) throw GraphError("contract_edge: vertices are not adjacent");
  return merge_pair(g, u, w);
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(g.order() + 1, 0);
  for (Vertex root = 1; root <= g.order(); ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> comp{root};
    seen[root] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex w : g.neighbors(comp[i]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order() + 1, -1);
  for (Vertex root = 1; root <= g.order(); ++root) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u)) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          q.push(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool check_simple(const Graph& g) {
  std::size_t twice = 0;
  for (Vertex v = 1; v <= g.order(); ++v) {
    const auto& nv = g.neighbors(v);
    twice += nv.size();
    for (std::size_t i = 0; i < nv.size(); ++i) {
      if (nv[i] == v || !g.contains(nv[i])) return false;
      if (i > 0 && nv[i - 1] >= nv[i]) return false;
      if (!g.adjacent(nv[i], v)) return false;
    }
  }
  return twice == 2 * g.size();
}

}  // namespace oddcolor
