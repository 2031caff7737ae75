#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oddcolor {

/// Vertex ids are dense and 1-based; 0 is used as "no vertex" in relabel maps.
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 1..n with sorted adjacency lists.
///
/// Values are immutable once built; every surgery helper below returns a new
/// graph together with a map from old to new vertex ids.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(n) + 1) {}

  /// Builds a graph from an edge list. Duplicate edges are dropped; loops and
  /// out-of-range endpoints throw GraphError.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const { return adj_.empty() ? 0 : static_cast<int>(adj_.size()) - 1; }
  std::size_t size() const { return edge_count_; }

  bool contains(Vertex v) const { return v >= 1 && v <= order(); }
  const std::vector<Vertex>& neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(Vertex u, Vertex v) const;

  int min_degree() const;
  int max_degree() const;
  std::vector<Edge> edges() const;
  std::vector<Vertex> common_neighbors(Vertex u, Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

inline Graph build_graph(int n, std::span<const Edge> edges) { return Graph::from_edges(n, edges); }
inline int degree(const Graph& g, Vertex v) { return g.degree(v); }

/// Result of a vertex-removing or vertex-merging operation.
/// relabel[old] is the new id of `old`, or 0 when the vertex was removed.
struct Surgery {
  Graph graph;
  std::vector<Vertex> relabel;
};

struct Block {
  std::vector<Vertex> vertices;  // sorted
  std::vector<Edge> edges;       // (u < v)
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  std::vector<Vertex> cut_vertices;  // sorted
};

BlockDecomposition blocks(const Graph& g);

/// Shortest cycle length; std::nullopt stands for infinity (forests).
std::optional<int> girth(const Graph& g);

Surgery delete_vertices(const Graph& g, std::span<const Vertex> removed);

/// Merges non-adjacent u and w; the merged vertex takes the smaller of the
/// two new positions and the union of both neighborhoods.
Surgery identify_vertices(const Graph& g, Vertex u, Vertex w);

/// Contracts edge uw, keeping a single copy of any parallel edges.
Surgery contract_edge(const Graph& g, Vertex u, Vertex w);

/// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<Vertex>> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

/// Re-scans adjacency for simplicity and symmetry. Used by tests after surgery.
bool check_simple(const Graph& g);

}  // namespace oddcolor
