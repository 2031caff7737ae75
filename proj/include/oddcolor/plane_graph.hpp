#pragma once

#include <optional>
#include <span>
#include <vector>

#include "oddcolor/graph.hpp"

namespace oddcolor {

/// A graph together with a rotation system: for every vertex the cyclic order
/// of its neighbors. Faces are traced by following a dart (u,v) to
/// (v, successor of u in the rotation at v).
class PlaneGraph {
 public:
  PlaneGraph() = default;

  /// rotation[v] (1-based, rotation[0] ignored) must be a permutation of the
  /// neighbors of v with matching entries at both ends of every edge.
  static PlaneGraph from_rotation(std::vector<std::vector<Vertex>> rotation);

  /// Builds the rotation system from consistently oriented facial walks: each
  /// dart (a,b) must occur in exactly one face, and the faces around every
  /// vertex must close into a single cycle.
  static PlaneGraph from_faces(int n, std::span<const std::vector<Vertex>> faces);

  const Graph& graph() const { return graph_; }
  int order() const { return graph_.order(); }
  std::size_t size() const { return graph_.size(); }
  const std::vector<Vertex>& rotation(Vertex v) const;
  const std::vector<std::vector<Vertex>>& rotations() const { return rotation_; }

  /// Neighbor following u in the rotation at v (u must be adjacent to v).
  Vertex successor(Vertex v, Vertex u) const;
  Vertex predecessor(Vertex v, Vertex u) const;

  friend bool operator==(const PlaneGraph&, const PlaneGraph&) = default;

 private:
  Graph graph_;
  std::vector<std::vector<Vertex>> rotation_;
};

struct Face {
  int id = 0;
  std::vector<Vertex> walk;  // cyclic vertex sequence, repeated for cut vertices
  int degree() const { return static_cast<int>(walk.size()); }
};

/// All facial walks of an embedding plus a dart -> face lookup.
class FaceSet {
 public:
  FaceSet() = default;
  explicit FaceSet(const PlaneGraph& p);

  const std::vector<Face>& faces() const { return faces_; }
  std::size_t count() const { return faces_.size(); }
  const Face& operator[](int id) const { return faces_.at(static_cast<std::size_t>(id)); }
  /// The face that traverses dart u -> v.
  int face_of(Vertex u, Vertex v) const;

 private:
  std::vector<std::vector<Vertex>> rotation_;
  std::vector<Face> faces_;
  std::vector<std::vector<int>> dart_face_;  // parallel to rotation
};

std::vector<Face> faces(const PlaneGraph& p);

/// True iff |V| - |E| + |F| = 2. Throws GraphError for disconnected input.
bool check_euler(const PlaneGraph& p);

struct PlaneSurgery {
  PlaneGraph plane;
  std::vector<Vertex> relabel;  // old -> new, 0 for removed
};

PlaneSurgery delete_vertex_embedded(const PlaneGraph& p, Vertex v);
PlaneSurgery delete_vertices_embedded(const PlaneGraph& p, std::span<const Vertex> removed);

/// Identifies non-adjacent u and w inside a face they share. With `across`
/// set, the splice uses the first corner of `across` (in its rotation) that
/// lies between u and w; otherwise, or if no such corner exists, the first
/// face containing both. Parallel edges created by the merge are collapsed.
PlaneSurgery identify_embedded(const PlaneGraph& p, Vertex u, Vertex w,
                               std::optional<Vertex> across = std::nullopt);

/// Contracts edge vw into w, splicing v's rotation into w's at the position
/// of v and keeping a single copy of parallel edges.
PlaneSurgery contract_edge_embedded(const PlaneGraph& p, Vertex v, Vertex w);

/// Removes a 2-vertex v with neighbors x, y and joins x to y along the path
/// x-v-y when they are not yet adjacent.
PlaneSurgery bridge_degree2_embedded(const PlaneGraph& p, Vertex v);

/// Faces incident to v, in rotation order of v (one entry per corner).
std::vector<Face> faces_around(const PlaneGraph& p, Vertex v);

/// Restriction of the embedding to one connected component (sorted ids).
PlaneSurgery component_embedded(const PlaneGraph& p, std::span<const Vertex> component);

}  // namespace oddcolor
