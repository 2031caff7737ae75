#include "oddcolor/plane_graph.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace oddcolor {

namespace {

std::size_t index_in(const std::vector<Vertex>& list, Vertex x) {
  auto it = std::find(list.begin(), list.end(), x);
  if (it == list.end()) throw GraphError("vertex " + std::to_string(x) + " missing from rotation");
  return static_cast<std::size_t>(it - list.begin());
}

}  // namespace

PlaneGraph PlaneGraph::from_rotation(std::vector<std::vector<Vertex>> rotation) {
  if (rotation.empty()) rotation.resize(1);
  const int n = static_cast<int>(rotation.size()) - 1;
  rotation[0].clear();
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= n; ++v) {
    auto sorted = rotation[v];
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw GraphError("rotation at " + std::to_string(v) + " repeats a neighbor");
    for (Vertex w : rotation[v]) {
      if (w < 1 || w > n) throw GraphError("rotation at " + std::to_string(v) + " names unknown vertex");
      if (w == v) throw GraphError("rotation at " + std::to_string(v) + " contains a loop");
      if (v < w) edges.emplace_back(v, w);
    }
  }
  PlaneGraph p;
  p.graph_ = Graph::from_edges(n, edges);
  // Every listed pair became an edge, so a one-sided entry shows up as a
  // rotation shorter than the degree.
  for (Vertex v = 1; v <= n; ++v)
    if (static_cast<int>(rotation[v].size()) != p.graph_.degree(v))
      throw GraphError("rotation inconsistency at vertex " + std::to_string(v) +
                       ": a neighbor lists it but it does not list the neighbor");
  p.rotation_ = std::move(rotation);
  return p;
}

PlaneGraph PlaneGraph::from_faces(int n, std::span<const std::vector<Vertex>> face_walks) {
  // For a face walk (.., a, b, c, ..) the corner at b sends a to c.
  std::vector<std::map<Vertex, Vertex>> succ(static_cast<std::size_t>(n) + 1);
  for (const auto& walk : face_walks) {
    const std::size_t len = walk.size();
    for (std::size_t i = 0; i < len; ++i) {
      Vertex a = walk[(i + len - 1) % len], b = walk[i], c = walk[(i + 1) % len];
      if (b < 1 || b > n) throw GraphError("face names unknown vertex");
      if (!succ[b].emplace(a, c).second) throw GraphError("dart used by two faces");
    }
  }
  std::vector<std::vector<Vertex>> rotation(static_cast<std::size_t>(n) + 1);
  for (Vertex v = 1; v <= n; ++v) {
    if (succ[v].empty()) continue;
    Vertex start = succ[v].begin()->first, cur = start;
    do {
      rotation[v].push_back(cur);
      auto it = succ[v].find(cur);
      if (it == succ[v].end()) throw GraphError("faces around vertex do not close");
      cur = it->second;
    } while (cur != start && rotation[v].size() <= succ[v].size());
    if (rotation[v].size() != succ[v].size())
      throw GraphError("faces around vertex " + std::to_string(v) + " do not form a single cycle");
  }
  return from_rotation(std::move(rotation));
}

const std::vector<Vertex>& PlaneGraph::rotation(Vertex v) const {
  if (!graph_.contains(v)) throw GraphError("unknown vertex " + std::to_string(v));
  return rotation_[v];
}

Vertex PlaneGraph::successor(Vertex v, Vertex u) const {
  const auto& r = rotation(v);
  return r[(index_in(r, u) + 1) % r.size()];
}

Vertex PlaneGraph::predecessor(Vertex v, Vertex u) const {
  const auto& r = rotation(v);
  return r[(index_in(r, u) + r.size() - 1) % r.size()];
}

FaceSet::FaceSet(const PlaneGraph& p) : rotation_(p.rotations()) {
  const int n = p.order();
  // back[u][i]: position of u in the rotation of rotation_[u][i].
  std::vector<std::vector<std::size_t>> back(n + 1);
  {
    std::vector<std::vector<std::pair<Vertex, std::size_t>>> pos(n + 1);
    for (Vertex v = 1; v <= n; ++v) {
      for (std::size_t i = 0; i < rotation_[v].size(); ++i) pos[v].emplace_back(rotation_[v][i], i);
      std::sort(pos[v].begin(), pos[v].end());
    }
    for (Vertex u = 1; u <= n; ++u) {
      back[u].resize(rotation_[u].size());
      for (std::size_t i = 0; i < rotation_[u].size(); ++i) {
        const auto& pw = pos[rotation_[u][i]];
        auto it = std::lower_bound(pw.begin(), pw.end(), std::pair<Vertex, std::size_t>{u, 0});
        back[u][i] = it->second;
      }
    }
  }
  dart_face_.resize(n + 1);
  for (Vertex v = 1; v <= n; ++v) dart_face_[v].assign(rotation_[v].size(), -1);

  for (Vertex u0 = 1; u0 <= n; ++u0) {
    for (std::size_t i0 = 0; i0 < rotation_[u0].size(); ++i0) {
      if (dart_face_[u0][i0] >= 0) continue;
      Face f;
      f.id = static_cast<int>(faces_.size());
      Vertex u = u0;
      std::size_t i = i0;
      while (dart_face_[u][i] < 0) {
        dart_face_[u][i] = f.id;
        f.walk.push_back(u);
        Vertex w = rotation_[u][i];
        std::size_t j = (back[u][i] + 1) % rotation_[w].size();
        u = w;
        i = j;
      }
      faces_.push_back(std::move(f));
    }
  }
  if (faces_.empty() && n >= 1) faces_.push_back(Face{0, {}});
}

int FaceSet::face_of(Vertex u, Vertex v) const {
  if (u < 1 || u >= static_cast<int>(rotation_.size())) throw GraphError("unknown vertex " + std::to_string(u));
  return dart_face_[u][index_in(rotation_[u], v)];
}

std::vector<Face> faces(const PlaneGraph& p) { return FaceSet(p).faces(); }

bool check_euler(const PlaneGraph& p) {
  if (p.order() == 0 || !is_connected(p.graph())) throw GraphError("check_euler: graph is disconnected");
  const long v = p.order(), e = static_cast<long>(p.size()), f = static_cast<long>(FaceSet(p).count());
  return v - e + f == 2;
}

PlaneSurgery delete_vertices_embedded(const PlaneGraph& p, std::span<const Vertex> removed) {
  const int n = p.order();
  std::vector<char> gone(n + 1, 0);
  for (Vertex v : removed) {
    if (!p.graph().contains(v)) throw GraphError("unknown vertex " + std::to_string(v));
    gone[v] = 1;
  }
  std::vector<Vertex> relabel(n + 1, 0);
  int next = 0;
  for (Vertex v = 1; v <= n; ++v)
    if (!gone[v]) relabel[v] = ++next;
  std::vector<std::vector<Vertex>> rot(next + 1);
  for (Vertex v = 1; v <= n; ++v) {
    if (gone[v]) continue;
    for (Vertex w : p.rotation(v))
      if (!gone[w]) rot[relabel[v]].push_back(relabel[w]);
  }
  return {PlaneGraph::from_rotation(std::move(rot)), std::move(relabel)};
}

PlaneSurgery delete_vertex_embedded(const PlaneGraph& p, Vertex v) {
  const Vertex one[] = {v};
  return delete_vertices_embedded(p, one);
}

PlaneSurgery component_embedded(const PlaneGraph& p, std::span<const Vertex> component) {
  std::vector<char> keep(p.order() + 1, 0);
  for (Vertex v : component) keep[v] = 1;
  std::vector<Vertex> removed;
  for (Vertex v = 1; v <= p.order(); ++v)
    if (!keep[v]) removed.push_back(v);
  return delete_vertices_embedded(p, removed);
}

namespace {

// Rotation of v read cyclically starting at `first`.
std::vector<Vertex> rotated_from(const PlaneGraph& p, Vertex v, Vertex first) {
  const auto& r = p.rotation(v);
  std::size_t s = index_in(r, first);
  std::vector<Vertex> out;
  out.reserve(r.size());
  for (std::size_t k = 0; k < r.size(); ++k) out.push_back(r[(s + k) % r.size()]);
  return out;
}

// Renames `gone` to `into` everywhere and renumbers densely; merged_rotation
// becomes the rotation of `into`. Entries naming `dropped_neighbor` are
// removed from the rotations of the vertices in drop_at.
PlaneSurgery merge_into(const PlaneGraph& p, Vertex gone, Vertex into, std::vector<Vertex> merged_rotation,
                        const std::vector<Vertex>& drop_at, Vertex dropped_neighbor) {
  const int n = p.order();
  std::vector<Vertex> relabel(n + 1, 0);
  int next = 0;
  for (Vertex v = 1; v <= n; ++v)
    if (v != gone) relabel[v] = ++next;
  relabel[gone] = relabel[into];

  std::vector<std::vector<Vertex>> rot(next + 1);
  for (Vertex v = 1; v <= n; ++v) {
    if (v == gone) continue;
    const std::vector<Vertex>& src = v == into ? merged_rotation : p.rotation(v);
    const bool drop_here = std::find(drop_at.begin(), drop_at.end(), v) != drop_at.end();
    for (Vertex w : src) {
      if (drop_here && w == dropped_neighbor) continue;
      rot[relabel[v]].push_back(relabel[w]);
    }
  }
  return {PlaneGraph::from_rotation(std::move(rot)), std::move(relabel)};
}

}  // namespace

PlaneSurgery identify_embedded(const PlaneGraph& p, Vertex u, Vertex w, std::optional<Vertex> across) {
  const Graph& g = p.graph();
  if (!g.contains(u) || !g.contains(w)) throw GraphError("identify_embedded: unknown vertex");
  if (u == w) throw GraphError("identify_embedded: identical vertices");
  if (g.adjacent(u, w)) throw GraphError("identify_embedded: vertices are adjacent");

  // Corner at u is (x -> u -> q), corner at w is (r -> w -> s).
  std::optional<Vertex> x, q, r, s;
  if (across && g.contains(*across) && g.adjacent(u, *across) && g.adjacent(w, *across)) {
    const auto& ra = p.rotation(*across);
    for (std::size_t i = 0; i < ra.size() && !x; ++i) {
      Vertex a = ra[i], b = ra[(i + 1) % ra.size()];
      if (!((a == u && b == w) || (a == w && b == u))) continue;
      // The face walk passes a -> across -> b.
      if (a == u) {
        q = *across;
        x = p.predecessor(u, *across);
        r = *across;
        s = p.successor(w, *across);
      } else {
        r = p.predecessor(w, *across);
        s = *across;
        x = *across;
        q = p.successor(u, *across);
      }
    }
  }
  if (!x) {
    FaceSet fs(p);
    for (const Face& f : fs.faces()) {
      const auto& walk = f.walk;
      auto iu = std::find(walk.begin(), walk.end(), u);
      auto iw = std::find(walk.begin(), walk.end(), w);
      if (iu == walk.end() || iw == walk.end()) continue;
      const std::size_t len = walk.size();
      std::size_t pu = static_cast<std::size_t>(iu - walk.begin());
      std::size_t pw = static_cast<std::size_t>(iw - walk.begin());
      x = walk[(pu + len - 1) % len];
      q = walk[(pu + 1) % len];
      r = walk[(pw + len - 1) % len];
      s = walk[(pw + 1) % len];
      break;
    }
  }
  if (!x) throw GraphError("identify_embedded: no common face for the splice");

  // Merged rotation: u's neighbors from q around to x, then w's from s to r.
  std::vector<Vertex> merged;
  const auto common = g.common_neighbors(u, w);
  auto is_common = [&](Vertex z) { return std::binary_search(common.begin(), common.end(), z); };
  if (g.degree(u) > 0)
    for (Vertex z : rotated_from(p, u, *q))
      if (!is_common(z)) merged.push_back(z);
  if (g.degree(w) > 0)
    for (Vertex z : rotated_from(p, w, *s)) merged.push_back(z);

  // The merged vertex keeps the smaller slot; u's copies of common edges go.
  return merge_into(p, std::max(u, w), std::min(u, w), std::move(merged), common, u);
}

PlaneSurgery contract_edge_embedded(const PlaneGraph& p, Vertex v, Vertex w) {
  const Graph& g = p.graph();
  if (!g.contains(v) || !g.contains(w)) throw GraphError("contract_edge_embedded: unknown vertex");
  if (!g.adjacent(v, w)) throw GraphError("contract_edge_embedded: vertices are not adjacent");
  const auto common = g.common_neighbors(v, w);
  auto is_common = [&](Vertex z) { return std::binary_search(common.begin(), common.end(), z); };

  std::vector<Vertex> spliced;
  for (Vertex z : rotated_from(p, v, w))
    if (z != w && !is_common(z)) spliced.push_back(z);
  std::vector<Vertex> merged;
  for (Vertex z : p.rotation(w)) {
    if (z == v)
      merged.insert(merged.end(), spliced.begin(), spliced.end());
    else
      merged.push_back(z);
  }
  return merge_into(p, v, w, std::move(merged), common, v);
}

PlaneSurgery bridge_degree2_embedded(const PlaneGraph& p, Vertex v) {
  const Graph& g = p.graph();
  if (!g.contains(v) || g.degree(v) != 2) throw GraphError("bridge_degree2_embedded: vertex must have degree 2");
  Vertex x = p.rotation(v)[0], y = p.rotation(v)[1];
  if (g.adjacent(x, y)) return delete_vertex_embedded(p, v);
  auto rot = p.rotations();
  std::replace(rot[x].begin(), rot[x].end(), v, y);
  std::replace(rot[y].begin(), rot[y].end(), v, x);
  rot[v].clear();
  auto joined = PlaneGraph::from_rotation(std::move(rot));
  return delete_vertex_embedded(joined, v);
}

std::vector<Face> faces_around(const PlaneGraph& p, Vertex v) {
  FaceSet fs(p);
  std::vector<Face> out;
  if (p.graph().degree(v) == 0) {
    if (fs.count() > 0) out.push_back(fs[0]);
    return out;
  }
  for (Vertex w : p.rotation(v)) out.push_back(fs[fs.face_of(v, w)]);
  return out;
}

}  // namespace oddcolor
