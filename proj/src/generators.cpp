#include "oddcolor/generators.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace oddcolor {

namespace {

std::vector<std::vector<Vertex>> cycle_faces(int n) {
  std::vector<Vertex> fwd, rev;
  for (Vertex v = 1; v <= n; ++v) fwd.push_back(v);
  rev.assign(fwd.rbegin(), fwd.rend());
  return {fwd, rev};
}

Generated cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  auto f = cycle_faces(n);
  PlaneGraph p = PlaneGraph::from_faces(n, f);
  return {p.graph(), p};
}

Generated path(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<std::vector<Vertex>> rot(n + 1);
  for (Vertex v = 1; v < n; ++v) {
    rot[v].push_back(v + 1);
    rot[v + 1].push_back(v);
  }
  PlaneGraph p = PlaneGraph::from_rotation(std::move(rot));
  return {p.graph(), p};
}

Generated complete(int n) {
  if (n < 1) throw std::invalid_argument("complete needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  Graph g = Graph::from_edges(n, edges);
  if (n <= 2) return path(n);
  if (n == 3) return cycle(3);
  if (n == 4) {
    std::vector<std::vector<Vertex>> f{{1, 2, 3}, {1, 3, 4}, {1, 4, 2}, {2, 4, 3}};
    PlaneGraph p = PlaneGraph::from_faces(4, f);
    return {p.graph(), p};
  }
  return {g, std::nullopt};
}

Generated kite() {
  std::vector<std::vector<Vertex>> f{{1, 2, 3}, {1, 3, 4}, {1, 4, 3, 2}};
  PlaneGraph p = PlaneGraph::from_faces(4, f);
  return {p.graph(), p};
}

Generated wheel(int n) {
  if (n < 3) throw std::invalid_argument("wheel needs a rim of at least 3 vertices");
  const Vertex hub = n + 1;
  std::vector<std::vector<Vertex>> f;
  for (Vertex i = 1; i <= n; ++i) f.push_back({hub, i, i % n + 1});
  std::vector<Vertex> rim;
  for (Vertex i = n; i >= 1; --i) rim.push_back(i);
  f.push_back(rim);
  PlaneGraph p = PlaneGraph::from_faces(n + 1, f);
  return {p.graph(), p};
}

Generated icosahedron() {
  auto up = [](int i) { return 2 + ((i % 5) + 5) % 5; };
  auto lo = [](int i) { return 7 + ((i % 5) + 5) % 5; };
  std::vector<std::vector<Vertex>> f;
  for (int i = 0; i < 5; ++i) {
    f.push_back({1, up(i), up(i + 1)});
    f.push_back({up(i), lo(i), up(i + 1)});
    f.push_back({up(i + 1), lo(i), lo(i + 1)});
    f.push_back({12, lo(i + 1), lo(i)});
  }
  PlaneGraph p = PlaneGraph::from_faces(12, f);
  return {p.graph(), p};
}

void check_attachments(const std::vector<BlockAttachment>& attachments) {
  for (std::size_t b = 0; b < attachments.size(); ++b) {
    const auto& a = attachments[b];
    if (a.parent < 0 || a.parent > static_cast<int>(b))
      throw std::invalid_argument("c5-block-tree: block " + std::to_string(b + 1) + " must attach to an earlier block");
    if (a.index < 1 || a.index > 5) throw std::invalid_argument("c5-block-tree: attachment index must be 1..5");
  }
}

Generated c5_block_tree(const std::vector<BlockAttachment>& attachments) {
  check_attachments(attachments);
  // block_vertices[b][i] is the vertex at cyclic position i (0-based) of block b.
  std::vector<std::vector<Vertex>> block_vertices{{1, 2, 3, 4, 5}};
  int next = 5;
  for (std::size_t b = 0; b < attachments.size(); ++b) {
    const auto& a = attachments[b];
    std::vector<Vertex> verts{block_vertices[a.parent][a.index - 1]};
    for (int i = 0; i < 4; ++i) verts.push_back(++next);
    block_vertices.push_back(std::move(verts));
  }
  // Each block's two edges at a vertex stay consecutive in its rotation.
  std::vector<std::vector<Vertex>> rot(next + 1);
  for (const auto& verts : block_vertices)
    for (int i = 0; i < 5; ++i) {
      Vertex v = verts[i];
      rot[v].push_back(verts[(i + 1) % 5]);
      rot[v].push_back(verts[(i + 4) % 5]);
    }
  PlaneGraph p = PlaneGraph::from_rotation(std::move(rot));
  return {p.graph(), p};
}

int parse_int(std::string_view text, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument(std::string(what) + ": expected an integer, got '" + std::string(text) + "'");
  return value;
}

}  // namespace

Generated make(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Cycle: return cycle(spec.n);
    case Family::Path: return path(spec.n);
    case Family::Complete: return complete(spec.n);
    case Family::Kite: return kite();
    case Family::Wheel: return wheel(spec.n);
    case Family::SubdividedComplete: {
      if (spec.n < 2) throw std::invalid_argument("subdivided-complete needs n >= 2");
      Generated base = complete(spec.n);
      if (base.plane) {
        PlaneGraph s = subdivide(*base.plane);
        return {s.graph(), s};
      }
      return {subdivide(base.graph), std::nullopt};
    }
    case Family::C5BlockTree: return c5_block_tree(spec.blocks);
    case Family::Icosahedron: return icosahedron();
  }
  throw std::invalid_argument("unknown family");
}

std::string family_tag(Family f) {
  switch (f) {
    case Family::Cycle: return "cycle";
    case Family::Path: return "path";
    case Family::Complete: return "complete";
    case Family::Kite: return "kite";
    case Family::Wheel: return "wheel";
    case Family::SubdividedComplete: return "subdivided-complete";
    case Family::C5BlockTree: return "c5-block-tree";
    case Family::Icosahedron: return "icosahedron";
  }
  return "?";
}

FamilySpec parse_family(std::string_view tag, std::string_view param) {
  FamilySpec spec;
  auto need_n = [&](Family f) {
    spec.family = f;
    spec.n = parse_int(param, "family parameter");
  };
  if (tag == "cycle") need_n(Family::Cycle);
  else if (tag == "path") need_n(Family::Path);
  else if (tag == "complete") need_n(Family::Complete);
  else if (tag == "wheel") need_n(Family::Wheel);
  else if (tag == "subdivided-complete") need_n(Family::SubdividedComplete);
  else if (tag == "kite") spec.family = Family::Kite;
  else if (tag == "icosahedron") spec.family = Family::Icosahedron;
  else if (tag == "c5-block-tree") {
    spec.family = Family::C5BlockTree;
    std::size_t start = 0;
    while (start < param.size()) {
      std::size_t end = param.find(',', start);
      if (end == std::string_view::npos) end = param.size();
      std::string_view item = param.substr(start, end - start);
      std::size_t colon = item.find(':');
      if (colon == std::string_view::npos)
        throw std::invalid_argument("c5-block-tree parameter items look like parent:index");
      spec.blocks.push_back({parse_int(item.substr(0, colon), "parent"), parse_int(item.substr(colon + 1), "index")});
      start = end + 1;
    }
    check_attachments(spec.blocks);
  } else {
    throw std::invalid_argument("unknown family '" + std::string(tag) + "'");
  }
  return spec;
}

std::vector<FamilySpec> all_c5_block_trees(int blocks) {
  std::vector<FamilySpec> out;
  if (blocks < 1) return out;
  std::vector<BlockAttachment> cur;
  auto rec = [&](auto&& self, int b) -> void {
    if (b == blocks) {
      out.push_back(FamilySpec{Family::C5BlockTree, 0, cur});
      return;
    }
    for (int parent = 0; parent < b; ++parent)
      for (int index = 1; index <= 5; ++index) {
        cur.push_back({parent, index});
        self(self, b + 1);
        cur.pop_back();
      }
  };
  rec(rec, 1);
  return out;
}

Graph subdivide(const Graph& g) {
  const int n = g.order();
  const auto edges = g.edges();
  std::vector<Edge> out;
  Vertex x = n;
  for (auto [u, v] : edges) {
    ++x;
    out.emplace_back(u, x);
    out.emplace_back(x, v);
  }
  return Graph::from_edges(x, out);
}

PlaneGraph subdivide(const PlaneGraph& p) {
  const int n = p.order();
  const auto edges = p.graph().edges();
  std::vector<std::vector<Vertex>> rot(n + edges.size() + 1);
  // Index of the subdivision vertex for each edge, looked up by endpoint pair.
  auto mid = [&](Vertex a, Vertex b) {
    Edge e{std::min(a, b), std::max(a, b)};
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    return n + 1 + static_cast<Vertex>(it - edges.begin());
  };
  for (Vertex v = 1; v <= n; ++v)
    for (Vertex w : p.rotation(v)) rot[v].push_back(mid(v, w));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    Vertex x = n + 1 + static_cast<Vertex>(i);
    rot[x] = {edges[i].first, edges[i].second};
  }
  return PlaneGraph::from_rotation(std::move(rot));
}

}  // namespace oddcolor
