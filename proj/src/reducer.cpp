#include "oddcolor/reducer.hpp"

#include <algorithm>
#include <sstream>

#include "oddcolor/formats.hpp"
#include "oddcolor/solver.hpp"

namespace oddcolor {

std::string to_string(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::DeleteOdd13: return "DeleteOdd13";
    case ReductionKind::Degree2Bridge: return "Degree2Bridge";
    case ReductionKind::Degree4Contract: return "Degree4Contract";
    case ReductionKind::FiveVertexTwoOddNbrs: return "FiveVertexTwoOddNbrs";
    case ReductionKind::C7Contract: return "C7Contract";
    case ReductionKind::C11Quad: return "C11Quad";
  }
  return "?";
}

namespace {

bool same_set(std::vector<Vertex> a, std::vector<Vertex> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

// Neighbor w of the 4-vertex v whose contraction collapses the fewest
// parallel edges; ties go to the smallest id.
Vertex contraction_partner(const Graph& g, Vertex v) {
  Vertex best = 0;
  std::size_t best_common = 0;
  for (Vertex w : g.neighbors(v)) {
    std::size_t common = g.common_neighbors(v, w).size();
    if (best == 0 || common < best_common || (common == best_common && w < best)) {
      best = w;
      best_common = common;
    }
  }
  return best;
}

void add_quad_sites(const PlaneGraph& p, const FaceSet& fs, Vertex v, std::vector<Reduction>& out) {
  const Graph& g = p.graph();
  const auto& rot = p.rotation(v);
  for (std::size_t i = 0; i < rot.size(); ++i) {
    Vertex x = rot[i], y = rot[(i + 1) % rot.size()];
    if (!g.adjacent(x, y) || g.degree(x) != 6 || g.degree(y) != 6) continue;
    if (g.common_neighbors(x, y) != std::vector<Vertex>{v}) continue;
    // The face on the side of xy away from v.
    const Face* far = nullptr;
    for (int id : {fs.face_of(x, y), fs.face_of(y, x)}) {
      const Face& f = fs[id];
      if (std::find(f.walk.begin(), f.walk.end(), v) == f.walk.end()) far = &f;
    }
    if (far == nullptr || far->degree() != 4) continue;
    // Rotate the quad walk to start with the edge {x, y}: walk = [s, t, P, Q].
    std::vector<Vertex> w = far->walk;
    auto sx = std::find(w.begin(), w.end(), x) - w.begin();
    auto sy = std::find(w.begin(), w.end(), y) - w.begin();
    std::size_t s = ((sx + 1) % 4 == sy) ? static_cast<std::size_t>(sx) : static_cast<std::size_t>(sy);
    std::rotate(w.begin(), w.begin() + static_cast<long>(s), w.end());
    Vertex s0 = w[0], t0 = w[1], pv = w[2], qv = w[3];
    if (pv == qv || pv == v || qv == v || pv == s0 || pv == t0 || qv == s0 || qv == t0) continue;
    // Quad s0 t0 pv qv: two labelings put the 6-vertices at C, D.
    struct Labels {
      Vertex a, b, c, d;
    };
    for (Labels l : {Labels{qv, pv, t0, s0}, Labels{pv, qv, s0, t0}}) {
      if (g.degree(l.a) != 5 || g.degree(l.b) != 5) continue;
      if (g.adjacent(l.b, l.d)) continue;
      if (!same_set(g.common_neighbors(l.b, l.d), {l.a, l.c})) continue;
      out.push_back({ReductionKind::C11Quad, {v, l.a, l.b, l.c, l.d}});
      break;
    }
  }
}

}  // namespace

std::vector<Reduction> candidate_reductions(const PlaneGraph& p) {
  const Graph& g = p.graph();
  const int n = g.order();
  std::vector<Reduction> out;
  for (Vertex v = 1; v <= n; ++v)
    if (g.degree(v) == 1 || g.degree(v) == 3) out.push_back({ReductionKind::DeleteOdd13, {v}});
  for (Vertex v = 1; v <= n; ++v)
    if (g.degree(v) == 2) out.push_back({ReductionKind::Degree2Bridge, {v, p.rotation(v)[0], p.rotation(v)[1]}});
  for (Vertex v = 1; v <= n; ++v)
    if (g.degree(v) == 4) out.push_back({ReductionKind::Degree4Contract, {v, contraction_partner(g, v)}});
  for (Vertex v = 1; v <= n; ++v) {
    if (g.degree(v) != 5) continue;
    std::vector<Vertex> odd;
    for (Vertex u : g.neighbors(v))
      if (g.degree(u) % 2 == 1) odd.push_back(u);
    if (odd.size() >= 2) out.push_back({ReductionKind::FiveVertexTwoOddNbrs, {v, odd[0], odd[1]}});
  }
  for (Vertex v = 1; v <= n; ++v) {
    if (g.degree(v) != 5) continue;
    const auto& r = p.rotation(v);
    for (std::size_t j = 0; j < 5; ++j) {
      Vertex a = r[j], b = r[(j + 1) % 5], c = r[(j + 2) % 5];
      if (g.adjacent(a, c)) continue;
      if (!same_set(g.common_neighbors(a, c), {v, b})) continue;
      out.push_back({ReductionKind::C7Contract, {v, a, b, c}});
    }
  }
  bool any_five = false;
  for (Vertex v = 1; v <= n && !any_five; ++v) any_five = g.degree(v) == 5;
  if (any_five) {
    FaceSet fs(p);
    for (Vertex v = 1; v <= n; ++v)
      if (g.degree(v) == 5) add_quad_sites(p, fs, v, out);
  }
  return out;
}

std::optional<Reduction> find_reduction(const PlaneGraph& p) {
  auto all = candidate_reductions(p);
  if (all.empty()) return std::nullopt;
  return all.front();
}

namespace {

std::vector<Vertex> compose(const std::vector<Vertex>& first, const std::vector<Vertex>& second) {
  std::vector<Vertex> out(first.size(), 0);
  for (std::size_t i = 0; i < first.size(); ++i)
    if (first[i] != 0) out[i] = second[static_cast<std::size_t>(first[i])];
  return out;
}

// Colors the reduced graph and pulls the colors back; vertices mapped to 0
// or listed in `skip` stay uncolored.
Coloring pull_back(const PlaneGraph& original, const PlaneGraph& reduced, const std::vector<Vertex>& relabel,
                   const Colorer& colorer, std::initializer_list<Vertex> skip = {}) {
  Coloring reduced_coloring = colorer(reduced);
  if (reduced_coloring.order() != reduced.order() || !reduced_coloring.total() ||
      reduced_coloring.palette() > kNicePalette || !is_odd_coloring(reduced.graph(), reduced_coloring).verdict)
    throw std::logic_error("reducer: recursive colorer returned an invalid coloring");
  Coloring c(original.order(), kNicePalette);
  for (Vertex x = 1; x <= original.order(); ++x) {
    if (relabel[x] == 0 || std::find(skip.begin(), skip.end(), x) != skip.end()) continue;
    c.assign(x, reduced_coloring[relabel[x]]);
  }
  return c;
}

bool assign_smallest_allowed(const Graph& g, Coloring& c, Vertex v) {
  ColorSet allowed = ColorSet::palette(kNicePalette) - forbidden_colors_at(g, c, v);
  if (allowed.empty()) return false;
  c.assign(v, allowed.first());
  return true;
}

// One step of a staged extension: the smallest color for x that is proper
// against colored neighbors and keeps an odd color in the colored part of
// every colored even-degree neighbor not listed in `exempt`.
std::optional<Color> staged_choice(const Graph& g, const Coloring& c, Vertex x, std::initializer_list<Vertex> exempt,
                                   ColorSet extra_forbidden) {
  ColorSet allowed = ColorSet::palette(kNicePalette) - extra_forbidden;
  bool own_complete = true;
  ColorSet own;
  for (Vertex u : g.neighbors(x)) {
    if (!c.assigned(u)) {
      own_complete = false;
      continue;
    }
    allowed.erase(c[u]);
    own.toggle(c[u]);
    if (g.degree(u) % 2 == 1 || std::find(exempt.begin(), exempt.end(), u) != exempt.end()) continue;
    ColorSet rest;
    for (Vertex y : g.neighbors(u))
      if (y != x && c.assigned(y)) rest.toggle(c[y]);
    if (rest.size() == 1) allowed.erase(rest.first());
  }
  if (own_complete && g.degree(x) > 0 && own.empty()) return std::nullopt;
  if (allowed.empty()) return std::nullopt;
  return allowed.first();
}

ColorSet colored_parity(const Graph& g, const Coloring& c, Vertex v) {
  ColorSet out;
  for (Vertex u : g.neighbors(v))
    if (c.assigned(u)) out.toggle(c[u]);
  return out;
}

// Describes why an inherited coloring around the 5-vertex v is blocked:
// four colors on N(v) and five distinct exclusive odd colors at the v_i.
std::string blocked_distribution(const Graph& g, const Coloring& c, Vertex v) {
  ColorSet on_nbrs;
  for (Vertex u : g.neighbors(v)) on_nbrs.insert(c[u]);
  bool all_even = true, exclusive = true;
  ColorSet seen;
  for (Vertex u : g.neighbors(v)) {
    all_even = all_even && g.degree(u) % 2 == 0;
    ColorSet odd;
    for (Vertex y : g.neighbors(u))
      if (y != v) odd.toggle(c[y]);
    if (odd.size() != 1 || on_nbrs.contains(odd.first()) || seen.contains(odd.first())) exclusive = false;
    seen = seen | odd;
  }
  std::ostringstream os;
  os << "blocked at v=" << v << ": " << on_nbrs.size() << " colors on N(v)";
  os << (all_even ? ", all neighbors even" : ", some neighbor odd");
  os << (exclusive ? ", exclusive odd colors" : ", odd colors not exclusive");
  bool confirmed = on_nbrs.size() == 4 && all_even && exclusive;
  os << (confirmed ? " (expected blocked distribution confirmed)" : " (distribution differs)");
  return os.str();
}

std::optional<Coloring> verified(const Graph& g, Coloring c) {
  if (!c.total() || !is_odd_coloring(g, c).verdict) return std::nullopt;
  return c;
}

}  // namespace

std::optional<Coloring> apply_and_extend(const PlaneGraph& p, const Reduction& r, const Colorer& colorer,
                                         std::string* note) {
  const Graph& g = p.graph();
  const auto& s = r.site;
  switch (r.kind) {
    case ReductionKind::DeleteOdd13:
    case ReductionKind::FiveVertexTwoOddNbrs: {
      Vertex v = s[0];
      PlaneSurgery cut = delete_vertex_embedded(p, v);
      Coloring c = pull_back(p, cut.plane, cut.relabel, colorer);
      if (!assign_smallest_allowed(g, c, v)) return std::nullopt;
      return verified(g, std::move(c));
    }
    case ReductionKind::Degree2Bridge: {
      const Vertex v = s[0], x = s[1], y = s[2];
      PlaneSurgery cut = bridge_degree2_embedded(p, v);
      const Coloring reduced = colorer(cut.plane);
      if (!is_odd_coloring(cut.plane.graph(), reduced).verdict || reduced.palette() > kNicePalette)
        throw std::logic_error("reducer: recursive colorer returned an invalid coloring");
      Coloring c(p.order(), kNicePalette);
      for (Vertex z = 1; z <= p.order(); ++z)
        if (z != v) c.assign(z, reduced[cut.relabel[z]]);
      const Color a = c[x], b = c[y];
      // Odd colors at x and y in the reduced graph, preferring ones that
      // the extension leaves untouched.
      auto pick = [&](Vertex z, Color avoid) {
        ColorSet odd = odd_colors(cut.plane.graph(), reduced, cut.relabel[z]);
        ColorSet other = odd;
        other.erase(avoid);
        return other.empty() ? odd.first() : other.first();
      };
      ColorSet blocked;
      blocked.insert(a);
      blocked.insert(b);
      blocked.insert(pick(x, b));
      blocked.insert(pick(y, a));
      ColorSet allowed = ColorSet::palette(kNicePalette) - blocked;
      if (allowed.empty()) return std::nullopt;
      c.assign(v, allowed.first());
      if (note != nullptr && !g.adjacent(x, y)) *note = "edge " + std::to_string(x) + "-" + std::to_string(y) + " routed through the face of v";
      return verified(g, std::move(c));
    }
    case ReductionKind::Degree4Contract: {
      const Vertex v = s[0], w = s[1];
      PlaneSurgery cut = contract_edge_embedded(p, v, w);
      Coloring c = pull_back(p, cut.plane, cut.relabel, colorer, {v});
      if (!assign_smallest_allowed(g, c, v)) return std::nullopt;
      return verified(g, std::move(c));
    }
    case ReductionKind::C7Contract: {
      const Vertex v = s[0], a = s[1], b = s[2], cc = s[3];
      PlaneSurgery cut = delete_vertex_embedded(p, v);
      PlaneSurgery merged = identify_embedded(cut.plane, cut.relabel[a], cut.relabel[cc], cut.relabel[b]);
      Coloring c = pull_back(p, merged.plane, compose(cut.relabel, merged.relabel), colorer);
      if (!assign_smallest_allowed(g, c, v)) {
        if (note != nullptr) *note = blocked_distribution(g, c, v);
        return std::nullopt;
      }
      return verified(g, std::move(c));
    }
    case ReductionKind::C11Quad: {
      const Vertex v = s[0], qa = s[1], qb = s[2], qc = s[3], qd = s[4];
      const Vertex removed[] = {v, qa, qc};
      PlaneSurgery cut = delete_vertices_embedded(p, removed);
      PlaneSurgery merged = identify_embedded(cut.plane, cut.relabel[qb], cut.relabel[qd]);
      Coloring c = pull_back(p, merged.plane, compose(cut.relabel, merged.relabel), colorer);
      // v first, ignoring D for now and keeping C's future odd color alive.
      ColorSet lookahead;
      if (ColorSet rest = colored_parity(g, c, qc); rest.size() == 1) lookahead = rest;
      auto cv = staged_choice(g, c, v, {qd}, lookahead);
      if (!cv) {
        if (note != nullptr) *note = "no color left for v";
        return std::nullopt;
      }
      c.assign(v, *cv);
      auto cc = staged_choice(g, c, qc, {}, {});
      if (!cc) {
        if (note != nullptr) *note = "no color left for C";
        return std::nullopt;
      }
      c.assign(qc, *cc);
      auto ca = staged_choice(g, c, qa, {}, {});
      if (!ca) {
        if (note != nullptr) *note = "no color left for A";
        return std::nullopt;
      }
      c.assign(qa, *ca);
      return verified(g, std::move(c));
    }
  }
  return std::nullopt;
}

namespace {

class Recursion {
 public:
  explicit Recursion(const Color9Options& options) : options_(options) {}

  Coloring color_any(const PlaneGraph& p) {
    auto comps = components(p.graph());
    if (comps.size() == 1) return color_connected(p);
    Coloring out(p.order(), kNicePalette);
    for (const auto& comp : comps) {
      PlaneSurgery part = component_embedded(p, comp);
      Coloring sub = color_connected(part.plane);
      for (Vertex v : comp) out.assign(v, sub[part.relabel[v]]);
    }
    return out;
  }

  Coloring color_connected(const PlaneGraph& p) {
    const int n = p.order();
    if (p.size() == 0) {
      trace.push_back({"Base", {}, n, ""});
      Coloring c(n, kNicePalette);
      for (Vertex v = 1; v <= n; ++v) c.assign(v, 1);
      return c;
    }
    int attempts = 0;
    for (const Reduction& r : candidate_reductions(p)) {
      if (attempts++ >= options_.max_attempts) break;
      trace.push_back({to_string(r.kind), r.site, n, ""});
      std::size_t slot = trace.size() - 1;
      std::string note;
      auto c = apply_and_extend(p, r, [this](const PlaneGraph& q) { return color_any(q); }, &note);
      trace[slot].note = note;
      if (c) return *c;
      trace.push_back({"ExtensionFailed", r.site, n, note});
    }
    ++fallbacks;
    trace.push_back({"Fallback", {}, n, "no reduction extended; exact search at k=9"});
    SolveOptions so;
    so.node_budget = options_.fallback_budget;
    SolveResult s = find_odd_coloring(p.graph(), kNicePalette, so);
    if (s.status == SolveStatus::Found) return *s.witness;
    if (s.status == SolveStatus::Exhausted) throw CounterexampleFound(encode_graph6(p.graph()), s.nodes);
    throw std::runtime_error("color9: fallback search exceeded its node budget on " + encode_graph6(p.graph()));
  }

  std::vector<TraceStep> trace;
  int fallbacks = 0;

 private:
  Color9Options options_;
};

}  // namespace

Color9Result color9(const PlaneGraph& p, const Color9Options& options) {
  if (!is_connected(p.graph()) || p.order() == 0) throw GraphError("color9: input must be connected");
  if (!check_euler(p)) throw GraphError("color9: rotation system is not a plane embedding");
  Recursion rec(options);
  Coloring c = rec.color_connected(p);
  if (!c.total() || c.palette() > kNicePalette || !is_odd_coloring(p.graph(), c).verdict)
    throw std::logic_error("color9: produced coloring failed verification");
  return {std::move(c), std::move(rec.trace), rec.fallbacks};
}

}  // namespace oddcolor
