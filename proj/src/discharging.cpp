#include "oddcolor/discharging.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace oddcolor {

ChargeState initial_charges(const PlaneGraph& p, const FaceSet& fs) {
  if (!is_connected(p.graph())) throw GraphError("initial_charges: graph is disconnected");
  ChargeState s;
  s.vertex.assign(static_cast<std::size_t>(p.order()) + 1, 0);
  for (Vertex v = 1; v <= p.order(); ++v) {
    s.vertex[v] = 12LL * (p.graph().degree(v) - 6);
    s.total += s.vertex[v];
  }
  for (const Face& f : fs.faces()) {
    s.face.push_back(12LL * (2 * f.degree() - 6));
    s.total += s.face.back();
  }
  return s;
}

ChargeState initial_charges(const PlaneGraph& p) { return initial_charges(p, FaceSet(p)); }

std::string to_string(Rule r) {
  switch (r) {
    case Rule::R1: return "R1";
    case Rule::R2: return "R2";
    case Rule::R3: return "R3";
  }
  return "?";
}

namespace {

Vertex third_vertex(const Face& f, Vertex a, Vertex b) {
  for (Vertex x : f.walk)
    if (x != a && x != b) return x;
  return 0;
}

std::vector<Vertex> distinct_fives(const Graph& g, const Face& f) {
  std::vector<Vertex> out;
  for (Vertex x : f.walk)
    if (g.degree(x) == 5) out.push_back(x);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Discharge apply_rules(const PlaneGraph& p, const FaceSet& fs, const ChargeState& initial) {
  const Graph& g = p.graph();
  Discharge d;
  for (const Face& f : fs.faces()) {
    if (f.degree() < 4) continue;
    for (Vertex v : distinct_fives(g, f)) d.transfers.push_back({Rule::R1, true, f.id, v, 12, std::nullopt});
  }
  for (Vertex u = 1; u <= p.order(); ++u) {
    if (g.degree(u) < 8) continue;
    for (Vertex v : p.rotation(u)) {
      if (g.degree(v) != 5) continue;
      const Face& a = fs[fs.face_of(u, v)];
      const Face& b = fs[fs.face_of(v, u)];
      if (a.degree() != 3 || b.degree() != 3) continue;
      bool second_five = g.degree(third_vertex(a, u, v)) == 5 || g.degree(third_vertex(b, u, v)) == 5;
      d.transfers.push_back({Rule::R2, false, u, v, second_five ? 4 : 6, std::nullopt});
    }
  }
  for (const Face& f : fs.faces()) {
    if (f.degree() < 4) continue;
    if (f.degree() == 4 && distinct_fives(g, f).size() >= 2) continue;
    const auto& w = f.walk;
    for (std::size_t i = 0; i < w.size(); ++i) {
      Vertex u = w[i], x = w[(i + 1) % w.size()];
      if (g.degree(u) != 6 || g.degree(x) != 6) continue;
      int other = fs.face_of(x, u);
      if (other == f.id || fs[other].degree() != 3) continue;
      Vertex v = third_vertex(fs[other], u, x);
      if (g.degree(v) != 5) continue;
      d.transfers.push_back({Rule::R3, true, f.id, v, 6, Edge{std::min(u, x), std::max(u, x)}});
    }
  }
  d.state = initial;
  for (const Transfer& t : d.transfers) {
    if (t.from_face)
      d.state.face[static_cast<std::size_t>(t.source)] -= t.amount;
    else
      d.state.vertex[static_cast<std::size_t>(t.source)] -= t.amount;
    d.state.vertex[static_cast<std::size_t>(t.sink)] += t.amount;
  }
  d.state.total = 0;
  for (std::size_t v = 1; v < d.state.vertex.size(); ++v) d.state.total += d.state.vertex[v];
  for (long long c : d.state.face) d.state.total += c;
  return d;
}

Discharge apply_rules(const PlaneGraph& p, const ChargeState& initial) { return apply_rules(p, FaceSet(p), initial); }

int FiveVertexFan::convenient_count() const {
  return static_cast<int>(std::count_if(slots.begin(), slots.end(), [](const ConvenientSlot& s) { return s.convenient; }));
}

bool NegativeFive::fan_shape_holds() const {
  return only_triangles && big_neighbors <= 2 && (big_neighbors != 2 || shared_five);
}

AuditResult audit(const PlaneGraph& p) {
  const Graph& g = p.graph();
  const int n = p.order();
  AuditResult a{FaceSet(p), {}, {}, {}};
  a.initial = initial_charges(p, a.faces);
  a.discharge = apply_rules(p, a.faces, a.initial);
  StructureReport& r = a.report;

  r.min_degree_five = n > 0 && g.min_degree() == 5;
  if (!r.min_degree_five)
    for (Vertex v = 1; v <= n && !r.min_degree_witness; ++v)
      if (g.degree(v) == g.min_degree()) r.min_degree_witness = v;

  r.five_odd_neighbors_ok = true;
  for (Vertex v = 1; v <= n; ++v) {
    if (g.degree(v) != 5) continue;
    int odd = 0;
    for (Vertex u : g.neighbors(v)) odd += g.degree(u) % 2;
    if (odd >= 2) {
      r.five_odd_neighbors_ok = false;
      r.five_odd_witness = v;
      break;
    }
  }

  for (const Face& f : a.faces.faces()) {
    FaceBound b{f.id, f.degree(), 0, 2 * f.degree() / 3};
    for (Vertex x : f.walk) b.fives += g.degree(x) == 5;
    if (b.fives > b.bound) r.face_bound_violations.push_back(b);
  }
  r.face_bounds_ok = r.face_bound_violations.empty();

  const ChargeState& after = a.discharge.state;
  for (Vertex v = 1; v <= n; ++v)
    if (g.degree(v) >= 8 && after.vertex[v] < 0) r.negative_big_vertices.emplace_back(v, after.vertex[v]);
  for (const Face& f : a.faces.faces())
    if (f.degree() >= 4 && after.face[static_cast<std::size_t>(f.id)] < 0)
      r.negative_faces.emplace_back(f.id, after.face[static_cast<std::size_t>(f.id)]);

  for (Vertex v = 1; v <= n; ++v) {
    if (g.degree(v) != 5) continue;
    const auto& ring = p.rotation(v);
    bool triangles = true;
    for (Vertex w : ring) triangles = triangles && a.faces[a.faces.face_of(v, w)].degree() == 3;
    std::vector<Vertex> big;
    for (Vertex w : ring)
      if (g.degree(w) >= 8) big.push_back(w);

    if (after.vertex[v] < 0) {
      NegativeFive nf{v, after.vertex[v], triangles, static_cast<int>(big.size()), false};
      if (big.size() == 2) {
        for (Vertex x : g.common_neighbors(big[0], big[1]))
          if (x != v && g.degree(x) == 5 && g.adjacent(x, v)) nf.shared_five = true;
      }
      r.negative_fives.push_back(nf);
    }

    if (!triangles) continue;
    FiveVertexFan fan;
    fan.v = v;
    fan.ring = ring;
    fan.all_six = std::all_of(ring.begin(), ring.end(), [&](Vertex w) { return g.degree(w) == 6; });
    fan.exactly_one_big = big.size() == 1;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      Vertex x = ring[i], y = ring[(i + 1) % ring.size()];
      ConvenientSlot s;
      s.index = static_cast<int>(i) + 1;
      s.face = a.faces.face_of(x, y);
      s.face_degree = a.faces[s.face].degree();
      s.convenient = s.face_degree >= 4 && g.degree(x) == 6 && g.degree(y) == 6 &&
                     g.common_neighbors(x, y) == std::vector<Vertex>{v};
      fan.slots.push_back(s);
    }
    r.fans.push_back(std::move(fan));
  }
  return a;
}

std::string audit_json(const PlaneGraph& p, const AuditResult& a) {
  using nlohmann::ordered_json;
  const Graph& g = p.graph();
  const StructureReport& r = a.report;
  ordered_json j;
  j["n"] = p.order();
  j["m"] = p.size();
  ordered_json faces = ordered_json::array();
  for (const Face& f : a.faces.faces()) faces.push_back({{"id", f.id}, {"degree", f.degree()}, {"walk", f.walk}});
  j["faces"] = faces;

  auto table = [&](const ChargeState& s) {
    ordered_json t;
    ordered_json vs = ordered_json::object();
    for (Vertex v = 1; v <= p.order(); ++v) vs[std::to_string(v)] = s.vertex[v];
    t["vertex"] = vs;
    t["face"] = s.face;
    t["total"] = s.total;
    return t;
  };
  j["scale"] = 12;
  j["initial"] = table(a.initial);
  j["final"] = table(a.discharge.state);

  ordered_json log = ordered_json::array();
  for (const Transfer& t : a.discharge.transfers) {
    ordered_json e;
    e["rule"] = to_string(t.rule);
    e["source"] = {{t.from_face ? "face" : "vertex", t.source}};
    e["sink"] = t.sink;
    e["amount"] = t.amount;
    if (t.through) e["through"] = {t.through->first, t.through->second};
    log.push_back(e);
  }
  j["transfers"] = log;

  ordered_json pred;
  pred["minDegreeFive"] = r.min_degree_five;
  if (r.min_degree_witness) pred["minDegreeWitness"] = {{"vertex", *r.min_degree_witness}, {"degree", g.degree(*r.min_degree_witness)}};
  pred["fiveVerticesAtMostOneOddNeighbor"] = r.five_odd_neighbors_ok;
  if (r.five_odd_witness) pred["fiveOddWitness"] = *r.five_odd_witness;
  pred["faceFiveBound"] = r.face_bounds_ok;
  ordered_json viol = ordered_json::array();
  for (const FaceBound& b : r.face_bound_violations)
    viol.push_back({{"face", b.face}, {"degree", b.degree}, {"fives", b.fives}, {"bound", b.bound}});
  pred["faceFiveBoundViolations"] = viol;
  j["predicates"] = pred;

  ordered_json neg;
  ordered_json big = ordered_json::array();
  for (auto [v, c] : r.negative_big_vertices) big.push_back({{"vertex", v}, {"charge", c}});
  ordered_json nf = ordered_json::array();
  for (auto [f, c] : r.negative_faces) nf.push_back({{"face", f}, {"charge", c}});
  ordered_json fives = ordered_json::array();
  for (const NegativeFive& x : r.negative_fives)
    fives.push_back({{"vertex", x.v},
                     {"charge", x.charge},
                     {"onlyTriangles", x.only_triangles},
                     {"bigNeighbors", x.big_neighbors},
                     {"sharedFive", x.shared_five},
                     {"fanShapeHolds", x.fan_shape_holds()}});
  neg["bigVertices"] = big;
  neg["faces"] = nf;
  neg["fiveVertices"] = fives;
  j["negativeAfterDischarge"] = neg;
  j["hypotheses"] = r.hypotheses();
  j["conditionalOk"] = r.conditional_ok();

  ordered_json fans = ordered_json::array();
  for (const FiveVertexFan& fan : r.fans) {
    ordered_json slots = ordered_json::array();
    for (const ConvenientSlot& s : fan.slots)
      slots.push_back({{"i", s.index}, {"face", s.face}, {"faceDegree", s.face_degree}, {"convenient", s.convenient}});
    fans.push_back({{"vertex", fan.v},
                    {"ring", fan.ring},
                    {"allSix", fan.all_six},
                    {"exactlyOneBig", fan.exactly_one_big},
                    {"convenientCount", fan.convenient_count()},
                    {"slots", slots}});
  }
  j["convenientFaces"] = fans;
  return j.dump(2) + "\n";
}

}  // namespace oddcolor
